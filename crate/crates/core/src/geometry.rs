//! Defining equations of the bundle X ⊂ P³ₓ × P³ᵧ, the subvarieties V_τ and
//! the liftability test through the cyclic covers T_τ → P³ₓ.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{is_cube, P3Point};
use crate::error::{Error, Result};

/// One of the three ways of splitting {0, 1, 2, 3} into two pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pairing {
    /// {0,1} | {2,3}
    P1,
    /// {0,2} | {1,3}
    P2,
    /// {0,3} | {1,2}
    P3,
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [Pairing::P1, Pairing::P2, Pairing::P3];

    pub fn index(self) -> u8 {
        match self {
            Pairing::P1 => 1,
            Pairing::P2 => 2,
            Pairing::P3 => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Pairing::P1),
            2 => Some(Pairing::P2),
            3 => Some(Pairing::P3),
            _ => None,
        }
    }

    /// The pairing that puts coordinates `i` and `j` (distinct, < 4) together.
    pub fn containing(i: usize, j: usize) -> Self {
        assert!(i != j && i < 4 && j < 4, "bad index pair ({i}, {j})");
        let other = if i == 0 {
            j
        } else if j == 0 {
            i
        } else {
            6 - i - j
        };
        match other {
            1 => Pairing::P1,
            2 => Pairing::P2,
            _ => Pairing::P3,
        }
    }

    /// The two index pairs; the first always contains 0.
    pub fn pairs(self) -> [[usize; 2]; 2] {
        match self {
            Pairing::P1 => [[0, 1], [2, 3]],
            Pairing::P2 => [[0, 2], [1, 3]],
            Pairing::P3 => [[0, 3], [1, 2]],
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.pairs();
        write!(f, "{{{a},{b}}}|{{{c},{d}}}")
    }
}

/// A rational point (x, y) of X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BundlePoint {
    x: P3Point,
    y: P3Point,
}

impl BundlePoint {
    pub fn new(x: P3Point, y: P3Point) -> Result<Self> {
        if on_x(&x, &y) {
            Ok(Self { x, y })
        } else {
            Err(Error::NotOnVariety)
        }
    }

    pub(crate) fn new_unchecked(x: P3Point, y: P3Point) -> Self {
        debug_assert!(on_x(&x, &y));
        Self { x, y }
    }

    pub fn x(&self) -> &P3Point {
        &self.x
    }

    pub fn y(&self) -> &P3Point {
        &self.y
    }
}

impl fmt::Display for BundlePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.x, self.y)
    }
}

fn term(x: i64, y: i64) -> Option<i128> {
    let y = y as i128;
    y.checked_mul(y)?.checked_mul(y)?.checked_mul(x as i128)
}

fn big_term(x: i64, y: i64) -> BigInt {
    let y = BigInt::from(y);
    &y * &y * &y * BigInt::from(x)
}

/// Σ over `indices` of xᵢyᵢ³ is zero.
fn vanishes(x: &[i64; 4], y: &[i64; 4], indices: &[usize]) -> bool {
    let small = indices
        .iter()
        .try_fold(0i128, |acc, &i| acc.checked_add(term(x[i], y[i])?));
    match small {
        Some(s) => s == 0,
        None => indices
            .iter()
            .map(|&i| big_term(x[i], y[i]))
            .sum::<BigInt>()
            .is_zero(),
    }
}

/// x₀y₀³ + x₁y₁³ + x₂y₂³ + x₃y₃³ = 0.
pub fn on_x(x: &P3Point, y: &P3Point) -> bool {
    vanishes(x.coords(), y.coords(), &[0, 1, 2, 3])
}

/// Membership in V_τ: both pair sums of the defining equation vanish.
pub fn in_v(p: &BundlePoint, tau: Pairing) -> bool {
    tau.pairs()
        .iter()
        .all(|pair| vanishes(p.x.coords(), p.y.coords(), pair))
}

/// Whether the fiber of T_τ = {s³x_{τ0}x_{τ1} = t³x_{τ2}x_{τ3}} over `x` has a
/// rational point.
pub fn liftable(x: &P3Point, tau: Pairing) -> bool {
    let c = x.coords();
    let [[i, j], [k, l]] = tau.pairs();
    let a = c[i] as i128 * c[j] as i128;
    let b = c[k] as i128 * c[l] as i128;
    a == 0 || b == 0 || is_cube(a, b).expect("nonzero operands")
}

/// The π_x-fiber over `x` is singular exactly when x lies on a coordinate hyperplane.
pub fn over_singular_fiber(x: &P3Point) -> bool {
    x.has_zero_coordinate()
}
