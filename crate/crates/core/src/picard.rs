//! Picard rank of a smooth diagonal cubic surface a₀y₀³ + a₁y₁³ + a₂y₂³ + a₃y₃³ = 0
//! over ℚ, computed two ways: Segre's cube-ratio criterion, and the rank of
//! the Galois-invariant part of the lattice spanned by the 27 lines.
//!
//! With uᵢ the real cube root of aᵢ/a₀ and ω a primitive cube root of unity,
//! the line labelled `(pairing {0,i}|{j,k}, m, n)` is
//!
//! ```text
//! y₀ + ωᵐ·uᵢ·yᵢ = 0,   uⱼ·yⱼ + ωⁿ·u_k·y_k = 0.
//! ```
//!
//! The splitting field is ℚ(ω, u₁, u₂, u₃). A Galois element is determined by
//! its action on ω (fixed or conjugated) and a twist (k₁, k₂, k₃) with
//! uᵢ ↦ ωᵏⁱuᵢ; the admissible twists are those killing every multiplicative
//! relation among the cube classes of the aᵢ/a₀.

use std::fmt;

use num_rational::BigRational;

use crate::arith::{cube_class, is_cube, CubeClass, P3Point};
use crate::error::{Error, Result};
use crate::geometry::Pairing;
use crate::linalg;

pub const LINE_COUNT: usize = 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalCubic {
    coefficients: [i64; 4],
}

impl DiagonalCubic {
    pub fn new(coefficients: [i64; 4]) -> Result<Self> {
        if coefficients.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "diagonal cubic {coefficients:?} has a zero coefficient and is singular"
            )));
        }
        Ok(Self { coefficients })
    }

    /// The π_x-fiber over `x`.
    pub fn fiber_over(x: &P3Point) -> Result<Self> {
        Self::new(*x.coords())
    }

    pub fn coefficients(&self) -> &[i64; 4] {
        &self.coefficients
    }

    /// (a_{τ0}·a_{τ1}, a_{τ2}·a_{τ3}) for the pairing τ.
    pub fn pair_products(&self, tau: Pairing) -> (i128, i128) {
        let a = &self.coefficients;
        let [[i, j], [k, l]] = tau.pairs();
        (a[i] as i128 * a[j] as i128, a[k] as i128 * a[l] as i128)
    }
}

/// Segre: the Picard rank is 1 iff no pair-product ratio is a rational cube.
pub fn segre_rank_one(s: &DiagonalCubic) -> bool {
    Pairing::ALL.iter().all(|&tau| {
        let (num, den) = s.pair_products(tau);
        !is_cube(num, den).expect("coefficients are nonzero")
    })
}

/// Label of one of the 27 lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineLabel {
    pub pairing: Pairing,
    pub m: u8,
    pub n: u8,
}

impl LineLabel {
    pub fn new(pairing: Pairing, m: u8, n: u8) -> Self {
        Self {
            pairing,
            m: m % 3,
            n: n % 3,
        }
    }

    /// Position in [`all_lines`].
    pub fn index(&self) -> usize {
        9 * (self.pairing.index() as usize - 1) + 3 * self.m as usize + self.n as usize
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}({},{})", self.pairing.index(), self.m, self.n)
    }
}

pub fn all_lines() -> Vec<LineLabel> {
    Pairing::ALL
        .iter()
        .flat_map(|&p| (0..3).flat_map(move |m| (0..3).map(move |n| LineLabel::new(p, m, n))))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisElement {
    /// Whether ω ↦ ω².
    pub conj: bool,
    /// uᵢ ↦ ω^{twist[i-1]}·uᵢ.
    pub twist: [u8; 3],
}

impl GaloisElement {
    pub const IDENTITY: GaloisElement = GaloisElement {
        conj: false,
        twist: [0, 0, 0],
    };

    fn sign(&self, v: u8) -> u8 {
        if self.conj {
            (3 - v % 3) % 3
        } else {
            v % 3
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GaloisElement) -> GaloisElement {
        let mut twist = [0; 3];
        for (t, (&a, &b)) in twist.iter_mut().zip(self.twist.iter().zip(&other.twist)) {
            *t = (self.sign(b) + a) % 3;
        }
        GaloisElement {
            conj: self.conj ^ other.conj,
            twist,
        }
    }
}

/// Multiplicative relations among the cube classes of a₁/a₀, a₂/a₀, a₃/a₀:
/// all e ∈ (ℤ/3)³ with ∏ (aᵢ/a₀)^{eᵢ} a cube.
pub fn kummer_relations(s: &DiagonalCubic) -> Vec<[u8; 3]> {
    let a = s.coefficients();
    let classes: Vec<CubeClass> = (1..4)
        .map(|i| cube_class(a[i] as i128, a[0] as i128).expect("coefficients are nonzero"))
        .collect();
    exponent_vectors()
        .filter(|e| {
            classes
                .iter()
                .zip(e)
                .fold(CubeClass::trivial(), |acc, (c, &k)| {
                    acc.mul(&c.pow(k as u32))
                })
                .is_trivial()
        })
        .collect()
}

fn exponent_vectors() -> impl Iterator<Item = [u8; 3]> {
    (0..27u8).map(|v| [v / 9, (v / 3) % 3, v % 3])
}

/// Gal(ℚ(ω, u₁, u₂, u₃)/ℚ) as a list of elements, identity first. Its order is 2·3ᵈ
/// with d the rank of the subgroup of ℚ*/(ℚ*)³ generated by the aᵢ/a₀.
pub fn galois_group(s: &DiagonalCubic) -> Vec<GaloisElement> {
    let relations = kummer_relations(s);
    let twists: Vec<[u8; 3]> = exponent_vectors()
        .filter(|k| {
            relations
                .iter()
                .all(|e| e.iter().zip(k).map(|(&e, &k)| e * k).sum::<u8>() % 3 == 0)
        })
        .collect();
    [false, true]
        .iter()
        .flat_map(|&conj| {
            twists
                .iter()
                .map(move |&twist| GaloisElement { conj, twist })
        })
        .collect()
}

pub fn line_action(g: &GaloisElement, l: &LineLabel) -> LineLabel {
    let [k1, k2, k3] = g.twist;
    let (dm, dn) = match l.pairing {
        Pairing::P1 => (k1, 3 + k3 - k2),
        Pairing::P2 => (k2, 3 + k3 - k1),
        Pairing::P3 => (k3, 3 + k2 - k1),
    };
    LineLabel::new(l.pairing, g.sign(l.m) + dm, g.sign(l.n) + dn)
}

/// Intersection number of two lines on the cubic surface.
pub fn incidence(l1: &LineLabel, l2: &LineLabel) -> i8 {
    if l1 == l2 {
        return -1;
    }
    let (a, b) = if l1.pairing <= l2.pairing {
        (l1, l2)
    } else {
        (l2, l1)
    };
    let meets = match (a.pairing, b.pairing) {
        (p, q) if p == q => a.m == b.m || a.n == b.n,
        (Pairing::P1, Pairing::P2) => (a.m + b.n) % 3 == (b.m + a.n) % 3,
        (Pairing::P1, Pairing::P3) => (a.m + a.n + b.n) % 3 == b.m,
        (Pairing::P2, Pairing::P3) => (a.m + a.n) % 3 == (b.m + b.n) % 3,
        _ => unreachable!("pairings are ordered"),
    };
    i8::from(meets)
}

/// The 27 × 27 intersection matrix in [`all_lines`] order.
pub fn incidence_matrix() -> Vec<Vec<i8>> {
    let lines = all_lines();
    lines
        .iter()
        .map(|a| lines.iter().map(|b| incidence(a, b)).collect())
        .collect()
}

/// Orbits of the Galois group on the lines, each sorted, ordered by smallest member.
pub fn line_orbits(group: &[GaloisElement]) -> Vec<Vec<LineLabel>> {
    let lines = all_lines();
    let mut seen = [false; LINE_COUNT];
    let mut orbits = Vec::new();
    for l in &lines {
        if seen[l.index()] {
            continue;
        }
        let mut orbit: Vec<LineLabel> = group.iter().map(|g| line_action(g, l)).collect();
        orbit.sort();
        orbit.dedup();
        for o in &orbit {
            seen[o.index()] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardReport {
    pub rank_over_q: u8,
    pub segre_rank_one: bool,
    /// Orbit sizes in descending order.
    pub orbit_sizes: Vec<usize>,
    pub group_order: usize,
    pub agreement: bool,
}

/// Rank of the Gram matrix of the Galois orbit sums of the lines.
pub fn picard_rank(s: &DiagonalCubic) -> PicardReport {
    let group = galois_group(s);
    let orbits = line_orbits(&group);
    let gram: Vec<Vec<BigRational>> = orbits
        .iter()
        .map(|o| {
            orbits
                .iter()
                .map(|p| {
                    let v: i64 = o
                        .iter()
                        .flat_map(|a| p.iter().map(move |b| i64::from(incidence(a, b))))
                        .sum();
                    BigRational::from_integer(v.into())
                })
                .collect()
        })
        .collect();
    let rank_over_q = linalg::rank(gram) as u8;
    let segre = segre_rank_one(s);
    let mut orbit_sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));
    PicardReport {
        rank_over_q,
        segre_rank_one: segre,
        orbit_sizes,
        group_order: group.len(),
        agreement: segre == (rank_over_q == 1),
    }
}
