//! Exact integer and rational arithmetic: canonical projective points,
//! naive heights, cube roots and classes in ℚ*/(ℚ*)³.

mod factor;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use factor::{factorize, is_prime};

/// A point of Pⁿ(ℚ) in canonical form: primitive integer coordinates whose
/// first nonzero entry is positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint<const N: usize> {
    coords: [i64; N],
}

pub type P1Point = ProjectivePoint<2>;
pub type P3Point = ProjectivePoint<4>;

impl<const N: usize> ProjectivePoint<N> {
    /// Canonical representative of the point with homogeneous coordinates `raw`.
    pub fn new(raw: [i64; N]) -> Result<Self> {
        normalize(raw)
    }

    /// Wraps coordinates that are already canonical. Only checked in debug builds.
    pub(crate) fn from_canonical(coords: [i64; N]) -> Self {
        debug_assert!(is_canonical(&coords), "{coords:?} is not canonical");
        Self { coords }
    }

    pub fn coords(&self) -> &[i64; N] {
        &self.coords
    }

    pub fn height(&self) -> u64 {
        naive_height(self)
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.coords.contains(&0)
    }
}

impl<const N: usize> fmt::Debug for ProjectivePoint<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl<const N: usize> fmt::Display for ProjectivePoint<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses the `a:b:c:d` notation and normalizes.
impl<const N: usize> FromStr for ProjectivePoint<N> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        if parts.len() != N {
            return Err(Error::InvalidArgument(format!(
                "expected {N} colon-separated coordinates, got {:?}",
                s
            )));
        }
        let mut raw = [0i64; N];
        for (slot, part) in raw.iter_mut().zip(&parts) {
            *slot = part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad integer coordinate {part:?}")))?;
        }
        normalize(raw)
    }
}

pub(crate) fn is_canonical<const N: usize>(coords: &[i64; N]) -> bool {
    let Some(first) = coords.iter().find(|&&c| c != 0) else {
        return false;
    };
    *first > 0 && coords.iter().fold(0u64, |g, &c| g.gcd(&c.unsigned_abs())) == 1
}

pub fn normalize<const N: usize>(raw: [i64; N]) -> Result<ProjectivePoint<N>> {
    let g = raw.iter().fold(0u64, |g, &c| g.gcd(&c.unsigned_abs()));
    if g == 0 {
        return Err(Error::InvalidPoint);
    }
    let first = *raw.iter().find(|&&c| c != 0).expect("nonzero by gcd");
    let negate = first < 0;
    let mut coords = [0i64; N];
    for (out, &c) in coords.iter_mut().zip(&raw) {
        let q = c as i128 / g as i128;
        let q = if negate { -q } else { q };
        *out = i64::try_from(q).map_err(|_| Error::Overflow("normalize"))?;
    }
    Ok(ProjectivePoint { coords })
}

pub fn naive_height<const N: usize>(p: &ProjectivePoint<N>) -> u64 {
    p.coords.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
}

/// H(x)³·H(y), the height attached to L = 3h₁ + h₂.
pub fn anticanonical_height(x: &P3Point, y: &P3Point) -> Result<u128> {
    let hx = naive_height(x) as u128;
    hx.checked_mul(hx)
        .and_then(|v| v.checked_mul(hx))
        .and_then(|v| v.checked_mul(naive_height(y) as u128))
        .ok_or(Error::Overflow("anticanonical_height"))
}

fn cube_root_u128(n: u128) -> u128 {
    let mut r = (n as f64).cbrt().round() as u128;
    let cube = |r: u128| r.checked_mul(r).and_then(|s| s.checked_mul(r));
    while cube(r).is_none_or(|c| c > n) {
        r -= 1;
    }
    while cube(r + 1).is_some_and(|c| c <= n) {
        r += 1;
    }
    r
}

/// The integer `m` with `m³ = n`, if there is one.
pub fn exact_cube_root(n: i128) -> Option<i128> {
    let r = cube_root_u128(n.unsigned_abs());
    if r * r * r != n.unsigned_abs() {
        return None;
    }
    let r = r as i128;
    Some(if n < 0 { -r } else { r })
}

/// Whether `numerator / denominator` is the cube of a rational number.
pub fn is_cube(numerator: i128, denominator: i128) -> Result<bool> {
    if numerator == 0 || denominator == 0 {
        return Err(Error::InvalidArgument(
            "is_cube of zero or with zero denominator".into(),
        ));
    }
    let (n, d) = (numerator.unsigned_abs(), denominator.unsigned_abs());
    let g = n.gcd(&d);
    let (n, d) = (n / g, d / g);
    let is_cube = |v: u128| {
        let r = cube_root_u128(v);
        r * r * r == v
    };
    Ok(is_cube(n) && is_cube(d))
}

/// Class of a nonzero rational in ℚ*/(ℚ*)³, stored as its cube-free
/// factorization with every exponent in {1, 2}.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeClass {
    exponents: BTreeMap<u64, u8>,
}

impl CubeClass {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &BTreeMap<u64, u8> {
        &self.exponents
    }

    /// Exponent of `p` reduced mod 3.
    pub fn exponent(&self, p: u64) -> u8 {
        self.exponents.get(&p).copied().unwrap_or(0)
    }

    fn add_exponent(&mut self, p: u64, e: u8) {
        let slot = self.exponents.entry(p).or_insert(0);
        *slot = (*slot + e) % 3;
        if *slot == 0 {
            self.exponents.remove(&p);
        }
    }

    pub fn mul(&self, other: &CubeClass) -> CubeClass {
        let mut out = self.clone();
        for (&p, &e) in &other.exponents {
            out.add_exponent(p, e);
        }
        out
    }

    pub fn pow(&self, k: u32) -> CubeClass {
        let k = (k % 3) as u8;
        let mut out = CubeClass::trivial();
        for (&p, &e) in &self.exponents {
            out.add_exponent(p, (e * k) % 3);
        }
        out
    }

    pub fn inverse(&self) -> CubeClass {
        self.pow(2)
    }
}

impl fmt::Debug for CubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.exponents.iter()).finish()
    }
}

pub fn cube_class(numerator: i128, denominator: i128) -> Result<CubeClass> {
    if numerator == 0 || denominator == 0 {
        return Err(Error::InvalidArgument(
            "cube_class of zero or with zero denominator".into(),
        ));
    }
    let (n, d) = (numerator.unsigned_abs(), denominator.unsigned_abs());
    let g = n.gcd(&d);
    let to_u64 = |v: u128| u64::try_from(v).map_err(|_| Error::Overflow("cube_class"));
    let (n, d) = (to_u64(n / g)?, to_u64(d / g)?);
    let mut class = CubeClass::trivial();
    for (p, e) in factorize(n) {
        class.add_exponent(p, (e % 3) as u8);
    }
    for (p, e) in factorize(d) {
        class.add_exponent(p, ((3 - e % 3) % 3) as u8);
    }
    Ok(class)
}
