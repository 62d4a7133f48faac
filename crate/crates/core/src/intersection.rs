//! Intersection calculus on P³ × P³ and on the bundle X of class h₁ + 3h₂,
//! together with the tabulated a/b-invariants of the subvarieties that
//! matter for the exceptional set.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Dimension of X = {Σ xᵢyᵢ³ = 0} ⊂ P³ × P³.
pub const DIM_X: usize = 5;

/// Element of ℚ[h₁, h₂]/(h₁⁴, h₂⁴), the Chow ring of P³ × P³ with rational
/// coefficients. `coeffs[i][j]` is the coefficient of h₁ⁱh₂ʲ.
#[derive(Clone, PartialEq, Eq)]
pub struct DivisorClass {
    coeffs: [[BigRational; 4]; 4],
}

impl DivisorClass {
    pub fn zero() -> Self {
        Self {
            coeffs: Default::default(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `c·h₁ⁱh₂ʲ`; zero whenever `i ≥ 4` or `j ≥ 4`.
    pub fn monomial(i: usize, j: usize, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        if i < 4 && j < 4 {
            out.coeffs[i][j] = BigRational::from_integer(c.into());
        }
        out
    }

    pub fn h1() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn h2() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `a·h₁ + b·h₂`.
    pub fn linear(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        &Self::monomial(1, 0, a) + &Self::monomial(0, 1, b)
    }

    /// `a·h₁² + b·h₁h₂ + c·h₂²`.
    pub fn quadratic(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        &(&Self::monomial(2, 0, a) + &Self::monomial(1, 1, b)) + &Self::monomial(0, 2, c)
    }

    /// L = −K_X = 3h₁ + h₂.
    pub fn anticanonical() -> Self {
        Self::linear(3, 1)
    }

    /// Class of X itself in P³ × P³.
    pub fn of_x() -> Self {
        Self::linear(1, 3)
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigRational {
        if i < 4 && j < 4 {
            self.coeffs[i][j].clone()
        } else {
            BigRational::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms().next().is_none()
    }

    /// Nonzero terms as `(i, j, coefficient)`, highest power of h₁ first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        (0..4)
            .rev()
            .flat_map(move |i| (0..4).map(move |j| (i, j, &self.coeffs[i][j])))
            .filter(|(_, _, c)| !c.is_zero())
    }

    /// Codimension of a nonzero homogeneous class; `None` for zero or mixed classes.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms().map(|(i, j, _)| i + j);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = self.clone();
        out.coeffs.iter_mut().flatten().for_each(|c| *c *= k);
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Default for DivisorClass {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.coeffs[i][j] += c;
        }
        out
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.coeffs[i][j] -= c;
        }
        out
    }
}

impl Mul for &DivisorClass {
    type Output = DivisorClass;

    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        let mut out = DivisorClass::zero();
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                if i + k < 4 && j + l < 4 {
                    out.coeffs[i + k][j + l] += a * b;
                }
            }
        }
        out
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let c = c.abs();
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let var = |name: &str, e: usize| match e {
                        0 => String::new(),
                        1 => name.to_string(),
                        e => format!("{name}^{e}"),
                    };
                    format!("{}{}", var("h1", i), var("h2", j))
                }
            };
            if mono.is_empty() || !c.is_one() {
                write!(f, "{c}")?;
            }
            f.write_str(&mono)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn multiply(classes: &[DivisorClass]) -> DivisorClass {
    classes.iter().fold(DivisorClass::one(), |acc, c| &acc * c)
}

/// Top intersection on P³ × P³: the coefficient of h₁³h₂³.
pub fn ambient_degree(c: &DivisorClass) -> BigRational {
    c.coefficient(3, 3)
}

/// Intersection number on X of homogeneous classes whose codimensions sum
/// to 5. A zero class makes the product zero and is accepted at any degree.
pub fn intersect_on_x(classes: &[DivisorClass]) -> Result<BigRational> {
    if classes.iter().any(DivisorClass::is_zero) {
        return Ok(BigRational::zero());
    }
    let mut total = 0;
    for c in classes {
        match c.degree() {
            Some(d) => total += d,
            None => {
                return Err(Error::DegreeMismatch {
                    expected: DIM_X,
                    found: format!("inhomogeneous class {c}"),
                })
            }
        }
    }
    if total != DIM_X {
        return Err(Error::DegreeMismatch {
            expected: DIM_X,
            found: total.to_string(),
        });
    }
    Ok(ambient_degree(
        &(&multiply(classes) * &DivisorClass::of_x()),
    ))
}

/// a-value of a rational curve of bidegree `(h1_degree, h2_degree)` against L,
/// i.e. 2 / (3·h1_degree + h2_degree).
pub fn curve_a_value(h1_degree: u32, h2_degree: u32) -> Result<Rational64> {
    let l_degree = 3 * i64::from(h1_degree) + i64::from(h2_degree);
    if l_degree == 0 {
        return Err(Error::InvalidArgument("curve of bidegree (0, 0)".into()));
    }
    Ok(Rational64::new(2, l_degree))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubvarietyKind {
    WholeSpace,
    /// π_x-fiber over a point with no zero coordinate.
    SmoothPiFiber,
    /// π_x-fiber over a point on exactly one coordinate hyperplane.
    ConeFiber,
    /// Component of a π_x-fiber over a point on two or more coordinate hyperplanes.
    PlaneComponentFiber,
    /// π_y-fiber, a plane.
    PiYFiber,
    LineInFiber,
    ConicInFiber,
    PreimageOfLine,
    PreimageOfPlane,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubvarietyDescriptor {
    pub kind: SubvarietyKind,
    pub rank_over_ground_field: Option<u8>,
}

impl SubvarietyDescriptor {
    pub fn new(kind: SubvarietyKind) -> Self {
        Self {
            kind,
            rank_over_ground_field: None,
        }
    }

    pub fn smooth_fiber(rank: u8) -> Self {
        Self {
            kind: SubvarietyKind::SmoothPiFiber,
            rank_over_ground_field: Some(rank),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjointRigidity {
    Rigid,
    NotRigid,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub a_value: Rational64,
    pub adjoint_rigid: AdjointRigidity,
    /// `None` where only the a-value and rigidity are known.
    pub b_value: Option<u32>,
}

pub fn lookup_invariants(d: &SubvarietyDescriptor) -> Result<InvariantReport> {
    use AdjointRigidity::*;
    use SubvarietyKind::*;
    match (d.kind, d.rank_over_ground_field) {
        (SmoothPiFiber, Some(r)) if (1..=7).contains(&r) => {}
        (SmoothPiFiber, _) => {
            return Err(Error::InvalidArgument(
                "smooth fiber needs a Picard rank in 1..=7".into(),
            ))
        }
        (_, Some(_)) => {
            return Err(Error::InvalidArgument(format!(
                "{:?} does not carry a Picard rank",
                d.kind
            )))
        }
        (_, None) => {}
    }
    let report = |a: i64, adjoint_rigid, b_value| InvariantReport {
        a_value: Rational64::from_integer(a),
        adjoint_rigid,
        b_value,
    };
    Ok(match d.kind {
        WholeSpace => report(1, Rigid, Some(2)),
        SmoothPiFiber => report(1, Rigid, d.rank_over_ground_field.map(u32::from)),
        ConeFiber => report(2, NotRigid, None),
        PlaneComponentFiber => report(3, Rigid, None),
        PiYFiber => report(1, Rigid, Some(1)),
        LineInFiber => report(2, Rigid, Some(1)),
        ConicInFiber => report(1, Rigid, Some(1)),
        PreimageOfLine | PreimageOfPlane => report(1, NotRigid, None),
    })
}

/// Outcome of checking one parametrized intersection identity at random points.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub samples: usize,
    /// Parameter tuples where the intersection number and the closed form differ.
    pub failures: Vec<(Vec<i64>, BigRational, BigRational)>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_identity<R: Rng + ?Sized>(
    rng: &mut R,
    name: &'static str,
    params: usize,
    samples: usize,
    range: i64,
    lhs: impl Fn(&[i64]) -> Result<BigRational>,
    rhs: impl Fn(&[i64]) -> i64,
) -> Result<IdentityCheck> {
    let mut failures = Vec::new();
    for _ in 0..samples {
        let p: Vec<i64> = (0..params)
            .map(|_| rng.random_range(-range..=range))
            .collect();
        let got = lhs(&p)?;
        let want = BigRational::from_integer(rhs(&p).into());
        if got != want {
            failures.push((p, got, want));
        }
    }
    Ok(IdentityCheck {
        name,
        samples,
        failures,
    })
}

/// Evaluates the three parametrized identities used to rule out weak del
/// Pezzo and low-degree curve sections at `samples` random integer points.
pub fn verify_identities<R: Rng + ?Sized>(
    rng: &mut R,
    samples: usize,
) -> Result<Vec<IdentityCheck>> {
    const RANGE: i64 = 1000;
    let h1 = DivisorClass::h1();
    let sum = DivisorClass::linear(1, 1);
    let two_one = DivisorClass::linear(2, 1);
    Ok(vec![
        check_identity(
            rng,
            "(h1+h2)^2 h1^2 (a h1 + b h2) (h1+3h2) = 3a+7b",
            2,
            samples,
            RANGE,
            |p| {
                intersect_on_x(&[
                    sum.clone(),
                    sum.clone(),
                    h1.clone(),
                    h1.clone(),
                    DivisorClass::linear(p[0], p[1]),
                ])
            },
            |p| 3 * p[0] + 7 * p[1],
        )?,
        check_identity(
            rng,
            "(2h1+h2)^2 (a h1^2 + b h1h2) h1 (h1+3h2) = 3a+13b",
            2,
            samples,
            RANGE,
            |p| {
                intersect_on_x(&[
                    two_one.clone(),
                    two_one.clone(),
                    DivisorClass::quadratic(p[0], p[1], 0),
                    h1.clone(),
                ])
            },
            |p| 3 * p[0] + 13 * p[1],
        )?,
        check_identity(
            rng,
            "deg(h1+h2) on h1^2 (a h1^2 + b h1h2 + c h2^2) = 3b+4c",
            3,
            samples,
            RANGE,
            |p| {
                intersect_on_x(&[
                    sum.clone(),
                    h1.clone(),
                    h1.clone(),
                    DivisorClass::quadratic(p[0], p[1], p[2]),
                ])
            },
            |p| 3 * p[1] + 4 * p[2],
        )?,
    ])
}
