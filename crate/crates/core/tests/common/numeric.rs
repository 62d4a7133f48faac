//! 50-digit fixed-point complex arithmetic for deciding whether two of the
//! 27 lines meet: the four linear forms cutting out the pair are dependent
//! iff their 4 × 4 determinant vanishes.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use fermat_bundle_core::{LineLabel, Pairing};

pub const DIGITS: u32 = 50;

#[derive(Clone, Debug)]
pub struct Fixed {
    re: BigInt,
    im: BigInt,
}

fn scale() -> BigInt {
    BigInt::from(10).pow(DIGITS)
}

impl Fixed {
    pub fn zero() -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Self {
            re: scale(),
            im: BigInt::zero(),
        }
    }

    /// Real cube root of num/den.
    pub fn real_cbrt(num: i64, den: i64) -> Self {
        let s = scale();
        let mag =
            (BigInt::from(num.unsigned_abs()) * &s * &s * &s) / BigInt::from(den.unsigned_abs());
        let root = mag.cbrt();
        let re = if (num < 0) != (den < 0) { -root } else { root };
        Self {
            re,
            im: BigInt::zero(),
        }
    }

    /// e^{2πi/3} = (−1 + i√3)/2.
    pub fn omega() -> Self {
        let s = scale();
        let sqrt3 = (BigInt::from(3) * &s * &s).sqrt();
        Self {
            re: -(&s / BigInt::from(2)),
            im: sqrt3 / BigInt::from(2),
        }
    }

    pub fn mul(&self, o: &Fixed) -> Fixed {
        let s = scale();
        Fixed {
            re: (&self.re * &o.re - &self.im * &o.im) / &s,
            im: (&self.re * &o.im + &self.im * &o.re) / &s,
        }
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        Fixed {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn neg(&self) -> Fixed {
        Fixed {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn pow(&self, k: u8) -> Fixed {
        (0..k).fold(Fixed::one(), |acc, _| acc.mul(self))
    }

    /// Both parts below 10^-exp in absolute value.
    pub fn below(&self, exp: u32) -> bool {
        let tol = BigInt::from(10).pow(DIGITS - exp);
        self.re.abs() < tol && self.im.abs() < tol
    }
}

fn det(m: &[[Fixed; 4]; 4]) -> Fixed {
    let mut total = Fixed::zero();
    let mut perm = [0usize, 1, 2, 3];
    // Heap's algorithm over the 24 permutations, tracking the sign
    fn permutations(
        k: usize,
        perm: &mut [usize; 4],
        sign: &mut i32,
        f: &mut impl FnMut(&[usize; 4], i32),
    ) {
        if k == 1 {
            f(perm, *sign);
            return;
        }
        for i in 0..k - 1 {
            permutations(k - 1, perm, sign, f);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
            *sign = -*sign;
        }
        permutations(k - 1, perm, sign, f);
    }
    let mut sign = 1;
    permutations(4, &mut perm, &mut sign, &mut |p, s| {
        let term = (0..4).fold(Fixed::one(), |acc, r| acc.mul(&m[r][p[r]]));
        total = total.add(&if s > 0 { term } else { term.neg() });
    });
    total
}

/// The lines of the diagonal cubic with coefficients `a`, as pairs of linear forms.
pub struct NumericSurface {
    u: [Fixed; 4],
    omega: Fixed,
}

impl NumericSurface {
    pub fn new(a: [i64; 4]) -> Self {
        Self {
            u: [
                Fixed::one(),
                Fixed::real_cbrt(a[1], a[0]),
                Fixed::real_cbrt(a[2], a[0]),
                Fixed::real_cbrt(a[3], a[0]),
            ],
            omega: Fixed::omega(),
        }
    }

    fn forms(&self, l: &LineLabel) -> [[Fixed; 4]; 2] {
        let [[i, j], [k, m]] = l.pairing.pairs();
        let mut r1: [Fixed; 4] = std::array::from_fn(|_| Fixed::zero());
        let mut r2 = r1.clone();
        r1[i] = self.u[i].clone();
        r1[j] = self.omega.pow(l.m).mul(&self.u[j]);
        r2[k] = self.u[k].clone();
        r2[m] = self.omega.pow(l.n).mul(&self.u[m]);
        [r1, r2]
    }

    /// Whether the determinant of the four forms is below 10⁻²⁰.
    pub fn lines_meet(&self, a: &LineLabel, b: &LineLabel) -> bool {
        let [r1, r2] = self.forms(a);
        let [r3, r4] = self.forms(b);
        det(&[r1, r2, r3, r4]).below(20)
    }
}

pub fn all_labels() -> Vec<LineLabel> {
    let mut v = Vec::new();
    for p in Pairing::ALL {
        for m in 0..3 {
            for n in 0..3 {
                v.push(LineLabel::new(p, m, n));
            }
        }
    }
    v
}

/// Checks the combinatorial incidence rule against the numeric one on all
/// 351 unordered pairs of distinct lines; returns the mismatching pairs.
pub fn incidence_mismatches(
    a: [i64; 4],
    incidence: impl Fn(&LineLabel, &LineLabel) -> i8,
) -> Vec<(LineLabel, LineLabel)> {
    let surface = NumericSurface::new(a);
    let labels = all_labels();
    let mut bad = Vec::new();
    for (i, l1) in labels.iter().enumerate() {
        for l2 in &labels[i + 1..] {
            if (incidence(l1, l2) == 1) != surface.lines_meet(l1, l2) {
                bad.push((*l1, *l2));
            }
        }
    }
    bad
}
