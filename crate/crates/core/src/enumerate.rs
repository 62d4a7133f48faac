//! Enumeration of X(ℚ) by anticanonical height H(x)³·H(y) and the counting
//! series N(U, L, B) for the classes reported by the classifier.
//!
//! Since H(x)³ ≤ B, the outer loop over x is short; each fiber is then
//! searched over a box of side 2·⌊B/H(x)³⌋ + 1 in three coordinates, solving
//! for the fourth by an exact cube root.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;

use crate::arith::{exact_cube_root, is_canonical, P3Point};
use crate::classify::{ClassificationRecord, Classifier};
use crate::error::{Error, Result};
use crate::geometry::{on_x, BundlePoint, Pairing};

/// Every normalized y with H(y) ≤ `bound` on the π_x-fiber over `x`, in
/// ascending lexicographic order.
pub fn enumerate_fiber(x: &P3Point, bound: u64) -> Vec<P3Point> {
    if bound == 0 {
        return Vec::new();
    }
    let b = i64::try_from(bound).expect("fiber bound fits in i64");
    let xc = x.coords();
    let solved = (0..4).rev().find(|&j| xc[j] != 0).expect("x is nonzero");
    let free: Vec<usize> = (0..4).filter(|&j| j != solved).collect();
    let lead = xc[solved] as i128;
    // canonical points have y₀ ≥ 0
    let first_lo = if free[0] == 0 { 0 } else { -b };

    let mut out = Vec::new();
    let mut y = [0i64; 4];
    let cube = |v: i64| (v as i128).pow(3);
    for a in first_lo..=b {
        let sa = xc[free[0]] as i128 * cube(a);
        for c in -b..=b {
            let sc = sa + xc[free[1]] as i128 * cube(c);
            for d in -b..=b {
                let s = sc + xc[free[2]] as i128 * cube(d);
                let (q, r) = (-s).div_rem(&lead);
                if r != 0 {
                    continue;
                }
                let Some(root) = exact_cube_root(q) else {
                    continue;
                };
                if root.unsigned_abs() > bound as u128 {
                    continue;
                }
                y[free[0]] = a;
                y[free[1]] = c;
                y[free[2]] = d;
                y[solved] = root as i64;
                if is_canonical(&y) {
                    out.push(P3Point::from_canonical(y));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// All normalized points of P³ with naive height ≤ `height`, ascending.
pub fn points_of_height_at_most(height: u64) -> Vec<P3Point> {
    let h = height as i64;
    let mut out = Vec::new();
    for a in 0..=h {
        for b in -h..=h {
            for c in -h..=h {
                for d in -h..=h {
                    let v = [a, b, c, d];
                    if is_canonical(&v) {
                        out.push(P3Point::from_canonical(v));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Largest h with h³ ≤ `bound`.
pub fn max_base_height(bound: u64) -> u64 {
    exact_floor_cbrt(bound)
}

fn exact_floor_cbrt(n: u64) -> u64 {
    let mut r = (n as f64).cbrt() as u64;
    while r > 0 && r.checked_pow(3).is_none_or(|c| c > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(3).is_some_and(|c| c <= n) {
        r += 1;
    }
    r
}

/// Base points x together with the fiber bound ⌊B / H(x)³⌋.
fn base_points(bound: u64) -> Vec<(P3Point, u64)> {
    points_of_height_at_most(max_base_height(bound))
        .into_iter()
        .map(|x| (x, bound / x.height().pow(3)))
        .collect()
}

/// Streams every point of X with anticanonical height ≤ `bound`, ordered
/// lexicographically by x and then y.
pub fn enumerate_x(bound: u64) -> impl Iterator<Item = BundlePoint> {
    base_points(bound).into_iter().flat_map(|(x, fiber_bound)| {
        enumerate_fiber(&x, fiber_bound)
            .into_iter()
            .map(move |y| BundlePoint::new_unchecked(x, y))
    })
}

fn thread_pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::InvalidArgument(
            "worker count must be at least 1".into(),
        ));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))
}

/// Same points as [`enumerate_x`], with the x-loop split across `workers` threads.
pub fn enumerate_x_parallel(bound: u64, workers: usize) -> Result<Vec<BundlePoint>> {
    let pool = thread_pool(workers)?;
    let mut points: Vec<BundlePoint> = pool.install(|| {
        base_points(bound)
            .into_par_iter()
            .flat_map_iter(|(x, fb)| {
                enumerate_fiber(&x, fb)
                    .into_iter()
                    .map(move |y| BundlePoint::new_unchecked(x, y))
            })
            .collect()
    });
    points.sort_unstable();
    Ok(points)
}

/// Enumerates and classifies in parallel, returning records in canonical order.
pub fn classify_all(
    bound: u64,
    classifier: &Classifier,
    workers: usize,
) -> Result<Vec<(u128, ClassificationRecord)>> {
    let points = enumerate_x_parallel(bound, workers)?;
    let pool = thread_pool(workers)?;
    Ok(pool.install(|| {
        points
            .par_iter()
            .map(|p| {
                let h = (p.x().height() as u128).pow(3) * p.y().height() as u128;
                (h, classifier.classify(p))
            })
            .collect()
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CountClass {
    All,
    InZ,
    NotInZ,
    InSomeV,
    LiftableOnly,
    SingularFiber,
}

impl CountClass {
    pub const ALL: [CountClass; 6] = [
        CountClass::All,
        CountClass::InZ,
        CountClass::NotInZ,
        CountClass::InSomeV,
        CountClass::LiftableOnly,
        CountClass::SingularFiber,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CountClass::All => "ALL",
            CountClass::InZ => "IN_Z",
            CountClass::NotInZ => "NOT_IN_Z",
            CountClass::InSomeV => "IN_SOME_V",
            CountClass::LiftableOnly => "LIFTABLE_ONLY",
            CountClass::SingularFiber => "SINGULAR_FIBER",
        }
    }

    pub fn contains(self, r: &ClassificationRecord) -> bool {
        match self {
            CountClass::All => true,
            CountClass::InZ => r.in_z,
            CountClass::NotInZ => !r.in_z,
            CountClass::InSomeV => r.in_some_v(),
            CountClass::LiftableOnly => r.some_liftable() && !r.in_some_v(),
            CountClass::SingularFiber => r.singular_fiber,
        }
    }
}

impl FromStr for CountClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CountClass::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown count class {s:?}")))
    }
}

impl fmt::Display for CountClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub const CSV_HEADER: &str = "B,ALL,IN_Z,NOT_IN_Z,IN_SOME_V,LIFTABLE_ONLY,SINGULAR_FIBER";

/// Counts N(U, L, B) per class, aligned with an ascending list of bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    pub bounds: Vec<u64>,
    pub counts: BTreeMap<CountClass, Vec<u64>>,
}

impl CountSeries {
    fn zeroed(bounds: Vec<u64>) -> Self {
        let counts = CountClass::ALL
            .into_iter()
            .map(|c| (c, vec![0; bounds.len()]))
            .collect();
        Self { bounds, counts }
    }

    pub fn get(&self, class: CountClass) -> &[u64] {
        &self.counts[&class]
    }

    /// N(IN_Z, B) / N(ALL, B) per bound; `None` where nothing was counted.
    pub fn z_fraction(&self) -> Vec<Option<f64>> {
        self.get(CountClass::InZ)
            .iter()
            .zip(self.get(CountClass::All))
            .map(|(&z, &all)| (all > 0).then(|| z as f64 / all as f64))
            .collect()
    }

    /// Checks monotonicity and the partition identities between classes.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if !self.bounds.windows(2).all(|w| w[0] < w[1]) {
            return bad("bounds are not strictly ascending".into());
        }
        for (class, v) in &self.counts {
            if v.len() != self.bounds.len() {
                return bad(format!(
                    "{class} has {} entries for {} bounds",
                    v.len(),
                    self.bounds.len()
                ));
            }
            if !v.windows(2).all(|w| w[0] <= w[1]) {
                return bad(format!("{class} counts decrease"));
            }
        }
        for i in 0..self.bounds.len() {
            let c = |k| self.get(k)[i];
            if c(CountClass::All) != c(CountClass::InZ) + c(CountClass::NotInZ) {
                return bad(format!("ALL != IN_Z + NOT_IN_Z at B = {}", self.bounds[i]));
            }
            if c(CountClass::InSomeV) > c(CountClass::InZ)
                || c(CountClass::LiftableOnly) > c(CountClass::InZ)
            {
                return bad(format!("subclass exceeds IN_Z at B = {}", self.bounds[i]));
            }
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for (i, b) in self.bounds.iter().enumerate() {
            write!(out, "{b}").unwrap();
            for class in CountClass::ALL {
                write!(out, ",{}", self.get(class)[i]).unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parses the CSV written by [`CountSeries::to_csv`]. A header with no rows
    /// is an error.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty CSV".into()))?;
        let columns: Vec<&str> = header.trim().split(',').collect();
        if columns.first() != Some(&"B") {
            return Err(Error::InvalidArgument("first CSV column must be B".into()));
        }
        let classes = columns[1..]
            .iter()
            .map(|c| c.parse())
            .collect::<Result<Vec<CountClass>>>()?;
        let mut bounds = Vec::new();
        let mut counts: BTreeMap<CountClass, Vec<u64>> =
            classes.iter().map(|&c| (c, Vec::new())).collect();
        for (lineno, line) in lines.enumerate() {
            let fields: Vec<&str> = line.trim().split(',').collect();
            if fields.len() != columns.len() {
                return Err(Error::InvalidArgument(format!(
                    "row {} has {} fields, expected {}",
                    lineno + 1,
                    fields.len(),
                    columns.len()
                )));
            }
            let parse = |s: &str| {
                s.trim().parse::<u64>().map_err(|_| {
                    Error::InvalidArgument(format!("bad integer {s:?} in row {}", lineno + 1))
                })
            };
            bounds.push(parse(fields[0])?);
            for (class, field) in classes.iter().zip(&fields[1..]) {
                counts.get_mut(class).unwrap().push(parse(field)?);
            }
        }
        if bounds.is_empty() {
            return Err(Error::InvalidArgument("no rows".into()));
        }
        Ok(Self { bounds, counts })
    }
}

fn check_bounds(bounds: &[u64]) -> Result<()> {
    if bounds.is_empty() {
        return Err(Error::InvalidArgument("empty list of height bounds".into()));
    }
    if bounds[0] == 0 || !bounds.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(
            "height bounds must be positive and strictly ascending".into(),
        ));
    }
    Ok(())
}

/// One enumeration pass at the largest bound; each point is classified once
/// and counted at every bound ≥ its height.
pub fn count_series(
    bounds: &[u64],
    classifier: &Classifier,
    workers: usize,
) -> Result<CountSeries> {
    check_bounds(bounds)?;
    let pool = thread_pool(workers)?;
    let top = *bounds.last().unwrap();
    let width = CountClass::ALL.len();
    // histogram[i][c]: points first counted at bounds[i]
    let histogram = pool.install(|| {
        base_points(top)
            .into_par_iter()
            .map(|(x, fiber_bound)| {
                let mut h = vec![0u64; bounds.len() * width];
                let hx3 = x.height().pow(3);
                for y in enumerate_fiber(&x, fiber_bound) {
                    let height = hx3 * y.height();
                    let slot = bounds.partition_point(|&b| b < height);
                    let r = classifier.classify(&BundlePoint::new_unchecked(x, y));
                    for (c, class) in CountClass::ALL.iter().enumerate() {
                        if class.contains(&r) {
                            h[slot * width + c] += 1;
                        }
                    }
                }
                h
            })
            .reduce(
                || vec![0u64; bounds.len() * width],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    });
    let mut series = CountSeries::zeroed(bounds.to_vec());
    for (c, class) in CountClass::ALL.iter().enumerate() {
        let column = series.counts.get_mut(class).unwrap();
        let mut running = 0;
        for (i, slot) in column.iter_mut().enumerate() {
            running += histogram[i * width + c];
            *slot = running;
        }
    }
    Ok(series)
}

/// A line in a π_x-fiber: y_{τ0} : y_{τ1} = p₁ : q₁ and y_{τ2} : y_{τ3} = p₂ : q₂,
/// parametrized by (s:t) ↦ (p₁s, q₁s, p₂t, q₂t) in the pairing's index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineSpec {
    pub x: P3Point,
    pub pairing: Pairing,
    pub first: (i64, i64),
    pub second: (i64, i64),
}

impl LineSpec {
    /// The line y₀ = −y₁, y₂ = −y₃ in the Fermat fiber over (1:1:1:1).
    pub fn fermat() -> Self {
        Self {
            x: P3Point::new([1, 1, 1, 1]).unwrap(),
            pairing: Pairing::P1,
            first: (1, -1),
            second: (1, -1),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let x = self.x.coords();
        let [[i, j], [k, l]] = self.pairing.pairs();
        let vanishes = |(p, q): (i64, i64), a: usize, b: usize| {
            (p, q) != (0, 0)
                && x[a] as i128 * (p as i128).pow(3) + x[b] as i128 * (q as i128).pow(3) == 0
        };
        if vanishes(self.first, i, j) && vanishes(self.second, k, l) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "line {self:?} does not lie on X"
            )))
        }
    }

    /// Image of (s:t) on X.
    pub fn point(&self, s: i64, t: i64) -> Result<BundlePoint> {
        let [[i, j], [k, l]] = self.pairing.pairs();
        let mut y = [0i64; 4];
        y[i] = self.first.0 * s;
        y[j] = self.first.1 * s;
        y[k] = self.second.0 * t;
        y[l] = self.second.1 * t;
        let y = P3Point::new(y)?;
        debug_assert!(on_x(&self.x, &y));
        BundlePoint::new(self.x, y)
    }
}

/// Number of points of P¹(ℚ) with naive height ≤ `bound`:
/// 2 + 2·(2·Σ_{n ≤ B} φ(n) − 1) for B ≥ 1.
pub fn p1_count(bound: u64) -> u64 {
    if bound == 0 {
        return 0;
    }
    let n = bound as usize;
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for p in 2..=n {
        if phi[p] == p as u64 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    let totient_sum: u64 = phi[1..].iter().sum();
    2 + 2 * (2 * totient_sum - 1)
}

/// Points (s:t) ∈ P¹(ℚ) of height ≤ `bound` parametrizing the given line.
pub fn line_count(line: &LineSpec, bound: u64) -> Result<u64> {
    line.validate()?;
    Ok(p1_count(bound))
}
