//! Independent oracles shared by the integration tests. Nothing here calls
//! the code paths it is used to check.
#![allow(dead_code)]

pub mod numeric;

use std::collections::{BTreeSet, HashMap};

use fermat_bundle_core::{P3Point, Pairing};

/// Coefficient of h₁³h₂³ in a product of polynomials in h₁, h₂, expanded
/// term by term without truncation. Each factor is a list of `(coef, i, j)`.
pub fn expand_top_coefficient(factors: &[Vec<(i64, u32, u32)>]) -> i64 {
    fn go(factors: &[Vec<(i64, u32, u32)>], coef: i64, i: u32, j: u32) -> i64 {
        match factors.split_first() {
            None => {
                if (i, j) == (3, 3) {
                    coef
                } else {
                    0
                }
            }
            Some((f, rest)) => f
                .iter()
                .map(|&(c, a, b)| go(rest, coef * c, i + a, j + b))
                .sum(),
        }
    }
    go(factors, 1, 0, 0)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Canonical representative by the textbook recipe: divide by the gcd and
/// flip so the first nonzero entry is positive.
pub fn brute_normalize(v: [i64; 4]) -> [i64; 4] {
    let g = v.iter().fold(0, |g, &c| gcd(g, c));
    let mut out = v.map(|c| c / g);
    if out.iter().find(|&&c| c != 0).unwrap() < &0 {
        out = out.map(|c| -c);
    }
    out
}

/// Every point of X with H(x)³·H(y) ≤ `bound`, by scanning all integer
/// 8-tuples in the height box.
pub fn brute_points(bound: u64) -> BTreeSet<([i64; 4], [i64; 4])> {
    let mut hx = 0i64;
    while ((hx + 1) as u64).pow(3) <= bound {
        hx += 1;
    }
    let hy = bound as i64;
    let box4 = |h: i64| {
        let mut v = Vec::new();
        for a in -h..=h {
            for b in -h..=h {
                for c in -h..=h {
                    for d in -h..=h {
                        if [a, b, c, d] != [0; 4] {
                            v.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        v
    };
    let ys = box4(hy);
    let mut out = BTreeSet::new();
    for x in box4(hx) {
        for y in &ys {
            let s: i128 = (0..4).map(|i| x[i] as i128 * (y[i] as i128).pow(3)).sum();
            if s != 0 {
                continue;
            }
            let (nx, ny) = (brute_normalize(x), brute_normalize(*y));
            let h = |v: &[i64; 4]| v.iter().map(|c| c.unsigned_abs()).max().unwrap();
            if h(&nx).pow(3) * h(&ny) <= bound {
                out.insert((nx, ny));
            }
        }
    }
    out
}

/// Finds (s:t) with s³·A = t³·B and |s|, |t| ≤ `cap` by exhaustive search.
#[derive(Default)]
pub struct LiftSearch {
    cache: HashMap<(i128, i128), bool>,
    cap: i128,
}

impl LiftSearch {
    pub fn new(cap: i128) -> Self {
        Self {
            cache: HashMap::new(),
            cap,
        }
    }

    pub fn has_solution(&mut self, a: i128, b: i128) -> bool {
        let g = gcd128(a, b).max(1);
        let key = (a / g, b / g);
        let cap = self.cap;
        *self.cache.entry(key).or_insert_with(|| {
            let (a, b) = key;
            (0..=cap)
                .any(|s| (-cap..=cap).any(|t| (s, t) != (0, 0) && s.pow(3) * a == t.pow(3) * b))
        })
    }

    pub fn liftable(&mut self, x: &P3Point, tau: Pairing) -> bool {
        let c = x.coords();
        let [[i, j], [k, l]] = tau.pairs();
        self.has_solution(c[i] as i128 * c[j] as i128, c[k] as i128 * c[l] as i128)
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd128(b, a % b)
    }
}

/// Prime factorization by plain trial division.
pub fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Rank over 𝔽₃ of the exponent vectors (mod 3) of a₁/a₀, a₂/a₀, a₃/a₀.
pub fn kummer_rank_f3(a: [i64; 4]) -> usize {
    let mut primes = BTreeSet::new();
    for c in a {
        for (p, _) in trial_factor(c.unsigned_abs()) {
            primes.insert(p);
        }
    }
    let primes: Vec<u64> = primes.into_iter().collect();
    let exps = |c: i64| -> Vec<i64> {
        let f = trial_factor(c.unsigned_abs());
        primes
            .iter()
            .map(|p| f.iter().find(|(q, _)| q == p).map_or(0, |&(_, e)| e as i64))
            .collect()
    };
    let base = exps(a[0]);
    let mut rows: Vec<Vec<i64>> = (1..4)
        .map(|i| {
            exps(a[i])
                .iter()
                .zip(&base)
                .map(|(x, y)| (x - y).rem_euclid(3))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..primes.len() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = if rows[rank][col] == 1 { 1 } else { 2 };
        let pivot: Vec<i64> = rows[rank].iter().map(|v| v * inv % 3).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v = (*v - f * p).rem_euclid(3);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

pub fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
