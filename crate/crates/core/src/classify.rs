//! Membership in the exceptional set Z = ∪ V_τ(ℚ) ∪ ∪ f_τ(X_τ(ℚ)).
//!
//! Only the three pairings are examined: V_τ and T_τ depend on τ ∈ 𝔖₄ only
//! through the partition of the indices into two pairs.

use dashmap::DashMap;

use crate::arith::P3Point;
use crate::error::Result;
use crate::geometry::{self, BundlePoint, Pairing};
use crate::picard::{picard_rank, DiagonalCubic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub point: BundlePoint,
    /// Indexed by `Pairing::index() - 1`.
    pub in_v: [bool; 3],
    /// Indexed by `Pairing::index() - 1`.
    pub liftable: [bool; 3],
    pub singular_fiber: bool,
    /// Picard rank over ℚ of the π_x-fiber; absent for singular fibers.
    pub fiber_rank: Option<u8>,
    pub in_z: bool,
}

impl ClassificationRecord {
    pub fn in_v_for(&self, tau: Pairing) -> bool {
        self.in_v[tau.index() as usize - 1]
    }

    pub fn liftable_for(&self, tau: Pairing) -> bool {
        self.liftable[tau.index() as usize - 1]
    }

    pub fn in_some_v(&self) -> bool {
        self.in_v.iter().any(|&b| b)
    }

    pub fn some_liftable(&self) -> bool {
        self.liftable.iter().any(|&b| b)
    }

    /// Comma-separated flags `V1..V3`, `L1..L3`, `S` (singular fiber), `Z`; `none` if empty.
    pub fn flags(&self) -> String {
        let mut out = Vec::new();
        for tau in Pairing::ALL {
            if self.in_v_for(tau) {
                out.push(format!("V{}", tau.index()));
            }
        }
        for tau in Pairing::ALL {
            if self.liftable_for(tau) {
                out.push(format!("L{}", tau.index()));
            }
        }
        if self.singular_fiber {
            out.push("S".into());
        }
        if self.in_z {
            out.push("Z".into());
        }
        if out.is_empty() {
            "none".into()
        } else {
            out.join(",")
        }
    }
}

fn record(p: &BundlePoint, rank: impl FnOnce(&P3Point) -> Option<u8>) -> ClassificationRecord {
    let in_v = Pairing::ALL.map(|tau| geometry::in_v(p, tau));
    let liftable = Pairing::ALL.map(|tau| geometry::liftable(p.x(), tau));
    let singular_fiber = geometry::over_singular_fiber(p.x());
    let fiber_rank = if singular_fiber { None } else { rank(p.x()) };
    ClassificationRecord {
        point: *p,
        in_v,
        liftable,
        singular_fiber,
        fiber_rank,
        in_z: in_v.iter().chain(&liftable).any(|&b| b),
    }
}

fn smooth_fiber_rank(x: &P3Point) -> u8 {
    picard_rank(&DiagonalCubic::fiber_over(x).expect("smooth fiber")).rank_over_q
}

/// Classifies a single point without memoization.
pub fn classify_point(p: &BundlePoint) -> ClassificationRecord {
    record(p, |x| Some(smooth_fiber_rank(x)))
}

/// Checks that `(x, y)` lies on X, then classifies it.
pub fn classify_coords(x: P3Point, y: P3Point) -> Result<ClassificationRecord> {
    Ok(classify_point(&BundlePoint::new(x, y)?))
}

pub fn z_membership(p: &BundlePoint) -> bool {
    classify_point(p).in_z
}

/// Classifier with fiber ranks memoized per normalized x; shareable across threads.
#[derive(Debug, Default)]
pub struct Classifier {
    ranks: DashMap<P3Point, u8>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fiber_rank(&self, x: &P3Point) -> Option<u8> {
        if geometry::over_singular_fiber(x) {
            return None;
        }
        if let Some(r) = self.ranks.get(x) {
            return Some(*r);
        }
        let r = smooth_fiber_rank(x);
        Some(*self.ranks.entry(*x).or_insert(r))
    }

    pub fn classify(&self, p: &BundlePoint) -> ClassificationRecord {
        record(p, |x| self.fiber_rank(x))
    }

    pub fn cached_fibers(&self) -> usize {
        self.ranks.len()
    }
}
