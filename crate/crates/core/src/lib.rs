//! Rational points of bounded anticanonical height on the Fermat cubic
//! surface bundle
//!
//! ```text
//! X = { x₀y₀³ + x₁y₁³ + x₂y₂³ + x₃y₃³ = 0 } ⊂ P³ₓ × P³ᵧ,
//! ```
//!
//! their classification against the thin exceptional set Z, Picard ranks of
//! the diagonal cubic surface fibers, and the intersection calculus on X.

pub mod arith;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod intersection;
pub mod linalg;
pub mod picard;

pub use arith::{
    anticanonical_height, cube_class, exact_cube_root, is_cube, naive_height, normalize, CubeClass,
    P1Point, P3Point, ProjectivePoint,
};
pub use classify::{ClassificationRecord, Classifier};
pub use enumerate::{CountClass, CountSeries};
pub use error::{Error, Result};
pub use geometry::{in_v, liftable, on_x, over_singular_fiber, BundlePoint, Pairing};
pub use intersection::DivisorClass;
pub use picard::{DiagonalCubic, GaloisElement, LineLabel, PicardReport};
