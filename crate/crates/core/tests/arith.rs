mod common;

use fermat_bundle_core::arith::{cube_class, exact_cube_root, is_cube, normalize};
use num_integer::Integer;
use proptest::prelude::*;

fn coords() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-1000i64..=1000).prop_filter("nonzero", |v| v != &[0; 4])
}

proptest! {
    #[test]
    fn normalize_is_idempotent(v in coords()) {
        let p = normalize(v).unwrap();
        prop_assert_eq!(normalize(*p.coords()).unwrap(), p);
        prop_assert_eq!(p.coords(), &common::brute_normalize(v));
    }

    #[test]
    fn normalize_ignores_scaling(v in coords(), k in -50i64..=50) {
        prop_assume!(k != 0);
        prop_assert_eq!(normalize(v.map(|c| c * k)).unwrap(), normalize(v).unwrap());
    }

    #[test]
    fn cube_class_is_invariant_under_cubes(
        rn in 1i64..5000, rd in 1i64..5000, qn in 1i64..200, qd in 1i64..200, neg in any::<bool>()
    ) {
        let n = rn as i128 * (qn as i128).pow(3);
        let d = rd as i128 * (qd as i128).pow(3);
        let n = if neg { -n } else { n };
        prop_assert_eq!(cube_class(n, d).unwrap(), cube_class(rn as i128, rd as i128).unwrap());
    }

    #[test]
    fn cube_class_trivial_iff_is_cube(n in -100_000i64..100_000, d in 1i64..100_000) {
        prop_assume!(n != 0);
        prop_assert_eq!(
            cube_class(n as i128, d as i128).unwrap().is_trivial(),
            is_cube(n as i128, d as i128).unwrap()
        );
    }

    #[test]
    fn classes_multiply(a in 1i64..10_000, b in 1i64..10_000) {
        let product = cube_class(a as i128 * b as i128, 1).unwrap();
        let separate = cube_class(a as i128, 1).unwrap().mul(&cube_class(b as i128, 1).unwrap());
        prop_assert_eq!(product, separate);
    }

    #[test]
    fn cube_root_of_non_cubes(m in -2_000_000i64..2_000_000, off in 1i64..3) {
        let c = (m as i128).pow(3);
        prop_assert_eq!(exact_cube_root(c), Some(m as i128));
        // between two consecutive cubes there are no cubes
        if m != -1 {
            prop_assert_eq!(exact_cube_root(c + off as i128), None);
        }
    }
}

/// p/q is a cube iff n³·q = p·d³ for some integers n and d ≥ 1; with |p|, |q| ≤ 200
/// any such n, d is at most 6 in absolute value.
#[test]
fn is_cube_matches_brute_force_on_small_fractions() {
    for p in -200i64..=200 {
        for q in 1i64..=200 {
            if p == 0 || p.gcd(&q) != 1 {
                continue;
            }
            let brute = (1i64..=10).any(|d| (-10i64..=10).any(|n| n.pow(3) * q == p * d.pow(3)));
            assert_eq!(is_cube(p as i128, q as i128).unwrap(), brute, "{p}/{q}");
            assert_eq!(
                cube_class(p as i128, q as i128).unwrap().is_trivial(),
                brute,
                "{p}/{q}"
            );
            // negative denominators are accepted too
            assert_eq!(is_cube(p as i128, -q as i128).unwrap(), brute, "{p}/-{q}");
        }
    }
}

#[test]
fn cube_free_part_exponents() {
    // 2/15 = 2 · 15² / 15³
    let c = cube_class(2, 15).unwrap();
    assert_eq!(c, cube_class(2 * 15 * 15, 1).unwrap());
    for (p, e) in common::trial_factor(2 * 15 * 15) {
        assert_eq!(c.exponent(p), (e % 3) as u8);
    }
}

#[test]
fn large_inputs() {
    let p = 1_000_000_007i128;
    let q = 998_244_353i128;
    assert!(!is_cube(p * q, 1).unwrap());
    assert!(is_cube(p.pow(3), q.pow(3)).unwrap());
    assert!(cube_class(p * q * q, q).unwrap() == cube_class(p * q, 1).unwrap());
    assert!(cube_class(i128::from(u64::MAX) + 1, 1).is_err());
}
