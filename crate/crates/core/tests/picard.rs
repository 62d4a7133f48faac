mod common;

use fermat_bundle_core::linalg::integer_rank;
use fermat_bundle_core::picard::{
    all_lines, galois_group, incidence, incidence_matrix, line_action, picard_rank, segre_rank_one,
    DiagonalCubic,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_coefficients(rng: &mut ChaCha8Rng, range: i64) -> [i64; 4] {
    std::array::from_fn(|_| loop {
        let v = rng.random_range(-range..=range);
        if v != 0 {
            break v;
        }
    })
}

#[test]
fn incidence_matches_numeric_solver_on_random_surfaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10 {
        let a = random_coefficients(&mut rng, 20);
        let bad = common::numeric::incidence_mismatches(a, incidence);
        assert!(bad.is_empty(), "{a:?}: {bad:?}");
    }
}

#[test]
fn numeric_solver_sees_ten_neighbours_per_line() {
    let surface = common::numeric::NumericSurface::new([1, 2, 3, 5]);
    let labels = common::numeric::all_labels();
    for a in &labels {
        let n = labels
            .iter()
            .filter(|b| *b != a && surface.lines_meet(a, b))
            .count();
        assert_eq!(n, 10, "{a}");
    }
}

#[test]
fn schlafli_graph() {
    let m = incidence_matrix();
    assert_eq!(integer_rank(&m), 7);
    for row in &m {
        assert_eq!(row.iter().filter(|&&v| v == 1).count(), 10);
        assert_eq!(row.iter().filter(|&&v| v == -1).count(), 1);
    }
}

#[test]
fn group_action_and_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let lines = all_lines();
    for _ in 0..10 {
        let s = DiagonalCubic::new(random_coefficients(&mut rng, 20)).unwrap();
        let g = galois_group(&s);
        for a in &g {
            for b in &g {
                let ab = a.compose(b);
                assert!(g.contains(&ab), "group not closed");
                for l in &lines {
                    assert_eq!(line_action(&ab, l), line_action(a, &line_action(b, l)));
                }
            }
            for l1 in &lines {
                for l2 in &lines {
                    assert_eq!(
                        incidence(&line_action(a, l1), &line_action(a, l2)),
                        incidence(l1, l2)
                    );
                }
            }
        }
        for l in &lines {
            assert_eq!(line_action(&g[0], l), *l);
        }
    }
}

#[test]
fn group_order_matches_f3_rank_of_exponent_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut fixed = vec![
        [1, 1, 1, 1],
        [1, 2, 3, 5],
        [1, 2, 4, 1],
        [2, 4, 8, 16],
        [3, 9, 27, 1],
        [-7, 7, 49, -1],
    ];
    fixed.extend((0..100).map(|_| random_coefficients(&mut rng, 60)));
    for a in fixed {
        let d = common::kummer_rank_f3(a);
        let order = galois_group(&DiagonalCubic::new(a).unwrap()).len();
        assert_eq!(order, 2 * 3usize.pow(d as u32), "{a:?}");
    }
}

#[test]
fn spot_values() {
    assert_eq!(
        galois_group(&DiagonalCubic::new([1, 2, 3, 5]).unwrap()).len(),
        54
    );
    assert_eq!(
        galois_group(&DiagonalCubic::new([1, 2, 4, 1]).unwrap()).len(),
        6
    );
    let r = picard_rank(&DiagonalCubic::new([1, 1, 1, 1]).unwrap());
    assert_eq!(r.rank_over_q, 4);
    // identity fixes 3 lines with m = n = 0, conjugation pairs up the other 24
    assert_eq!(r.orbit_sizes, [vec![2; 12], vec![1; 3]].concat());
}

#[test]
fn orbit_rank_agrees_with_segre_on_random_surfaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut histogram = [0usize; 8];
    for _ in 0..400 {
        let a = random_coefficients(&mut rng, 20);
        let r = picard_rank(&DiagonalCubic::new(a).unwrap());
        assert!(r.agreement, "{a:?}: {r:?}");
        assert_eq!(
            r.segre_rank_one,
            segre_rank_one(&DiagonalCubic::new(a).unwrap())
        );
        assert!((1..=4).contains(&r.rank_over_q), "{a:?}: {r:?}");
        assert_eq!(r.orbit_sizes.iter().sum::<usize>(), 27);
        histogram[r.rank_over_q as usize] += 1;
    }
    assert!(histogram[1] > 0 && histogram[2] > 0);
}

#[test]
fn ranks_of_hand_picked_surfaces() {
    // one cube ratio, or all three
    for (a, expected) in [([1, 1, 1, 2], 1), ([1, 2, 3, 5], 1), ([1, 1, 1, 1], 4)] {
        assert_eq!(
            picard_rank(&DiagonalCubic::new(a).unwrap()).rank_over_q,
            expected,
            "{a:?}"
        );
    }
    let r = picard_rank(&DiagonalCubic::new([1, 1, 2, 2]).unwrap());
    assert!(r.rank_over_q >= 2 && r.agreement);
}
