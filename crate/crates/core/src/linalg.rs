//! Exact Gaussian elimination over ℚ.

use num_rational::BigRational;
use num_traits::Zero;

/// Rank of a dense rational matrix given by rows.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let pivot_row: Vec<BigRational> = rows[rank].iter().map(|v| v * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in pivot_row.iter().enumerate().skip(col) {
                row[c] -= &factor * p;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

pub fn integer_rank<T: Copy + Into<i64>>(rows: &[Vec<T>]) -> usize {
    rank(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&v| BigRational::from_integer(v.into().into()))
                    .collect()
            })
            .collect(),
    )
}
