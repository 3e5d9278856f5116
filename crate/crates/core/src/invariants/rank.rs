//! Exact matrix rank by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals of an integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), width, "ragged matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    bareiss_rank(&mut a, width)
}

fn bareiss_rank(a: &mut [Vec<BigInt>], width: usize) -> usize {
    let height = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..width {
        if r == height {
            break;
        }
        let Some(p) = (r..height).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..width {
                let num = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
        }
        prev = pivot_row[col].clone();
        r += 1;
    }
    r
}
