//! Exact matrix rank over the rationals via fraction-free Bareiss
//! elimination. An i128 fast path covers desk-scale boundary matrices;
//! on overflow the computation falls back to arbitrary precision.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank of an integer matrix, exact over the rationals.
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    match rank_i128(rows) {
        Some(r) => r,
        None => rank_bigint(rows),
    }
}

fn rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    if nrows == 0 {
        return Some(0);
    }
    let ncols = m[0].len();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // Smallest-magnitude pivot keeps intermediate growth down.
        let pivot_row = (rank..nrows)
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs());
        let Some(pivot_row) = pivot_row else { continue };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        for r in rank + 1..nrows {
            let factor = m[r][col];
            for c in col..ncols {
                let a = pivot.checked_mul(m[r][c])?;
                let b = factor.checked_mul(m[rank][c])?;
                // Bareiss: the division by the previous pivot is exact.
                m[r][c] = a.checked_sub(b)? / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let pivot_row = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(pivot_row) = pivot_row else { continue };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = m[r][col].clone();
            for c in col..ncols {
                let val = (&pivot * &m[r][c] - &factor * &m[rank][c]) / &prev;
                m[r][c] = val;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_singular() {
        assert_eq!(exact_rank(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(exact_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(exact_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(exact_rank(&[]), 0);
    }

    #[test]
    fn rank_of_rectangular() {
        assert_eq!(exact_rank(&[vec![1, -1, 0], vec![0, 1, -1]]), 2);
        assert_eq!(
            exact_rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]),
            2
        );
    }

    #[test]
    fn fast_and_slow_paths_agree() {
        let m = vec![
            vec![3, 1, 4, 1, 5],
            vec![9, 2, 6, 5, 3],
            vec![5, 8, 9, 7, 9],
            vec![3, 2, 3, 8, 4],
        ];
        assert_eq!(rank_i128(&m).unwrap(), rank_bigint(&m));
    }
}
