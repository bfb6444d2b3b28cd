//! Exact rank of integer vector lattices, by two unrelated routines so one
//! can cross-check the other. Arithmetic is arbitrary precision: rank
//! computations feed on untrusted crossing data.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Rank by Euclidean row elimination over the integers.
pub fn rank_integer_elimination(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        // Repeatedly subtract multiples until at most one nonzero entry
        // remains in this column below the pivot rows.
        loop {
            let mut nonzero: Vec<usize> =
                (rank..m.len()).filter(|&r| !m[r][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                m.swap(rank, nonzero[0]);
                rank += 1;
                break;
            }
            nonzero.sort_by_key(|&r| m[r][col].abs());
            let (small, other) = (nonzero[0], nonzero[1]);
            let q = &m[other][col] / &m[small][col];
            for c in 0..cols {
                let sub = &q * &m[small][c];
                m[other][c] -= sub;
            }
        }
    }
    rank
}

/// Rank by fraction-free (Bareiss) elimination.
pub fn rank_fraction_free(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let pivot = match (rank..nrows).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..cols {
                m[r][c] = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank with the two routines cross-checked against each other.
pub fn lattice_rank(rows: &[Vec<i64>]) -> usize {
    let a = rank_integer_elimination(rows);
    let b = rank_fraction_free(rows);
    assert_eq!(a, b, "integer rank routines disagree");
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_zero() {
        assert_eq!(lattice_rank(&[]), 0);
        assert_eq!(lattice_rank(&[vec![0, 0, 0]]), 0);
    }

    #[test]
    fn single_vector() {
        assert_eq!(lattice_rank(&[vec![1, 1, 1, 1, 1]]), 1);
    }

    #[test]
    fn dependent_rows() {
        let rows = vec![vec![2, 4], vec![3, 6], vec![5, 10]];
        assert_eq!(lattice_rank(&rows), 1);
    }

    #[test]
    fn full_rank_with_elimination_chains() {
        let rows = vec![vec![0, 0, 1], vec![1, 1, 0], vec![2, 0, 0], vec![1, 2, 0]];
        assert_eq!(lattice_rank(&rows), 3);
    }

    #[test]
    fn negative_entries() {
        let rows =
            vec![vec![-1, -1, -1, -1], vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]];
        assert_eq!(lattice_rank(&rows), 4);
    }

    #[test]
    fn extreme_entries_do_not_overflow() {
        let big = i64::MAX / 2;
        let rows = vec![vec![big, -big, big], vec![-big, big, big], vec![big, big, -big]];
        assert_eq!(lattice_rank(&rows), 3);
    }
}
