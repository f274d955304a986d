//! Exact Gaussian elimination over the rationals (and complex rationals),
//! used for kernels of the averaging operators and span dimensions.
//! Pivoting is deterministic: first row with a nonzero entry in the first
//! unresolved column.

use num::{One, Zero};

use crate::scalar::{Rat, Scalar};

/// Basis of the nullspace of a rows x cols rational matrix, as vectors of
/// length `cols`. Basis vectors are the standard free-variable solutions of
/// the reduced row echelon form, ordered by free column.
pub fn nullspace(matrix: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = matrix.to_vec();
    let rows = m.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for c in col..cols {
            m[row][c] = &m[row][c] / &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    m[r][c] = &m[r][c] - &f * &m[row][c];
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let is_pivot = |c: usize| pivot_cols.contains(&c);
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a family of complex-rational vectors.
pub fn rank_scalar(vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let cols = vectors[0].len();
    let mut m: Vec<Vec<Scalar>> = vectors.to_vec();
    let rows = m.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for c in col..cols {
            m[rank][c] = m[rank][c].clone() / inv.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    m[r][c] = m[r][c].clone() - f.clone() * m[rank][c].clone();
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, scalar_int};

    #[test]
    fn nullspace_of_sum_matrix() {
        // 1x3 matrix [1 1 1]: kernel dimension 2.
        let m = vec![vec![rat_int(1), rat_int(1), rat_int(1)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = v.iter().fold(Rat::zero(), |a, x| a + x);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn nullspace_of_full_rank() {
        let m = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(2), rat_int(1)],
        ];
        assert!(nullspace(&m, 2).is_empty());
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![scalar_int(1), scalar_int(2)],
            vec![scalar_int(2), scalar_int(4)],
            vec![scalar_int(0), scalar_int(1)],
        ];
        assert_eq!(rank_scalar(&rows), 2);
    }
}
