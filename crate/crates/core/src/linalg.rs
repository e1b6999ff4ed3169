//! Dense matrices over an exact field and reduced row-echelon form.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    cols: usize,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(cols: usize, rows: Vec<Vec<S>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { cols, rows }
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::new(cols, rows.iter().map(|r| r.iter().map(|&v| S::from_integer(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
        Matrix { cols: n, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.rows[i]
    }

    pub fn push_row(&mut self, row: Vec<S>) {
        assert_eq!(row.len(), self.cols, "row length");
        self.rows.push(row);
    }

    /// Drops all-zero rows.
    pub fn without_zero_rows(mut self) -> Self {
        self.rows.retain(|r| r.iter().any(|v| !v.is_zero()));
        self
    }

    /// Column index of the first nonzero entry of each row.
    pub fn pivots(&self) -> Vec<Option<usize>> {
        self.rows.iter().map(|r| r.iter().position(|v| !v.is_zero())).collect()
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Gauss-Jordan elimination to the canonical reduced row-echelon form.
///
/// Pivots are 1, every other entry of a pivot column is 0, and zero rows are
/// moved to the bottom. Returns the reduced matrix and its rank.
pub fn rref<S: Scalar>(matrix: &Matrix<S>) -> (Matrix<S>, usize) {
    let mut rows = matrix.rows.clone();
    let mut rank = 0;
    for col in 0..matrix.cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = S::one() / rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - factor.clone() * p.clone();
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    (Matrix { cols: matrix.cols, rows }, rank)
}

/// Reduces `row` against a matrix already in reduced row-echelon form. The
/// result is zero iff `row` lies in the row space.
pub fn reduce_against<S: Scalar>(echelon: &Matrix<S>, row: &[S]) -> Vec<S> {
    let mut out = row.to_vec();
    for (r, pivot) in echelon.rows.iter().zip(echelon.pivots()) {
        let Some(col) = pivot else { continue };
        if out[col].is_zero() {
            continue;
        }
        let factor = out[col].clone();
        for (v, p) in out.iter_mut().zip(r) {
            *v = v.clone() - factor.clone() * p.clone();
        }
    }
    out
}
