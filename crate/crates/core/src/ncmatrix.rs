//! Dense matrices over a division algebra.
//!
//! Entry `m[i][j]` sits in row `i` and column `j`, both 0-based. In the
//! usual upper/lower index notation `m^i_j` is stored at `get(i - 1, j - 1)`:
//! the upper index selects the row, the lower one the column.
//!
//! Two products are provided. [`NcMatrix::rc_product`] contracts a row of
//! the left factor with a column of the right one and is the product used
//! everywhere else in the crate. [`NcMatrix::cr_product`] contracts a
//! column of the left factor with a row of the right one. In both, scalar
//! factors are multiplied in the order they appear in the index formula.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::DivisionAlgebra;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: DivisionAlgebra> NcMatrix<S> {
    /// Row-major entries; fails unless `entries.len() == rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(NcMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::shape("matrix must have at least one row and column"));
        }
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::shape("ragged rows"));
        }
        Ok(NcMatrix {
            rows: n_rows,
            cols: n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        NcMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn row_vector(entries: Vec<S>) -> Self {
        NcMatrix {
            rows: 1,
            cols: entries.len(),
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::shape(format!(
                "{what} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sum")?;
        Ok(NcMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn mat_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "difference")?;
        Ok(NcMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    /// Shape-checked equality.
    pub fn mat_eq(&self, other: &Self) -> Result<bool> {
        self.same_shape(other, "comparison")?;
        Ok(self.entries == other.entries)
    }

    /// Multiplies every entry on the left by `a`.
    pub fn scalar_left_mul(&self, a: &S) -> Self {
        NcMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| a.mul(e)).collect(),
        }
    }

    /// Multiplies every entry on the right by `a`.
    pub fn scalar_right_mul(&self, a: &S) -> Self {
        NcMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(a)).collect(),
        }
    }

    /// `c[i][j] = Σ_k a[i][k] · b[k][j]`.
    pub fn rc_product(&self, b: &Self) -> Result<Self> {
        if self.cols != b.rows {
            return Err(Error::shape(format!(
                "rc-product of {}x{} and {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        Ok(Self::from_fn(self.rows, b.cols, |i, j| {
            (0..self.cols).fold(S::zero(), |acc, k| {
                acc.add(&self.get(i, k).mul(b.get(k, j)))
            })
        }))
    }

    /// `c[i][j] = Σ_k a[k][i] · b[j][k]`; the result is `a.cols × b.rows`.
    pub fn cr_product(&self, b: &Self) -> Result<Self> {
        if self.rows != b.cols {
            return Err(Error::shape(format!(
                "cr-product of {}x{} and {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        Ok(Self::from_fn(self.cols, b.rows, |i, j| {
            (0..self.rows).fold(S::zero(), |acc, k| {
                acc.add(&self.get(k, i).mul(b.get(j, k)))
            })
        }))
    }

    /// Two-sided inverse with respect to the rc-product.
    ///
    /// Gauss-Jordan elimination on `[g | I]`. Every row operation
    /// multiplies scalars on the left of row entries, so the accumulated
    /// operations form a left rc-factor.
    pub fn rc_inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::shape(format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut left: Vec<Vec<S>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let id = Self::identity(n);
        let mut right: Vec<Vec<S>> = (0..n).map(|i| id.row(i).to_vec()).collect();

        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !left[r][col].is_zero())
                .ok_or(Error::Singular)?;
            left.swap(col, pivot_row);
            right.swap(col, pivot_row);

            let p = left[col][col].inv()?;
            for e in left[col].iter_mut().chain(right[col].iter_mut()) {
                *e = p.mul(e);
            }

            for r in 0..n {
                if r == col || left[r][col].is_zero() {
                    continue;
                }
                let factor = left[r][col].clone();
                for c in 0..n {
                    left[r][c] = left[r][c].sub(&factor.mul(&left[col][c]));
                    right[r][c] = right[r][c].sub(&factor.mul(&right[col][c]));
                }
            }
        }
        Self::from_rows(right)
    }

    pub fn is_rc_nonsingular(&self) -> bool {
        self.is_square() && self.rc_inverse().is_ok()
    }
}

impl<S: fmt::Display> fmt::Display for NcMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for NcMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}: ", self.rows, self.cols)?;
        for (idx, e) in self.entries.iter().enumerate() {
            if idx > 0 {
                f.write_str(if idx % self.cols == 0 { ";" } else { "," })?;
            }
            write!(f, "{e:?}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Quaternion;

    fn m(s: &str) -> NcMatrix<Quaternion> {
        s.parse().unwrap()
    }

    /// Independent index-sum oracle: explicit triple loop with the
    /// requested factor order.
    fn oracle_rc(a: &NcMatrix<Quaternion>, b: &NcMatrix<Quaternion>) -> Vec<Vec<Quaternion>> {
        let mut out = vec![vec![Quaternion::zero(); b.cols()]; a.rows()];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..a.cols() {
                    *cell = &*cell + &(a.get(i, k) * b.get(k, j));
                }
            }
        }
        out
    }

    #[test]
    fn rc_examples() {
        let a = m("1,2i;j,k");
        assert_eq!(NcMatrix::identity(2).rc_product(&a).unwrap(), a);
        assert_eq!(m("i").rc_product(&m("j")).unwrap(), m("k"));

        let a = m("i,j;0,1");
        let b = m("j,0;k,1");
        let expected = m("k+i,j;k,1");
        assert_eq!(NcMatrix::from_rows(oracle_rc(&a, &b)).unwrap(), expected);
        assert_eq!(a.rc_product(&b).unwrap(), expected);
    }

    #[test]
    fn rc_shape_mismatch() {
        let a = m("1,2");
        assert!(matches!(a.rc_product(&a), Err(Error::ShapeMismatch(_))));
        assert_eq!(a.rc_product(&a.transpose()).unwrap().shape(), (1, 1));
    }

    #[test]
    fn cr_examples() {
        let a = m("1,i;j+k,3");
        assert_eq!(NcMatrix::identity(2).cr_product(&a).unwrap(), a.transpose());
        assert_eq!(m("i").cr_product(&m("j")).unwrap(), m("k"));
        // column (i; j) over row (1, k): i·1 + j·k = 2i
        let col = m("i;j");
        let row = m("1,k");
        assert_eq!(col.cr_product(&row).unwrap(), m("2i"));
        assert!(matches!(row.cr_product(&row), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn cr_and_rc_differ() {
        // 1x1 agreement
        assert_eq!(
            m("i").rc_product(&m("j")).unwrap(),
            m("i").cr_product(&m("j")).unwrap()
        );
        // cr(a, b) = (b rc a)ᵀ only over a commutative ring
        let a = m("i,0;0,1");
        let b = m("j,1;0,1");
        let cr = a.cr_product(&b).unwrap();
        assert_ne!(cr, a.rc_product(&b).unwrap());
        assert_ne!(cr, a.rc_product(&b).unwrap().transpose());
        assert_ne!(cr, b.rc_product(&a).unwrap().transpose());
    }

    #[test]
    fn inverse_examples() {
        let id = NcMatrix::<Quaternion>::identity(3);
        assert_eq!(id.rc_inverse().unwrap(), id);
        assert_eq!(m("i").rc_inverse().unwrap(), m("-i"));

        let g = m("i,0;0,1");
        let h = g.rc_inverse().unwrap();
        assert_eq!(h, m("-i,0;0,1"));
        assert_eq!(
            NcMatrix::from_rows(oracle_rc(&g, &h)).unwrap(),
            NcMatrix::identity(2)
        );
        assert_eq!(
            NcMatrix::from_rows(oracle_rc(&h, &g)).unwrap(),
            NcMatrix::identity(2)
        );
    }

    #[test]
    fn inverse_needs_row_swap() {
        let g = m("0,1;j,0");
        let h = g.rc_inverse().unwrap();
        assert_eq!(g.rc_product(&h).unwrap(), NcMatrix::identity(2));
        assert_eq!(h.rc_product(&g).unwrap(), NcMatrix::identity(2));
    }

    #[test]
    fn nonsingularity() {
        assert!(NcMatrix::<Quaternion>::identity(2).is_rc_nonsingular());
        assert!(!NcMatrix::<Quaternion>::zero(2, 2).is_rc_nonsingular());
        // second row is j times the first: j·1 = j, j·i = -k
        let g = m("1,i;j,-k");
        assert!(!g.is_rc_nonsingular());
        assert_eq!(g.rc_inverse(), Err(Error::Singular));
        // with k in the corner elimination leaves the pivot k - j·i = 2k
        let g = m("1,i;j,k");
        let h = g.rc_inverse().unwrap();
        assert_eq!(g.rc_product(&h).unwrap(), NcMatrix::identity(2));
        assert_eq!(h.rc_product(&g).unwrap(), NcMatrix::identity(2));
        assert!(matches!(
            m("1,2").rc_inverse(),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn elementwise_helpers() {
        let a = m("1,i;j,k");
        assert_eq!(a.mat_add(&NcMatrix::zero(2, 2)).unwrap(), a);
        assert_eq!(a.scalar_left_mul(&Quaternion::one()), a);
        assert_eq!(m("j").scalar_left_mul(&Quaternion::i()), m("k"));
        assert!(a.mat_eq(&a).unwrap());
        assert!(matches!(a.mat_eq(&m("1")), Err(Error::ShapeMismatch(_))));
        assert!(matches!(a.mat_add(&m("1")), Err(Error::ShapeMismatch(_))));
        assert!(matches!(
            NcMatrix::new(2, 2, vec![Quaternion::one()]),
            Err(Error::ShapeMismatch(_))
        ));
    }
}
