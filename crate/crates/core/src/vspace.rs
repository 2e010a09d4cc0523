//! Left vector spaces of columns over a division algebra, at desk scale.
//!
//! Vectors are identified with their coordinates relative to a fixed
//! reference frame `ε` (the identity basis). A [`Basis`] is an
//! rc-nonsingular matrix whose row `k` holds the reference coordinates of
//! basis vector `e_k`, so `e_k = Σ_p e[k][p] ε_p` with coefficients on the
//! left. Coordinates are 1×n rows; contracting them on the right by a
//! matrix reproduces the non-commutative factor order of the component
//! formulas.

use crate::error::{Error, Result};
use crate::ncmatrix::NcMatrix;
use crate::scalar::DivisionAlgebra;

/// The 1×n coordinate row `(v^1, …, v^n)` of a vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoordRow<S>(NcMatrix<S>);

impl<S: DivisionAlgebra> CoordRow<S> {
    pub fn new(coords: Vec<S>) -> Self {
        CoordRow(NcMatrix::row_vector(coords))
    }

    pub fn from_matrix(m: NcMatrix<S>) -> Result<Self> {
        if m.rows() != 1 {
            return Err(Error::shape(format!(
                "coordinate row must be 1xn, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(CoordRow(m))
    }

    pub fn zero(n: usize) -> Self {
        CoordRow(NcMatrix::zero(1, n))
    }

    /// The coordinate row `δ_k · b`: `b` in slot `k`, zero elsewhere.
    pub fn scaled_unit(n: usize, k: usize, b: &S) -> Self {
        CoordRow(NcMatrix::from_fn(1, n, |_, j| {
            if j == k {
                b.clone()
            } else {
                S::zero()
            }
        }))
    }

    pub fn unit(n: usize, k: usize) -> Self {
        Self::scaled_unit(n, k, &S::one())
    }

    pub fn dim(&self) -> usize {
        self.0.cols()
    }

    pub fn get(&self, k: usize) -> &S {
        self.0.get(0, k)
    }

    pub fn coords(&self) -> &[S] {
        self.0.entries()
    }

    pub fn as_matrix(&self) -> &NcMatrix<S> {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.0.mat_add(&other.0).map(CoordRow)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.0.mat_sub(&other.0).map(CoordRow)
    }

    /// `a·v`, the scalar acting on the left of every coordinate.
    pub fn left_scale(&self, a: &S) -> Self {
        CoordRow(self.0.scalar_left_mul(a))
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(S::is_zero)
    }

    /// `v · m` as an rc-product of the row with a matrix.
    pub fn times(&self, m: &NcMatrix<S>) -> Result<Self> {
        self.0.rc_product(m).map(CoordRow)
    }
}

/// A basis, stored as its coordinate matrix relative to the reference frame.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Basis<S> {
    e: NcMatrix<S>,
    inverse: NcMatrix<S>,
}

impl<S: DivisionAlgebra> Basis<S> {
    /// Rejects matrices that are not square and rc-nonsingular.
    pub fn new(e: NcMatrix<S>) -> Result<Self> {
        let inverse = e.rc_inverse()?;
        Ok(Basis { e, inverse })
    }

    /// The reference frame `ε`.
    pub fn reference(n: usize) -> Self {
        Basis {
            e: NcMatrix::identity(n),
            inverse: NcMatrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.e.rows()
    }

    pub fn matrix(&self) -> &NcMatrix<S> {
        &self.e
    }

    pub fn inverse_matrix(&self) -> &NcMatrix<S> {
        &self.inverse
    }

    pub fn into_matrix(self) -> NcMatrix<S> {
        self.e
    }
}

fn check_dim(what: &str, got: usize, expected: usize) -> Result<()> {
    if got != expected {
        return Err(Error::shape(format!(
            "{what}: dimension {got}, expected {expected}"
        )));
    }
    Ok(())
}

/// Reference-frame coordinates of `Σ_k v[k] e_k`.
pub fn expand_in_reference<S: DivisionAlgebra>(
    v: &CoordRow<S>,
    e: &Basis<S>,
) -> Result<CoordRow<S>> {
    check_dim("expand_in_reference", v.dim(), e.dim())?;
    v.times(&e.e)
}

/// Coordinates relative to `e` of the vector with reference coordinates `v_ref`.
pub fn coords_in_basis<S: DivisionAlgebra>(
    v_ref: &CoordRow<S>,
    e: &Basis<S>,
) -> Result<CoordRow<S>> {
    check_dim("coords_in_basis", v_ref.dim(), e.dim())?;
    v_ref.times(&e.inverse)
}

/// Matrix of a homomorphism `V_in → V_out` relative to a pair of bases.
///
/// Row `i` of `f` holds the `basis_out` coordinates of the image of the
/// `i`-th vector of `basis_in`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomMatrix<S> {
    f: NcMatrix<S>,
    basis_in: Basis<S>,
    basis_out: Basis<S>,
}

impl<S: DivisionAlgebra> HomMatrix<S> {
    pub fn n_in(&self) -> usize {
        self.f.rows()
    }

    pub fn n_out(&self) -> usize {
        self.f.cols()
    }

    pub fn matrix(&self) -> &NcMatrix<S> {
        &self.f
    }

    pub fn basis_in(&self) -> &Basis<S> {
        &self.basis_in
    }

    pub fn basis_out(&self) -> &Basis<S> {
        &self.basis_out
    }

    pub fn identity(basis: Basis<S>) -> Self {
        HomMatrix {
            f: NcMatrix::identity(basis.dim()),
            basis_in: basis.clone(),
            basis_out: basis,
        }
    }

    /// An endomorphism expressed in the same basis on both sides.
    pub fn is_endomorphism(&self) -> bool {
        self.f.is_square() && self.basis_in == self.basis_out
    }

    /// Inverse automorphism; `Error::Singular` if the matrix is not invertible.
    pub fn inverse(&self) -> Result<Self> {
        Ok(HomMatrix {
            f: self.f.rc_inverse()?,
            basis_in: self.basis_out.clone(),
            basis_out: self.basis_in.clone(),
        })
    }
}

pub fn hom_from_matrix<S: DivisionAlgebra>(
    f: NcMatrix<S>,
    basis_in: Basis<S>,
    basis_out: Basis<S>,
) -> Result<HomMatrix<S>> {
    if f.rows() != basis_in.dim() || f.cols() != basis_out.dim() {
        return Err(Error::shape(format!(
            "{}x{} matrix for bases of dimension {} and {}",
            f.rows(),
            f.cols(),
            basis_in.dim(),
            basis_out.dim()
        )));
    }
    Ok(HomMatrix {
        f,
        basis_in,
        basis_out,
    })
}

pub fn matrix_of_hom<S: DivisionAlgebra>(h: &HomMatrix<S>) -> NcMatrix<S> {
    h.f.clone()
}

/// `w[k] = Σ_i v[i] · f[i][k]`; `v` in `basis_in`, result in `basis_out`.
pub fn apply_hom<S: DivisionAlgebra>(h: &HomMatrix<S>, v: &CoordRow<S>) -> Result<CoordRow<S>> {
    check_dim("apply_hom", v.dim(), h.n_in())?;
    v.times(&h.f)
}

/// `h1` first, then `h2`.
pub fn compose_homs<S: DivisionAlgebra>(
    h1: &HomMatrix<S>,
    h2: &HomMatrix<S>,
) -> Result<HomMatrix<S>> {
    if h1.n_out() != h2.n_in() {
        return Err(Error::shape(format!(
            "composing maps into dimension {} and out of dimension {}",
            h1.n_out(),
            h2.n_in()
        )));
    }
    if h1.basis_out != h2.basis_in {
        return Err(Error::BasisMismatch);
    }
    Ok(HomMatrix {
        f: h1.f.rc_product(&h2.f)?,
        basis_in: h1.basis_in.clone(),
        basis_out: h2.basis_out.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Quaternion;

    fn m(s: &str) -> NcMatrix<Quaternion> {
        s.parse().unwrap()
    }

    fn row(s: &str) -> CoordRow<Quaternion> {
        CoordRow::from_matrix(m(s)).unwrap()
    }

    fn basis(s: &str) -> Basis<Quaternion> {
        Basis::new(m(s)).unwrap()
    }

    #[test]
    fn expand_examples() {
        let v = row("1+i,j");
        assert_eq!(expand_in_reference(&v, &Basis::reference(2)).unwrap(), v);
        assert_eq!(
            expand_in_reference(&row("1,0"), &basis("i,0;0,1")).unwrap(),
            row("i,0")
        );
        // j·i = -k, 1·k = k
        assert_eq!(
            expand_in_reference(&row("j,1"), &basis("i,0;0,k")).unwrap(),
            row("-k,k")
        );
        assert!(matches!(
            expand_in_reference(&row("1"), &basis("i,0;0,k")),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn coords_examples() {
        let e = basis("i,0;0,1");
        assert_eq!(coords_in_basis(&row("i,0"), &e).unwrap(), row("1,0"));
        let v = row("2-j,1/2k");
        assert_eq!(coords_in_basis(&v, &Basis::reference(2)).unwrap(), v);
        let e = basis("1,i;j,k");
        let back = coords_in_basis(&expand_in_reference(&v, &e).unwrap(), &e).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn basis_rejects_singular() {
        assert_eq!(Basis::new(m("1,i;j,-k")), Err(Error::Singular));
        assert!(matches!(Basis::new(m("1,i")), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn apply_examples() {
        let e = Basis::reference(2);
        let id = hom_from_matrix(NcMatrix::identity(2), e.clone(), e.clone()).unwrap();
        let v = row("1,i");
        assert_eq!(apply_hom(&id, &v).unwrap(), v);

        let e1 = Basis::reference(1);
        let h = hom_from_matrix(m("j"), e1.clone(), e1).unwrap();
        assert_eq!(apply_hom(&h, &row("i")).unwrap(), row("k"));

        // (1·j + i·1, 1·0 + i·k) = (i+j, -j)
        let h = hom_from_matrix(m("j,0;1,k"), e.clone(), e).unwrap();
        assert_eq!(apply_hom(&h, &v).unwrap(), row("i+j,-j"));
    }

    #[test]
    fn matrix_rows_are_images_of_unit_rows() {
        let e = basis("1,i;j,k");
        let f = m("j,0,1;1,k,i");
        let h = hom_from_matrix(f.clone(), e, Basis::reference(3)).unwrap();
        assert_eq!(matrix_of_hom(&h), f);
        for i in 0..2 {
            let image = apply_hom(&h, &CoordRow::unit(2, i)).unwrap();
            assert_eq!(image.coords(), f.row(i));
        }
        assert!(matches!(
            hom_from_matrix(f, Basis::reference(3), Basis::reference(3)),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn distinct_matrices_differ_on_a_unit_row() {
        let e = Basis::reference(2);
        let h1 = hom_from_matrix(m("1,i;j,k"), e.clone(), e.clone()).unwrap();
        let h2 = hom_from_matrix(m("1,i;j,-k"), e.clone(), e).unwrap();
        let differs = (0..2).any(|i| {
            let u = CoordRow::unit(2, i);
            apply_hom(&h1, &u).unwrap() != apply_hom(&h2, &u).unwrap()
        });
        assert!(differs);
    }

    #[test]
    fn composition() {
        let e1 = Basis::reference(1);
        let h1 = hom_from_matrix(m("i"), e1.clone(), e1.clone()).unwrap();
        let h2 = hom_from_matrix(m("j"), e1.clone(), e1.clone()).unwrap();
        assert_eq!(compose_homs(&h1, &h2).unwrap().matrix(), &m("k"));
        let id = HomMatrix::identity(e1);
        assert_eq!(compose_homs(&h1, &id).unwrap(), h1);

        let other = hom_from_matrix(m("i"), basis("j"), basis("j")).unwrap();
        assert_eq!(compose_homs(&h1, &other), Err(Error::BasisMismatch));
    }
}
