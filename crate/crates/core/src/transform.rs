//! Passive and active transformations of the basis manifold.
//!
//! A passive transformation `g` acts on bases from the left,
//! `e₂ = g · e₁`, and leaves vectors alone; coordinates change by
//! `v₁ = v₂ · g`. An active transformation `a` acts on bases from the
//! right, `e ↦ e · a`, and moves every vector along with the basis, so
//! coordinates are unchanged. The two actions commute by associativity of
//! the rc-product.
//!
//! The symmetry group is the full group of rc-nonsingular matrices.

use crate::error::{Error, Result};
use crate::ncmatrix::NcMatrix;
use crate::scalar::DivisionAlgebra;
use crate::vspace::{Basis, CoordRow};

/// An rc-nonsingular matrix with its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Invertible<S> {
    m: NcMatrix<S>,
    inverse: NcMatrix<S>,
}

impl<S: DivisionAlgebra> Invertible<S> {
    fn new(m: NcMatrix<S>) -> Result<Self> {
        let inverse = m.rc_inverse()?;
        Ok(Invertible { m, inverse })
    }

    fn identity(n: usize) -> Self {
        Invertible {
            m: NcMatrix::identity(n),
            inverse: NcMatrix::identity(n),
        }
    }

    fn dim(&self) -> usize {
        self.m.rows()
    }

    fn inverted(&self) -> Self {
        Invertible {
            m: self.inverse.clone(),
            inverse: self.m.clone(),
        }
    }

    /// `self · rhs`; the inverse is `rhs⁻¹ · self⁻¹`.
    fn then_left_of(&self, rhs: &Self) -> Result<Self> {
        same_dim(self.dim(), rhs.dim())?;
        Ok(Invertible {
            m: self.m.rc_product(&rhs.m)?,
            inverse: rhs.inverse.rc_product(&self.inverse)?,
        })
    }
}

fn same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::shape(format!("dimension {a} vs {b}")));
    }
    Ok(())
}

/// Left action `e ↦ g · e` on bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PassiveTransform<S>(Invertible<S>);

/// Right action `e ↦ e · a` on bases, moving vectors along.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ActiveTransform<S>(Invertible<S>);

macro_rules! transform_common {
    ($ty:ident) => {
        impl<S: DivisionAlgebra> $ty<S> {
            /// `Error::Singular` unless the matrix is rc-nonsingular.
            pub fn new(m: NcMatrix<S>) -> Result<Self> {
                Invertible::new(m).map($ty)
            }

            pub fn identity(n: usize) -> Self {
                $ty(Invertible::identity(n))
            }

            pub fn dim(&self) -> usize {
                self.0.dim()
            }

            pub fn matrix(&self) -> &NcMatrix<S> {
                &self.0.m
            }

            pub fn inverse_matrix(&self) -> &NcMatrix<S> {
                &self.0.inverse
            }

            pub fn inverse(&self) -> Self {
                $ty(self.0.inverted())
            }
        }
    };
}

transform_common!(PassiveTransform);
transform_common!(ActiveTransform);

/// `e₂ = g · e₁`: new basis vector `e₂ₗ = Σ_p g[l][p] e₁ₚ`.
pub fn passive_apply_basis<S: DivisionAlgebra>(
    g: &PassiveTransform<S>,
    e: &Basis<S>,
) -> Result<Basis<S>> {
    same_dim(g.dim(), e.dim())?;
    Basis::new(g.matrix().rc_product(e.matrix())?)
}

/// Coordinates relative to `e₁` from coordinates `v₂` relative to `e₂ = g · e₁`:
/// `v₁[j] = Σ_k v₂[k] · g[k][j]`.
pub fn passive_coords_forward<S: DivisionAlgebra>(
    g: &PassiveTransform<S>,
    v2: &CoordRow<S>,
) -> Result<CoordRow<S>> {
    same_dim(g.dim(), v2.dim())?;
    v2.times(g.matrix())
}

/// `v₂ = v₁ · g⁻¹`, the inverse of [`passive_coords_forward`].
pub fn passive_coords_backward<S: DivisionAlgebra>(
    g: &PassiveTransform<S>,
    v1: &CoordRow<S>,
) -> Result<CoordRow<S>> {
    same_dim(g.dim(), v1.dim())?;
    v1.times(g.inverse_matrix())
}

/// `e ↦ e · a`.
pub fn active_apply<S: DivisionAlgebra>(a: &ActiveTransform<S>, e: &Basis<S>) -> Result<Basis<S>> {
    same_dim(a.dim(), e.dim())?;
    Basis::new(e.matrix().rc_product(a.matrix())?)
}

/// The endomorphism behind an active transformation, on reference
/// coordinates: `x ↦ x · a`.
pub fn active_apply_vector<S: DivisionAlgebra>(
    a: &ActiveTransform<S>,
    v_ref: &CoordRow<S>,
) -> Result<CoordRow<S>> {
    same_dim(a.dim(), v_ref.dim())?;
    v_ref.times(a.matrix())
}

/// The unique passive transformation taking `e1` to `e2`: `g = e₂ · e₁⁻¹`.
pub fn transition_matrix<S: DivisionAlgebra>(
    e1: &Basis<S>,
    e2: &Basis<S>,
) -> Result<PassiveTransform<S>> {
    same_dim(e1.dim(), e2.dim())?;
    let g = e2.matrix().rc_product(e1.inverse_matrix())?;
    let inverse = e1.matrix().rc_product(e2.inverse_matrix())?;
    Ok(PassiveTransform(Invertible { m: g, inverse }))
}

/// Apply `g1` first, then `g2`: the composite is `g2 · g1`.
pub fn compose_passive<S: DivisionAlgebra>(
    g2: &PassiveTransform<S>,
    g1: &PassiveTransform<S>,
) -> Result<PassiveTransform<S>> {
    g2.0.then_left_of(&g1.0).map(PassiveTransform)
}

/// Apply `a1` first, then `a2`: the composite is `a1 · a2`.
pub fn compose_active<S: DivisionAlgebra>(
    a2: &ActiveTransform<S>,
    a1: &ActiveTransform<S>,
) -> Result<ActiveTransform<S>> {
    a1.0.then_left_of(&a2.0).map(ActiveTransform)
}
