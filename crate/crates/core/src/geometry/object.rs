use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ncmatrix::NcMatrix;
use crate::scalar::DivisionAlgebra;
use crate::transform::{passive_apply_basis, transition_matrix, PassiveTransform};
use crate::vspace::{hom_from_matrix, Basis, CoordRow, HomMatrix};

type RepFn<S> = dyn Fn(&NcMatrix<S>) -> NcMatrix<S> + Send + Sync;

/// A representation `F` of the group of rc-nonsingular `n×n` matrices by
/// rc-nonsingular `dim_w×dim_w` matrices.
///
/// `F` must satisfy `F(g·h) = F(g)·F(h)`; this is not checked on
/// construction, see [`GroupRep::is_homomorphism_on`].
#[derive(Clone)]
pub struct GroupRep<S> {
    name: String,
    dim_w: usize,
    map: Arc<RepFn<S>>,
}

impl<S: DivisionAlgebra + 'static> GroupRep<S> {
    pub fn new(
        name: impl Into<String>,
        dim_w: usize,
        map: impl Fn(&NcMatrix<S>) -> NcMatrix<S> + Send + Sync + 'static,
    ) -> Self {
        GroupRep {
            name: name.into(),
            dim_w,
            map: Arc::new(map),
        }
    }

    /// `F(g) = I` on a `dim_w`-dimensional space.
    pub fn trivial(dim_w: usize) -> Self {
        Self::new("trivial", dim_w, move |_| NcMatrix::identity(dim_w))
    }

    /// `F(g) = g`; geometric objects of this kind are vectors of `V`.
    pub fn tautological(n: usize) -> Self {
        Self::new("tautological", n, |g| g.clone())
    }
}

impl<S: DivisionAlgebra> GroupRep<S> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim_w(&self) -> usize {
        self.dim_w
    }

    pub fn apply(&self, g: &NcMatrix<S>) -> Result<NcMatrix<S>> {
        let f = (self.map)(g);
        if f.shape() != (self.dim_w, self.dim_w) {
            return Err(Error::shape(format!(
                "representation {} produced a {}x{} matrix, expected {d}x{d}",
                self.name,
                f.rows(),
                f.cols(),
                d = self.dim_w
            )));
        }
        Ok(f)
    }

    /// `F(g)⁻¹`.
    pub fn apply_inverse(&self, g: &NcMatrix<S>) -> Result<NcMatrix<S>> {
        self.apply(g)?.rc_inverse()
    }

    /// Spot check of `F(g·h) = F(g)·F(h)` and `F(I) = I`.
    pub fn is_homomorphism_on(&self, g: &NcMatrix<S>, h: &NcMatrix<S>) -> Result<bool> {
        let n = g.rows();
        let unit = self.apply(&NcMatrix::identity(n))? == NcMatrix::identity(self.dim_w);
        let lhs = self.apply(&g.rc_product(h)?)?;
        let rhs = self.apply(g)?.rc_product(&self.apply(h)?)?;
        Ok(unit && lhs == rhs)
    }
}

impl<S> fmt::Debug for GroupRep<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupRep")
            .field("name", &self.name)
            .field("dim_w", &self.dim_w)
            .finish()
    }
}

/// Coordinates `w` in the representation space, together with the basis
/// of `V` they currently refer to.
#[derive(Clone, Debug)]
pub struct GeometricObject<S> {
    rep: GroupRep<S>,
    w: CoordRow<S>,
    v_basis: Basis<S>,
}

impl<S: DivisionAlgebra> GeometricObject<S> {
    pub fn new(rep: GroupRep<S>, w: CoordRow<S>, v_basis: Basis<S>) -> Result<Self> {
        if w.dim() != rep.dim_w() {
            return Err(Error::shape(format!(
                "object coordinates of dimension {} for a representation of dimension {}",
                w.dim(),
                rep.dim_w()
            )));
        }
        Ok(GeometricObject { rep, w, v_basis })
    }

    pub fn rep(&self) -> &GroupRep<S> {
        &self.rep
    }

    pub fn coords(&self) -> &CoordRow<S> {
        &self.w
    }

    pub fn v_basis(&self) -> &Basis<S> {
        &self.v_basis
    }

    /// The basis-independent value `w · F(e)`, where `e` is the matrix of
    /// the current basis of `V`. For the tautological representation this
    /// is the reference-frame expansion of the vector.
    pub fn representative(&self) -> Result<CoordRow<S>> {
        self.w.times(&self.rep.apply(self.v_basis.matrix())?)
    }
}

/// Refers the object to `g · e`: `w₂ = w₁ · F(g)⁻¹`.
pub fn geo_transform<S: DivisionAlgebra>(
    obj: &GeometricObject<S>,
    g: &PassiveTransform<S>,
) -> Result<GeometricObject<S>> {
    if g.dim() != obj.v_basis.dim() {
        return Err(Error::shape(format!(
            "transformation of dimension {} for an object over dimension {}",
            g.dim(),
            obj.v_basis.dim()
        )));
    }
    let f_inv = obj.rep.apply_inverse(g.matrix())?;
    Ok(GeometricObject {
        rep: obj.rep.clone(),
        w: obj.w.times(&f_inv)?,
        v_basis: passive_apply_basis(g, &obj.v_basis)?,
    })
}

/// Acting by `g` and then by `h` equals acting once by `h · g`:
/// `(w · F(g)⁻¹) · F(h)⁻¹ = w · F(h·g)⁻¹`.
pub fn rep_action_law_check<S: DivisionAlgebra>(
    rep: &GroupRep<S>,
    g: &NcMatrix<S>,
    h: &NcMatrix<S>,
    w: &CoordRow<S>,
) -> bool {
    let check = || -> Result<bool> {
        let seq = w
            .times(&rep.apply_inverse(g)?)?
            .times(&rep.apply_inverse(h)?)?;
        let once = w.times(&rep.apply_inverse(&h.rc_product(g)?)?)?;
        Ok(seq == once)
    };
    check().unwrap_or(false)
}

/// Whether two objects of the same representation lie on one orbit, i.e.
/// `b` is `a` referred to another basis.
pub fn same_orbit<S: DivisionAlgebra>(
    a: &GeometricObject<S>,
    b: &GeometricObject<S>,
) -> Result<bool> {
    let g = transition_matrix(&a.v_basis, &b.v_basis)?;
    Ok(geo_transform(a, &g)?.w == b.w)
}

/// Matrix of an endomorphism after the basis change `e₂ = g · e₁`:
/// `f₂ = g · f₁ · g⁻¹`.
pub fn endo_transform<S: DivisionAlgebra>(
    f1: &HomMatrix<S>,
    g: &PassiveTransform<S>,
) -> Result<HomMatrix<S>> {
    if !f1.matrix().is_square() || g.dim() != f1.n_in() {
        return Err(Error::shape(format!(
            "endomorphism {}x{} with transformation of dimension {}",
            f1.n_in(),
            f1.n_out(),
            g.dim()
        )));
    }
    if f1.basis_in() != f1.basis_out() {
        return Err(Error::BasisMismatch);
    }
    let f2 = g
        .matrix()
        .rc_product(f1.matrix())?
        .rc_product(g.inverse_matrix())?;
    let e2 = passive_apply_basis(g, f1.basis_in())?;
    hom_from_matrix(f2, e2.clone(), e2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Quaternion;
    use crate::vspace::{apply_hom, expand_in_reference};

    type Q = Quaternion;

    fn m(s: &str) -> NcMatrix<Q> {
        s.parse().unwrap()
    }

    fn row(s: &str) -> CoordRow<Q> {
        CoordRow::from_matrix(m(s)).unwrap()
    }

    fn passive(s: &str) -> PassiveTransform<Q> {
        PassiveTransform::new(m(s)).unwrap()
    }

    #[test]
    fn geo_transform_examples() {
        let e = Basis::reference(2);
        let obj = GeometricObject::new(GroupRep::tautological(2), row("1,0"), e.clone()).unwrap();

        let same = geo_transform(&obj, &PassiveTransform::identity(2)).unwrap();
        assert_eq!(same.coords(), obj.coords());
        assert_eq!(same.v_basis(), obj.v_basis());

        let g = passive("i,0;0,1");
        let moved = geo_transform(&obj, &g).unwrap();
        assert_eq!(moved.coords(), &row("-i,0"));
        assert_eq!(moved.v_basis().matrix(), g.matrix());
        assert_eq!(
            moved.representative().unwrap(),
            obj.representative().unwrap()
        );
        assert_eq!(
            moved.representative().unwrap(),
            expand_in_reference(moved.coords(), moved.v_basis()).unwrap()
        );

        let scalar = GeometricObject::new(GroupRep::trivial(1), row("j"), e).unwrap();
        let moved = geo_transform(&scalar, &passive("1,k;i,2")).unwrap();
        assert_eq!(moved.coords(), scalar.coords());
    }

    #[test]
    fn object_dimension_checked() {
        assert!(matches!(
            GeometricObject::new(
                GroupRep::<Q>::tautological(2),
                row("1"),
                Basis::reference(2)
            ),
            Err(Error::ShapeMismatch(_))
        ));
        let obj = GeometricObject::new(GroupRep::tautological(2), row("1,0"), Basis::reference(2))
            .unwrap();
        assert!(matches!(
            geo_transform(&obj, &passive("i")),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn action_law() {
        let id = NcMatrix::<Q>::identity(2);
        let w = row("1,j");
        let taut = GroupRep::tautological(2);
        assert!(rep_action_law_check(&taut, &id, &id, &w));
        let g = m("1,i;j,k");
        let h = m("2,k;0,1+j");
        assert!(rep_action_law_check(&taut, &g, &h, &w));
        assert!(rep_action_law_check(&GroupRep::trivial(2), &g, &h, &w));
        assert!(taut.is_homomorphism_on(&g, &h).unwrap());

        // F(g) = g⁻¹ reverses products, so the action law must fail
        let broken = GroupRep::new("inverse", 2, |g: &NcMatrix<Q>| g.rc_inverse().unwrap());
        assert!(!broken.is_homomorphism_on(&g, &h).unwrap());
        assert!(!rep_action_law_check(&broken, &g, &h, &w));
    }

    #[test]
    fn orbits() {
        let e = Basis::new(m("1,i;j,k")).unwrap();
        let obj = GeometricObject::new(GroupRep::tautological(2), row("1,j"), e).unwrap();
        let moved = geo_transform(&obj, &passive("2,k;0,1+j")).unwrap();
        assert!(same_orbit(&obj, &moved).unwrap());
        let other = GeometricObject::new(
            GroupRep::tautological(2),
            row("1,k"),
            moved.v_basis().clone(),
        )
        .unwrap();
        assert!(!same_orbit(&obj, &other).unwrap());
    }

    #[test]
    fn endo_examples() {
        let e = Basis::reference(2);
        let f1 = hom_from_matrix(m("j,0;0,1"), e.clone(), e.clone()).unwrap();
        let id = endo_transform(&f1, &PassiveTransform::identity(2)).unwrap();
        assert_eq!(id.matrix(), f1.matrix());

        // i·j·(-i) = k·(-i) = -j
        let g = passive("i,0;0,1");
        let f2 = endo_transform(&f1, &g).unwrap();
        assert_eq!(f2.matrix(), &m("-j,0;0,1"));

        let v2 = row("1+k,j");
        let v1 = crate::transform::passive_coords_forward(&g, &v2).unwrap();
        assert_eq!(
            expand_in_reference(&apply_hom(&f2, &v2).unwrap(), f2.basis_out()).unwrap(),
            expand_in_reference(&apply_hom(&f1, &v1).unwrap(), f1.basis_out()).unwrap()
        );

        let non_endo = hom_from_matrix(m("1,0;0,1"), e, Basis::new(m("i,0;0,1")).unwrap()).unwrap();
        assert_eq!(
            endo_transform(&non_endo, &g).unwrap_err(),
            Error::BasisMismatch
        );
    }
}
