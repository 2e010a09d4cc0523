//! Skew-symmetric bilinear maps.
//!
//! A bilinear tensor-sum map `h` induces the skew map
//! `(u, v) ↦ ½ (h(u, v) − h(v, u))`. Componentwise it contracts each term
//! `a₀ ⊗ a₁ ⊗ a₂` of `h^i_{jk}` with the antisymmetrized pair
//! `u^j ⊗ v^k − v^j ⊗ u^k` ([`DetStar`]).

use crate::error::{Error, Result};
use crate::scalar::DivisionAlgebra;
use crate::transform::{passive_apply_basis, passive_coords_forward, PassiveTransform};
use crate::vspace::{expand_in_reference, Basis, CoordRow};

use super::tensor::{apply_polylinear, eval_term, transform_polylinear, TensorPolyMap};

fn require_bilinear<S>(h: &TensorPolyMap<S>) -> Result<()> {
    if h.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: h.arity(),
        });
    }
    Ok(())
}

/// `½ (h(u, v) − h(v, u))`.
pub fn skew_apply<S: DivisionAlgebra>(
    h: &TensorPolyMap<S>,
    u: &CoordRow<S>,
    v: &CoordRow<S>,
) -> Result<CoordRow<S>> {
    require_bilinear(h)?;
    let uv = apply_polylinear(h, &[u.clone(), v.clone()])?;
    let vu = apply_polylinear(h, &[v.clone(), u.clone()])?;
    Ok(uv.sub(&vu)?.left_scale(&S::half()))
}

/// The formal difference `u^j ⊗ v^k − v^j ⊗ u^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DetStar<S> {
    pub plus: (S, S),
    pub minus: (S, S),
}

pub fn detstar<S: DivisionAlgebra>(uj: &S, vj: &S, uk: &S, vk: &S) -> DetStar<S> {
    DetStar {
        plus: (uj.clone(), vk.clone()),
        minus: (vj.clone(), uk.clone()),
    }
}

impl<S: DivisionAlgebra> DetStar<S> {
    /// Contracts with `a₀ ⊗ a₁ ⊗ a₂` through `x ⊗ y ↦ a₀·x·a₁·y·a₂`.
    pub fn contract(&self, term: &[S]) -> S {
        let plus = eval_term(term, &[&self.plus.0, &self.plus.1]);
        let minus = eval_term(term, &[&self.minus.0, &self.minus.1]);
        plus.sub(&minus)
    }
}

/// [`skew_apply`] computed componentwise:
/// `w^i = ½ Σ_{j,k} Σ_s h^i_{jk,s} ∘ det*(u^j, v^j, u^k, v^k)`.
pub fn skew_apply_detstar<S: DivisionAlgebra>(
    h: &TensorPolyMap<S>,
    u: &CoordRow<S>,
    v: &CoordRow<S>,
) -> Result<CoordRow<S>> {
    require_bilinear(h)?;
    if u.dim() != h.dim() || v.dim() != h.dim() {
        return Err(Error::shape("skew arguments must match the map dimension"));
    }
    let half = S::half();
    let mut out = vec![S::zero(); h.dim()];
    for (i, js, terms) in h.components() {
        let (j, k) = (js[0], js[1]);
        let d = detstar(u.get(j), v.get(j), u.get(k), v.get(k));
        for term in terms {
            out[i] = out[i].add(&d.contract(term));
        }
    }
    Ok(CoordRow::new(out.iter().map(|x| half.mul(x)).collect()))
}

/// Skew covariance at one pair of arguments given relative to `e₂ = g·e₁`.
pub fn skew_covariance_at<S: DivisionAlgebra>(
    e1: &Basis<S>,
    h1: &TensorPolyMap<S>,
    h2: &TensorPolyMap<S>,
    g: &PassiveTransform<S>,
    u2: &CoordRow<S>,
    v2: &CoordRow<S>,
) -> Result<bool> {
    let e2 = passive_apply_basis(g, e1)?;
    let u1 = passive_coords_forward(g, u2)?;
    let v1 = passive_coords_forward(g, v2)?;
    let lhs = expand_in_reference(&skew_apply(h2, u2, v2)?, &e2)?;
    let rhs = expand_in_reference(&skew_apply(h1, &u1, &v1)?, e1)?;
    Ok(lhs == rhs)
}

/// Transforms `h1` by `g` and checks skew covariance on every pair of
/// arguments `(δ_q · b, δ_r · b')` with `b, b'` in the basis of the algebra
/// over its center. Both sides are biadditive and commute with the center
/// in each slot, so this covers all arguments.
pub fn skew_transform_check<S: DivisionAlgebra>(
    h1: &TensorPolyMap<S>,
    g: &PassiveTransform<S>,
) -> Result<bool> {
    require_bilinear(h1)?;
    let n = h1.dim();
    let e1 = Basis::reference(n);
    let h2 = transform_polylinear(h1, g)?;
    let basis = S::center_basis();
    for q in 0..n {
        for b in &basis {
            let u2 = CoordRow::scaled_unit(n, q, b);
            for r in 0..n {
                for b2 in &basis {
                    let v2 = CoordRow::scaled_unit(n, r, b2);
                    if !skew_covariance_at(&e1, h1, &h2, g, &u2, &v2)? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Quaternion;

    type Q = Quaternion;

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    fn row(s: &str) -> CoordRow<Q> {
        CoordRow::from_matrix(s.parse().unwrap()).unwrap()
    }

    fn ones() -> TensorPolyMap<Q> {
        let mut h = TensorPolyMap::zero(2, 1).unwrap();
        h.push_term(0, &[0, 0], vec![Q::one(), Q::one(), Q::one()])
            .unwrap();
        h
    }

    #[test]
    fn skew_examples() {
        let h = ones();
        // ½(i·j − j·i) = ½(k + k) = k
        assert_eq!(skew_apply(&h, &row("i"), &row("j")).unwrap(), row("k"));
        assert_eq!(skew_apply(&h, &row("j"), &row("i")).unwrap(), row("-k"));
        assert!(skew_apply(&h, &row("1+i"), &row("1+i")).unwrap().is_zero());
    }

    #[test]
    fn detstar_examples() {
        let d = detstar(&q("i"), &q("j"), &q("i"), &q("j"));
        assert_eq!(d.contract(&[Q::one(), Q::one(), Q::one()]), q("2k"));
        let u = detstar(&q("1+k"), &q("1+k"), &q("j"), &q("j"));
        // u = v: u^j ⊗ v^k − v^j ⊗ u^k = u^j ⊗ u^k − u^j ⊗ u^k
        assert_eq!(u.plus, u.minus);
        assert!(u.contract(&[q("i"), q("j"), q("k")]).is_zero());
    }

    #[test]
    fn detstar_route_matches_direct() {
        let mut h = TensorPolyMap::zero(2, 2).unwrap();
        h.push_term(0, &[0, 1], vec![q("i"), q("1+j"), q("k")])
            .unwrap();
        h.push_term(1, &[1, 0], vec![q("2"), q("j"), q("1-i")])
            .unwrap();
        h.push_term(1, &[1, 1], vec![q("k"), q("1/2"), q("i")])
            .unwrap();
        let (u, v) = (row("1+i,j"), row("k,2-j"));
        assert_eq!(
            skew_apply_detstar(&h, &u, &v).unwrap(),
            skew_apply(&h, &u, &v).unwrap()
        );
    }

    #[test]
    fn transform_check_small() {
        let h = ones();
        assert!(skew_transform_check(&h, &PassiveTransform::identity(1)).unwrap());
        let mut h = TensorPolyMap::zero(2, 1).unwrap();
        h.push_term(0, &[0, 0], vec![q("i"), q("1+k"), q("j")])
            .unwrap();
        let g = PassiveTransform::new("2-j".parse().unwrap()).unwrap();
        assert!(skew_transform_check(&h, &g).unwrap());
    }

    #[test]
    fn requires_bilinear() {
        let lin = TensorPolyMap::<Q>::identity(1).unwrap();
        assert!(matches!(
            skew_apply(&lin, &row("1"), &row("1")),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        ));
    }
}
