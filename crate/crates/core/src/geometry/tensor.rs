//! Tensor-sum coordinates of linear and polylinear maps.
//!
//! An `n`-linear map `a: V × … × V → V` is stored through its components
//! `a^i_{j₁…jₙ}`, each a finite sum of elementary tensors
//! `a_{s·0} ⊗ a_{s·1} ⊗ … ⊗ a_{s·n}`. A component acts on one scalar per
//! slot as
//!
//! ```text
//! (x₁, …, xₙ) ↦ Σ_s a_{s·0} · x₁ · a_{s·1} · x₂ · … · xₙ · a_{s·n}
//! ```
//!
//! with factors multiplied strictly left to right. For `n = 1` this is the
//! sandwich `x ↦ Σ_s a_{s·0} · x · a_{s·1}`.
//!
//! Term lists are not normalized, so equal maps can have different
//! coordinates; compare with [`maps_equal`].

use crate::error::{Error, Result};
use crate::ncmatrix::NcMatrix;
use crate::scalar::DivisionAlgebra;
use crate::transform::{passive_apply_basis, passive_coords_forward, PassiveTransform};
use crate::vspace::{expand_in_reference, Basis, CoordRow};

/// One elementary tensor `a_{s·0} ⊗ … ⊗ a_{s·n}`.
pub type Term<S> = Vec<S>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPolyMap<S> {
    arity: usize,
    dim: usize,
    /// Indexed by [`TensorPolyMap::component_index`].
    components: Vec<Vec<Term<S>>>,
}

impl<S> TensorPolyMap<S> {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl<S: DivisionAlgebra> TensorPolyMap<S> {
    /// The zero map: every component has an empty term list.
    pub fn zero(arity: usize, dim: usize) -> Result<Self> {
        if arity == 0 || dim == 0 {
            return Err(Error::shape("arity and dimension must be positive"));
        }
        let count = dim.pow(arity as u32 + 1);
        Ok(TensorPolyMap {
            arity,
            dim,
            components: vec![Vec::new(); count],
        })
    }

    /// The identity linear map, `1 ⊗ 1` on the diagonal.
    pub fn identity(dim: usize) -> Result<Self> {
        let mut a = Self::zero(1, dim)?;
        for i in 0..dim {
            a.push_term(i, &[i], vec![S::one(), S::one()])?;
        }
        Ok(a)
    }

    /// The linear map with matrix `f` acting on coordinate rows by
    /// `w[k] = Σ_i v[i] · f[i][k]`, written as components `1 ⊗ f[j][i]`.
    pub fn from_matrix(f: &NcMatrix<S>) -> Result<Self> {
        if !f.is_square() {
            return Err(Error::shape("linear map matrix must be square"));
        }
        let n = f.rows();
        let mut a = Self::zero(1, n)?;
        for i in 0..n {
            for j in 0..n {
                if !f.get(j, i).is_zero() {
                    a.push_term(i, &[j], vec![S::one(), f.get(j, i).clone()])?;
                }
            }
        }
        Ok(a)
    }

    pub fn term_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// Flat position of component `(i; j₁, …, jₙ)`, read as the base-`dim`
    /// number `i j₁ … jₙ`.
    pub fn component_index(&self, i: usize, js: &[usize]) -> Result<usize> {
        if js.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: js.len(),
            });
        }
        std::iter::once(&i).chain(js).try_fold(0, |acc, &idx| {
            if idx >= self.dim {
                Err(Error::shape(format!(
                    "index {idx} out of range for dimension {}",
                    self.dim
                )))
            } else {
                Ok(acc * self.dim + idx)
            }
        })
    }

    /// Inverse of [`component_index`](Self::component_index).
    fn split_index(&self, mut flat: usize) -> (usize, Vec<usize>) {
        let mut js = vec![0; self.arity];
        for slot in js.iter_mut().rev() {
            *slot = flat % self.dim;
            flat /= self.dim;
        }
        (flat, js)
    }

    pub fn terms(&self, i: usize, js: &[usize]) -> Result<&[Term<S>]> {
        Ok(&self.components[self.component_index(i, js)?])
    }

    pub fn push_term(&mut self, i: usize, js: &[usize], factors: Term<S>) -> Result<()> {
        if factors.len() != self.arity + 1 {
            return Err(Error::ArityMismatch {
                expected: self.arity + 1,
                got: factors.len(),
            });
        }
        let idx = self.component_index(i, js)?;
        self.components[idx].push(factors);
        Ok(())
    }

    /// All components with their indices `(i, [j₁, …, jₙ])`.
    pub fn components(&self) -> impl Iterator<Item = (usize, Vec<usize>, &[Term<S>])> + '_ {
        self.components.iter().enumerate().map(|(flat, terms)| {
            let (i, js) = self.split_index(flat);
            (i, js, terms.as_slice())
        })
    }

    /// Sum of component `(i; js)` evaluated on one scalar per slot.
    fn eval_component(&self, i: usize, js: &[usize], xs: &[&S]) -> S {
        let idx = self
            .component_index(i, js)
            .expect("component index in range");
        self.components[idx]
            .iter()
            .fold(S::zero(), |acc, term| acc.add(&eval_term(term, xs)))
    }
}

/// `a₀ · x₁ · a₁ · … · xₙ · aₙ`.
pub(crate) fn eval_term<S: DivisionAlgebra>(term: &[S], xs: &[&S]) -> S {
    let mut acc = term[0].clone();
    for (x, a) in xs.iter().zip(&term[1..]) {
        acc = acc.mul(x).mul(a);
    }
    acc
}

fn check_inputs<S: DivisionAlgebra>(a: &TensorPolyMap<S>, vs: &[CoordRow<S>]) -> Result<()> {
    if vs.len() != a.arity {
        return Err(Error::ArityMismatch {
            expected: a.arity,
            got: vs.len(),
        });
    }
    if let Some(v) = vs.iter().find(|v| v.dim() != a.dim) {
        return Err(Error::shape(format!(
            "argument of dimension {} for a map over dimension {}",
            v.dim(),
            a.dim
        )));
    }
    Ok(())
}

/// `out[i] = Σ_{j₁…jₙ} Σ_s a_{s·0} · v₁[j₁] · a_{s·1} · … · vₙ[jₙ] · a_{s·n}`.
pub fn apply_polylinear<S: DivisionAlgebra>(
    a: &TensorPolyMap<S>,
    vs: &[CoordRow<S>],
) -> Result<CoordRow<S>> {
    check_inputs(a, vs)?;
    let mut out = vec![S::zero(); a.dim];
    for (flat, terms) in a.components.iter().enumerate() {
        if terms.is_empty() {
            continue;
        }
        let (i, js) = a.split_index(flat);
        let xs: Vec<&S> = js.iter().zip(vs).map(|(&j, v)| v.get(j)).collect();
        if xs.iter().any(|x| x.is_zero()) {
            continue;
        }
        for term in terms {
            out[i] = out[i].add(&eval_term(term, &xs));
        }
    }
    Ok(CoordRow::new(out))
}

/// `out[i] = Σ_j Σ_s a_{s·0} · w[j] · a_{s·1}`.
pub fn apply_linear_tensor<S: DivisionAlgebra>(
    a: &TensorPolyMap<S>,
    w: &CoordRow<S>,
) -> Result<CoordRow<S>> {
    require_arity(a, 1)?;
    apply_polylinear(a, std::slice::from_ref(w))
}

fn require_arity<S>(a: &TensorPolyMap<S>, arity: usize) -> Result<()> {
    if a.arity != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            got: a.arity,
        });
    }
    Ok(())
}

/// Coordinates of the same map relative to `e₂ = g · e₁`.
///
/// Component `(l; k₁, …, kₙ)` of the result collects, for every `i`,
/// `j₁, …, jₙ` and every term `s` of component `(i; j₁, …, jₙ)`, the term
///
/// ```text
/// a_{s·0} ⊗ g[k₁][j₁]·a_{s·1} ⊗ … ⊗ g[kₙ][jₙ]·a_{s·n}·g⁻¹[i][l]
/// ```
pub fn transform_polylinear<S: DivisionAlgebra>(
    a1: &TensorPolyMap<S>,
    g: &PassiveTransform<S>,
) -> Result<TensorPolyMap<S>> {
    if g.dim() != a1.dim {
        return Err(Error::shape(format!(
            "transformation of dimension {} for a map over dimension {}",
            g.dim(),
            a1.dim
        )));
    }
    let (gm, g_inv) = (g.matrix(), g.inverse_matrix());
    let mut a2 = TensorPolyMap::zero(a1.arity, a1.dim)?;
    for flat2 in 0..a2.components.len() {
        let (l, ks) = a2.split_index(flat2);
        let mut out = Vec::new();
        for (flat1, terms) in a1.components.iter().enumerate() {
            if terms.is_empty() {
                continue;
            }
            let (i, js) = a1.split_index(flat1);
            for term in terms {
                let mut t = Vec::with_capacity(term.len());
                t.push(term[0].clone());
                for (slot, factor) in term[1..].iter().enumerate() {
                    t.push(gm.get(ks[slot], js[slot]).mul(factor));
                }
                let last = t.pop().expect("term has a last factor");
                t.push(last.mul(g_inv.get(i, l)));
                out.push(t);
            }
        }
        a2.components[flat2] = out;
    }
    Ok(a2)
}

/// [`transform_polylinear`] restricted to linear maps:
/// `a_{s·0} ⊗ g[k][j]·a_{s·1}·g⁻¹[i][l]`.
pub fn transform_linear_tensor<S: DivisionAlgebra>(
    a1: &TensorPolyMap<S>,
    g: &PassiveTransform<S>,
) -> Result<TensorPolyMap<S>> {
    require_arity(a1, 1)?;
    transform_polylinear(a1, g)
}

/// Image covariance for a map given relative to `e1`: applying the
/// transformed map to `vs2` (coordinates relative to `e₂ = g·e₁`) and
/// the original map to the same vectors in `e₁` coordinates yields the
/// same vector.
pub fn covariance_check_polylinear_from<S: DivisionAlgebra>(
    e1: &Basis<S>,
    a1: &TensorPolyMap<S>,
    g: &PassiveTransform<S>,
    vs2: &[CoordRow<S>],
) -> Result<bool> {
    check_inputs(a1, vs2)?;
    let e2 = passive_apply_basis(g, e1)?;
    let a2 = transform_polylinear(a1, g)?;
    let vs1 = vs2
        .iter()
        .map(|v| passive_coords_forward(g, v))
        .collect::<Result<Vec<_>>>()?;
    let lhs = expand_in_reference(&apply_polylinear(&a2, vs2)?, &e2)?;
    let rhs = expand_in_reference(&apply_polylinear(a1, &vs1)?, e1)?;
    Ok(lhs == rhs)
}

/// [`covariance_check_polylinear_from`] with `e₁` the reference frame.
pub fn covariance_check_polylinear<S: DivisionAlgebra>(
    a1: &TensorPolyMap<S>,
    g: &PassiveTransform<S>,
    vs2: &[CoordRow<S>],
) -> Result<bool> {
    covariance_check_polylinear_from(&Basis::reference(a1.dim), a1, g, vs2)
}

pub fn covariance_check_linear<S: DivisionAlgebra>(
    a1: &TensorPolyMap<S>,
    g: &PassiveTransform<S>,
    v2: &CoordRow<S>,
) -> Result<bool> {
    require_arity(a1, 1)?;
    covariance_check_polylinear(a1, g, std::slice::from_ref(v2))
}

/// Extensional equality: the maps agree on every tuple of arguments of
/// the form `δ_k · b` with `b` in the basis of the algebra over its
/// center. Each slot is linear over the center, so this decides equality.
pub fn maps_equal<S: DivisionAlgebra>(a: &TensorPolyMap<S>, b: &TensorPolyMap<S>) -> Result<bool> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch {
            expected: a.arity,
            got: b.arity,
        });
    }
    if a.dim != b.dim {
        return Err(Error::shape(format!("dimensions {} and {}", a.dim, b.dim)));
    }
    let basis = S::center_basis();
    let n = a.arity;
    // On arguments δ_{k_t}·x_t only component (i; k₁…kₙ) contributes.
    for flat in 0..a.dim.pow(n as u32) {
        let mut ks = vec![0; n];
        let mut rest = flat;
        for k in ks.iter_mut().rev() {
            *k = rest % a.dim;
            rest /= a.dim;
        }
        for choice in 0..basis.len().pow(n as u32) {
            let mut xs = Vec::with_capacity(n);
            let mut rest = choice;
            for _ in 0..n {
                xs.push(&basis[rest % basis.len()]);
                rest /= basis.len();
            }
            for i in 0..a.dim {
                if a.eval_component(i, &ks, &xs) != b.eval_component(i, &ks, &xs) {
                    return Ok(false);
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

    fn passive(s: &str) -> PassiveTransform<Q> {
        PassiveTransform::new(s.parse().unwrap()).unwrap()
    }

    fn single(arity: usize, factors: &[&str]) -> TensorPolyMap<Q> {
        let mut a = TensorPolyMap::zero(arity, 1).unwrap();
        a.push_term(0, &vec![0; arity], factors.iter().map(|s| q(s)).collect())
            .unwrap();
        a
    }

    #[test]
    fn linear_application() {
        let id = TensorPolyMap::<Q>::identity(3).unwrap();
        let w = row("1,i+j,1/2k");
        assert_eq!(apply_linear_tensor(&id, &w).unwrap(), w);

        // i·k·j = (-j)·j = 1
        let a = single(1, &["i", "j"]);
        assert_eq!(apply_linear_tensor(&a, &row("k")).unwrap(), row("1"));

        // conjugation x ↦ i·x·(-i): i·j·(-i) = k·(-i) = -j
        let conj = single(1, &["i", "-i"]);
        assert_eq!(apply_linear_tensor(&conj, &row("j")).unwrap(), row("-j"));

        assert!(matches!(
            apply_linear_tensor(&single(2, &["1", "1", "1"]), &row("1")),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            apply_linear_tensor(&id, &row("1")),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn polylinear_application() {
        let a = single(2, &["1", "1", "1"]);
        assert_eq!(
            apply_polylinear(&a, &[row("i"), row("j")]).unwrap(),
            row("k")
        );
        let a = single(2, &["i", "j", "k"]);
        assert_eq!(
            apply_polylinear(&a, &[row("1"), row("1")]).unwrap(),
            row("-1")
        );
        assert!(matches!(
            apply_polylinear(&a, &[row("1")]),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        ));

        let lin = single(1, &["i", "j"]);
        assert_eq!(
            apply_polylinear(&lin, &[row("1+k")]).unwrap(),
            apply_linear_tensor(&lin, &row("1+k")).unwrap()
        );
    }

    #[test]
    fn matrix_maps_match_rc_product() {
        let f: NcMatrix<Q> = "1,i;j,k".parse().unwrap();
        let a = TensorPolyMap::from_matrix(&f).unwrap();
        let v = row("1+j,2k");
        assert_eq!(apply_linear_tensor(&a, &v).unwrap(), v.times(&f).unwrap());
    }

    #[test]
    fn transform_examples() {
        let mut a = TensorPolyMap::<Q>::zero(1, 2).unwrap();
        a.push_term(0, &[1], vec![q("i"), q("j")]).unwrap();
        a.push_term(1, &[1], vec![q("1+k"), q("2")]).unwrap();
        let same = transform_linear_tensor(&a, &PassiveTransform::identity(2)).unwrap();
        assert!(maps_equal(&same, &a).unwrap());

        // 1 ⊗ 1 under [[q]] becomes 1 ⊗ q·q⁻¹
        let id = TensorPolyMap::<Q>::identity(1).unwrap();
        let t = transform_linear_tensor(&id, &passive("1+i-j")).unwrap();
        assert_eq!(t.terms(0, &[0]).unwrap(), &[vec![q("1"), q("1")]]);

        let g = passive("1,i;j,k");
        assert!(covariance_check_linear(&a, &g, &row("1/2,j")).unwrap());
    }

    #[test]
    fn polylinear_transform_specializes() {
        let mut a = TensorPolyMap::<Q>::zero(1, 2).unwrap();
        a.push_term(1, &[0], vec![q("j"), q("1-k")]).unwrap();
        let g = passive("2,i;k,1");
        assert_eq!(
            transform_polylinear(&a, &g).unwrap(),
            transform_linear_tensor(&a, &g).unwrap()
        );
        let b = single(2, &["i", "j", "k"]);
        assert_eq!(
            transform_polylinear(&b, &PassiveTransform::identity(1)).unwrap(),
            b
        );
    }

    #[test]
    fn covariance_dim_one() {
        let conj = single(1, &["i", "-i"]);
        assert!(covariance_check_linear(&conj, &passive("j"), &row("1+k")).unwrap());
        assert!(covariance_check_linear(&conj, &PassiveTransform::identity(1), &row("k")).unwrap());
        let b = single(2, &["i", "1+j", "k"]);
        assert!(covariance_check_polylinear(&b, &passive("1-i"), &[row("j"), row("2+k")]).unwrap());
    }

    #[test]
    fn maps_equal_examples() {
        let a = single(1, &["i", "j"]);
        assert!(maps_equal(&a, &a).unwrap());

        let mut padded = a.clone();
        padded.push_term(0, &[0], vec![q("0"), q("k")]).unwrap();
        assert!(maps_equal(&a, &padded).unwrap());

        // x ↦ x·i vs x ↦ i·x differ at x = j
        let right = single(1, &["1", "i"]);
        let left = single(1, &["i", "1"]);
        assert!(!maps_equal(&right, &left).unwrap());
        assert_ne!(
            apply_linear_tensor(&right, &row("j")).unwrap(),
            apply_linear_tensor(&left, &row("j")).unwrap()
        );

        assert!(matches!(
            maps_equal(&a, &single(2, &["1", "1", "1"])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn bad_terms_rejected() {
        let mut a = TensorPolyMap::<Q>::zero(2, 2).unwrap();
        assert!(matches!(
            a.push_term(0, &[0, 1], vec![q("1")]),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            a.push_term(0, &[0, 2], vec![q("1"), q("1"), q("1")]),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(TensorPolyMap::<Q>::zero(0, 2).is_err());
    }

    #[test]
    fn component_indexing_round_trips() {
        let a = TensorPolyMap::<Q>::zero(3, 3).unwrap();
        for (flat, (i, js, _)) in a.components().enumerate() {
            assert_eq!(a.component_index(i, &js).unwrap(), flat);
        }
    }
}
