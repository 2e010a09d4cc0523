//! Randomized property suites over every law in the crate.
//!
//! A suite runs each of its properties on `trials` random instances. The
//! instance for trial `t` of property `p` in suite `s` is drawn from a
//! generator keyed by `(seed, s, p, t)`, so reports are reproducible and
//! independent of scheduling. All comparisons are exact.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{
    apply_polylinear, covariance_check_polylinear, endo_transform, geo_transform, maps_equal,
    rep_action_law_check, same_orbit, skew_apply, skew_apply_detstar, skew_transform_check,
    transform_linear_tensor, GeometricObject, GroupRep, TensorPolyMap,
};
use crate::ncmatrix::NcMatrix;
use crate::random::{self, Scalars};
use crate::scalar::Quaternion;
use crate::transform::{
    active_apply, active_apply_vector, compose_active, compose_passive, passive_apply_basis,
    passive_coords_backward, passive_coords_forward, transition_matrix, ActiveTransform,
    PassiveTransform,
};
use crate::vspace::{
    apply_hom, compose_homs, coords_in_basis, expand_in_reference, hom_from_matrix, matrix_of_hom,
    Basis, CoordRow, HomMatrix,
};

type Q = Quaternion;
type Matrix = NcMatrix<Q>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Matrix,
    Vspace,
    Transform,
    Linear,
    Polylinear,
    Skew,
    Geo,
    All,
}

impl SuiteKind {
    pub const SINGLE: [SuiteKind; 7] = [
        SuiteKind::Matrix,
        SuiteKind::Vspace,
        SuiteKind::Transform,
        SuiteKind::Geo,
        SuiteKind::Linear,
        SuiteKind::Polylinear,
        SuiteKind::Skew,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Matrix => "matrix",
            SuiteKind::Vspace => "vspace",
            SuiteKind::Transform => "transform",
            SuiteKind::Linear => "linear",
            SuiteKind::Polylinear => "polylinear",
            SuiteKind::Skew => "skew",
            SuiteKind::Geo => "geo",
            SuiteKind::All => "all",
        }
    }

    fn stream(self) -> u32 {
        match self {
            SuiteKind::Matrix => 0,
            SuiteKind::Vspace => 1,
            SuiteKind::Transform => 2,
            SuiteKind::Linear => 3,
            SuiteKind::Polylinear => 4,
            SuiteKind::Skew => 5,
            SuiteKind::Geo => 6,
            SuiteKind::All => 7,
        }
    }

    fn members(self) -> Vec<SuiteKind> {
        match self {
            SuiteKind::All => Self::SINGLE.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::SINGLE
            .into_iter()
            .chain([SuiteKind::All])
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite '{s}'")))
    }
}

/// Deliberate corruptions used to check that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Multiply the factors of rc-products, coordinate rules and tensor
    /// transforms in the wrong order.
    FlipProductOrder,
}

impl FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "flip-product-order" => Ok(Fault::FlipProductOrder),
            _ => Err(Error::Config(format!("unknown fault '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::Config(format!("unknown format '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: SuiteKind,
    /// Maximum dimension; each trial draws its dimension from `1..=dim`.
    pub dim: usize,
    pub trials: u32,
    pub arity: usize,
    pub max_terms: usize,
    pub seed: u64,
    pub format: Format,
    #[serde(skip)]
    pub timing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteKind::All,
            dim: 3,
            trials: 200,
            arity: 2,
            max_terms: 3,
            seed: 0,
            format: Format::Json,
            timing: false,
            fault: None,
        }
    }
}

impl SuiteConfig {
    pub fn new(suite: SuiteKind) -> Self {
        SuiteConfig {
            suite,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=8).contains(&self.dim) {
            return Err(Error::Config(format!(
                "dim must be in 1..=8, got {}",
                self.dim
            )));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be positive".into()));
        }
        if !(1..=3).contains(&self.arity) {
            return Err(Error::Config(format!(
                "arity must be in 1..=3, got {}",
                self.arity
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::Config("max-terms must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub paper_ref: String,
    pub trials: u32,
    pub passes: u32,
    pub failures: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: SuiteConfig,
    pub properties: Vec<PropertyReport>,
    /// `None` unless timing was requested, keeping reports reproducible.
    pub elapsed_ms: Option<u64>,
}

impl SuiteReport {
    pub fn failures(&self) -> u32 {
        self.properties.iter().map(|p| p.failures).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite {} (dim<={}, trials={}, arity={}, max_terms={}, seed={})\n",
            self.suite,
            self.config.dim,
            self.config.trials,
            self.config.arity,
            self.config.max_terms,
            self.config.seed
        );
        for p in &self.properties {
            let verdict = if p.failures == 0 { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{verdict} {:<44} {}/{}  [{}]\n",
                p.name, p.passes, p.trials, p.paper_ref
            ));
            if let Some(ce) = &p.counterexample {
                out.push_str(&format!("     counterexample: {ce}\n"));
            }
        }
        let total: u32 = self.properties.iter().map(|p| p.trials).sum();
        out.push_str(&format!(
            "{} properties, {} checks, {} failures\n",
            self.properties.len(),
            total,
            self.failures()
        ));
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed {ms} ms\n"));
        }
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut properties = Vec::new();
    for kind in cfg.suite.members() {
        for (index, prop) in properties_of(kind).iter().enumerate() {
            properties.push(run_property(cfg, kind, index as u32, prop));
        }
    }
    Ok(SuiteReport {
        suite: cfg.suite.name().to_string(),
        config: cfg.clone(),
        properties,
        elapsed_ms: cfg.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Property names of a suite, prefixed with the suite name.
pub fn property_names(kind: SuiteKind) -> Vec<String> {
    kind.members()
        .into_iter()
        .flat_map(|k| {
            properties_of(k)
                .into_iter()
                .map(move |p| format!("{}/{}", k, p.name))
        })
        .collect()
}

fn run_property(cfg: &SuiteConfig, kind: SuiteKind, index: u32, prop: &Property) -> PropertyReport {
    let stream = kind.stream() * 64 + index;
    let outcomes: Vec<Outcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut ctx = Ctx {
                rng: random::trial_rng(cfg.seed, stream, t),
                max_dim: cfg.dim,
                arity: cfg.arity,
                max_terms: cfg.max_terms,
                fault: cfg.fault,
            };
            match (prop.check)(&mut ctx) {
                Ok(outcome) => outcome,
                Err(e) => Err(json!({ "error": e.to_string() })),
            }
        })
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_err()).count() as u32;
    let counterexample = outcomes.into_iter().enumerate().find_map(|(t, o)| {
        o.err().map(|mut v| {
            v["trial"] = json!(t);
            v
        })
    });
    PropertyReport {
        name: format!("{}/{}", kind, prop.name),
        paper_ref: prop.law.to_string(),
        trials: cfg.trials,
        passes: cfg.trials - failures,
        failures,
        counterexample,
    }
}

/// `Err` carries the serialized failing instance.
type Outcome = std::result::Result<(), Value>;

struct Property {
    name: &'static str,
    law: &'static str,
    check: fn(&mut Ctx) -> Result<Outcome>,
}

struct Ctx {
    rng: ChaCha8Rng,
    max_dim: usize,
    arity: usize,
    max_terms: usize,
    fault: Option<Fault>,
}

impl Ctx {
    fn dim(&mut self) -> usize {
        self.rng.random_range(1..=self.max_dim)
    }

    fn scalar(&mut self) -> Q {
        random::quaternion(&mut self.rng)
    }

    fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        random::matrix(&mut self.rng, rows, cols, Scalars::Quaternion)
    }

    fn nonsingular(&mut self, n: usize) -> Matrix {
        random::nonsingular(&mut self.rng, n, Scalars::Quaternion)
    }

    fn passive(&mut self, n: usize) -> PassiveTransform<Q> {
        PassiveTransform::new(self.nonsingular(n)).expect("drawn nonsingular")
    }

    fn active(&mut self, n: usize) -> ActiveTransform<Q> {
        ActiveTransform::new(self.nonsingular(n)).expect("drawn nonsingular")
    }

    fn basis(&mut self, n: usize) -> Basis<Q> {
        random::basis(&mut self.rng, n)
    }

    fn row(&mut self, n: usize) -> CoordRow<Q> {
        random::row(&mut self.rng, n, Scalars::Quaternion)
    }

    fn tensor(&mut self, arity: usize, n: usize) -> TensorPolyMap<Q> {
        random::tensor_map(&mut self.rng, arity, n, self.max_terms, Scalars::Quaternion)
    }

    fn faulty(&self) -> bool {
        self.fault == Some(Fault::FlipProductOrder)
    }

    /// rc-product, or under the fault its factor-flipped variant
    /// `Σ_k b[k][j] · a[i][k]`.
    fn rc(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if !self.faulty() {
            return a.rc_product(b);
        }
        if a.cols() != b.rows() {
            return Err(Error::ShapeMismatch("flipped product".into()));
        }
        Ok(NcMatrix::from_fn(a.rows(), b.cols(), |i, j| {
            (0..a.cols()).fold(Q::zero(), |acc, k| &acc + &(b.get(k, j) * a.get(i, k)))
        }))
    }

    fn coords_forward(&self, g: &PassiveTransform<Q>, v2: &CoordRow<Q>) -> Result<CoordRow<Q>> {
        if self.faulty() {
            return CoordRow::from_matrix(self.rc(v2.as_matrix(), g.matrix())?);
        }
        passive_coords_forward(g, v2)
    }

    fn covariance(
        &self,
        a1: &TensorPolyMap<Q>,
        g: &PassiveTransform<Q>,
        vs2: &[CoordRow<Q>],
    ) -> Result<bool> {
        if !self.faulty() {
            return covariance_check_polylinear(a1, g, vs2);
        }
        let e1 = Basis::reference(a1.dim());
        let e2 = passive_apply_basis(g, &e1)?;
        let a2 = flipped_transform(a1, g)?;
        let vs1 = vs2
            .iter()
            .map(|v| passive_coords_forward(g, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(expand_in_reference(&apply_polylinear(&a2, vs2)?, &e2)?
            == expand_in_reference(&apply_polylinear(a1, &vs1)?, &e1)?)
    }
}

/// The tensor transform with `g⁻¹[i][l]` multiplied on the wrong side of
/// the last factor.
fn flipped_transform(a1: &TensorPolyMap<Q>, g: &PassiveTransform<Q>) -> Result<TensorPolyMap<Q>> {
    let n = a1.dim();
    let (gm, g_inv) = (g.matrix(), g.inverse_matrix());
    let mut a2 = TensorPolyMap::zero(a1.arity(), n)?;
    let targets: Vec<(usize, Vec<usize>)> = a2.components().map(|(l, ks, _)| (l, ks)).collect();
    for (l, ks) in targets {
        for (i, js, terms) in a1.components() {
            for term in terms {
                let mut t = vec![term[0].clone()];
                for (slot, factor) in term[1..].iter().enumerate() {
                    t.push(gm.get(ks[slot], js[slot]) * factor);
                }
                let last = t.pop().expect("last factor");
                t.push(g_inv.get(i, l) * &last);
                a2.push_term(l, &ks, t)?;
            }
        }
    }
    Ok(a2)
}

fn verdict(ok: bool, instance: impl FnOnce() -> Value) -> Result<Outcome> {
    Ok(if ok { Ok(()) } else { Err(instance()) })
}

fn s<T: fmt::Display>(x: &T) -> Value {
    Value::String(x.to_string())
}

fn terms_json(a: &TensorPolyMap<Q>) -> Value {
    let comps: Vec<Value> = a
        .components()
        .filter(|(_, _, terms)| !terms.is_empty())
        .map(|(i, js, terms)| {
            let terms: Vec<Vec<String>> = terms
                .iter()
                .map(|t| t.iter().map(ToString::to_string).collect())
                .collect();
            json!({ "i": i, "j": js, "terms": terms })
        })
        .collect();
    json!({ "arity": a.arity(), "dim": a.dim(), "components": comps })
}

fn properties_of(kind: SuiteKind) -> Vec<Property> {
    match kind {
        SuiteKind::Matrix => matrix_properties(),
        SuiteKind::Vspace => vspace_properties(),
        SuiteKind::Transform => transform_properties(),
        SuiteKind::Geo => geo_properties(),
        SuiteKind::Linear => linear_properties(),
        SuiteKind::Polylinear => polylinear_properties(),
        SuiteKind::Skew => skew_properties(),
        SuiteKind::All => Vec::new(),
    }
}

// ---- matrix ----

fn matrix_properties() -> Vec<Property> {
    vec![
        Property {
            name: "rc_associativity",
            law: "rc(rc(a,b),c) = rc(a,rc(b,c))",
            check: |ctx| {
                let (r, k, l, c) = (ctx.dim(), ctx.dim(), ctx.dim(), ctx.dim());
                let (a, b, m) = (ctx.matrix(r, k), ctx.matrix(k, l), ctx.matrix(l, c));
                let lhs = ctx.rc(&ctx.rc(&a, &b)?, &m)?;
                let rhs = ctx.rc(&a, &ctx.rc(&b, &m)?)?;
                verdict(lhs == rhs, || json!({ "a": s(&a), "b": s(&b), "c": s(&m) }))
            },
        },
        Property {
            name: "rc_distributivity",
            law: "a(b+c) = ab+ac, (b+c)d = bd+cd",
            check: |ctx| {
                let (r, k, l, c) = (ctx.dim(), ctx.dim(), ctx.dim(), ctx.dim());
                let a = ctx.matrix(r, k);
                let (b, m) = (ctx.matrix(k, l), ctx.matrix(k, l));
                let d = ctx.matrix(l, c);
                let sum = b.mat_add(&m)?;
                let left = ctx.rc(&a, &sum)? == ctx.rc(&a, &b)?.mat_add(&ctx.rc(&a, &m)?)?;
                let right = ctx.rc(&sum, &d)? == ctx.rc(&b, &d)?.mat_add(&ctx.rc(&m, &d)?)?;
                verdict(
                    left && right,
                    || json!({ "a": s(&a), "b": s(&b), "c": s(&m), "d": s(&d) }),
                )
            },
        },
        Property {
            name: "rc_inverse_two_sided",
            law: "rc(g, g^-1) = rc(g^-1, g) = I",
            check: |ctx| {
                let n = ctx.dim();
                let g = ctx.nonsingular(n);
                let h = g.rc_inverse()?;
                let id = NcMatrix::identity(n);
                verdict(
                    ctx.rc(&g, &h)? == id && ctx.rc(&h, &g)? == id,
                    || json!({ "g": s(&g), "inverse": s(&h) }),
                )
            },
        },
        Property {
            name: "inverse_of_product",
            law: "(gh)^-1 = h^-1 g^-1",
            check: |ctx| {
                let n = ctx.dim();
                let (g, h) = (ctx.nonsingular(n), ctx.nonsingular(n));
                let lhs = ctx.rc(&g, &h)?.rc_inverse()?;
                let rhs = ctx.rc(&h.rc_inverse()?, &g.rc_inverse()?)?;
                verdict(lhs == rhs, || json!({ "g": s(&g), "h": s(&h) }))
            },
        },
        Property {
            name: "cr_is_rc_of_transposes",
            law: "cr(a,b)[i][j] = sum_k a[k][i] b[j][k]",
            check: |ctx| {
                let (r, k, c) = (ctx.dim(), ctx.dim(), ctx.dim());
                let (a, b) = (ctx.matrix(k, r), ctx.matrix(c, k));
                let cr = a.cr_product(&b)?;
                verdict(
                    cr == ctx.rc(&a.transpose(), &b.transpose())?,
                    || json!({ "a": s(&a), "b": s(&b) }),
                )
            },
        },
    ]
}

// ---- vspace ----

fn vspace_properties() -> Vec<Property> {
    vec![
        Property {
            name: "hom_matrix_bijection",
            law: "matrix_of_hom(hom_from_matrix(f)) = f; row i of f = image of unit row i",
            check: |ctx| {
                let (n_in, n_out) = (ctx.dim(), ctx.dim());
                let f = ctx.matrix(n_in, n_out);
                let (e_in, e_out) = (ctx.basis(n_in), ctx.basis(n_out));
                let h = hom_from_matrix(f.clone(), e_in, e_out)?;
                let mut ok = matrix_of_hom(&h) == f;
                for i in 0..n_in {
                    ok &= apply_hom(&h, &CoordRow::unit(n_in, i))?.coords() == f.row(i);
                }
                verdict(ok, || json!({ "f": s(&f) }))
            },
        },
        Property {
            name: "apply_hom_additive",
            law: "f(u+v) = f(u) + f(v)",
            check: |ctx| {
                let (n_in, n_out) = (ctx.dim(), ctx.dim());
                let f = ctx.matrix(n_in, n_out);
                let (u, v) = (ctx.row(n_in), ctx.row(n_in));
                let h =
                    hom_from_matrix(f.clone(), Basis::reference(n_in), Basis::reference(n_out))?;
                let lhs = apply_hom(&h, &u.add(&v)?)?;
                let rhs = apply_hom(&h, &u)?.add(&apply_hom(&h, &v)?)?;
                verdict(
                    lhs == rhs,
                    || json!({ "f": s(&f), "u": s(u.as_matrix()), "v": s(v.as_matrix()) }),
                )
            },
        },
        Property {
            name: "apply_hom_left_homogeneous",
            law: "f(a v) = a f(v)",
            check: |ctx| {
                let (n_in, n_out) = (ctx.dim(), ctx.dim());
                let f = ctx.matrix(n_in, n_out);
                let v = ctx.row(n_in);
                let a = ctx.scalar();
                let h =
                    hom_from_matrix(f.clone(), Basis::reference(n_in), Basis::reference(n_out))?;
                let lhs = apply_hom(&h, &v.left_scale(&a))?;
                let rhs = apply_hom(&h, &v)?.left_scale(&a);
                verdict(
                    lhs == rhs,
                    || json!({ "f": s(&f), "v": s(v.as_matrix()), "a": s(&a) }),
                )
            },
        },
        Property {
            name: "compose_is_sequential",
            law: "(h1 then h2)(v) = h2(h1(v))",
            check: |ctx| {
                let (n1, n2, n3) = (ctx.dim(), ctx.dim(), ctx.dim());
                let (e1, e2, e3) = (ctx.basis(n1), ctx.basis(n2), ctx.basis(n3));
                let (f1, f2) = (ctx.matrix(n1, n2), ctx.matrix(n2, n3));
                let h1 = hom_from_matrix(f1.clone(), e1, e2.clone())?;
                let h2 = hom_from_matrix(f2.clone(), e2, e3)?;
                let v = ctx.row(n1);
                let lhs = apply_hom(&compose_homs(&h1, &h2)?, &v)?;
                let rhs = apply_hom(&h2, &apply_hom(&h1, &v)?)?;
                verdict(
                    lhs == rhs,
                    || json!({ "f1": s(&f1), "f2": s(&f2), "v": s(v.as_matrix()) }),
                )
            },
        },
        Property {
            name: "automorphism_group_axioms",
            law: "GL(V) is a group under composition",
            check: |ctx| {
                let n = ctx.dim();
                let e = ctx.basis(n);
                let mk = |m: Matrix| hom_from_matrix(m, e.clone(), e.clone());
                let (fa, fb, fc) = (ctx.nonsingular(n), ctx.nonsingular(n), ctx.nonsingular(n));
                let (a, b, c) = (mk(fa.clone())?, mk(fb.clone())?, mk(fc.clone())?);
                let id = HomMatrix::identity(e.clone());
                let assoc = compose_homs(&compose_homs(&a, &b)?, &c)?
                    == compose_homs(&a, &compose_homs(&b, &c)?)?;
                let unit = compose_homs(&a, &id)? == a && compose_homs(&id, &a)? == a;
                let inv = a.inverse()?;
                let inverse = compose_homs(&a, &inv)? == id && compose_homs(&inv, &a)? == id;
                let closed = compose_homs(&a, &b)?.matrix().is_rc_nonsingular();
                verdict(
                    assoc && unit && inverse && closed,
                    || json!({ "a": s(&fa), "b": s(&fb), "c": s(&fc), "basis": s(e.matrix()) }),
                )
            },
        },
        Property {
            name: "expansion_round_trip",
            law: "coords_in_basis(expand(v, e), e) = v",
            check: |ctx| {
                let n = ctx.dim();
                let e = ctx.basis(n);
                let (u, v) = (ctx.row(n), ctx.row(n));
                let (xu, xv) = (expand_in_reference(&u, &e)?, expand_in_reference(&v, &e)?);
                let round_trip = coords_in_basis(&xv, &e)? == v;
                let injective = (u == v) == (xu == xv);
                verdict(
                    round_trip && injective,
                    || json!({ "basis": s(e.matrix()), "u": s(u.as_matrix()), "v": s(v.as_matrix()) }),
                )
            },
        },
    ]
}

// ---- transform ----

fn transform_properties() -> Vec<Property> {
    vec![
        Property {
            name: "transition_reproduces_target",
            law: "g = e2 e1^-1 satisfies g e1 = e2",
            check: |ctx| {
                let n = ctx.dim();
                let (e1, e2) = (ctx.basis(n), ctx.basis(n));
                let g = transition_matrix(&e1, &e2)?;
                verdict(
                    passive_apply_basis(&g, &e1)? == e2,
                    || json!({ "e1": s(e1.matrix()), "e2": s(e2.matrix()) }),
                )
            },
        },
        Property {
            name: "transition_recovers_planted",
            law: "transition(e, g e) = g (single transitivity)",
            check: |ctx| {
                let n = ctx.dim();
                let e = ctx.basis(n);
                let g = ctx.passive(n);
                let recovered = transition_matrix(&e, &passive_apply_basis(&g, &e)?)?;
                verdict(
                    recovered.matrix() == g.matrix(),
                    || json!({ "e": s(e.matrix()), "g": s(g.matrix()) }),
                )
            },
        },
        Property {
            name: "passive_active_commute",
            law: "g (e a) = (g e) a",
            check: |ctx| {
                let n = ctx.dim();
                let (g, a, e) = (ctx.passive(n), ctx.active(n), ctx.basis(n));
                let lhs = passive_apply_basis(&g, &active_apply(&a, &e)?)?;
                let rhs = active_apply(&a, &passive_apply_basis(&g, &e)?)?;
                verdict(
                    lhs == rhs,
                    || json!({ "g": s(g.matrix()), "a": s(a.matrix()), "e": s(e.matrix()) }),
                )
            },
        },
        Property {
            name: "active_synchronicity",
            law: "v e a = v (e a): coordinates of a(v) in e a equal those of v in e",
            check: |ctx| {
                let n = ctx.dim();
                let (a, e, v) = (ctx.active(n), ctx.basis(n), ctx.row(n));
                let moved = active_apply_vector(&a, &expand_in_reference(&v, &e)?)?;
                let coords = coords_in_basis(&moved, &active_apply(&a, &e)?)?;
                verdict(
                    coords == v,
                    || json!({ "a": s(a.matrix()), "e": s(e.matrix()), "v": s(v.as_matrix()) }),
                )
            },
        },
        Property {
            name: "passive_representation_law",
            law: "g2 (g1 e) = (g2 g1) e",
            check: |ctx| {
                let n = ctx.dim();
                let (g1, g2, e) = (ctx.passive(n), ctx.passive(n), ctx.basis(n));
                let seq = passive_apply_basis(&g2, &passive_apply_basis(&g1, &e)?)?;
                let once = passive_apply_basis(&compose_passive(&g2, &g1)?, &e)?;
                let inverse =
                    compose_passive(&g1.inverse(), &g1)?.matrix() == &NcMatrix::identity(n);
                verdict(
                    seq == once && inverse,
                    || json!({ "g1": s(g1.matrix()), "g2": s(g2.matrix()), "e": s(e.matrix()) }),
                )
            },
        },
        Property {
            name: "active_representation_law",
            law: "(e a1) a2 = e (a1 a2)",
            check: |ctx| {
                let n = ctx.dim();
                let (a1, a2, e) = (ctx.active(n), ctx.active(n), ctx.basis(n));
                let seq = active_apply(&a2, &active_apply(&a1, &e)?)?;
                let once = active_apply(&compose_active(&a2, &a1)?, &e)?;
                verdict(
                    seq == once,
                    || json!({ "a1": s(a1.matrix()), "a2": s(a2.matrix()), "e": s(e.matrix()) }),
                )
            },
        },
        Property {
            name: "coordinate_rule_linearity",
            law: "v1 = v2 g is additive and left-homogeneous",
            check: |ctx| {
                let n = ctx.dim();
                let g = ctx.passive(n);
                let (u, v) = (ctx.row(n), ctx.row(n));
                let a = ctx.scalar();
                let add = ctx.coords_forward(&g, &u.add(&v)?)?
                    == ctx
                        .coords_forward(&g, &u)?
                        .add(&ctx.coords_forward(&g, &v)?)?;
                let hom = ctx.coords_forward(&g, &v.left_scale(&a))?
                    == ctx.coords_forward(&g, &v)?.left_scale(&a);
                verdict(
                    add && hom,
                    || json!({ "g": s(g.matrix()), "u": s(u.as_matrix()), "v": s(v.as_matrix()), "a": s(&a) }),
                )
            },
        },
    ]
}

// ---- geo ----

fn geo_properties() -> Vec<Property> {
    vec![
        Property {
            name: "vector_covariance",
            law: "v1 = v2 g, v2 = v1 g^-1: expansion independent of basis",
            check: |ctx| {
                let n = ctx.dim();
                let (e1, g, v2) = (ctx.basis(n), ctx.passive(n), ctx.row(n));
                let e2 = passive_apply_basis(&g, &e1)?;
                let v1 = ctx.coords_forward(&g, &v2)?;
                let forward = expand_in_reference(&v2, &e2)? == expand_in_reference(&v1, &e1)?;
                let backward = passive_coords_backward(&g, &v1)? == v2;
                verdict(
                    forward && backward,
                    || json!({ "e1": s(e1.matrix()), "g": s(g.matrix()), "v2": s(v2.as_matrix()) }),
                )
            },
        },
        Property {
            name: "geometric_object_covariance",
            law: "representative of a geometric object is basis independent",
            check: |ctx| {
                let n = ctx.dim();
                let (e, g, w) = (ctx.basis(n), ctx.passive(n), ctx.row(n));
                let obj = GeometricObject::new(GroupRep::tautological(n), w.clone(), e.clone())?;
                let moved = geo_transform(&obj, &g)?;
                let invariant = moved.representative()? == obj.representative()?
                    && obj.representative()? == expand_in_reference(&w, &e)?;
                let orbit = same_orbit(&obj, &moved)?;
                verdict(
                    invariant && orbit,
                    || json!({ "e": s(e.matrix()), "g": s(g.matrix()), "w": s(w.as_matrix()) }),
                )
            },
        },
        Property {
            name: "rep_action_law_trivial",
            law: "w F(g)^-1 F(h)^-1 = w F(hg)^-1, F = I",
            check: |ctx| {
                let (n, m) = (ctx.dim(), ctx.dim());
                let (g, h, w) = (ctx.nonsingular(n), ctx.nonsingular(n), ctx.row(m));
                let rep = GroupRep::trivial(m);
                verdict(
                    rep_action_law_check(&rep, &g, &h, &w),
                    || json!({ "g": s(&g), "h": s(&h), "w": s(w.as_matrix()) }),
                )
            },
        },
        Property {
            name: "rep_action_law_tautological",
            law: "w F(g)^-1 F(h)^-1 = w F(hg)^-1, F(g) = g",
            check: |ctx| {
                let n = ctx.dim();
                let (g, h, w) = (ctx.nonsingular(n), ctx.nonsingular(n), ctx.row(n));
                let rep = GroupRep::tautological(n);
                verdict(
                    rep_action_law_check(&rep, &g, &h, &w),
                    || json!({ "g": s(&g), "h": s(&h), "w": s(w.as_matrix()) }),
                )
            },
        },
    ]
}

// ---- linear ----

fn linear_properties() -> Vec<Property> {
    vec![
        Property {
            name: "endomorphism_image_invariance",
            law: "f2 = g f1 g^-1",
            check: |ctx| {
                let n = ctx.dim();
                let (e1, g, f, v2) = (ctx.basis(n), ctx.passive(n), ctx.matrix(n, n), ctx.row(n));
                let f1 = hom_from_matrix(f.clone(), e1.clone(), e1.clone())?;
                let f2 = endo_transform(&f1, &g)?;
                let v1 = ctx.coords_forward(&g, &v2)?;
                let lhs = expand_in_reference(&apply_hom(&f2, &v2)?, f2.basis_out())?;
                let rhs = expand_in_reference(&apply_hom(&f1, &v1)?, &e1)?;
                verdict(
                    lhs == rhs,
                    || json!({ "e1": s(e1.matrix()), "g": s(g.matrix()), "f": s(&f), "v2": s(v2.as_matrix()) }),
                )
            },
        },
        Property {
            name: "linear_tensor_covariance",
            law: "a2 = (a1_s0 (x) g a1_s1) g^-1: image independent of basis",
            check: |ctx| {
                let n = ctx.dim();
                let a1 = ctx.tensor(1, n);
                let (g, v2) = (ctx.passive(n), ctx.row(n));
                let ok = ctx.covariance(&a1, &g, std::slice::from_ref(&v2))?;
                verdict(
                    ok,
                    || json!({ "a1": terms_json(&a1), "g": s(g.matrix()), "v2": s(v2.as_matrix()) }),
                )
            },
        },
        Property {
            name: "commutative_degeneration",
            law: "over the center, tensor transform = g f g^-1",
            check: |ctx| {
                let n = ctx.dim();
                let kind = Scalars::Central;
                let mut a1 = TensorPolyMap::zero(1, n)?;
                // f[j][i] = c·d for the single term (c, d) of component (i; j)
                let mut products = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let c = random::scalar(&mut ctx.rng, kind);
                        let d = random::scalar(&mut ctx.rng, kind);
                        products.push(&c * &d);
                        a1.push_term(i, &[j], vec![c, d])?;
                    }
                }
                let f = NcMatrix::from_fn(n, n, |j, i| products[i * n + j].clone());
                let g = PassiveTransform::new(random::nonsingular(&mut ctx.rng, n, kind))?;
                let e = Basis::reference(n);
                let endo = endo_transform(&hom_from_matrix(f.clone(), e.clone(), e)?, &g)?;
                let via_tensor = transform_linear_tensor(&a1, &g)?;
                let via_matrix = TensorPolyMap::from_matrix(endo.matrix())?;
                verdict(
                    maps_equal(&via_tensor, &via_matrix)?,
                    || json!({ "f": s(&f), "g": s(g.matrix()) }),
                )
            },
        },
        Property {
            name: "identity_transform_preserves_map",
            law: "transform(a, I) = a",
            check: |ctx| {
                let n = ctx.dim();
                let a = ctx.tensor(1, n);
                let same = transform_linear_tensor(&a, &PassiveTransform::identity(n))?;
                verdict(maps_equal(&same, &a)?, || json!({ "a": terms_json(&a) }))
            },
        },
    ]
}

// ---- polylinear ----

fn polylinear_properties() -> Vec<Property> {
    vec![
        Property {
            name: "polylinear_covariance",
            law: "a2 = (a1_s0 (x) g a1_s1 ... (x) g a1_sn) g^-1: image independent of basis",
            check: |ctx| {
                let (n, arity) = (ctx.dim(), ctx.arity);
                let a1 = ctx.tensor(arity, n);
                let g = ctx.passive(n);
                let vs2: Vec<CoordRow<Q>> = (0..arity).map(|_| ctx.row(n)).collect();
                let ok = ctx.covariance(&a1, &g, &vs2)?;
                verdict(ok, || {
                    let vs: Vec<Value> = vs2.iter().map(|v| s(v.as_matrix())).collect();
                    json!({ "a1": terms_json(&a1), "g": s(g.matrix()), "vs2": vs })
                })
            },
        },
        Property {
            name: "maps_equal_invariances",
            law: "zero terms and split terms leave the map unchanged",
            check: |ctx| {
                let (n, arity) = (ctx.dim(), ctx.arity);
                let a = ctx.tensor(arity, n);
                let i = ctx.rng.random_range(0..n);
                let js: Vec<usize> = (0..arity).map(|_| ctx.rng.random_range(0..n)).collect();
                let mut factors: Vec<Q> = (0..=arity).map(|_| ctx.scalar()).collect();
                let mut with_term = a.clone();
                with_term.push_term(i, &js, factors.clone())?;

                // p ⊗ … ⊗ q  =  p ⊗ … ⊗ q'  +  p ⊗ … ⊗ (q − q')
                let mut split = a.clone();
                let q_part = ctx.scalar();
                let last = factors.pop().expect("last factor");
                let mut first = factors.clone();
                first.push(q_part.clone());
                let mut second = factors.clone();
                second.push(&last - &q_part);
                split.push_term(i, &js, first)?;
                split.push_term(i, &js, second)?;

                let mut padded = a.clone();
                let mut zero_term: Vec<Q> = (0..=arity).map(|_| ctx.scalar()).collect();
                zero_term[arity] = Q::zero();
                padded.push_term(i, &js, zero_term)?;

                let ok = maps_equal(&a, &a)?
                    && maps_equal(&a, &padded)?
                    && maps_equal(&with_term, &split)?
                    && maps_equal(&split, &with_term)?;
                verdict(ok, || json!({ "a": terms_json(&a) }))
            },
        },
        Property {
            name: "maps_equal_detects_change",
            law: "adding a nonzero elementary tensor changes the map",
            check: |ctx| {
                let (n, arity) = (ctx.dim(), ctx.arity);
                let a = ctx.tensor(arity, n);
                let i = ctx.rng.random_range(0..n);
                let js: Vec<usize> = (0..arity).map(|_| ctx.rng.random_range(0..n)).collect();
                let factors: Vec<Q> = (0..=arity)
                    .map(|_| random::nonzero_scalar(&mut ctx.rng, Scalars::Quaternion))
                    .collect();
                let mut changed = a.clone();
                changed.push_term(i, &js, factors)?;
                verdict(
                    !maps_equal(&a, &changed)?,
                    || json!({ "a": terms_json(&a) }),
                )
            },
        },
    ]
}

// ---- skew ----

fn skew_properties() -> Vec<Property> {
    vec![
        Property {
            name: "skew_antisymmetry",
            law: "h(u,v) = -h(v,u), h(u,u) = 0",
            check: |ctx| {
                let n = ctx.dim();
                let h = ctx.tensor(2, n);
                let (u, v) = (ctx.row(n), ctx.row(n));
                let uv = skew_apply(&h, &u, &v)?;
                let vu = skew_apply(&h, &v, &u)?;
                let ok = uv.add(&vu)?.is_zero() && skew_apply(&h, &u, &u)?.is_zero();
                verdict(
                    ok,
                    || json!({ "h": terms_json(&h), "u": s(u.as_matrix()), "v": s(v.as_matrix()) }),
                )
            },
        },
        Property {
            name: "detstar_contraction",
            law: "h(u,v) = 1/2 sum h_jk o det*(u^j, v^j, u^k, v^k)",
            check: |ctx| {
                let n = ctx.dim();
                let h = ctx.tensor(2, n);
                let (u, v) = (ctx.row(n), ctx.row(n));
                verdict(
                    skew_apply_detstar(&h, &u, &v)? == skew_apply(&h, &u, &v)?,
                    || json!({ "h": terms_json(&h), "u": s(u.as_matrix()), "v": s(v.as_matrix()) }),
                )
            },
        },
        Property {
            name: "skew_transform_covariance",
            law: "skew image independent of basis, on all unit arguments",
            check: |ctx| {
                let n = ctx.dim();
                let h = ctx.tensor(2, n);
                let g = ctx.passive(n);
                verdict(
                    skew_transform_check(&h, &g)?,
                    || json!({ "h": terms_json(&h), "g": s(g.matrix()) }),
                )
            },
        },
    ]
}
