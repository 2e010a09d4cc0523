//! Worked examples: each demo takes its inputs in the text formats,
//! transforms them by the relevant law and compares the reference-frame
//! expansions on both sides.

use std::fmt::Write as _;
use std::str::FromStr;

use nccov::geometry::{
    apply_polylinear, endo_transform, skew_apply, skew_apply_detstar, transform_polylinear,
    TensorPolyMap,
};
use nccov::text::{format_tensor_map, parse_matrix, parse_tensor_map};
use nccov::transform::{
    passive_apply_basis, passive_coords_backward, passive_coords_forward, PassiveTransform,
};
use nccov::vspace::{apply_hom, expand_in_reference, hom_from_matrix, Basis, CoordRow};
use nccov::{Error, NcMatrix, Quaternion};

type Q = Quaternion;

/// Transformed maps with more terms than this are summarized.
const MAX_PRINTED_TERMS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoKind {
    BasisChange,
    Endo,
    Polylinear,
    Skew,
}

impl FromStr for DemoKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "basis-change" => Ok(DemoKind::BasisChange),
            "endo" => Ok(DemoKind::Endo),
            "polylinear" => Ok(DemoKind::Polylinear),
            "skew" => Ok(DemoKind::Skew),
            _ => Err(format!(
                "unknown demo '{s}' (expected basis-change, endo, polylinear or skew)"
            )),
        }
    }
}

/// Raw text inputs, named after the command-line flags.
#[derive(Clone, Debug, Default)]
pub struct DemoInputs {
    pub g: Option<String>,
    pub f: Option<String>,
    pub a: Option<String>,
    pub u: Option<String>,
    pub v: Option<String>,
}

#[derive(Debug)]
pub enum DemoError {
    Missing(&'static str),
    /// A flag's value failed to parse or is inconsistent with the others.
    Input {
        flag: &'static str,
        text: String,
        error: Error,
    },
    Math(Error),
}

impl std::fmt::Display for DemoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DemoError::Missing(flag) => write!(f, "missing required input --{flag}"),
            DemoError::Input { flag, text, error } => match error {
                Error::Parse { offset, message } => write!(
                    f,
                    "parse error in --{flag} at offset {offset}: {message}\n  {text}\n  {:>width$}",
                    "^",
                    width = offset + 1
                ),
                other => write!(f, "invalid --{flag}: {other}"),
            },
            DemoError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DemoError {}

impl From<Error> for DemoError {
    fn from(e: Error) -> Self {
        DemoError::Math(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemoOutput {
    pub text: String,
    pub equal: bool,
}

fn input_err<'a>(flag: &'static str, text: &'a str) -> impl FnOnce(Error) -> DemoError + 'a {
    move |error| DemoError::Input {
        flag,
        text: text.to_string(),
        error,
    }
}

fn required<'a>(flag: &'static str, value: &'a Option<String>) -> Result<&'a str, DemoError> {
    value.as_deref().ok_or(DemoError::Missing(flag))
}

fn matrix(flag: &'static str, text: &str) -> Result<NcMatrix<Q>, DemoError> {
    parse_matrix(text).map_err(input_err(flag, text))
}

fn passive(text: &str) -> Result<PassiveTransform<Q>, DemoError> {
    let m = matrix("g", text)?;
    if !m.is_square() {
        return Err(input_err("g", text)(Error::ShapeMismatch(format!(
            "transformation must be square, got {}x{}",
            m.rows(),
            m.cols()
        ))));
    }
    PassiveTransform::new(m).map_err(input_err("g", text))
}

/// A row of dimension `n`, or `default` when the flag is absent.
fn row(
    flag: &'static str,
    value: &Option<String>,
    n: usize,
    default: impl FnOnce() -> CoordRow<Q>,
) -> Result<CoordRow<Q>, DemoError> {
    let Some(text) = value else {
        return Ok(default());
    };
    let r = CoordRow::from_matrix(matrix(flag, text)?).map_err(input_err(flag, text))?;
    if r.dim() != n {
        return Err(input_err(flag, text)(Error::ShapeMismatch(format!(
            "expected {n} coordinates, got {}",
            r.dim()
        ))));
    }
    Ok(r)
}

fn ones(n: usize) -> CoordRow<Q> {
    CoordRow::new(vec![Q::one(); n])
}

fn show(m: &NcMatrix<Q>) -> String {
    m.to_string()
}

fn verdict(equal: bool) -> &'static str {
    if equal {
        "EQUAL"
    } else {
        "UNEQUAL"
    }
}

fn show_map(out: &mut String, label: &str, a: &TensorPolyMap<Q>) {
    if a.term_count() <= MAX_PRINTED_TERMS {
        let _ = writeln!(out, "{label} = {}", format_tensor_map(a));
    } else {
        let _ = writeln!(
            out,
            "{label} = ({} terms over {} components)",
            a.term_count(),
            a.dim().pow(a.arity() as u32 + 1)
        );
    }
}

pub fn run_demo(kind: DemoKind, inputs: &DemoInputs) -> Result<DemoOutput, DemoError> {
    match kind {
        DemoKind::BasisChange => basis_change(inputs),
        DemoKind::Endo => endo(inputs),
        DemoKind::Polylinear => polylinear(inputs),
        DemoKind::Skew => skew(inputs),
    }
}

fn basis_change(inputs: &DemoInputs) -> Result<DemoOutput, DemoError> {
    let g = passive(required("g", &inputs.g)?)?;
    let n = g.dim();
    let v1 = row("u", &inputs.u, n, || ones(n))?;
    let e1 = Basis::reference(n);
    let e2 = passive_apply_basis(&g, &e1)?;
    let v2 = passive_coords_backward(&g, &v1)?;
    let back = passive_coords_forward(&g, &v2)?;
    let lhs = expand_in_reference(&v1, &e1)?;
    let rhs = expand_in_reference(&v2, &e2)?;
    let equal = lhs == rhs && back == v1;

    let mut out = String::new();
    let _ = writeln!(out, "passive basis change, e1 = reference frame");
    let _ = writeln!(out, "g          = {}", show(g.matrix()));
    let _ = writeln!(out, "g^-1       = {}", show(g.inverse_matrix()));
    let _ = writeln!(out, "e2 = g.e1  = {}", show(e2.matrix()));
    let _ = writeln!(out, "v1         = {}", show(v1.as_matrix()));
    let _ = writeln!(out, "v2 = v1.g^-1 = {}", show(v2.as_matrix()));
    let _ = writeln!(out, "v2.g       = {}", show(back.as_matrix()));
    let _ = writeln!(out, "v1.e1      = {}", show(lhs.as_matrix()));
    let _ = writeln!(out, "v2.e2      = {}", show(rhs.as_matrix()));
    let _ = writeln!(out, "{}", verdict(equal));
    Ok(DemoOutput { text: out, equal })
}

fn endo(inputs: &DemoInputs) -> Result<DemoOutput, DemoError> {
    let g = passive(required("g", &inputs.g)?)?;
    let n = g.dim();
    let f_text = required("f", &inputs.f)?;
    let f = matrix("f", f_text)?;
    if f.shape() != (n, n) {
        return Err(input_err("f", f_text)(Error::ShapeMismatch(format!(
            "endomorphism must be {n}x{n}, got {}x{}",
            f.rows(),
            f.cols()
        ))));
    }
    let v2 = row("u", &inputs.u, n, || ones(n))?;
    let e1 = Basis::reference(n);
    let f1 = hom_from_matrix(f, e1.clone(), e1.clone())?;
    let f2 = endo_transform(&f1, &g)?;
    let v1 = passive_coords_forward(&g, &v2)?;
    let w2 = apply_hom(&f2, &v2)?;
    let w1 = apply_hom(&f1, &v1)?;
    let lhs = expand_in_reference(&w2, f2.basis_out())?;
    let rhs = expand_in_reference(&w1, &e1)?;
    let equal = lhs == rhs;

    let mut out = String::new();
    let _ = writeln!(out, "endomorphism under e2 = g.e1, e1 = reference frame");
    let _ = writeln!(out, "g             = {}", show(g.matrix()));
    let _ = writeln!(out, "f1            = {}", show(f1.matrix()));
    let _ = writeln!(out, "f2 = g.f1.g^-1 = {}", show(f2.matrix()));
    let _ = writeln!(out, "v2            = {}", show(v2.as_matrix()));
    let _ = writeln!(out, "v1 = v2.g     = {}", show(v1.as_matrix()));
    let _ = writeln!(out, "v2.f2         = {}", show(w2.as_matrix()));
    let _ = writeln!(out, "v1.f1         = {}", show(w1.as_matrix()));
    let _ = writeln!(out, "(v2.f2).e2    = {}", show(lhs.as_matrix()));
    let _ = writeln!(out, "(v1.f1).e1    = {}", show(rhs.as_matrix()));
    let _ = writeln!(out, "{}", verdict(equal));
    Ok(DemoOutput { text: out, equal })
}

fn tensor_map(value: &Option<String>, n: usize) -> Result<TensorPolyMap<Q>, DemoError> {
    let text = required("a", value)?;
    parse_tensor_map(text, n).map_err(input_err("a", text))
}

fn polylinear(inputs: &DemoInputs) -> Result<DemoOutput, DemoError> {
    let g = passive(required("g", &inputs.g)?)?;
    let n = g.dim();
    let a1 = tensor_map(&inputs.a, n)?;
    let arity = a1.arity();
    let vs2: Vec<CoordRow<Q>> = match &inputs.u {
        None => vec![ones(n); arity],
        Some(text) => {
            let m = matrix("u", text)?;
            if m.shape() != (arity, n) {
                return Err(input_err("u", text)(Error::ShapeMismatch(format!(
                    "expected {arity} argument rows of {n} coordinates, got {}x{}",
                    m.rows(),
                    m.cols()
                ))));
            }
            (0..arity)
                .map(|r| CoordRow::new(m.row(r).to_vec()))
                .collect()
        }
    };
    let e1 = Basis::reference(n);
    let e2 = passive_apply_basis(&g, &e1)?;
    let a2 = transform_polylinear(&a1, &g)?;
    let vs1 = vs2
        .iter()
        .map(|v| passive_coords_forward(&g, v))
        .collect::<nccov::Result<Vec<_>>>()?;
    let w2 = apply_polylinear(&a2, &vs2)?;
    let w1 = apply_polylinear(&a1, &vs1)?;
    let lhs = expand_in_reference(&w2, &e2)?;
    let rhs = expand_in_reference(&w1, &e1)?;
    let equal = lhs == rhs;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "polylinear map of arity {arity} under e2 = g.e1, e1 = reference frame"
    );
    let _ = writeln!(out, "g  = {}", show(g.matrix()));
    show_map(&mut out, "a1", &a1);
    let _ = writeln!(
        out,
        "a2 terms: a_s0 (x) g[k1][j1].a_s1 (x) ... (x) g[kn][jn].a_sn.g^-1[i][l]"
    );
    show_map(&mut out, "a2", &a2);
    for (slot, (v2, v1)) in vs2.iter().zip(&vs1).enumerate() {
        let _ = writeln!(
            out,
            "x{} : v2 = {}, v1 = v2.g = {}",
            slot + 1,
            show(v2.as_matrix()),
            show(v1.as_matrix())
        );
    }
    let _ = writeln!(out, "a2(v2...)      = {}", show(w2.as_matrix()));
    let _ = writeln!(out, "a1(v1...)      = {}", show(w1.as_matrix()));
    let _ = writeln!(out, "a2(v2...).e2   = {}", show(lhs.as_matrix()));
    let _ = writeln!(out, "a1(v1...).e1   = {}", show(rhs.as_matrix()));
    let _ = writeln!(out, "{}", verdict(equal));
    Ok(DemoOutput { text: out, equal })
}

fn skew(inputs: &DemoInputs) -> Result<DemoOutput, DemoError> {
    let g = passive(required("g", &inputs.g)?)?;
    let n = g.dim();
    let a_text = required("a", &inputs.a)?;
    let h1 = tensor_map(&inputs.a, n)?;
    if h1.arity() != 2 {
        return Err(input_err("a", a_text)(Error::ArityMismatch {
            expected: 2,
            got: h1.arity(),
        }));
    }
    let u2 = row("u", &inputs.u, n, || CoordRow::scaled_unit(n, 0, &Q::i()))?;
    let v2 = row("v", &inputs.v, n, || {
        CoordRow::scaled_unit(n, n - 1, &Q::j())
    })?;
    let e1 = Basis::reference(n);
    let e2 = passive_apply_basis(&g, &e1)?;
    let h2 = transform_polylinear(&h1, &g)?;
    let u1 = passive_coords_forward(&g, &u2)?;
    let v1 = passive_coords_forward(&g, &v2)?;
    let s2 = skew_apply(&h2, &u2, &v2)?;
    let s2_det = skew_apply_detstar(&h2, &u2, &v2)?;
    let s2_swapped = skew_apply(&h2, &v2, &u2)?;
    let s1 = skew_apply(&h1, &u1, &v1)?;
    let lhs = expand_in_reference(&s2, &e2)?;
    let rhs = expand_in_reference(&s1, &e1)?;
    let antisymmetric = s2.add(&s2_swapped)?.is_zero();
    let equal = lhs == rhs && s2 == s2_det && antisymmetric;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "skew map h(u,v) = 1/2 (h(u,v) - h(v,u)) under e2 = g.e1"
    );
    let _ = writeln!(out, "g  = {}", show(g.matrix()));
    show_map(&mut out, "h1", &h1);
    show_map(&mut out, "h2", &h2);
    let _ = writeln!(
        out,
        "u2 = {}, u1 = u2.g = {}",
        show(u2.as_matrix()),
        show(u1.as_matrix())
    );
    let _ = writeln!(
        out,
        "v2 = {}, v1 = v2.g = {}",
        show(v2.as_matrix()),
        show(v1.as_matrix())
    );
    let _ = writeln!(out, "skew h2(u2,v2)            = {}", show(s2.as_matrix()));
    let _ = writeln!(
        out,
        "via det*(u^j,v^j,u^k,v^k) = {}",
        show(s2_det.as_matrix())
    );
    let _ = writeln!(
        out,
        "skew h2(v2,u2)            = {}",
        show(s2_swapped.as_matrix())
    );
    let _ = writeln!(out, "skew h1(u1,v1)            = {}", show(s1.as_matrix()));
    let _ = writeln!(out, "h2(u2,v2).e2              = {}", show(lhs.as_matrix()));
    let _ = writeln!(out, "h1(u1,v1).e1              = {}", show(rhs.as_matrix()));
    let _ = writeln!(out, "{}", verdict(equal));
    Ok(DemoOutput { text: out, equal })
}
