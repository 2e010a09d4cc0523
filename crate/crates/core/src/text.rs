//! Text formats.
//!
//! Quaternion: `w+xi+yj+zk`, each coefficient an integer `p` or a
//! fraction `p/q`. Terms may be omitted (zero) or appear in any order,
//! a unit coefficient of one may be elided (`i`, `-k`), and whitespace
//! between tokens is ignored. Example: `1/2+i-3k`.
//!
//! Matrix: rows separated by `;`, entries by `,`, e.g. `1,i;j,1/2+k`.
//!
//! Tensor-sum map: terms separated by `|`, each written
//! `i,j1,…,jn: a0,a1,…,an` — the component index, the slot indices and
//! then the factors of one elementary tensor. The arity is the number of
//! slot indices, e.g. `0,1: i,1+j | 1,1: 1/2,k` is a linear map.
//!
//! Error offsets are byte offsets into the full input string.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::TensorPolyMap;
use crate::ncmatrix::NcMatrix;
use crate::scalar::{Quaternion, Rational};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn offset(&self) -> usize {
        self.base + self.pos
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.offset(), msg)
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Some(b) => self.err(format!("unexpected character '{}'", b as char)),
            None => self.err("unexpected end of input, expected a term"),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Some(s.parse().expect("ascii digits parse"))
    }

    /// One signed term; returns the unit index (0 = real) and coefficient.
    fn term(&mut self, negative: bool) -> Result<(usize, Rational)> {
        self.skip_ws();
        let coef_start = self.offset();
        let coef = match self.digits() {
            Some(num) => {
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    match self.digits() {
                        Some(d) => d,
                        None => return Err(self.err("expected denominator after '/'")),
                    }
                } else {
                    BigInt::from(1)
                };
                Some(
                    Rational::from_bigints(num, den)
                        .map_err(|_| Error::parse(coef_start, "zero denominator"))?,
                )
            }
            None => None,
        };
        self.skip_ws();
        let unit = match self.peek() {
            Some(b'i') => 1,
            Some(b'j') => 2,
            Some(b'k') => 3,
            _ => 0,
        };
        if unit != 0 {
            self.pos += 1;
        } else if coef.is_none() {
            return Err(self.unexpected());
        }
        let coef = coef.unwrap_or_else(Rational::one);
        Ok((unit, if negative { -coef } else { coef }))
    }

    fn quaternion(&mut self) -> Result<Quaternion> {
        let mut acc = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        self.skip_ws();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (unit, coef) = self.term(negative)?;
            acc[unit] = &acc[unit] + &coef;
            self.skip_ws();
            negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                None => break,
                Some(_) => return Err(self.unexpected()),
            };
            self.pos += 1;
        }
        let [w, x, y, z] = acc;
        Ok(Quaternion::new(w, x, y, z))
    }
}

fn parse_quaternion_at(s: &str, base: usize) -> Result<Quaternion> {
    let mut cur = Cursor {
        src: s.as_bytes(),
        pos: 0,
        base,
    };
    cur.quaternion()
}

pub fn parse_quaternion(s: &str) -> Result<Quaternion> {
    parse_quaternion_at(s, 0)
}

pub fn parse_matrix(s: &str) -> Result<NcMatrix<Quaternion>> {
    if s.trim().is_empty() {
        return Err(Error::parse(0, "empty matrix"));
    }
    let mut rows: Vec<Vec<Quaternion>> = Vec::new();
    let mut row_start = 0;
    for row in s.split(';') {
        let mut entries = Vec::new();
        let mut entry_start = row_start;
        for entry in row.split(',') {
            entries.push(parse_quaternion_at(entry, entry_start)?);
            entry_start += entry.len() + 1;
        }
        if let Some(first) = rows.first() {
            if first.len() != entries.len() {
                return Err(Error::parse(
                    row_start,
                    format!(
                        "row {} has {} entries, expected {}",
                        rows.len() + 1,
                        entries.len(),
                        first.len()
                    ),
                ));
            }
        }
        rows.push(entries);
        row_start += row.len() + 1;
    }
    NcMatrix::from_rows(rows)
}

fn parse_index(s: &str, base: usize, dim: usize) -> Result<usize> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let at = base + lead;
    let idx: usize = t
        .parse()
        .map_err(|_| Error::parse(at, format!("expected an index, found '{t}'")))?;
    if idx >= dim {
        return Err(Error::parse(
            at,
            format!("index {idx} out of range for dimension {dim}"),
        ));
    }
    Ok(idx)
}

/// Parses a tensor-sum map over dimension `dim`.
pub fn parse_tensor_map(s: &str, dim: usize) -> Result<TensorPolyMap<Quaternion>> {
    let mut terms = Vec::new();
    let mut term_start = 0;
    for term in s.split('|') {
        let colon = term.find(':').ok_or_else(|| {
            Error::parse(term_start + term.len(), "expected ':' after the indices")
        })?;
        let (idx_part, factor_part) = (&term[..colon], &term[colon + 1..]);
        let mut indices = Vec::new();
        let mut at = term_start;
        for idx in idx_part.split(',') {
            indices.push(parse_index(idx, at, dim)?);
            at += idx.len() + 1;
        }
        let mut factors = Vec::new();
        let mut at = term_start + colon + 1;
        for f in factor_part.split(',') {
            factors.push(parse_quaternion_at(f, at)?);
            at += f.len() + 1;
        }
        if indices.len() < 2 || factors.len() != indices.len() {
            return Err(Error::parse(
                term_start + term.len() - term.trim_start().len(),
                format!(
                    "a term with {} indices needs {} factors, found {}",
                    indices.len(),
                    indices.len(),
                    factors.len()
                ),
            ));
        }
        let lead = term.len() - term.trim_start().len();
        terms.push((term_start + lead, indices, factors));
        term_start += term.len() + 1;
    }
    let arity = terms[0].1.len() - 1;
    let mut a = TensorPolyMap::zero(arity, dim)?;
    for (at, indices, factors) in terms {
        if indices.len() != arity + 1 {
            return Err(Error::parse(
                at,
                format!("term of arity {}, expected {arity}", indices.len() - 1),
            ));
        }
        a.push_term(indices[0], &indices[1..], factors)?;
    }
    Ok(a)
}

/// Inverse of [`parse_tensor_map`]; a map without terms prints as the
/// empty string, which does not parse back.
pub fn format_tensor_map(a: &TensorPolyMap<Quaternion>) -> String {
    let mut out = Vec::new();
    for (i, js, terms) in a.components() {
        for term in terms {
            let idx: Vec<String> = std::iter::once(i)
                .chain(js.iter().copied())
                .map(|x| x.to_string())
                .collect();
            let fs: Vec<String> = term.iter().map(ToString::to_string).collect();
            out.push(format!("{}: {}", idx.join(","), fs.join(",")));
        }
    }
    out.join(" | ")
}

pub fn format_matrix(m: &NcMatrix<Quaternion>) -> String {
    m.to_string()
}

impl FromStr for Quaternion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_quaternion(s)
    }
}

impl FromStr for NcMatrix<Quaternion> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s)
    }
}
