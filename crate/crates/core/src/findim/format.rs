//! Text form of structure constants:
//!
//! ```text
//! field Q
//! basis e1 e2
//! e1 * e1 = e2
//! ```
//!
//! `dim n` may replace `basis` (labels `e1..en`). Products not listed are
//! zero; `#` starts a comment.

use std::fmt;

use num_traits::One;

use super::algebra::StructAlgebra;
use super::AlgebraError;
use crate::field::{Field, Scalar};
use crate::linalg::SparseVec;

fn parse_err(line: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { line, msg: msg.into() }
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(super) fn parse_algebra(text: &str) -> Result<StructAlgebra, AlgebraError> {
    let mut field = None;
    let mut alg: Option<StructAlgebra> = None;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("field ") {
            if field.is_some() {
                return Err(parse_err(line_no, "duplicate field line"));
            }
            field = Some(Field::parse(rest.trim()).map_err(|e| parse_err(line_no, e.to_string()))?);
            continue;
        }
        let labels: Option<Vec<String>> = if let Some(rest) = line.strip_prefix("basis ") {
            Some(rest.split_whitespace().map(str::to_string).collect())
        } else if let Some(rest) = line.strip_prefix("dim ") {
            let n: usize = rest.trim().parse().map_err(|_| parse_err(line_no, "bad dimension"))?;
            Some((1..=n).map(|i| format!("e{i}")).collect())
        } else {
            None
        };
        if let Some(labels) = labels {
            if alg.is_some() {
                return Err(parse_err(line_no, "basis given twice"));
            }
            if let Some(bad) = labels.iter().find(|l| !is_label(l)) {
                return Err(parse_err(line_no, format!("invalid label {bad:?}")));
            }
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(parse_err(line_no, format!("duplicate label {l}")));
                }
            }
            let f = field.unwrap_or(Field::Rationals);
            field = Some(f);
            alg = Some(StructAlgebra::new(f, labels));
            continue;
        }
        let a = alg.as_mut().ok_or_else(|| parse_err(line_no, "product before basis"))?;
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| parse_err(line_no, "expected 'a * b = ...'"))?;
        let (l, r) = lhs.split_once('*').ok_or_else(|| parse_err(line_no, "expected 'a * b' on the left"))?;
        let lookup = |s: &str| a.index_of(s.trim()).ok_or_else(|| parse_err(line_no, format!("unknown label {:?}", s.trim())));
        let (i, j) = (lookup(l)?, lookup(r)?);
        let value = parse_combination(a, rhs, line_no)?;
        if !a.basis_product(i, j).is_zero() {
            return Err(parse_err(line_no, "product given twice"));
        }
        a.set_product(i, j, value);
    }
    alg.ok_or_else(|| parse_err(text.lines().count().max(1), "missing basis or dim line"))
}

/// `c*lbl + lbl - c*lbl`, or `0`.
fn parse_combination(alg: &StructAlgebra, s: &str, line: usize) -> Result<SparseVec, AlgebraError> {
    let field = alg.field();
    let s = s.trim();
    if s == "0" {
        return Ok(SparseVec::new());
    }
    let mut entries = Vec::new();
    let mut rest = s;
    let mut first = true;
    while !rest.is_empty() {
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(parse_err(line, "leading '+'"));
            }
            rest = r.trim_start();
        } else if !first {
            return Err(parse_err(line, "expected '+' or '-'"));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = rest[..end].trim();
        rest = rest[end..].trim_start();
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => (field.parse_scalar(c.trim()).map_err(|e| parse_err(line, e.to_string()))?, l.trim()),
            None => (Scalar::one(), term),
        };
        let idx = alg.index_of(label).ok_or_else(|| parse_err(line, format!("unknown label {label:?}")))?;
        entries.push((idx, if negative { field.neg(&coeff) } else { coeff }));
    }
    Ok(SparseVec::from_entries(&field, entries))
}

pub(super) fn write_combination(alg: &StructAlgebra, v: &SparseVec, f: &mut impl fmt::Write) -> fmt::Result {
    let field = alg.field();
    if v.is_zero() {
        return f.write_str("0");
    }
    for (k, (i, c)) in v.iter().enumerate() {
        let negative = field.is_negative(c);
        let magnitude = if negative { field.neg(c) } else { c.clone() };
        match (k, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if !magnitude.is_one() {
            write!(f, "{}*", field.format_scalar(&magnitude))?;
        }
        f.write_str(alg.label(*i))?;
    }
    Ok(())
}

pub(super) fn write_algebra(alg: &StructAlgebra, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    writeln!(f, "field {}", alg.field())?;
    writeln!(f, "basis {}", alg.labels().join(" "))?;
    for (i, j, v) in alg.nonzero_products() {
        write!(f, "{} * {} = ", alg.label(i), alg.label(j))?;
        write_combination(alg, v, f)?;
        writeln!(f)?;
    }
    Ok(())
}
