//! Plain-text arrangement files:
//!
//! ```text
//! # three lines
//! dim 2
//! 1 0 | 0
//! 0 1 | 0
//! 1 1 | 1
//! ```

use std::fmt::Write as _;

use super::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::exact_math::Rational;

pub fn parse_rational(token: &str, line: usize) -> Result<Rational> {
    let bad = || Error::Parse {
        line,
        message: format!("not a rational: {token:?}"),
    };
    if let Some((_, den)) = token.split_once('/') {
        if den.trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(bad());
        }
    }
    token.parse::<Rational>().map_err(|_| bad())
}

/// Parses the arrangement text format. Lines starting with `#` and blank
/// lines are ignored; the first remaining line must be `dim d`.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_no, first) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `dim d` header".into(),
    })?;
    let dim = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dim", d] => d.parse::<usize>().map_err(|_| Error::Parse {
            line: first_no,
            message: format!("bad dimension {d:?}"),
        })?,
        _ => {
            return Err(Error::Parse {
                line: first_no,
                message: "expected `dim d`".into(),
            })
        }
    };
    let mut hyperplanes = Vec::new();
    for (no, line) in lines {
        let (lhs, rhs) = line.split_once('|').ok_or(Error::Parse {
            line: no,
            message: "expected `c_1 ... c_d | a`".into(),
        })?;
        let normal = lhs
            .split_whitespace()
            .map(|t| parse_rational(t, no))
            .collect::<Result<Vec<_>>>()?;
        if normal.len() != dim {
            return Err(Error::Parse {
                line: no,
                message: format!("expected {dim} coefficients, found {}", normal.len()),
            });
        }
        let rhs: Vec<&str> = rhs.split_whitespace().collect();
        let [offset] = rhs.as_slice() else {
            return Err(Error::Parse {
                line: no,
                message: "expected a single offset after `|`".into(),
            });
        };
        let offset = parse_rational(offset, no)?;
        let h = Hyperplane::new(normal, offset).map_err(|e| Error::Parse {
            line: no,
            message: e.to_string(),
        })?;
        hyperplanes.push(h);
    }
    Arrangement::new(dim, hyperplanes)
}

/// Inverse of [`parse_arrangement`] (up to comments and canonical scaling).
pub fn format_arrangement(a: &Arrangement) -> String {
    let mut out = format!("dim {}\n", a.dim());
    for (h, label) in a.hyperplanes().iter().zip(a.labels()) {
        let coeffs: Vec<String> = h.normal().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "# {label}");
        let _ = writeln!(out, "{} | {}", coeffs.join(" "), h.offset());
    }
    out
}
