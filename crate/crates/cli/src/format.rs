//! Matrix files and JSON values.
//!
//! A matrix file holds one row per line with whitespace-separated entries.
//! Entries are integers, decimals (`0.5`) or fractions (`-3/2`), all read
//! exactly. Blank lines and lines starting with `#` are ignored. Both `-` and
//! the Unicode minus sign are accepted.

use std::fmt;

use serde_json::Value;
use tropical_groups::{ExtTropMatrix, ExtTropScalar, Matrix, ProjPoint, TropMatrix, TropScalar, TropVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// One-based line number, if the error is tied to a line.
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: String) -> Self {
        ParseError {
            line: Some(line),
            message,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses one exact rational: `12`, `-0.25`, `7/3`.
pub fn parse_scalar(token: &str) -> Result<TropScalar, String> {
    let normalized = token.replace('\u{2212}', "-");
    let s = normalized.as_str();
    let bad = || format!("invalid number '{token}'");
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.parse().map_err(|_| bad())?;
        let q: i128 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(format!("zero denominator in '{token}'"));
        }
        return Ok(TropScalar::new(p, q));
    }
    if let Some((int_part, frac)) = s.split_once('.') {
        let (negative, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(digits) || !all_digits(frac) || (digits.is_empty() && frac.is_empty()) {
            return Err(bad());
        }
        let scale = 10i128.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let whole: i128 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let part: i128 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let numer = whole
            .checked_mul(scale)
            .and_then(|w| w.checked_add(part))
            .ok_or_else(bad)?;
        return Ok(TropScalar::new(if negative { -numer } else { numer }, scale));
    }
    s.parse::<i128>().map(TropScalar::from_integer).map_err(|_| bad())
}

fn parse_ext_scalar(token: &str) -> Result<ExtTropScalar, String> {
    match token.replace('\u{2212}', "-").as_str() {
        "-inf" => Ok(ExtTropScalar::Bottom),
        _ => parse_scalar(token).map(ExtTropScalar::Finite),
    }
}

fn parse_rows<T: Copy>(text: &str, entry: impl Fn(&str) -> Result<T, String>) -> Result<Matrix<T>, ParseError> {
    let mut rows: Vec<Vec<T>> = Vec::new();
    let mut first_line = 0;
    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let row = trimmed
            .split_whitespace()
            .enumerate()
            .map(|(col, token)| {
                if token == "-inf" || token == "\u{2212}inf" {
                    entry(token).map_err(|_| format!("entry {}: -inf is not allowed here", col + 1))
                } else {
                    entry(token).map_err(|m| format!("entry {}: {m}", col + 1))
                }
            })
            .collect::<Result<Vec<T>, String>>()
            .map_err(|m| ParseError::at(line_no, m))?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::at(
                    line_no,
                    format!(
                        "row has {} entries but line {first_line} has {}",
                        row.len(),
                        first.len()
                    ),
                ));
            }
        } else {
            first_line = line_no;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError {
            line: None,
            message: "no rows found".into(),
        });
    }
    let (r, c) = (rows.len(), rows[0].len());
    Matrix::from_vec(r, c, rows.into_iter().flatten().collect()).map_err(|e| ParseError {
        line: None,
        message: e.to_string(),
    })
}

/// Parses a matrix with finite entries.
pub fn parse_matrix(text: &str) -> Result<TropMatrix, ParseError> {
    parse_rows(text, parse_scalar)
}

/// Parses a matrix whose entries may be `-inf`.
pub fn parse_ext_matrix(text: &str) -> Result<ExtTropMatrix, ParseError> {
    parse_rows(text, parse_ext_scalar)
}

/// Parses a vector written as a single row or a single column.
pub fn parse_vector(text: &str) -> Result<TropVector, ParseError> {
    let m = parse_matrix(text)?;
    match m.shape() {
        (1, _) => Ok(TropVector(m.row(0).to_vec())),
        (_, 1) => Ok(TropVector(m.column(0))),
        (r, c) => Err(ParseError {
            line: None,
            message: format!("expected a vector, found a {r}x{c} matrix"),
        }),
    }
}

/// Canonical text of a parsed matrix: reduced fractions, single spaces, one row per line.
pub fn canonical_text<T: Copy + fmt::Display>(m: &Matrix<T>) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn scalar(v: &TropScalar) -> Value {
    Value::String(v.to_string())
}

pub fn ext_scalar(v: &ExtTropScalar) -> Value {
    Value::String(v.to_string())
}

pub fn vector(v: &[TropScalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn matrix(m: &TropMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector(m.row(i))).collect())
}

pub fn ext_matrix(m: &ExtTropMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(ext_scalar).collect()))
            .collect(),
    )
}

pub fn int_matrix(m: &Matrix<i64>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|&v| v.into()).collect()))
            .collect(),
    )
}

pub fn proj_point(p: &ProjPoint) -> Value {
    vector(&p.0)
}

/// One-based indices.
pub fn indices(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&i| (i + 1).into()).collect())
}

/// Permutation in one-line image form, one-based.
pub fn permutation(sigma: &[usize]) -> Value {
    indices(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropical_groups::rat;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("0.5"), Ok(rat(1, 2)));
        assert_eq!(parse_scalar("-0.25"), Ok(rat(-1, 4)));
        assert_eq!(parse_scalar("\u{2212}3/2"), Ok(rat(-3, 2)));
        assert_eq!(parse_scalar("4/6"), Ok(rat(2, 3)));
        assert_eq!(parse_scalar("-.5"), Ok(rat(-1, 2)));
        assert_eq!(parse_scalar("7."), Ok(rat(7, 1)));
        assert_eq!(parse_scalar("+2"), Ok(rat(2, 1)));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar(".").is_err());
        assert!(parse_scalar("1e3").is_err());
        assert!(parse_scalar("-inf").is_err());
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("# E\n0 -1\n\n\u{2212}2 0\n").unwrap();
        assert_eq!(canonical_text(&m), "0 -1\n-2 0\n");
        let err = parse_matrix("0 1\n2\n").unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = parse_matrix("0 -inf\n0 0\n").unwrap_err();
        assert_eq!(err.to_string(), "line 1: entry 2: -inf is not allowed here");
        assert!(parse_matrix("\n# nothing\n").is_err());
        let ext = parse_ext_matrix("0 -inf\n-inf 0").unwrap();
        assert_eq!(canonical_text(&ext), "0 -inf\n-inf 0\n");
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("1 2 3").unwrap(), parse_vector("1\n2\n3\n").unwrap());
        assert!(parse_vector("1 2\n3 4").is_err());
    }

    #[test]
    fn serialized_scalars_reparse() {
        for v in [rat(-1, 2), rat(0, 1), rat(7, 3), rat(-12, 1)] {
            let Value::String(s) = scalar(&v) else { panic!() };
            assert_eq!(parse_scalar(&s), Ok(v));
        }
    }
}
