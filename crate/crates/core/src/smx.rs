//! SMX text format.
//!
//! ```text
//! # optional comment lines
//! 3 4
//! 1/2 0 1/2 0
//! 3/10 0 0 7/10
//! 0.4 1/5 2/5 0
//! ```
//!
//! Line 1 (after comments) is `m n`; then `m` lines of `n` whitespace
//! separated entries, each `p/q`, an integer, or a finite decimal. Blank
//! lines and lines starting with `#` are ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_integer(text: &str, line: usize) -> Result<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(line, format!("malformed number `{text}`")));
    }
    text.parse::<BigInt>()
        .map_err(|_| parse_err(line, format!("malformed number `{text}`")))
}

/// Exact value of a `p/q`, integer, or finite decimal token.
pub fn parse_rational(token: &str, line: usize) -> Result<Rational> {
    if let Some((p, q)) = token.split_once('/') {
        let numer = parse_integer(p, line)?;
        let denom = parse_integer(q, line)?;
        if denom.is_zero() {
            return Err(Error::ZeroDenominator { line });
        }
        return Ok(Rational::new(numer, denom));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        let negative = whole.starts_with('-');
        let unsigned_whole = whole.trim_start_matches(['+', '-']);
        if whole.len() - unsigned_whole.len() > 1
            || (unsigned_whole.is_empty() && frac.is_empty())
            || !unsigned_whole.bytes().all(|b| b.is_ascii_digit())
            || !frac.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(parse_err(line, format!("malformed number `{token}`")));
        }
        let digits = format!("{unsigned_whole}{frac}");
        let magnitude: BigInt = digits.parse().unwrap_or_default();
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let value = Rational::new(magnitude, scale);
        return Ok(if negative { -value } else { value });
    }
    Ok(Rational::from_integer(parse_integer(token, line)?))
}

fn parse_dimension(token: &str, line: usize) -> Result<usize> {
    match token.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(parse_err(
            line,
            format!("dimension `{token}` is not a positive integer"),
        )),
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing `m n` header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [m, n] = dims.as_slice() else {
        return Err(parse_err(header_line, "header must be `m n`"));
    };
    let (m, n) = (parse_dimension(m, header_line)?, parse_dimension(n, header_line)?);
    let mut rows = Vec::with_capacity(m);
    for (line, body) in lines {
        if rows.len() == m {
            return Err(parse_err(
                line,
                format!("more than the {m} rows declared in the header"),
            ));
        }
        let row = body
            .split_whitespace()
            .map(|t| parse_rational(t, line))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {m} rows, found {}", rows.len()),
        ));
    }
    Matrix::from_rows(rows)
}

/// Header line plus the aligned rows of [`Matrix`]'s `Display`.
pub fn emit_matrix(a: &Matrix) -> String {
    format!("{} {}\n{a}", a.rows(), a.cols())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn parses_example_matrix() {
        let a = parse_matrix("3 4\n1/2 0 1/2 0\n3/10 0 0 7/10\n2/5 1/5 2/5 0").unwrap();
        assert_eq!(
            a,
            Matrix::from_fracs(&[
                [(1, 2), (0, 1), (1, 2), (0, 1)],
                [(3, 10), (0, 1), (0, 1), (7, 10)],
                [(2, 5), (1, 5), (2, 5), (0, 1)],
            ])
        );
        assert_eq!(parse_matrix("1 1\n1").unwrap(), Matrix::from_ints(&[[1]]));
        assert_eq!(
            parse_matrix("2 2\n0.5 0.5\n0.5 0.5").unwrap(),
            Matrix::from_fracs(&[[(1, 2), (1, 2)], [(1, 2), (1, 2)]])
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let a = parse_matrix("# face pattern\n\n1 2\n  # row\n1 0\n").unwrap();
        assert_eq!(a, Matrix::from_ints(&[[1, 0]]));
    }

    #[test]
    fn number_forms() {
        assert_eq!(parse_rational("-3/6", 1).unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("-1.25", 1).unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational(".5", 1).unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("2.", 1).unwrap(), int(2));
        assert_eq!(parse_rational("+7", 1).unwrap(), int(7));
        for bad in ["", "1/", "/2", "1e3", "0x1", "--1", ".", "1.2.3", "1/2/3", "a"] {
            assert!(parse_rational(bad, 4).is_err(), "{bad}");
        }
        assert_eq!(
            parse_rational("1/0", 4).unwrap_err(),
            Error::ZeroDenominator { line: 4 }
        );
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "2\n1 0",
            "0 2\n",
            "2 2\n1 0\n",
            "1 2\n1 0\n0 1",
            "1 2\n1 0 0",
            "1 2\n1 x",
        ] {
            let err = parse_matrix(bad).unwrap_err();
            assert!(err.is_parse(), "{bad:?} gave {err:?}");
        }
        let err = parse_matrix("1 2\n1/0 1").unwrap_err();
        assert_eq!(err, Error::ZeroDenominator { line: 2 });
    }

    #[test]
    fn emit_then_parse() {
        let a = Matrix::from_fracs(&[[(1, 2), (-1, 3)], [(7, 1), (0, 1)]]);
        let text = emit_matrix(&a);
        assert_eq!(text, "2 2\n1/2  -1/3\n  7     0\n");
        assert_eq!(parse_matrix(&text).unwrap(), a);
    }
}
