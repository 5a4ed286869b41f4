//! The line-oriented DFA text format.
//!
//! ```text
//! # comment
//! n k
//! d(0,0) d(0,1) ... d(0,k-1)
//! ...
//! d(n-1,0) ...
//! ```
//!
//! `#` starts a comment running to the end of the line; blank lines are
//! skipped. The trailing newline is optional.

use thiserror::Error;

use super::{Dfa, DfaError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed header on line {line}: expected \"n k\", got {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("expected {expected} transition rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    WrongColumnCount { row: usize, expected: usize, found: usize },
    #[error("row {row}, column {column}: state {value} is out of range for {n} states")]
    OutOfRange {
        row: usize,
        column: usize,
        value: usize,
        n: usize,
    },
    #[error("line {line}: {token:?} is not a state index")]
    InvalidEntry { line: usize, token: String },
    #[error(transparent)]
    Invalid(#[from] DfaError),
}

/// Parses the text format.
pub fn parse_dfa(text: &str) -> Result<Dfa, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::MalformedHeader {
        line: 1,
        text: String::new(),
    })?;
    let malformed = || ParseError::MalformedHeader {
        line: header_line,
        text: header.to_string(),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(malformed());
    }
    let n: usize = fields[0].parse().map_err(|_| malformed())?;
    let k: usize = fields[1].parse().map_err(|_| malformed())?;
    if n == 0 || k == 0 {
        return Err(malformed());
    }

    let rows: Vec<(usize, &str)> = lines.collect();
    if rows.len() != n {
        return Err(ParseError::WrongRowCount {
            expected: n,
            found: rows.len(),
        });
    }
    let mut delta = Vec::with_capacity(n * k);
    for (row, (line, text)) in rows.into_iter().enumerate() {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != k {
            return Err(ParseError::WrongColumnCount {
                row,
                expected: k,
                found: tokens.len(),
            });
        }
        for (column, token) in tokens.into_iter().enumerate() {
            let value: usize = token.parse().map_err(|_| ParseError::InvalidEntry {
                line,
                token: token.to_string(),
            })?;
            if value >= n {
                return Err(ParseError::OutOfRange { row, column, value, n });
            }
            delta.push(value);
        }
    }
    Ok(Dfa::new(n, k, delta)?)
}

/// Renders the text format, newline terminated.
pub fn serialize_dfa(dfa: &Dfa) -> String {
    let mut out = format!("{} {}\n", dfa.n(), dfa.k());
    for q in 0..dfa.n() {
        let row: Vec<String> = (0..dfa.k()).map(|s| dfa.step(q, s).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "4 2\n1 1\n2 1\n3 2\n0 3\n";

    #[test]
    fn round_trip() {
        let a = parse_dfa(C4).unwrap();
        assert_eq!(serialize_dfa(&a), C4);
        assert!(serialize_dfa(&a).starts_with("4 2"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# C_4\n4 2  # header\n\n1 1\n2 1\n# interior\n3 2\n0 3";
        assert_eq!(parse_dfa(text).unwrap(), parse_dfa(C4).unwrap());
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(parse_dfa(""), Err(ParseError::MalformedHeader { .. })));
        assert!(matches!(parse_dfa("4\n"), Err(ParseError::MalformedHeader { .. })));
        assert!(matches!(parse_dfa("x 2\n"), Err(ParseError::MalformedHeader { .. })));
        assert!(matches!(
            parse_dfa("4 2\n1 1\n2 1\n3 2\n"),
            Err(ParseError::WrongRowCount { expected: 4, found: 3 })
        ));
        assert!(matches!(
            parse_dfa("2 2\n1 1\n0\n"),
            Err(ParseError::WrongColumnCount { row: 1, .. })
        ));
        assert_eq!(
            parse_dfa("2 1\n1\n2\n"),
            Err(ParseError::OutOfRange {
                row: 1,
                column: 0,
                value: 2,
                n: 2
            })
        );
        assert!(matches!(
            parse_dfa("2 1\n1\n-1\n"),
            Err(ParseError::InvalidEntry { .. })
        ));
    }
}
