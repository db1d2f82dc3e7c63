//! The loop file interchange format.
//!
//! `#` starts a comment line and blank lines are ignored. The first data
//! line is the order n; the next n lines carry n whitespace-separated
//! 1-based entries each. The writer emits the same shape.

use std::io::Write;
use std::path::Path;

use thiserror::Error;

use crate::table::{LoopTable, ValidateError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error(transparent)]
    Invalid(#[from] ValidateError),
}

pub fn parse_loop_str(input: &str) -> Result<LoopTable, ParseError> {
    let mut data_lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_no, first) = data_lines.next().ok_or(ParseError::Malformed {
        line: 0,
        msg: "empty file".to_string(),
    })?;
    let n: usize = first.parse().map_err(|_| ParseError::Malformed {
        line: first_no,
        msg: format!("expected the order, found {first:?}"),
    })?;
    if n == 0 {
        return Err(ParseError::Malformed {
            line: first_no,
            msg: "order must be at least 1".to_string(),
        });
    }
    let mut raw: Vec<Vec<usize>> = Vec::with_capacity(n);
    for _ in 0..n {
        let (line_no, line) = data_lines.next().ok_or(ParseError::Malformed {
            line: first_no,
            msg: format!("expected {n} table rows"),
        })?;
        let mut row = Vec::with_capacity(n);
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| ParseError::Malformed {
                line: line_no,
                msg: format!("bad entry {tok:?}"),
            })?;
            if v == 0 {
                return Err(ParseError::Malformed {
                    line: line_no,
                    msg: "entries are 1-based".to_string(),
                });
            }
            row.push(v - 1);
        }
        raw.push(row);
    }
    if let Some((line_no, _)) = data_lines.next() {
        return Err(ParseError::Malformed {
            line: line_no,
            msg: "trailing data after the table".to_string(),
        });
    }
    Ok(LoopTable::validate(&raw)?)
}

pub fn read_loop_file(path: &Path) -> Result<LoopTable, ParseError> {
    parse_loop_str(&std::fs::read_to_string(path)?)
}

/// Renders a loop in the interchange format, with optional leading comments.
pub fn format_loop(t: &LoopTable, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&t.n().to_string());
    out.push('\n');
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(|&v| (v + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_loop_file(path: &Path, t: &LoopTable, comments: &[String]) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(format_loop(t, comments).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# additive group\n\n3\n1 2 3\n2 3 1\n\n3 1 2\n";
        let t = parse_loop_str(text).unwrap();
        assert_eq!(t, catalog::cyclic(3));
    }

    #[test]
    fn rejects_zero_entries_and_garbage() {
        assert!(matches!(
            parse_loop_str("2\n0 1\n1 0\n"),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            parse_loop_str("2\n1 x\n2 1\n"),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            parse_loop_str("2\n1 2\n2 1\n1 2\n"),
            Err(ParseError::Malformed { .. })
        ));
    }

    #[test]
    fn propagates_validation_failures() {
        let text = "2\n1 2\n1 2\n";
        assert!(matches!(
            parse_loop_str(text),
            Err(ParseError::Invalid(_))
        ));
    }

    proptest! {
        #[test]
        fn roundtrip(idx in 0usize..56) {
            let t = crate::enumerate::reduced_loops(5)[idx].clone();
            let text = format_loop(&t, &["roundtrip".to_string()]);
            let back = parse_loop_str(&text).unwrap();
            prop_assert_eq!(t, back);
        }
    }
}
