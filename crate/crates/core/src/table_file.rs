//! Plain-text table files.
//!
//! ```text
//! # comment
//! n 3
//! zero 0
//! 0 0 0
//! 0 1 0
//! 0 0 2
//! label 1 e
//! ```
//!
//! Line one is `n <size>`, an optional `zero <index>` follows, then `size`
//! rows of products, then optional `label <index> <text>` lines.

use thiserror::Error;

use crate::semigroup::{FiniteSemigroup, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Table(#[from] TableError),
}

fn syntax(line: usize, message: impl Into<String>) -> TableFileError {
    TableFileError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_index(line: usize, token: &str) -> Result<usize, TableFileError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, got `{token}`")))
}

pub fn parse_table_file(text: &str) -> Result<FiniteSemigroup, TableFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();

    let (lineno, header) = lines.next().ok_or_else(|| syntax(1, "missing `n <size>` line"))?;
    let size = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", size] => parse_index(lineno, size)?,
        _ => return Err(syntax(lineno, "expected `n <size>`")),
    };
    let mut zero = None;
    if let Some((lineno, line)) = lines.peek().copied() {
        if let Some(rest) = line.strip_prefix("zero") {
            zero = Some(parse_index(lineno, rest.trim())?);
            lines.next();
        }
    }
    let mut rows = Vec::with_capacity(size);
    for _ in 0..size {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| syntax(text.lines().count(), format!("expected {size} table rows")))?;
        let row = line
            .split_whitespace()
            .map(|t| parse_index(lineno, t))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != size {
            return Err(syntax(lineno, format!("row has {} entries, expected {size}", row.len())));
        }
        rows.push(row);
    }
    let mut labels: Option<Vec<String>> = None;
    for (lineno, line) in lines {
        let rest = line
            .strip_prefix("label")
            .ok_or_else(|| syntax(lineno, "expected `label <index> <text>`"))?
            .trim_start();
        let (index, label) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| syntax(lineno, "expected `label <index> <text>`"))?;
        let index = parse_index(lineno, index)?;
        if index >= size {
            return Err(syntax(lineno, format!("label index {index} out of range")));
        }
        labels.get_or_insert_with(|| (0..size).map(|i| i.to_string()).collect())[index] =
            label.trim().to_string();
    }
    let s = FiniteSemigroup::from_table(&rows, zero)?;
    Ok(match labels {
        Some(labels) => s.with_labels(labels)?,
        None => s,
    })
}

pub fn write_table_file(s: &FiniteSemigroup) -> String {
    let mut out = format!("n {}\n", s.size());
    if let Some(z) = s.zero() {
        out.push_str(&format!("zero {z}\n"));
    }
    out.push_str(&s.to_string());
    if let Some(labels) = s.labels() {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("label {i} {l}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_example() {
        let text = "# semilattice with zero\nn 3\nzero 0\n0 0 0\n0 1 0\n0 0 2\nlabel 1 e\n";
        let s = parse_table_file(text).unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.label(1), "e");
        assert_eq!(s.label(2), "2");
        assert_eq!(parse_table_file(&write_table_file(&s)).unwrap(), s);
    }

    #[test]
    fn reports_bad_input() {
        assert!(matches!(
            parse_table_file("n 2\n1 0\n0 0\n"),
            Err(TableFileError::Table(TableError::NonAssociative { .. }))
        ));
        assert!(matches!(
            parse_table_file("n 2\n0 0\n"),
            Err(TableFileError::Syntax { .. })
        ));
        assert!(matches!(
            parse_table_file("size 2"),
            Err(TableFileError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_table_file("n 1\n0\nlabel 3 x\n"),
            Err(TableFileError::Syntax { line: 3, .. })
        ));
    }
}
