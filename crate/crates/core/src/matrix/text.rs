//! Matrix text format.
//!
//! ```text
//! <rows> <cols>\n
//! <cols chars of '+' or '-'>\n     (repeated rows times)
//! ```
//!
//! Numbers are plain ASCII decimal separated by exactly one space. Every line,
//! including the last, ends with `\n`. Nothing else is accepted.

use super::{BinaryMatrix, Sign};
use crate::error::ParseError;

pub(super) fn parse(input: &str) -> Result<BinaryMatrix, ParseError> {
    let mut lines = input.split_inclusive('\n').enumerate().map(|(k, l)| (k + 1, l));

    let (_, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    let header = strip_newline(header, 1)?;
    let (rows, cols) = parse_header(header)?;

    let mut masks = vec![Vec::new(); rows];
    for (r, mask) in masks.iter_mut().enumerate() {
        let line_no = r + 2;
        let (_, line) = lines
            .next()
            .ok_or_else(|| ParseError::new(line_no, 1, format!("expected {rows} matrix rows, found {r}")))?;
        let line = strip_newline(line, line_no)?;
        let mut row = Vec::with_capacity(cols);
        for (k, ch) in line.chars().enumerate() {
            let sign = match ch {
                '+' => Sign::Plus,
                '-' => Sign::Minus,
                other => {
                    return Err(ParseError::new(
                        line_no,
                        k + 1,
                        format!("unexpected character {other:?}"),
                    ));
                }
            };
            if k >= cols {
                return Err(ParseError::new(
                    line_no,
                    k + 1,
                    format!("row longer than {cols} columns"),
                ));
            }
            row.push(sign);
        }
        if row.len() < cols {
            return Err(ParseError::new(
                line_no,
                row.len() + 1,
                format!("row has {} entries, expected {cols}", row.len()),
            ));
        }
        *mask = row;
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(ParseError::new(line_no, 1, "trailing content after last row"));
    }

    BinaryMatrix::from_fn(rows, cols, |i, j| masks[i - 1][j - 1]).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

fn strip_newline(line: &str, line_no: usize) -> Result<&str, ParseError> {
    line.strip_suffix('\n')
        .ok_or_else(|| ParseError::new(line_no, line.chars().count() + 1, "missing trailing newline"))
}

fn parse_header(header: &str) -> Result<(usize, usize), ParseError> {
    let (a, b) = header
        .split_once(' ')
        .ok_or_else(|| ParseError::new(1, header.chars().count() + 1, "header must be \"<rows> <cols>\""))?;
    let rows = parse_count(a, 1)?;
    let cols = parse_count(b, a.len() + 2)?;
    Ok((rows, cols))
}

fn parse_count(s: &str, column: usize) -> Result<usize, ParseError> {
    if let Some(pos) = s.find(|c: char| !c.is_ascii_digit()) {
        let bad = s[pos..].chars().next().unwrap();
        return Err(ParseError::new(
            1,
            column + s[..pos].chars().count(),
            format!("unexpected character {bad:?} in header"),
        ));
    }
    if s.is_empty() {
        return Err(ParseError::new(1, column, "missing dimension"));
    }
    match s.parse::<usize>() {
        Ok(0) => Err(ParseError::new(1, column, "dimension must be positive")),
        Ok(n) => Ok(n),
        Err(_) => Err(ParseError::new(1, column, "dimension too large")),
    }
}
