//! Text format for arrangements.
//!
//! ```text
//! # Ceva(3) arrangement
//! order 3
//! a0 : 1, -1, 0
//! a1 : 1, -z, 0
//! z  : 0, 0, 1 : 2        # optional multiplicity
//! ```
//!
//! Abstract arrangements carry no coordinates. They start with the header
//! `abstract`, list each line as `label` or `label : multiplicity`, and give
//! the points of multiplicity three or more as `point : a, b, c`.
//!
//! `#` starts a comment. Headers must precede the first record.

use std::fmt::Write as _;

use thiserror::Error;

use crate::arrangement::{ArrangementError, MultiArrangement, ProjLine, Realization};
use crate::exactfield::{parse_scalar, CycloElem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FileParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, FileParseError> {
    Err(FileParseError {
        line,
        column,
        message: message.into(),
    })
}

/// A field of a record together with its 1-based starting column.
#[derive(Debug)]
struct Field<'a> {
    text: &'a str,
    column: usize,
}

fn split_fields(s: &str, sep: char, base_col: usize) -> Vec<Field<'_>> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push(trimmed(&s[start..i], base_col + s[..start].chars().count()));
            start = i + c.len_utf8();
        }
    }
    out.push(trimmed(&s[start..], base_col + s[..start].chars().count()));
    out
}

fn trimmed(s: &str, column: usize) -> Field<'_> {
    let lead = s.chars().take_while(|c| c.is_whitespace()).count();
    Field {
        text: s.trim(),
        column: column + lead,
    }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '+' | '.' | '\'' | '(' | ')'))
}

enum Mode {
    Unset,
    Coordinates(u32),
    Abstract,
}

/// Parses the arrangement text format.
pub fn parse_arrangement(text: &str) -> Result<MultiArrangement, FileParseError> {
    let mut mode = Mode::Unset;
    let mut order_decl: Option<u32> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut mult: Vec<u32> = Vec::new();
    let mut lines: Vec<ProjLine> = Vec::new();
    let mut point_records: Vec<(usize, Vec<Field<'_>>)> = Vec::new();
    let mut first_record_line = None;
    let mut label_lines: Vec<usize> = Vec::new();

    for (ln0, raw) in text.lines().enumerate() {
        let ln = ln0 + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let head = content.trim();
        let mut words = head.split_whitespace();
        let kw = words.next().unwrap_or("");
        if kw == "order" && !head.contains(':') {
            if first_record_line.is_some() {
                return fail(ln, 1, "headers must precede records");
            }
            let arg: Vec<&str> = words.collect();
            let col = raw.find("order").unwrap_or(0) + 7;
            let n = match arg.as_slice() {
                [n] => n.parse::<u32>().ok().filter(|&n| n > 0),
                _ => None,
            };
            let Some(n) = n else {
                return fail(ln, col, "expected a positive integer order");
            };
            if matches!(mode, Mode::Abstract) {
                return fail(ln, 1, "abstract arrangements take no order");
            }
            order_decl = Some(n);
            mode = Mode::Coordinates(n);
            continue;
        }
        if kw == "abstract" && !head.contains(':') {
            if first_record_line.is_some() {
                return fail(ln, 1, "headers must precede records");
            }
            if order_decl.is_some() {
                return fail(ln, 1, "abstract arrangements take no order");
            }
            mode = Mode::Abstract;
            continue;
        }
        first_record_line.get_or_insert(ln);
        let fields = split_fields(content, ':', 1);
        let label = &fields[0];
        if label.text == "point" {
            if !matches!(mode, Mode::Abstract) {
                return fail(
                    ln,
                    label.column,
                    "point records are only allowed in abstract mode",
                );
            }
            if fields.len() != 2 {
                return fail(ln, label.column, "expected `point : a, b, c`");
            }
            point_records.push((ln, split_fields(fields[1].text, ',', fields[1].column)));
            continue;
        }
        if !valid_label(label.text) {
            return fail(
                ln,
                label.column,
                format!("invalid line label '{}'", label.text),
            );
        }
        match mode {
            Mode::Abstract => {
                let m = match fields.len() {
                    1 => 1,
                    2 => parse_mult(ln, &fields[1])?,
                    _ => return fail(ln, fields[2].column, "expected `label [: multiplicity]`"),
                };
                labels.push(label.text.to_string());
                label_lines.push(ln);
                mult.push(m);
            }
            Mode::Unset | Mode::Coordinates(_) => {
                let order = match mode {
                    Mode::Coordinates(n) => n,
                    _ => 1,
                };
                mode = Mode::Coordinates(order);
                if fields.len() < 2 || fields.len() > 3 {
                    return fail(
                        ln,
                        label.column,
                        "expected `label : a, b, c [: multiplicity]`",
                    );
                }
                let coeffs = split_fields(fields[1].text, ',', fields[1].column);
                if coeffs.len() != 3 {
                    return fail(ln, fields[1].column, "expected three coefficients");
                }
                let mut parsed: Vec<CycloElem> = Vec::with_capacity(3);
                for f in &coeffs {
                    match parse_scalar(f.text, order) {
                        Ok(v) => parsed.push(v),
                        Err(e) => return fail(ln, f.column + e.column - 1, e.message),
                    }
                }
                let m = if fields.len() == 3 {
                    parse_mult(ln, &fields[2])?
                } else {
                    1
                };
                let arr: [CycloElem; 3] = parsed.try_into().expect("three coefficients");
                let line = ProjLine::new(label.text, arr)
                    .or_else(|_| fail(ln, fields[1].column, "all coefficients are zero"))?;
                labels.push(label.text.to_string());
                label_lines.push(ln);
                lines.push(line);
                mult.push(m);
            }
        }
    }

    let labels_snapshot = labels.clone();
    // Structural errors are reported at the last record they involve.
    let to_err = |e: ArrangementError| {
        let culprit = match &e {
            ArrangementError::ProportionalLines(_, b) | ArrangementError::PairInTwoPoints(_, b) => {
                Some(b)
            }
            ArrangementError::DuplicateLabel(a) | ArrangementError::ZeroMultiplicity(a) => Some(a),
            _ => None,
        };
        let line = culprit
            .and_then(|l| labels_snapshot.iter().rposition(|x| x == l))
            .map_or(0, |i| label_lines[i]);
        FileParseError {
            line,
            column: 1,
            message: e.to_string(),
        }
    };
    match mode {
        Mode::Abstract => {
            let mut points = Vec::new();
            for (ln, fields) in point_records {
                let mut p = Vec::new();
                for f in fields {
                    match labels.iter().position(|l| l == f.text) {
                        Some(i) => p.push(i),
                        None => {
                            return fail(ln, f.column, format!("unknown line label '{}'", f.text))
                        }
                    }
                }
                points.push(p);
            }
            MultiArrangement::from_incidences(labels, mult, points).map_err(to_err)
        }
        Mode::Coordinates(order) => {
            MultiArrangement::from_lines(order, lines, mult).map_err(to_err)
        }
        Mode::Unset => MultiArrangement::from_lines(1, lines, mult).map_err(to_err),
    }
}

fn parse_mult(ln: usize, f: &Field<'_>) -> Result<u32, FileParseError> {
    match f.text.parse::<u32>() {
        Ok(m) if m > 0 => Ok(m),
        _ => fail(ln, f.column, format!("invalid multiplicity '{}'", f.text)),
    }
}

/// Writes an arrangement in the text format. Parsing the result gives back
/// an equal arrangement.
pub fn write_arrangement(arr: &MultiArrangement, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for l in c.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    let suffix = |i: usize| {
        let m = arr.multiplicities()[i];
        if m == 1 {
            String::new()
        } else {
            format!(" : {m}")
        }
    };
    match arr.realization() {
        Realization::Coordinates { order, lines } => {
            let _ = writeln!(out, "order {order}");
            for (i, l) in lines.iter().enumerate() {
                let [a, b, c] = l.coeffs();
                let _ = writeln!(out, "{} : {}, {}, {}{}", l.label(), a, b, c, suffix(i));
            }
        }
        Realization::Abstract { points } => {
            let _ = writeln!(out, "abstract");
            for i in 0..arr.len() {
                let _ = writeln!(out, "{}{}", arr.label(i), suffix(i));
            }
            for p in points {
                let names: Vec<&str> = p.iter().map(|&i| arr.label(i)).collect();
                let _ = writeln!(out, "point : {}", names.join(", "));
            }
        }
    }
    out
}
