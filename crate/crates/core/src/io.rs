//! Mosaic files.
//!
//! Text (`.kmo`): the dimension on the first line, then one line of
//! whitespace-separated tile labels per row. Lines starting with `#` and
//! blank lines are skipped. JSON: `{"n": 2, "tiles": [[2, 1], [3, 4]]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{MosaicError, Result};
use crate::mosaic::Mosaic;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    /// JSON when the first non-whitespace character is `{`, text otherwise.
    #[default]
    Auto,
}

impl Format {
    /// `.json` selects JSON, anything else text.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Text,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MosaicJson {
    n: usize,
    tiles: Vec<Vec<i64>>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> MosaicError {
    MosaicError::Parse { line, column, message: message.into() }
}

fn parse_text(text: &str) -> Result<Mosaic> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());

    let (first_no, first) = lines.next().ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| parse_error(first_no, 1, format!("expected the dimension, got {:?}", first.trim())))?;
    if n == 0 {
        return Err(parse_error(first_no, 1, "dimension must be at least 1"));
    }

    let mut rows = Vec::with_capacity(n);
    let mut last_line = first_no;
    for (line_no, line) in lines.by_ref().take(n) {
        last_line = line_no;
        let mut row = Vec::with_capacity(n);
        let mut col = 0;
        for token in line.split_whitespace() {
            let column = line[col..].find(token).map(|off| col + off).unwrap_or(col);
            col = column + token.len();
            let value: i64 = token
                .parse()
                .map_err(|_| parse_error(line_no, column + 1, format!("expected a tile label, got {token:?}")))?;
            row.push(value);
        }
        if row.len() != n {
            return Err(parse_error(line_no, line.len() + 1, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_error(last_line + 1, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_error(line_no, 1, format!("unexpected data after {n} rows")));
    }
    Mosaic::new(&rows)
}

fn parse_json(text: &str) -> Result<Mosaic> {
    let doc: MosaicJson = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    if doc.tiles.len() != doc.n {
        return Err(MosaicError::NotSquare { row: doc.tiles.len(), len: doc.tiles.len(), expected: doc.n });
    }
    Mosaic::new(&doc.tiles)
}

pub fn parse_mosaic(text: &str, format: Format) -> Result<Mosaic> {
    match format {
        Format::Text => parse_text(text),
        Format::Json => parse_json(text),
        Format::Auto if text.trim_start().starts_with('{') => parse_json(text),
        Format::Auto => parse_text(text),
    }
}

/// Canonical serialization, newline-terminated. `Auto` writes text.
pub fn write_mosaic(m: &Mosaic, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = MosaicJson {
                n: m.dim(),
                tiles: m.rows().map(|r| r.iter().map(|t| t.value() as i64).collect()).collect(),
            };
            serde_json::to_string(&doc).expect("mosaic serializes") + "\n"
        }
        Format::Text | Format::Auto => {
            let mut out = format!("{}\n", m.dim());
            for row in m.rows() {
                let cells: Vec<String> = row.iter().map(|t| t.value().to_string()).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            out
        }
    }
}
