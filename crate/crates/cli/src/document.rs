//! The table document: a line holding `n`, then `n` rows of `n` integers,
//! row `x` column `y` holding `F(x, y)`. Blank lines and `#` comments are
//! ignored.

use quasitrivial::OpTable;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns, up to any `#`.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in content.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, i)),
            (true, Some((scol, si))) => {
                out.push((scol, &content[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((scol, si)) = start {
        out.push((scol, &content[si..]));
    }
    out
}

pub fn parse_table(input: &str) -> Result<OpTable, ParseError> {
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, tokens(l))).filter(|(_, t)| !t.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "empty document, expected the size n"))?;
    let (hcol, htok) = header[0];
    if header.len() > 1 {
        return Err(err(hline, header[1].0, "the first line must hold only n"));
    }
    let n: usize = htok.parse().map_err(|_| err(hline, hcol, format!("expected the size n, found {htok:?}")))?;
    if n == 0 {
        return Err(err(hline, hcol, "n must be at least 1"));
    }

    let mut entries = Vec::with_capacity(n * n);
    let mut last_line = hline;
    for row in 1..=n {
        let (line, toks) =
            lines.next().ok_or_else(|| err(last_line + 1, 1, format!("expected {n} rows, found {}", row - 1)))?;
        last_line = line;
        if toks.len() != n {
            let column = toks.get(n).map_or_else(|| toks.last().map_or(1, |(c, t)| c + t.len()), |t| t.0);
            return Err(err(line, column, format!("expected {n} entries in row {row}, found {}", toks.len())));
        }
        for (col, tok) in toks {
            let v: usize = tok.parse().map_err(|_| err(line, col, format!("expected an integer, found {tok:?}")))?;
            if !(1..=n).contains(&v) {
                return Err(err(line, col, format!("value {v} is outside 1..={n}")));
            }
            entries.push(v);
        }
    }
    if let Some((line, toks)) = lines.next() {
        return Err(err(line, toks[0].0, format!("unexpected content after {n} rows")));
    }
    Ok(OpTable::new(n, entries).expect("entries were range-checked"))
}

/// Normalized form: single spaces, one trailing newline.
pub fn emit_table(f: &OpTable) -> String {
    let mut out = format!("{}\n", f.n());
    for x in 1..=f.n() {
        let row: Vec<String> = f.row(x).map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
