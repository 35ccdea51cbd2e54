//! Plain-text fixture format for operation tables.
//!
//! A record is a header line followed by whitespace-separated table rows:
//!
//! ```text
//! group <n> [name]
//! <n rows of n entries: the multiplication table>
//!
//! ring <n> [name]
//! <n rows of n entries: the addition table>
//! <n rows of n entries: the multiplication table>
//! ```
//!
//! Identity, inverses, zero and one are derived from the tables on load and
//! the axioms are re-validated, so a fixture can never smuggle in an
//! inconsistent structure. Lines starting with `#` are comments. A file may
//! hold any number of records.

use std::fs;
use std::path::Path;

use super::{AlgebraError, AlgebraRef, FiniteAlgebra, Signature};

/// Renders one algebra as a fixture record.
pub fn write_algebra(a: &AlgebraRef) -> String {
    let n = a.size();
    let mut out = String::new();
    let render = |out: &mut String, f: &dyn Fn(usize, usize) -> usize| {
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| f(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    };
    match a.signature() {
        Signature::Group => {
            out.push_str(&format!("group {} {}\n", n, a.name()));
            render(&mut out, &|i, j| a.group_mul(i, j));
        }
        Signature::Ring => {
            out.push_str(&format!("ring {} {}\n", n, a.name()));
            render(&mut out, &|i, j| a.ring_add(i, j));
            render(&mut out, &|i, j| a.ring_mul(i, j));
        }
    }
    out
}

/// Renders a sequence of algebras separated by blank lines.
pub fn write_catalog(algebras: &[AlgebraRef]) -> String {
    algebras.iter().map(write_algebra).collect::<Vec<_>>().join("\n")
}

/// Parses every record in the text.
pub fn parse_catalog(text: &str) -> Result<Vec<AlgebraRef>, AlgebraError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut out = Vec::new();
    while lines.peek().is_some() {
        out.push(parse_record(&mut lines)?);
    }
    Ok(out)
}

/// Parses exactly one record.
pub fn parse_algebra(text: &str) -> Result<AlgebraRef, AlgebraError> {
    let all = parse_catalog(text)?;
    match all.len() {
        1 => Ok(all.into_iter().next().unwrap()),
        k => Err(AlgebraError::Parse(format!("expected one record, found {k}"))),
    }
}

pub fn read_catalog_file(path: impl AsRef<Path>) -> Result<Vec<AlgebraRef>, AlgebraError> {
    let text = fs::read_to_string(path.as_ref())
        .map_err(|e| AlgebraError::Parse(format!("cannot read file: {e}")))?;
    parse_catalog(&text)
}

pub fn write_catalog_file(
    path: impl AsRef<Path>,
    algebras: &[AlgebraRef],
) -> Result<(), AlgebraError> {
    fs::write(path.as_ref(), write_catalog(algebras))
        .map_err(|e| AlgebraError::Parse(format!("cannot write file: {e}")))
}

fn parse_record<'a, I: Iterator<Item = &'a str>>(
    lines: &mut std::iter::Peekable<I>,
) -> Result<AlgebraRef, AlgebraError> {
    let header = lines.next().ok_or_else(|| AlgebraError::Parse("missing header".into()))?;
    let mut parts = header.split_whitespace();
    let kind = parts.next().unwrap_or_default();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| AlgebraError::Parse(format!("bad header: {header:?}")))?;
    if n == 0 {
        return Err(AlgebraError::Parse("size must be positive".into()));
    }
    let name = {
        let rest: Vec<&str> = parts.collect();
        if rest.is_empty() {
            format!("{kind}{n}")
        } else {
            rest.join(" ")
        }
    };
    let table_count = match kind {
        "group" => 1,
        "ring" => 2,
        other => return Err(AlgebraError::Parse(format!("unknown record kind {other:?}"))),
    };
    let mut entries: Vec<usize> = Vec::with_capacity(table_count * n * n);
    while entries.len() < table_count * n * n {
        let line = lines
            .next()
            .ok_or_else(|| AlgebraError::Parse("unexpected end of record".into()))?;
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad table entry {tok:?}")))?;
            entries.push(v);
        }
    }
    if entries.len() != table_count * n * n {
        return Err(AlgebraError::Parse("table rows overflow the declared size".into()));
    }
    let unflatten = |chunk: &[usize]| -> Vec<Vec<usize>> {
        chunk.chunks(n).map(|row| row.to_vec()).collect()
    };
    match kind {
        "group" => FiniteAlgebra::group_from_mul(name, &unflatten(&entries)),
        _ => {
            let add = unflatten(&entries[..n * n]);
            let mul = unflatten(&entries[n * n..]);
            FiniteAlgebra::ring_from_tables(name, &add, &mul)
        }
    }
}
