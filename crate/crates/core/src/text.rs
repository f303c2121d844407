//! Shared pieces of the text grammars: braced integer lists (`{1,4,6}`) and
//! one-line permutations (`64573812` or `6,4,5,7,3,8,1,2`).

use std::fmt;

use crate::error::{Error, Result};

fn parse_positive(tok: &str, whole: &str) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad integer {tok:?} in {whole:?}")));
    }
    let v: usize = tok
        .parse()
        .map_err(|_| Error::Parse(format!("integer {tok:?} out of range in {whole:?}")))?;
    if v == 0 {
        return Err(Error::Parse(format!(
            "0 is not a valid element in {whole:?}"
        )));
    }
    Ok(v)
}

/// `{a,b,c}` with no whitespace; `{}` yields an empty list.
pub(crate) fn parse_braced_list(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected {{...}}, got {s:?}")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| parse_positive(t, s)).collect()
}

pub(crate) fn write_braced_list<I: IntoIterator<Item = usize>>(
    f: &mut fmt::Formatter<'_>,
    items: I,
) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in items.into_iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

/// Compact form is only valid for single-digit entries; the comma form is
/// accepted for any size.
pub(crate) fn parse_one_line(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    if s.contains(',') {
        return s.split(',').map(|t| parse_positive(t, s)).collect();
    }
    if s.len() > 9 {
        return Err(Error::Parse(format!(
            "compact form is limited to n <= 9; use commas for {s:?}"
        )));
    }
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) if d > 0 => Ok(d as usize),
            _ => Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        })
        .collect()
}

pub(crate) fn write_one_line(f: &mut fmt::Formatter<'_>, entries: &[usize]) -> fmt::Result {
    let sep = if entries.len() <= 9 { "" } else { "," };
    for (i, x) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}
