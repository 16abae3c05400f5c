//! Line-oriented `key: value` text used by field files, root-set files and certificates.
//!
//! Blank lines and lines starting with `#` are ignored. A key may repeat;
//! values are kept in file order.

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, RatMatrix, Rational};

#[derive(Clone, Debug, Default)]
pub struct KeyValues {
    entries: Vec<(String, String)>,
}

impl KeyValues {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {}: expected `key: value`", lineno + 1)))?;
            entries.push((k.trim().to_string(), v.trim().to_string()));
        }
        Ok(Self { entries })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn all(&self, key: &str) -> Vec<&str> {
        self.entries.iter().filter(|(k, _)| k == key).map(|(_, v)| v.as_str()).collect()
    }

    pub fn required(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::Parse(format!("missing key `{key}`")))
    }

    pub fn rationals(&self, key: &str) -> Result<Vec<Rational>> {
        parse_rational_list(self.required(key)?)
    }

    pub fn expect_only(&self, allowed: &[&str]) -> Result<()> {
        match self.entries.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => Err(Error::Parse(format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }
}

/// Whitespace- or comma-separated rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_rational)
        .collect()
}

/// Semicolon-separated vectors, e.g. `1 0; 0 1; -1 -1`.
pub fn parse_vector_list(s: &str) -> Result<Vec<Vec<Rational>>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_rational_list)
        .collect()
}

/// Matrix file: one row per line, entries `p` or `p/q`.
pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let rows: Vec<Vec<Rational>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_rational_list)
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    RatMatrix::from_rows(rows).map_err(|_| Error::Parse("rows have different lengths".into()))
}
