//! `key: value` line reader shared by the text formats.
//!
//! Blank lines and lines starting with `#` are skipped; errors carry the
//! file label and the 1-based line number.

use std::str::FromStr;

use crate::error::{Error, Result};

pub struct KeyLines<'a> {
    file: &'a str,
    lines: Vec<(usize, &'a str, &'a str)>,
    pos: usize,
}

impl<'a> KeyLines<'a> {
    pub fn new(text: &'a str, file: &'a str) -> Result<Self> {
        let mut lines = Vec::new();
        for (i, l) in text.lines().enumerate() {
            let l = l.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let (k, v) = l
                .split_once(':')
                .ok_or_else(|| Error::Input { file: file.to_string(), line: i + 1, msg: "expected `key: value`".into() })?;
            lines.push((i + 1, k.trim(), v.trim()));
        }
        Ok(KeyLines { file, lines, pos: 0 })
    }

    pub fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Input { file: self.file.to_string(), line, msg: msg.into() }
    }

    /// The next line, which must have key `key`.
    pub fn expect(&mut self, key: &str) -> Result<(usize, &'a str)> {
        match self.lines.get(self.pos) {
            Some(&(no, k, v)) if k == key => {
                self.pos += 1;
                Ok((no, v))
            }
            Some(&(no, k, _)) => Err(self.err(no, format!("expected `{key}`, found `{k}`"))),
            None => Err(self.err(self.lines.last().map_or(0, |l| l.0), format!("missing `{key}`"))),
        }
    }

    pub fn optional(&mut self, key: &str) -> Option<(usize, &'a str)> {
        self.expect(key).ok()
    }

    /// Consecutive lines with key `key`.
    pub fn repeated(&mut self, key: &str) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        while let Some(x) = self.optional(key) {
            out.push(x);
        }
        out
    }

    pub fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some(&(no, k, _)) => Err(self.err(no, format!("unexpected `{k}`"))),
            None => Ok(()),
        }
    }

    pub fn value<T: FromStr>(&self, line: usize, v: &str, what: &str) -> Result<T> {
        v.parse().map_err(|_| self.err(line, format!("`{v}` is not {what}")))
    }

    pub fn expect_value<T: FromStr>(&mut self, key: &str, what: &str) -> Result<T> {
        let (no, v) = self.expect(key)?;
        self.value(no, v, what)
    }

    pub fn list<T: FromStr>(&self, line: usize, v: &str, what: &str) -> Result<Vec<T>> {
        v.split_whitespace().map(|t| self.value(line, t, what)).collect()
    }

    pub fn expect_list<T: FromStr>(&mut self, key: &str, what: &str) -> Result<Vec<T>> {
        let (no, v) = self.expect(key)?;
        self.list(no, v, what)
    }
}

/// Splits a `;`-separated row; an empty value is a row of length zero.
pub fn split_row(v: &str) -> Vec<&str> {
    if v.trim().is_empty() {
        return Vec::new();
    }
    v.split(';').map(str::trim).collect()
}
