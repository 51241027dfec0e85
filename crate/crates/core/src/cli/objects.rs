//! Object arguments on the command line.
//!
//! A derived object is a `+`-separated sum of `P1`, `P2`, `I1`, `I2`, `S1`,
//! `S2`, each optionally followed by a shift `[k]`, or the path of a file in
//! the representation or object format. Chain objects for the scan are
//! `X<k>[s]`, with `P1`, `P2` and `I2[-1]` as aliases.

use std::path::Path;

use crate::derivedh::{read_formal, FormalObject};
use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::kronecker::{read_rep, KroneckerRep};
use crate::orbitcat::ChainObject;

pub fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input { file: path.to_string(), line: 0, msg: e.to_string() })
}

/// Splits `name[k]` into `name` and `k` (0 when absent).
fn split_shift(text: &str) -> Result<(&str, i64)> {
    let t = text.trim();
    match t.split_once('[') {
        None => Ok((t, 0)),
        Some((name, rest)) => {
            let k = rest
                .strip_suffix(']')
                .and_then(|k| k.trim().parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad shift in `{t}`")))?;
            Ok((name.trim(), k))
        }
    }
}

fn named(name: &str, n: usize, field: FieldSpec) -> Result<KroneckerRep> {
    let bad = || Error::Parse(format!("unknown object `{name}` (expected P1, P2, I1, I2, S1, S2 or a file)"));
    let mut chars = name.chars();
    let (kind, vertex) = (chars.next().ok_or_else(bad)?, chars.as_str());
    let i: u8 = match vertex {
        "1" => 1,
        "2" => 2,
        _ => return Err(bad()),
    };
    match kind {
        'P' => KroneckerRep::projective(i, n, field),
        'I' => KroneckerRep::injective(i, n, field),
        'S' => KroneckerRep::simple(i, n, field),
        _ => Err(bad()),
    }
}

pub fn parse_object(text: &str, n: usize, field: FieldSpec) -> Result<FormalObject> {
    if Path::new(text).is_file() {
        let body = read_file(text)?;
        let obj = if body.lines().any(|l| l.trim_start().starts_with("object:")) {
            read_formal(&body, text)?
        } else {
            FormalObject::single(read_rep(&body, text)?, 0)
        };
        if (obj.n(), obj.field()) != (n, field) {
            return Err(Error::InvalidArgument(format!(
                "{text} lives over n={} field={}, but the run uses n={n} field={field}",
                obj.n(),
                obj.field()
            )));
        }
        return Ok(obj);
    }
    let mut out = FormalObject::zero(n, field);
    for part in text.split('+') {
        let (name, k) = split_shift(part)?;
        out.push(named(name, n, field)?, k);
    }
    Ok(out)
}

pub fn parse_chain(text: &str) -> Result<ChainObject> {
    let (name, k) = split_shift(text)?;
    let base = match name {
        "P1" => ChainObject::P1,
        "P2" => ChainObject::P2,
        "I2" if k <= -1 => ChainObject::I2_MINUS,
        _ => {
            let index = name
                .strip_prefix('X')
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| Error::Parse(format!("unknown chain object `{text}` (expected X<k>[s], P1, P2 or I2[-1])")))?;
            return Ok(ChainObject::new(index, k));
        }
    };
    let k = if name == "I2" { k + 1 } else { k };
    Ok(ChainObject::new(base.index, base.shift + k))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn sums_and_shifts() {
        let x = parse_object("P1 + I2[-1]", 3, Q).unwrap();
        assert_eq!(x.shifts(), vec![-1, 0]);
        assert_eq!(x.component(-1).dim(), KroneckerRep::injective(2, 3, Q).unwrap().dim());
        assert!(parse_object("Q1", 3, Q).is_err());
        assert!(parse_object("P3", 3, Q).is_err());
        assert!(parse_object("P1[x]", 3, Q).is_err());
    }

    #[test]
    fn chain_names() {
        assert_eq!(parse_chain("P1").unwrap(), ChainObject::P1);
        assert_eq!(parse_chain("I2[-1]").unwrap(), ChainObject::I2_MINUS);
        assert_eq!(parse_chain("I2[0]").ok(), None);
        assert_eq!(parse_chain("X3[1]").unwrap(), ChainObject::new(3, 1));
        assert_eq!(parse_chain("P2[2]").unwrap(), ChainObject::new(1, 2));
    }
}
