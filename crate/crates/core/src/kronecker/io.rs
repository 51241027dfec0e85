//! Text format for a single representation.
//!
//! ```text
//! field: q
//! n: 2
//! d1: 2
//! d2: 1
//! c1: 1 0
//! c2: 0 1
//! ```
//!
//! Each `cj` line lists the `d1 x d2` entries of `c_j` row-major. Blank
//! lines and lines starting with `#` are ignored.
//!
//! A bilinear form is `field`, `n` and then `n` lines `row: ...`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix};

use crate::textio::KeyLines;

use super::rep::{BilinearForm, KroneckerRep};

pub fn write_rep(rep: &KroneckerRep) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "field: {}", rep.field());
    let _ = writeln!(s, "n: {}", rep.n());
    let _ = writeln!(s, "d1: {}", rep.d1());
    let _ = writeln!(s, "d2: {}", rep.d2());
    for (j, c) in rep.maps().iter().enumerate() {
        let entries: Vec<String> = c.entries().iter().map(|x| x.to_string()).collect();
        if entries.is_empty() {
            let _ = writeln!(s, "c{}:", j + 1);
        } else {
            let _ = writeln!(s, "c{}: {}", j + 1, entries.join(" "));
        }
    }
    s
}

/// Parses [`write_rep`] output. `file` only labels error messages.
pub fn read_rep(text: &str, file: &str) -> Result<KroneckerRep> {
    let err = |line: usize, msg: String| Error::Input { file: file.to_string(), line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut header = |key: &str| -> Result<(usize, String)> {
        let (no, line) = lines.next().ok_or_else(|| err(0, format!("missing `{key}`")))?;
        let (k, v) = line.split_once(':').ok_or_else(|| err(no, format!("expected `{key}: ...`")))?;
        if k.trim() != key {
            return Err(err(no, format!("expected `{key}`, found `{}`", k.trim())));
        }
        Ok((no, v.trim().to_string()))
    };
    let (no, v) = header("field")?;
    let field: FieldSpec = v.parse().map_err(|e: Error| err(no, e.to_string()))?;
    let mut count = |key: &str| -> Result<usize> {
        let (no, v) = header(key)?;
        v.parse().map_err(|_| err(no, format!("`{v}` is not a count")))
    };
    let n = count("n")?;
    let d1 = count("d1")?;
    let d2 = count("d2")?;
    if n == 0 {
        return Err(err(0, "n must be positive".into()));
    }
    let mut maps = Vec::with_capacity(n);
    for j in 1..=n {
        let (no, v) = header(&format!("c{j}"))?;
        let entries = v
            .split_whitespace()
            .map(|t| field.parse_scalar(t))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| err(no, e.to_string()))?;
        if entries.len() != d1 * d2 {
            return Err(err(no, format!("expected {} entries, found {}", d1 * d2, entries.len())));
        }
        maps.push(Matrix::new(field, d1, d2, entries).map_err(|e| err(no, e.to_string()))?);
    }
    if let Some((no, _)) = lines.next() {
        return Err(err(no, "trailing content".into()));
    }
    KroneckerRep::new(n, field, d1, d2, maps)
}

pub fn write_form(pi: &BilinearForm) -> String {
    let m = pi.matrix();
    let mut s = format!("field: {}\nn: {}\n", pi.field(), pi.n());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        let _ = writeln!(s, "row: {}", row.join(" "));
    }
    s
}

/// Parses [`write_form`] output; the matrix must be invertible.
pub fn read_form(text: &str, file: &str) -> Result<BilinearForm> {
    let mut k = KeyLines::new(text, file)?;
    let (no, v) = k.expect("field")?;
    let field: FieldSpec = v.parse().map_err(|e: Error| k.err(no, e.to_string()))?;
    let (nline, v) = k.expect("n")?;
    let n: usize = k.value(nline, v, "a count")?;
    let mut entries = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (no, v) = k.expect("row")?;
        let row = v
            .split_whitespace()
            .map(|t| field.parse_scalar(t))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| k.err(no, e.to_string()))?;
        if row.len() != n {
            return Err(k.err(no, format!("expected {n} entries, found {}", row.len())));
        }
        entries.extend(row);
    }
    k.finish()?;
    let m = Matrix::new(field, n, n, entries).map_err(|e| k.err(nline, e.to_string()))?;
    BilinearForm::new(m).map_err(|e| k.err(nline, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_sample() {
        let text = "# sample\nfield: q\nn: 2\nd1: 2\nd2: 1\nc1: 1 -1/2\nc2: 0 3\n";
        let rep = read_rep(text, "sample").unwrap();
        assert_eq!(rep.dim().d1, 2);
        assert_eq!(rep.maps()[0].get(1, 0).to_string(), "-1/2");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "field: q\nn: 2\nd1: 1\nd2: 1\nc1: 1\nc2: x\n";
        match read_rep(text, "bad.rep") {
            Err(Error::Input { file, line, .. }) => assert_eq!((file.as_str(), line), ("bad.rep", 6)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn form_round_trip() {
        let pi = BilinearForm::new(Matrix::from_i64(FieldSpec::Rationals, &[&[0, 1], &[-1, 0]])).unwrap();
        let text = write_form(&pi);
        assert_eq!(text, "field: q\nn: 2\nrow: 0 1\nrow: -1 0\n");
        assert_eq!(read_form(&text, "f").unwrap(), pi);
        match read_form("field: q\nn: 2\nrow: 1 1\nrow: 1 1\n", "sing.form") {
            Err(Error::Input { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn round_trip_is_exact(seed in any::<u64>(), n in 1usize..4, d1 in 0usize..4, d2 in 0usize..4, p in prop_oneof![Just(0u32), Just(5), Just(7)]) {
            let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::prime(p).unwrap() };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rep = KroneckerRep::random(n, field, d1, d2, 9, &mut rng);
            let text = write_rep(&rep);
            let back = read_rep(&text, "mem").unwrap();
            prop_assert_eq!(&back, &rep);
            prop_assert_eq!(write_rep(&back), text);
        }
    }
}
