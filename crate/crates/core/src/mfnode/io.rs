//! Text form of a factorization over `k[U, V]`: generator degrees, then one
//! `phi` line per row of `phi` and one `psi` line per row of `psi`, entries
//! separated by `;`.
//!
//! ```text
//! field: q
//! deg0: 0
//! deg1: 1
//! phi: V
//! psi: U
//! ```
//!
//! Reading checks shapes only; see [`MatrixFactorization::validate`].

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::poly::Poly;
use crate::textio::{split_row, KeyLines};

use super::{MatrixFactorization, PolyMatrix, NAMES};

pub fn write_mf(m: &MatrixFactorization) -> String {
    let ints = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = format!("field: {}\ndeg0: {}\ndeg1: {}\n", m.field(), ints(m.deg0()), ints(m.deg1()));
    for (key, mat) in [("phi", m.phi()), ("psi", m.psi())] {
        for row in mat {
            let cells: Vec<String> = row.iter().map(|p| p.display(&NAMES).to_string()).collect();
            let _ = writeln!(s, "{key}: {}", cells.join(" ; "));
        }
    }
    s
}

pub fn read_mf(text: &str, file: &str) -> Result<MatrixFactorization> {
    let mut k = KeyLines::new(text, file)?;
    let (no, v) = k.expect("field")?;
    let field: FieldSpec = v.parse().map_err(|e: Error| k.err(no, e.to_string()))?;
    let (dno, v) = k.expect("deg0")?;
    let deg0: Vec<i64> = k.list(dno, v, "a degree")?;
    let (no, v) = k.expect("deg1")?;
    let deg1: Vec<i64> = k.list(no, v, "a degree")?;
    let mut read = |key: &str, rows: usize, cols: usize| -> Result<PolyMatrix> {
        let mut out = Vec::with_capacity(rows);
        for _ in 0..rows {
            let (no, v) = k.expect(key)?;
            let cells = split_row(v);
            if cells.len() != cols {
                return Err(k.err(no, format!("expected {cols} entries, found {}", cells.len())));
            }
            let row = cells
                .iter()
                .map(|c| Poly::parse(c, &NAMES, field))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| k.err(no, e.to_string()))?;
            out.push(row);
        }
        Ok(out)
    };
    let phi = read("phi", deg0.len(), deg1.len())?;
    let psi = read("psi", deg1.len(), deg0.len())?;
    k.finish()?;
    MatrixFactorization::new(field, phi, psi, deg0, deg1).map_err(|e| k.err(dno, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn round_trip() {
        let m = MatrixFactorization::p(Q).direct_sum(&MatrixFactorization::q(Q).twisted(1));
        let text = write_mf(&m);
        assert_eq!(text, "field: q\ndeg0: 0 1\ndeg1: 1 2\nphi: V ; 0\nphi: 0 ; U\npsi: U ; 0\npsi: 0 ; V\n");
        assert_eq!(read_mf(&text, "m").unwrap(), m);
        assert_eq!(read_mf(&write_mf(&MatrixFactorization::zero(Q)), "z").unwrap().rank(), 0);
    }

    #[test]
    fn bad_entry_names_the_line() {
        let text = "field: q\ndeg0: 0\ndeg1: 1\nphi: W\npsi: U\n";
        match read_mf(text, "bad.mf") {
            Err(Error::Input { line, msg, .. }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("unknown variable"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
