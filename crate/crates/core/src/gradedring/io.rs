//! Text formats.
//!
//! Hilbert series `N(t) / prod (1 - t^e)`:
//!
//! ```text
//! numerator: 1 7 1
//! denominator: 1 1 1
//! ```
//!
//! Graded module presentations, one `row` per generator with the entries of
//! that row separated by `;` (the `weights` line may be omitted):
//!
//! ```text
//! field: q
//! vars: x y
//! weights: 1 1
//! generators: 0
//! relations: 2 2
//! row: x^2 + y^2 ; x^2 - y^2
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::poly::Poly;
use crate::textio::{split_row, KeyLines};

use super::{GradedModulePresentation, HilbertSeries};

pub fn write_series(h: &HilbertSeries) -> String {
    let join = |v: Vec<String>| v.join(" ");
    format!(
        "numerator: {}\ndenominator: {}\n",
        join(h.numerator().iter().map(|c| c.to_string()).collect()),
        join(h.denominator().iter().map(|c| c.to_string()).collect())
    )
}

pub fn read_series(text: &str, file: &str) -> Result<HilbertSeries> {
    let mut k = KeyLines::new(text, file)?;
    let (no, v) = k.expect("numerator")?;
    let num = k.list(no, v, "an integer")?;
    let (dno, v) = k.expect("denominator")?;
    let den = k.list(dno, v, "a positive exponent")?;
    k.finish()?;
    HilbertSeries::new(num, den).map_err(|e| k.err(dno, e.to_string()))
}

/// A presentation together with the variable names used in its file.
#[derive(Clone, Debug)]
pub struct ModuleFile {
    pub presentation: GradedModulePresentation,
    pub names: Vec<String>,
}

impl ModuleFile {
    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    /// Parses `text` as a polynomial in this file's variables.
    pub fn poly(&self, text: &str) -> Result<Poly> {
        Poly::parse(text, &self.names(), self.presentation.field())
    }
}

pub fn write_presentation(m: &ModuleFile) -> String {
    let p = &m.presentation;
    let names = m.names();
    let ints = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    let _ = writeln!(s, "field: {}", p.field());
    let _ = writeln!(s, "vars: {}", names.join(" "));
    let _ = writeln!(s, "weights: {}", p.weights().iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "));
    let _ = writeln!(s, "generators: {}", ints(p.generators()));
    let _ = writeln!(s, "relations: {}", ints(p.relations()));
    for row in p.matrix() {
        let cells: Vec<String> = row.iter().map(|q| q.display(&names).to_string()).collect();
        let _ = writeln!(s, "row: {}", cells.join(" ; "));
    }
    s
}

pub fn read_presentation(text: &str, file: &str) -> Result<ModuleFile> {
    let mut k = KeyLines::new(text, file)?;
    let (no, v) = k.expect("field")?;
    let field: FieldSpec = v.parse().map_err(|e: Error| k.err(no, e.to_string()))?;
    let (vno, v) = k.expect("vars")?;
    let names: Vec<String> = v.split_whitespace().map(str::to_string).collect();
    if names.is_empty() {
        return Err(k.err(vno, "no variables"));
    }
    let weights = match k.optional("weights") {
        Some((no, v)) => k.list(no, v, "a positive weight")?,
        None => vec![1; names.len()],
    };
    let (gno, v) = k.expect("generators")?;
    let generators: Vec<i64> = k.list(gno, v, "a degree")?;
    let (no, v) = k.expect("relations")?;
    let relations: Vec<i64> = k.list(no, v, "a degree")?;
    let rows = k.repeated("row");
    k.finish()?;
    if rows.len() != generators.len() {
        return Err(k.err(gno, format!("{} generators but {} rows", generators.len(), rows.len())));
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut matrix = Vec::with_capacity(rows.len());
    for &(no, v) in &rows {
        let cells = split_row(v);
        if cells.len() != relations.len() {
            return Err(k.err(no, format!("expected {} entries, found {}", relations.len(), cells.len())));
        }
        let row = cells
            .iter()
            .map(|c| Poly::parse(c, &refs, field))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| k.err(no, e.to_string()))?;
        matrix.push(row);
    }
    let presentation = GradedModulePresentation::new(field, weights, generators, relations, matrix)
        .map_err(|e| k.err(rows.first().map_or(gno, |r| r.0), e.to_string()))?;
    Ok(ModuleFile { presentation, names })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_round_trip() {
        let h = HilbertSeries::new(vec![1, 7, 1], vec![1, 1, 1]).unwrap();
        let text = write_series(&h);
        assert_eq!(text, "numerator: 1 7 1\ndenominator: 1 1 1\n");
        assert_eq!(read_series(&text, "h").unwrap(), h);
        assert!(read_series("numerator: 1\ndenominator: 0\n", "h").is_err());
    }

    #[test]
    fn presentation_round_trip() {
        let text = "field: q\nvars: x y\nweights: 1 1\ngenerators: 0\nrelations: 2 2\nrow: x^2 + y^2 ; x^2 - y^2\n";
        let m = read_presentation(text, "m").unwrap();
        assert_eq!(m.presentation.relations(), &[2, 2]);
        assert_eq!(write_presentation(&m), text);
        let ring = read_presentation("field: q\nvars: U V\ngenerators: 0\nrelations:\nrow:\n", "r").unwrap();
        assert!(ring.presentation.relations().is_empty());
    }

    #[test]
    fn inhomogeneous_entry_is_reported_with_its_line() {
        let text = "field: q\nvars: x y\ngenerators: 0\nrelations: 2\n\nrow: x + y^2\n";
        match read_presentation(text, "bad.mod") {
            Err(Error::Input { file, line, msg }) => {
                assert_eq!((file.as_str(), line), ("bad.mod", 6));
                assert!(msg.contains("homogeneous"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
