//! Objects of the bounded derived category of `Q_n`-representations.
//!
//! The path algebra is hereditary, so every object is a direct sum of
//! shifted modules; [`FormalObject`] stores exactly that list.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::kronecker::{
    apply_a, apply_a_inverse, cokernel_rep, hom_basis, hom_ext, iso_check, kernel_rep, read_rep, write_rep,
    BilinearForm, DimVector, IsoOutcome, KroneckerRep, RepMorphism,
};

/// `rep[shift]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedRep {
    pub rep: KroneckerRep,
    pub shift: i64,
}

#[derive(Clone, Debug)]
pub struct FormalObject {
    n: usize,
    field: FieldSpec,
    summands: Vec<ShiftedRep>,
}

impl FormalObject {
    pub fn zero(n: usize, field: FieldSpec) -> Self {
        FormalObject { n, field, summands: Vec::new() }
    }

    pub fn single(rep: KroneckerRep, shift: i64) -> Self {
        let mut out = Self::zero(rep.n(), rep.field());
        out.push(rep, shift);
        out
    }

    /// Adds `rep[shift]` as a summand; zero reps are dropped.
    pub fn push(&mut self, rep: KroneckerRep, shift: i64) {
        assert_eq!((rep.n(), rep.field()), (self.n, self.field), "summand of a different quiver");
        if !rep.is_zero() {
            self.summands.push(ShiftedRep { rep, shift });
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn summands(&self) -> &[ShiftedRep] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.summands.iter().map(|s| s.shift).min()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.summands.iter().map(|s| s.shift).max()
    }

    /// `self[k]`.
    pub fn shifted(&self, k: i64) -> Self {
        let summands = self.summands.iter().map(|s| ShiftedRep { rep: s.rep.clone(), shift: s.shift + k }).collect();
        FormalObject { summands, ..*self }
    }

    pub fn direct_sum(&self, other: &FormalObject) -> Self {
        let mut out = self.clone();
        for s in &other.summands {
            out.push(s.rep.clone(), s.shift);
        }
        out
    }

    /// All summands at `shift`, summed into one representation.
    pub fn component(&self, shift: i64) -> KroneckerRep {
        self.summands
            .iter()
            .filter(|s| s.shift == shift)
            .fold(KroneckerRep::zero(self.n, self.field), |acc, s| acc.direct_sum(&s.rep))
    }

    /// Distinct shifts in increasing order.
    pub fn shifts(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.summands.iter().map(|s| s.shift).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Total dimension vector per shift, increasing in the shift.
    pub fn dims_by_shift(&self) -> Vec<(i64, DimVector)> {
        self.shifts().into_iter().map(|s| (s, self.component(s).dim())).collect()
    }

    /// Class in the Grothendieck group, `Σ (-1)^shift dim`.
    pub fn euler_class(&self) -> (i64, i64) {
        self.summands.iter().fold((0, 0), |(a, b), s| {
            let sign = if s.shift.rem_euclid(2) == 0 { 1 } else { -1 };
            (a + sign * s.rep.d1() as i64, b + sign * s.rep.d2() as i64)
        })
    }
}

/// Equality of summand lists up to order.
impl PartialEq for FormalObject {
    fn eq(&self, other: &Self) -> bool {
        if (self.n, self.field, self.summands.len()) != (other.n, other.field, other.summands.len()) {
            return false;
        }
        let mut used = vec![false; other.summands.len()];
        self.summands.iter().all(|s| {
            match other.summands.iter().enumerate().position(|(i, t)| !used[i] && t == s) {
                Some(i) => {
                    used[i] = true;
                    true
                }
                None => false,
            }
        })
    }
}

impl Eq for FormalObject {}

impl fmt::Display for FormalObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| format!("{}[{}]", s.rep.dim(), s.shift)).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A degree-0 morphism: `blocks[t][s]` maps source summand `s` to target
/// summand `t`, and is `None` whenever the two shifts differ.
#[derive(Clone, Debug)]
pub struct FormalMorphism {
    pub source: FormalObject,
    pub target: FormalObject,
    pub blocks: Vec<Vec<Option<RepMorphism>>>,
}

impl FormalMorphism {
    /// Morphism between two single-summand objects at the same shift.
    pub fn between(source: KroneckerRep, target: KroneckerRep, shift: i64, g: RepMorphism) -> Result<Self> {
        if !g.is_morphism(&source, &target) {
            return Err(Error::UnsupportedMorphism("matrices do not commute with the arrows".into()));
        }
        let nz = (!source.is_zero(), !target.is_zero());
        let source = FormalObject::single(source, shift);
        let target = FormalObject::single(target, shift);
        let blocks = match nz {
            (true, true) => vec![vec![Some(g)]],
            (false, true) => vec![vec![]],
            _ => Vec::new(),
        };
        Ok(FormalMorphism { source, target, blocks })
    }

    fn check(&self) -> Result<()> {
        let (src, tgt) = (self.source.summands(), self.target.summands());
        if self.blocks.len() != tgt.len() || self.blocks.iter().any(|row| row.len() != src.len()) {
            return Err(Error::DimensionMismatch("block layout does not match the summands".into()));
        }
        for (t, row) in self.blocks.iter().enumerate() {
            for (s, b) in row.iter().enumerate() {
                if let Some(b) = b {
                    if src[s].shift != tgt[t].shift {
                        return Err(Error::UnsupportedMorphism("block between different shifts".into()));
                    }
                    if !b.is_morphism(&src[s].rep, &tgt[t].rep) {
                        return Err(Error::UnsupportedMorphism(format!("block ({t}, {s}) is not a morphism")));
                    }
                }
            }
        }
        Ok(())
    }
}

fn pure_shift(x: &FormalObject) -> Option<Option<i64>> {
    match x.shifts().as_slice() {
        [] => Some(None),
        [s] => Some(Some(*s)),
        _ => None,
    }
}

/// Cone of a degree-0 morphism between objects concentrated in one shift `s`:
/// `coker f` in shift `s` plus `ker f` in shift `s + 1`.
pub fn cone(f: &FormalMorphism) -> Result<FormalObject> {
    f.check()?;
    let (Some(ss), Some(ts)) = (pure_shift(&f.source), pure_shift(&f.target)) else {
        return Err(Error::UnsupportedMorphism("cone needs objects concentrated in one shift".into()));
    };
    let shift = match (ss, ts) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::UnsupportedMorphism(format!("source in shift {a}, target in shift {b}")))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Ok(FormalObject::zero(f.source.n(), f.source.field())),
    };
    let src = f.source.component(shift);
    let tgt = f.target.component(shift);
    let field = src.field();
    let g = assemble(f, &src, &tgt);
    let (k, _) = kernel_rep(&src, &g);
    let (c, _) = cokernel_rep(&tgt, &g);
    let mut out = FormalObject::zero(src.n(), field);
    out.push(c, shift);
    out.push(k, shift + 1);
    Ok(out)
}

fn assemble(f: &FormalMorphism, src: &KroneckerRep, tgt: &KroneckerRep) -> RepMorphism {
    let mut g = RepMorphism::zero(src, tgt);
    let (mut r1, mut r2) = (0, 0);
    for (t, row) in f.blocks.iter().enumerate() {
        let trep = &f.target.summands()[t].rep;
        let (mut c1, mut c2) = (0, 0);
        for (s, b) in row.iter().enumerate() {
            let srep = &f.source.summands()[s].rep;
            if let Some(b) = b {
                for i in 0..trep.d1() {
                    for j in 0..srep.d1() {
                        g.f1.set(r1 + i, c1 + j, b.f1.get(i, j).clone());
                    }
                }
                for i in 0..trep.d2() {
                    for j in 0..srep.d2() {
                        g.f2.set(r2 + i, c2 + j, b.f2.get(i, j).clone());
                    }
                }
            }
            c1 += srep.d1();
            c2 += srep.d2();
        }
        r1 += trep.d1();
        r2 += trep.d2();
    }
    g
}

/// One summand pair's contribution to a shifted Hom.
#[derive(Clone, Debug)]
pub struct HomPart {
    pub source_index: usize,
    pub target_index: usize,
    /// 0 for Hom, 1 for Ext¹.
    pub degree: i64,
    pub dim: usize,
    /// Basis of the Hom space when `degree == 0`.
    pub basis: Vec<RepMorphism>,
}

#[derive(Clone, Debug)]
pub struct ShiftedHom {
    pub dim: usize,
    pub parts: Vec<HomPart>,
}

/// `Hom(x, y[j])` in the derived category.
pub fn shifted_hom(x: &FormalObject, y: &FormalObject, j: i64) -> Result<ShiftedHom> {
    if (x.n(), x.field()) != (y.n(), y.field()) {
        return Err(Error::DimensionMismatch("objects over different quivers".into()));
    }
    let mut parts = Vec::new();
    for (si, s) in x.summands().iter().enumerate() {
        for (ti, t) in y.summands().iter().enumerate() {
            let degree = t.shift + j - s.shift;
            let part = match degree {
                0 => {
                    let basis = hom_basis(&s.rep, &t.rep)?;
                    HomPart { source_index: si, target_index: ti, degree, dim: basis.len(), basis }
                }
                1 => {
                    let he = hom_ext(&s.rep, &t.rep)?;
                    HomPart { source_index: si, target_index: ti, degree, dim: he.ext_dim, basis: Vec::new() }
                }
                _ => continue,
            };
            if part.dim > 0 {
                parts.push(part);
            }
        }
    }
    Ok(ShiftedHom { dim: parts.iter().map(|p| p.dim).sum(), parts })
}

/// `F = a[-1]`, summand by summand.
pub fn apply_f(x: &FormalObject, pi: &BilinearForm) -> Result<FormalObject> {
    let mut out = FormalObject::zero(x.n(), x.field());
    for s in x.summands() {
        out = out.direct_sum(&apply_a(&s.rep, pi)?.shifted(s.shift - 1));
    }
    Ok(out)
}

pub fn apply_f_inverse(x: &FormalObject, pi: &BilinearForm) -> Result<FormalObject> {
    let mut out = FormalObject::zero(x.n(), x.field());
    for s in x.summands() {
        out = out.direct_sum(&apply_a_inverse(&s.rep, pi)?.shifted(s.shift + 1));
    }
    Ok(out)
}

/// `F^k` for any integer `k`.
pub fn apply_f_power(x: &FormalObject, k: i64, pi: &BilinearForm) -> Result<FormalObject> {
    let mut out = x.clone();
    for _ in 0..k.unsigned_abs() {
        out = if k > 0 { apply_f(&out, pi)? } else { apply_f_inverse(&out, pi)? };
    }
    Ok(out)
}

/// `a^k` for any integer `k`.
pub fn apply_a_power(x: &FormalObject, k: i64, pi: &BilinearForm) -> Result<FormalObject> {
    Ok(apply_f_power(x, k, pi)?.shifted(k))
}

/// Isomorphism of derived objects, shift by shift.
pub fn formal_iso_check(x: &FormalObject, y: &FormalObject) -> Result<IsoOutcome> {
    let mut shifts = x.shifts();
    shifts.extend(y.shifts());
    shifts.sort_unstable();
    shifts.dedup();
    let mut undecided = false;
    for s in shifts {
        match iso_check(&x.component(s), &y.component(s))? {
            IsoOutcome::NotIsomorphic => return Ok(IsoOutcome::NotIsomorphic),
            IsoOutcome::Undecided => undecided = true,
            IsoOutcome::Isomorphic => {}
        }
    }
    Ok(if undecided { IsoOutcome::Undecided } else { IsoOutcome::Isomorphic })
}

/// Text form: each summand is a `shift: k` line followed by a representation
/// block in the [`write_rep`] format.
pub fn write_formal(x: &FormalObject) -> String {
    let mut s = format!("object: n={} field={}\n", x.n(), x.field());
    for t in x.summands() {
        s.push_str(&format!("shift: {}\n", t.shift));
        s.push_str(&write_rep(&t.rep));
    }
    s
}

pub fn read_formal(text: &str, file: &str) -> Result<FormalObject> {
    let err = |line: usize, msg: String| Error::Input { file: file.to_string(), line, msg };
    let lines: Vec<&str> = text.lines().collect();
    let mut starts = Vec::new();
    let mut header = None;
    for (i, l) in lines.iter().enumerate() {
        let l = l.trim();
        if let Some(rest) = l.strip_prefix("object:") {
            header = Some((i + 1, rest.trim().to_string()));
        } else if let Some(rest) = l.strip_prefix("shift:") {
            let k: i64 = rest.trim().parse().map_err(|_| err(i + 1, format!("bad shift `{}`", rest.trim())))?;
            starts.push((i, k));
        }
    }
    let (hline, h) = header.ok_or_else(|| err(1, "missing `object:` header".into()))?;
    let mut n = None;
    let mut field = None;
    for kv in h.split_whitespace() {
        match kv.split_once('=') {
            Some(("n", v)) => n = v.parse::<usize>().ok(),
            Some(("field", v)) => field = v.parse::<FieldSpec>().ok(),
            _ => return Err(err(hline, format!("unexpected `{kv}`"))),
        }
    }
    let (Some(n), Some(field)) = (n, field) else {
        return Err(err(hline, "header needs n=.. and field=..".into()));
    };
    let mut out = FormalObject::zero(n, field);
    for (idx, &(start, shift)) in starts.iter().enumerate() {
        let end = starts.get(idx + 1).map_or(lines.len(), |s| s.0);
        // keep line numbers aligned with the original file
        let block: String = lines
            .iter()
            .enumerate()
            .map(|(i, l)| if i > start && i < end { format!("{l}\n") } else { "\n".to_string() })
            .collect();
        let rep = read_rep(&block, file)?;
        if (rep.n(), rep.field()) != (n, field) {
            return Err(err(start + 1, "summand over a different quiver".into()));
        }
        out.push(rep, shift);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn p(i: u8, n: usize) -> KroneckerRep {
        KroneckerRep::projective(i, n, Q).unwrap()
    }

    #[test]
    fn shifted_hom_examples() {
        let n = 3;
        let p1 = FormalObject::single(p(1, n), 0);
        assert_eq!(shifted_hom(&p1, &p1, 0).unwrap().dim, 1);
        let i2m = FormalObject::single(KroneckerRep::injective(2, n, Q).unwrap(), -1);
        assert_eq!(shifted_hom(&p1, &i2m, 2).unwrap().dim, 0);
        let i2 = FormalObject::single(KroneckerRep::injective(2, n, Q).unwrap(), 0);
        assert_eq!(shifted_hom(&i2, &p1, 1).unwrap().dim, n);
        for j in [-3, -2, 2, 3] {
            assert_eq!(shifted_hom(&i2, &p1, j).unwrap().dim, 0);
        }
    }

    #[test]
    fn cone_examples() {
        let p2 = p(2, 3);
        let id = RepMorphism::identity(&p2);
        let f = FormalMorphism::between(p2.clone(), p2.clone(), 0, id).unwrap();
        assert!(cone(&f).unwrap().is_zero());
        let p1 = p(1, 3);
        let z = RepMorphism::zero(&p1, &p1);
        let f = FormalMorphism::between(p1.clone(), p1.clone(), 0, z).unwrap();
        let c = cone(&f).unwrap();
        assert_eq!(c, FormalObject::single(p1.clone(), 1).direct_sum(&FormalObject::single(p1, 0)));
    }

    #[test]
    fn cone_rejects_mixed_shifts() {
        let p1 = p(1, 2);
        let mut src = FormalObject::single(p1.clone(), 0);
        src.push(p1.clone(), 1);
        let f = FormalMorphism { source: src, target: FormalObject::single(p1, 0), blocks: vec![vec![None, None]] };
        assert!(matches!(cone(&f), Err(Error::UnsupportedMorphism(_))));
    }

    #[test]
    fn f_examples() {
        let n = 3;
        let pi = BilinearForm::identity(n, Q);
        let fp2 = apply_f(&FormalObject::single(p(2, n), 0), &pi).unwrap();
        assert_eq!(fp2.dims_by_shift(), vec![(-1, DimVector::new(1, 0))]);
        let fp1 = apply_f(&FormalObject::single(p(1, n), 0), &pi).unwrap();
        assert_eq!(fp1.dims_by_shift(), vec![(-2, DimVector::new(0, 1))]);
        let gp2 = apply_f_inverse(&FormalObject::single(p(2, n), 0), &pi).unwrap();
        assert_eq!(gp2.dims_by_shift(), vec![(1, DimVector::new(n * n - 1, n))]);
    }

    #[test]
    fn formal_round_trip() {
        let mut x = FormalObject::single(p(2, 2), 0);
        x.push(KroneckerRep::new(2, Q, 1, 1, vec![Matrix::from_i64(Q, &[&[1]]), Matrix::from_i64(Q, &[&[-2]])]).unwrap(), -3);
        let text = write_formal(&x);
        let back = read_formal(&text, "mem").unwrap();
        assert_eq!(back, x);
        assert_eq!(write_formal(&back), text);
    }
}
