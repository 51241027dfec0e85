//! Sparse multivariate polynomials over a [`FieldSpec`].
//!
//! Text form is a sum of terms `coef x1^a x2^b`, e.g. `3 x1^2 x2 - 1/2 x3 + 1`;
//! the coefficient may be omitted and `*` may separate factors.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

impl Poly {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Poly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Scalar) -> Self {
        Self::monomial(field, vec![0; nvars], c)
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: FieldSpec, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e, field.one())
    }

    pub fn monomial(field: FieldSpec, exps: Exponents, c: Scalar) -> Self {
        let mut p = Self::zero(field, exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, exps: Exponents, c: Scalar) {
        let v = match self.terms.remove(&exps) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(exps, v);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-self.field.one())
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut out = Self::zero(self.field, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Self::zero(self.field, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Self::one(self.field, self.nvars), |acc, _| acc.mul(self))
    }

    /// Weighted degree of a monomial.
    pub fn monomial_degree(exps: &[u32], weights: &[u32]) -> u32 {
        exps.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    /// `Some(d)` if every term has weighted degree `d`; the zero polynomial
    /// is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| Self::monomial_degree(e, weights));
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        self.is_zero() || self.homogeneous_degree(weights).is_some()
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = &t * x;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Parses the text form over the variables `names`.
    pub fn parse(text: &str, names: &[&str], field: FieldSpec) -> Result<Poly> {
        Parser { s: text.as_bytes(), pos: 0, names, field }.poly()
    }

    pub fn display<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay { p: self, names }
    }
}

/// Monomials of weighted degree `d`, in decreasing lexicographic order.
pub fn monomials(weights: &[u32], d: u32) -> Vec<Exponents> {
    fn go(weights: &[u32], d: u32, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
        match weights.split_first() {
            None => {
                if d == 0 {
                    out.push(prefix.clone());
                }
            }
            Some((&w, rest)) => {
                for e in (0..=d / w).rev() {
                    prefix.push(e);
                    go(rest, d - e * w, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    if weights.iter().all(|&w| w > 0) {
        go(weights, d, &mut Vec::new(), &mut out);
    }
    out
}

pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

pub struct PolyDisplay<'a> {
    p: &'a Poly,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { self.names[i].to_string() } else { format!("{}^{x}", self.names[i]) })
                .collect();
            if vars.is_empty() || !a.is_one() {
                write!(f, "{a}")?;
                if !vars.is_empty() {
                    write!(f, " ")?;
                }
            }
            write!(f, "{}", vars.join(" "))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
    field: FieldSpec,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at column {} of `{}`", self.pos + 1, String::from_utf8_lossy(self.s)))
    }

    fn skip(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_whitespace() || self.s[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero(self.field, self.names.len());
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let (e, c) = self.term()?;
            out.add_term(e, if sign < 0 { -c } else { c });
        }
        Ok(out)
    }

    fn number(&mut self) -> Option<String> {
        self.skip();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'/') {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn term(&mut self) -> Result<(Exponents, Scalar)> {
        let mut coef = self.field.one();
        let mut exps = vec![0u32; self.names.len()];
        let mut empty = true;
        if let Some(n) = self.number() {
            coef = self.field.parse_scalar(&n)?;
            empty = false;
        }
        while let Some(ch) = self.peek() {
            if !(ch.is_ascii_alphabetic() || ch == b'_') {
                break;
            }
            let start = self.pos;
            while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
            let i = self
                .names
                .iter()
                .position(|&v| v == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}` (expected one of {:?})", self.names)))?;
            let mut e = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let n = self.number().ok_or_else(|| self.err("missing exponent"))?;
                e = n.parse().map_err(|_| self.err("bad exponent"))?;
            }
            exps[i] += e;
            empty = false;
        }
        if empty {
            return Err(self.err("expected a term"));
        }
        Ok((exps, coef))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn parse_and_print() {
        let names = ["x1", "x2", "x3"];
        let p = Poly::parse("3 x1^2 x2 - 1/2 x3 + 1", &names, Q).unwrap();
        assert_eq!(p.display(&names).to_string(), "3 x1^2 x2 - 1/2 x3 + 1");
        assert_eq!(Poly::parse(&p.display(&names).to_string(), &names, Q).unwrap(), p);
        let q = Poly::parse("-x1*x2 + x2 x1", &names, Q).unwrap();
        assert!(q.is_zero());
        assert!(Poly::parse("x4", &names, Q).is_err());
        assert!(Poly::parse("", &names, Q).is_err());
    }

    #[test]
    fn arithmetic() {
        let names = ["U", "V"];
        let u = Poly::var(Q, 2, 0);
        let v = Poly::var(Q, 2, 1);
        let p = u.add(&v).mul(&u.sub(&v));
        assert_eq!(p, Poly::parse("U^2 - V^2", &names, Q).unwrap());
        assert_eq!(p.homogeneous_degree(&[1, 1]), Some(2));
        assert_eq!(u.add(&Poly::one(Q, 2)).homogeneous_degree(&[1, 1]), None);
        assert_eq!(p.evaluate(&[Q.from_i64(3), Q.from_i64(1)]), Q.from_i64(8));
        assert_eq!(u.pow(3).homogeneous_degree(&[2, 1]), Some(6));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(&[1, 1, 1], 2).len(), 6);
        assert_eq!(monomials(&[1, 1, 1, 1], 3).len(), 20);
        assert_eq!(monomials(&[2, 1], 3), vec![vec![1, 1], vec![0, 3]]);
        assert_eq!(monomials(&[1, 1], 0), vec![vec![0, 0]]);
    }
}
