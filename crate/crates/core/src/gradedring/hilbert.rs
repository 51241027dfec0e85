use std::fmt;

use crate::error::{Error, Result};

/// `numerator(t) / prod_e (1 - t^e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i128>,
    denominator: Vec<u32>,
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.len() > 1 && *v.last().expect("nonempty") == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

/// Exact quotient of `num` by `div`, if any.
fn divide(num: &[i128], div: &[i128]) -> Option<Vec<i128>> {
    let lead = *div.last()?;
    if num.len() < div.len() {
        return num.iter().all(|&x| x == 0).then(|| vec![0]);
    }
    let mut rem = num.to_vec();
    let mut q = vec![0i128; num.len() - div.len() + 1];
    for k in (0..q.len()).rev() {
        let top = rem[k + div.len() - 1];
        if top % lead != 0 {
            return None;
        }
        let c = top / lead;
        q[k] = c;
        for (i, d) in div.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    rem.iter().all(|&x| x == 0).then(|| trim(q))
}

fn one_minus(e: u32) -> Vec<i128> {
    let mut v = vec![0i128; e as usize + 1];
    v[0] = 1;
    v[e as usize] = -1;
    v
}

impl HilbertSeries {
    /// Builds the series and cancels denominator factors that divide the
    /// numerator; a factor `1 - t^e` whose quotient `1 + t + ... + t^{e-1}`
    /// divides the numerator becomes `1 - t`.
    pub fn new(numerator: Vec<i128>, mut denominator: Vec<u32>) -> Result<Self> {
        if denominator.contains(&0) {
            return Err(Error::InvalidArgument("denominator exponents must be positive".into()));
        }
        let mut num = trim(numerator);
        denominator.sort_unstable_by(|a, b| b.cmp(a));
        let mut den = Vec::with_capacity(denominator.len());
        for e in denominator {
            if let Some(q) = divide(&num, &one_minus(e)) {
                num = q;
                continue;
            }
            if e > 1 {
                if let Some(q) = divide(&num, &vec![1; e as usize]) {
                    num = q;
                    den.push(1);
                    continue;
                }
            }
            den.push(e);
        }
        den.sort_unstable();
        Ok(HilbertSeries { numerator: num, denominator: den })
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    /// Power series coefficients `c_0, ..., c_{len-1}`.
    pub fn coefficients(&self, len: usize) -> Result<Vec<i128>> {
        let mut c = vec![0i128; len];
        for (i, &x) in self.numerator.iter().enumerate().take(len) {
            c[i] = x;
        }
        for &e in &self.denominator {
            let e = e as usize;
            for i in e..len {
                c[i] = c[i].checked_add(c[i - e]).ok_or_else(|| Error::Overflow("Hilbert coefficient".into()))?;
            }
        }
        Ok(c)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match i {
                0 => mag.to_string(),
                _ => {
                    let t = if i == 1 { "t".to_string() } else { format!("t^{i}") };
                    if mag == 1 { t } else { format!("{mag}{t}") }
                }
            };
            terms.push((c < 0, body));
        }
        let mut num = String::new();
        for (k, (neg, body)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => num.push('-'),
                (0, false) => {}
                (_, true) => num.push_str(" - "),
                (_, false) => num.push_str(" + "),
            }
            num.push_str(body);
        }
        if num.is_empty() {
            num.push('0');
        }
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        let mut den = Vec::new();
        let mut i = 0;
        while i < self.denominator.len() {
            let e = self.denominator[i];
            let k = self.denominator[i..].iter().take_while(|&&x| x == e).count();
            let base = if e == 1 { "(1-t)".to_string() } else { format!("(1-t^{e})") };
            den.push(if k == 1 { base } else { format!("{base}^{k}") });
            i += k;
        }
        if terms.len() > 1 {
            num = format!("({num})");
        }
        write!(f, "{num}/{}", den.join(""))
    }
}

/// `1/(1-t)^n`.
pub fn hilbert_polynomial_ring(n: usize) -> Result<HilbertSeries> {
    if n == 0 {
        return Err(Error::InvalidArgument("a polynomial ring needs at least one variable".into()));
    }
    HilbertSeries::new(vec![1], vec![1; n])
}

/// Hilbert series of the Veronese subring `B^(m)`, with denominator `(1-t)^n`.
pub fn veronese(h: &HilbertSeries, m: usize) -> Result<HilbertSeries> {
    if m == 0 {
        return Err(Error::InvalidArgument("Veronese degree must be positive".into()));
    }
    if h.denominator.iter().any(|&e| e != 1) {
        return Err(Error::InvalidArgument(format!("{h} does not have denominator (1-t)^n")));
    }
    if m == 1 {
        return Ok(h.clone());
    }
    let n = h.denominator.len();
    let check = 2 * n + 12;
    let c = h.coefficients(m * check + 1)?;
    let sub: Vec<i128> = (0..check).map(|i| c[m * i]).collect();
    // numerator = (sum c_{mi} t^i)(1-t)^n, truncated at degree n
    let mut num = sub[..=n.min(check - 1)].to_vec();
    for _ in 0..n {
        for i in (1..num.len()).rev() {
            num[i] -= num[i - 1];
        }
    }
    let out = HilbertSeries::new(num, vec![1; n])?;
    if out.coefficients(check)? != sub {
        return Err(Error::ContractViolation(format!("Veronese numerator of {h} is not reconstructible")));
    }
    Ok(out)
}

/// The integer `a` with `h(1/t) = (-1)^d t^a h(t)`.
pub fn gorenstein_parameter(h: &HilbertSeries, d: usize) -> Result<i64> {
    let num = &h.numerator;
    let rev: Vec<i128> = num.iter().rev().copied().collect();
    let sign: i64 = if rev == *num {
        1
    } else if rev.iter().zip(num).all(|(a, b)| *a == -b) {
        -1
    } else {
        return Err(Error::NotGorenstein(format!("numerator of {h} is not palindromic")));
    };
    // h(1/t) = (-1)^{#den} t^{sum e - deg N} N*(t) / prod(1 - t^e)
    let parity = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    if parity(h.denominator.len()) * sign != parity(d) {
        return Err(Error::NotGorenstein(format!("{h} has the wrong sign for dimension {d}")));
    }
    let sum_e: i64 = h.denominator.iter().map(|&e| e as i64).sum();
    Ok(sum_e - (num.len() as i64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_ring_coefficients() {
        assert_eq!(hilbert_polynomial_ring(3).unwrap().coefficients(4).unwrap(), vec![1, 3, 6, 10]);
        assert_eq!(hilbert_polynomial_ring(4).unwrap().coefficients(3).unwrap()[2], 10);
        assert!(hilbert_polynomial_ring(0).is_err());
    }

    #[test]
    fn veronese_examples() {
        let v = veronese(&hilbert_polynomial_ring(3).unwrap(), 3).unwrap();
        assert_eq!(v.numerator(), &[1, 7, 1]);
        assert_eq!(v.coefficients(3).unwrap(), vec![1, 10, 28]);
        assert_eq!(v.to_string(), "(1 + 7t + t^2)/(1-t)^3");
        let v = veronese(&hilbert_polynomial_ring(4).unwrap(), 2).unwrap();
        assert_eq!(v.numerator(), &[1, 6, 1]);
        assert_eq!(v.coefficients(3).unwrap(), vec![1, 10, 35]);
    }

    #[test]
    fn gorenstein_examples() {
        let h = |n| hilbert_polynomial_ring(n).unwrap();
        assert_eq!(gorenstein_parameter(&h(3), 3).unwrap(), 3);
        assert_eq!(gorenstein_parameter(&veronese(&h(3), 3).unwrap(), 3).unwrap(), 1);
        assert_eq!(gorenstein_parameter(&veronese(&h(4), 2).unwrap(), 4).unwrap(), 2);
        assert!(matches!(gorenstein_parameter(&veronese(&h(3), 2).unwrap(), 3), Err(Error::NotGorenstein(_))));
    }

    #[test]
    fn canonical_form_cancels_factors() {
        let h = HilbertSeries::new(vec![1, 1], vec![2]).unwrap();
        assert_eq!(h, HilbertSeries::new(vec![1], vec![1]).unwrap());
        let h = HilbertSeries::new(vec![1, 0, -1], vec![2, 1]).unwrap();
        assert_eq!(h, HilbertSeries::new(vec![1], vec![1]).unwrap());
    }
}
