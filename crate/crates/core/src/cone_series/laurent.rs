use std::collections::BTreeMap;
use std::fmt;

use super::CoeffQ;
use crate::linalg;

/// A Laurent polynomial in `t^x`, `x` in `Z^d`, over `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<Vec<i64>, CoeffQ>,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        LaurentPoly { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, CoeffQ::one())
    }

    pub fn constant(dim: usize, c: CoeffQ) -> Self {
        Self::monomial(vec![0; dim], c)
    }

    pub fn monomial(exp: Vec<i64>, c: CoeffQ) -> Self {
        let dim = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { dim, terms }
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Vec<i64>, CoeffQ)>) -> Self {
        let mut p = LaurentPoly::zero(dim);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, CoeffQ> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> CoeffQ {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: &CoeffQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, k: &CoeffQ) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero(self.dim);
        }
        LaurentPoly { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    /// Multiplication by the monomial `t^g`.
    pub fn shift(&self, g: &[i64]) -> Self {
        LaurentPoly { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (linalg::add(e, g), c.clone())).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(linalg::add(e1, e2), &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentPoly::one(self.dim), |acc, _| acc.mul(self))
    }

    /// Substitutes exponents through an integer matrix: `t^x -> t^{Mx}`.
    pub fn transform(&self, m: &[Vec<i64>]) -> Self {
        LaurentPoly::from_terms(m.len(), self.terms.iter().map(|(e, c)| (linalg::mat_vec(m, e), c.clone())))
    }

    /// The single term, if this is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&Vec<i64>, &CoeffQ)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Exact quotient by `1 - c t^beta` with `beta` lexicographically
    /// positive, or `None` when the division is not exact.
    pub fn div_binomial(&self, beta: &[i64], c: &CoeffQ) -> Option<Self> {
        debug_assert!(!linalg::is_zero(beta));
        // Long division by the term of largest <beta, x>; each step lowers the
        // grading by |beta|^2, so the loop stops once below the input's minimum.
        let grade = |x: &[i64]| linalg::dot(beta, x);
        let Some(floor) = self.terms.keys().map(|e| grade(e)).min() else {
            return Some(self.clone());
        };
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.dim);
        let minus_c = -c;
        while let Some((mu, m)) = rem
            .terms
            .iter()
            .max_by(|a, b| (grade(a.0), a.0).cmp(&(grade(b.0), b.0)))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let nu = linalg::sub(&mu, beta);
            if grade(&nu) < floor {
                return None;
            }
            let k = &m / &minus_c;
            rem.add_term(nu.clone(), &-&k);
            rem.terms.remove(&mu);
            quot.add_term(nu, &k);
        }
        Some(quot)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let is_const = linalg::is_zero(e);
            let mono = format!("t[{}]", e.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
            let (neg, body) = if c.is_composite() {
                (false, if is_const { format!("({c})") } else { format!("({c})*{mono}") })
            } else {
                let s = c.to_string();
                let (neg, s) = match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                };
                let body = if is_const {
                    s
                } else if s == "1" {
                    mono
                } else {
                    format!("{s}*{mono}")
                };
                (neg, body)
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[i64], c: i64) -> LaurentPoly {
        LaurentPoly::monomial(e.to_vec(), CoeffQ::from_int(c))
    }

    #[test]
    fn exact_binomial_division() {
        let one = CoeffQ::one();
        // (1 - t^2) / (1 - t) = 1 + t in the second coordinate
        let f = mono(&[0, 0], 1).sub(&mono(&[0, 2], 1));
        let q = f.div_binomial(&[0, 1], &one).unwrap();
        assert_eq!(q, mono(&[0, 0], 1).add(&mono(&[0, 1], 1)));
        // 1 + t is not divisible by 1 - t
        assert!(q.div_binomial(&[0, 1], &one).is_none());
        // t^-1 - t^1 = t^-1 (1 - t^2)
        let g = mono(&[0, -1], 1).sub(&mono(&[0, 1], 1));
        assert_eq!(g.div_binomial(&[0, 1], &one).unwrap(), mono(&[0, -1], 1).add(&mono(&[0, 0], 1)));
    }

    #[test]
    fn display_forms() {
        let q = CoeffQ::q();
        let p = mono(&[0, 0], 1).add(&LaurentPoly::monomial(vec![0, 1], &q - &CoeffQ::one())).sub(&mono(&[1, -1], 2));
        assert_eq!(p.to_string(), "1 + (q - 1)*t[0,1] - 2*t[1,-1]");
    }
}
