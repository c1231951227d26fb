use std::collections::BTreeMap;
use std::fmt;

use super::{CoeffQ, LaurentPoly};
use crate::error::{Error, Result};
use crate::linalg;

/// The denominator factor `1 - c t^beta`, with `beta` lexicographically
/// positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factor {
    pub beta: Vec<i64>,
    pub c: CoeffQ,
}

impl Factor {
    pub fn as_poly(&self) -> LaurentPoly {
        let d = self.beta.len();
        LaurentPoly::one(d).sub(&LaurentPoly::monomial(self.beta.clone(), self.c.clone()))
    }
}

fn lex_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// A rational function `num / prod (1 - c_i t^{beta_i})^{m_i}` on the dual
/// affine torus, coefficients in `Q(q)`.
///
/// Monomial and constant parts of a denominator are folded into the
/// numerator, and factors that divide the numerator are cancelled, so a
/// value is a Laurent polynomial exactly when `den` is empty.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: BTreeMap<Factor, u32>,
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.denominator_poly()) == other.num.mul(&self.denominator_poly())
    }
}

impl Eq for RationalFn {}

impl From<LaurentPoly> for RationalFn {
    fn from(num: LaurentPoly) -> Self {
        RationalFn { num, den: BTreeMap::new() }
    }
}

impl RationalFn {
    pub fn zero(dim: usize) -> Self {
        LaurentPoly::zero(dim).into()
    }

    pub fn one(dim: usize) -> Self {
        LaurentPoly::one(dim).into()
    }

    pub fn constant(dim: usize, c: CoeffQ) -> Self {
        LaurentPoly::constant(dim, c).into()
    }

    pub fn monomial(exp: Vec<i64>, c: CoeffQ) -> Self {
        LaurentPoly::monomial(exp, c).into()
    }

    /// `1 / (1 - c t^beta)`.
    pub fn binomial_inverse(beta: Vec<i64>, c: CoeffQ) -> Result<Self> {
        let d = beta.len();
        if c.is_zero() {
            return Ok(Self::one(d));
        }
        if linalg::is_zero(&beta) {
            let k = &CoeffQ::one() - &c;
            let inv = k.inv().ok_or(Error::DegenerateFactor)?;
            return Ok(Self::constant(d, inv));
        }
        if lex_positive(&beta) {
            let mut den = BTreeMap::new();
            den.insert(Factor { beta, c }, 1);
            return Ok(RationalFn { num: LaurentPoly::one(d), den });
        }
        // 1/(1 - c t^-b) = -c^{-1} t^{b} / (1 - c^{-1} t^{b})
        let b = linalg::neg(&beta);
        let ci = c.inv().unwrap();
        let num = LaurentPoly::monomial(b.clone(), -&ci);
        let mut den = BTreeMap::new();
        den.insert(Factor { beta: b, c: ci }, 1);
        Ok(RationalFn { num, den })
    }

    /// Builds `num / prod factors^m` from raw (not yet normalized) factors.
    pub fn from_parts(num: LaurentPoly, factors: &[(Vec<i64>, CoeffQ, u32)]) -> Result<Self> {
        let mut r: RationalFn = num.into();
        for (beta, c, m) in factors {
            let inv = Self::binomial_inverse(beta.clone(), c.clone())?;
            for _ in 0..*m {
                r = r.mul(&inv);
            }
        }
        Ok(r)
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn factors(&self) -> &BTreeMap<Factor, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_polynomial(&self) -> Option<&LaurentPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// `prod (1 - c_i t^{beta_i})^{m_i}` as a Laurent polynomial.
    pub fn denominator_poly(&self) -> LaurentPoly {
        self.den
            .iter()
            .fold(LaurentPoly::one(self.dim()), |acc, (f, &m)| acc.mul(&f.as_poly().pow(m)))
    }

    /// Cancels every denominator factor that divides the numerator.
    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<Factor> = self.den.keys().cloned().collect();
        for f in keys {
            while let Some(m) = self.den.get(&f).copied() {
                match self.num.div_binomial(&f.beta, &f.c) {
                    Some(q) => {
                        self.num = q;
                        if m == 1 {
                            self.den.remove(&f);
                        } else {
                            self.den.insert(f.clone(), m - 1);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.dim());
        }
        let mut den = self.den.clone();
        for (f, m) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        RationalFn { num: self.num.mul(&rhs.num), den }.reduced()
    }

    pub fn scale(&self, c: &CoeffQ) -> Self {
        RationalFn { num: self.num.scale(c), den: if c.is_zero() { BTreeMap::new() } else { self.den.clone() } }
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RationalFn { num: self.num.add(&rhs.num), den: self.den.clone() }.reduced();
        }
        let mut den = self.den.clone();
        for (f, &m) in &rhs.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &RationalFn| {
            den.iter().fold(r.num.clone(), |acc, (f, &m)| {
                let have = r.den.get(f).copied().unwrap_or(0);
                acc.mul(&f.as_poly().pow(m - have))
            })
        };
        let num = lift(self).add(&lift(rhs));
        RationalFn { num, den }.reduced()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Inverse; the numerator must be a monomial or a two-term binomial.
    pub fn inv(&self) -> Result<Self> {
        let terms: Vec<(&Vec<i64>, &CoeffQ)> = self.num.terms().iter().collect();
        let base = match terms.as_slice() {
            [(e, c)] => RationalFn::monomial(linalg::neg(e), c.inv().unwrap()),
            [(e1, c1), (e2, c2)] => {
                // c1 t^e1 (1 + (c2/c1) t^{e2-e1})
                let lead = RationalFn::monomial(linalg::neg(e1), c1.inv().unwrap());
                let ratio = -&(*c2 / *c1);
                lead.mul(&Self::binomial_inverse(linalg::sub(e2, e1), ratio)?)
            }
            [] => return Err(Error::NotInvertible("0".into())),
            _ => return Err(Error::NotInvertible(self.num.to_string())),
        };
        Ok(base.mul(&RationalFn::from(self.denominator_poly())))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Substitutes exponents through an integer matrix `t^x -> t^{Mx}`.
    pub fn transform(&self, m: &[Vec<i64>]) -> Self {
        let mut r: RationalFn = self.num.transform(m).into();
        for (f, &k) in &self.den {
            let inv = Self::binomial_inverse(linalg::mat_vec(m, &f.beta), f.c.clone())
                .expect("unimodular image of a factor is a factor");
            for _ in 0..k {
                r = r.mul(&inv);
            }
        }
        r
    }
}

/// `num/(f1)/(f1)/(f2)...`, one division per factor with multiplicity, so
/// that every divisor is a binomial and the text re-parses.
impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        for (fac, &m) in &self.den {
            for _ in 0..m {
                write!(f, "/({})", fac.as_poly())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[i64]) -> RationalFn {
        RationalFn::monomial(e.to_vec(), CoeffQ::one())
    }

    #[test]
    fn cancellation_makes_polynomials() {
        // (1 - t^2)/(1 - t) = 1 + t
        let num = RationalFn::one(2).sub(&t(&[0, 2]));
        let r = num.mul(&RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one()).unwrap());
        assert!(r.is_polynomial());
        assert_eq!(r, RationalFn::one(2).add(&t(&[0, 1])));
    }

    #[test]
    fn negative_direction_is_normalized() {
        // 1/(1 - t^-1) = -t/(1 - t)
        let a = RationalFn::binomial_inverse(vec![0, -1], CoeffQ::one()).unwrap();
        let b = RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one()).unwrap().mul(&t(&[0, 1])).neg();
        assert_eq!(a, b);
        assert_eq!(a.factors().len(), 1);
        // 1/(1-t) + 1/(1-t^-1) = 1
        let s = a.add(&RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one()).unwrap());
        assert_eq!(s, RationalFn::one(2));
        assert!(s.is_polynomial());
    }

    #[test]
    fn inverse_of_binomial() {
        let b = RationalFn::one(2).sub(&t(&[1, 0]));
        let inv = b.inv().unwrap();
        assert_eq!(inv.mul(&b), RationalFn::one(2));
        assert!(RationalFn::one(2).add(&t(&[1, 0])).add(&t(&[0, 1])).inv().is_err());
    }

    #[test]
    fn degenerate_factor() {
        assert_eq!(RationalFn::binomial_inverse(vec![0, 0], CoeffQ::one()).unwrap_err(), Error::DegenerateFactor);
    }

    #[test]
    fn display_round() {
        let r = RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one()).unwrap();
        assert_eq!(r.to_string(), "1/(1 - t[0,1])");
    }
}
