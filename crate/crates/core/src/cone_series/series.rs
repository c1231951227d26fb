use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{CoeffQ, RationalCone, RationalFn};
use crate::error::{Error, Result};
use crate::linalg;

/// A function on `Z^d` supported in `shift + cone`, known exactly on the
/// truncation region `{x : x - shift in cone, h(x - shift) <= order}`.
/// Points of the region that are absent from `coeffs` carry coefficient 0.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeSeries {
    cone: RationalCone,
    shift: Vec<i64>,
    h: Vec<i64>,
    order: i64,
    coeffs: BTreeMap<Vec<i64>, CoeffQ>,
}

impl ConeSeries {
    /// The zero series with the cone's default grading.
    pub fn zero(cone: RationalCone, shift: Vec<i64>, order: i64) -> Result<Self> {
        let h = cone.default_functional()?;
        Ok(ConeSeries { cone, shift, h, order, coeffs: BTreeMap::new() })
    }

    pub fn with_grading(cone: RationalCone, shift: Vec<i64>, h: Vec<i64>, order: i64) -> Result<Self> {
        if cone.generators().iter().any(|g| linalg::dot(&h, g) <= 0) {
            return Err(Error::Invalid("grading is not positive on the cone".into()));
        }
        Ok(ConeSeries { cone, shift, h, order, coeffs: BTreeMap::new() })
    }

    /// Adds `c t^x`; points outside the truncation region are dropped, points
    /// outside the support cone are an error.
    pub fn add_term(&mut self, x: Vec<i64>, c: &CoeffQ) -> Result<()> {
        let rel = linalg::sub(&x, &self.shift);
        if !self.cone.member(&rel) {
            return Err(Error::SupportOutsideCone);
        }
        if linalg::dot(&self.h, &rel) > self.order || c.is_zero() {
            return Ok(());
        }
        let sum = &self.coeff(&x) + c;
        if sum.is_zero() {
            self.coeffs.remove(&x);
        } else {
            self.coeffs.insert(x, sum);
        }
        Ok(())
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn grading(&self) -> &[i64] {
        &self.h
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<i64>, CoeffQ> {
        &self.coeffs
    }

    pub fn coeff(&self, x: &[i64]) -> CoeffQ {
        self.coeffs.get(x).cloned().unwrap_or_default()
    }

    /// `h(x - shift)`.
    pub fn height(&self, x: &[i64]) -> i64 {
        linalg::dot(&self.h, &linalg::sub(x, &self.shift))
    }

    /// Whether the coefficient at `x` is determined by this truncation.
    pub fn is_known(&self, x: &[i64]) -> bool {
        let rel = linalg::sub(x, &self.shift);
        !self.cone.member(&rel) || linalg::dot(&self.h, &rel) <= self.order
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.coeffs.keys().cloned().collect()
    }

    /// Drops everything above height `n`.
    pub fn truncate(&self, n: i64) -> Self {
        let mut out = self.clone();
        out.order = n.min(self.order);
        out.coeffs.retain(|x, _| linalg::dot(&self.h, &linalg::sub(x, &self.shift)) <= out.order);
        out
    }

    /// Convolution `(f * g)(x) = sum_{y + z = x} f(y) g(z)`, complete to
    /// height `n` with shift `f.shift + g.shift`.
    pub fn convolve(&self, other: &Self, n: i64) -> Result<Self> {
        if self.cone != other.cone || self.h != other.h {
            return Err(Error::ConeMismatch);
        }
        for s in [self, other] {
            if s.order < n {
                return Err(Error::InsufficientTruncation { have: s.order, need: n });
            }
        }
        let mut out = ConeSeries {
            cone: self.cone.clone(),
            shift: linalg::add(&self.shift, &other.shift),
            h: self.h.clone(),
            order: n,
            coeffs: BTreeMap::new(),
        };
        // heights are additive, so each fiber {y : x - y in supp g} is cut off
        // by h(y - f.shift) <= n - h(z - g.shift)
        let mut gs: Vec<(i64, &Vec<i64>, &CoeffQ)> =
            other.coeffs.iter().map(|(z, c)| (other.height(z), z, c)).collect();
        gs.sort_by_key(|t| t.0);
        for (y, a) in &self.coeffs {
            let hy = self.height(y);
            for (hz, z, b) in &gs {
                if hy + hz > n {
                    break;
                }
                let e = out.coeffs.entry(linalg::add(y, z)).or_default();
                *e = &*e + &(a * *b);
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn to_dump(&self) -> SeriesDump {
        SeriesDump {
            cone: self.cone.generators().to_vec(),
            shift: self.shift.clone(),
            h: self.h.clone(),
            order: self.order,
            terms: self.coeffs.iter().map(|(x, c)| DumpTerm { exponent: x.clone(), coeff: c.to_string() }).collect(),
        }
    }
}

/// JSON form of a [`ConeSeries`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesDump {
    pub cone: Vec<Vec<i64>>,
    pub shift: Vec<i64>,
    pub h: Vec<i64>,
    #[serde(rename = "N")]
    pub order: i64,
    pub terms: Vec<DumpTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DumpTerm {
    pub exponent: Vec<i64>,
    pub coeff: String,
}

/// A shift `s` with every exponent in `s + cone`.
fn support_shift(cone: &RationalCone, exps: &[Vec<i64>]) -> Result<Vec<i64>> {
    let Some(first) = exps.first() else {
        return Ok(vec![0; cone.dim()]);
    };
    if exps.len() == 1 {
        return Ok(first.clone());
    }
    // a basis of the cone's span taken from its generators
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for g in cone.generators() {
        let mut trial = basis.clone();
        trial.push(g.clone());
        if linalg::nullspace(&trial, cone.dim()).len() + trial.len() == cone.dim() {
            basis = trial;
        }
    }
    let coords: Vec<Vec<BigRational>> = exps
        .iter()
        .map(|e| linalg::coords_in_basis(&basis, &linalg::sub(e, first)).ok_or(Error::SupportOutsideCone))
        .collect::<Result<_>>()?;
    let mut s = first.clone();
    for (i, b) in basis.iter().enumerate() {
        let m = coords.iter().map(|c| c[i].floor()).min().unwrap();
        let m = m.to_integer().to_i64().expect("small coordinate");
        s = linalg::add(&s, &linalg::scale(b, m));
    }
    Ok(s)
}

/// Expands `r` as a series supported in a translate of `cone`, complete to
/// height `n` in the cone's default grading.
pub fn expand(r: &RationalFn, cone: &RationalCone, n: i64) -> Result<ConeSeries> {
    if !cone.is_strictly_convex() {
        return Err(Error::Invalid("expansion cone must be strictly convex".into()));
    }
    let d = cone.dim();
    if r.dim() != d {
        return Err(Error::Dimension { expected: d, got: r.dim() });
    }
    let h = cone.default_functional()?;
    let origin = vec![0; d];

    let mut factor_series = Vec::new();
    for (f, &m) in r.factors() {
        let minus = linalg::neg(&f.beta);
        let mut s = ConeSeries::with_grading(cone.clone(), origin.clone(), h.clone(), n)?;
        if cone.member(&f.beta) {
            // sum_{k >= 0} c^k t^{k beta}
            let step = linalg::dot(&h, &f.beta);
            let mut k = 0;
            while k * step <= n {
                s.add_term(linalg::scale(&f.beta, k), &f.c.pow(k).unwrap())?;
                k += 1;
            }
        } else if cone.member(&minus) {
            // -sum_{k >= 1} c^{-k} t^{-k beta}
            let step = linalg::dot(&h, &minus);
            let mut k = 1;
            while k * step <= n {
                s.add_term(linalg::scale(&minus, k), &-f.c.pow(-k).unwrap())?;
                k += 1;
            }
        } else {
            return Err(Error::NotExpandableInCone(f.beta.clone()));
        }
        for _ in 0..m {
            factor_series.push(s.clone());
        }
    }

    let exps: Vec<Vec<i64>> = r.numerator().terms().keys().cloned().collect();
    let shift = support_shift(cone, &exps)?;
    let mut acc = ConeSeries::with_grading(cone.clone(), shift, h, n)?;
    for (x, c) in r.numerator().terms() {
        acc.add_term(x.clone(), c)?;
    }
    for s in &factor_series {
        acc = acc.convolve(s, n)?;
    }
    debug_assert!(verify_expansion(r, &acc), "expansion failed its own check");
    Ok(acc)
}

/// Checks `series * denominator == numerator` at every point where the
/// product is determined by the truncation, and that the support lies in
/// `shift + cone`.
pub fn verify_expansion(r: &RationalFn, s: &ConeSeries) -> bool {
    if s.coeffs.keys().any(|x| !s.cone.member(&linalg::sub(x, &s.shift))) {
        return false;
    }
    let den = r.denominator_poly();
    let num = r.numerator();
    let mut candidates: BTreeSet<Vec<i64>> = num.terms().keys().cloned().collect();
    for x in s.coeffs.keys() {
        for dexp in den.terms().keys() {
            candidates.insert(linalg::add(x, dexp));
        }
    }
    candidates.into_iter().all(|x| {
        if !den.terms().keys().all(|dexp| s.is_known(&linalg::sub(&x, dexp))) {
            return true;
        }
        let lhs = den
            .terms()
            .iter()
            .fold(CoeffQ::zero(), |acc, (dexp, dc)| &acc + &(dc * &s.coeff(&linalg::sub(&x, dexp))));
        lhs == num.coeff(&x)
    })
}

/// Result of expanding one rational function in two cones.
#[derive(Clone, Debug, Serialize)]
pub struct ReexpandReport {
    pub verified: [bool; 2],
    pub supports: [Vec<Vec<i64>>; 2],
    pub supports_differ: bool,
    #[serde(skip)]
    pub series: [ConeSeries; 2],
}

pub fn reexpand_check(r: &RationalFn, q1: &RationalCone, q2: &RationalCone, n: i64) -> Result<ReexpandReport> {
    let a = expand(r, q1, n)?;
    let b = expand(r, q2, n)?;
    let verified = [verify_expansion(r, &a), verify_expansion(r, &b)];
    let supports = [a.support(), b.support()];
    let supports_differ = supports[0] != supports[1];
    Ok(ReexpandReport { verified, supports, supports_differ, series: [a, b] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone_series::LaurentPoly;

    fn cone(gs: &[&[i64]]) -> RationalCone {
        RationalCone::from_generators(&gs.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn geometric() -> RationalFn {
        RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one()).unwrap()
    }

    #[test]
    fn geometric_series_up() {
        let s = expand(&geometric(), &cone(&[&[0, 1]]), 3).unwrap();
        let want: Vec<Vec<i64>> = (0..=3).map(|k| vec![0, k]).collect();
        assert_eq!(s.support(), want);
        assert!(s.coeffs().values().all(CoeffQ::is_one));
    }

    #[test]
    fn geometric_series_down() {
        let s = expand(&geometric(), &cone(&[&[0, -1]]), 3).unwrap();
        let want: Vec<Vec<i64>> = (1..=3).rev().map(|k| vec![0, -k]).collect();
        assert_eq!(s.support(), want);
        assert!(s.coeffs().values().all(|c| *c == CoeffQ::from_int(-1)));
    }

    #[test]
    fn not_expandable() {
        let e = expand(&geometric(), &cone(&[&[1, 0]]), 3).unwrap_err();
        assert_eq!(e, Error::NotExpandableInCone(vec![0, 1]));
    }

    #[test]
    fn binomial_square() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        let mut f = ConeSeries::zero(c, vec![0, 0], 4).unwrap();
        f.add_term(vec![0, 0], &CoeffQ::one()).unwrap();
        f.add_term(vec![1, 0], &CoeffQ::one()).unwrap();
        let sq = f.convolve(&f, 4).unwrap();
        assert_eq!(sq.coeff(&[1, 0]), CoeffQ::from_int(2));
        assert_eq!(sq.coeff(&[2, 0]), CoeffQ::one());
        assert_eq!(sq.coeffs().len(), 3);
    }

    #[test]
    fn truncation_and_mismatch_errors() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        let f = ConeSeries::zero(c.clone(), vec![0, 0], 2).unwrap();
        assert!(matches!(f.convolve(&f, 3), Err(Error::InsufficientTruncation { .. })));
        let g = ConeSeries::zero(cone(&[&[1, 0], &[0, -1]]), vec![0, 0], 2).unwrap();
        assert_eq!(f.convolve(&g, 2).unwrap_err(), Error::ConeMismatch);
    }

    #[test]
    fn exact_division_is_finite() {
        let num = RationalFn::from(LaurentPoly::one(2).sub(&LaurentPoly::monomial(vec![0, 2], CoeffQ::one())));
        let r = num.mul(&geometric());
        let rep = reexpand_check(&r, &cone(&[&[1, 0], &[0, 1]]), &cone(&[&[1, 0], &[0, -1]]), 6).unwrap();
        assert_eq!(rep.supports[0], vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(rep.supports[0], rep.supports[1]);
        assert!(!rep.supports_differ);
    }
}
