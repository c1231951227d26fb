//! Exact arithmetic in `F_p(t1)(t2)`, the rational part of the
//! two-dimensional local field `F_p((t1))((t2))`: rank-2 valuations,
//! residues, the tame symbol, and the `SL_2` double coset machinery in
//! [`matrix`].

mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::arith::{is_prime, Field, Fp, Poly, RatFn};
use crate::error::{Error, Result};
use crate::expr::{self, Interpret, Pos};

pub use matrix::{
    coset_invariant, in_subgroup, random_sl2, representative, sample_subgroup, CosetReduction, DoubleWeylIndex,
    Matrix2D, SL2Weyl, Subgroup,
};

/// An element of `F_p(t1)`, the residue field of `t2`.
pub type Residue = RatFn<Fp>;

/// An element of `F_p(t1)(t2)`, stored as a reduced fraction in `t2` over
/// `F_p(t1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Scalar2D(RatFn<Residue>);

fn residue_zero(p: u32) -> Residue {
    RatFn::constant(Fp::new(0, p))
}

/// `t1`-adic order of a nonzero residue.
pub fn residue_valuation(r: &Residue) -> Result<i64> {
    r.ord().ok_or(Error::ZeroValuation)
}

pub fn residue_to_string(r: &Residue) -> String {
    r.render("t1", |c| (c.to_string(), false))
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

impl Scalar2D {
    pub fn zero(p: u32) -> Self {
        Scalar2D(RatFn::constant(residue_zero(p)))
    }

    pub fn one(p: u32) -> Self {
        Scalar2D::from_int(1, p)
    }

    pub fn from_int(n: i64, p: u32) -> Self {
        Scalar2D::from_residue(RatFn::constant(Fp::new(n, p)))
    }

    pub fn from_residue(r: Residue) -> Self {
        Scalar2D(RatFn::constant(r))
    }

    pub fn t1(p: u32) -> Self {
        Scalar2D::from_residue(RatFn::var(&Fp::new(0, p)))
    }

    pub fn t2(p: u32) -> Self {
        Scalar2D(RatFn::var(&residue_zero(p)))
    }

    /// `t1^i t2^j`.
    pub fn monomial(p: u32, i: i64, j: i64) -> Self {
        let a = Scalar2D::t1(p).pow(i).unwrap();
        let b = Scalar2D::t2(p).pow(j).unwrap();
        a.mul(&b)
    }

    /// The characteristic.
    pub fn p(&self) -> u32 {
        self.0.base_zero().base_zero().modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        Scalar2D(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Scalar2D(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Scalar2D(self.0.mul(&o.0))
    }

    pub fn neg(&self) -> Self {
        Scalar2D(self.0.neg())
    }

    pub fn inv(&self) -> Option<Self> {
        self.0.inv().map(Scalar2D)
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        self.0.div(&o.0).map(Scalar2D)
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        self.0.pow(e).map(Scalar2D)
    }

    /// `(v2, v1)`: the `t2`-adic order and the `t1`-adic order of the
    /// leading `t2`-coefficient.
    pub fn valuations(&self) -> Result<(i64, i64)> {
        let v2 = self.0.ord().ok_or(Error::ZeroValuation)?;
        let lead = self.0.low_coeff().ok_or(Error::ZeroValuation)?;
        Ok((v2, residue_valuation(&lead)?))
    }

    /// The leading `t2`-coefficient `c` in `self = t2^{v2} (c + O(t2))`.
    pub fn leading_residue(&self) -> Result<Residue> {
        self.0.low_coeff().ok_or(Error::ZeroValuation)
    }

    /// Reduction modulo `t2`; defined on `F_p(t1)[[t2]]`.
    pub fn residue2(&self) -> Result<Residue> {
        if self.is_zero() {
            return Ok(residue_zero(self.p()));
        }
        let v2 = self.0.ord().unwrap();
        match v2 {
            0 => self.leading_residue(),
            v if v > 0 => Ok(residue_zero(self.p())),
            v => Err(Error::NegativeValuation(v)),
        }
    }

    /// Membership in the rank-2 valuation ring `O_K`.
    pub fn in_ok(&self) -> bool {
        match self.valuations() {
            Err(_) => true,
            Ok((v2, v1)) => v2 > 0 || (v2 == 0 && v1 >= 0),
        }
    }

    /// Parses the scalar grammar: integers, `t1`, `t2`, `+ - * / ^`,
    /// parentheses.
    pub fn parse(src: &str, p: u32) -> Result<Self> {
        check_prime(p)?;
        expr::parse_with(src, &ScalarSyntax { p })
    }

    /// A random element: a ratio of small random polynomials times a
    /// monomial with exponents in `-spread..=spread`.
    pub fn random<R: Rng>(rng: &mut R, p: u32, spread: i64) -> Self {
        let poly = |rng: &mut R| {
            let mut acc = Scalar2D::zero(p);
            while acc.is_zero() {
                for _ in 0..rng.gen_range(1..=3) {
                    let c = Scalar2D::from_int(rng.gen_range(1..p as i64), p);
                    let m = Scalar2D::monomial(p, rng.gen_range(0..=2), rng.gen_range(0..=2));
                    acc = acc.add(&c.mul(&m));
                }
            }
            acc
        };
        let n = poly(rng);
        let d = poly(rng);
        let m = Scalar2D::monomial(p, rng.gen_range(-spread..=spread), rng.gen_range(-spread..=spread));
        n.div(&d).unwrap().mul(&m)
    }
}

impl fmt::Display for Scalar2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.render("t2", |c| {
            let s = residue_to_string(c);
            let composite = s.contains(' ') || s.contains('/') || s.contains('*');
            (s, composite)
        });
        f.write_str(&s)
    }
}

struct ScalarSyntax {
    p: u32,
}

impl Interpret for ScalarSyntax {
    type Value = Scalar2D;

    fn int(&self, n: &BigInt) -> Result<Scalar2D> {
        let r = (n % BigInt::from(self.p)).to_i64().unwrap();
        Ok(Scalar2D::from_int(r, self.p))
    }

    fn var(&self, name: &str, index: Option<&[i64]>, pos: Pos) -> Result<Scalar2D> {
        match (name, index) {
            ("t1", None) => Ok(Scalar2D::t1(self.p)),
            ("t2", None) => Ok(Scalar2D::t2(self.p)),
            _ => Err(pos.error(format!("unknown variable {name:?} (expected t1 or t2)"))),
        }
    }

    fn add(&self, a: Scalar2D, b: Scalar2D) -> Scalar2D {
        a.add(&b)
    }

    fn sub(&self, a: Scalar2D, b: Scalar2D) -> Scalar2D {
        a.sub(&b)
    }

    fn mul(&self, a: Scalar2D, b: Scalar2D) -> Scalar2D {
        a.mul(&b)
    }

    fn div(&self, a: Scalar2D, b: Scalar2D, _pos: Pos) -> Result<Scalar2D> {
        a.div(&b).ok_or_else(|| Error::NotInvertible("0".into()))
    }

    fn neg(&self, a: Scalar2D) -> Scalar2D {
        a.neg()
    }

    fn pow(&self, a: Scalar2D, e: i64, _pos: Pos) -> Result<Scalar2D> {
        a.pow(e).ok_or_else(|| Error::NotInvertible("0".into()))
    }
}

/// `{f, g} = (-1)^{v2(f) v2(g)} res2(f^{v2(g)} / g^{v2(f)})`, an element of
/// `F_p(t1)`.
pub fn tame_symbol(f: &Scalar2D, g: &Scalar2D) -> Result<Residue> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (a, _) = f.valuations()?;
    let (b, _) = g.valuations()?;
    // f^b / g^a has t2-order 0, so its residue is the quotient of the
    // leading coefficients raised to the same powers
    let lf = f.leading_residue()?.pow(b).unwrap();
    let lg = g.leading_residue()?.pow(a).unwrap();
    let mut s = lf.div(&lg).unwrap();
    if (a * b) % 2 != 0 {
        s = s.neg();
    }
    Ok(s)
}

/// `v1({f, g})`.
pub fn pairing_via_valuation(f: &Scalar2D, g: &Scalar2D) -> Result<i64> {
    residue_valuation(&tame_symbol(f, g)?)
}

/// Embeds a residue polynomial-coefficient list `c_0 + c_1 t1 + ...`.
pub fn residue_from_coeffs(p: u32, cs: &[i64]) -> Residue {
    RatFn::from_poly(Poly::new(cs.iter().map(|&c| Fp::new(c, p)).collect(), Fp::new(0, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(src: &str) -> Scalar2D {
        Scalar2D::parse(src, 3).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(s("t1^-3*t2").valuations().unwrap(), (1, -3));
        assert!(s("t1^-3*t2").in_ok());
        assert_eq!(s("t1^-1").valuations().unwrap(), (0, -1));
        assert!(!s("t1^-1").in_ok());
        let f = s("(1 + t2)/(1 - t1)");
        assert_eq!(f.valuations().unwrap(), (0, 0));
        assert_eq!(f.residue2().unwrap(), residue_from_coeffs(3, &[1]).div(&residue_from_coeffs(3, &[1, -1])).unwrap());
        assert!(f.in_ok());
        assert_eq!(Scalar2D::zero(3).valuations().unwrap_err(), Error::ZeroValuation);
        assert_eq!(s("1/t2").residue2().unwrap_err(), Error::NegativeValuation(-1));
    }

    #[test]
    fn tame_examples() {
        let sym = tame_symbol(&s("t1"), &s("t2")).unwrap();
        assert_eq!(residue_to_string(&sym), "t1");
        assert_eq!(pairing_via_valuation(&s("t1"), &s("t2")).unwrap(), 1);
        let sym = tame_symbol(&s("t2"), &s("t2")).unwrap();
        assert_eq!(sym, residue_from_coeffs(3, &[-1]));
        assert_eq!(pairing_via_valuation(&s("t2"), &s("t2")).unwrap(), 0);
        assert_eq!(tame_symbol(&s("0"), &s("t2")).unwrap_err(), Error::ZeroArgument);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [2, 3, 5, 7] {
            for _ in 0..30 {
                let x = Scalar2D::random(&mut rng, p, 2);
                assert_eq!(Scalar2D::parse(&x.to_string(), p).unwrap(), x, "{x}");
            }
        }
        assert_eq!(s("t1*t2 + 2").to_string(), "t1*t2 + 2");
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Scalar2D::parse("t1", 4).unwrap_err(), Error::NotPrime(4));
    }
}
