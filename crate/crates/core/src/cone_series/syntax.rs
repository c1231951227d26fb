use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CoeffQ, LaurentPoly, RationalFn};
use crate::error::{Error, Result};
use crate::expr::{self, Interpret, Pos};

/// Expressions in `q` only.
struct CoeffSyntax;

impl Interpret for CoeffSyntax {
    type Value = CoeffQ;

    fn int(&self, n: &BigInt) -> Result<CoeffQ> {
        Ok(CoeffQ::from_rational(BigRational::from_integer(n.clone())))
    }

    fn var(&self, name: &str, index: Option<&[i64]>, pos: Pos) -> Result<CoeffQ> {
        match (name, index) {
            ("q", None) => Ok(CoeffQ::q()),
            _ => Err(pos.error(format!("unknown variable {name:?} (expected q)"))),
        }
    }

    fn add(&self, a: CoeffQ, b: CoeffQ) -> CoeffQ {
        a + b
    }

    fn sub(&self, a: CoeffQ, b: CoeffQ) -> CoeffQ {
        a - b
    }

    fn mul(&self, a: CoeffQ, b: CoeffQ) -> CoeffQ {
        a * b
    }

    fn div(&self, a: CoeffQ, b: CoeffQ, _pos: Pos) -> Result<CoeffQ> {
        a.checked_div(&b).ok_or_else(|| Error::NotInvertible("0".into()))
    }

    fn neg(&self, a: CoeffQ) -> CoeffQ {
        -a
    }

    fn pow(&self, a: CoeffQ, e: i64, _pos: Pos) -> Result<CoeffQ> {
        a.pow(e).ok_or_else(|| Error::NotInvertible("0".into()))
    }
}

/// Expressions in `q` and monomials `t[x_0, ..., x_n]` of a fixed length.
struct TorusSyntax {
    dim: usize,
}

/// A value together with a `base^k` decomposition when it came from a
/// power, so that `x/(1 - t[..])^2` divides by the binomial twice.
struct TorusVal {
    val: RationalFn,
    power: Option<(RationalFn, u64)>,
}

impl From<RationalFn> for TorusVal {
    fn from(val: RationalFn) -> Self {
        TorusVal { val, power: None }
    }
}

impl Interpret for TorusSyntax {
    type Value = TorusVal;

    fn int(&self, n: &BigInt) -> Result<TorusVal> {
        Ok(RationalFn::constant(self.dim, CoeffSyntax.int(n)?).into())
    }

    fn var(&self, name: &str, index: Option<&[i64]>, pos: Pos) -> Result<TorusVal> {
        match (name, index) {
            ("q", None) => Ok(RationalFn::constant(self.dim, CoeffQ::q()).into()),
            ("t", Some(ix)) if ix.len() == self.dim => Ok(RationalFn::monomial(ix.to_vec(), CoeffQ::one()).into()),
            ("t", Some(ix)) => Err(pos.error(format!("exponent has {} entries, expected {}", ix.len(), self.dim))),
            _ => Err(pos.error(format!("unknown variable {name:?} (expected q or t[..])"))),
        }
    }

    fn add(&self, a: TorusVal, b: TorusVal) -> TorusVal {
        a.val.add(&b.val).into()
    }

    fn sub(&self, a: TorusVal, b: TorusVal) -> TorusVal {
        a.val.sub(&b.val).into()
    }

    fn mul(&self, a: TorusVal, b: TorusVal) -> TorusVal {
        a.val.mul(&b.val).into()
    }

    fn div(&self, a: TorusVal, b: TorusVal, _pos: Pos) -> Result<TorusVal> {
        let inv = match b.power {
            Some((base, k)) => {
                let bi = base.inv()?;
                (0..k).fold(RationalFn::one(self.dim), |acc, _| acc.mul(&bi))
            }
            None => b.val.inv()?,
        };
        Ok(a.val.mul(&inv).into())
    }

    fn neg(&self, a: TorusVal) -> TorusVal {
        a.val.neg().into()
    }

    fn pow(&self, a: TorusVal, e: i64, _pos: Pos) -> Result<TorusVal> {
        let base = if e < 0 { a.val.inv()? } else { a.val.clone() };
        let val = (0..e.unsigned_abs()).fold(RationalFn::one(self.dim), |acc, _| acc.mul(&base));
        let power = (e > 0).then(|| (a.val, e as u64));
        Ok(TorusVal { val, power })
    }
}

impl CoeffQ {
    pub fn parse(src: &str) -> Result<CoeffQ> {
        expr::parse_with(src, &CoeffSyntax)
    }
}

impl RationalFn {
    /// Parses an expression in `q` and `t[..]` with `dim` exponents. Every
    /// divisor must be a monomial or a two-term binomial.
    pub fn parse(src: &str, dim: usize) -> Result<RationalFn> {
        expr::parse_with(src, &TorusSyntax { dim }).map(|v| v.val)
    }
}

impl LaurentPoly {
    pub fn parse(src: &str, dim: usize) -> Result<LaurentPoly> {
        let r = RationalFn::parse(src, dim)?;
        r.as_polynomial().cloned().ok_or_else(|| Error::Invalid(format!("{src:?} is not a Laurent polynomial")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["q + 1", "1/(q - 1)", "1/2*q", "-q^2 + 3", "(q^2 + 1)/(q^3 - 2)"] {
            let c = CoeffQ::parse(s).unwrap();
            assert_eq!(CoeffQ::parse(&c.to_string()).unwrap(), c, "{s} -> {c}");
        }
        for s in [
            "1/(1 - t[0,1])",
            "(q - 1)*t[1,0]/(1 - t[0,1])^2/(1 - q*t[1,1])",
            "t[0,-1]/(1 - 1/2*t[0,-2]) + q",
            "(1 - t[0,2])/(1 - t[0,1])",
        ] {
            let r = RationalFn::parse(s, 2).unwrap();
            assert_eq!(RationalFn::parse(&r.to_string(), 2).unwrap(), r, "{s} -> {r}");
        }
        assert!(RationalFn::parse("(1 - t[0,2])/(1 - t[0,1])", 2).unwrap().is_polynomial());
    }

    #[test]
    fn errors() {
        assert!(matches!(RationalFn::parse("t[1]", 2), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(RationalFn::parse("1/(1 + t[1,0] + t[0,1])", 2), Err(Error::NotInvertible(_))));
        assert!(matches!(CoeffQ::parse("x"), Err(Error::Parse { .. })));
    }
}
