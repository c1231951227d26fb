use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{rational_to_string, Field, Poly, RatFn};

/// An exact element of `Q(q)`, the coefficient field of every series and
/// rational function on the dual affine torus.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoeffQ(RatFn<BigRational>);

impl CoeffQ {
    pub fn zero() -> Self {
        CoeffQ(RatFn::constant(BigRational::zero()).zero_like())
    }

    pub fn one() -> Self {
        CoeffQ::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        CoeffQ::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        CoeffQ(RatFn::constant(r))
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        CoeffQ(RatFn::var(&BigRational::zero()))
    }

    /// Polynomial in `q` from coefficients, lowest degree first.
    pub fn from_q_coeffs(cs: &[i64]) -> Self {
        let p = Poly::new(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect(), BigRational::zero());
        CoeffQ(RatFn::from_poly(p))
    }

    pub fn inner(&self) -> &RatFn<BigRational> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn inv(&self) -> Option<Self> {
        self.0.inv().map(CoeffQ)
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        self.0.pow(e).map(CoeffQ)
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        self.0.div(&rhs.0).map(CoeffQ)
    }

    /// True when the text form needs parentheses to be used as a factor.
    pub fn is_composite(&self) -> bool {
        let s = self.to_string();
        s.contains(' ') || s.contains('/') || s.contains('*')
    }
}

impl Default for CoeffQ {
    fn default() -> Self {
        CoeffQ::zero()
    }
}

impl fmt::Display for CoeffQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render("q", |c| (rational_to_string(c), false)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CoeffQ> for &CoeffQ {
            type Output = CoeffQ;
            fn $m(self, rhs: &CoeffQ) -> CoeffQ {
                let f: fn(&CoeffQ, &CoeffQ) -> CoeffQ = $body;
                f(self, rhs)
            }
        }
        impl $tr for CoeffQ {
            type Output = CoeffQ;
            fn $m(self, rhs: CoeffQ) -> CoeffQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CoeffQ> for CoeffQ {
            type Output = CoeffQ;
            fn $m(self, rhs: &CoeffQ) -> CoeffQ {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| CoeffQ(Field::add(&a.0, &b.0)));
forward_binop!(Sub, sub, |a, b| CoeffQ(Field::sub(&a.0, &b.0)));
forward_binop!(Mul, mul, |a, b| CoeffQ(Field::mul(&a.0, &b.0)));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero in Q(q)"));

impl Neg for &CoeffQ {
    type Output = CoeffQ;
    fn neg(self) -> CoeffQ {
        CoeffQ(Field::neg(&self.0))
    }
}

impl Neg for CoeffQ {
    type Output = CoeffQ;
    fn neg(self) -> CoeffQ {
        -&self
    }
}
