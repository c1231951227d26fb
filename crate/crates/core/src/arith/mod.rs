//! Exact scalar arithmetic: prime fields, the rationals, univariate
//! polynomials over a field and their fraction fields.
//!
//! Everything here is built on [`Field`], a small trait whose values carry
//! enough context (e.g. the modulus of a prime field) to manufacture their
//! own zero and one. This lets the tower `F_p -> F_p(t1) -> F_p(t1)(t2)`
//! be expressed with one generic [`RatFn`] type.

mod fp;
mod frac;
mod poly;
mod rational;

pub use fp::{is_prime, Fp};
pub use frac::RatFn;
pub use poly::Poly;
pub use rational::{parse_rational, rational_to_string};

use std::fmt::Debug;

/// A commutative field with exact, decidable equality.
///
/// The arithmetic methods take references and allocate a fresh value, which
/// keeps generic code free of the clone noise that by-value operators need.
pub trait Field: Clone + Eq + Ord + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// The image of an integer under the canonical ring map `Z -> F`.
    fn from_int_like(&self, n: i64) -> Self;

    /// `self^e` for any integer `e`; `None` when `self` is zero and `e < 0`.
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        Some(acc)
    }
}
