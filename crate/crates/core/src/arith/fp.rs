use std::fmt;

use super::Field;

/// An element of the prime field `F_p`. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Self {
        debug_assert!(p >= 2);
        let v = value.rem_euclid(p as i64) as u32;
        Fp { value: v, p }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn check(&self, rhs: &Self) {
        debug_assert_eq!(self.p, rhs.p, "mixing prime fields");
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { value: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { value: 1 % self.p, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp { value: ((self.value as u64 + rhs.value as u64) % self.p as u64) as u32, p: self.p }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp {
            value: ((self.value as u64 + self.p as u64 - rhs.value as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp { value: ((self.value as u64 * rhs.value as u64) % self.p as u64) as u32, p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { value: (self.p - self.value) % self.p, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut acc = 1u64;
        let mut base = self.value as u64;
        let m = self.p as u64;
        let mut e = m - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Some(Fp { value: acc as u32, p: self.p })
    }
    fn from_int_like(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_seven() {
        for a in 1..7 {
            let x = Fp::new(a, 7);
            assert!(x.mul(&x.inv().unwrap()).is_one());
        }
        assert!(Fp::new(0, 7).inv().is_none());
    }

    #[test]
    fn negative_reduction() {
        assert_eq!(Fp::new(-1, 3).value(), 2);
        assert!(is_prime(5) && is_prime(3) && !is_prime(9) && !is_prime(1));
    }
}
