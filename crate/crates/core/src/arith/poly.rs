use std::cmp::Ordering;

use super::Field;

/// Dense univariate polynomial over a field, lowest degree first.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients. A zero of the coefficient field is kept alongside so the
/// polynomial can build constants without outside context.
#[derive(Clone, Debug)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
    zero: F,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> PartialOrd for Poly<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Poly<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>, zero: F) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, zero: zero.zero_like() }
    }

    pub fn zero(like: &F) -> Self {
        Poly { coeffs: Vec::new(), zero: like.zero_like() }
    }

    pub fn constant(c: F) -> Self {
        let zero = c.zero_like();
        Poly::new(vec![c], zero)
    }

    pub fn one(like: &F) -> Self {
        Poly::constant(like.one_like())
    }

    /// `c * x^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let zero = c.zero_like();
        let mut v = vec![zero.clone(); k];
        v.push(c);
        Poly::new(v, zero)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn zero_coeff(&self) -> &F {
        &self.zero
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (the order of vanishing at 0).
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(v, self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(F::neg).collect(), zero: self.zero.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.zero);
        }
        let mut v = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v, self.zero.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.zero.clone())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().expect("division by zero polynomial");
        let dl_inv = dl.inv().expect("leading coefficient is a unit");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return (Poly::zero(&self.zero), self.clone());
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&dl_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(b));
            }
            q[k] = c;
        }
        (Poly::new(q, self.zero.clone()), Poly::new(r, self.zero.clone()))
    }

    /// Quotient by a divisor known to divide exactly; a monic constant
    /// divisor is free.
    pub fn exact_div(&self, d: &Self) -> Self {
        if d.is_constant() && d.lead().is_some_and(|l| l.is_one()) {
            return self.clone();
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Divides out the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        Poly::new(self.coeffs.iter().map(f).collect(), self.zero.clone())
    }

    /// Renders with `var` as the indeterminate. `coeff` returns the text of a
    /// coefficient and whether it needs parentheses when used as a factor.
    pub fn render(&self, var: &str, coeff: impl Fn(&F) -> (String, bool)) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (mut text, composite) = coeff(c);
            let negative = !composite && text.starts_with('-');
            if negative {
                text.remove(0);
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = if mono.is_empty() {
                if composite {
                    format!("({text})")
                } else {
                    text
                }
            } else if text == "1" && !composite {
                mono
            } else if composite {
                format!("({text})*{mono}")
            } else {
                format!("{text}*{mono}")
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}
