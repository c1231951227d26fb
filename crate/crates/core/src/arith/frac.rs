use super::{Field, Poly};

/// A rational function `num / den` in one variable over `F`.
///
/// Always reduced: `gcd(num, den) = 1` and `den` is monic, so structurally
/// equal values are exactly the equal field elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatFn<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFn<F> {
    /// Builds and reduces `num / den`. Panics if `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            let one = Poly::one(den.zero_coeff());
            return RatFn { num, den: one };
        }
        let g = if den.is_constant() { Poly::one(den.zero_coeff()) } else { num.gcd(&den) };
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let l = d.lead().unwrap().clone();
        if !l.is_one() {
            let li = l.inv().unwrap();
            n = n.scale(&li);
            d = d.scale(&li);
        }
        RatFn { num: n, den: d }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let one = Poly::one(p.zero_coeff());
        RatFn { num: p, den: one }
    }

    pub fn constant(c: F) -> Self {
        RatFn::from_poly(Poly::constant(c))
    }

    /// The indeterminate itself.
    pub fn var(like: &F) -> Self {
        RatFn::from_poly(Poly::monomial(like.one_like(), 1))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn base_zero(&self) -> &F {
        self.den.zero_coeff()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The constant value if this is a constant.
    pub fn as_constant(&self) -> Option<F> {
        if self.num.is_constant() && self.is_polynomial() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Order of vanishing at the origin; `None` for zero.
    pub fn ord(&self) -> Option<i64> {
        let a = self.num.ord()? as i64;
        let b = self.den.ord().expect("nonzero denominator") as i64;
        Some(a - b)
    }

    /// The leading coefficient of the expansion around the origin: if
    /// `self = x^k (c + O(x))` this is `c`.
    pub fn low_coeff(&self) -> Option<F> {
        let a = self.num.ord()?;
        let b = self.den.ord().unwrap();
        self.num.coeff(a).div(&self.den.coeff(b))
    }

    /// Applies a coefficient-field map to numerator and denominator.
    pub fn map_coeffs<G: Field>(&self, zero: &G, f: impl Fn(&F) -> G) -> RatFn<G> {
        let n = Poly::new(self.num.coeffs().iter().map(&f).collect(), zero.clone());
        let d = Poly::new(self.den.coeffs().iter().map(&f).collect(), zero.clone());
        RatFn::new(n, d)
    }

    /// Substitutes `x -> 0` when the value is finite there.
    pub fn value_at_zero(&self) -> Option<F> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return None;
        }
        self.num.coeff(0).div(&d0)
    }

    pub fn render(&self, var: &str, coeff: impl Fn(&F) -> (String, bool) + Copy) -> String {
        let n = self.num.render(var, coeff);
        if self.is_polynomial() {
            return n;
        }
        let d = self.den.render(var, coeff);
        let wrap = |s: String, poly: &Poly<F>| {
            let single = poly.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
            if single && !s.starts_with('-') {
                s
            } else {
                format!("({s})")
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl<F: Field> Field for RatFn<F> {
    fn zero_like(&self) -> Self {
        RatFn::from_poly(Poly::zero(self.base_zero()))
    }
    fn one_like(&self) -> Self {
        RatFn::constant(self.base_zero().one_like())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
    fn add(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFn::new(self.num.add(&rhs.num), self.den.clone());
        }
        // with d1 = g a, d2 = g b, a common factor of the sum and g a b can
        // only divide g
        let g = self.den.gcd(&rhs.den);
        let a = self.den.exact_div(&g);
        let b = rhs.den.exact_div(&g);
        let n = self.num.mul(&b).add(&rhs.num.mul(&a));
        if n.is_zero() {
            return self.zero_like();
        }
        let den = a.mul(&b).mul(&g);
        if g.is_constant() {
            return RatFn { num: n, den };
        }
        let h = n.gcd(&g);
        if h.is_constant() {
            RatFn { num: n, den }
        } else {
            RatFn { num: n.exact_div(&h), den: den.exact_div(&h) }
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return self.zero_like();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFn::from_poly(self.num.mul(&rhs.num));
        }
        // after cross-cancelling, the product of reduced fractions is reduced
        // and its denominator is a product of monic factors
        let cancel = |n: &Poly<F>, d: &Poly<F>| if d.is_constant() { Poly::one(d.zero_coeff()) } else { n.gcd(d) };
        let g1 = cancel(&self.num, &rhs.den);
        let g2 = cancel(&rhs.num, &self.den);
        let n = self.num.exact_div(&g1).mul(&rhs.num.exact_div(&g2));
        let d = self.den.exact_div(&g2).mul(&rhs.den.exact_div(&g1));
        RatFn { num: n, den: d }
    }
    fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFn::new(self.den.clone(), self.num.clone()))
        }
    }
    fn from_int_like(&self, n: i64) -> Self {
        RatFn::constant(self.base_zero().from_int_like(n))
    }
}
