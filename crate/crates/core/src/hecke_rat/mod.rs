//! The smash-product algebra `C(T_aff) # W_aff` of finite sums
//! `sum f_w [w]` with rational coefficients, Demazure-Lusztig generators,
//! the operators `tau_{w,l}`, and its action on rational functions.

mod checks;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cone_series::{CoeffQ, RationalFn};
use crate::error::{Error, Result};
use crate::root_data::{AffineWeylElement, Coweight, LaffVector, RootData};

pub use checks::{
    preserves_polynomials, support_cone_check, support_in_cone, verify_relations, Check, PolynomialProbe, RelationReport,
    SupportReport, TermSupport,
};

/// `sum_w f_w [w]`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement {
    dim: usize,
    terms: BTreeMap<AffineWeylElement, RationalFn>,
}

impl HeckeElement {
    pub fn zero(dim: usize) -> Self {
        HeckeElement { dim, terms: BTreeMap::new() }
    }

    /// `f [x]`.
    pub fn term(x: AffineWeylElement, f: RationalFn) -> Self {
        let mut out = HeckeElement::zero(f.dim());
        if !f.is_zero() {
            out.terms.insert(x, f);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<AffineWeylElement, RationalFn> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &AffineWeylElement) -> RationalFn {
        self.terms.get(x).cloned().unwrap_or_else(|| RationalFn::zero(self.dim))
    }

    fn add_term(&mut self, x: AffineWeylElement, f: &RationalFn) {
        if f.is_zero() {
            return;
        }
        let sum = match self.terms.get(&x) {
            Some(g) => g.add(f),
            None => f.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&x);
        } else {
            self.terms.insert(x, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (x, f) in &o.terms {
            out.add_term(x.clone(), f);
        }
        out
    }

    pub fn neg(&self) -> Self {
        HeckeElement { dim: self.dim, terms: self.terms.iter().map(|(x, f)| (x.clone(), f.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Left multiplication by the function `g`: `g * sum f_w [w]`.
    pub fn scale(&self, g: &RationalFn) -> Self {
        let mut out = HeckeElement::zero(self.dim);
        for (x, f) in &self.terms {
            out.add_term(x.clone(), &g.mul(f));
        }
        out
    }
}

/// Root vector of an affine simple reflection in `L_aff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSimpleIndex {
    pub i: usize,
    pub root: LaffVector,
}

/// The algebra over a root datum.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    rd: RootData,
    roots: Vec<AffineSimpleIndex>,
}

impl HeckeAlgebra {
    pub fn new(rd: RootData) -> Self {
        let n = rd.rank();
        let h = rd.psi_form(rd.highest_coroot(), rd.highest_coroot()) / 2;
        let mut roots = vec![AffineSimpleIndex {
            i: 0,
            root: LaffVector::new(-h, rd.highest_coroot().iter().map(|c| -c).collect()),
        }];
        for i in 1..=n {
            let mut v = vec![0; n];
            v[i - 1] = 1;
            roots.push(AffineSimpleIndex { i, root: LaffVector::new(0, v) });
        }
        for r in &roots {
            let image = rd.act_laff(&rd.affine_generator(r.i), &r.root);
            assert_eq!(image.to_vec(), r.root.to_vec().iter().map(|c| -c).collect::<Vec<_>>(), "s_i(a_i) = -a_i");
        }
        HeckeAlgebra { rd, roots }
    }

    /// Same algebra with the level of `a_0` negated: a negative control that
    /// breaks `s_0(a_0) = -a_0`.
    pub fn with_mutated_a0(rd: RootData) -> Self {
        let mut alg = HeckeAlgebra::new(rd);
        alg.roots[0].root.level = -alg.roots[0].root.level;
        alg
    }

    pub fn root_data(&self) -> &RootData {
        &self.rd
    }

    /// Exponent dimension `n + 1`.
    pub fn dim(&self) -> usize {
        self.rd.rank() + 1
    }

    pub fn simple_index(&self, i: usize) -> &AffineSimpleIndex {
        &self.roots[i]
    }

    pub fn one(&self) -> HeckeElement {
        self.group_element(AffineWeylElement::identity(self.rd.rank()))
    }

    /// `[x]`.
    pub fn group_element(&self, x: AffineWeylElement) -> HeckeElement {
        HeckeElement::term(x, RationalFn::one(self.dim()))
    }

    /// `f [e]`.
    pub fn function(&self, f: RationalFn) -> HeckeElement {
        HeckeElement::term(AffineWeylElement::identity(self.rd.rank()), f)
    }

    /// `x . f`: exponents pass through the action of `x` on `L_aff`.
    pub fn act(&self, x: &AffineWeylElement, f: &RationalFn) -> RationalFn {
        if x.is_identity() {
            return f.clone();
        }
        f.transform(&self.rd.laff_matrix(x))
    }

    /// `(f [w]) (g [v]) = f (w.g) [wv]`.
    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.dim());
        for (w, f) in &a.terms {
            let m = self.rd.laff_matrix(w);
            for (v, g) in &b.terms {
                let moved = if w.is_identity() { g.clone() } else { g.transform(&m) };
                out.add_term(w.mul(v), &f.mul(&moved));
            }
        }
        out
    }

    /// `(sum f_w [w]) f = sum f_w (w.f)`.
    pub fn apply(&self, a: &HeckeElement, f: &RationalFn) -> RationalFn {
        a.terms.iter().fold(RationalFn::zero(self.dim()), |acc, (w, g)| acc.add(&g.mul(&self.act(w, f))))
    }

    /// `T_i = q [s_i] + (q - 1) (1 - t^{-a_i})^{-1} ([e] - [s_i])`.
    pub fn dl_generator(&self, i: usize) -> HeckeElement {
        let d = self.dim();
        let q = CoeffQ::q();
        let minus_a: Vec<i64> = self.roots[i].root.to_vec().iter().map(|c| -c).collect();
        let c = RationalFn::binomial_inverse(minus_a, CoeffQ::one())
            .expect("affine roots are nonzero")
            .scale(&(&q - &CoeffQ::one()));
        let s = self.rd.affine_generator(i);
        let mut out = HeckeElement::zero(d);
        out.add_term(AffineWeylElement::identity(self.rd.rank()), &c);
        out.add_term(s, &RationalFn::constant(d, q).sub(&c));
        out
    }

    /// `T_{i_1} ... T_{i_k}`.
    pub fn tau_word(&self, word: &[usize]) -> Result<HeckeElement> {
        word.iter().try_fold(self.one(), |acc, &i| {
            if i > self.rd.rank() {
                return Err(Error::Invalid(format!("no affine simple reflection {i}")));
            }
            Ok(self.mul(&acc, &self.dl_generator(i)))
        })
    }

    /// `tau_w` over the lex-least reduced word of `w`.
    pub fn tau(&self, w: &AffineWeylElement) -> HeckeElement {
        self.tau_word(&self.rd.reduced_word(w)).unwrap()
    }

    /// `t^l [e]`.
    pub fn shift(&self, l: &LaffVector) -> HeckeElement {
        self.function(RationalFn::monomial(l.to_vec(), CoeffQ::one()))
    }

    /// `tau_{w,l} = tau_w (t^l [e])`.
    pub fn tau_l(&self, w: &AffineWeylElement, l: &LaffVector) -> HeckeElement {
        self.mul(&self.tau(w), &self.shift(l))
    }

    /// JSON terms `{word, translation, coeff}` where the group element is
    /// `t_translation w` and `word` is the reduced word of the finite part,
    /// numbered `1..=n`.
    pub fn to_json(&self, a: &HeckeElement) -> Vec<HeckeTermJson> {
        a.terms
            .iter()
            .map(|(x, f)| HeckeTermJson {
                word: self.rd.weyl_reduced_word(&x.finite).into_iter().map(|i| i + 1).collect(),
                translation: x.translation.0.clone(),
                coeff: f.to_string(),
            })
            .collect()
    }

    pub fn from_json(&self, terms: &[HeckeTermJson]) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero(self.dim());
        for t in terms {
            let word: Vec<usize> = t
                .word
                .iter()
                .map(|&i| {
                    if i == 0 || i > self.rd.rank() {
                        Err(Error::Invalid(format!("finite reflection index {i} out of 1..={}", self.rd.rank())))
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect::<Result<_>>()?;
            if t.translation.len() != self.rd.rank() {
                return Err(Error::Dimension { expected: self.rd.rank(), got: t.translation.len() });
            }
            let x = AffineWeylElement { translation: Coweight(t.translation.clone()), finite: self.rd.weyl_from_word(&word)? };
            out.add_term(x, &RationalFn::parse(&t.coeff, self.dim())?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeTermJson {
    pub word: Vec<usize>,
    pub translation: Vec<i64>,
    pub coeff: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> HeckeAlgebra {
        HeckeAlgebra::new(RootData::preset("A1").unwrap())
    }

    fn t(e: &[i64]) -> RationalFn {
        RationalFn::monomial(e.to_vec(), CoeffQ::one())
    }

    #[test]
    fn smash_product_examples() {
        let h = a1();
        let s = h.root_data().affine_generator(1);
        let x = h.function(t(&[0, 1]));
        assert_eq!(h.mul(&h.one(), &x), x);
        assert_eq!(h.mul(&h.group_element(s.clone()), &x), HeckeElement::term(s, t(&[0, -1])));
        let t1 = AffineWeylElement::translation(Coweight(vec![1]));
        assert_eq!(h.mul(&h.group_element(t1.clone()), &x), HeckeElement::term(t1, t(&[2, 1])));
    }

    #[test]
    fn dl_action_a1() {
        let h = a1();
        let q = RationalFn::constant(2, CoeffQ::q());
        let t1 = h.dl_generator(1);
        assert_eq!(h.apply(&t1, &RationalFn::one(2)), q);
        let x = t(&[0, 1]);
        let want = q.mul(&t(&[0, -1])).add(&q.sub(&RationalFn::one(2)).mul(&x.add(&RationalFn::one(2))));
        let got = h.apply(&t1, &x);
        assert_eq!(got, want);
        assert!(got.is_polynomial());
    }

    #[test]
    fn a0_is_anti_fixed() {
        for name in ["A1", "A2", "B2", "G2"] {
            let h = HeckeAlgebra::new(RootData::preset(name).unwrap());
            let a0 = &h.simple_index(0).root;
            assert!(a0.level < 0);
        }
        let h = a1();
        assert_eq!(h.simple_index(0).root, LaffVector::new(-1, vec![-1]));
    }

    #[test]
    fn tau_basics() {
        let h = a1();
        let e = AffineWeylElement::identity(1);
        assert_eq!(h.tau_l(&e, &LaffVector::zero(1)), h.one());
        assert_eq!(h.apply(&h.tau_l(&e, &LaffVector::new(0, vec![1])), &RationalFn::one(2)), t(&[0, 1]));
    }

    #[test]
    fn json_round_trip() {
        let h = HeckeAlgebra::new(RootData::preset("A2").unwrap());
        let a = h.tau_word(&[0, 1, 2]).unwrap();
        let j = serde_json::to_string(&h.to_json(&a)).unwrap();
        let back: Vec<HeckeTermJson> = serde_json::from_str(&j).unwrap();
        assert_eq!(h.from_json(&back).unwrap(), a);
    }
}
