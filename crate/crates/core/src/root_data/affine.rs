use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{is_negative, Coweight, FiniteWeyl, RootData};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMat};

/// A vector `(a, l)` of `L_aff = Z (+) L`: `level` is the `Z` coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LaffVector {
    pub level: i64,
    pub finite: Coweight,
}

impl LaffVector {
    pub fn new(level: i64, finite: Vec<i64>) -> Self {
        LaffVector { level, finite: Coweight(finite) }
    }

    pub fn zero(rank: usize) -> Self {
        LaffVector::new(0, vec![0; rank])
    }

    /// Flat coordinates `[a, l_1, ..., l_n]`.
    pub fn to_vec(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(self.finite.0.len() + 1);
        v.push(self.level);
        v.extend_from_slice(&self.finite.0);
        v
    }

    pub fn from_slice(v: &[i64]) -> Self {
        LaffVector::new(v[0], v[1..].to_vec())
    }
}

/// An element `t_lambda w` of the affine Weyl group `L x| W`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineWeylElement {
    pub translation: Coweight,
    pub finite: FiniteWeyl,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        AffineWeylElement { translation: Coweight::zero(rank), finite: FiniteWeyl::identity(rank) }
    }

    pub fn translation(lambda: Coweight) -> Self {
        let n = lambda.0.len();
        AffineWeylElement { translation: lambda, finite: FiniteWeyl::identity(n) }
    }

    pub fn from_finite(w: FiniteWeyl) -> Self {
        AffineWeylElement { translation: Coweight::zero(w.rank()), finite: w }
    }

    pub fn rank(&self) -> usize {
        self.translation.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity()
    }

    /// `(t_l w)(t_m v) = t_{l + w(m)} wv`
    pub fn mul(&self, rhs: &Self) -> Self {
        AffineWeylElement {
            translation: Coweight(linalg::add(&self.translation.0, &self.finite.act(&rhs.translation.0))),
            finite: self.finite.mul(&rhs.finite),
        }
    }

    /// `(t_l w)^{-1} = t_{-w^{-1}(l)} w^{-1}`
    pub fn inv(&self) -> Self {
        let wi = self.finite.inv();
        AffineWeylElement { translation: Coweight(linalg::neg(&wi.act(&self.translation.0))), finite: wi }
    }
}

/// JSON form of `t_lambda w`: `finite` is the reduced word of `w` numbered
/// `1..=n`; `word` and `length` describe the element in the affine generators
/// and are ignored on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineJson {
    pub translation: Vec<i64>,
    pub finite: Vec<usize>,
    #[serde(default)]
    pub word: Vec<usize>,
    #[serde(default)]
    pub length: usize,
}

impl RootData {
    /// Affine simple reflection: `s_0 = t_{theta^vee} s_theta`, `s_i` finite.
    pub fn affine_generator(&self, i: usize) -> AffineWeylElement {
        if i == 0 {
            AffineWeylElement {
                translation: Coweight(self.highest_coroot().to_vec()),
                finite: self.theta_reflection().clone(),
            }
        } else {
            AffineWeylElement::from_finite(self.simple_reflection(i - 1).clone())
        }
    }

    pub fn affine_from_word(&self, word: &[usize]) -> Result<AffineWeylElement> {
        word.iter().try_fold(AffineWeylElement::identity(self.rank()), |acc, &i| {
            if i > self.rank() {
                return Err(Error::Invalid(format!("no affine simple reflection {i}")));
            }
            Ok(acc.mul(&self.affine_generator(i)))
        })
    }

    pub fn affine_element(&self, translation: &[i64], finite_word: &[usize]) -> Result<AffineWeylElement> {
        if translation.len() != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), got: translation.len() });
        }
        Ok(AffineWeylElement { translation: Coweight(translation.to_vec()), finite: self.weyl_from_word(finite_word)? })
    }

    pub fn affine_to_json(&self, x: &AffineWeylElement) -> AffineJson {
        AffineJson {
            translation: x.translation.0.clone(),
            finite: self.weyl_reduced_word(&x.finite).into_iter().map(|i| i + 1).collect(),
            word: self.reduced_word(x),
            length: self.length(x),
        }
    }

    pub fn affine_from_json(&self, j: &AffineJson) -> Result<AffineWeylElement> {
        let word = j
            .finite
            .iter()
            .map(|&i| match i {
                1.. if i <= self.rank() => Ok(i - 1),
                _ => Err(Error::Invalid(format!("finite reflection index {i} out of 1..={}", self.rank()))),
            })
            .collect::<Result<Vec<_>>>()?;
        self.affine_element(&j.translation, &word)
    }

    /// Parses a product of `s<i>` (affine generators, `i` in `0..=n`) and
    /// `t[l_1,...,l_n]` (translations), or `e`. Factors multiply left to right.
    pub fn parse_affine(&self, src: &str) -> Result<AffineWeylElement> {
        let mut x = AffineWeylElement::identity(self.rank());
        let mut seen = false;
        let mut rest = src;
        let mut col = 1;
        loop {
            let trimmed = rest.trim_start_matches(|c: char| c.is_whitespace() || c == '*');
            col += rest.len() - trimmed.len();
            rest = trimmed;
            if rest.is_empty() {
                break;
            }
            let err = |msg: String| Error::Parse { line: 1, column: col, message: msg };
            let end = if rest.starts_with("t[") {
                rest.find(']').map_or(rest.len(), |k| k + 1)
            } else {
                rest.find(|c: char| c.is_whitespace() || c == '*').unwrap_or(rest.len())
            };
            let tok = &rest[..end];
            let factor = if tok == "e" {
                AffineWeylElement::identity(self.rank())
            } else if let Some(i) = tok.strip_prefix('s') {
                let i: usize = i.parse().map_err(|_| err(format!("bad reflection {tok:?}")))?;
                if i > self.rank() {
                    return Err(err(format!("no affine simple reflection s{i} in rank {}", self.rank())));
                }
                self.affine_generator(i)
            } else if let Some(inner) = tok.strip_prefix("t[").and_then(|r| r.strip_suffix(']')) {
                let v: Vec<i64> = inner
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err(format!("bad translation {tok:?}")))?;
                if v.len() != self.rank() {
                    return Err(err(format!("translation needs {} entries, got {}", self.rank(), v.len())));
                }
                AffineWeylElement::translation(Coweight(v))
            } else {
                return Err(err(format!("expected `s<i>`, `t[..]` or `e`, found {tok:?}")));
            };
            x = x.mul(&factor);
            seen = true;
            col += end;
            rest = &rest[end..];
        }
        if !seen {
            return Err(Error::Parse { line: 1, column: col, message: "empty affine Weyl element".into() });
        }
        Ok(x)
    }

    /// Iwahori-Matsumoto length of `t_lambda w`.
    pub fn length(&self, x: &AffineWeylElement) -> usize {
        let lambda = &x.translation.0;
        self.positive_roots()
            .iter()
            .map(|alpha| {
                let p = self.pairing(alpha, lambda);
                if is_negative(&x.finite.act_root_inv(alpha)) {
                    (p - 1).unsigned_abs() as usize
                } else {
                    p.unsigned_abs() as usize
                }
            })
            .sum()
    }

    /// Indices `i` in `0..=n` with `l(s_i x) < l(x)`.
    pub fn left_descents(&self, x: &AffineWeylElement) -> Vec<usize> {
        let l = self.length(x);
        (0..=self.rank()).filter(|&i| self.length(&self.affine_generator(i).mul(x)) < l).collect()
    }

    /// Lexicographically least reduced word in `s_0, ..., s_n`.
    pub fn reduced_word(&self, x: &AffineWeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let (i, next) = (0..=self.rank())
                .map(|i| (i, self.affine_generator(i).mul(&cur)))
                .find(|(_, y)| self.length(y) < len)
                .expect("positive length element has a left descent");
            word.push(i);
            cur = next;
            len -= 1;
        }
        word
    }

    /// Every reduced word of `x`.
    pub fn all_reduced_words(&self, x: &AffineWeylElement) -> Vec<Vec<usize>> {
        if self.length(x) == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.left_descents(x) {
            let rest = self.affine_generator(i).mul(x);
            for mut w in self.all_reduced_words(&rest) {
                w.insert(0, i);
                out.push(w);
            }
        }
        out
    }

    /// The integer matrix of `x` acting on `L_aff`:
    /// `w(a, l) = (a, w l)`, `t_m(a, l) = (a + Psi(m, l), l)`.
    pub fn laff_matrix(&self, x: &AffineWeylElement) -> IntMat {
        let n = self.rank();
        let lm = x.finite.coweight_matrix();
        // row vector lambda^T Psi
        let lp: Vec<i64> = (0..n).map(|k| (0..n).map(|j| x.translation.0[j] * self.psi()[j][k]).sum()).collect();
        let mut m = vec![vec![0; n + 1]; n + 1];
        m[0][0] = 1;
        for c in 0..n {
            m[0][c + 1] = (0..n).map(|k| lp[k] * lm[k][c]).sum();
        }
        for r in 0..n {
            m[r + 1][1..(n + 1)].copy_from_slice(&lm[r][..n]);
        }
        m
    }

    pub fn act_laff(&self, x: &AffineWeylElement, v: &LaffVector) -> LaffVector {
        LaffVector::from_slice(&linalg::mat_vec(&self.laff_matrix(x), &v.to_vec()))
    }

    /// Order of `s_i s_j` in `W_aff`, `None` if it exceeds 12 (infinite).
    pub fn affine_coxeter_order(&self, i: usize, j: usize) -> Option<usize> {
        let g = self.affine_generator(i).mul(&self.affine_generator(j));
        let mut p = g.clone();
        for m in 1..=12 {
            if p.is_identity() {
                return Some(m);
            }
            p = p.mul(&g);
        }
        None
    }

    /// Breadth-first enumeration of `W_aff` up to word length `max_len`,
    /// mapping each element to its depth. This is an independent check on
    /// [`RootData::length`].
    pub fn bfs_lengths(&self, max_len: usize) -> BTreeMap<AffineWeylElement, usize> {
        let mut depth = BTreeMap::new();
        let id = AffineWeylElement::identity(self.rank());
        depth.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let d = depth[&x];
            if d == max_len {
                continue;
            }
            for i in 0..=self.rank() {
                let y = x.mul(&self.affine_generator(i));
                if !depth.contains_key(&y) {
                    depth.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        depth
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> RootData {
        RootData::preset("A1").unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let rd = a1();
        let s = rd.simple_reflection(0).clone();
        let x = AffineWeylElement { translation: Coweight(vec![1]), finite: s };
        assert!(x.mul(&x).is_identity());
        let e = AffineWeylElement::identity(1);
        assert_eq!(e.mul(&x), x);
        assert!(x.mul(&x.inv()).is_identity());
    }

    #[test]
    fn length_examples() {
        let rd = a1();
        assert_eq!(rd.length(&AffineWeylElement::identity(1)), 0);
        let t = AffineWeylElement::translation(Coweight(vec![1]));
        assert_eq!(rd.length(&t), 2);
        let ts = rd.affine_element(&[1], &[0]).unwrap();
        assert_eq!(rd.length(&ts), 1);
        assert_eq!(rd.reduced_word(&ts), vec![0]);
        assert_eq!(ts, rd.affine_generator(0));
        assert!(rd.reduced_word(&AffineWeylElement::identity(1)).is_empty());
    }

    #[test]
    fn laff_action_examples() {
        let rd = a1();
        let t = AffineWeylElement::translation(Coweight(vec![1]));
        assert_eq!(rd.act_laff(&t, &LaffVector::new(0, vec![1])), LaffVector::new(2, vec![1]));
        let s = rd.affine_generator(1);
        assert_eq!(rd.act_laff(&s, &LaffVector::new(3, vec![4])), LaffVector::new(3, vec![-4]));
    }

    #[test]
    fn bfs_matches_formula_b2() {
        let rd = RootData::preset("B2").unwrap();
        for (x, d) in rd.bfs_lengths(5) {
            assert_eq!(rd.length(&x), d);
            let w = rd.reduced_word(&x);
            assert_eq!(w.len(), d);
            assert_eq!(rd.affine_from_word(&w).unwrap(), x);
        }
    }

    #[test]
    fn coxeter_orders() {
        assert_eq!(a1().affine_coxeter_order(0, 1), None);
        let rd = RootData::preset("A2").unwrap();
        assert_eq!(rd.affine_coxeter_order(0, 1), Some(3));
        assert_eq!(rd.affine_coxeter_order(1, 2), Some(3));
        assert_eq!(rd.affine_coxeter_order(2, 2), Some(1));
    }
}
