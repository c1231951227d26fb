//! The skew pairing on `L (+) L`, the Heisenberg group it defines, the
//! Heisenberg-Weyl group `H x| W`, and its isomorphism with
//! `L_aff x| W_aff`.
//!
//! Finite Weyl words here use the affine numbering `1..=n`.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{AffineWeylElement, Coweight, FiniteWeyl, LaffVector, RootData};

/// `l1 (x) t_1 + l2 (x) t_2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BiCoweight {
    pub l1: Coweight,
    pub l2: Coweight,
}

impl BiCoweight {
    pub fn new(l1: Vec<i64>, l2: Vec<i64>) -> Self {
        BiCoweight { l1: Coweight(l1), l2: Coweight(l2) }
    }

    pub fn zero(rank: usize) -> Self {
        BiCoweight { l1: Coweight::zero(rank), l2: Coweight::zero(rank) }
    }

    pub fn add(&self, o: &Self) -> Self {
        BiCoweight { l1: self.l1.add(&o.l1), l2: self.l2.add(&o.l2) }
    }

    pub fn neg(&self) -> Self {
        BiCoweight { l1: self.l1.neg(), l2: self.l2.neg() }
    }

    pub fn is_zero(&self) -> bool {
        self.l1.is_zero() && self.l2.is_zero()
    }

    /// Componentwise action of `W`.
    pub fn act(&self, w: &FiniteWeyl) -> Self {
        BiCoweight { l1: Coweight(w.act(&self.l1.0)), l2: Coweight(w.act(&self.l2.0)) }
    }
}

/// `<(l1, l2), (l1', l2')> = Psi(l1, l2') - Psi(l2, l1')`.
pub fn skew_pairing(rd: &RootData, x: &BiCoweight, y: &BiCoweight) -> i64 {
    rd.psi_form(&x.l1.0, &y.l2.0) - rd.psi_form(&x.l2.0, &y.l1.0)
}

/// The cocycle `c(x, y) = Psi(x.l1, y.l2)` polarizing the skew pairing.
pub fn cocycle(rd: &RootData, x: &BiCoweight, y: &BiCoweight) -> i64 {
    rd.psi_form(&x.l1.0, &y.l2.0)
}

/// `(center; bi)` in the central extension of `L (+) L` by `Z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeisenbergElement {
    pub center: i64,
    pub bi: BiCoweight,
}

impl HeisenbergElement {
    pub fn identity(rank: usize) -> Self {
        HeisenbergElement { center: 0, bi: BiCoweight::zero(rank) }
    }

    pub fn central(rank: usize, a: i64) -> Self {
        HeisenbergElement { center: a, bi: BiCoweight::zero(rank) }
    }
}

pub fn heis_mul(rd: &RootData, h: &HeisenbergElement, g: &HeisenbergElement) -> HeisenbergElement {
    HeisenbergElement { center: h.center + g.center + cocycle(rd, &h.bi, &g.bi), bi: h.bi.add(&g.bi) }
}

pub fn heis_inv(rd: &RootData, h: &HeisenbergElement) -> HeisenbergElement {
    HeisenbergElement { center: -h.center + cocycle(rd, &h.bi, &h.bi), bi: h.bi.neg() }
}

/// `h g h^-1 g^-1`.
pub fn heis_commutator(rd: &RootData, h: &HeisenbergElement, g: &HeisenbergElement) -> HeisenbergElement {
    let hg = heis_mul(rd, h, g);
    let gh = heis_mul(rd, g, h);
    heis_mul(rd, &hg, &heis_inv(rd, &gh))
}

/// An element `(a; l1, l2; w)` of the double affine Heisenberg-Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HWElement {
    pub heis: HeisenbergElement,
    pub finite: FiniteWeyl,
}

impl HWElement {
    pub fn identity(rank: usize) -> Self {
        HWElement { heis: HeisenbergElement::identity(rank), finite: FiniteWeyl::identity(rank) }
    }

    pub fn new(center: i64, l1: Vec<i64>, l2: Vec<i64>, finite: FiniteWeyl) -> Self {
        HWElement { heis: HeisenbergElement { center, bi: BiCoweight::new(l1, l2) }, finite }
    }

    pub fn center(&self) -> i64 {
        self.heis.center
    }

    pub fn l1(&self) -> &[i64] {
        &self.heis.bi.l1.0
    }

    pub fn l2(&self) -> &[i64] {
        &self.heis.bi.l2.0
    }

    pub fn to_json(&self, rd: &RootData) -> HWJson {
        HWJson {
            center: self.center(),
            l1: self.l1().to_vec(),
            l2: self.l2().to_vec(),
            word: finite_word(rd, &self.finite),
        }
    }

    pub fn from_json(rd: &RootData, j: &HWJson) -> Result<Self> {
        for v in [&j.l1, &j.l2] {
            if v.len() != rd.rank() {
                return Err(Error::Dimension { expected: rd.rank(), got: v.len() });
            }
        }
        Ok(HWElement::new(j.center, j.l1.clone(), j.l2.clone(), weyl_from_affine_word(rd, &j.word)?))
    }

    /// Canonical text `z^a t1[l1] t2[l2] w`, `w` a reduced word such as
    /// `s1 s2` or `e`.
    pub fn display<'a>(&'a self, rd: &'a RootData) -> impl fmt::Display + 'a {
        HWDisplay { g: self, rd }
    }

    /// Parses the canonical text form.
    pub fn parse(rd: &RootData, s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Invalid(format!("{msg} in Heisenberg-Weyl element {s:?}"));
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() < 4 {
            return Err(bad("expected `z^a t1[..] t2[..] w`"));
        }
        let center: i64 = toks[0].strip_prefix("z^").and_then(|a| a.parse().ok()).ok_or_else(|| bad("bad center"))?;
        let vec_of = |tok: &str, head: &str| -> Result<Vec<i64>> {
            let inner = tok
                .strip_prefix(head)
                .and_then(|r| r.strip_prefix('['))
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad("bad coweight"))?;
            let v: Vec<i64> = inner
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad("bad coweight entry"))?;
            if v.len() != rd.rank() {
                return Err(Error::Dimension { expected: rd.rank(), got: v.len() });
            }
            Ok(v)
        };
        let l1 = vec_of(toks[1], "t1")?;
        let l2 = vec_of(toks[2], "t2")?;
        let word: Vec<usize> = if toks[3..] == ["e"] {
            Vec::new()
        } else {
            toks[3..]
                .iter()
                .map(|t| t.strip_prefix('s').and_then(|i| i.parse().ok()).ok_or_else(|| bad("bad reflection")))
                .collect::<Result<_>>()?
        };
        Ok(HWElement::new(center, l1, l2, weyl_from_affine_word(rd, &word)?))
    }
}

struct HWDisplay<'a> {
    g: &'a HWElement,
    rd: &'a RootData,
}

impl fmt::Display for HWDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "z^{} t1[{}] t2[{}] ", self.g.center(), join(self.g.l1()), join(self.g.l2()))?;
        let word = finite_word(self.rd, &self.g.finite);
        if word.is_empty() {
            f.write_str("e")
        } else {
            let w: Vec<String> = word.iter().map(|i| format!("s{i}")).collect();
            f.write_str(&w.join(" "))
        }
    }
}

/// JSON form `{center, l1, l2, word}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HWJson {
    pub center: i64,
    pub l1: Vec<i64>,
    pub l2: Vec<i64>,
    pub word: Vec<usize>,
}

fn finite_word(rd: &RootData, w: &FiniteWeyl) -> Vec<usize> {
    rd.weyl_reduced_word(w).into_iter().map(|i| i + 1).collect()
}

fn weyl_from_affine_word(rd: &RootData, word: &[usize]) -> Result<FiniteWeyl> {
    let zero_based: Vec<usize> = word
        .iter()
        .map(|&i| {
            if i == 0 || i > rd.rank() {
                Err(Error::Invalid(format!("finite simple reflection index {i} out of 1..={}", rd.rank())))
            } else {
                Ok(i - 1)
            }
        })
        .collect::<Result<_>>()?;
    rd.weyl_from_word(&zero_based)
}

pub fn hw_mul(rd: &RootData, g: &HWElement, h: &HWElement) -> HWElement {
    let moved = HeisenbergElement { center: h.heis.center, bi: h.heis.bi.act(&g.finite) };
    HWElement { heis: heis_mul(rd, &g.heis, &moved), finite: g.finite.mul(&h.finite) }
}

pub fn hw_inv(rd: &RootData, g: &HWElement) -> HWElement {
    let winv = g.finite.inv();
    let hi = heis_inv(rd, &g.heis);
    HWElement { heis: HeisenbergElement { center: hi.center, bi: hi.bi.act(&winv) }, finite: winv }
}

/// `(a; l1, l2; w) -> ((a, l2), t_{l1} w)`.
pub fn iso_to_semidirect(g: &HWElement) -> (LaffVector, AffineWeylElement) {
    (
        LaffVector { level: g.heis.center, finite: g.heis.bi.l2.clone() },
        AffineWeylElement { translation: g.heis.bi.l1.clone(), finite: g.finite.clone() },
    )
}

pub fn iso_from_semidirect(v: &LaffVector, x: &AffineWeylElement) -> HWElement {
    HWElement {
        heis: HeisenbergElement {
            center: v.level,
            bi: BiCoweight { l1: x.translation.clone(), l2: v.finite.clone() },
        },
        finite: x.finite.clone(),
    }
}

/// Product in `L_aff x| W_aff`: `(v, x)(v', x') = (v + x v', x x')`.
pub fn semidirect_mul(
    rd: &RootData,
    a: &(LaffVector, AffineWeylElement),
    b: &(LaffVector, AffineWeylElement),
) -> (LaffVector, AffineWeylElement) {
    let moved = rd.act_laff(&a.1, &b.0);
    let v = LaffVector { level: a.0.level + moved.level, finite: a.0.finite.add(&moved.finite) };
    (v, a.1.mul(&b.1))
}

/// A random element with coordinates in `-bound..=bound` and a uniformly
/// random finite Weyl element.
pub fn random_hw<R: Rng>(rd: &RootData, rng: &mut R, bound: i64) -> HWElement {
    let n = rd.rank();
    let mut vec = || (0..n).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>();
    let l1 = vec();
    let l2 = vec();
    let center = rng.gen_range(-bound..=bound);
    let ws = rd.weyl_elements();
    let w = ws[rng.gen_range(0..ws.len())].clone();
    HWElement::new(center, l1, l2, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn a1() -> RootData {
        RootData::preset("A1").unwrap()
    }

    #[test]
    fn skew_pairing_a1() {
        let rd = a1();
        let x = BiCoweight::new(vec![1], vec![0]);
        let y = BiCoweight::new(vec![0], vec![1]);
        assert_eq!(skew_pairing(&rd, &x, &y), 2);
        assert_eq!(skew_pairing(&rd, &y, &x), -2);
        assert_eq!(skew_pairing(&rd, &x, &x), 0);
    }

    #[test]
    fn commutator_a1() {
        let rd = a1();
        let h = HeisenbergElement { center: 0, bi: BiCoweight::new(vec![1], vec![0]) };
        let g = HeisenbergElement { center: 0, bi: BiCoweight::new(vec![0], vec![1]) };
        assert_eq!(heis_commutator(&rd, &h, &g), HeisenbergElement::central(1, 2));
    }

    #[test]
    fn semidirect_relation_a1() {
        let rd = a1();
        let s = rd.simple_reflection(0).clone();
        let e = rd.weyl_identity();
        let lhs = hw_mul(&rd, &HWElement::new(0, vec![1], vec![0], e.clone()), &HWElement::new(0, vec![0], vec![0], s.clone()));
        let rhs = hw_mul(&rd, &HWElement::new(0, vec![0], vec![0], s), &HWElement::new(0, vec![-1], vec![0], e));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn center_goes_to_level() {
        let rd = RootData::preset("A2").unwrap();
        for a in -3..=3 {
            let (v, x) = iso_to_semidirect(&HWElement::new(a, vec![0, 0], vec![0, 0], rd.weyl_identity()));
            assert_eq!(v, LaffVector::new(a, vec![0, 0]));
            assert!(x.is_identity());
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let rd = RootData::preset("A2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_hw(&rd, &mut rng, 3);
            let text = g.display(&rd).to_string();
            assert_eq!(HWElement::parse(&rd, &text).unwrap(), g);
            let j = serde_json::to_string(&g.to_json(&rd)).unwrap();
            let back: HWJson = serde_json::from_str(&j).unwrap();
            assert_eq!(HWElement::from_json(&rd, &back).unwrap(), g);
        }
        let id = HWElement::identity(2);
        assert_eq!(id.display(&rd).to_string(), "z^0 t1[0,0] t2[0,0] e");
    }

    #[test]
    fn inverse_and_iso_small_sample() {
        for name in ["A1", "A2", "B2", "G2"] {
            let rd = RootData::preset(name).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..200 {
                let g = random_hw(&rd, &mut rng, 3);
                let h = random_hw(&rd, &mut rng, 3);
                assert!(hw_mul(&rd, &g, &hw_inv(&rd, &g)) == HWElement::identity(rd.rank()));
                let lhs = iso_to_semidirect(&hw_mul(&rd, &g, &h));
                let rhs = semidirect_mul(&rd, &iso_to_semidirect(&g), &iso_to_semidirect(&h));
                assert_eq!(lhs, rhs, "{name}");
            }
        }
    }
}
