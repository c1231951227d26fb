use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{check_prime, Scalar2D};
use crate::error::{Error, Result};

/// A 2x2 matrix over `F_p(t1)(t2)` with its determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2D {
    m: [[Scalar2D; 2]; 2],
    det: Scalar2D,
}

impl Matrix2D {
    pub fn new(a: Scalar2D, b: Scalar2D, c: Scalar2D, d: Scalar2D) -> Self {
        let det = a.mul(&d).sub(&b.mul(&c));
        Matrix2D { m: [[a, b], [c, d]], det }
    }

    pub fn identity(p: u32) -> Self {
        Matrix2D::new(Scalar2D::one(p), Scalar2D::zero(p), Scalar2D::zero(p), Scalar2D::one(p))
    }

    /// `diag(x, x^-1)`.
    pub fn diag(x: &Scalar2D) -> Self {
        let p = x.p();
        Matrix2D::new(x.clone(), Scalar2D::zero(p), Scalar2D::zero(p), x.inv().expect("nonzero diagonal"))
    }

    /// `[[0, x], [-x^-1, 0]]`.
    pub fn antidiag(x: &Scalar2D) -> Self {
        let p = x.p();
        Matrix2D::new(Scalar2D::zero(p), x.clone(), x.inv().expect("nonzero entry").neg(), Scalar2D::zero(p))
    }

    /// Upper unipotent `[[1, y], [0, 1]]`.
    pub fn upper(y: &Scalar2D) -> Self {
        let p = y.p();
        Matrix2D::new(Scalar2D::one(p), y.clone(), Scalar2D::zero(p), Scalar2D::one(p))
    }

    /// Lower unipotent `[[1, 0], [z, 1]]`.
    pub fn lower(z: &Scalar2D) -> Self {
        let p = z.p();
        Matrix2D::new(Scalar2D::one(p), Scalar2D::zero(p), z.clone(), Scalar2D::one(p))
    }

    pub fn entry(&self, k: usize, l: usize) -> &Scalar2D {
        &self.m[k][l]
    }

    pub fn det(&self) -> &Scalar2D {
        &self.det
    }

    pub fn p(&self) -> u32 {
        self.det.p()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |k: usize, l: usize| self.m[k][0].mul(&o.m[0][l]).add(&self.m[k][1].mul(&o.m[1][l]));
        Matrix2D::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn inv(&self) -> Option<Self> {
        let di = self.det.inv()?;
        let [[a, b], [c, d]] = &self.m;
        Some(Matrix2D::new(d.mul(&di), b.neg().mul(&di), c.neg().mul(&di), a.mul(&di)))
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.is_one()
    }

    /// Parses `[[a, b], [c, d]]` where the entries are scalar expressions,
    /// optionally quoted as JSON strings.
    pub fn parse(src: &str, p: u32) -> Result<Self> {
        check_prime(p)?;
        if let Ok(rows) = serde_json::from_str::<Vec<Vec<String>>>(src) {
            if rows.len() != 2 || rows.iter().any(|r| r.len() != 2) {
                return Err(Error::Invalid("matrix must be 2x2".into()));
            }
            let e = |k: usize, l: usize| Scalar2D::parse(&rows[k][l], p);
            return Ok(Matrix2D::new(e(0, 0)?, e(0, 1)?, e(1, 0)?, e(1, 1)?));
        }
        let entries = split_matrix(src)?;
        let parse_at = |(off, text): &(usize, String)| {
            Scalar2D::parse(text, p).map_err(|e| match e {
                Error::Parse { line: 1, column, message } => Error::Parse { line: 1, column: column + off, message },
                other => other,
            })
        };
        Ok(Matrix2D::new(
            parse_at(&entries[0])?,
            parse_at(&entries[1])?,
            parse_at(&entries[2])?,
            parse_at(&entries[3])?,
        ))
    }

    /// JSON form: a 2x2 array of entry strings.
    pub fn to_json(&self) -> Vec<Vec<String>> {
        self.m.iter().map(|r| r.iter().map(Scalar2D::to_string).collect()).collect()
    }
}

impl fmt::Display for Matrix2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Splits `[[a,b],[c,d]]` into entry texts with their column offsets.
fn split_matrix(src: &str) -> Result<Vec<(usize, String)>> {
    let err = |col: usize, msg: &str| Error::Parse { line: 1, column: col + 1, message: msg.to_string() };
    let chars: Vec<char> = src.chars().collect();
    let mut depth = 0usize;
    let mut paren = 0usize;
    let mut entries = Vec::new();
    let mut start = None;
    let mut rows = 0;
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '[' if paren == 0 => {
                depth += 1;
                if depth > 2 {
                    return Err(err(i, "matrix nested too deeply"));
                }
                if depth == 2 {
                    start = Some(i + 1);
                }
            }
            ']' if paren == 0 => {
                if depth == 0 {
                    return Err(err(i, "unbalanced ']'"));
                }
                if depth == 2 {
                    let s = start.take().ok_or_else(|| err(i, "empty entry"))?;
                    entries.push((s, chars[s..i].iter().collect::<String>()));
                    rows += 1;
                }
                depth -= 1;
            }
            ',' if depth == 2 && paren == 0 => {
                let s = start.ok_or_else(|| err(i, "empty entry"))?;
                entries.push((s, chars[s..i].iter().collect::<String>()));
                start = Some(i + 1);
            }
            '(' => paren += 1,
            ')' => paren = paren.saturating_sub(1),
            c if depth == 0 && !c.is_whitespace() && c != ',' => return Err(err(i, "expected '['")),
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err(chars.len(), "unterminated matrix"));
    }
    if rows != 2 || entries.len() != 4 {
        return Err(Error::Invalid("matrix must be 2x2".into()));
    }
    Ok(entries)
}

/// The subgroups of `SL_2(K)`: `D0` the double Iwahori, `D1` the Iwahori of
/// the outer residue map with `O_K`-unit diagonal, `D2` the Borel subgroup
/// with `O_K`-unit diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Subgroup {
    D0,
    D1,
    D2,
}

impl Subgroup {
    pub const ALL: [Subgroup; 3] = [Subgroup::D0, Subgroup::D1, Subgroup::D2];

    pub fn from_index(i: usize) -> Result<Self> {
        Subgroup::ALL.get(i).copied().ok_or_else(|| Error::Invalid(format!("subgroup index {i} not in 0..=2")))
    }

    /// Twice the lower-left threshold `delta` in the ordered group `Q^3`
    /// (lex) where `v(x)` sits as `(0, v2, v1)`. Each subgroup is
    /// `{g : v(g_kl) >= phi_l - phi_k}` with `phi_1 - phi_2 = delta`; no
    /// threshold is itself a value, so every inequality off the diagonal is
    /// strict.
    fn delta2(self) -> [i64; 3] {
        match self {
            Subgroup::D0 => [0, 0, 1],
            Subgroup::D1 => [0, 1, 0],
            Subgroup::D2 => [2, 0, 0],
        }
    }
}

/// `2 * (0, v2, v1)`, or `None` for zero.
fn vt2(x: &Scalar2D) -> Option<[i64; 3]> {
    x.valuations().ok().map(|(v2, v1)| [0, 2 * v2, 2 * v1])
}

fn add3(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn neg3(a: [i64; 3]) -> [i64; 3] {
    [-a[0], -a[1], -a[2]]
}

/// `2 phi_k` with `phi = (delta, 0)`.
fn phi2(which: Subgroup, k: usize) -> [i64; 3] {
    if k == 0 {
        which.delta2()
    } else {
        [0, 0, 0]
    }
}

/// Whether `g` lies in the subgroup; `g` must have determinant 1.
pub fn in_subgroup(g: &Matrix2D, which: Subgroup) -> Result<bool> {
    if !g.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok((0..2).all(|k| {
        (0..2).all(|l| match vt2(g.entry(k, l)) {
            None => true,
            Some(v) => v >= add3(phi2(which, l), neg3(phi2(which, k))),
        })
    }))
}

/// The finite Weyl group `{e, s}` of `SL_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SL2Weyl {
    #[serde(rename = "e")]
    E,
    #[serde(rename = "s")]
    S,
}

/// `t_lambda w` in `(Z (+) Z) x| {e, s}`; `translation = (i, j)` stands for
/// `diag(x, x^-1)` with `x = t1^i t2^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DoubleWeylIndex {
    pub translation: [i64; 2],
    pub finite: SL2Weyl,
}

impl DoubleWeylIndex {
    pub fn inverse(&self) -> Self {
        match self.finite {
            SL2Weyl::E => DoubleWeylIndex { translation: [-self.translation[0], -self.translation[1]], finite: SL2Weyl::E },
            SL2Weyl::S => *self,
        }
    }
}

/// The monomial matrix `diag(x, x^-1) w` for an index.
pub fn representative(index: &DoubleWeylIndex, p: u32) -> Matrix2D {
    let x = Scalar2D::monomial(p, index.translation[0], index.translation[1]);
    match index.finite {
        SL2Weyl::E => Matrix2D::diag(&x),
        SL2Weyl::S => Matrix2D::antidiag(&x),
    }
}

/// Outcome of the reduction `left * g * right = representative`.
#[derive(Clone, Debug)]
pub struct CosetReduction {
    pub index: DoubleWeylIndex,
    pub representative: Matrix2D,
    pub left: Matrix2D,
    pub right: Matrix2D,
}

/// Reduces `g` to the monomial representative of its double coset
/// `D_i g D_j`.
///
/// The pivot is the entry minimizing `v(g_kl) + phi_k - psi_l` (lex);
/// minimality makes every elimination multiplier satisfy the subgroup
/// thresholds, so one row and one column operation leave a monomial matrix.
/// A final unit diagonal strips the unit part of the pivot.
pub fn coset_invariant(g: &Matrix2D, i: Subgroup, j: Subgroup) -> Result<CosetReduction> {
    if !g.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let p = g.p();
    let weight = |m: &Matrix2D, k: usize, l: usize| {
        vt2(m.entry(k, l)).map(|v| add3(add3(v, phi2(i, k)), neg3(phi2(j, l))))
    };
    let (k, l) = [(0, 0), (1, 1), (0, 1), (1, 0)]
        .into_iter()
        .filter_map(|(k, l)| weight(g, k, l).map(|w| (w, k, l)))
        .min_by_key(|t| t.0)
        .map(|(_, k, l)| (k, l))
        .expect("invertible matrix has a nonzero entry");
    let (k2, l2) = (1 - k, 1 - l);

    let mut cur = g.clone();
    let mut left = Matrix2D::identity(p);
    let mut right = Matrix2D::identity(p);
    let pivot = cur.entry(k, l).clone();
    if !cur.entry(k2, l).is_zero() {
        let y = cur.entry(k2, l).div(&pivot).unwrap().neg();
        let e = if k2 == 0 { Matrix2D::upper(&y) } else { Matrix2D::lower(&y) };
        cur = e.mul(&cur);
        left = e.mul(&left);
    }
    if !cur.entry(k, l2).is_zero() {
        let y = cur.entry(k, l2).div(&pivot).unwrap().neg();
        let e = if l == 0 { Matrix2D::upper(&y) } else { Matrix2D::lower(&y) };
        cur = cur.mul(&e);
        right = right.mul(&e);
    }
    debug_assert!(cur.entry(k2, l).is_zero() && cur.entry(k, l2).is_zero());

    let finite = if k == l { SL2Weyl::E } else { SL2Weyl::S };
    let x = match finite {
        SL2Weyl::E => cur.entry(0, 0).clone(),
        SL2Weyl::S => cur.entry(0, 1).clone(),
    };
    let (v2, v1) = x.valuations()?;
    let unit = x.div(&Scalar2D::monomial(p, v1, v2)).unwrap();
    let d = Matrix2D::diag(&unit.inv().unwrap());
    cur = d.mul(&cur);
    left = d.mul(&left);

    let index = DoubleWeylIndex { translation: [v1, v2], finite };
    debug_assert_eq!(cur, representative(&index, p));
    debug_assert!(in_subgroup(&left, i) == Ok(true) && in_subgroup(&right, j) == Ok(true));
    Ok(CosetReduction { index, representative: cur, left, right })
}

/// Random element of `O_K` scaled into valuation at least `(b0, a0)`:
/// `t1^a t2^b` times a unit, with `(b, a)` drawn from the allowed window.
fn random_with_exponents<R: Rng>(rng: &mut R, p: u32, a: i64, b: i64) -> Scalar2D {
    let unit_part = |rng: &mut R| {
        let mut u = Scalar2D::from_int(rng.gen_range(1..p as i64), p);
        for _ in 0..rng.gen_range(0..=2) {
            // terms of positive valuation: t1, t2, t1^-1 t2
            let (i, j) = [(1, 0), (0, 1), (-1, 1)][rng.gen_range(0..3)];
            let c = Scalar2D::from_int(rng.gen_range(1..p as i64), p);
            u = u.add(&c.mul(&Scalar2D::monomial(p, i, j)));
        }
        u
    };
    let num = unit_part(rng);
    let den = unit_part(rng);
    num.div(&den).unwrap().mul(&Scalar2D::monomial(p, a, b))
}

/// A random elementary generator of the subgroup.
fn random_generator<R: Rng>(rng: &mut R, p: u32, which: Subgroup) -> Matrix2D {
    let kinds = if which == Subgroup::D2 { 2 } else { 3 };
    match rng.gen_range(0..kinds) {
        0 => {
            let u = random_with_exponents(rng, p, 0, 0);
            Matrix2D::diag(&u)
        }
        1 => {
            // upper entry: v >= -delta
            let (a, b) = match which {
                Subgroup::D0 => {
                    let b = rng.gen_range(0..=2);
                    (if b == 0 { rng.gen_range(0..=2) } else { rng.gen_range(-2..=2) }, b)
                }
                Subgroup::D1 => (rng.gen_range(-2..=2), rng.gen_range(0..=2)),
                Subgroup::D2 => (rng.gen_range(-2..=2), rng.gen_range(-2..=2)),
            };
            Matrix2D::upper(&random_with_exponents(rng, p, a, b))
        }
        _ => {
            // lower entry: v > delta
            let (a, b) = match which {
                Subgroup::D0 => {
                    let b = rng.gen_range(0..=2);
                    (if b == 0 { rng.gen_range(1..=2) } else { rng.gen_range(-2..=2) }, b)
                }
                _ => (rng.gen_range(-2..=2), rng.gen_range(1..=2)),
            };
            Matrix2D::lower(&random_with_exponents(rng, p, a, b))
        }
    }
}

/// A product of `complexity` random generators of the subgroup,
/// deterministic in `seed`.
pub fn sample_subgroup(which: Subgroup, p: u32, seed: u64, complexity: usize) -> Matrix2D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..complexity).fold(Matrix2D::identity(p), |acc, _| acc.mul(&random_generator(&mut rng, p, which)))
}

/// A random element of `SL_2(F_p(t1)(t2))`: a product of `complexity`
/// unrestricted unipotents, monomial diagonals and the Weyl element.
pub fn random_sl2<R: Rng>(rng: &mut R, p: u32, complexity: usize) -> Matrix2D {
    (0..complexity).fold(Matrix2D::identity(p), |acc, _| {
        let (a, b) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        let g = match rng.gen_range(0..4) {
            0 => Matrix2D::upper(&random_with_exponents(rng, p, a, b)),
            1 => Matrix2D::lower(&random_with_exponents(rng, p, a, b)),
            2 => Matrix2D::diag(&Scalar2D::monomial(p, a, b)),
            _ => Matrix2D::antidiag(&Scalar2D::one(p)),
        };
        acc.mul(&g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(src: &str) -> Scalar2D {
        Scalar2D::parse(src, 3).unwrap()
    }

    fn m(src: &str) -> Matrix2D {
        Matrix2D::parse(src, 3).unwrap()
    }

    #[test]
    fn membership_examples() {
        let id = Matrix2D::identity(3);
        for w in Subgroup::ALL {
            assert!(in_subgroup(&id, w).unwrap());
            assert!(!in_subgroup(&Matrix2D::diag(&s("t1")), w).unwrap());
        }
        let low = Matrix2D::lower(&s("t1*t2"));
        assert!(in_subgroup(&low, Subgroup::D1).unwrap());
        assert!(!in_subgroup(&low, Subgroup::D2).unwrap());
        assert!(in_subgroup(&low, Subgroup::D0).unwrap());
        // upper entry t1^-1: residue in N(K1) but not in O_K
        let up = Matrix2D::upper(&s("t1^-1"));
        assert!(in_subgroup(&up, Subgroup::D1).unwrap());
        assert!(!in_subgroup(&up, Subgroup::D0).unwrap());
        let bad = Matrix2D::new(s("t1"), s("0"), s("0"), s("t1"));
        assert_eq!(in_subgroup(&bad, Subgroup::D0).unwrap_err(), Error::NotUnimodular);
    }

    #[test]
    fn coset_examples() {
        let r = coset_invariant(&Matrix2D::identity(3), Subgroup::D0, Subgroup::D0).unwrap();
        assert_eq!(r.index, DoubleWeylIndex { translation: [0, 0], finite: SL2Weyl::E });
        let r = coset_invariant(&m("[[t2,0],[0,t2^-1]]"), Subgroup::D0, Subgroup::D0).unwrap();
        assert_eq!(r.index, DoubleWeylIndex { translation: [0, 1], finite: SL2Weyl::E });
        let r = coset_invariant(&m("[[0,1],[-1,0]]"), Subgroup::D0, Subgroup::D0).unwrap();
        assert_eq!(r.index, DoubleWeylIndex { translation: [0, 0], finite: SL2Weyl::S });
        assert_eq!(serde_json::to_string(&r.index).unwrap(), r#"{"translation":[0,0],"finite":"s"}"#);
    }

    #[test]
    fn reduction_is_witnessed() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_sl2(&mut rng, 3, 3);
            for i in Subgroup::ALL {
                for j in Subgroup::ALL {
                    let r = coset_invariant(&g, i, j).unwrap();
                    assert_eq!(r.left.mul(&g).mul(&r.right), r.representative);
                }
            }
        }
    }

    #[test]
    fn samples_are_members() {
        for w in Subgroup::ALL {
            assert_eq!(sample_subgroup(w, 3, 1, 0), Matrix2D::identity(3));
            for seed in 0..30 {
                assert!(in_subgroup(&sample_subgroup(w, 3, seed, 3), w).unwrap());
            }
        }
    }

    #[test]
    fn matrix_text_forms() {
        let a = m("[[t2, 0], [0, t2^-1]]");
        let b = m(r#"[["t2","0"],["0","1/t2"]]"#);
        assert_eq!(a, b);
        assert_eq!(Matrix2D::parse(&serde_json::to_string(&a.to_json()).unwrap(), 3).unwrap(), a);
        let e = Matrix2D::parse("[[t2,0],[0,)]]", 3).unwrap_err();
        assert!(matches!(e, Error::Parse { column: 12, .. }), "{e}");
    }
}
