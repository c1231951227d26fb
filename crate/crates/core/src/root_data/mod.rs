//! Finite root data, the coweight lattice `L`, the finite Weyl group and
//! the affine Weyl group `W_aff = L x| W` acting on `L_aff = Z (+) L`.

mod affine;
mod cones;
mod weyl;

pub use affine::{AffineJson, AffineWeylElement, LaffVector};
pub use cones::ConeConvention;
pub use weyl::FiniteWeyl;

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMat};

/// Normalization of the invariant form `Psi` on `L`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormConvention {
    /// Short coroots have `Psi(a, a) = 2`.
    #[default]
    Basic,
    /// The primitive integral invariant form (gcd of entries 1).
    Minimal,
}

/// A coweight in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero(&self.0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(linalg::add(&self.0, &other.0))
    }

    pub fn neg(&self) -> Coweight {
        Coweight(linalg::neg(&self.0))
    }
}

/// Root data of a simply connected group given by its Cartan matrix.
///
/// Convention: `<alpha_j, alpha_i^vee> = cartan[i][j]`.
#[derive(Clone, Debug)]
pub struct RootData {
    cartan: IntMat,
    psi: IntMat,
    convention: FormConvention,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
    highest_coroot: Vec<i64>,
    simple: Vec<FiniteWeyl>,
    theta_reflection: FiniteWeyl,
}

impl RootData {
    pub fn new(cartan: IntMat, convention: FormConvention) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || cartan.iter().any(|r| r.len() != n) {
            return Err(Error::NotFiniteType("matrix must be square and nonempty".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::NotFiniteType(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::NotFiniteType(format!("bad off-diagonal pair ({i},{j})")));
                }
            }
        }
        let half_norms = symmetrizer(&cartan)?;
        let sym: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| BigRational::from_integer(cartan[i][j].into()) * &half_norms[j]).collect())
            .collect();
        if !linalg::is_positive_definite(&sym) {
            return Err(Error::NotFiniteType("symmetrization is not positive definite".into()));
        }
        let components = components(&cartan);
        if components.len() != 1 {
            return Err(Error::Invalid("Cartan matrix is decomposable; expected a simple group".into()));
        }
        // smallest half-norm becomes 1, i.e. Psi(short, short) = 2
        let min = half_norms.iter().min().unwrap().clone();
        let mut psi: IntMat = sym
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let v = x / &min;
                        assert!(v.is_integer(), "non-integral invariant form");
                        v.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect();
        if convention == FormConvention::Minimal {
            let g = psi.iter().flatten().fold(0i64, |g, &x| g.gcd(&x));
            for x in psi.iter_mut().flatten() {
                *x /= g;
            }
        }

        let simple: Vec<FiniteWeyl> = (0..n).map(|i| simple_reflection(&cartan, i)).collect();
        let (positive_roots, positive_coroots) = enumerate_roots(&cartan, &simple);
        let (highest_root, highest_coroot) = positive_roots
            .iter()
            .zip(&positive_coroots)
            .max_by_key(|(r, _)| r.iter().sum::<i64>())
            .map(|(r, c)| (r.clone(), c.clone()))
            .unwrap();
        let theta_reflection = reflection(&cartan, &highest_root, &highest_coroot);
        let rd = RootData {
            cartan,
            psi,
            convention,
            positive_roots,
            positive_coroots,
            highest_root,
            highest_coroot,
            simple,
            theta_reflection,
        };
        debug_assert!(rd.psi_is_invariant());
        Ok(rd)
    }

    /// Named presets `A1`, `A2`, `A3`, `B2`, `G2`.
    pub fn preset(name: &str) -> Result<Self> {
        Self::new(preset_cartan(name)?, FormConvention::Basic)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &IntMat {
        &self.cartan
    }

    pub fn psi(&self) -> &IntMat {
        &self.psi
    }

    pub fn convention(&self) -> FormConvention {
        self.convention
    }

    /// `theta` in simple-root coordinates.
    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// `theta^vee` in simple-coroot coordinates.
    pub fn highest_coroot(&self) -> &[i64] {
        &self.highest_coroot
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// `<alpha, l>` for a root in simple-root coordinates and a coweight.
    pub fn pairing(&self, alpha: &[i64], l: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for (j, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (k, &lk) in l.iter().enumerate().take(n) {
                s += a * lk * self.cartan[k][j];
            }
        }
        s
    }

    /// The invariant form `Psi(l, l')`.
    pub fn psi_form(&self, l: &[i64], m: &[i64]) -> i64 {
        linalg::dot(l, &linalg::mat_vec(&self.psi, m))
    }

    pub fn simple_reflection(&self, i: usize) -> &FiniteWeyl {
        &self.simple[i]
    }

    /// `s_theta`, the reflection in the highest root.
    pub fn theta_reflection(&self) -> &FiniteWeyl {
        &self.theta_reflection
    }

    pub fn weyl_identity(&self) -> FiniteWeyl {
        FiniteWeyl::identity(self.rank())
    }

    pub fn weyl_act(&self, w: &FiniteWeyl, l: &Coweight) -> Coweight {
        Coweight(w.act(&l.0))
    }

    /// `s_{i1} s_{i2} ... ` for a word in the finite simple reflections.
    pub fn weyl_from_word(&self, word: &[usize]) -> Result<FiniteWeyl> {
        word.iter().try_fold(self.weyl_identity(), |acc, &i| {
            self.simple
                .get(i)
                .map(|s| acc.mul(s))
                .ok_or_else(|| Error::Invalid(format!("no simple reflection {i}")))
        })
    }

    /// Number of positive roots sent to negative roots.
    pub fn weyl_length(&self, w: &FiniteWeyl) -> usize {
        self.positive_roots.iter().filter(|a| is_negative(&w.act_root(a))).count()
    }

    /// Lexicographically least reduced word.
    pub fn weyl_reduced_word(&self, w: &FiniteWeyl) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            // left descent: w^{-1}(alpha_i) < 0
            let i = (0..self.rank())
                .find(|&i| is_negative(&cur.act_root_inv(&unit(self.rank(), i))))
                .expect("non-identity element has a descent");
            word.push(i);
            cur = self.simple[i].mul(&cur);
        }
        word
    }

    /// All elements of `W`, in breadth-first order from the identity.
    pub fn weyl_elements(&self) -> Vec<FiniteWeyl> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([self.weyl_identity()]);
        while let Some(w) = queue.pop_front() {
            if !seen.insert(w.clone()) {
                continue;
            }
            for s in &self.simple {
                queue.push_back(w.mul(s));
            }
            out.push(w);
        }
        out
    }

    fn psi_is_invariant(&self) -> bool {
        let n = self.rank();
        self.simple.iter().all(|s| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    let (ea, eb) = (unit(n, a), unit(n, b));
                    self.psi_form(&s.act(&ea), &s.act(&eb)) == self.psi_form(&ea, &eb)
                })
            })
        })
    }
}

pub fn preset_cartan(name: &str) -> Result<IntMat> {
    Ok(match name.trim().to_ascii_uppercase().as_str() {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        "B2" => vec![vec![2, -2], vec![-1, 2]],
        "G2" => vec![vec![2, -1], vec![-3, 2]],
        other => return Err(Error::Invalid(format!("unknown root system preset {other:?}"))),
    })
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub(crate) fn is_negative(v: &[i64]) -> bool {
    v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x < 0)
}

/// Half norms `b_j` with `cartan[i][j] b_j` symmetric.
fn symmetrizer(cartan: &IntMat) -> Result<Vec<BigRational>> {
    let n = cartan.len();
    let mut b: Vec<Option<BigRational>> = vec![None; n];
    for start in 0..n {
        if b[start].is_some() {
            continue;
        }
        b[start] = Some(BigRational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j == i || cartan[i][j] == 0 {
                    continue;
                }
                let want = BigRational::new(BigInt::from(cartan[j][i]), BigInt::from(cartan[i][j]))
                    * b[i].clone().unwrap();
                match &b[j] {
                    Some(bj) if *bj != want => {
                        return Err(Error::NotFiniteType("matrix is not symmetrizable".into()))
                    }
                    Some(_) => {}
                    None => {
                        b[j] = Some(want);
                        queue.push_back(j);
                    }
                }
            }
        }
    }
    let b: Vec<BigRational> = b.into_iter().map(Option::unwrap).collect();
    if b.iter().any(|x| !x.is_positive() || x.is_zero()) {
        return Err(Error::NotFiniteType("non-positive symmetrizer".into()));
    }
    Ok(b)
}

fn components(cartan: &IntMat) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// `s_i(l) = l - <alpha_i, l> alpha_i^vee`, `s_i(a) = a - <a, alpha_i^vee> alpha_i`.
fn simple_reflection(cartan: &IntMat, i: usize) -> FiniteWeyl {
    let n = cartan.len();
    let mut lmat = linalg::identity(n);
    let mut rmat = linalg::identity(n);
    for k in 0..n {
        // column k: image of the k-th basis vector
        lmat[i][k] -= cartan[k][i];
        rmat[i][k] -= cartan[i][k];
    }
    FiniteWeyl::involution(lmat, rmat)
}

/// Reflection in a root `alpha` with coroot `alpha_vee`.
fn reflection(cartan: &IntMat, alpha: &[i64], coroot: &[i64]) -> FiniteWeyl {
    let n = cartan.len();
    // <alpha, e_k> for coweight basis e_k, <alpha_j, coroot> for root basis
    let alpha_on_l: Vec<i64> = (0..n).map(|k| (0..n).map(|j| alpha[j] * cartan[k][j]).sum()).collect();
    let coroot_on_r: Vec<i64> = (0..n).map(|j| (0..n).map(|i| coroot[i] * cartan[i][j]).sum()).collect();
    let mut lmat = linalg::identity(n);
    let mut rmat = linalg::identity(n);
    for r in 0..n {
        for k in 0..n {
            lmat[r][k] -= alpha_on_l[k] * coroot[r];
            rmat[r][k] -= coroot_on_r[k] * alpha[r];
        }
    }
    FiniteWeyl::involution(lmat, rmat)
}

/// Positive roots (simple-root coordinates) with their coroots, sorted by
/// height and then lexicographically.
fn enumerate_roots(cartan: &IntMat, simple: &[FiniteWeyl]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = cartan.len();
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = (0..n).map(|i| (unit(n, i), unit(n, i))).collect();
    let mut all = Vec::new();
    while let Some((r, c)) = queue.pop_front() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for s in simple {
            queue.push_back((s.act_root(&r), s.act(&c)));
        }
        all.push((r, c));
    }
    let mut pos: Vec<(Vec<i64>, Vec<i64>)> = all.into_iter().filter(|(r, _)| !is_negative(r)).collect();
    pos.sort_by(|a, b| a.0.iter().sum::<i64>().cmp(&b.0.iter().sum::<i64>()).then(a.0.cmp(&b.0)));
    pos.into_iter().unzip()
}
