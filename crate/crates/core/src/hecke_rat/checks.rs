use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{HeckeAlgebra, HeckeElement};
use crate::cone_series::{expand, verify_expansion, CoeffQ, RationalCone, RationalFn};
use crate::error::Result;
use crate::root_data::{AffineWeylElement, ConeConvention, LaffVector};

/// One exact identity check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Ledger of relation checks by family.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub quadratic: Vec<Check>,
    pub braid: Vec<Check>,
    pub reduced_word: Vec<Check>,
    pub shift_law: Vec<Check>,
}

fn status(cs: &[Check]) -> &'static str {
    if cs.iter().all(|c| c.pass) {
        "pass"
    } else {
        "fail"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationSummary {
    pub quadratic: &'static str,
    pub braid: &'static str,
    pub reduced_word: &'static str,
    pub shift_law: &'static str,
}

impl RelationReport {
    pub fn summary(&self) -> RelationSummary {
        RelationSummary {
            quadratic: status(&self.quadratic),
            braid: status(&self.braid),
            reduced_word: status(&self.reduced_word),
            shift_law: status(&self.shift_law),
        }
    }

    pub fn passed(&self) -> bool {
        [&self.quadratic, &self.braid, &self.reduced_word, &self.shift_law].iter().all(|cs| cs.iter().all(|c| c.pass))
    }

    pub fn failures(&self) -> Vec<&Check> {
        [&self.quadratic, &self.braid, &self.reduced_word, &self.shift_law]
            .into_iter()
            .flatten()
            .filter(|c| !c.pass)
            .collect()
    }
}

/// Memoized `T_{i_1} ... T_{i_k}` keyed by word.
struct TauCache<'a> {
    alg: &'a HeckeAlgebra,
    gens: Vec<HeckeElement>,
    memo: HashMap<Vec<usize>, HeckeElement>,
}

impl<'a> TauCache<'a> {
    fn new(alg: &'a HeckeAlgebra) -> Self {
        let gens = (0..=alg.root_data().rank()).map(|i| alg.dl_generator(i)).collect();
        TauCache { alg, gens, memo: HashMap::new() }
    }

    fn get(&mut self, word: &[usize]) -> HeckeElement {
        if word.is_empty() {
            return self.alg.one();
        }
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let (last, prefix) = word.split_last().unwrap();
        let head = self.get(prefix);
        let v = self.alg.mul(&head, &self.gens[*last]);
        self.memo.insert(word.to_vec(), v.clone());
        v
    }
}

/// Checks the quadratic and braid relations of the generators, reduced-word
/// independence of `tau_w` for `l(w) <= max_length`, and the shift law
/// `tau_{w,l+l'} = tau_{w,l'} tau_{e,l}` on `shift_samples` random triples.
pub fn verify_relations(alg: &HeckeAlgebra, max_length: usize, shift_samples: usize, seed: u64) -> RelationReport {
    let rd = alg.root_data();
    let n = rd.rank();
    let d = alg.dim();
    let q = RationalFn::constant(d, CoeffQ::q());
    let mut cache = TauCache::new(alg);

    let quadratic = (0..=n)
        .map(|i| {
            let t = cache.gens[i].clone();
            let lhs = alg.mul(&t.sub(&alg.function(q.clone())), &t.add(&alg.one()));
            Check { name: format!("(T{i} - q)(T{i} + 1) = 0"), pass: lhs.is_zero() }
        })
        .collect();

    let mut braid = Vec::new();
    for i in 0..=n {
        for j in (i + 1)..=n {
            let Some(m) = rd.affine_coxeter_order(i, j) else { continue };
            let w1: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
            let w2: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
            let pass = cache.get(&w1) == cache.get(&w2);
            braid.push(Check { name: format!("braid T{i},T{j} (m = {m})"), pass });
        }
    }

    let lengths = rd.bfs_lengths(max_length);
    let mut reduced_word = Vec::new();
    for x in lengths.keys() {
        let words = rd.all_reduced_words(x);
        if words.len() < 2 {
            continue;
        }
        let first = cache.get(&words[0]);
        let pass = words[1..].iter().all(|w| cache.get(w) == first);
        let name = format!("tau independent of {} reduced words of {:?}", words.len(), words[0]);
        reduced_word.push(Check { name, pass });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<&AffineWeylElement> = lengths.keys().collect();
    let rand_l = |rng: &mut ChaCha8Rng| LaffVector::new(rng.gen_range(-2..=2), (0..n).map(|_| rng.gen_range(-2..=2)).collect());
    let mut shift_law = Vec::new();
    for _ in 0..shift_samples {
        let w = pool[rng.gen_range(0..pool.len())];
        let l = rand_l(&mut rng);
        let l2 = rand_l(&mut rng);
        let tw = cache.get(&rd.reduced_word(w));
        let sum = LaffVector::from_slice(&crate::linalg::add(&l.to_vec(), &l2.to_vec()));
        let lhs = alg.mul(&tw, &alg.shift(&sum));
        let rhs = alg.mul(&alg.mul(&tw, &alg.shift(&l2)), &alg.shift(&l));
        let name = format!("tau(w={:?}, l={:?}+{:?})", rd.reduced_word(w), l.to_vec(), l2.to_vec());
        shift_law.push(Check { name, pass: lhs == rhs });
    }

    RelationReport { quadratic, braid, reduced_word, shift_law }
}

/// Result of applying an operator to all monomials in a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialProbe {
    /// Every output was a Laurent polynomial. Evidence, not proof.
    pub holds: bool,
    pub checked: usize,
    /// First exponent whose image has a denominator.
    pub witness: Option<Vec<i64>>,
}

/// Applies `a` to `t^mu` for every `|mu|_inf <= bound`, smallest first,
/// stopping at the first non-polynomial output.
pub fn preserves_polynomials(alg: &HeckeAlgebra, a: &HeckeElement, bound: i64) -> PolynomialProbe {
    let d = alg.dim();
    let mut exps: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..d {
        exps = exps
            .into_iter()
            .flat_map(|e| {
                (-bound..=bound).map(move |c| {
                    let mut v = e.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    exps.sort_by_key(|e| (e.iter().map(|c| c.abs()).max().unwrap_or(0), e.clone()));
    let mut checked = 0;
    for mu in exps {
        checked += 1;
        let out = alg.apply(a, &RationalFn::monomial(mu.clone(), CoeffQ::one()));
        if !out.is_polynomial() {
            return PolynomialProbe { holds: false, checked, witness: Some(mu) };
        }
    }
    PolynomialProbe { holds: true, checked, witness: None }
}

/// Expansion outcome for one coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct TermSupport {
    pub element: Vec<usize>,
    pub coeff: String,
    pub expanded: bool,
    pub verified: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportReport {
    pub cone: Vec<Vec<i64>>,
    pub order: i64,
    pub terms: Vec<TermSupport>,
}

impl SupportReport {
    pub fn all_ok(&self) -> bool {
        self.terms.iter().all(|t| t.expanded && t.verified)
    }
}

/// Expands every coefficient of `a` in `cone` to height `n` and verifies each
/// expansion against its rational function.
pub fn support_in_cone(alg: &HeckeAlgebra, a: &HeckeElement, cone: &RationalCone, n: i64) -> SupportReport {
    let terms = a
        .terms()
        .iter()
        .map(|(x, f)| {
            let element = alg.root_data().reduced_word(x);
            match expand(f, cone, n) {
                Ok(s) => TermSupport { element, coeff: f.to_string(), expanded: true, verified: verify_expansion(f, &s), error: None },
                Err(e) => TermSupport { element, coeff: f.to_string(), expanded: false, verified: false, error: Some(e.to_string()) },
            }
        })
        .collect();
    SupportReport { cone: cone.generators().to_vec(), order: n, terms }
}

/// Expands the coefficients of `tau_{w,l}` in the cone `Q(w)`.
pub fn support_cone_check(
    alg: &HeckeAlgebra,
    w: &AffineWeylElement,
    l: &LaffVector,
    n: i64,
    convention: ConeConvention,
) -> Result<SupportReport> {
    let cone = alg.root_data().cone_q(w, convention)?;
    Ok(support_in_cone(alg, &alg.tau_l(w, l), &cone, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::RootData;

    #[test]
    fn a1_relations() {
        let alg = HeckeAlgebra::new(RootData::preset("A1").unwrap());
        let r = verify_relations(&alg, 4, 10, 1);
        assert!(r.passed(), "{:?}", r.failures());
        assert!(r.braid.is_empty());
    }

    #[test]
    fn mutated_a0_fails_quadratic() {
        let alg = HeckeAlgebra::with_mutated_a0(RootData::preset("A1").unwrap());
        let r = verify_relations(&alg, 2, 2, 1);
        assert!(!r.quadratic[0].pass);
        assert!(r.quadratic[1].pass);
        assert_eq!(r.summary().quadratic, "fail");
    }

    #[test]
    fn polynomial_probe() {
        let alg = HeckeAlgebra::new(RootData::preset("A1").unwrap());
        assert!(preserves_polynomials(&alg, &alg.dl_generator(0), 2).holds);
        let bad = alg.function(RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one()).unwrap());
        let p = preserves_polynomials(&alg, &bad, 2);
        assert!(!p.holds);
        assert_eq!(p.witness, Some(vec![0, 0]));
    }

    #[test]
    fn support_examples() {
        let rd = RootData::preset("A1").unwrap();
        let alg = HeckeAlgebra::new(rd.clone());
        let s = rd.affine_generator(1);
        let r = support_cone_check(&alg, &s, &LaffVector::zero(1), 6, ConeConvention::Level).unwrap();
        assert!(r.all_ok(), "{r:?}");
        let wrong = RationalCone::from_generators(&[vec![1, 0]]).unwrap();
        let r = support_in_cone(&alg, &alg.tau(&s), &wrong, 6);
        assert!(!r.all_ok());
        assert!(r.terms.iter().any(|t| t.error.as_deref().is_some_and(|e| e.contains("not in the cone"))));
    }
}
