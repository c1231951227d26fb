//! Random generators shared by the integration tests.
#![allow(dead_code)]

use dihecke::cone_series::{CoeffQ, LaurentPoly, RationalCone, RationalFn};
use dihecke::hecke_rat::{HeckeAlgebra, HeckeElement};
use dihecke::root_data::{AffineWeylElement, RootData};
use rand::Rng;

pub fn coeff<R: Rng>(rng: &mut R) -> CoeffQ {
    match rng.gen_range(0..4) {
        0 => CoeffQ::q(),
        1 => CoeffQ::from_q_coeffs(&[rng.gen_range(-2..=2), 1]),
        _ => CoeffQ::from_int(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 }),
    }
}

pub fn laurent<R: Rng>(rng: &mut R, dim: usize, terms: usize, spread: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        dim,
        (0..terms).map(|_| ((0..dim).map(|_| rng.gen_range(-spread..=spread)).collect(), coeff(rng))),
    )
}

/// Strictly convex cones of dimensions 2 and 3.
pub fn cones() -> Vec<RationalCone> {
    [
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 0], vec![2, 1]],
        vec![vec![0, -1], vec![1, 0]],
        vec![vec![1, 2], vec![-1, 1]],
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]],
    ]
    .iter()
    .map(|g| RationalCone::from_generators(g).unwrap())
    .collect()
}

/// A rational function with at most two binomial factors, all of whose
/// directions lie in `cone` up to sign.
pub fn ratfn_for_cone<R: Rng>(rng: &mut R, cone: &RationalCone) -> RationalFn {
    let dim = cone.dim();
    let gens = cone.generators();
    let terms = rng.gen_range(1..=3);
    let num = laurent(rng, dim, terms, 2);
    let factors: Vec<_> = (0..rng.gen_range(0..=2))
        .map(|_| {
            let mut beta = vec![0; dim];
            while beta.iter().all(|&b| b == 0) {
                for g in gens {
                    let k = rng.gen_range(0..=1);
                    for (b, x) in beta.iter_mut().zip(g) {
                        *b += k * x;
                    }
                }
            }
            if rng.gen() {
                beta.iter_mut().for_each(|b| *b = -*b);
            }
            let c = if rng.gen() { CoeffQ::one() } else { coeff(rng) };
            (beta, c, rng.gen_range(1..=2))
        })
        .collect();
    RationalFn::from_parts(num, &factors).unwrap()
}

pub fn affine<R: Rng>(rd: &RootData, rng: &mut R, max_len: usize) -> AffineWeylElement {
    let word: Vec<usize> = (0..rng.gen_range(0..=max_len)).map(|_| rng.gen_range(0..=rd.rank())).collect();
    rd.affine_from_word(&word).unwrap()
}

/// Sum of up to two `f [x]` terms, each `f` with at most one factor.
pub fn hecke<R: Rng>(alg: &HeckeAlgebra, rng: &mut R) -> HeckeElement {
    let rd = alg.root_data();
    let d = alg.dim();
    let mut out = HeckeElement::zero(d);
    for _ in 0..rng.gen_range(1..=2) {
        let x = affine(rd, rng, 2);
        let terms = rng.gen_range(1..=2);
        let mut f = RationalFn::from(laurent(rng, d, terms, 1));
        if rng.gen() {
            let i = rng.gen_range(0..=rd.rank());
            let a = alg.simple_index(i).root.to_vec();
            f = f.mul(&RationalFn::binomial_inverse(a, CoeffQ::one()).unwrap());
        }
        out = out.add(&alg.group_element(x).scale(&f));
    }
    out
}
