//! Cone-supported series: convolution against a brute-force oracle,
//! expansion soundness, and field laws of the rational-function layer.

mod common;

use std::collections::BTreeMap;

use dihecke::cone_series::{expand, reexpand_check, verify_expansion, CoeffQ, ConeSeries, RationalCone, RationalFn};
use dihecke::root_data::{ConeConvention, RootData};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_series<R: Rng>(rng: &mut R, cone: &RationalCone, n: i64) -> ConeSeries {
    let mut s = ConeSeries::zero(cone.clone(), vec![0; cone.dim()], n).unwrap();
    let pts = cone.points_up_to(&vec![0; cone.dim()], s.grading(), n);
    for p in pts {
        if rng.gen_bool(0.6) {
            s.add_term(p, &common::coeff(rng)).unwrap();
        }
    }
    s
}

#[test]
fn convolution_matches_double_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for cone in common::cones() {
        for _ in 0..5 {
            let n = 4;
            let a = random_series(&mut rng, &cone, n);
            let b = random_series(&mut rng, &cone, n);
            let c = a.convolve(&b, n).unwrap();
            let mut oracle: BTreeMap<Vec<i64>, CoeffQ> = BTreeMap::new();
            for (x, cx) in a.coeffs() {
                for (y, cy) in b.coeffs() {
                    let z: Vec<i64> = x.iter().zip(y).map(|(u, v)| u + v).collect();
                    if c.height(&z) <= n {
                        let e = oracle.entry(z).or_insert_with(CoeffQ::zero);
                        *e = &*e + &(cx * cy);
                    }
                }
            }
            oracle.retain(|_, v| !v.is_zero());
            assert_eq!(c.coeffs(), &oracle);
        }
    }
}

#[test]
fn expand_verify_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cones = common::cones();
    for k in 0..100 {
        let cone = &cones[k % cones.len()];
        let r = common::ratfn_for_cone(&mut rng, cone);
        let s = expand(&r, cone, 6).unwrap_or_else(|e| panic!("{r} in {:?}: {e}", cone.generators()));
        assert!(verify_expansion(&r, &s), "{r}");
    }
}

#[test]
fn expansion_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cone = RationalCone::from_generators(&[vec![1, 0], vec![1, 1]]).unwrap();
    for _ in 0..20 {
        let f = common::ratfn_for_cone(&mut rng, &cone);
        let g = common::ratfn_for_cone(&mut rng, &cone);
        let n = 5;
        let sf = expand(&f, &cone, n + 8).unwrap();
        let sg = expand(&g, &cone, n + 8).unwrap();
        let fg = expand(&f.mul(&g), &cone, n).unwrap();
        // compare on the points both sides determine
        let mut compared = 0;
        let prod = sf.convolve(&sg, sf.order().min(sg.order())).unwrap_or_else(|e| panic!("{e}"));
        for x in fg.support().iter().chain(prod.support().iter()) {
            if fg.is_known(x) && prod.is_known(x) {
                assert_eq!(fg.coeff(x), prod.coeff(x), "{f} * {g} at {x:?}");
                compared += 1;
            }
        }
        assert!(compared > 0);
    }
}

#[test]
fn reexpansion_in_two_chambers() {
    let rd = RootData::preset("A1").unwrap();
    let qp = rd.dominant_affine_cone(ConeConvention::Level).unwrap();
    let qs = rd.cone_q(&rd.affine_generator(1), ConeConvention::Level).unwrap();
    let r = RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one()).unwrap();
    let rep = reexpand_check(&r, &qp, &qs, 8).unwrap();
    assert_eq!(rep.verified, [true, true]);
    assert!(rep.supports_differ);
    assert_eq!(rep.supports[0], (0..=8).map(|k| vec![0, k]).collect::<Vec<_>>());
    let mut neg: Vec<Vec<i64>> = (1..=8).map(|k| vec![0, -k]).collect();
    neg.sort();
    assert_eq!(rep.supports[1], neg);
}

fn arb_ratfn() -> impl Strategy<Value = RationalFn> {
    (any::<u64>(), 0usize..4).prop_map(|(seed, ci)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::ratfn_for_cone(&mut rng, &common::cones()[ci])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_laws(a in arb_ratfn(), b in arb_ratfn(), c in arb_ratfn()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        let d = dihecke::cone_series::RationalFn::one(2);
        prop_assert_eq!(a.mul(&d), a.clone());
    }

    #[test]
    fn text_round_trip(a in arb_ratfn()) {
        prop_assert_eq!(RationalFn::parse(&a.to_string(), 2).unwrap(), a);
    }
}
