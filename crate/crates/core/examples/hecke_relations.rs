//! Demazure-Lusztig generators in the smash product: relations, the
//! polynomial representation and cone support of `tau_w`.

use dihecke::cone_series::RationalFn;
use dihecke::hecke_rat::{preserves_polynomials, support_cone_check, verify_relations, HeckeAlgebra};
use dihecke::root_data::{ConeConvention, LaffVector, RootData};

fn main() -> dihecke::Result<()> {
    for ty in ["A1", "A2", "B2"] {
        let alg = HeckeAlgebra::new(RootData::preset(ty)?);
        let report = verify_relations(&alg, 3, 20, 1);
        println!("{ty}: {}", serde_json::to_string(&report.summary()).unwrap());
        let bad = verify_relations(&HeckeAlgebra::with_mutated_a0(RootData::preset(ty)?), 1, 0, 1);
        println!("{ty} with a0 mutated: {}", serde_json::to_string(&bad.summary()).unwrap());
    }

    let rd = RootData::preset("A1")?;
    let alg = HeckeAlgebra::new(rd.clone());
    let t1 = alg.dl_generator(1);
    let x = RationalFn::parse("t[0,1]", 2)?;
    println!("T1 . t[0,1] = {}", alg.apply(&t1, &x));
    println!("T0 keeps polynomials: {}", preserves_polynomials(&alg, &alg.dl_generator(0), 3).holds);

    for (w, _) in rd.bfs_lengths(2) {
        let rep = support_cone_check(&alg, &w, &LaffVector::zero(1), 6, ConeConvention::Level)?;
        let failed: Vec<_> = rep.terms.iter().filter_map(|t| t.error.clone()).collect();
        println!("tau_{:?}: {} coefficients, expandable in Q(w): {} {:?}", rd.reduced_word(&w), rep.terms.len(), rep.all_ok(), failed);
    }
    Ok(())
}
