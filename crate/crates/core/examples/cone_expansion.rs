//! One rational function, two expansions: `1 / (1 - t^(0,1))` in the
//! dominant cone and in its image under the finite reflection.

use dihecke::cone_series::{expand, reexpand_check, verify_expansion, CoeffQ, RationalFn};
use dihecke::root_data::{ConeConvention, RootData};

fn main() -> dihecke::Result<()> {
    let rd = RootData::preset("A1")?;
    let q_plus = rd.dominant_affine_cone(ConeConvention::Level)?;
    let q_s = rd.cone_q(&rd.affine_generator(1), ConeConvention::Level)?;
    let r = RationalFn::binomial_inverse(vec![0, 1], CoeffQ::one())?;

    let rep = reexpand_check(&r, &q_plus, &q_s, 5)?;
    println!("{r}");
    println!("  in Q+   : support {:?} verified {}", rep.supports[0], rep.verified[0]);
    println!("  in Q(s) : support {:?} verified {}", rep.supports[1], rep.verified[1]);

    let f = RationalFn::parse("(1 + q*t[1,0]) / (1 - t[1,1])^2", 2)?;
    let s = expand(&f, &q_plus, 4)?;
    println!("{f} to order 4, verified {}:", verify_expansion(&f, &s));
    println!("{}", serde_json::to_string_pretty(&s.to_dump()).unwrap());
    Ok(())
}
