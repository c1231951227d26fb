//! Products in the Heisenberg-Weyl group and its identification with
//! `L_aff x| W_aff`.

use dihecke::root_data::RootData;
use dihecke::weyl_heisenberg::{hw_inv, hw_mul, iso_to_semidirect, random_hw, semidirect_mul, HWElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dihecke::Result<()> {
    let rd = RootData::preset("A2")?;
    let g = HWElement::parse(&rd, "z^1 t1[1,0] t2[0,1] s1")?;
    let h = HWElement::parse(&rd, "z^0 t1[0,2] t2[1,-1] s2 s1")?;
    let gh = hw_mul(&rd, &g, &h);
    println!("g h    = {}", gh.display(&rd));
    println!("g^-1   = {}", hw_inv(&rd, &g).display(&rd));
    println!("as JSON: {}", serde_json::to_string(&gh.to_json(&rd)).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let agree = (0..1000)
        .filter(|_| {
            let a = random_hw(&rd, &mut rng, 3);
            let b = random_hw(&rd, &mut rng, 3);
            iso_to_semidirect(&hw_mul(&rd, &a, &b)) == semidirect_mul(&rd, &iso_to_semidirect(&a), &iso_to_semidirect(&b))
        })
        .count();
    println!("isomorphism respects {agree}/1000 random products");
    Ok(())
}
