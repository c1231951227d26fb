//! The Heisenberg-Weyl group against the semidirect product `L_aff x| W_aff`.

use dihecke::root_data::RootData;
use dihecke::weyl_heisenberg::{
    hw_inv, hw_mul, iso_from_semidirect, iso_to_semidirect, random_hw, semidirect_mul, HWElement,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn iso_is_a_homomorphism() {
    for ty in ["A1", "A2"] {
        let rd = RootData::preset(ty).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let g = random_hw(&rd, &mut rng, 3);
            let h = random_hw(&rd, &mut rng, 3);
            let lhs = iso_to_semidirect(&hw_mul(&rd, &g, &h));
            let rhs = semidirect_mul(&rd, &iso_to_semidirect(&g), &iso_to_semidirect(&h));
            assert_eq!(lhs, rhs, "{ty}: {} * {}", g.display(&rd), h.display(&rd));
        }
    }
}

#[test]
fn iso_round_trips_and_group_laws() {
    for ty in ["A1", "A2", "B2"] {
        let rd = RootData::preset(ty).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..1_000 {
            let g = random_hw(&rd, &mut rng, 4);
            let (v, x) = iso_to_semidirect(&g);
            assert_eq!(iso_from_semidirect(&v, &x), g);
            assert_eq!(hw_mul(&rd, &g, &hw_inv(&rd, &g)), HWElement::identity(rd.rank()));
            let h = random_hw(&rd, &mut rng, 2);
            let k = random_hw(&rd, &mut rng, 2);
            assert_eq!(hw_mul(&rd, &hw_mul(&rd, &g, &h), &k), hw_mul(&rd, &g, &hw_mul(&rd, &h, &k)));
            assert_eq!(HWElement::parse(&rd, &g.display(&rd).to_string()).unwrap(), g);
            assert_eq!(HWElement::from_json(&rd, &g.to_json(&rd)).unwrap(), g);
        }
    }
}
