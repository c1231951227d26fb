//! Tame symbols on `F_p((t1))((t2))` and double coset indices in `SL_2`.

use dihecke::two_local::{
    coset_invariant, pairing_via_valuation, residue_to_string, sample_subgroup, tame_symbol, Matrix2D, Scalar2D,
    Subgroup,
};

fn main() -> dihecke::Result<()> {
    let p = 5;
    for (f, g) in [("t1", "t2"), ("t2", "t1"), ("1 + t1*t2", "t2^2"), ("t1^2*t2", "3*t1^-1*t2^3")] {
        let (x, y) = (Scalar2D::parse(f, p)?, Scalar2D::parse(g, p)?);
        let s = tame_symbol(&x, &y)?;
        println!("{{{f}, {g}}} = {}   pairing {}", residue_to_string(&s), pairing_via_valuation(&x, &y)?);
    }

    let m = Matrix2D::parse("[[t1*t2, 1 + t2], [0, t1^-1*t2^-1]]", p)?;
    for i in Subgroup::ALL {
        for j in Subgroup::ALL {
            let red = coset_invariant(&m, i, j)?;
            // the index does not move under the subgroups
            let moved = sample_subgroup(i, p, 7, 3).mul(&m).mul(&sample_subgroup(j, p, 8, 3));
            assert_eq!(coset_invariant(&moved, i, j)?.index, red.index);
            println!("{i:?} \\ g / {j:?}: {}", serde_json::to_string(&red.index).unwrap());
        }
    }
    Ok(())
}
