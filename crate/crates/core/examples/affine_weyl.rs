//! Lengths, reduced words and the cones `Q(w)` in the affine Weyl group of A2.

use dihecke::root_data::{ConeConvention, RootData};

fn main() -> dihecke::Result<()> {
    let rd = RootData::preset("A2")?;
    let x = rd.parse_affine("s0 s1 s2 s1")?;
    println!("s0 s1 s2 s1 has length {} and reduced word {:?}", rd.length(&x), rd.reduced_word(&x));
    println!("all reduced words: {:?}", rd.all_reduced_words(&x));

    let t = rd.parse_affine("t[1,1]")?;
    println!("translation by the highest coroot: length {}, word {:?}", rd.length(&t), rd.reduced_word(&t));

    for (w, len) in rd.bfs_lengths(2) {
        let cone = rd.cone_q(&w, ConeConvention::Level)?;
        println!("l = {len}  {:<12} Q(w) generators {:?}", format!("{:?}", rd.reduced_word(&w)), cone.generators());
    }
    Ok(())
}
