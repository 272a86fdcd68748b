//! The star product on posets, the pairing, and the dual coproduct.

use graph_hopf::dual::{automorphism_count, blacktriangle, count_c_and_d, pairing, star_basis};
use graph_hopf::qp::{poset_algebra, QuasiPoset};
use graph_hopf::{LinComb, QParam};

fn main() -> graph_hopf::Result<()> {
    let pt = QuasiPoset::discrete(1, false);
    let c2 = QuasiPoset::chain(2, false);
    println!("pt * pt  = {:?}", star_basis(&pt, &pt)?);
    println!("pt * C2  = {:?}", star_basis(&pt, &c2)?);
    println!("blacktriangle(C2) = {:?}", blacktriangle(&c2));

    // The pairing is diagonal, weighted by automorphisms.
    let v = QuasiPoset::from_relations(3, &[(0, 1), (0, 2)], false)?.canonical_form();
    let x = LinComb::basis(v.clone());
    println!("<V, V> = {}, |Aut V| = {}", pairing(&x, &x)?, automorphism_count(&v)?);

    // The two ways of building a poset from two pieces are equinumerous.
    let (c, d) = count_c_and_d(&pt, &c2, &QuasiPoset::chain(3, false))?;
    println!("|C| = {c}, |D| = {d}");
    println!("Delta(C3) = {:?}", poset_algebra(false, QParam::Formal).coproduct(&LinComb::basis(QuasiPoset::chain(3, false))));
    Ok(())
}
