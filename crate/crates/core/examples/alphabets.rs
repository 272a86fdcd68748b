//! Alphabet-level coproducts: doubling over X + Y and squaring over X x Y.

use graph_hopf::coeff::int;
use graph_hopf::realization::oracle::Triple;
use graph_hopf::realization::{doubling, realize, Alphabet, Squaring};
use graph_hopf::FeynmanGraph;

fn main() -> graph_hopf::Result<()> {
    let x = Alphabet::new(&[0, 1]);
    let y = Alphabet::equivalent(2);
    let e = FeynmanGraph::from_edges(2, &[(0, 1)], false)?.canonical_form();

    let m = realize(&e, &x.union(&y));
    let d = doubling(&m, x.len())?;
    println!("doubling of M_E over X+Y: {} terms", d.len());

    let sq = Squaring { x: x.clone(), y: y.clone(), q1: int(0), q2: int(0), word: false };
    let t = sq.apply(&realize(&e, &x.product(&y)), &int(0))?;
    println!("squaring of M_E over XY at q = 0: {} terms", t.len());
    for ((l, r), c) in t.iter().take(3) {
        println!("  {c} {l:?} (x) {r:?}");
    }

    // Coassociativity of squaring, on the realization over X x Y x Z.
    let triple = Triple { x: x.clone(), y: y.clone(), z: Alphabet::equivalent(1), word: false };
    let a = realize(&e, &x.product(&y).product(&triple.z));
    println!("squaring coassociative: {}", triple.squaring_coassociative_on(&a, [&int(0), &int(0), &int(0)])?);
    Ok(())
}
