//! Coproduct, counit and antipode of Feynman graphs.

use graph_hopf::fg::fg_algebra;
use graph_hopf::{FeynmanGraph, LinComb, QParam};

fn main() -> graph_hopf::Result<()> {
    let alg = fg_algebra(false, QParam::Formal);
    // Two vertices joined by a double edge, with legs on both ends.
    let ladder = FeynmanGraph::new(2, &[(0, 1), (0, 1)], vec![1, 0], vec![0, 2], false)?.canonical_form();
    let x = LinComb::basis(ladder.clone());

    println!("graph    {ladder}");
    println!("Delta    {:?}", alg.coproduct(&x));
    println!("counit   {}", alg.counit(&x));
    let s = alg.antipode(&x);
    println!("antipode {s:?}");

    // Antipode and counit laws, checked on this element.
    println!("coassociative: {}", alg.is_coassociative_on(&x));
    println!("antipode law:  {}", alg.antipode_law_holds_on(&x));
    Ok(())
}
