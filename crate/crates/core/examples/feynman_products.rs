//! The q-deformed product of Feynman graphs, with and without directed cycles.
//!
//! Run with `cargo run --example feynman_products`.

use graph_hopf::fg::{fg_algebra, ncfg_algebra};
use graph_hopf::{FeynmanGraph, LinComb, QParam};

fn main() -> graph_hopf::Result<()> {
    let edge = FeynmanGraph::from_edges(2, &[(0, 1)], false)?.canonical_form();
    let e = LinComb::basis(edge);

    let fg = fg_algebra(false, QParam::Formal);
    println!("E . E              = {:?}", fg.product(&e, &e));
    println!("E . E  (no cycles) = {:?}", ncfg_algebra(false, QParam::Formal).product(&e, &e));

    // Specializing q: at q = 0 only the disjoint union survives.
    println!("E . E  at q = 0    = {:?}", fg_algebra(false, QParam::zero()).product(&e, &e));

    // External legs bound the gluing: a vertex with one outgoing leg and a
    // vertex with one incoming leg glue along that pair.
    let out = LinComb::basis(FeynmanGraph::vertex(0, 1, false));
    let inc = LinComb::basis(FeynmanGraph::vertex(1, 0, false));
    println!("(.->) . (->.)      = {:?}", fg.product(&out, &inc));
    Ok(())
}
