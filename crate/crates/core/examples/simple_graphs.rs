//! Simple digraphs as a quotient of Feynman graphs.

use graph_hopf::fg::fg_algebra;
use graph_hopf::sg::{morphism_s, sg_algebra};
use graph_hopf::{FeynmanGraph, LinComb, QParam, SimpleDigraph};

fn main() -> graph_hopf::Result<()> {
    let sg = sg_algebra(false, QParam::Formal);
    let path = LinComb::basis(SimpleDigraph::new(3, &[(0, 1), (1, 2)], false)?.canonical_form());
    let e = LinComb::basis(SimpleDigraph::new(2, &[(0, 1)], false)?.canonical_form());
    println!("P3 . E     = {:?}", sg.product(&path, &e));
    println!("Delta(P3)  = {:?}", sg.coproduct(&path));
    println!("delta(P3)  = {:?}", sg_algebra(false, QParam::zero()).internal_coproduct(&path)?);

    // Simplification forgets legs, loops and multiplicities, and is multiplicative.
    let fg = fg_algebra(false, QParam::Formal);
    let g = LinComb::basis(FeynmanGraph::new(2, &[(0, 1), (0, 1), (1, 1)], vec![1, 0], vec![0, 1], false)?.canonical_form());
    let lhs = morphism_s(&fg.product(&g, &g));
    let rhs = sg.product(&morphism_s(&g), &morphism_s(&g));
    println!("S(g . g) == S(g) . S(g): {}", lhs == rhs);
    Ok(())
}
