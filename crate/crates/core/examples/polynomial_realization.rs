//! Graphs as polynomials in vertex and edge variables over an alphabet, and
//! the oracle comparison of products.

use graph_hopf::coeff::int;
use graph_hopf::realization::oracle::oracle_check_product;
use graph_hopf::realization::{realize, Alphabet, AlphabetAlgebra};
use graph_hopf::{FeynmanGraph, QParam};

fn main() -> graph_hopf::Result<()> {
    let x = Alphabet::equivalent(2);
    let e = FeynmanGraph::from_edges(2, &[(0, 1)], false)?.canonical_form();
    let m = realize(&e, &x);
    println!("M_E over 2 letters: {} monomials", m.len());
    for (mono, c) in m.iter().take(4) {
        println!("  {c} {mono:?}");
    }

    // Realization turns the graph product into the product of polynomials.
    let alg = AlphabetAlgebra::new(x.clone(), QParam::Formal, false);
    println!("M_E . M_E has {} monomials", alg.mul(&m, &m).len());

    let ok = oracle_check_product(&e, &e, &Alphabet::equivalent(4), &[int(0), int(2)])?;
    println!("M(E . E) = M(E) . M(E) at q = 0 and q = 2: {ok}");
    Ok(())
}
