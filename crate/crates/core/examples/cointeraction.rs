//! The squaring coproduct and the coaction at parameters (q1, q2).
//!
//! Cointeraction with the ordinary coproduct fails already on a single edge;
//! this example prints both sides so the extra term is visible.

use graph_hopf::fg::fg_algebra;
use graph_hopf::{FeynmanGraph, LinComb, QParam};

fn main() -> graph_hopf::Result<()> {
    let e = LinComb::basis(FeynmanGraph::from_edges(2, &[(0, 1)], false)?.canonical_form());
    let alg = fg_algebra(false, QParam::zero());
    println!("delta(E) = {:?}", alg.internal_coproduct(&e)?);

    let coaction = fg_algebra(false, QParam::Formal);
    println!("rho_(q,1)(E) = {:?}", coaction.coaction(&e, &QParam::Formal, &QParam::one())?);

    let (lhs, rhs) = coaction.cointeraction_sides(&e, &QParam::zero(), &QParam::zero())?;
    println!("(Delta x Id) rho      = {lhs:?}");
    println!("m_13,24 (rho x rho) Delta = {rhs:?}");
    println!("difference            = {:?}", lhs.sub(&rhs));
    Ok(())
}
