//! Quasi-posets, their ideals, and the path order of a digraph.

use graph_hopf::qp::{path_order, poset_algebra, qp_algebra, QuasiPoset};
use graph_hopf::{LinComb, QParam, SimpleDigraph};

fn main() -> graph_hopf::Result<()> {
    let chain = QuasiPoset::chain(3, false);
    println!("chain {chain}, ideals {:?}", chain.ideals());

    let qp = qp_algebra(false, QParam::Formal);
    let c2 = LinComb::basis(QuasiPoset::chain(2, false));
    let dot = LinComb::basis(QuasiPoset::discrete(1, false));
    println!("C2 . pt    = {:?}", qp.product(&c2, &dot));
    println!("Delta(C2)  = {:?}", qp.coproduct(&c2));
    println!("S(C2)      = {:?}", poset_algebra(false, QParam::Formal).antipode(&c2));

    // A directed cycle collapses to an equivalence class.
    let cyc = SimpleDigraph::new(3, &[(0, 1), (1, 0), (1, 2)], false)?;
    let p = path_order(&cyc);
    println!("path order of {cyc}: {p} (poset: {})", p.is_poset());
    Ok(())
}
