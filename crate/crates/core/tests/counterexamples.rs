//! Identities that fail for the structures as defined, each pinned to its
//! smallest witness so that a change in behavior is noticed.

use graph_hopf::coeff::int;
use graph_hopf::fg::fg_algebra;
use graph_hopf::qp::{degenerate_delta, QuasiPoset};
use graph_hopf::sg::sg_algebra;
use graph_hopf::{Coefficient, FeynmanGraph, LinComb, QParam, SimpleDigraph};

fn fg(n: usize, edges: &[(usize, usize)]) -> FeynmanGraph {
    FeynmanGraph::from_edges(n, edges, false).unwrap().canonical_form()
}

fn dot() -> FeynmanGraph {
    fg(1, &[])
}

#[test]
fn cointeraction_fails_on_a_single_edge() {
    let e = fg(2, &[(0, 1)]);
    let alg = fg_algebra(false, QParam::Formal);
    let expected = LinComb::term((dot(), dot(), e.clone()), Coefficient::from_int(2));
    for (q1, q2) in [(QParam::zero(), QParam::zero()), (QParam::Formal, QParam::one())] {
        let (lhs, rhs) = alg.cointeraction_sides(&LinComb::basis(e.clone()), &q1, &q2).unwrap();
        assert_eq!(lhs.sub(&rhs), expected);
    }
    // Vertices alone satisfy it.
    assert!(alg.cointeraction_holds_on(&LinComb::basis(dot()), &QParam::zero(), &QParam::zero()).unwrap());
}

#[test]
fn squaring_coproduct_is_not_coassociative_on_the_transitive_triangle() {
    let alg = fg_algebra(false, QParam::zero());
    let triangle = fg(3, &[(0, 1), (1, 2), (0, 2)]);
    assert!(!alg.internal_coassociative_on(&LinComb::basis(triangle)).unwrap());
    for g in [fg(2, &[(0, 1)]), fg(3, &[(0, 1), (1, 2)]), fg(3, &[(0, 1), (0, 2)])] {
        assert!(alg.internal_coassociative_on(&LinComb::basis(g)).unwrap());
    }
}

#[test]
fn squaring_counit_fails_on_a_directed_two_cycle() {
    let alg = fg_algebra(false, QParam::zero());
    let cycle = fg(2, &[(0, 1), (1, 0)]);
    let d = alg.internal_coproduct(&LinComb::basis(cycle.clone())).unwrap();
    assert_eq!(d, LinComb::basis((fg(2, &[]), cycle.clone())));
    assert!(!alg.internal_counit_laws_hold_on(&LinComb::basis(cycle)).unwrap());
    assert!(alg.internal_counit_laws_hold_on(&LinComb::basis(fg(2, &[(0, 1)]))).unwrap());
}

#[test]
fn degenerate_delta_has_only_a_right_counit() {
    let chain = QuasiPoset::chain(2, false);
    let d = degenerate_delta(&chain).unwrap();
    let discrete = QuasiPoset::discrete(2, false);
    assert_eq!(d, LinComb::basis((chain.canonical_form(), discrete.clone())));
    // Applying the counit on the left leaves the discrete poset, not the chain.
    let (_, right) = d.keys().next().unwrap();
    assert_ne!(right, &chain.canonical_form());
    assert!(degenerate_delta(&QuasiPoset::from_relations(2, &[(0, 1), (1, 0)], false).unwrap()).is_err());
}

#[test]
fn inclusion_of_simple_graphs_is_not_multiplicative() {
    let se = SimpleDigraph::new(2, &[(0, 1)], false).unwrap().canonical_form();
    let e = se.to_feynman().canonical_form();
    let sp = sg_algebra(false, QParam::Formal).product(&LinComb::basis(se.clone()), &LinComb::basis(se));
    let fp = fg_algebra(false, QParam::Formal).product(&LinComb::basis(e.clone()), &LinComb::basis(e.clone()));
    let included = sp.map_keys(|g| g.to_feynman().canonical_form());
    assert_ne!(included, fp);
    // The difference is the q^2 term: one edge versus a double edge.
    let q2 = Coefficient::q_pow(2);
    assert_eq!(included.sub(&fp), LinComb::from_terms([(e, q2.clone()), (fg(2, &[(0, 1), (0, 1)]), Coefficient::monomial(2, int(-1)))]));
}
