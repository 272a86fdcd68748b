//! Simple digraphs as a quotient of Feynman graphs.

use crate::coeff::{Coefficient, QParam};
use crate::error::{Error, Result};
use crate::fg::FgElement;
use crate::graph::{partial_injections, SimpleDigraph};
use crate::hopf::{Family, Hopf, Tensor2};
use crate::lincomb::LinComb;

pub type SgElement = LinComb<SimpleDigraph>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SgFamily {
    pub ordered: bool,
    pub no_cycle: bool,
}

impl Family for SgFamily {
    type Obj = SimpleDigraph;

    fn ordered(&self) -> bool {
        self.ordered
    }

    fn unit(&self) -> SimpleDigraph {
        SimpleDigraph::empty(self.ordered)
    }

    fn size(&self, g: &SimpleDigraph) -> usize {
        g.n()
    }

    fn normalize(&self, g: &SimpleDigraph) -> Option<SimpleDigraph> {
        if self.no_cycle && g.has_cycle() {
            None
        } else {
            Some(g.canonical_form())
        }
    }

    fn gluings(&self, a: &SimpleDigraph, b: &SimpleDigraph) -> Vec<(u32, SimpleDigraph)> {
        let (fa, fb) = (a.to_feynman(), b.to_feynman());
        partial_injections(a.n(), b.n())
            .iter()
            .map(|s| (s.len() as u32, fa.glue_unchecked(&fb, s).simplify()))
            .collect()
    }

    fn splits(&self, g: &SimpleDigraph) -> Vec<(SimpleDigraph, SimpleDigraph)> {
        let f = g.to_feynman();
        let full = if g.n() == 0 { 0 } else { u32::MAX >> (32 - g.n()) };
        f.ideal_masks()
            .into_iter()
            .map(|a| (f.restrict_mask(full & !a).simplify(), f.restrict_mask(a).simplify()))
            .collect()
    }
}

pub type SgAlgebra = Hopf<SgFamily>;

pub fn sg_algebra(ordered: bool, q: QParam) -> SgAlgebra {
    Hopf::new(SgFamily { ordered, no_cycle: false }, q)
}

pub fn ncsg_algebra(ordered: bool, q: QParam) -> SgAlgebra {
    Hopf::new(SgFamily { ordered, no_cycle: true }, q)
}

impl Hopf<SgFamily> {
    /// `δ(G) = Σ_{∼∈CE(G)} S(G/∼) ⊗ S(G|∼)`, at `q = 0`.
    pub fn internal_coproduct(&self, a: &SgElement) -> Result<Tensor2<SimpleDigraph>> {
        if !self.q.is_zero() {
            return Err(Error::Unsupported("the simple-graph internal coproduct is defined at q = 0".into()));
        }
        let mut out = LinComb::zero();
        for (g, c) in a {
            if self.family.no_cycle && g.has_cycle() {
                continue;
            }
            let f = g.to_feynman();
            for p in f.compatible_equivalences() {
                let l = f.quotient_eq(&p)?.simplify().canonical_form();
                let r = f.restrict_eq(&p)?.simplify().canonical_form();
                out.add_term((l, r), c.clone());
            }
        }
        Ok(out)
    }

    pub fn internal_counit(&self, a: &SgElement) -> Coefficient {
        let mut c = Coefficient::zero();
        for (g, cg) in a {
            if g.edge_count() == 0 {
                c += cg;
            }
        }
        c
    }
}

/// `S`: basis-wise simplification.
pub fn morphism_s(a: &FgElement) -> SgElement {
    a.map_keys(|g| g.simplify().canonical_form())
}

/// `T` on simple graphs.
pub fn project_no_cycle(a: &SgElement) -> SgElement {
    a.filter(|g| !g.has_cycle())
}
