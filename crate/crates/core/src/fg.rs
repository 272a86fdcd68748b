//! The Hopf algebra of Feynman graphs, its no-cycle quotient, and the
//! second coproduct coming from compatible equivalences.

use crate::coeff::{Coefficient, QParam};
use crate::error::{Error, Result};
use crate::graph::{partial_injections, FeynmanGraph};
use crate::hopf::{Family, Hopf, Tensor2, Tensor3};
use crate::lincomb::{m_1_3_24, LinComb};

pub type FgElement = LinComb<FeynmanGraph>;

/// Feynman graphs, optionally ordered, optionally modulo graphs with a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FgFamily {
    pub ordered: bool,
    pub no_cycle: bool,
}

impl FgFamily {
    pub fn new(ordered: bool) -> Self {
        FgFamily { ordered, no_cycle: false }
    }

    pub fn no_cycle(ordered: bool) -> Self {
        FgFamily { ordered, no_cycle: true }
    }
}

impl Family for FgFamily {
    type Obj = FeynmanGraph;

    fn ordered(&self) -> bool {
        self.ordered
    }

    fn unit(&self) -> FeynmanGraph {
        FeynmanGraph::empty(self.ordered)
    }

    fn size(&self, g: &FeynmanGraph) -> usize {
        g.n()
    }

    fn normalize(&self, g: &FeynmanGraph) -> Option<FeynmanGraph> {
        if self.no_cycle && g.has_cycle() {
            None
        } else {
            Some(g.canonical_form())
        }
    }

    fn gluings(&self, a: &FeynmanGraph, b: &FeynmanGraph) -> Vec<(u32, FeynmanGraph)> {
        partial_injections(a.n(), b.n())
            .iter()
            .map(|s| (s.len() as u32, a.glue_unchecked(b, s)))
            .collect()
    }

    fn splits(&self, g: &FeynmanGraph) -> Vec<(FeynmanGraph, FeynmanGraph)> {
        let full = if g.n() == 0 { 0 } else { u32::MAX >> (32 - g.n()) };
        g.ideal_masks()
            .into_iter()
            .map(|a| (g.restrict_mask(full & !a), g.restrict_mask(a)))
            .collect()
    }
}

pub type FgAlgebra = Hopf<FgFamily>;

/// `T`: the projection killing graphs with a cycle.
pub fn project_no_cycle(a: &FgElement) -> FgElement {
    a.filter(|g| !g.has_cycle())
}

/// `ψ_q(G)`: the `·_q` product of the connected components of `G`.
pub fn psi(family: FgFamily, g: &FeynmanGraph, q: &QParam) -> FgElement {
    let alg = Hopf::new(family, q.clone());
    if q.is_zero() {
        return alg.basis(g);
    }
    let mut acc = alg.one();
    for comp in g.component_masks() {
        acc = alg.product(&acc, &LinComb::basis(g.restrict_mask(comp)));
    }
    acc
}

impl Hopf<FgFamily> {
    /// `ρ_{q1,q2}(G) = Σ_{∼∈CE(G)} ψ_{q1}(G/∼) ⊗ ψ_{q2}(G|∼)`.
    pub fn coaction_basis(&self, g: &FeynmanGraph, q1: &QParam, q2: &QParam) -> Result<Tensor2<FeynmanGraph>> {
        if self.family.ordered && !(q1.is_zero() && q2.is_zero()) {
            return Err(Error::OrderedNeedsZeroQ);
        }
        let mut out = LinComb::zero();
        if self.family.no_cycle && g.has_cycle() {
            return Ok(out);
        }
        for p in g.compatible_equivalences() {
            let quo = g.quotient_eq(&p)?;
            let res = g.restrict_eq(&p)?;
            let l = psi(self.family, &quo, q1);
            let r = psi(self.family, &res, q2);
            for (x, cx) in &l {
                for (y, cy) in &r {
                    out.add_term((x.clone(), y.clone()), cx * cy);
                }
            }
        }
        Ok(out)
    }

    pub fn coaction(&self, a: &FgElement, q1: &QParam, q2: &QParam) -> Result<Tensor2<FeynmanGraph>> {
        let mut out = LinComb::zero();
        for (g, c) in a {
            out.add_scaled(&self.coaction_basis(g, q1, q2)?, c);
        }
        Ok(out)
    }

    /// `δ = ρ_{0,0}`.
    pub fn internal_coproduct(&self, a: &FgElement) -> Result<Tensor2<FeynmanGraph>> {
        self.coaction(a, &QParam::zero(), &QParam::zero())
    }

    /// `δ₁ = ρ_{1,1}`.
    pub fn internal_coproduct_one(&self, a: &FgElement) -> Result<Tensor2<FeynmanGraph>> {
        self.coaction(a, &QParam::one(), &QParam::one())
    }

    /// Counit of `δ`: 1 on graphs without internal edges.
    pub fn internal_counit(&self, a: &FgElement) -> Coefficient {
        let mut c = Coefficient::zero();
        for (g, cg) in a {
            if g.internal_edge_count() == 0 {
                c += cg;
            }
        }
        c
    }

    /// `(Δ⊗Id)∘ρ` and `m_{1,3,24}∘(ρ⊗ρ)∘Δ`, the third leg multiplied with `·_{q2}`.
    pub fn cointeraction_sides(
        &self,
        a: &FgElement,
        q1: &QParam,
        q2: &QParam,
    ) -> Result<(Tensor3<FeynmanGraph>, Tensor3<FeynmanGraph>)> {
        let lhs = self.coproduct_left(&self.coaction(a, q1, q2)?);
        let mut rr = LinComb::zero();
        for ((l, r), c) in &self.coproduct(a) {
            let rl = self.coaction_basis(l, q1, q2)?;
            let rrr = self.coaction_basis(r, q1, q2)?;
            for ((x, y), cx) in &rl {
                for ((z, t), cz) in &rrr {
                    rr.add_term((x.clone(), y.clone(), z.clone(), t.clone()), &(c * cx) * cz);
                }
            }
        }
        let third = Hopf::new(self.family, q2.clone());
        let rhs = m_1_3_24(&rr, |y, t| third.product_basis(y, t));
        Ok((lhs, rhs))
    }

    pub fn cointeraction_holds_on(&self, a: &FgElement, q1: &QParam, q2: &QParam) -> Result<bool> {
        let (l, r) = self.cointeraction_sides(a, q1, q2)?;
        Ok(l == r)
    }

    /// `(δ⊗Id)δ = (Id⊗δ)δ`.
    pub fn internal_coassociative_on(&self, a: &FgElement) -> Result<bool> {
        let d = self.internal_coproduct(a)?;
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in &d {
            for ((u, v), cu) in &self.internal_coproduct(&LinComb::basis(x.clone()))? {
                left.add_term((u.clone(), v.clone(), y.clone()), c * cu);
            }
            for ((u, v), cu) in &self.internal_coproduct(&LinComb::basis(y.clone()))? {
                right.add_term((x.clone(), u.clone(), v.clone()), c * cu);
            }
        }
        Ok(left == right)
    }

    /// `(ε_δ⊗Id)δ = Id = (Id⊗ε_δ)δ`.
    pub fn internal_counit_laws_hold_on(&self, a: &FgElement) -> Result<bool> {
        let d = self.internal_coproduct(a)?;
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in &d {
            let ex = self.internal_counit(&LinComb::basis(x.clone()));
            let ey = self.internal_counit(&LinComb::basis(y.clone()));
            left.add_term(y.clone(), &ex * c);
            right.add_term(x.clone(), &ey * c);
        }
        Ok(left == *a && right == *a)
    }
}

pub fn fg_algebra(ordered: bool, q: QParam) -> FgAlgebra {
    Hopf::new(FgFamily::new(ordered), q)
}

pub fn ncfg_algebra(ordered: bool, q: QParam) -> FgAlgebra {
    Hopf::new(FgFamily::no_cycle(ordered), q)
}
