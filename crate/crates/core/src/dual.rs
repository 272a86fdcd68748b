//! The graded dual of the poset Hopf algebra: the pairing `⟨P,Q⟩ = s_P [P≅Q]`,
//! the coproduct `▲` dual to `·_0`, systems of edges and the product `⋆`
//! dual to `Δ`.

use std::fmt;

use crate::canon::{check_budget, for_each_permutation};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::graph::{vertices_of, VertexMask};
use crate::hopf::Tensor2;
use crate::lincomb::LinComb;
use crate::qp::{QpElement, QuasiPoset};

/// Largest poset handled by the permutation-based counts.
pub const MAX_DUAL_VERTICES: usize = 8;

fn dual_budget(n: usize) -> Result<()> {
    if n > MAX_DUAL_VERTICES {
        return Err(Error::VertexBudgetExceeded { n, max: MAX_DUAL_VERTICES });
    }
    check_budget(n)
}

/// Number of bijections `φ: a -> b` with `i ≤ j ⇔ φ(i) ≤ φ(j)`.
pub fn isomorphism_count(a: &QuasiPoset, b: &QuasiPoset) -> Result<u64> {
    if a.n() != b.n() {
        return Ok(0);
    }
    dual_budget(a.n())?;
    let n = a.n();
    let mut count = 0;
    for_each_permutation(n, |phi| {
        if (0..n).all(|i| (0..n).all(|j| a.leq(i, j) == b.leq(phi[i], phi[j]))) {
            count += 1;
        }
    });
    Ok(count)
}

/// `s_P`. A labeled (ordered) poset only has the identity.
pub fn automorphism_count(p: &QuasiPoset) -> Result<u64> {
    if p.is_ordered() {
        dual_budget(p.n())?;
        return Ok(1);
    }
    isomorphism_count(p, p)
}

/// `⟨a, b⟩`, extended bilinearly from `⟨P,Q⟩ = s_P δ_{P,Q}`.
pub fn pairing(a: &QpElement, b: &QpElement) -> Result<Coefficient> {
    let mut out = Coefficient::zero();
    for (p, cp) in a {
        let pc = p.canonical_form();
        for (r, cr) in b {
            if pc == r.canonical_form() {
                let s = automorphism_count(p)?;
                out += &(&(cp * cr) * &Coefficient::from_int(s as i64));
            }
        }
    }
    Ok(out)
}

/// `⟨s, t⟩` on two-leg tensors, leg by leg.
pub fn pairing2(s: &Tensor2<QuasiPoset>, t: &Tensor2<QuasiPoset>) -> Result<Coefficient> {
    let mut out = Coefficient::zero();
    for ((a, b), cs) in s {
        for ((c, d), ct) in t {
            let l = pairing(&LinComb::basis(a.clone()), &LinComb::basis(c.clone()))?;
            if l.is_zero() {
                continue;
            }
            let r = pairing(&LinComb::basis(b.clone()), &LinComb::basis(d.clone()))?;
            out += &(&(&l * &r) * &(cs * ct));
        }
    }
    Ok(out)
}

/// `▲(P) = Σ_{I ⊆ components} Π_{i∈I} P_i ⊗ Π_{i∉I} P_i`.
pub fn blacktriangle(p: &QuasiPoset) -> Tensor2<QuasiPoset> {
    let comps = p.component_masks();
    let k = comps.len();
    let mut out = LinComb::zero();
    for s in 0u32..(1 << k) {
        let left: VertexMask = (0..k).filter(|i| s & (1 << i) != 0).fold(0, |m, i| m | comps[i]);
        let right: VertexMask = (0..k).filter(|i| s & (1 << i) == 0).fold(0, |m, i| m | comps[i]);
        out.add_term(
            (p.restrict_mask(left).canonical_form(), p.restrict_mask(right).canonical_form()),
            Coefficient::one(),
        );
    }
    out
}

pub fn blacktriangle_element(a: &QpElement) -> Tensor2<QuasiPoset> {
    let mut out = LinComb::zero();
    for (p, c) in a {
        out.add_scaled(&blacktriangle(p), c);
    }
    out
}

/// Counit of `▲`: the coefficient of the empty poset.
pub fn blacktriangle_counit(a: &QpElement) -> Coefficient {
    a.iter().filter(|(p, _)| p.n() == 0).fold(Coefficient::zero(), |acc, (_, c)| acc + c.clone())
}

/// A system of edges from `P` to `Q`: `theta[x]` is a set of vertices of `Q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSystem {
    pub theta: Vec<VertexMask>,
}

impl EdgeSystem {
    pub fn new(theta: Vec<VertexMask>) -> Self {
        EdgeSystem { theta }
    }

    pub fn empty(p_n: usize) -> Self {
        EdgeSystem { theta: vec![0; p_n] }
    }

    /// Checks both conditions: every image is an antichain, and `x <_P y`
    /// never meets `y' ≤_Q x'` with `x' ∈ Θ(x)`, `y' ∈ Θ(y)`.
    pub fn validate(&self, p: &QuasiPoset, q: &QuasiPoset) -> Result<()> {
        if self.theta.len() != p.n() {
            return Err(Error::InvalidEdgeSystem(format!("{} images for {} vertices", self.theta.len(), p.n())));
        }
        let full: VertexMask = if q.n() == 0 { 0 } else { u32::MAX >> (32 - q.n()) };
        for (x, &t) in self.theta.iter().enumerate() {
            if t & !full != 0 {
                return Err(Error::InvalidEdgeSystem(format!("image of {x} leaves the target")));
            }
            if !is_antichain(q, t) {
                return Err(Error::InvalidEdgeSystem(format!("image of {x} is not an antichain")));
            }
        }
        for x in 0..p.n() {
            for y in 0..p.n() {
                if p.lt(x, y) && crosses(q, self.theta[x], self.theta[y]) {
                    return Err(Error::InvalidEdgeSystem(format!("{x} < {y} but an image of {y} lies below one of {x}")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EdgeSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .theta
            .iter()
            .enumerate()
            .map(|(x, &t)| format!("{x}->{:?}", vertices_of(t)))
            .collect();
        write!(f, "Θ[{}]", parts.join(", "))
    }
}

fn is_antichain(q: &QuasiPoset, mask: VertexMask) -> bool {
    let vs = vertices_of(mask);
    vs.iter().all(|&a| vs.iter().all(|&b| a == b || !q.leq(a, b)))
}

/// Some `y' ∈ ty` lies below some `x' ∈ tx`.
fn crosses(q: &QuasiPoset, tx: VertexMask, ty: VertexMask) -> bool {
    vertices_of(ty).iter().any(|&yp| vertices_of(tx).iter().any(|&xp| q.leq(yp, xp)))
}

/// All systems of edges from `p` to `q`, in lexicographic order of images.
pub fn edge_systems(p: &QuasiPoset, q: &QuasiPoset) -> Vec<EdgeSystem> {
    let full: VertexMask = if q.n() == 0 { 0 } else { u32::MAX >> (32 - q.n()) };
    let antichains: Vec<VertexMask> = (0..=full).filter(|&m| is_antichain(q, m)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p.n());
    fn rec(p: &QuasiPoset, q: &QuasiPoset, ac: &[VertexMask], cur: &mut Vec<VertexMask>, out: &mut Vec<EdgeSystem>) {
        let x = cur.len();
        if x == p.n() {
            out.push(EdgeSystem::new(cur.clone()));
            return;
        }
        for &t in ac {
            let ok = (0..x).all(|y| {
                !(p.lt(y, x) && crosses(q, cur[y], t)) && !(p.lt(x, y) && crosses(q, t, cur[y]))
            });
            if ok {
                cur.push(t);
                rec(p, q, ac, cur, out);
                cur.pop();
            }
        }
    }
    rec(p, q, &antichains, &mut cur, &mut out);
    out
}

/// `P ⊔_Θ Q` on `V(P)` followed by `V(Q)`: `x ≤ y` across sides iff
/// `x ≤_P x'`, `y' ∈ Θ(x')`, `y' ≤_Q y` for some `x'`, `y'`.
pub fn glue_theta(p: &QuasiPoset, q: &QuasiPoset, t: &EdgeSystem) -> Result<QuasiPoset> {
    if p.is_ordered() != q.is_ordered() {
        return Err(Error::ModeMismatch);
    }
    t.validate(p, q)?;
    let (np, nq) = (p.n(), q.n());
    let n = np + nq;
    let mut leq = vec![vec![false; n]; n];
    for i in 0..np {
        for j in 0..np {
            leq[i][j] = p.leq(i, j);
        }
    }
    for i in 0..nq {
        for j in 0..nq {
            leq[np + i][np + j] = q.leq(i, j);
        }
    }
    for x in 0..np {
        for xp in (0..np).filter(|&xp| p.leq(x, xp)) {
            for yp in vertices_of(t.theta[xp]) {
                for y in (0..nq).filter(|&y| q.leq(yp, y)) {
                    leq[x][np + y] = true;
                }
            }
        }
    }
    let r = QuasiPoset::new(leq, p.is_ordered())?;
    if !r.is_poset() {
        return Err(Error::NotAPoset);
    }
    Ok(r)
}

/// `P ⋆ Q = Σ_Θ P ⊔_Θ Q`.
pub fn star_basis(p: &QuasiPoset, q: &QuasiPoset) -> Result<QpElement> {
    let mut out = LinComb::zero();
    for t in edge_systems(p, q) {
        out.add_term(glue_theta(p, q, &t)?.canonical_form(), Coefficient::one());
    }
    Ok(out)
}

pub fn star(a: &QpElement, b: &QpElement) -> Result<QpElement> {
    let mut out = LinComb::zero();
    for (p, cp) in a {
        for (q, cq) in b {
            out.add_scaled(&star_basis(p, q)?, &(cp * cq));
        }
    }
    Ok(out)
}

/// `(|C(P1,P2,P)|, |D(P1,P2,P)|)`, both by brute force over isomorphisms.
pub fn count_c_and_d(p1: &QuasiPoset, p2: &QuasiPoset, p: &QuasiPoset) -> Result<(u64, u64)> {
    if p1.n() + p2.n() != p.n() {
        return Ok((0, 0));
    }
    let full: VertexMask = if p.n() == 0 { 0 } else { u32::MAX >> (32 - p.n()) };
    let mut c = 0;
    for ideal in p.ideal_masks() {
        if ideal.count_ones() as usize != p2.n() {
            continue;
        }
        let lower = isomorphism_count(p1, &p.restrict_mask(full & !ideal))?;
        if lower > 0 {
            c += lower * isomorphism_count(p2, &p.restrict_mask(ideal))?;
        }
    }
    let mut d = 0;
    for t in edge_systems(p1, p2) {
        d += isomorphism_count(&glue_theta(p1, p2, &t)?, p)?;
    }
    Ok((c, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot() -> QuasiPoset {
        QuasiPoset::discrete(1, false)
    }

    fn c2() -> QuasiPoset {
        QuasiPoset::chain(2, false)
    }

    fn b(p: QuasiPoset) -> QpElement {
        LinComb::basis(p.canonical_form())
    }

    #[test]
    fn automorphisms() {
        assert_eq!(automorphism_count(&QuasiPoset::discrete(2, false)).unwrap(), 2);
        assert_eq!(automorphism_count(&c2()).unwrap(), 1);
        assert_eq!(automorphism_count(&QuasiPoset::discrete(4, false)).unwrap(), 24);
        assert!(automorphism_count(&QuasiPoset::discrete(9, false)).is_err());
    }

    #[test]
    fn pairing_examples() {
        let dd = QuasiPoset::discrete(2, false);
        assert_eq!(pairing(&b(dd.clone()), &b(dd.clone())).unwrap(), Coefficient::from_int(2));
        assert!(pairing(&b(c2()), &b(dd)).unwrap().is_zero());
    }

    #[test]
    fn blacktriangle_examples() {
        let one = QuasiPoset::empty(false);
        assert_eq!(
            blacktriangle(&c2()),
            LinComb::from_terms([((c2(), one.clone()), 1.into()), ((one.clone(), c2()), 1.into())])
        );
        let dd = QuasiPoset::discrete(2, false);
        assert_eq!(
            blacktriangle(&dd),
            LinComb::from_terms([
                ((dd.clone(), one.clone()), 1.into()),
                ((dot(), dot()), 2.into()),
                ((one, dd), 1.into()),
            ])
        );
    }

    #[test]
    fn edge_system_examples() {
        assert_eq!(edge_systems(&dot(), &dot()).len(), 2);
        assert_eq!(edge_systems(&dot(), &c2()).len(), 3);
        let t = EdgeSystem::new(vec![0b11]);
        assert!(t.validate(&dot(), &c2()).is_err());
        assert_eq!(edge_systems(&QuasiPoset::empty(false), &c2()), vec![EdgeSystem::new(vec![])]);
    }

    #[test]
    fn glue_theta_examples() {
        let g = glue_theta(&dot(), &dot(), &EdgeSystem::new(vec![1])).unwrap();
        assert_eq!(g, c2());
        let g = glue_theta(&c2(), &dot(), &EdgeSystem::empty(2)).unwrap();
        assert_eq!(g.canonical_form(), QuasiPoset::from_relations(3, &[(0, 1)], false).unwrap().canonical_form());
    }

    #[test]
    fn star_examples() {
        let dd = QuasiPoset::discrete(2, false);
        assert_eq!(
            star(&b(dot()), &b(dot())).unwrap(),
            LinComb::from_terms([(dd.canonical_form(), 1.into()), (c2(), 1.into())])
        );
        let e = b(QuasiPoset::empty(false));
        assert_eq!(star(&e, &b(c2())).unwrap(), b(c2()));
        assert_eq!(pairing(&star(&b(dot()), &b(dot())).unwrap(), &b(c2())).unwrap(), Coefficient::one());
    }

    #[test]
    fn c_and_d_examples() {
        assert_eq!(count_c_and_d(&dot(), &dot(), &c2()).unwrap(), (1, 1));
        assert_eq!(count_c_and_d(&dot(), &dot(), &QuasiPoset::discrete(2, false)).unwrap(), (2, 2));
        assert_eq!(count_c_and_d(&c2(), &dot(), &c2()).unwrap(), (0, 0));
    }
}
