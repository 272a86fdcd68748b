//! Quasi-posets and posets, the path order of a digraph, and their Hopf
//! algebras.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::canon;
use crate::coeff::QParam;
use crate::error::{Error, Result};
use crate::graph::{partial_injections, vertices_of, PartialInjection, SimpleDigraph, VertexMask};
use crate::hopf::{Family, Hopf, Tensor2};
use crate::lincomb::LinComb;
use crate::sg::SgElement;

/// A reflexive transitive relation on `0..n`, stored as a full matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasiPoset {
    ordered: bool,
    n: usize,
    leq: Vec<bool>,
}

pub type QpElement = LinComb<QuasiPoset>;

impl QuasiPoset {
    /// Validates a full relation matrix.
    pub fn new(leq: Vec<Vec<bool>>, ordered: bool) -> Result<Self> {
        let n = leq.len();
        if leq.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidRelation("relation matrix is not square".into()));
        }
        let flat: Vec<bool> = leq.into_iter().flatten().collect();
        let p = QuasiPoset { ordered, n, leq: flat };
        if (0..n).any(|i| !p.leq(i, i)) {
            return Err(Error::InvalidRelation("not reflexive".into()));
        }
        if p.clone().closure() != p {
            return Err(Error::InvalidRelation("not transitive".into()));
        }
        Ok(p)
    }

    /// Reflexive-transitive closure of a list of relations.
    pub fn from_relations(n: usize, rel: &[(usize, usize)], ordered: bool) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for &(i, j) in rel {
            if i >= n || j >= n {
                return Err(Error::InvalidRelation(format!("pair ({i},{j}) out of range")));
            }
            leq[i * n + j] = true;
        }
        Ok(QuasiPoset { ordered, n, leq }.closure())
    }

    pub fn empty(ordered: bool) -> Self {
        QuasiPoset { ordered, n: 0, leq: vec![] }
    }

    pub fn discrete(n: usize, ordered: bool) -> Self {
        let leq = (0..n * n).map(|k| k / n == k % n).collect();
        QuasiPoset { ordered, n, leq }
    }

    /// `0 < 1 < … < n-1`.
    pub fn chain(n: usize, ordered: bool) -> Self {
        let leq = (0..n * n).map(|k| k / n <= k % n).collect();
        QuasiPoset { ordered, n, leq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn with_ordered(&self, ordered: bool) -> Self {
        QuasiPoset { ordered, ..self.clone() }
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    /// `i < j`: `i ≤ j` and not `j ≤ i`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && !self.leq(j, i)
    }

    pub fn is_poset(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || !(self.leq(i, j) && self.leq(j, i))))
    }

    fn closure(mut self) -> Self {
        let n = self.n;
        for i in 0..n {
            self.leq[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if self.leq[i * n + k] {
                    for j in 0..n {
                        if self.leq[k * n + j] {
                            self.leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        self
    }

    pub fn permuted(&self, perm: &[usize]) -> QuasiPoset {
        let n = self.n;
        let leq = (0..n * n).map(|k| self.leq(perm[k / n], perm[k % n])).collect();
        QuasiPoset { ordered: self.ordered, n, leq }
    }

    pub fn canonical_form(&self) -> QuasiPoset {
        if self.ordered || self.n <= 1 {
            return self.clone();
        }
        let n = self.n;
        let inv: Vec<(usize, usize, usize)> = (0..n)
            .map(|i| {
                let down = (0..n).filter(|&j| self.leq(j, i)).count();
                let up = (0..n).filter(|&j| self.leq(i, j)).count();
                let eq = (0..n).filter(|&j| self.leq(i, j) && self.leq(j, i)).count();
                (down, up, eq)
            })
            .collect();
        canon::canonical_min(&inv, |p| self.permuted(p))
    }

    pub fn restrict_mask(&self, mask: VertexMask) -> QuasiPoset {
        let keep = vertices_of(mask);
        let m = keep.len();
        let leq = (0..m * m).map(|k| self.leq(keep[k / m], keep[k % m])).collect();
        QuasiPoset { ordered: self.ordered, n: m, leq }
    }

    /// Up-closed subsets, as masks in increasing order.
    pub fn ideal_masks(&self) -> Vec<VertexMask> {
        let up: Vec<VertexMask> = (0..self.n)
            .map(|i| (0..self.n).filter(|&j| self.leq(i, j)).fold(0, |m, j| m | (1 << j)))
            .collect();
        let full: VertexMask = if self.n == 0 { 0 } else { u32::MAX >> (32 - self.n) };
        (0..=full)
            .filter(|&a| (0..self.n).all(|i| a & (1 << i) == 0 || up[i] & !a == 0))
            .collect()
    }

    pub fn ideals(&self) -> Vec<Vec<usize>> {
        self.ideal_masks().into_iter().map(vertices_of).collect()
    }

    /// Identifies each `a` with `sigma(a)` and closes the union relation.
    pub fn glue(&self, r: &QuasiPoset, sigma: &PartialInjection) -> Result<QuasiPoset> {
        if self.ordered != r.ordered {
            return Err(Error::ModeMismatch);
        }
        sigma.validate(self.n, r.n)?;
        Ok(self.glue_unchecked(r, sigma))
    }

    pub(crate) fn glue_unchecked(&self, r: &QuasiPoset, sigma: &PartialInjection) -> QuasiPoset {
        let rmap = sigma.target_map(self.n, r.n);
        let n = self.n + r.n - sigma.len();
        let mut leq = vec![false; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                leq[i * n + j] = self.leq(i, j);
            }
        }
        for i in 0..r.n {
            for j in 0..r.n {
                if r.leq(i, j) {
                    leq[rmap[i] * n + rmap[j]] = true;
                }
            }
        }
        QuasiPoset { ordered: self.ordered, n, leq }.closure()
    }

    /// Covering pairs `i < j` with nothing strictly between (posets).
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Strict relations `i ≤ j`, `i ≠ j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n * n).map(|k| (k / n, k % n)).filter(|&(i, j)| i != j && self.leq(i, j)).collect()
    }

    /// Weakly connected components of the comparability graph.
    pub fn component_masks(&self) -> Vec<VertexMask> {
        let mut seen: VertexMask = 0;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & (1 << s) != 0 {
                continue;
            }
            let mut comp: VertexMask = 1 << s;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in 0..self.n {
                    if comp & (1 << w) == 0 && (self.leq(u, w) || self.leq(w, u)) {
                        comp |= 1 << w;
                        stack.push(w);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let n = self.n;
        let leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| self.leq(i, j)).collect()).collect();
        serde_json::to_value(QpJson { n, leq, ordered: self.ordered }).expect("quasi-poset json")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let p: QpJson = serde_json::from_value(v.clone())?;
        if p.leq.len() != p.n {
            return Err(Error::InvalidRelation("matrix size differs from n".into()));
        }
        QuasiPoset::new(p.leq, p.ordered)
    }

    pub fn notation(&self) -> String {
        let rel: Vec<String> = self.relations().iter().map(|(i, j)| format!("{i}≤{j}")).collect();
        format!("QP[{}; {}]", self.n, rel.join(","))
    }
}

impl fmt::Debug for QuasiPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

impl fmt::Display for QuasiPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

#[derive(Serialize, Deserialize)]
struct QpJson {
    n: usize,
    leq: Vec<Vec<bool>>,
    #[serde(default)]
    ordered: bool,
}

/// `i ≤ j` iff there is a path from `i` to `j`.
pub fn path_order(g: &SimpleDigraph) -> QuasiPoset {
    let n = g.n();
    let mut leq = vec![false; n * n];
    for (u, v) in g.edges() {
        leq[u * n + v] = true;
    }
    QuasiPoset { ordered: g.is_ordered(), n, leq }.closure()
}

/// Quasi-posets, or posets only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QpFamily {
    pub ordered: bool,
    pub posets_only: bool,
}

impl Family for QpFamily {
    type Obj = QuasiPoset;

    fn ordered(&self) -> bool {
        self.ordered
    }

    fn unit(&self) -> QuasiPoset {
        QuasiPoset::empty(self.ordered)
    }

    fn size(&self, p: &QuasiPoset) -> usize {
        p.n
    }

    fn normalize(&self, p: &QuasiPoset) -> Option<QuasiPoset> {
        if self.posets_only && !p.is_poset() {
            None
        } else {
            Some(p.canonical_form())
        }
    }

    fn gluings(&self, a: &QuasiPoset, b: &QuasiPoset) -> Vec<(u32, QuasiPoset)> {
        partial_injections(a.n, b.n)
            .iter()
            .map(|s| (s.len() as u32, a.glue_unchecked(b, s)))
            .collect()
    }

    fn splits(&self, p: &QuasiPoset) -> Vec<(QuasiPoset, QuasiPoset)> {
        let full: VertexMask = if p.n == 0 { 0 } else { u32::MAX >> (32 - p.n) };
        p.ideal_masks()
            .into_iter()
            .map(|a| (p.restrict_mask(full & !a), p.restrict_mask(a)))
            .collect()
    }
}

pub type QpAlgebra = Hopf<QpFamily>;

pub fn qp_algebra(ordered: bool, q: QParam) -> QpAlgebra {
    Hopf::new(QpFamily { ordered, posets_only: false }, q)
}

pub fn poset_algebra(ordered: bool, q: QParam) -> QpAlgebra {
    Hopf::new(QpFamily { ordered, posets_only: true }, q)
}

/// `P`: basis-wise path order.
pub fn morphism_p(a: &SgElement) -> QpElement {
    a.map_keys(|g| path_order(g).canonical_form())
}

/// The projection onto posets.
pub fn project_posets(a: &QpElement) -> QpElement {
    a.filter(|p| p.is_poset())
}

/// `P ⊗ (n disjoint points)`.
pub fn degenerate_delta(p: &QuasiPoset) -> Result<Tensor2<QuasiPoset>> {
    if !p.is_poset() {
        return Err(Error::NotAPoset);
    }
    Ok(LinComb::basis((p.canonical_form(), QuasiPoset::discrete(p.n, p.ordered))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coefficient;

    fn dot() -> QuasiPoset {
        QuasiPoset::discrete(1, false)
    }

    #[test]
    fn path_order_examples() {
        let path = SimpleDigraph::new(3, &[(0, 1), (1, 2)], false).unwrap();
        assert_eq!(path_order(&path), QuasiPoset::chain(3, false));
        let cyc = path_order(&SimpleDigraph::new(2, &[(0, 1), (1, 0)], false).unwrap());
        assert!(cyc.leq(0, 1) && cyc.leq(1, 0) && !cyc.is_poset());
        let free = SimpleDigraph::new(3, &[], false).unwrap();
        assert_eq!(path_order(&free), QuasiPoset::discrete(3, false));
    }

    #[test]
    fn validation() {
        assert!(QuasiPoset::new(vec![vec![true, false], vec![false, false]], false).is_err());
        let not_transitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(QuasiPoset::new(not_transitive, false), Err(Error::InvalidRelation(_))));
    }

    #[test]
    fn glue_examples() {
        let c2 = QuasiPoset::chain(2, false);
        let d = c2.glue(&c2, &PartialInjection::empty()).unwrap();
        assert_eq!(d.relations(), vec![(0, 1), (2, 3)]);
        let glued = c2.glue(&c2, &PartialInjection::new(vec![(1, 0)])).unwrap();
        assert_eq!(glued, QuasiPoset::chain(3, false));
        assert_eq!(dot().glue(&dot(), &PartialInjection::new(vec![(0, 0)])).unwrap(), dot());
        assert_eq!(
            c2.glue(&c2, &PartialInjection::new(vec![(0, 0), (1, 0)])),
            Err(Error::NotInjective)
        );
    }

    #[test]
    fn ideal_examples() {
        for n in 0..5 {
            assert_eq!(QuasiPoset::chain(n, false).ideals().len(), n + 1);
            assert_eq!(QuasiPoset::discrete(n, false).ideals().len(), 1 << n);
        }
        let mutual = QuasiPoset::from_relations(2, &[(0, 1), (1, 0)], false).unwrap();
        assert_eq!(mutual.ideals(), vec![vec![], vec![0, 1]]);
    }

    #[test]
    fn product_and_coproduct() {
        let alg = qp_algebra(false, QParam::Formal);
        let d = LinComb::basis(dot());
        let dd = QuasiPoset::discrete(2, false);
        let expected = LinComb::from_terms([(dd, Coefficient::one()), (dot(), Coefficient::q())]);
        assert_eq!(alg.product(&d, &d), expected);
        assert_eq!(poset_algebra(false, QParam::Formal).product(&d, &d), expected);

        let c2 = QuasiPoset::chain(2, false);
        let e = QuasiPoset::empty(false);
        let delta = alg.coproduct(&LinComb::basis(c2.clone()));
        let expected = LinComb::from_terms([
            ((c2.clone(), e.clone()), Coefficient::one()),
            ((dot(), dot()), Coefficient::one()),
            ((e.clone(), c2), Coefficient::one()),
        ]);
        assert_eq!(delta, expected);
        assert_eq!(alg.coproduct(&alg.one()), LinComb::basis((e.clone(), e)));
    }

    #[test]
    fn poset_product_filters_quasi_poset_product() {
        let c2 = LinComb::basis(QuasiPoset::chain(2, false));
        let qp = qp_algebra(false, QParam::Formal).product(&c2, &c2);
        let p = poset_algebra(false, QParam::Formal).product(&c2, &c2);
        assert_eq!(p, project_posets(&qp));
        assert!(p.keys().all(|x| x.is_poset()));
        assert!(qp.keys().any(|x| !x.is_poset()));
    }

    #[test]
    fn morphism_p_examples() {
        let tri = SimpleDigraph::new(3, &[(0, 1), (1, 2), (0, 2)], false).unwrap();
        let path = SimpleDigraph::new(3, &[(0, 1), (1, 2)], false).unwrap();
        assert_eq!(path_order(&tri), path_order(&path));
        assert_eq!(
            morphism_p(&LinComb::basis(path)),
            LinComb::basis(QuasiPoset::chain(3, false).canonical_form())
        );
    }

    #[test]
    fn degenerate_delta_examples() {
        let c2 = QuasiPoset::chain(2, false);
        assert_eq!(
            degenerate_delta(&c2).unwrap(),
            LinComb::basis((c2.canonical_form(), QuasiPoset::discrete(2, false)))
        );
        let mutual = QuasiPoset::from_relations(2, &[(0, 1), (1, 0)], false).unwrap();
        assert_eq!(degenerate_delta(&mutual), Err(Error::NotAPoset));
    }

    #[test]
    fn json_roundtrip() {
        let c2 = QuasiPoset::chain(2, true);
        assert_eq!(c2.to_json().to_string(), r#"{"leq":[[true,true],[false,true]],"n":2,"ordered":true}"#);
        assert_eq!(QuasiPoset::from_json(&c2.to_json()).unwrap(), c2);
        assert_eq!(c2.notation(), "QP[2; 0≤1]");
    }
}
