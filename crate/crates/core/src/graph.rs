//! Feynman graphs, simple digraphs and the combinatorial constructions the
//! Hopf layers are built from: restriction, ideals, gluing, compatible
//! equivalences, simplification.
//!
//! A Feynman graph is encoded by its internal edge multiplicities and, per
//! vertex, the number of incoming and outgoing external half-edges. This is
//! equivalent to the half-edge model: every internal edge is an out half-edge
//! paired with an in half-edge, and external half-edges are the unpaired ones.
//! Vertices are `0..n`; in ordered mode the vertex order is the index order.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::canon;
use crate::error::{Error, Result};

/// Vertex subsets are bitmasks; graphs are small.
pub type VertexMask = u32;

pub const MAX_GRAPH_VERTICES: usize = 32;

pub fn mask_of(vertices: &[usize]) -> VertexMask {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

pub fn vertices_of(mask: VertexMask) -> Vec<usize> {
    (0..32).filter(|v| mask & (1 << v) != 0).collect()
}

fn full_mask(n: usize) -> VertexMask {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeynmanGraph {
    ordered: bool,
    n: usize,
    adj: Vec<u32>,
    ext_in: Vec<u32>,
    ext_out: Vec<u32>,
}

impl FeynmanGraph {
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        ext_in: Vec<u32>,
        ext_out: Vec<u32>,
        ordered: bool,
    ) -> Result<Self> {
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::InvalidGraph(format!("{n} vertices, at most {MAX_GRAPH_VERTICES}")));
        }
        if ext_in.len() != n || ext_out.len() != n {
            return Err(Error::InvalidGraph("external counts must have one entry per vertex".into()));
        }
        let mut adj = vec![0u32; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            adj[u * n + v] += 1;
        }
        Ok(FeynmanGraph { ordered, n, adj, ext_in, ext_out })
    }

    /// Graph with internal edges only and no external half-edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], ordered: bool) -> Result<Self> {
        Self::new(n, edges, vec![0; n], vec![0; n], ordered)
    }

    /// The empty graph, unit of every product.
    pub fn empty(ordered: bool) -> Self {
        FeynmanGraph { ordered, n: 0, adj: vec![], ext_in: vec![], ext_out: vec![] }
    }

    /// A single vertex with the given external half-edges.
    pub fn vertex(ext_in: u32, ext_out: u32, ordered: bool) -> Self {
        FeynmanGraph { ordered, n: 1, adj: vec![0], ext_in: vec![ext_in], ext_out: vec![ext_out] }
    }

    pub(crate) fn from_parts(n: usize, adj: Vec<u32>, ext_in: Vec<u32>, ext_out: Vec<u32>, ordered: bool) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        FeynmanGraph { ordered, n, adj, ext_in, ext_out }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn with_ordered(&self, ordered: bool) -> Self {
        FeynmanGraph { ordered, ..self.clone() }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    pub fn ext_in(&self, v: usize) -> u32 {
        self.ext_in[v]
    }

    pub fn ext_out(&self, v: usize) -> u32 {
        self.ext_out[v]
    }

    pub fn ext_in_counts(&self) -> &[u32] {
        &self.ext_in
    }

    pub fn ext_out_counts(&self) -> &[u32] {
        &self.ext_out
    }

    /// Internal edges with multiplicity, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                for _ in 0..self.multiplicity(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn internal_edge_count(&self) -> u32 {
        self.adj.iter().sum()
    }

    pub fn external_count(&self) -> u32 {
        self.ext_in.iter().sum::<u32>() + self.ext_out.iter().sum::<u32>()
    }

    pub fn loop_count(&self) -> u32 {
        (0..self.n).map(|v| self.multiplicity(v, v)).sum()
    }

    /// Relabels vertices: vertex `i` of the result is vertex `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> FeynmanGraph {
        let n = self.n;
        let mut adj = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[i * n + j] = self.adj[perm[i] * n + perm[j]];
            }
        }
        FeynmanGraph {
            ordered: self.ordered,
            n,
            adj,
            ext_in: perm.iter().map(|&p| self.ext_in[p]).collect(),
            ext_out: perm.iter().map(|&p| self.ext_out[p]).collect(),
        }
    }

    fn vertex_invariants(&self) -> Vec<(u32, u32, u32, u32, u32, Vec<(u32, u32)>, Vec<(u32, u32)>)> {
        let n = self.n;
        let base: Vec<(u32, u32, u32, u32, u32)> = (0..n)
            .map(|v| {
                let out: u32 = (0..n).filter(|&w| w != v).map(|w| self.multiplicity(v, w)).sum();
                let inn: u32 = (0..n).filter(|&w| w != v).map(|w| self.multiplicity(w, v)).sum();
                (self.multiplicity(v, v), out, inn, self.ext_in[v], self.ext_out[v])
            })
            .collect();
        // one refinement round: fold in the degrees of the neighbours
        let key = |t: &(u32, u32, u32, u32, u32)| t.0 * 1_000_000 + t.1 * 10_000 + t.2 * 100 + t.3 * 10 + t.4;
        (0..n)
            .map(|v| {
                let mut outs: Vec<(u32, u32)> = (0..n)
                    .filter(|&w| w != v && self.multiplicity(v, w) > 0)
                    .map(|w| (key(&base[w]), self.multiplicity(v, w)))
                    .collect();
                let mut ins: Vec<(u32, u32)> = (0..n)
                    .filter(|&w| w != v && self.multiplicity(w, v) > 0)
                    .map(|w| (key(&base[w]), self.multiplicity(w, v)))
                    .collect();
                outs.sort_unstable();
                ins.sort_unstable();
                let b = base[v];
                (b.0, b.1, b.2, b.3, b.4, outs, ins)
            })
            .collect()
    }

    /// Canonical representative of the isoclass (ordered graphs are their own
    /// representatives).
    pub fn canonical_form(&self) -> FeynmanGraph {
        if self.ordered || self.n <= 1 {
            return self.clone();
        }
        let inv = self.vertex_invariants();
        canon::canonical_min(&inv, |p| self.permuted(p))
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical_form()
    }

    /// Subgraph on `mask`: internal edges leaving the subset become external
    /// half-edges at their endpoint inside it.
    pub fn restrict_mask(&self, mask: VertexMask) -> FeynmanGraph {
        let keep: Vec<usize> = (0..self.n).filter(|v| mask & (1 << v) != 0).collect();
        let m = keep.len();
        let mut adj = vec![0u32; m * m];
        let mut ext_in: Vec<u32> = keep.iter().map(|&v| self.ext_in[v]).collect();
        let mut ext_out: Vec<u32> = keep.iter().map(|&v| self.ext_out[v]).collect();
        for (i, &u) in keep.iter().enumerate() {
            for w in 0..self.n {
                let out_mult = self.multiplicity(u, w);
                let in_mult = self.multiplicity(w, u);
                if mask & (1 << w) != 0 {
                    let j = keep.iter().position(|&x| x == w).unwrap();
                    adj[i * m + j] = out_mult;
                } else {
                    ext_out[i] += out_mult;
                    ext_in[i] += in_mult;
                }
            }
        }
        FeynmanGraph { ordered: self.ordered, n: m, adj, ext_in, ext_out }
    }

    pub fn restrict(&self, subset: &[usize]) -> Result<FeynmanGraph> {
        self.check_subset(subset)?;
        Ok(self.restrict_mask(mask_of(subset)))
    }

    fn check_subset(&self, subset: &[usize]) -> Result<()> {
        if subset.iter().any(|&v| v >= self.n) {
            return Err(Error::NotASubset(subset.to_vec()));
        }
        Ok(())
    }

    /// Out-neighbour masks through internal edges, loops excluded.
    fn successor_masks(&self) -> Vec<VertexMask> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .filter(|&w| w != u && self.multiplicity(u, w) > 0)
                    .fold(0, |m, w| m | (1 << w))
            })
            .collect()
    }

    /// Vertex subsets closed under following internal edges, as masks in
    /// increasing numeric order.
    pub fn ideal_masks(&self) -> Vec<VertexMask> {
        let succ = self.successor_masks();
        (0..=full_mask(self.n))
            .filter(|&a| (0..self.n).all(|v| a & (1 << v) == 0 || succ[v] & !a == 0))
            .collect()
    }

    pub fn ideals(&self) -> Vec<Vec<usize>> {
        self.ideal_masks().into_iter().map(vertices_of).collect()
    }

    /// `reach[u]` = vertices reachable from `u` by a path of length >= 1.
    pub fn reachability(&self) -> Vec<VertexMask> {
        let n = self.n;
        let mut reach: Vec<VertexMask> = (0..n)
            .map(|u| (0..n).filter(|&w| self.multiplicity(u, w) > 0).fold(0, |m, w| m | (1 << w)))
            .collect();
        for k in 0..n {
            for u in 0..n {
                if reach[u] & (1 << k) != 0 {
                    reach[u] |= reach[k];
                }
            }
        }
        reach
    }

    /// Directed cycle through at least two distinct vertices. Loops alone do
    /// not count.
    pub fn has_cycle(&self) -> bool {
        let reach = self.reachability();
        (0..self.n).any(|u| (0..self.n).any(|v| u != v && reach[u] & (1 << v) != 0 && reach[v] & (1 << u) != 0))
    }

    /// Weakly connected components (internal edges only), each sorted, listed
    /// by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        component_masks(self.n, |u, v| self.multiplicity(u, v) > 0)
            .into_iter()
            .map(vertices_of)
            .collect()
    }

    pub fn component_masks(&self) -> Vec<VertexMask> {
        component_masks(self.n, |u, v| self.multiplicity(u, v) > 0)
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() == 1
    }

    /// Whether the graph restricted to `mask` is weakly connected.
    fn induces_connected(&self, mask: VertexMask) -> bool {
        let start = mask.trailing_zeros() as usize;
        let mut seen: VertexMask = 1 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in 0..self.n {
                if mask & (1 << w) != 0
                    && seen & (1 << w) == 0
                    && (self.multiplicity(u, w) > 0 || self.multiplicity(w, u) > 0)
                {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen == mask
    }

    /// Whether a partition is compatible: every block induces a connected
    /// graph and the block quotient, self-loops removed, has no directed cycle.
    pub fn is_compatible(&self, p: &Partition) -> bool {
        if p.n() != self.n {
            return false;
        }
        let masks = p.block_masks();
        if !masks.iter().all(|&m| self.induces_connected(m)) {
            return false;
        }
        let k = masks.len();
        let mut succ = vec![0u64; k];
        for u in 0..self.n {
            for w in 0..self.n {
                let (bu, bw) = (p.block_of(u), p.block_of(w));
                if bu != bw && self.multiplicity(u, w) > 0 {
                    succ[bu] |= 1 << bw;
                }
            }
        }
        // Kahn's algorithm on the block digraph
        let mut indeg = vec![0usize; k];
        for s in &succ {
            for (b, d) in indeg.iter_mut().enumerate() {
                if s & (1 << b) != 0 {
                    *d += 1;
                }
            }
        }
        let mut queue: Vec<usize> = (0..k).filter(|&b| indeg[b] == 0).collect();
        let mut removed = 0;
        while let Some(b) = queue.pop() {
            removed += 1;
            for c in 0..k {
                if succ[b] & (1 << c) != 0 {
                    indeg[c] -= 1;
                    if indeg[c] == 0 {
                        queue.push(c);
                    }
                }
            }
        }
        removed == k
    }

    pub fn compatible_equivalences(&self) -> Vec<Partition> {
        Partition::all(self.n).into_iter().filter(|p| self.is_compatible(p)).collect()
    }

    fn check_partition(&self, p: &Partition) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::InvalidPartition(format!(
                "partition of {} elements for a graph on {} vertices",
                p.n(),
                self.n
            )));
        }
        Ok(())
    }

    /// Disjoint union of the block restrictions, on the same vertex set:
    /// edges between blocks become external half-edges.
    pub fn restrict_eq(&self, p: &Partition) -> Result<FeynmanGraph> {
        self.check_partition(p)?;
        let mut g = self.filter_edges(|u, v| p.block_of(u) == p.block_of(v));
        for u in 0..self.n {
            for v in 0..self.n {
                if p.block_of(u) != p.block_of(v) {
                    let m = self.multiplicity(u, v);
                    g.ext_out[u] += m;
                    g.ext_in[v] += m;
                }
            }
        }
        Ok(g)
    }

    /// Keeps only the internal edges between distinct blocks.
    pub fn quotient_eq(&self, p: &Partition) -> Result<FeynmanGraph> {
        self.check_partition(p)?;
        Ok(self.filter_edges(|u, v| p.block_of(u) != p.block_of(v)))
    }

    fn filter_edges<F: Fn(usize, usize) -> bool>(&self, keep: F) -> FeynmanGraph {
        let n = self.n;
        let mut adj = self.adj.clone();
        for u in 0..n {
            for v in 0..n {
                if !keep(u, v) {
                    adj[u * n + v] = 0;
                }
            }
        }
        FeynmanGraph { adj, ..self.clone() }
    }

    /// Forgets external half-edges, loops and edge multiplicities.
    pub fn simplify(&self) -> SimpleDigraph {
        let n = self.n;
        let adj = (0..n * n).map(|i| i / n != i % n && self.adj[i] > 0).collect();
        SimpleDigraph { ordered: self.ordered, n, adj }
    }

    /// Glues `h` onto `self` by identifying each `a` with `sigma(a)`.
    ///
    /// Vertices of `self` keep their indices; the unmatched vertices of `h`
    /// follow in their original order. Since `sigma` is injective no two
    /// endpoints of an existing edge get identified, so every internal edge
    /// and external half-edge is carried over.
    pub fn glue(&self, h: &FeynmanGraph, sigma: &PartialInjection) -> Result<FeynmanGraph> {
        if self.ordered != h.ordered {
            return Err(Error::ModeMismatch);
        }
        sigma.validate(self.n, h.n)?;
        Ok(self.glue_unchecked(h, sigma))
    }

    pub(crate) fn glue_unchecked(&self, h: &FeynmanGraph, sigma: &PartialInjection) -> FeynmanGraph {
        let (ng, nh) = (self.n, h.n);
        let hmap = sigma.target_map(ng, nh);
        let n = ng + nh - sigma.len();
        let mut adj = vec![0u32; n * n];
        let mut ext_in = vec![0u32; n];
        let mut ext_out = vec![0u32; n];
        for u in 0..ng {
            ext_in[u] += self.ext_in[u];
            ext_out[u] += self.ext_out[u];
            for v in 0..ng {
                adj[u * n + v] += self.multiplicity(u, v);
            }
        }
        for u in 0..nh {
            let mu = hmap[u];
            ext_in[mu] += h.ext_in[u];
            ext_out[mu] += h.ext_out[u];
            for v in 0..nh {
                adj[mu * n + hmap[v]] += h.multiplicity(u, v);
            }
        }
        FeynmanGraph { ordered: self.ordered, n, adj, ext_in, ext_out }
    }

    /// Disjoint union, `self` first.
    pub fn disjoint_union(&self, h: &FeynmanGraph) -> FeynmanGraph {
        self.glue_unchecked(h, &PartialInjection::empty())
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            ext_in: self.ext_in.clone(),
            ext_out: self.ext_out.clone(),
            ordered: self.ordered,
        })
        .expect("graph json")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let g: GraphJson = serde_json::from_value(v.clone())?;
        let edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
        let ext_in = if g.ext_in.is_empty() { vec![0; g.n] } else { g.ext_in };
        let ext_out = if g.ext_out.is_empty() { vec![0; g.n] } else { g.ext_out };
        FeynmanGraph::new(g.n, &edges, ext_in, ext_out, g.ordered)
    }

    /// One-line notation `FG[n; u→v,…; in: j:β,…; out: i:γ,…]`.
    pub fn notation(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}→{v}")).collect();
        let ins: Vec<String> = (0..self.n)
            .filter(|&v| self.ext_in[v] > 0)
            .map(|v| format!("{v}:{}", self.ext_in[v]))
            .collect();
        let outs: Vec<String> = (0..self.n)
            .filter(|&v| self.ext_out[v] > 0)
            .map(|v| format!("{v}:{}", self.ext_out[v]))
            .collect();
        format!("FG[{}; {}; in: {}; out: {}]", self.n, edges.join(","), ins.join(","), outs.join(","))
    }
}

impl fmt::Display for FeynmanGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

impl fmt::Debug for FeynmanGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    #[serde(default)]
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    ext_in: Vec<u32>,
    #[serde(default)]
    ext_out: Vec<u32>,
    #[serde(default)]
    ordered: bool,
}

/// Opaque isoclass identifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Canonical key of a Feynman graph; enforces the permutation budget.
pub fn canonicalize(g: &FeynmanGraph) -> Result<CanonicalKey> {
    canon::check_budget(g.n)?;
    let c = g.canonical_form();
    let mut bytes = vec![c.ordered as u8, c.n as u8];
    for x in c.adj.iter().chain(&c.ext_in).chain(&c.ext_out) {
        bytes.extend_from_slice(&x.to_be_bytes());
    }
    Ok(CanonicalKey(bytes))
}

fn component_masks<F: Fn(usize, usize) -> bool>(n: usize, adjacent: F) -> Vec<VertexMask> {
    let mut seen: VertexMask = 0;
    let mut out = Vec::new();
    for s in 0..n {
        if seen & (1 << s) != 0 {
            continue;
        }
        let mut comp: VertexMask = 1 << s;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if comp & (1 << w) == 0 && (adjacent(u, w) || adjacent(w, u)) {
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

/// A simple oriented graph: no loops, no parallel edges, no external
/// half-edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleDigraph {
    ordered: bool,
    n: usize,
    adj: Vec<bool>,
}

impl SimpleDigraph {
    pub fn new(n: usize, edges: &[(usize, usize)], ordered: bool) -> Result<Self> {
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::InvalidGraph(format!("{n} vertices, at most {MAX_GRAPH_VERTICES}")));
        }
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u} in a simple graph")));
            }
            if adj[u * n + v] {
                return Err(Error::InvalidGraph(format!("repeated edge ({u},{v}) in a simple graph")));
            }
            adj[u * n + v] = true;
        }
        Ok(SimpleDigraph { ordered, n, adj })
    }

    pub fn empty(ordered: bool) -> Self {
        SimpleDigraph { ordered, n: 0, adj: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count()
    }

    /// The same graph viewed as a Feynman graph without external half-edges.
    pub fn to_feynman(&self) -> FeynmanGraph {
        let adj = self.adj.iter().map(|&b| b as u32).collect();
        FeynmanGraph::from_parts(self.n, adj, vec![0; self.n], vec![0; self.n], self.ordered)
    }

    pub fn permuted(&self, perm: &[usize]) -> SimpleDigraph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[i * n + j] = self.adj[perm[i] * n + perm[j]];
            }
        }
        SimpleDigraph { ordered: self.ordered, n, adj }
    }

    pub fn canonical_form(&self) -> SimpleDigraph {
        if self.ordered || self.n <= 1 {
            return self.clone();
        }
        self.to_feynman().canonical_form().simplify()
    }

    pub fn has_cycle(&self) -> bool {
        self.to_feynman().has_cycle()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(SimpleJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            ordered: self.ordered,
        })
        .expect("graph json")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let g: SimpleJson = serde_json::from_value(v.clone())?;
        let edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleDigraph::new(g.n, &edges, g.ordered)
    }

    pub fn notation(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}→{v}")).collect();
        format!("SG[{}; {}]", self.n, edges.join(","))
    }
}

impl fmt::Debug for SimpleDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

impl fmt::Display for SimpleDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

#[derive(Serialize, Deserialize)]
struct SimpleJson {
    n: usize,
    #[serde(default)]
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    ordered: bool,
}

/// A set partition of `0..n`, stored as a restricted growth string: block
/// indices are assigned in order of least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block: Vec<usize>,
}

impl Partition {
    /// Normalizes arbitrary block labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let block = labels
            .iter()
            .map(|l| match map.iter().find(|(k, _)| k == l) {
                Some(&(_, b)) => b,
                None => {
                    let b = map.len();
                    map.push((*l, b));
                    b
                }
            })
            .collect();
        Partition { block }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, blk) in blocks.iter().enumerate() {
            for &v in blk {
                if v >= n || labels[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("element {v} repeated or out of range")));
                }
                labels[v] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::InvalidPartition("blocks do not cover the set".into()));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn discrete(n: usize) -> Self {
        Partition { block: (0..n).collect() }
    }

    pub fn single_block(n: usize) -> Self {
        Partition { block: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.block.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block[v]
    }

    pub fn num_blocks(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    pub fn block_masks(&self) -> Vec<VertexMask> {
        let mut masks = vec![0; self.num_blocks()];
        for (v, &b) in self.block.iter().enumerate() {
            masks[b] |= 1 << v;
        }
        masks
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.block_masks().into_iter().map(vertices_of).collect()
    }

    /// All set partitions of `0..n` (Bell many), in restricted-growth order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == rgs.len() {
                out.push(Partition { block: rgs.clone() });
                return;
            }
            for b in 0..=max + 1 {
                if i == 0 && b > 0 {
                    break;
                }
                rgs[i] = b;
                let m = if i == 0 { 0 } else { max.max(b) };
                rec(i + 1, m, rgs, out);
            }
        }
        if n == 0 {
            out.push(Partition { block: vec![] });
        } else {
            rec(0, 0, &mut rgs, &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<String>())
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

/// An injection `sigma: A -> 0..target_n` from a subset `A` of `0..source_n`,
/// stored as `(a, sigma(a))` pairs sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection {
    pairs: Vec<(usize, usize)>,
}

impl PartialInjection {
    pub fn empty() -> Self {
        PartialInjection { pairs: vec![] }
    }

    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        PartialInjection { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `|A|`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn domain(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn validate(&self, source_n: usize, target_n: usize) -> Result<()> {
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if a >= source_n {
                return Err(Error::NotASubset(self.domain()));
            }
            if b >= target_n {
                return Err(Error::InvalidGraph(format!("gluing target {b} out of range")));
            }
            if i > 0 && self.pairs[i - 1].0 == a {
                return Err(Error::NotInjective);
            }
            if self.pairs[..i].iter().any(|p| p.1 == b) {
                return Err(Error::NotInjective);
            }
        }
        Ok(())
    }

    /// Where each vertex of the target lands in the glued vertex set.
    pub(crate) fn target_map(&self, source_n: usize, target_n: usize) -> Vec<usize> {
        let mut map = vec![usize::MAX; target_n];
        for &(a, b) in &self.pairs {
            map[b] = a;
        }
        let mut next = source_n;
        for m in map.iter_mut() {
            if *m == usize::MAX {
                *m = next;
                next += 1;
            }
        }
        map
    }
}

/// All pairs `(A, sigma)` with `A ⊆ 0..m` and `sigma: A ↪ 0..h_n`.
///
/// There are `sum_k C(m,k) h_n!/(h_n-k)!` of them; the order is by subset
/// mask, then lexicographic in the images.
pub fn partial_injections(m: usize, h_n: usize) -> Vec<PartialInjection> {
    let mut out = Vec::new();
    for mask in 0..=full_mask(m) {
        let dom = vertices_of(mask);
        if dom.len() > h_n {
            continue;
        }
        let mut images = Vec::with_capacity(dom.len());
        fn rec(dom: &[usize], h_n: usize, used: u32, images: &mut Vec<usize>, out: &mut Vec<PartialInjection>) {
            if images.len() == dom.len() {
                out.push(PartialInjection { pairs: dom.iter().copied().zip(images.iter().copied()).collect() });
                return;
            }
            for b in 0..h_n {
                if used & (1 << b) == 0 {
                    images.push(b);
                    rec(dom, h_n, used | (1 << b), images, out);
                    images.pop();
                }
            }
        }
        rec(&dom, h_n, 0, &mut images, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The two-vertex graph of the introduction: a -> b twice, one external
    /// half-edge entering a, two leaving b.
    pub(crate) fn ladder() -> FeynmanGraph {
        FeynmanGraph::new(2, &[(0, 1), (0, 1)], vec![1, 0], vec![0, 2], false).unwrap()
    }

    fn edge() -> FeynmanGraph {
        FeynmanGraph::from_edges(2, &[(0, 1)], false).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let a = FeynmanGraph::vertex(0, 0, false);
        assert_eq!(canonicalize(&a).unwrap(), canonicalize(&a.permuted(&[0])).unwrap());
        let p = FeynmanGraph::from_edges(3, &[(0, 1), (1, 2)], false).unwrap();
        let q = FeynmanGraph::from_edges(3, &[(2, 0), (0, 1)], false).unwrap();
        assert_eq!(canonicalize(&p).unwrap(), canonicalize(&q).unwrap());
        let big = FeynmanGraph::from_edges(10, &[], false).unwrap();
        assert!(matches!(canonicalize(&big), Err(Error::VertexBudgetExceeded { n: 10, .. })));
    }

    #[test]
    fn ordered_keys_distinguish_vertex_order() {
        // fg(x_a x_b ...) versus fg(x_b x_a ...): same graph, opposite vertex order
        let g1 = FeynmanGraph::new(2, &[(0, 1), (0, 1)], vec![1, 0], vec![0, 3], true).unwrap();
        let g2 = FeynmanGraph::new(2, &[(1, 0), (1, 0)], vec![0, 1], vec![3, 0], true).unwrap();
        assert_ne!(canonicalize(&g1).unwrap(), canonicalize(&g2).unwrap());
        assert_eq!(
            canonicalize(&g1.with_ordered(false)).unwrap(),
            canonicalize(&g2.with_ordered(false)).unwrap()
        );
    }

    #[test]
    fn restrict_examples() {
        let g = ladder();
        assert_eq!(g.restrict(&[0, 1]).unwrap(), g);
        assert_eq!(g.restrict(&[0]).unwrap(), FeynmanGraph::vertex(1, 2, false));
        assert_eq!(g.restrict(&[1]).unwrap(), FeynmanGraph::vertex(2, 2, false));
        assert_eq!(edge().restrict(&[1]).unwrap(), FeynmanGraph::vertex(1, 0, false));
        assert!(matches!(g.restrict(&[2]), Err(Error::NotASubset(_))));
    }

    #[test]
    fn ideal_examples() {
        let free = FeynmanGraph::from_edges(3, &[], false).unwrap();
        assert_eq!(free.ideals().len(), 8);
        assert_eq!(edge().ideals(), vec![vec![], vec![1], vec![0, 1]]);
        let two_cycle = FeynmanGraph::from_edges(2, &[(0, 1), (1, 0)], false).unwrap();
        assert_eq!(two_cycle.ideals(), vec![vec![], vec![0, 1]]);
    }

    #[test]
    fn glue_examples() {
        let g = ladder();
        let h = edge();
        assert_eq!(g.glue(&h, &PartialInjection::empty()).unwrap(), g.disjoint_union(&h));
        let dot = FeynmanGraph::vertex(0, 0, false);
        assert_eq!(dot.glue(&dot, &PartialInjection::new(vec![(0, 0)])).unwrap(), dot);
        assert_eq!(
            g.glue(&h, &PartialInjection::new(vec![(0, 0), (1, 0)])),
            Err(Error::NotInjective)
        );
        assert!(matches!(g.glue(&h, &PartialInjection::new(vec![(5, 0)])), Err(Error::NotASubset(_))));
    }

    #[test]
    fn glue_worked_example() {
        // F: a -> b twice, 1 in at a, 2 out at b.
        // H: d -> c, 1 in at d, 1 in and 1 out at c. Identify a with c.
        let f = ladder();
        let h = FeynmanGraph::new(2, &[(1, 0)], vec![1, 1], vec![1, 0], false).unwrap();
        let glued = f.glue(&h, &PartialInjection::new(vec![(0, 0)])).unwrap();
        // i = {a,c}: 2 in, 1 out; j = b: 2 out; k = d: 1 in, edge k -> i
        let expected = FeynmanGraph::new(3, &[(0, 1), (0, 1), (2, 0)], vec![2, 0, 1], vec![1, 2, 0], false).unwrap();
        assert_eq!(glued, expected);
    }

    #[test]
    fn compatible_equivalence_examples() {
        assert_eq!(FeynmanGraph::vertex(0, 0, false).compatible_equivalences().len(), 1);
        assert_eq!(edge().compatible_equivalences().len(), 2);
        let path = FeynmanGraph::from_edges(3, &[(0, 1), (1, 2)], false).unwrap();
        let ce: Vec<String> = path.compatible_equivalences().iter().map(|p| p.to_string()).collect();
        assert_eq!(ce, vec!["012", "01|2", "0|12", "0|1|2"]);
    }

    #[test]
    fn restrict_and_quotient_eq() {
        let g = ladder();
        let whole = Partition::single_block(2);
        let disc = Partition::discrete(2);
        assert_eq!(
            g.quotient_eq(&whole).unwrap(),
            FeynmanGraph::new(2, &[], vec![1, 0], vec![0, 2], false).unwrap()
        );
        assert_eq!(g.restrict_eq(&whole).unwrap(), g);
        assert_eq!(g.quotient_eq(&disc).unwrap(), g);
        let split = g.restrict_eq(&disc).unwrap();
        assert_eq!(split.internal_edge_count(), 0);
        assert_eq!(split.canonical_form(), FeynmanGraph::vertex(1, 2, false).disjoint_union(&FeynmanGraph::vertex(2, 2, false)).canonical_form());

        let looped = FeynmanGraph::from_edges(2, &[(0, 0), (0, 1)], false).unwrap();
        assert_eq!(looped.quotient_eq(&disc).unwrap(), FeynmanGraph::from_edges(2, &[(0, 1)], false).unwrap());
        assert_eq!(
            looped.restrict_eq(&disc).unwrap(),
            FeynmanGraph::new(2, &[(0, 0)], vec![0, 1], vec![1, 0], false).unwrap()
        );
        assert!(matches!(g.quotient_eq(&Partition::discrete(3)), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn cycles() {
        assert!(!edge().has_cycle());
        assert!(FeynmanGraph::from_edges(2, &[(0, 1), (1, 0)], false).unwrap().has_cycle());
        assert!(!FeynmanGraph::from_edges(1, &[(0, 0)], false).unwrap().has_cycle());
    }

    #[test]
    fn simplify_examples() {
        let double = FeynmanGraph::from_edges(2, &[(0, 1), (0, 1)], false).unwrap();
        assert_eq!(double.simplify(), SimpleDigraph::new(2, &[(0, 1)], false).unwrap());
        let looped = FeynmanGraph::from_edges(1, &[(0, 0)], false).unwrap();
        assert_eq!(looped.simplify(), SimpleDigraph::new(1, &[], false).unwrap());
        assert_eq!(ladder().simplify(), SimpleDigraph::new(2, &[(0, 1)], false).unwrap());
    }

    #[test]
    fn components_and_injections() {
        assert_eq!(partial_injections(1, 1).len(), 2);
        assert_eq!(partial_injections(2, 2).len(), 7);
        assert_eq!(partial_injections(2, 3).len(), 1 + 6 + 6);
        let g = edge().disjoint_union(&FeynmanGraph::vertex(0, 0, false));
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn partitions_are_bell_many() {
        let counts: Vec<usize> = (0..7).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn json_and_notation() {
        let g = ladder();
        let v = g.to_json();
        assert_eq!(v.to_string(), r#"{"edges":[[0,1],[0,1]],"ext_in":[1,0],"ext_out":[0,2],"n":2,"ordered":false}"#);
        assert_eq!(FeynmanGraph::from_json(&v).unwrap(), g);
        assert_eq!(g.notation(), "FG[2; 0→1,0→1; in: 0:1; out: 1:2]");
        let s = SimpleDigraph::new(2, &[(1, 0)], true).unwrap();
        assert_eq!(s.to_json().to_string(), r#"{"edges":[[1,0]],"n":2,"ordered":true}"#);
        assert_eq!(SimpleDigraph::from_json(&s.to_json()).unwrap(), s);
        assert!(SimpleDigraph::new(2, &[(0, 0)], false).is_err());
        assert!(SimpleDigraph::new(2, &[(0, 1), (0, 1)], false).is_err());
    }
}
