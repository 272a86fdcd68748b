//! Exhaustive enumeration of small basis elements, one representative per
//! isoclass (or every labeled object in ordered mode), in canonical order.

use std::collections::BTreeSet;

use crate::graph::{FeynmanGraph, SimpleDigraph};
use crate::qp::QuasiPoset;

/// Bounds on the objects enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_edges: usize,
    /// Per vertex, per direction.
    pub max_ext: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_edges: 3, max_ext: 1 }
    }
}

fn multisets(pool: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(cur.clone());
    if cur.len() == size {
        return;
    }
    for i in start..pool {
        cur.push(i);
        multisets(pool, size, i, cur, out);
        cur.pop();
    }
}

/// Feynman graphs on exactly `n` vertices.
pub fn feynman_graphs(n: usize, bounds: Bounds, ordered: bool) -> Vec<FeynmanGraph> {
    let pairs: Vec<(usize, usize)> = (0..n * n).map(|k| (k / n, k % n)).collect();
    let mut edge_sets = Vec::new();
    multisets(pairs.len(), bounds.max_edges, 0, &mut Vec::new(), &mut edge_sets);
    let radix = bounds.max_ext as usize + 1;
    let ext_count = radix.pow(2 * n as u32);
    let mut seen = BTreeSet::new();
    for es in &edge_sets {
        let edges: Vec<(usize, usize)> = es.iter().map(|&i| pairs[i]).collect();
        for code in 0..ext_count {
            let mut c = code;
            let mut digits = Vec::with_capacity(2 * n);
            for _ in 0..2 * n {
                digits.push((c % radix) as u32);
                c /= radix;
            }
            let g = FeynmanGraph::new(n, &edges, digits[..n].to_vec(), digits[n..].to_vec(), ordered)
                .expect("enumerated graph is valid");
            seen.insert(g.canonical_form());
        }
    }
    seen.into_iter().collect()
}

/// Feynman graphs on at most `max_n` vertices, the empty graph included.
pub fn feynman_graphs_up_to(max_n: usize, bounds: Bounds, ordered: bool) -> Vec<FeynmanGraph> {
    (0..=max_n).flat_map(|n| feynman_graphs(n, bounds, ordered)).collect()
}

/// Simple digraphs on exactly `n` vertices with at most `max_edges` edges.
pub fn simple_digraphs(n: usize, max_edges: usize, ordered: bool) -> Vec<SimpleDigraph> {
    let pairs: Vec<(usize, usize)> = (0..n * n).map(|k| (k / n, k % n)).filter(|(u, v)| u != v).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        if mask.count_ones() as usize > max_edges {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask & (1 << i) != 0).map(|i| pairs[i]).collect();
        let g = SimpleDigraph::new(n, &edges, ordered).expect("enumerated graph is valid");
        seen.insert(g.canonical_form());
    }
    seen.into_iter().collect()
}

pub fn simple_digraphs_up_to(max_n: usize, max_edges: usize, ordered: bool) -> Vec<SimpleDigraph> {
    (0..=max_n).flat_map(|n| simple_digraphs(n, max_edges, ordered)).collect()
}

/// Quasi-posets on exactly `n` vertices, by brute force over relation
/// matrices.
pub fn quasi_posets(n: usize, ordered: bool) -> Vec<QuasiPoset> {
    let pairs: Vec<(usize, usize)> = (0..n * n).map(|k| (k / n, k % n)).filter(|(u, v)| u != v).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let rel: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i == j || pairs.iter().position(|&p| p == (i, j)).is_some_and(|k| mask & (1 << k) != 0))
                    .collect()
            })
            .collect();
        if let Ok(p) = QuasiPoset::new(rel, ordered) {
            seen.insert(p.canonical_form());
        }
    }
    seen.into_iter().collect()
}

pub fn quasi_posets_up_to(max_n: usize, ordered: bool) -> Vec<QuasiPoset> {
    (0..=max_n).flat_map(|n| quasi_posets(n, ordered)).collect()
}

/// Posets on exactly `n` vertices. Unordered posets are generated through a
/// natural labeling (relations only from lower to higher index).
pub fn posets(n: usize, ordered: bool) -> Vec<QuasiPoset> {
    if ordered {
        return quasi_posets(n, true).into_iter().filter(|p| p.is_poset()).collect();
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                rel[i][j] = true;
            }
        }
        if let Ok(p) = QuasiPoset::new(rel, false) {
            seen.insert(p.canonical_form());
        }
    }
    seen.into_iter().collect()
}

pub fn posets_up_to(max_n: usize, ordered: bool) -> Vec<QuasiPoset> {
    (0..=max_n).flat_map(|n| posets(n, ordered)).collect()
}
