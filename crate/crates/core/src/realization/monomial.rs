//! Monomials of the alphabet algebras.
//!
//! A monomial is a product of vertex letters `x_i` (a set in the commutative
//! algebra, a duplicate-free word in the word algebra) and commuting edge
//! variables `x_{i,j}`, `x_{-inf,j}`, `x_{i,inf}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::FeynmanGraph;

pub type Letter = u16;

/// Exponents of edge variables: a small map kept as a sorted vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents<K: Ord + Copy>(Vec<(K, u32)>);

impl<K: Ord + Copy> Default for Exponents<K> {
    fn default() -> Self {
        Exponents(Vec::new())
    }
}

type ExpIter<'a, K> = std::iter::Map<std::slice::Iter<'a, (K, u32)>, fn(&(K, u32)) -> (&K, &u32)>;

impl<K: Ord + Copy> Exponents<K> {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, k: &K) -> Option<u32> {
        self.0.binary_search_by(|(x, _)| x.cmp(k)).ok().map(|i| self.0[i].1)
    }

    pub fn contains_key(&self, k: &K) -> bool {
        self.get(k).is_some()
    }

    /// Sets the exponent of `k`; 0 removes it.
    pub fn insert(&mut self, k: K, e: u32) {
        match self.0.binary_search_by(|(x, _)| x.cmp(&k)) {
            Ok(i) if e == 0 => {
                self.0.remove(i);
            }
            Ok(i) => self.0[i].1 = e,
            Err(_) if e == 0 => {}
            Err(i) => self.0.insert(i, (k, e)),
        }
    }

    pub fn add(&mut self, k: K, e: u32) {
        if e == 0 {
            return;
        }
        match self.0.binary_search_by(|(x, _)| x.cmp(&k)) {
            Ok(i) => self.0[i].1 += e,
            Err(i) => self.0.insert(i, (k, e)),
        }
    }

    /// Exponent-wise sum.
    pub fn merged(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Exponents(out)
    }

    pub fn iter(&self) -> ExpIter<'_, K> {
        self.0.iter().map(|(k, e)| (k, e))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.iter().map(|(k, _)| k)
    }

    pub fn values(&self) -> impl Iterator<Item = &u32> {
        self.0.iter().map(|(_, e)| e)
    }
}

impl<'a, K: Ord + Copy> IntoIterator for &'a Exponents<K> {
    type Item = (&'a K, &'a u32);
    type IntoIter = ExpIter<'a, K>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    /// Vertex letters; sorted in the commutative algebra, in word order otherwise.
    pub verts: Vec<Letter>,
    /// `x_{i,j}` exponents.
    pub alpha: Exponents<(Letter, Letter)>,
    /// `x_{-inf,j}` exponents.
    pub beta: Exponents<Letter>,
    /// `x_{i,inf}` exponents.
    pub gamma: Exponents<Letter>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn vertex(i: Letter) -> Self {
        Monomial { verts: vec![i], ..Default::default() }
    }

    pub fn edge(i: Letter, j: Letter) -> Self {
        let mut m = Monomial::default();
        m.alpha.insert((i, j), 1);
        m
    }

    pub fn ext_in(j: Letter) -> Self {
        let mut m = Monomial::default();
        m.beta.insert(j, 1);
        m
    }

    pub fn ext_out(i: Letter) -> Self {
        let mut m = Monomial::default();
        m.gamma.insert(i, 1);
        m
    }

    pub fn add_alpha(&mut self, i: Letter, j: Letter, e: u32) {
        self.alpha.add((i, j), e);
    }

    pub fn add_beta(&mut self, j: Letter, e: u32) {
        self.beta.add(j, e);
    }

    pub fn add_gamma(&mut self, i: Letter, e: u32) {
        self.gamma.add(i, e);
    }

    /// Total exponent of the edge variables.
    pub fn degree(&self) -> u32 {
        self.alpha.values().sum::<u32>() + self.beta.values().sum::<u32>() + self.gamma.values().sum::<u32>()
    }

    pub fn has_vertex(&self, i: Letter) -> bool {
        self.verts.contains(&i)
    }

    /// Every edge variable touches a vertex letter of the monomial.
    pub fn is_admissible(&self) -> bool {
        self.alpha.keys().all(|&(i, j)| self.has_vertex(i) && self.has_vertex(j))
            && self.beta.keys().all(|&j| self.has_vertex(j))
            && self.gamma.keys().all(|&i| self.has_vertex(i))
    }

    /// The Feynman graph of an admissible monomial: vertices are the vertex
    /// letters in stored order (word order for the word algebra).
    pub fn feynman_graph(&self, ordered: bool) -> Result<FeynmanGraph> {
        if !self.is_admissible() {
            return Err(Error::NotAdmissible);
        }
        let pos = |l: Letter| self.verts.iter().position(|&v| v == l).unwrap();
        let n = self.verts.len();
        let mut edges = Vec::new();
        for (&(i, j), &e) in &self.alpha {
            for _ in 0..e {
                edges.push((pos(i), pos(j)));
            }
        }
        let mut ext_in = vec![0; n];
        let mut ext_out = vec![0; n];
        for (&j, &e) in &self.beta {
            ext_in[pos(j)] += e;
        }
        for (&i, &e) in &self.gamma {
            ext_out[pos(i)] += e;
        }
        FeynmanGraph::new(n, &edges, ext_in, ext_out, ordered)
    }

    /// Product; returns the number of vertex letters shared, each worth a
    /// factor `q`. In the word algebra later duplicates are dropped.
    pub fn mul(&self, other: &Monomial, word: bool) -> (u32, Monomial) {
        let mut verts = self.verts.clone();
        let mut shared = 0;
        for &v in &other.verts {
            if self.verts.contains(&v) {
                shared += 1;
            } else {
                verts.push(v);
            }
        }
        if !word {
            verts.sort_unstable();
        }
        let out = Monomial {
            verts,
            alpha: self.alpha.merged(&other.alpha),
            beta: self.beta.merged(&other.beta),
            gamma: self.gamma.merged(&other.gamma),
        };
        (shared, out)
    }

    /// Text form `x_i…·x_{i,j}^a…·x_{-inf,j}^b…·x_{i,inf}^c…`.
    pub fn text(&self) -> String {
        let mut parts: Vec<String> = self.verts.iter().map(|v| format!("x_{v}")).collect();
        let pow = |e: u32| if e == 1 { String::new() } else { format!("^{e}") };
        for (&(i, j), &e) in &self.alpha {
            parts.push(format!("x_{{{i},{j}}}{}", pow(e)));
        }
        for (&j, &e) in &self.beta {
            parts.push(format!("x_{{-inf,{j}}}{}", pow(e)));
        }
        for (&i, &e) in &self.gamma {
            parts.push(format!("x_{{{i},inf}}{}", pow(e)));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}
