//! Truncated alphabet algebras, the realization map and the alphabet-level
//! morphisms (doubling, squaring and the two quotient maps).

use num_traits::{One, Zero};

use crate::coeff::{Coefficient, QParam, Rational};
use crate::error::{Error, Result};
use crate::graph::{FeynmanGraph, SimpleDigraph};
use crate::lincomb::LinComb;
use crate::qp::QuasiPoset;

use super::alphabet::Alphabet;
use super::monomial::{Letter, Monomial};

pub type AlgElement = LinComb<Monomial>;
pub type AlgTensor = LinComb<(Monomial, Monomial)>;
pub type AlgTensor3 = LinComb<(Monomial, Monomial, Monomial)>;

fn rpow(q: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}

/// `A_q(X)` (or its word version), optionally truncated at an edge degree.
#[derive(Clone, Debug)]
pub struct AlphabetAlgebra {
    pub alphabet: Alphabet,
    pub q: QParam,
    pub word: bool,
    pub bound: Option<u32>,
}

impl AlphabetAlgebra {
    pub fn new(alphabet: Alphabet, q: QParam, word: bool) -> Self {
        AlphabetAlgebra { alphabet, q, word, bound: None }
    }

    pub fn truncated(mut self, bound: u32) -> Self {
        self.bound = Some(bound);
        self
    }

    /// Product of two monomials, `q^{shared}·m`; errors when the truncation
    /// bound is exceeded.
    pub fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Result<(Coefficient, Monomial)> {
        let (k, m) = a.mul(b, self.word);
        if let Some(bound) = self.bound {
            if m.degree() > bound {
                return Err(Error::DroppedTerm { degree: m.degree(), bound });
            }
        }
        Ok((self.q.pow(k), m))
    }

    /// Product of elements; terms above the truncation bound are dropped.
    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut out = LinComb::zero();
        for (x, cx) in a {
            for (y, cy) in b {
                if let Ok((r, m)) = self.mono_mul(x, y) {
                    out.add_term(m, &(cx * cy) * &r);
                }
            }
        }
        out
    }

    /// Checks that every edge variable respects the order of the alphabet.
    pub fn contains(&self, m: &Monomial) -> bool {
        let n = self.alphabet.len();
        m.verts.iter().all(|&v| (v as usize) < n)
            && m.alpha.keys().all(|&(i, j)| (j as usize) < n && self.alphabet.le(i as usize, j as usize))
            && m.beta.keys().all(|&j| (j as usize) < n)
            && m.gamma.keys().all(|&i| (i as usize) < n)
            && (!self.word || {
                let mut s = m.verts.clone();
                s.sort_unstable();
                s.windows(2).all(|w| w[0] != w[1])
            })
    }
}

/// Visits every injection `0..n -> 0..m`.
fn for_each_injection<F: FnMut(&[Letter])>(n: usize, m: usize, mut f: F) {
    fn rec<F: FnMut(&[Letter])>(n: usize, m: usize, used: u64, cur: &mut Vec<Letter>, f: &mut F) {
        if cur.len() == n {
            f(cur);
            return;
        }
        for l in 0..m {
            if used & (1 << l) == 0 {
                cur.push(l as Letter);
                rec(n, m, used | (1 << l), cur, f);
                cur.pop();
            }
        }
    }
    if n <= m {
        rec(n, m, 0, &mut Vec::with_capacity(n), &mut f);
    }
}

fn monomial_of(g: &FeynmanGraph, tau: &[Letter], word: bool) -> Monomial {
    let mut m = Monomial { verts: tau.to_vec(), ..Default::default() };
    if !word {
        m.verts.sort_unstable();
    }
    for u in 0..g.n() {
        for v in 0..g.n() {
            m.add_alpha(tau[u], tau[v], g.multiplicity(u, v));
        }
        m.add_beta(tau[u], g.ext_in(u));
        m.add_gamma(tau[u], g.ext_out(u));
    }
    m
}

/// `M_G(X)`: the sum over the injections `V(G) -> X` sending every edge
/// `u -> v` to letters `τ(u) ≤ τ(v)` of the associated monomial. Each
/// distinct admissible monomial with graph `G` appears `|Aut(G)|` times (once
/// in the word algebra).
pub fn realize(g: &FeynmanGraph, x: &Alphabet) -> AlgElement {
    let word = g.is_ordered();
    let edges = g.edges();
    let mut out = LinComb::zero();
    for_each_injection(g.n(), x.len(), |tau| {
        if edges.iter().all(|&(u, v)| x.le(tau[u] as usize, tau[v] as usize)) {
            out.add_term(monomial_of(g, tau, word), Coefficient::one());
        }
    });
    out
}

/// `Θ_X` extended linearly.
pub fn realize_element(a: &LinComb<FeynmanGraph>, x: &Alphabet) -> AlgElement {
    let mut out = LinComb::zero();
    for (g, c) in a {
        out.add_scaled(&realize(g, x), c);
    }
    out
}

/// The realization of a simple digraph in `A'_q(X)`.
pub fn realize_simple(g: &SimpleDigraph, x: &Alphabet) -> AlgElement {
    realize(&g.to_feynman(), x)
}

/// The realization of a quasi-poset in `A''_q(X)`: injections preserving the
/// relation, edge support equal to the strict relation.
pub fn realize_quasi_poset(p: &QuasiPoset, x: &Alphabet) -> AlgElement {
    let word = p.is_ordered();
    let rel = p.relations();
    let mut out = LinComb::zero();
    for_each_injection(p.n(), x.len(), |tau| {
        if rel.iter().all(|&(i, j)| x.le(tau[i] as usize, tau[j] as usize)) {
            let mut m = Monomial { verts: tau.to_vec(), ..Default::default() };
            if !word {
                m.verts.sort_unstable();
            }
            for &(i, j) in &rel {
                m.add_alpha(tau[i], tau[j], 1);
            }
            out.add_term(m, Coefficient::one());
        }
    });
    out
}

/// `Δ_{X,Y}`: splits a monomial on `X ⊔ Y`, where `X` has `x_len` letters.
pub fn doubling_monomial(m: &Monomial, x_len: usize) -> Result<(Monomial, Monomial)> {
    let xl = x_len as Letter;
    let in_x = |l: Letter| l < xl;
    let mut left = Monomial::default();
    let mut right = Monomial::default();
    for &v in &m.verts {
        if in_x(v) {
            left.verts.push(v);
        } else {
            right.verts.push(v - xl);
        }
    }
    for (&(i, j), &e) in &m.alpha {
        match (in_x(i), in_x(j)) {
            (true, true) => left.add_alpha(i, j, e),
            (false, false) => right.add_alpha(i - xl, j - xl, e),
            (true, false) => {
                left.add_gamma(i, e);
                right.add_beta(j - xl, e);
            }
            (false, true) => {
                return Err(Error::AlphabetMismatch(format!("edge variable x_{{{i},{j}}} goes down from Y to X")));
            }
        }
    }
    for (&j, &e) in &m.beta {
        if in_x(j) {
            left.add_beta(j, e);
        } else {
            right.add_beta(j - xl, e);
        }
    }
    for (&i, &e) in &m.gamma {
        if in_x(i) {
            left.add_gamma(i, e);
        } else {
            right.add_gamma(i - xl, e);
        }
    }
    Ok((left, right))
}

pub fn doubling(a: &AlgElement, x_len: usize) -> Result<AlgTensor> {
    let mut out = LinComb::zero();
    for (m, c) in a {
        out.add_term(doubling_monomial(m, x_len)?, c.clone());
    }
    Ok(out)
}

/// Parameters of a squaring morphism `A_{q1 q2}(XY) -> A_{q1}(X) ⊗ A_{q2}(Y)`.
#[derive(Clone, Debug)]
pub struct Squaring {
    pub x: Alphabet,
    pub y: Alphabet,
    pub q1: Rational,
    pub q2: Rational,
    pub word: bool,
}

impl Squaring {
    /// Projects a vertex list, dropping repeated letters; returns the count of
    /// repeats.
    fn project(verts: &[Letter], f: impl Fn(Letter) -> Letter, word: bool) -> (u32, Vec<Letter>) {
        let mut out: Vec<Letter> = Vec::with_capacity(verts.len());
        let mut repeats = 0;
        for &v in verts {
            let l = f(v);
            if out.contains(&l) {
                repeats += 1;
            } else {
                out.push(l);
            }
        }
        if !word {
            out.sort_unstable();
        }
        (repeats, out)
    }

    pub fn apply_monomial(&self, m: &Monomial) -> (Rational, Monomial, Monomial) {
        let my = self.y.len() as Letter;
        let first = |l: Letter| l / my;
        let second = |l: Letter| l % my;
        let (k1, lv) = Self::project(&m.verts, first, self.word);
        let (k2, rv) = Self::project(&m.verts, second, self.word);
        let mut left = Monomial { verts: lv, ..Default::default() };
        let mut right = Monomial { verts: rv, ..Default::default() };
        for (&(a, b), &e) in &m.alpha {
            let (i, i2, j, j2) = (first(a), second(a), first(b), second(b));
            if self.x.lt(i as usize, j as usize) {
                left.add_alpha(i, j, e);
                right.add_gamma(i2, e);
                right.add_beta(j2, e);
            } else {
                right.add_alpha(i2, j2, e);
            }
        }
        for (&b, &e) in &m.beta {
            left.add_beta(first(b), e);
            right.add_beta(second(b), e);
        }
        for (&a, &e) in &m.gamma {
            left.add_gamma(first(a), e);
            right.add_gamma(second(a), e);
        }
        (rpow(&self.q1, k1) * rpow(&self.q2, k2), left, right)
    }

    /// Applies `δ_{X,Y}` to an element of `A_q(XY)`; requires `q = q1 q2`.
    pub fn apply(&self, a: &AlgElement, q: &Rational) -> Result<AlgTensor> {
        if *q != &self.q1 * &self.q2 {
            return Err(Error::QFactorizationMismatch);
        }
        let mut out = LinComb::zero();
        for (m, c) in a {
            let (r, l, rt) = self.apply_monomial(m);
            if !r.is_zero() {
                out.add_term((l, rt), c.scale(&r));
            }
        }
        Ok(out)
    }
}

/// `ϖ'`: external variables and loops become 1, `x_{i,j}^2 = x_{i,j}`.
pub fn quotient_prime_monomial(m: &Monomial) -> Monomial {
    let mut out = Monomial { verts: m.verts.clone(), ..Default::default() };
    for &(i, j) in m.alpha.keys() {
        if i != j {
            out.alpha.insert((i, j), 1);
        }
    }
    out
}

pub fn quotient_prime(a: &AlgElement) -> AlgElement {
    a.map_keys(quotient_prime_monomial)
}

/// `ϖ''`: `ϖ'` followed by transitive closure of the edge support.
pub fn quotient_doubleprime_monomial(m: &Monomial) -> Monomial {
    let mut out = quotient_prime_monomial(m);
    loop {
        let edges: Vec<(Letter, Letter)> = out.alpha.keys().copied().collect();
        let mut added = false;
        for &(i, j) in &edges {
            for &(j2, k) in &edges {
                if j == j2 && i != k && !out.alpha.contains_key(&(i, k)) {
                    out.alpha.insert((i, k), 1);
                    added = true;
                }
            }
        }
        if !added {
            return out;
        }
    }
}

pub fn quotient_doubleprime(a: &AlgElement) -> AlgElement {
    a.map_keys(quotient_doubleprime_monomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rational};

    fn m(verts: &[Letter], alpha: &[(Letter, Letter, u32)], beta: &[(Letter, u32)], gamma: &[(Letter, u32)]) -> Monomial {
        let mut out = Monomial { verts: verts.to_vec(), ..Default::default() };
        for &(i, j, e) in alpha {
            out.add_alpha(i, j, e);
        }
        for &(j, e) in beta {
            out.add_beta(j, e);
        }
        for &(i, e) in gamma {
            out.add_gamma(i, e);
        }
        out
    }

    #[test]
    fn realize_examples() {
        let dot = FeynmanGraph::vertex(0, 0, false);
        let r = realize(&dot, &Alphabet::equivalent(4));
        assert_eq!(r.len(), 4);
        let three = FeynmanGraph::from_edges(3, &[], false).unwrap();
        assert!(realize(&three, &Alphabet::equivalent(2)).is_zero());
        let ladder = FeynmanGraph::new(2, &[(0, 1), (0, 1)], vec![1, 0], vec![0, 2], false).unwrap();
        assert!(!realize(&ladder, &Alphabet::equivalent(2)).is_zero());
        let cyc = FeynmanGraph::from_edges(2, &[(0, 1), (1, 0)], false).unwrap();
        assert!(realize(&cyc, &Alphabet::ordered(6)).is_zero());
        assert!(!realize(&cyc, &Alphabet::equivalent(2)).is_zero());
    }

    #[test]
    fn realize_weights_by_automorphisms() {
        // ∙∙ on 3 equivalent letters: 3 monomials, each reached twice
        let dd = FeynmanGraph::from_edges(2, &[], false).unwrap();
        let r = realize(&dd, &Alphabet::equivalent(3));
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|(_, c)| *c == Coefficient::from_int(2)));
        // ordered ∙∙ in the word algebra: 6 words
        let r = realize(&dd.with_ordered(true), &Alphabet::equivalent(3));
        assert_eq!(r.len(), 6);
        assert!(r.iter().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn doubling_examples() {
        let (l, r) = doubling_monomial(&Monomial::edge(0, 3), 2).unwrap();
        assert_eq!(l, Monomial::ext_out(0));
        assert_eq!(r, Monomial::ext_in(1));
        let (l, r) = doubling_monomial(&Monomial::edge(0, 1), 2).unwrap();
        assert_eq!((l, r), (Monomial::edge(0, 1), Monomial::one()));
    }

    #[test]
    fn squaring_examples() {
        let x = Alphabet::new(&[0, 0, 1]);
        let y = Alphabet::new(&[0, 1]);
        let sq = Squaring { x: x.clone(), y, q1: int(1), q2: int(1), word: false };
        // (1,0) -> x_1 ⊗ x_0
        let (c, l, r) = sq.apply_monomial(&Monomial::vertex(2));
        assert_eq!((c, l, r), (int(1), Monomial::vertex(1), Monomial::vertex(0)));
        // (0,0) -> (1,1) with 0 ∼ 1 in X: 1 ⊗ x_{0,1}
        let (_, l, r) = sq.apply_monomial(&Monomial::edge(0, 3));
        assert_eq!((l, r), (Monomial::one(), Monomial::edge(0, 1)));
        // (0,1) -> (2,0) with 0 < 2 in X: x_{0,2} ⊗ x_{1,inf} x_{-inf,0}
        let (_, l, r) = sq.apply_monomial(&Monomial::edge(1, 4));
        assert_eq!(l, Monomial::edge(0, 2));
        assert_eq!(r, m(&[], &[], &[(0, 1)], &[(1, 1)]));
    }

    #[test]
    fn squaring_needs_factorization() {
        let sq = Squaring { x: Alphabet::equivalent(1), y: Alphabet::equivalent(1), q1: int(2), q2: int(1), word: false };
        let a = LinComb::basis(Monomial::vertex(0));
        assert_eq!(sq.apply(&a, &int(1)), Err(Error::QFactorizationMismatch));
        assert!(sq.apply(&a, &int(2)).is_ok());
    }

    #[test]
    fn squaring_collisions_carry_q() {
        // (0,0)(0,1) -> x_0 x_0 ⊗ x_0 x_1 = q1 x_0 ⊗ x_0 x_1
        let sq = Squaring { x: Alphabet::equivalent(1), y: Alphabet::equivalent(2), q1: rational(1, 2), q2: int(3), word: false };
        let (c, l, r) = sq.apply_monomial(&m(&[0, 1], &[], &[], &[]));
        assert_eq!(c, rational(1, 2));
        assert_eq!(l, Monomial::vertex(0));
        assert_eq!(r.verts, vec![0, 1]);
    }

    #[test]
    fn quotient_examples() {
        let a = m(&[0, 1], &[(0, 1, 2)], &[], &[(1, 1)]);
        assert_eq!(quotient_prime_monomial(&a), m(&[0, 1], &[(0, 1, 1)], &[], &[]));
        let path = m(&[0, 1, 2], &[(0, 1, 1), (1, 2, 1)], &[], &[]);
        let tri = m(&[0, 1, 2], &[(0, 1, 1), (1, 2, 1), (0, 2, 1)], &[], &[]);
        assert_eq!(quotient_doubleprime_monomial(&path), quotient_doubleprime_monomial(&tri));
        assert_eq!(quotient_prime_monomial(&m(&[0], &[(0, 0, 3)], &[], &[])), Monomial::vertex(0));
    }

    #[test]
    fn truncation_signals_dropped_terms() {
        let alg = AlphabetAlgebra::new(Alphabet::equivalent(2), QParam::one(), false).truncated(1);
        let e = Monomial::edge(0, 1);
        assert_eq!(alg.mono_mul(&e, &e), Err(Error::DroppedTerm { degree: 2, bound: 1 }));
        assert!(alg.mul(&LinComb::basis(e.clone()), &LinComb::basis(e)).is_zero());
    }
}
