//! Polynomial oracles: combinatorial operations pushed through the
//! realization compared with direct computations in the alphabet algebras,
//! and the alphabet-level commutative diagrams.

use std::collections::HashMap;
use std::rc::Rc;

use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use crate::coeff::{Coefficient, QParam, Rational};
use crate::error::{Error, Result};
use crate::fg::fg_algebra;
use crate::graph::FeynmanGraph;
use crate::hopf::Tensor2;
use crate::lincomb::{m_1_3_24, LinComb};

use super::algebra::{doubling, doubling_monomial, realize, AlgElement, AlgTensor, AlgTensor3, AlphabetAlgebra, Squaring};
use super::alphabet::Alphabet;
use super::monomial::{Letter, Monomial};

fn need(needed: usize, x: &Alphabet) -> Result<()> {
    if x.len() < needed {
        Err(Error::InconclusiveOracle { needed, available: x.len() })
    } else {
        Ok(())
    }
}

fn edge_degree(g: &FeynmanGraph) -> u32 {
    (g.internal_edge_count() + g.external_count()) as u32
}

/// `Σ c · M_l(X) ⊗ M_r(Y)`.
pub fn realize_tensor(t: &Tensor2<FeynmanGraph>, x: &Alphabet, y: &Alphabet) -> AlgTensor {
    let mut out = LinComb::zero();
    for ((l, r), c) in t {
        let ml = realize(l, x);
        let mr = realize(r, y);
        for (a, ca) in &ml {
            for (b, cb) in &mr {
                out.add_term((a.clone(), b.clone()), &(c * ca) * cb);
            }
        }
    }
    out
}

/// Memoized realizations over one alphabet.
#[derive(Clone, Debug)]
pub struct Realizer {
    pub alphabet: Alphabet,
    cache: HashMap<FeynmanGraph, AlgElement>,
    int_cache: HashMap<FeynmanGraph, Rc<Vec<IntTerm>>>,
    /// Terms on initial segments of the alphabet only.
    segment_cache: HashMap<FeynmanGraph, Rc<Vec<IntTerm>>>,
}

impl Realizer {
    pub fn new(alphabet: Alphabet) -> Self {
        Realizer { alphabet, cache: HashMap::new(), int_cache: HashMap::new(), segment_cache: HashMap::new() }
    }

    pub fn get(&mut self, g: &FeynmanGraph) -> &AlgElement {
        let x = &self.alphabet;
        self.cache.entry(g.clone()).or_insert_with(|| realize(g, x))
    }

    pub fn element(&mut self, a: &LinComb<FeynmanGraph>) -> AlgElement {
        let mut out = LinComb::zero();
        for (g, c) in a {
            out.add_scaled(self.get(g), c);
        }
        out
    }

    /// Both sides of `Θ_X(G·_q H) = M_G(X)·M_H(X)`, with `q` formal.
    pub fn product_sides(&mut self, g: &FeynmanGraph, h: &FeynmanGraph) -> Result<(AlgElement, AlgElement)> {
        if g.is_ordered() != h.is_ordered() {
            return Err(Error::ModeMismatch);
        }
        need(g.n() + h.n(), &self.alphabet)?;
        let comb = fg_algebra(g.is_ordered(), QParam::Formal).product_basis(g, h);
        let lhs = self.element(&comb);
        let alg = AlphabetAlgebra::new(self.alphabet.clone(), QParam::Formal, g.is_ordered())
            .truncated(edge_degree(g) + edge_degree(h));
        let mg = self.get(g).clone();
        let rhs = alg.mul(&mg, self.get(h));
        Ok((lhs, rhs))
    }

    fn int_terms(&mut self, g: &FeynmanGraph, segments_only: bool) -> Rc<Vec<IntTerm>> {
        let cache = if segments_only { &mut self.segment_cache } else { &mut self.int_cache };
        if let Some(v) = cache.get(g) {
            return v.clone();
        }
        let v: Vec<IntTerm> = realize(g, &self.alphabet)
            .iter()
            .map(|(m, c)| {
                let mask = m.verts.iter().fold(0u64, |acc, &l| acc | 1 << l);
                (m.clone(), mask, small_int(&c.eval(&Rational::zero())))
            })
            .filter(|t| !segments_only || is_segment(t.1))
            .collect();
        let v = Rc::new(v);
        cache.insert(g.clone(), v.clone());
        v
    }

    /// The product identity at each of the given values of `q`. Both sides are
    /// accumulated as integer polynomials in `q` per monomial, then evaluated
    /// exactly at every `q`.
    pub fn check_product(&mut self, g: &FeynmanGraph, h: &FeynmanGraph, q_values: &[Rational]) -> Result<bool> {
        if g.is_ordered() != h.is_ordered() {
            return Err(Error::ModeMismatch);
        }
        need(g.n() + h.n(), &self.alphabet)?;
        // With a single class every letter permutation fixes both sides, so
        // comparing on monomials whose letters form an initial segment suffices.
        let symmetric = self.alphabet.classes() <= 1 && self.alphabet.len() < 64;
        let keep = |mask: u64| !symmetric || is_segment(mask);
        let mut lhs: HashMap<Monomial, QPoly> = HashMap::new();
        let comb = fg_algebra(g.is_ordered(), QParam::Formal).product_basis(g, h);
        for (k, c) in &comb {
            for (m, _, cnt) in self.int_terms(k, symmetric).iter() {
                let slot = lhs.entry(m.clone()).or_insert([0; QPOLY_LEN]);
                for (e, r) in c.terms() {
                    slot[*e as usize] += cnt * small_int(r);
                }
            }
        }
        let word = g.is_ordered();
        let (mg, mh) = (self.int_terms(g, false), self.int_terms(h, false));
        let mut rhs: HashMap<Monomial, QPoly> = HashMap::new();
        for (a, ma, ca) in mg.iter() {
            for (b, mb, cb) in mh.iter() {
                if !keep(ma | mb) {
                    continue;
                }
                let (k, m) = a.mul(b, word);
                rhs.entry(m).or_insert([0; QPOLY_LEN])[k as usize] += ca * cb;
            }
        }
        let points: Vec<(i128, i128)> = q_values.iter().map(|q| (small_int128(q.numer()), small_int128(q.denom()))).collect();
        let eval = |v: &QPoly, (p, d): (i128, i128)| -> i128 {
            // d^{deg} · Σ v_k (p/d)^k
            let deg = QPOLY_LEN - 1;
            (0..QPOLY_LEN).map(|k| v[k] as i128 * p.pow(k as u32) * d.pow((deg - k) as u32)).sum()
        };
        let zero = [0; QPOLY_LEN];
        for m in lhs.keys().chain(rhs.keys()) {
            let l = lhs.get(m).unwrap_or(&zero);
            let r = rhs.get(m).unwrap_or(&zero);
            if points.iter().any(|&pt| eval(l, pt) != eval(r, pt)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn is_segment(mask: u64) -> bool {
    mask & (mask + 1) == 0
}

/// A monomial, its vertex letters as a bit set, and an integer coefficient.
type IntTerm = (Monomial, u64, i64);

/// Integer polynomial in `q`; shared vertex counts stay below 10.
type QPoly = [i64; QPOLY_LEN];
const QPOLY_LEN: usize = 10;

fn small_int(r: &Rational) -> i64 {
    assert!(r.is_integer(), "integer coefficient expected");
    r.to_integer().to_i64().expect("coefficient fits in i64")
}

fn small_int128(n: &num_bigint::BigInt) -> i128 {
    n.to_i128().expect("q fits in i128")
}

pub fn oracle_check_product(g: &FeynmanGraph, h: &FeynmanGraph, x: &Alphabet, q_values: &[Rational]) -> Result<bool> {
    Realizer::new(x.clone()).check_product(g, h, q_values)
}

/// Both sides of `Δ_{X,Y}(M_G(X⊔Y)) = Σ M_{G|V∖A}(X) ⊗ M_{G|A}(Y)`.
pub fn coproduct_sides(g: &FeynmanGraph, x: &Alphabet, y: &Alphabet) -> Result<(AlgTensor, AlgTensor)> {
    need(g.n(), x)?;
    need(g.n(), y)?;
    let comb = fg_algebra(g.is_ordered(), QParam::zero()).coproduct_basis(g);
    let lhs = realize_tensor(&comb, x, y);
    let rhs = doubling(&realize(g, &x.union(y)), x.len())?;
    Ok((lhs, rhs))
}

#[allow(non_snake_case)]
pub fn oracle_check_Delta(g: &FeynmanGraph, x: &Alphabet, y: &Alphabet) -> Result<bool> {
    let (l, r) = coproduct_sides(g, x, y)?;
    Ok(l == r)
}

/// Both sides of `δ_{X,Y}(M_G(XY)) = Σ_{∼∈CE(G)} M_{ψ_{q1}(G/∼)}(X) ⊗ M_{ψ_{q2}(G|∼)}(Y)`.
pub fn internal_coproduct_sides(
    g: &FeynmanGraph,
    x: &Alphabet,
    y: &Alphabet,
    q1: &Rational,
    q2: &Rational,
) -> Result<(AlgTensor, AlgTensor)> {
    need(g.n(), x)?;
    need(g.n(), y)?;
    let alg = fg_algebra(g.is_ordered(), QParam::value(q1 * q2));
    let comb = alg.coaction_basis(g, &QParam::value(q1.clone()), &QParam::value(q2.clone()))?;
    let lhs = realize_tensor(&comb, x, y);
    let sq = Squaring { x: x.clone(), y: y.clone(), q1: q1.clone(), q2: q2.clone(), word: g.is_ordered() };
    let rhs = sq.apply(&realize(g, &x.product(y)), &(q1 * q2))?;
    Ok((lhs, rhs))
}

pub fn oracle_check_delta(g: &FeynmanGraph, x: &Alphabet, y: &Alphabet, q1: &Rational, q2: &Rational) -> Result<bool> {
    let (l, r) = internal_coproduct_sides(g, x, y, q1, q2)?;
    Ok(l == r)
}

/// The generators `x_i`, `x_{i,j}` (`i ≤ j`), `x_{-inf,j}`, `x_{i,inf}` of `A_q(X)`.
pub fn generators(x: &Alphabet) -> Vec<Monomial> {
    let m = x.len() as Letter;
    let mut out: Vec<Monomial> = (0..m).map(Monomial::vertex).collect();
    for i in 0..m {
        for j in 0..m {
            if x.le(i as usize, j as usize) {
                out.push(Monomial::edge(i, j));
            }
        }
    }
    out.extend((0..m).map(Monomial::ext_in));
    out.extend((0..m).map(Monomial::ext_out));
    out
}

/// A random combination of up to four products of at most `max_factors`
/// generators, with small integer coefficients.
pub fn random_element<R: Rng>(alg: &AlphabetAlgebra, max_factors: usize, rng: &mut R) -> AlgElement {
    let gens = generators(&alg.alphabet);
    let mut out = LinComb::zero();
    if gens.is_empty() {
        return LinComb::basis(Monomial::one());
    }
    for _ in 0..rng.gen_range(1..=4) {
        let mut term = LinComb::basis(Monomial::one());
        for _ in 0..rng.gen_range(0..=max_factors) {
            let g = gens[rng.gen_range(0..gens.len())].clone();
            term = alg.mul(&term, &LinComb::basis(g));
        }
        let c = Coefficient::from_int(rng.gen_range(-3..=3));
        out.add_scaled(&term, &c);
    }
    out
}

fn split_first(t: &AlgTensor, x_len: usize) -> Result<AlgTensor3> {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        let (l, r) = doubling_monomial(a, x_len)?;
        out.add_term((l, r, b.clone()), c.clone());
    }
    Ok(out)
}

fn split_second(t: &AlgTensor, x_len: usize) -> Result<AlgTensor3> {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        let (l, r) = doubling_monomial(b, x_len)?;
        out.add_term((a.clone(), l, r), c.clone());
    }
    Ok(out)
}

/// `(Δ_{X,Y}⊗Id)∘Δ_{X⊔Y,Z} = (Id⊗Δ_{Y,Z})∘Δ_{X,Y⊔Z}` on an element of `A_q(X⊔Y⊔Z)`.
pub fn doubling_coassociative_on(a: &AlgElement, x: &Alphabet, y: &Alphabet) -> Result<bool> {
    let (nx, ny) = (x.len(), y.len());
    let lhs = split_first(&doubling(a, nx + ny)?, nx)?;
    let rhs = split_second(&doubling(a, nx)?, ny)?;
    Ok(lhs == rhs)
}

fn square_first(t: &AlgTensor, sq: &Squaring) -> AlgTensor3 {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        let (r, l, m) = sq.apply_monomial(a);
        if !r.is_zero() {
            out.add_term((l, m, b.clone()), c.scale(&r));
        }
    }
    out
}

fn square_second(t: &AlgTensor, sq: &Squaring) -> AlgTensor3 {
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        let (r, m, l) = sq.apply_monomial(b);
        if !r.is_zero() {
            out.add_term((a.clone(), m, l), c.scale(&r));
        }
    }
    out
}

/// Parameters of the three-alphabet diagrams.
#[derive(Clone, Debug)]
pub struct Triple {
    pub x: Alphabet,
    pub y: Alphabet,
    pub z: Alphabet,
    pub word: bool,
}

impl Triple {
    /// `(δ_{X,Y}⊗Id)∘δ_{XY,Z} = (Id⊗δ_{Y,Z})∘δ_{X,YZ}` on an element of
    /// `A_{q1 q2 q3}(XYZ)`.
    pub fn squaring_coassociative_on(&self, a: &AlgElement, q: [&Rational; 3]) -> Result<bool> {
        let [q1, q2, q3] = q;
        let total = &(q1 * q2) * q3;
        let xy = self.x.product(&self.y);
        let yz = self.y.product(&self.z);
        let outer_l = Squaring { x: xy, y: self.z.clone(), q1: q1 * q2, q2: q3.clone(), word: self.word };
        let inner_l = Squaring { x: self.x.clone(), y: self.y.clone(), q1: q1.clone(), q2: q2.clone(), word: self.word };
        let lhs = square_first(&outer_l.apply(a, &total)?, &inner_l);
        let outer_r = Squaring { x: self.x.clone(), y: yz, q1: q1.clone(), q2: q2 * q3, word: self.word };
        let inner_r = Squaring { x: self.y.clone(), y: self.z.clone(), q1: q2.clone(), q2: q3.clone(), word: self.word };
        let rhs = square_second(&outer_r.apply(a, &total)?, &inner_r);
        Ok(lhs == rhs)
    }

    /// `(Δ_{X,Y}⊗Id)∘δ_{X⊔Y,Z} = m_{1,3,24}∘(δ_{X,Z}⊗δ_{Y,Z})∘Δ_{XZ,YZ}` on an
    /// element of `A_{q1 q2}((X⊔Y)Z)`, commutative algebras only.
    pub fn coaction_diagram_on(&self, a: &AlgElement, q1: &Rational, q2: &Rational) -> Result<bool> {
        if self.word {
            return Err(Error::Unsupported("the mixed coaction diagram is checked for commutative algebras".into()));
        }
        let q = q1 * q2;
        let xy = self.x.union(&self.y);
        let sq = Squaring { x: xy, y: self.z.clone(), q1: q1.clone(), q2: q2.clone(), word: false };
        let lhs = split_first(&sq.apply(a, &q)?, self.x.len())?;

        let xz_len = self.x.len() * self.z.len();
        let sx = Squaring { x: self.x.clone(), y: self.z.clone(), q1: q1.clone(), q2: q2.clone(), word: false };
        let sy = Squaring { x: self.y.clone(), y: self.z.clone(), q1: q1.clone(), q2: q2.clone(), word: false };
        let mut four = LinComb::zero();
        for ((l, r), c) in &doubling(a, xz_len)? {
            let (cl, xl, zl) = sx.apply_monomial(l);
            let (cr, yr, zr) = sy.apply_monomial(r);
            let k = c.scale(&(cl * cr));
            if !k.is_zero() {
                four.add_term((xl, zl, yr, zr), k);
            }
        }
        let zalg = AlphabetAlgebra::new(self.z.clone(), QParam::value(q2.clone()), false);
        let rhs = m_1_3_24(&four, |u, v| match zalg.mono_mul(u, v) {
            Ok((r, m)) => LinComb::term(m, r),
            Err(_) => LinComb::zero(),
        });
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn qs() -> Vec<Rational> {
        vec![int(0), int(1), int(2), rational(1, 2)]
    }

    #[test]
    fn product_oracle_on_dots() {
        let dot = FeynmanGraph::vertex(0, 0, false);
        assert!(oracle_check_product(&dot, &dot, &Alphabet::equivalent(3), &qs()).unwrap());
        assert_eq!(
            oracle_check_product(&dot, &dot, &Alphabet::equivalent(1), &qs()),
            Err(Error::InconclusiveOracle { needed: 2, available: 1 })
        );
    }

    #[test]
    fn coproduct_oracle_on_edge() {
        let e = FeynmanGraph::from_edges(2, &[(0, 1)], false).unwrap();
        assert!(oracle_check_Delta(&e, &Alphabet::equivalent(2), &Alphabet::equivalent(2)).unwrap());
    }

    #[test]
    fn diagrams_on_generators() {
        let t = Triple { x: Alphabet::new(&[0, 1]), y: Alphabet::equivalent(2), z: Alphabet::new(&[1, 0]), word: false };
        let xyz = t.x.union(&t.y).union(&t.z);
        for g in generators(&xyz) {
            assert!(doubling_coassociative_on(&LinComb::basis(g), &t.x, &t.y).unwrap());
        }
        let (q1, q2, q3) = (int(2), rational(1, 2), int(3));
        for g in generators(&t.x.product(&t.y).product(&t.z)) {
            assert!(t.squaring_coassociative_on(&LinComb::basis(g), [&q1, &q2, &q3]).unwrap());
        }
        for g in generators(&t.x.union(&t.y).product(&t.z)) {
            assert!(t.coaction_diagram_on(&LinComb::basis(g), &q1, &q2).unwrap());
        }
    }

    #[test]
    fn diagrams_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = Triple { x: Alphabet::equivalent(2), y: Alphabet::ordered(2), z: Alphabet::equivalent(1), word: false };
        let (q1, q2) = (int(2), int(3));
        let alg = AlphabetAlgebra::new(t.x.union(&t.y).product(&t.z), QParam::value(&q1 * &q2), false);
        for _ in 0..20 {
            let a = random_element(&alg, 3, &mut rng);
            assert!(t.coaction_diagram_on(&a, &q1, &q2).unwrap());
        }
    }
}
