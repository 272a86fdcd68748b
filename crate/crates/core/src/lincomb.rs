//! Finite formal linear combinations over canonical basis keys.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use serde_json::{json, Value};

use crate::coeff::{Coefficient, Rational};

/// A finite linear combination `sum c_k * k` with nonzero coefficients.
///
/// Keys are expected to be canonical representatives (isoclass keys), so two
/// isomorphic objects never occupy distinct entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Coefficient>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Coefficient::one())
    }

    pub fn term(key: K, c: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Coefficient)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Adds `c * other` into `self`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::one());
        out
    }

    pub fn sub(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Coefficient) -> LinComb<K> {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> LinComb<K> {
        self.scale(&Coefficient::from_int(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Coefficient {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Coefficient> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Coefficient> {
        self.terms.keys()
    }

    /// Extends a basis-level map linearly.
    pub fn map_linear<K2: Ord + Clone, F>(&self, mut f: F) -> LinComb<K2>
    where
        F: FnMut(&K) -> LinComb<K2>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a key-to-key map, summing collisions.
    pub fn map_keys<K2: Ord + Clone, F>(&self, mut f: F) -> LinComb<K2>
    where
        F: FnMut(&K) -> K2,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> LinComb<K> {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient (e.g. evaluation at a rational).
    pub fn map_coeffs<F: FnMut(&Coefficient) -> Coefficient>(&self, mut f: F) -> LinComb<K> {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Specializes the formal parameter to `r` in every coefficient.
    pub fn eval_q(&self, r: &Rational) -> LinComb<K> {
        self.map_coeffs(|c| Coefficient::constant(c.eval(r)))
    }

    pub fn to_json_with<F: Fn(&K) -> Value>(&self, key: F) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| json!({"coeff": c.to_json(), "key": key(k)}))
                .collect(),
        )
    }

    pub fn total_coeff_sum(&self) -> Coefficient {
        self.terms.values().fold(Coefficient::zero(), |acc, c| &acc + c)
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Coefficient);
    type IntoIter = btree_map::IntoIter<K, Coefficient>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Coefficient);
    type IntoIter = btree_map::Iter<'a, K, Coefficient>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{k:?}")?;
            } else {
                write!(f, "({c})·{k:?}")?;
            }
        }
        Ok(())
    }
}

/// `sum_a sum_b c_a c_b f(a, b)`.
pub fn bilinear<K1, K2, K3, F>(a: &LinComb<K1>, b: &LinComb<K2>, mut f: F) -> LinComb<K3>
where
    K1: Ord + Clone,
    K2: Ord + Clone,
    K3: Ord + Clone,
    F: FnMut(&K1, &K2) -> LinComb<K3>,
{
    let mut out = LinComb::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            let c = cx * cy;
            if !c.is_zero() {
                out.add_scaled(&f(x, y), &c);
            }
        }
    }
    out
}

/// `a ⊗ b` as a combination of key pairs.
pub fn tensor<K1: Ord + Clone, K2: Ord + Clone>(a: &LinComb<K1>, b: &LinComb<K2>) -> LinComb<(K1, K2)> {
    bilinear(a, b, |x, y| LinComb::basis((x.clone(), y.clone())))
}

/// Applies `f ⊗ g` to a two-leg tensor.
pub fn map_tensor2<A, B, C, D, F, G>(t: &LinComb<(A, B)>, mut f: F, mut g: G) -> LinComb<(C, D)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
    F: FnMut(&A) -> LinComb<C>,
    G: FnMut(&B) -> LinComb<D>,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in t {
        out.add_scaled(&tensor(&f(a), &g(b)), c);
    }
    out
}

/// Sends `x ⊗ y ⊗ z ⊗ t` to `x ⊗ z ⊗ (y·t)`, extended linearly.
pub fn m_1_3_24<A, B, C, F>(t: &LinComb<(A, B, C, B)>, mut mul: F) -> LinComb<(A, C, B)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&B, &B) -> LinComb<B>,
{
    let mut out = LinComb::zero();
    for ((x, y, z, w), c) in t {
        let prod = mul(y, w);
        for (p, cp) in &prod {
            out.add_term((x.clone(), z.clone(), p.clone()), cp * c);
        }
    }
    out
}

/// Pairs a two-leg combination with another, leg by leg: `(a⊗b)(c⊗d) = ac ⊗ bd`.
pub fn tensor2_product<A, B, F, G>(
    s: &LinComb<(A, B)>,
    t: &LinComb<(A, B)>,
    mut left: F,
    mut right: G,
) -> LinComb<(A, B)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    F: FnMut(&A, &A) -> LinComb<A>,
    G: FnMut(&B, &B) -> LinComb<B>,
{
    bilinear(s, t, |(a, b), (c, d)| tensor(&left(a, c), &right(b, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;
    use proptest::prelude::*;

    fn lc(terms: &[(u8, i64)]) -> LinComb<u8> {
        LinComb::from_terms(terms.iter().map(|&(k, c)| (k, Coefficient::from_int(c))))
    }

    #[test]
    fn add_examples() {
        let a = lc(&[(1, 2), (3, 1)]);
        assert_eq!(a.add(&LinComb::zero()), a);
        assert!(lc(&[(7, 1)]).add(&lc(&[(7, -1)])).is_zero());
        let s = LinComb::term(5u8, Coefficient::q()).add(&LinComb::basis(5u8));
        assert_eq!(s.coeff(&5), &Coefficient::q() + &Coefficient::one());
    }

    #[test]
    fn bilinear_examples() {
        let f = |x: &u8, y: &u8| LinComb::basis((*x, *y));
        let empty: LinComb<u8> = LinComb::zero();
        assert!(bilinear(&empty, &lc(&[(1, 1)]), f).is_zero());
        assert_eq!(bilinear(&lc(&[(1, 1)]), &lc(&[(2, 1)]), f), LinComb::basis((1u8, 2u8)));
        let a = LinComb::term(1u8, Coefficient::from_int(2));
        let b = LinComb::term(2u8, Coefficient::q());
        assert_eq!(
            bilinear(&a, &b, f),
            LinComb::term((1u8, 2u8), Coefficient::q().scale(&int(2)))
        );
    }

    // Disjoint union on multisets encoded as sorted vectors.
    fn union(a: &Vec<u8>, b: &Vec<u8>) -> LinComb<Vec<u8>> {
        let mut v = a.clone();
        v.extend(b.iter().copied());
        v.sort();
        LinComb::basis(v)
    }

    #[test]
    fn m_1_3_24_examples() {
        let one: Vec<u8> = vec![];
        let x = vec![1u8];
        let y = vec![2u8];
        let t = LinComb::basis((x.clone(), one.clone(), y.clone(), one.clone()));
        assert_eq!(m_1_3_24(&t, union), LinComb::basis((x.clone(), y.clone(), one.clone())));

        let z = vec![3u8];
        let w = vec![4u8];
        let t = LinComb::basis((x.clone(), y.clone(), z.clone(), w.clone()));
        assert_eq!(m_1_3_24(&t, union), LinComb::basis((x.clone(), z.clone(), vec![2u8, 4])));

        // two-term input: 2·(x⊗y⊗z⊗w) + q·(y⊗x⊗w⊗z), expanded by hand
        let mut t = LinComb::zero();
        t.add_term((x.clone(), y.clone(), z.clone(), w.clone()), Coefficient::from_int(2));
        t.add_term((y.clone(), x.clone(), w.clone(), z.clone()), Coefficient::q());
        let mut expected = LinComb::zero();
        expected.add_term((x.clone(), z.clone(), vec![2u8, 4]), Coefficient::from_int(2));
        expected.add_term((y.clone(), w.clone(), vec![1u8, 3]), Coefficient::q());
        assert_eq!(m_1_3_24(&t, union), expected);
    }

    fn arb_lc() -> impl Strategy<Value = LinComb<u8>> {
        prop::collection::vec((0u8..6, -3i64..4), 0..6).prop_map(|v| lc(&v))
    }

    proptest! {
        #[test]
        fn bilinear_matches_double_loop(a in arb_lc(), b in arb_lc()) {
            let f = |x: &u8, y: &u8| lc(&[(x.wrapping_add(*y) % 5, 1), (x ^ y, 2)]);
            let fast = bilinear(&a, &b, f);
            let mut naive = LinComb::zero();
            for (x, cx) in a.iter() {
                for (y, cy) in b.iter() {
                    for (k, ck) in f(x, y).iter() {
                        naive.add_term(*k, &(cx * cy) * ck);
                    }
                }
            }
            prop_assert_eq!(fast, naive);
        }

        #[test]
        fn addition_laws(a in arb_lc(), b in arb_lc(), c in arb_lc()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            let two = Coefficient::from_int(2);
            prop_assert_eq!(a.add(&b).scale(&two), a.scale(&two).add(&b.scale(&two)));
            prop_assert!(a.sub(&a).is_zero());
        }
    }
}
