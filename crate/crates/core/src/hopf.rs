//! The structure shared by every graph-like Hopf algebra here: a deformed
//! gluing product, the ideal coproduct, its counit and antipode, and the
//! axiom checks run against them.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::coeff::{Coefficient, QParam};
use crate::lincomb::{bilinear, map_tensor2, tensor2_product, LinComb};

pub type Tensor2<K> = LinComb<(K, K)>;
pub type Tensor3<K> = LinComb<(K, K, K)>;

/// A family of combinatorial objects closed under gluing and restriction to
/// ideals.
pub trait Family {
    type Obj: Clone + Ord + Hash + Debug;

    fn ordered(&self) -> bool;

    /// The empty object, unit of the algebra.
    fn unit(&self) -> Self::Obj;

    fn size(&self, o: &Self::Obj) -> usize;

    /// Canonical representative, or `None` when the object is sent to zero
    /// (the no-cycle and poset quotients).
    fn normalize(&self, o: &Self::Obj) -> Option<Self::Obj>;

    /// All gluings of `a` onto `b`, as `(|A|, result)` before normalization.
    fn gluings(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<(u32, Self::Obj)>;

    /// `(o|V∖A, o|A)` for every ideal `A`, before normalization.
    fn splits(&self, o: &Self::Obj) -> Vec<(Self::Obj, Self::Obj)>;
}

/// A family together with a value of the product parameter.
pub struct Hopf<F: Family> {
    pub family: F,
    pub q: QParam,
    antipode_memo: RefCell<HashMap<F::Obj, LinComb<F::Obj>>>,
}

impl<F: Family> Hopf<F> {
    pub fn new(family: F, q: QParam) -> Self {
        Hopf { family, q, antipode_memo: RefCell::new(HashMap::new()) }
    }

    pub fn basis(&self, o: &F::Obj) -> LinComb<F::Obj> {
        match self.family.normalize(o) {
            Some(c) => LinComb::basis(c),
            None => LinComb::zero(),
        }
    }

    pub fn one(&self) -> LinComb<F::Obj> {
        LinComb::basis(self.family.unit())
    }

    pub fn product_basis(&self, a: &F::Obj, b: &F::Obj) -> LinComb<F::Obj> {
        let mut out = LinComb::zero();
        for (k, g) in self.family.gluings(a, b) {
            if let Some(c) = self.family.normalize(&g) {
                out.add_term(c, self.q.pow(k));
            }
        }
        out
    }

    pub fn product(&self, a: &LinComb<F::Obj>, b: &LinComb<F::Obj>) -> LinComb<F::Obj> {
        bilinear(a, b, |x, y| self.product_basis(x, y))
    }

    pub fn coproduct_basis(&self, o: &F::Obj) -> Tensor2<F::Obj> {
        let mut out = LinComb::zero();
        for (l, r) in self.family.splits(o) {
            if let (Some(l), Some(r)) = (self.family.normalize(&l), self.family.normalize(&r)) {
                out.add_term((l, r), Coefficient::one());
            }
        }
        out
    }

    pub fn coproduct(&self, a: &LinComb<F::Obj>) -> Tensor2<F::Obj> {
        a.map_linear(|o| self.coproduct_basis(o))
    }

    /// Coefficient of the unit.
    pub fn counit(&self, a: &LinComb<F::Obj>) -> Coefficient {
        a.coeff(&self.family.unit())
    }

    pub fn antipode_basis(&self, o: &F::Obj) -> LinComb<F::Obj> {
        if let Some(s) = self.antipode_memo.borrow().get(o) {
            return s.clone();
        }
        let unit = self.family.unit();
        let s = if *o == unit {
            self.one()
        } else {
            // S(G) = -sum over nonempty ideals A of S(G|V∖A) G|A
            let mut acc = LinComb::zero();
            for ((l, r), c) in &self.coproduct_basis(o) {
                if *r == unit {
                    continue;
                }
                let sl = self.antipode_basis(l);
                acc.add_scaled(&self.product(&sl, &LinComb::basis(r.clone())), c);
            }
            acc.neg()
        };
        self.antipode_memo.borrow_mut().insert(o.clone(), s.clone());
        s
    }

    pub fn antipode(&self, a: &LinComb<F::Obj>) -> LinComb<F::Obj> {
        a.map_linear(|o| self.antipode_basis(o))
    }

    /// Leg-wise product on two-leg tensors.
    pub fn product2(&self, s: &Tensor2<F::Obj>, t: &Tensor2<F::Obj>) -> Tensor2<F::Obj> {
        tensor2_product(s, t, |a, b| self.product_basis(a, b), |a, b| self.product_basis(a, b))
    }

    pub fn mul(&self, t: &Tensor2<F::Obj>) -> LinComb<F::Obj> {
        let mut out = LinComb::zero();
        for ((a, b), c) in t {
            out.add_scaled(&self.product_basis(a, b), c);
        }
        out
    }

    pub fn coproduct_left(&self, t: &Tensor2<F::Obj>) -> Tensor3<F::Obj> {
        let mut out = LinComb::zero();
        for ((a, b), c) in t {
            for ((x, y), d) in &self.coproduct_basis(a) {
                out.add_term((x.clone(), y.clone(), b.clone()), c * d);
            }
        }
        out
    }

    pub fn coproduct_right(&self, t: &Tensor2<F::Obj>) -> Tensor3<F::Obj> {
        let mut out = LinComb::zero();
        for ((a, b), c) in t {
            for ((y, z), d) in &self.coproduct_basis(b) {
                out.add_term((a.clone(), y.clone(), z.clone()), c * d);
            }
        }
        out
    }

    pub fn is_coassociative_on(&self, a: &LinComb<F::Obj>) -> bool {
        let d = self.coproduct(a);
        self.coproduct_left(&d) == self.coproduct_right(&d)
    }

    pub fn is_compatible_on(&self, a: &LinComb<F::Obj>, b: &LinComb<F::Obj>) -> bool {
        self.coproduct(&self.product(a, b)) == self.product2(&self.coproduct(a), &self.coproduct(b))
    }

    pub fn is_associative_on(&self, a: &LinComb<F::Obj>, b: &LinComb<F::Obj>, c: &LinComb<F::Obj>) -> bool {
        self.product(&self.product(a, b), c) == self.product(a, &self.product(b, c))
    }

    pub fn is_commutative_on(&self, a: &LinComb<F::Obj>, b: &LinComb<F::Obj>) -> bool {
        self.product(a, b) == self.product(b, a)
    }

    /// `(ε⊗Id)Δ = Id = (Id⊗ε)Δ`, and the unit laws of the product.
    pub fn counit_laws_hold_on(&self, a: &LinComb<F::Obj>) -> bool {
        let d = self.coproduct(a);
        let unit = self.family.unit();
        let left = d.filter(|(l, _)| *l == unit).map_keys(|(_, r)| r.clone());
        let right = d.filter(|(_, r)| *r == unit).map_keys(|(l, _)| l.clone());
        let one = self.one();
        left == *a && right == *a && self.product(&one, a) == *a && self.product(a, &one) == *a
    }

    /// `m(S⊗Id)Δ = uε = m(Id⊗S)Δ`.
    pub fn antipode_law_holds_on(&self, a: &LinComb<F::Obj>) -> bool {
        let d = self.coproduct(a);
        let expected = self.one().scale(&self.counit(a));
        let left = self.mul(&map_tensor2(&d, |x| self.antipode_basis(x), |y| LinComb::basis(y.clone())));
        let right = self.mul(&map_tensor2(&d, |x| LinComb::basis(x.clone()), |y| self.antipode_basis(y)));
        left == expected && right == expected
    }

    pub fn unit_coproduct_is_trivial(&self) -> bool {
        let u = self.family.unit();
        self.coproduct(&self.one()) == LinComb::basis((u.clone(), u))
    }
}
