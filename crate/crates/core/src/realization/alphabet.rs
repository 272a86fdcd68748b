//! Finite alphabets with a total quasi-order, encoded by integer ranks.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Letters `0..m`; `i ≤ j` iff `rank[i] <= rank[j]`. Ranks are kept dense
/// (`0..classes`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    rank: Vec<u32>,
}

impl Alphabet {
    /// Normalizes arbitrary ranks to dense ones, preserving the order.
    pub fn new(ranks: &[u32]) -> Self {
        let mut distinct: Vec<u32> = ranks.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let rank = ranks.iter().map(|r| distinct.binary_search(r).unwrap() as u32).collect();
        Alphabet { rank }
    }

    /// `m` pairwise equivalent letters.
    pub fn equivalent(m: usize) -> Self {
        Alphabet { rank: vec![0; m] }
    }

    /// `m` letters in a strict chain.
    pub fn ordered(m: usize) -> Self {
        Alphabet { rank: (0..m as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    pub fn classes(&self) -> u32 {
        self.rank.iter().max().map_or(0, |r| r + 1)
    }

    pub fn is_ordered(&self) -> bool {
        self.classes() as usize == self.len()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.rank[i] <= self.rank[j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.rank[i] < self.rank[j]
    }

    pub fn equiv(&self, i: usize, j: usize) -> bool {
        self.rank[i] == self.rank[j]
    }

    /// `X ⊔ Y`: the letters of `y` follow those of `x` and sit above them.
    pub fn union(&self, y: &Alphabet) -> Alphabet {
        let shift = self.classes();
        let rank = self.rank.iter().copied().chain(y.rank.iter().map(|r| r + shift)).collect();
        Alphabet { rank }
    }

    /// `XY`: letter `(i, j)` has index `i * |Y| + j`; order is lexicographic
    /// with the first coordinate compared up to equivalence.
    pub fn product(&self, y: &Alphabet) -> Alphabet {
        let ny = y.classes();
        let mut rank = Vec::with_capacity(self.len() * y.len());
        for &rx in &self.rank {
            for &ry in &y.rank {
                rank.push(rx * ny + ry);
            }
        }
        Alphabet { rank }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(AlphabetJson { m: self.len(), rank: self.rank.clone() }).expect("alphabet json")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let a: AlphabetJson = serde_json::from_value(v.clone())?;
        if a.rank.len() != a.m {
            return Err(Error::AlphabetMismatch(format!("{} ranks for {} letters", a.rank.len(), a.m)));
        }
        Ok(Alphabet::new(&a.rank))
    }
}

#[derive(Serialize, Deserialize)]
struct AlphabetJson {
    m: usize,
    rank: Vec<u32>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_examples() {
        let x = Alphabet::new(&[5, 5, 9]);
        let y = Alphabet::new(&[0, 1]);
        let u = x.union(&y);
        let max_x = (0..3).map(|i| u.rank(i)).max().unwrap();
        let min_y = (3..5).map(|i| u.rank(i)).min().unwrap();
        assert!(max_x < min_y);
        assert_eq!(u.ranks(), &[0, 0, 1, 2, 3]);
    }

    #[test]
    fn union_is_associative() {
        let x = Alphabet::new(&[0, 0]);
        let y = Alphabet::new(&[1, 0]);
        let z = Alphabet::new(&[2, 2, 1]);
        assert_eq!(x.union(&y).union(&z), x.union(&y.union(&z)));
    }

    #[test]
    fn product_distributes_over_union() {
        let x = Alphabet::new(&[0, 1]);
        let y = Alphabet::new(&[0, 0]);
        let z = Alphabet::new(&[1, 0, 1]);
        assert_eq!(x.union(&y).product(&z), x.product(&z).union(&y.product(&z)));
        assert_eq!(x.product(&y).product(&z), x.product(&y.product(&z)));
    }

    #[test]
    fn product_order_is_lexicographic() {
        let x = Alphabet::new(&[0, 0, 1]);
        let y = Alphabet::new(&[0, 1]);
        let p = x.product(&y);
        for (i, j) in (0..3).flat_map(|i| (0..2).map(move |j| (i, j))) {
            for (k, l) in (0..3).flat_map(|i| (0..2).map(move |j| (i, j))) {
                let expected = (x.equiv(i, k) && y.le(j, l)) || x.lt(i, k);
                assert_eq!(p.le(i * 2 + j, k * 2 + l), expected);
            }
        }
    }

    #[test]
    fn json() {
        let a = Alphabet::new(&[3, 1]);
        assert_eq!(a.to_json().to_string(), r#"{"m":2,"rank":[1,0]}"#);
        assert_eq!(Alphabet::from_json(&a.to_json()).unwrap(), a);
    }
}
