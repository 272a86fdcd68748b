//! Brute-force canonical labeling for small labeled structures.
//!
//! The canonical form of a structure is the minimum, over relabelings that
//! sort vertices by an isomorphism invariant, of the relabeled structure.
//! Restricting to invariant-sorted relabelings keeps the minimum canonical
//! because isomorphisms preserve the invariant.

use crate::error::{Error, Result};

/// Hard cap on vertex count for permutation enumeration.
pub const MAX_VERTICES: usize = 9;

pub fn check_budget(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::VertexBudgetExceeded { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

/// Advances `v` to the next permutation in lexicographic order.
pub fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Visits every permutation of `0..n`, in lexicographic order.
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        if !next_permutation(&mut p) {
            break;
        }
    }
}

/// Visits every relabeling `perm` (with `perm[new] = old`) that lists the
/// vertices in nondecreasing invariant order.
pub fn for_each_sorted_relabeling<I: Ord, F: FnMut(&[usize])>(invariants: &[I], mut f: F) {
    let n = invariants.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariants[a].cmp(&invariants[b]));
    // cells of equal invariant, as ranges into `order`
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || invariants[order[i]] != invariants[order[start]] {
            if i > start {
                cells.push((start, i));
            }
            start = i;
        }
    }
    // each cell permutes positions within itself; odometer over cells
    let mut local: Vec<Vec<usize>> = cells.iter().map(|&(s, e)| (0..e - s).collect()).collect();
    let mut perm = vec![0usize; n];
    loop {
        for (c, &(s, _)) in cells.iter().enumerate() {
            for (k, &l) in local[c].iter().enumerate() {
                perm[s + k] = order[s + l];
            }
        }
        f(&perm);
        let mut advanced = false;
        for c in (0..cells.len()).rev() {
            if next_permutation(&mut local[c]) {
                advanced = true;
                break;
            }
            local[c].sort_unstable();
        }
        if !advanced {
            break;
        }
    }
}

/// Minimum of `build(perm)` over invariant-sorted relabelings.
pub fn canonical_min<I: Ord, T: Ord, F: FnMut(&[usize]) -> T>(invariants: &[I], mut build: F) -> T {
    let mut best: Option<T> = None;
    for_each_sorted_relabeling(invariants, |p| {
        let cand = build(p);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    });
    best.expect("at least one relabeling")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        let mut c = 0;
        for_each_permutation(4, |_| c += 1);
        assert_eq!(c, 24);
        let mut c = 0;
        for_each_permutation(0, |_| c += 1);
        assert_eq!(c, 1);
    }

    #[test]
    fn sorted_relabelings_respect_cells() {
        let inv = [1, 0, 1, 0, 2];
        let mut seen = Vec::new();
        for_each_sorted_relabeling(&inv, |p| seen.push(p.to_vec()));
        assert_eq!(seen.len(), 4);
        for p in &seen {
            let invs: Vec<i32> = p.iter().map(|&v| inv[v]).collect();
            assert_eq!(invs, vec![0, 0, 1, 1, 2]);
        }
    }

    #[test]
    fn budget() {
        assert!(check_budget(9).is_ok());
        assert_eq!(check_budget(10), Err(Error::VertexBudgetExceeded { n: 10, max: 9 }));
    }
}
