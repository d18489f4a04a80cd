//! Similarity classes, modules and primality.

use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Classes of `subset` under "same neighbourhood outside `subset`".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimilarityPartition {
    pub subset: Vec<usize>,
    /// Each class sorted; classes ordered by their smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl SimilarityPartition {
    pub fn mu(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&v))
    }
}

/// Partition `subset` by neighbourhoods outside it.
pub fn similarity_partition(g: &Graph, subset: &[usize]) -> Result<SimilarityPartition> {
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if let Some(&bad) = subset.iter().find(|&&v| v >= g.n()) {
        return Err(Error::UnknownVertex(bad));
    }
    let inside = BitSet::from_iter_with_capacity(g.n(), subset.iter().copied());
    let mut keys: Vec<(BitSet, Vec<usize>)> = Vec::new();
    for &v in &subset {
        let mut out = g.neighbors(v).clone();
        out.difference_with(&inside);
        match keys.iter_mut().find(|(k, _)| k.same_elements(&out)) {
            Some((_, class)) => class.push(v),
            None => keys.push((out, vec![v])),
        }
    }
    Ok(SimilarityPartition { subset, classes: keys.into_iter().map(|(_, c)| c).collect() })
}

/// Smallest module containing `seed`: repeatedly absorb vertices that see
/// part, but not all, of the current set.
pub fn module_closure(g: &Graph, seed: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut inside = BitSet::from_iter_with_capacity(n, seed.iter().copied());
    loop {
        let members: Vec<usize> = inside.iter().collect();
        let splitter = (0..n).find(|&z| {
            !inside.contains(z) && {
                let k = g.neighbors(z).intersection_len(&inside);
                k != 0 && k != members.len()
            }
        });
        match splitter {
            Some(z) => inside.insert(z),
            None => return members,
        }
    }
}

/// A nontrivial module (at least two vertices, not all of them) of minimum
/// size, ties broken by the lexicographically first generating pair.
pub fn nontrivial_module(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for a in 0..n {
        for b in a + 1..n {
            let m = module_closure(g, &[a, b]);
            if m.len() < n && best.as_ref().is_none_or(|cur| m.len() < cur.len()) {
                best = Some(m);
            }
        }
    }
    best
}

/// True iff every module is trivial.
pub fn is_prime(g: &Graph) -> bool {
    nontrivial_module(g).is_none()
}
