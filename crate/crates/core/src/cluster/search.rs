//! Breadth-first exploration of a mutation class up to quiver isomorphism.

use std::collections::{HashSet, VecDeque};

use crate::cluster::canon::{canonical_form, CanonicalForm};
use crate::cluster::quiver::Quiver;
use crate::error::ClusterError;

pub const DEFAULT_MAX_NODES: usize = 50_000;

/// A mutation sequence in application order (first entry applied first), optionally
/// followed by a vertex relabeling.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MutationWord {
    pub steps: Vec<usize>,
    pub permutation: Option<Vec<usize>>,
}

impl MutationWord {
    pub fn new(steps: Vec<usize>) -> Self {
        MutationWord { steps, permutation: None }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty() && self.permutation.is_none()
    }

    pub fn apply(&self, q: &Quiver) -> Result<Quiver, ClusterError> {
        let out = q.mutate_word(&self.steps)?;
        match &self.permutation {
            Some(p) => out.permuted(p),
            None => Ok(out),
        }
    }
}

/// Outcome of a successful search: the quiver reached (in the original labeling) and how.
#[derive(Clone, Debug)]
pub struct SearchHit {
    pub quiver: Quiver,
    pub word: MutationWord,
    /// Number of distinct canonical quivers visited when the hit was found.
    pub visited: usize,
}

/// Breadth-first search for the first quiver in the mutation class of `start` that
/// satisfies `predicate`. Frozen vertices are never mutated.
pub fn mutation_class_search<F>(
    start: &Quiver,
    frozen: &[usize],
    predicate: F,
    max_nodes: usize,
) -> Result<SearchHit, ClusterError>
where
    F: Fn(&Quiver) -> bool,
{
    if !start.is_connected() {
        return Err(ClusterError::Disconnected);
    }
    let mut hit = None;
    explore(start, frozen, max_nodes, |q, word, visited| {
        if predicate(q) {
            hit = Some(SearchHit { quiver: q.clone(), word: MutationWord::new(word.to_vec()), visited });
            false
        } else {
            true
        }
    })?;
    hit.ok_or(ClusterError::NotFound(max_nodes))
}

/// Every quiver in the mutation class up to isomorphism, each with a word reaching it.
/// Fails with `NotFound` if the class has more than `max_nodes` members.
pub fn mutation_class(start: &Quiver, frozen: &[usize], max_nodes: usize) -> Result<Vec<(Quiver, Vec<usize>)>, ClusterError> {
    let mut all = Vec::new();
    let complete = explore(start, frozen, max_nodes, |q, word, _| {
        all.push((q.clone(), word.to_vec()));
        true
    })?;
    if complete {
        Ok(all)
    } else {
        Err(ClusterError::NotFound(max_nodes))
    }
}

/// Visits canonical classes in breadth-first order until `visit` returns false or the
/// budget runs out. Returns true when the whole class was exhausted.
fn explore<V>(start: &Quiver, frozen: &[usize], max_nodes: usize, mut visit: V) -> Result<bool, ClusterError>
where
    V: FnMut(&Quiver, &[usize], usize) -> bool,
{
    for &f in frozen {
        start.check_vertex(f)?;
    }
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut queue: VecDeque<(Quiver, Vec<usize>)> = VecDeque::new();
    seen.insert(canonical_form(start));
    queue.push_back((start.clone(), Vec::new()));
    while let Some((q, word)) = queue.pop_front() {
        if !visit(&q, &word, seen.len()) {
            return Ok(false);
        }
        for k in 0..q.size() {
            if frozen.contains(&k) || word.last() == Some(&k) {
                continue;
            }
            let next = q.mutate(k)?;
            if seen.contains(&canonical_form(&next)) {
                continue;
            }
            if seen.len() >= max_nodes {
                return Ok(false);
            }
            seen.insert(canonical_form(&next));
            let mut w = word.clone();
            w.push(k);
            queue.push_back((next, w));
        }
    }
    Ok(true)
}
