//! Canonical forms and isomorphisms of small quivers.
//!
//! The canonical form is the lexicographically smallest row-major exchange matrix over all
//! vertex orderings reachable by individualization and color refinement. Refinement is
//! isomorphism-invariant, so isomorphic quivers share a canonical form; labels are ignored.

use crate::cluster::quiver::Quiver;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub size: usize,
    pub matrix: Vec<i32>,
}

/// Equitable refinement: split color classes by the multiset of (neighbor color, weight).
fn refine(q: &Quiver, colors: &mut [u32]) {
    let m = q.size();
    let mut ncolors = count_colors(colors);
    loop {
        let sigs: Vec<(u32, Vec<(u32, i32)>)> = (0..m)
            .map(|v| {
                let mut nb: Vec<(u32, i32)> = (0..m)
                    .filter(|&w| q.b(v, w) != 0)
                    .map(|w| (colors[w], q.b(v, w)))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..m {
            colors[v] = distinct.binary_search(&sigs[v]).unwrap() as u32;
        }
        if distinct.len() == ncolors {
            return;
        }
        ncolors = distinct.len();
    }
}

fn count_colors(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn matrix_for(q: &Quiver, position: &[u32]) -> Vec<i32> {
    let m = q.size();
    let mut out = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            out[position[i] as usize * m + position[j] as usize] = q.b(i, j);
        }
    }
    out
}

fn search(q: &Quiver, colors: Vec<u32>, best: &mut Option<(Vec<i32>, Vec<u32>)>) {
    let m = q.size();
    if count_colors(&colors) == m {
        let mat = matrix_for(q, &colors);
        if best.as_ref().is_none_or(|(b, _)| mat < *b) {
            *best = Some((mat, colors));
        }
        return;
    }
    // smallest color with more than one vertex
    let mut counts = vec![0usize; m];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let target = (0..m).find(|&c| counts[c] > 1).unwrap() as u32;
    for v in (0..m).filter(|&v| colors[v] == target) {
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + u32::from(c == target && u != v))
            .collect();
        refine(q, &mut next);
        search(q, next, best);
    }
}

/// Canonical form together with the position of each vertex in it.
pub fn canonical_labeling(q: &Quiver) -> (CanonicalForm, Vec<usize>) {
    let m = q.size();
    if m == 0 {
        return (CanonicalForm { size: 0, matrix: Vec::new() }, Vec::new());
    }
    let mut colors = vec![0u32; m];
    refine(q, &mut colors);
    let mut best = None;
    search(q, colors, &mut best);
    let (matrix, pos) = best.unwrap();
    (CanonicalForm { size: m, matrix }, pos.into_iter().map(|p| p as usize).collect())
}

pub fn canonical_form(q: &Quiver) -> CanonicalForm {
    canonical_labeling(q).0
}

/// Sorted nonzero row entries of `v`, an isomorphism invariant used for pruning.
fn profile(q: &Quiver, v: usize) -> Vec<i32> {
    let mut p: Vec<i32> = (0..q.size()).map(|w| q.b(v, w)).filter(|&x| x != 0).collect();
    p.sort_unstable();
    p
}

/// Every bijection `sigma` with `to.b(sigma[i], sigma[j]) == from.b(i, j)`.
pub fn isomorphisms(from: &Quiver, to: &Quiver) -> Vec<Vec<usize>> {
    let m = from.size();
    if to.size() != m {
        return Vec::new();
    }
    let pf: Vec<Vec<i32>> = (0..m).map(|v| profile(from, v)).collect();
    let pt: Vec<Vec<i32>> = (0..m).map(|v| profile(to, v)).collect();
    let mut out = Vec::new();
    let mut sigma = vec![usize::MAX; m];
    let mut used = vec![false; m];
    extend(from, to, &pf, &pt, 0, &mut sigma, &mut used, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    from: &Quiver,
    to: &Quiver,
    pf: &[Vec<i32>],
    pt: &[Vec<i32>],
    i: usize,
    sigma: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let m = from.size();
    if i == m {
        out.push(sigma.to_vec());
        return;
    }
    for t in 0..m {
        if used[t] || pf[i] != pt[t] {
            continue;
        }
        if (0..i).all(|j| to.b(t, sigma[j]) == from.b(i, j)) {
            sigma[i] = t;
            used[t] = true;
            extend(from, to, pf, pt, i + 1, sigma, used, out);
            used[t] = false;
        }
    }
    sigma[i] = usize::MAX;
}

/// Automorphisms of `q`, including the identity.
pub fn automorphisms(q: &Quiver) -> Vec<Vec<usize>> {
    isomorphisms(q, q)
}
