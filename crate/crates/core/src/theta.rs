//! The growth element at a double arrow and its link to frieze growth.
//!
//! At a double arrow `u => v` with triangle neighbours `N` (vertices `w` with `v -> w -> u`)
//! the element is `(x_u^2 + x_v^2 + prod_N x_w) / (x_u x_v)`. Its value at the all-ones
//! point is the growth coefficient `s_1` of every tube frieze of the affine quiver.

use num_bigint::BigInt;
use serde::Serialize;

use crate::chebyshev::{chebyshev_s, chebyshev_t};
use crate::cluster::search::{mutation_class_search, MutationWord, DEFAULT_MAX_NODES};
use crate::cluster::{Quiver, Seed};
use crate::error::ClusterError;
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaValue {
    /// The element in the initial cluster variables.
    pub laurent: LaurentPoly,
    /// Its value with every initial variable set to 1.
    pub integer: BigInt,
}

/// Vertices completing an oriented triangle `u => v -> w -> u`.
pub fn triangle_neighbors(q: &Quiver, u: usize, v: usize) -> Result<Vec<usize>, ClusterError> {
    q.check_vertex(u)?;
    q.check_vertex(v)?;
    if q.b(u, v) != 2 {
        return Err(ClusterError::MissingDoubleArrow(u, v));
    }
    Ok((0..q.size()).filter(|&w| q.b(v, w) > 0 && q.b(w, u) > 0).collect())
}

/// True when `u => v` is a double arrow whose only other neighbours are simple triangle
/// vertices, the local shape on which the growth formula is read off.
pub fn is_growth_double_arrow(q: &Quiver, u: usize, v: usize) -> bool {
    let Ok(n) = triangle_neighbors(q, u, v) else {
        return false;
    };
    (0..q.size()).filter(|&w| w != u && w != v).all(|w| {
        let touches = q.b(u, w) != 0 || q.b(v, w) != 0;
        !touches || (n.contains(&w) && q.b(v, w) == 1 && q.b(w, u) == 1)
    })
}

/// First double arrow (in row-major order) with the growth shape.
pub fn find_growth_double_arrow(q: &Quiver) -> Option<(usize, usize)> {
    q.double_arrows().into_iter().find(|&(u, v)| is_growth_double_arrow(q, u, v))
}

pub fn theta(seed: &Seed, u: usize, v: usize) -> Result<ThetaValue, ClusterError> {
    let n = triangle_neighbors(seed.quiver(), u, v)?;
    let (xu, xv) = (seed.var(u), seed.var(v));
    let prod = n.iter().fold(LaurentPoly::one(seed.ring()), |acc, &w| &acc * seed.var(w));
    let numerator = &(&xu.pow(2) + &xv.pow(2)) + &prod;
    let laurent = numerator.div_exact(&(xu * xv))?;
    let integer = laurent.at_ones();
    Ok(ThetaValue { laurent, integer })
}

/// The growth element at the seed's first growth-shaped double arrow.
pub fn theta_at_seed(seed: &Seed) -> Result<ThetaValue, ClusterError> {
    let (u, v) = find_growth_double_arrow(seed.quiver()).ok_or_else(|| ClusterError::NoGrowthDoubleArrow(seed.quiver().to_string()))?;
    theta(seed, u, v)
}

/// Whether the growth element agrees, as a Laurent polynomial, at `seed` and at every
/// seed reached from it by one of `words`.
pub fn theta_invariance(seed: &Seed, words: &[MutationWord]) -> Result<bool, ClusterError> {
    let reference = theta_at_seed(seed)?;
    for w in words {
        let reached = seed.mutate_word(&w.steps)?;
        if theta_at_seed(&reached)?.laurent != reference.laurent {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the mutation route from an acyclic affine quiver to its growth coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct AffineGrowth {
    #[serde(skip)]
    pub theta: ThetaValue,
    /// Mutation sequence from the initial seed to the double-arrow seed.
    pub word: Vec<usize>,
    pub double_arrow: (usize, usize),
    /// Canonical quivers visited by the search.
    pub visited: usize,
}

/// Mutates the initial seed of `q` to a growth-shaped double-arrow seed and evaluates the
/// growth element there, expressed in the initial variables of `q`.
pub fn growth_from_affine_quiver(q: &Quiver, max_nodes: usize) -> Result<AffineGrowth, ClusterError> {
    let hit = mutation_class_search(q, &[], |x| find_growth_double_arrow(x).is_some(), max_nodes)?;
    let seed = Seed::initial(q).mutate_word(&hit.word.steps)?;
    let double_arrow = find_growth_double_arrow(seed.quiver()).expect("search predicate guarantees a double arrow");
    let theta = theta(&seed, double_arrow.0, double_arrow.1)?;
    Ok(AffineGrowth { theta, word: hit.word.steps, double_arrow, visited: hit.visited })
}

pub fn growth_from_affine_quiver_default(q: &Quiver) -> Result<AffineGrowth, ClusterError> {
    growth_from_affine_quiver(q, DEFAULT_MAX_NODES)
}

/// `T_k(theta)`, checked against `S_k(theta) - S_(k-2)(theta)`.
pub fn bracelet_value(theta_int: &BigInt, k: usize) -> BigInt {
    let t = chebyshev_t(k, theta_int);
    let k = k as i64;
    debug_assert_eq!(t, chebyshev_s(k, theta_int) - chebyshev_s(k - 2, theta_int));
    t
}
