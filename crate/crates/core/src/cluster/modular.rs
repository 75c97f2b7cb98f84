//! Generators of the cluster modular group in affine type E, acting on seeds whose quiver
//! has the double-arrow shape: a double arrow `0 => 1`, three vertices `a, b, c` completing
//! oriented triangles `0 => 1 -> w -> 0`, a leaf `b1` hanging off `b` and a chain
//! `c1 - ... - ck` hanging off `c` (`k = 1, 2, 3` for E6, E7, E8).

use std::fmt;
use std::str::FromStr;

use crate::cluster::canon::{automorphisms, canonical_form, isomorphisms};
use crate::cluster::quiver::Quiver;
use crate::cluster::search::{mutation_class_search, MutationWord};
use crate::cluster::seed::Seed;
use crate::error::ClusterError;

/// Vertex roles in a double-arrow quiver of affine type E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EShape {
    pub zero: usize,
    pub one: usize,
    pub a: usize,
    pub b: usize,
    pub b1: usize,
    pub c: usize,
    pub chain: Vec<usize>,
}

impl EShape {
    /// Reads the roles from the labels `0, 1, a, b, b1, c, c1, ..., ck` and checks the shape.
    pub fn from_labels(q: &Quiver) -> Result<Self, ClusterError> {
        let idx = |l: &str| q.index_of(l);
        let k = q.size().checked_sub(6).filter(|k| (1..=3).contains(k)).ok_or_else(|| {
            ClusterError::NotEShape(format!("{} vertices, expected 7, 8 or 9", q.size()))
        })?;
        let shape = EShape {
            zero: idx("0")?,
            one: idx("1")?,
            a: idx("a")?,
            b: idx("b")?,
            b1: idx("b1")?,
            c: idx("c")?,
            chain: (1..=k).map(|i| idx(&format!("c{i}"))).collect::<Result<_, _>>()?,
        };
        shape.validate(q)?;
        Ok(shape)
    }

    /// The double-arrow quiver of type E(k+5)~ on which the generators act: the core
    /// `0 => 1 -> {a, b, c} -> 0` with the leaf and chain arrows pointing toward the core
    /// (`b1 -> b`, `c1 -> c`, `c(i+1) -> ci`).
    pub fn standard_quiver(k: usize) -> Result<Quiver, ClusterError> {
        if !(1..=3).contains(&k) {
            return Err(ClusterError::NotEShape(format!("k = {k}, expected 1, 2 or 3")));
        }
        let mut labels: Vec<String> = ["0", "1", "a", "b", "b1", "c"].iter().map(|s| s.to_string()).collect();
        labels.extend((1..=k).map(|i| format!("c{i}")));
        let mut arrows = vec![(0, 1), (0, 1), (4, 3)];
        for w in [2, 3, 5] {
            arrows.push((1, w));
            arrows.push((w, 0));
        }
        let mut prev = 5;
        for i in 0..k {
            arrows.push((6 + i, prev));
            prev = 6 + i;
        }
        Quiver::from_arrows(&labels, &arrows)
    }

    pub fn k(&self) -> usize {
        self.chain.len()
    }

    fn validate(&self, q: &Quiver) -> Result<(), ClusterError> {
        let bad = |m: &str| Err(ClusterError::NotEShape(m.to_string()));
        if q.b(self.zero, self.one) != 2 {
            return bad("no double arrow 0 => 1");
        }
        for w in [self.a, self.b, self.c] {
            if q.b(self.one, w) != 1 || q.b(w, self.zero) != 1 {
                return bad("a, b, c must complete oriented triangles 0 => 1 -> w -> 0");
            }
        }
        let mut expected: Vec<(usize, usize)> = vec![(self.zero, self.one), (self.b, self.b1)];
        for w in [self.a, self.b, self.c] {
            expected.push((self.one, w));
            expected.push((self.zero, w));
        }
        let mut prev = self.c;
        for &ci in &self.chain {
            expected.push((prev, ci));
            prev = ci;
        }
        let m = q.size();
        for i in 0..m {
            for j in 0..m {
                let listed = expected.contains(&(i, j)) || expected.contains(&(j, i));
                if q.b(i, j) != 0 && !listed {
                    return bad("unexpected arrow");
                }
                if listed && q.b(i, j) == 0 {
                    return bad("missing arrow");
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    TauA,
    TauB,
    TauC,
    Gamma,
}

impl FromStr for Generator {
    type Err = ClusterError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "ta" | "tau_a" => Ok(Generator::TauA),
            "tb" | "tau_b" => Ok(Generator::TauB),
            "tc" | "tau_c" => Ok(Generator::TauC),
            "g" | "gamma" => Ok(Generator::Gamma),
            other => Err(ClusterError::UnknownGenerator(other.to_string())),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::TauA => "tau_a",
            Generator::TauB => "tau_b",
            Generator::TauC => "tau_c",
            Generator::Gamma => "gamma",
        };
        write!(f, "{s}")
    }
}

/// How a written product `mu_x mu_y mu_z` is turned into a mutation sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOrder {
    /// `mu_z` first, as in composition of maps.
    RightmostFirst,
    /// `mu_x` first, reading the product left to right.
    LeftmostFirst,
}

impl EShape {
    /// The generator's mutation product as written, leftmost factor first.
    pub fn written_word(&self, g: Generator) -> Vec<usize> {
        match g {
            Generator::TauA => vec![self.a, self.zero, self.one],
            Generator::TauB => vec![self.b1, self.b, self.zero, self.one],
            Generator::TauC => {
                let mut w: Vec<usize> = self.chain.iter().rev().copied().collect();
                w.extend([self.c, self.zero, self.one]);
                w
            }
            Generator::Gamma => Vec::new(),
        }
    }

    pub fn mutation_sequence(&self, g: Generator, order: WordOrder) -> Vec<usize> {
        let mut w = self.written_word(g);
        if order == WordOrder::RightmostFirst {
            w.reverse();
        }
        w
    }
}

/// Acts by cluster modular group generators on seeds with a fixed base quiver.
#[derive(Clone, Debug)]
pub struct ModularAction {
    base: Quiver,
    shape: EShape,
    order: WordOrder,
}

impl ModularAction {
    /// Uses the first word order under which every tau generator maps the base quiver back
    /// to itself, trying `RightmostFirst` before `LeftmostFirst`.
    pub fn new(base: &Quiver) -> Result<Self, ClusterError> {
        let shape = EShape::from_labels(base)?;
        for order in [WordOrder::RightmostFirst, WordOrder::LeftmostFirst] {
            let ok = [Generator::TauA, Generator::TauB, Generator::TauC].iter().all(|&g| {
                base.mutate_word(&shape.mutation_sequence(g, order))
                    .map(|q| !isomorphisms(base, &q).is_empty())
                    .unwrap_or(false)
            });
            if ok {
                return Ok(ModularAction { base: base.clone(), shape, order });
            }
        }
        Err(ClusterError::NoRestoringPermutation)
    }

    pub fn with_order(base: &Quiver, order: WordOrder) -> Result<Self, ClusterError> {
        Ok(ModularAction { base: base.clone(), shape: EShape::from_labels(base)?, order })
    }

    pub fn order(&self) -> WordOrder {
        self.order
    }

    pub fn shape(&self) -> &EShape {
        &self.shape
    }

    pub fn base(&self) -> &Quiver {
        &self.base
    }

    /// Applies one generator to a seed whose quiver is the base quiver.
    ///
    /// For the tau generators, restoring permutations are first sought among those fixing
    /// every vertex the word does not mutate; all candidates must give the same seed.
    pub fn apply(&self, seed: &Seed, g: Generator) -> Result<Seed, ClusterError> {
        if seed.quiver().matrix() != self.base.matrix() {
            return Err(ClusterError::NotEShape("seed quiver differs from the base quiver".into()));
        }
        if g == Generator::Gamma {
            let sigma = self.symmetry()?;
            return seed.pulled_back(&sigma, &self.base);
        }
        let word = self.shape.mutation_sequence(g, self.order);
        let mutated = seed.mutate_word(&word)?;
        let all = isomorphisms(&self.base, mutated.quiver());
        if all.is_empty() {
            return Err(ClusterError::NoRestoringPermutation);
        }
        let local: Vec<&Vec<usize>> = all
            .iter()
            .filter(|s| (0..s.len()).all(|i| word.contains(&i) || s[i] == i))
            .collect();
        let candidates: Vec<&Vec<usize>> = if local.is_empty() { all.iter().collect() } else { local };
        let first = mutated.pulled_back(candidates[0], &self.base)?;
        for s in &candidates[1..] {
            if mutated.pulled_back(s, &self.base)? != first {
                return Err(ClusterError::AmbiguousPermutation);
            }
        }
        Ok(first)
    }

    /// Applies generators in sequence, first entry first.
    pub fn apply_word(&self, seed: &Seed, word: &[Generator]) -> Result<Seed, ClusterError> {
        word.iter().try_fold(seed.clone(), |s, &g| self.apply(&s, g))
    }

    /// The unique nontrivial automorphism of the base quiver (present for E6 only).
    pub fn symmetry(&self) -> Result<Vec<usize>, ClusterError> {
        let id: Vec<usize> = (0..self.base.size()).collect();
        let others: Vec<Vec<usize>> = automorphisms(&self.base).into_iter().filter(|s| *s != id).collect();
        match others.len() {
            1 => Ok(others.into_iter().next().unwrap()),
            0 => Err(ClusterError::NoSymmetry),
            _ => Err(ClusterError::AmbiguousPermutation),
        }
    }
}

/// Mutates the initial seed of an affine type E quiver into the standard E-shaped seed.
///
/// Returns the seed (labelled like [`EShape::standard_quiver`], variables in the initial
/// cluster of `q`) and the mutation word used, whose permutation maps vertices of the
/// mutated quiver to their standard positions.
pub fn reach_eshape(q: &Quiver, max_nodes: usize) -> Result<(Seed, MutationWord), ClusterError> {
    let k = q
        .size()
        .checked_sub(6)
        .filter(|k| (1..=3).contains(k))
        .ok_or_else(|| ClusterError::NotEShape(format!("{} vertices, expected 7, 8 or 9", q.size())))?;
    let standard = EShape::standard_quiver(k)?;
    let target = canonical_form(&standard);
    let hit = mutation_class_search(q, &[], |x| canonical_form(x) == target, max_nodes)?;
    let sigma = isomorphisms(&standard, &hit.quiver)
        .into_iter()
        .next()
        .ok_or(ClusterError::NoRestoringPermutation)?;
    let seed = Seed::initial(q).mutate_word(&hit.word.steps)?.pulled_back(&sigma, &standard)?;
    let mut inverse = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inverse[s] = i;
    }
    Ok((seed, MutationWord { steps: hit.word.steps, permutation: Some(inverse) }))
}

/// Parses `"ta,ta,tb"` into generators.
pub fn parse_generators(text: &str) -> Result<Vec<Generator>, ClusterError> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

/// Outcome of checking the defining relations on one seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub k: usize,
    pub order: WordOrder,
    /// `tau_a^2 = tau_b^3 = tau_c^(k+2)` as seeds.
    pub tau_powers_agree: bool,
    /// `tau_a^2` differs from the starting seed (the common power is a nontrivial twist).
    pub tau_is_nontrivial: bool,
    /// `gamma^2 = id`, `gamma tau_a = tau_a gamma`, `gamma tau_b = tau_c gamma`; `None` without gamma.
    pub gamma_relations: Option<(bool, bool, bool)>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.tau_powers_agree
            && self.tau_is_nontrivial
            && self.gamma_relations.is_none_or(|(a, b, c)| a && b && c)
    }
}

pub fn check_relations(action: &ModularAction, seed: &Seed) -> Result<RelationReport, ClusterError> {
    use Generator::*;
    let k = action.shape().k();
    let ta2 = action.apply_word(seed, &[TauA; 2])?;
    let tb3 = action.apply_word(seed, &[TauB; 3])?;
    let tc = action.apply_word(seed, &vec![TauC; k + 2])?;
    let gamma_relations = match action.symmetry() {
        Ok(_) => {
            let g2 = action.apply_word(seed, &[Gamma, Gamma])? == *seed;
            // composition: (g tau)(S) = g(tau(S)), i.e. tau applied first
            let ga = action.apply_word(seed, &[TauA, Gamma])? == action.apply_word(seed, &[Gamma, TauA])?;
            let gb = action.apply_word(seed, &[TauB, Gamma])? == action.apply_word(seed, &[Gamma, TauC])?;
            Some((g2, ga, gb))
        }
        Err(ClusterError::NoSymmetry) => None,
        Err(e) => return Err(e),
    };
    Ok(RelationReport {
        k,
        order: action.order(),
        tau_powers_agree: ta2 == tb3 && tb3 == tc,
        tau_is_nontrivial: ta2 != *seed,
        gamma_relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::search::DEFAULT_MAX_NODES;

    #[test]
    fn standard_quivers_have_eshape() {
        for k in 1..=3 {
            let q = EShape::standard_quiver(k).unwrap();
            let shape = EShape::from_labels(&q).unwrap();
            assert_eq!(shape.k(), k);
            assert_eq!(q.double_arrows(), vec![(0, 1)]);
        }
        assert!(EShape::standard_quiver(4).is_err());
    }

    #[test]
    fn wrong_orientation_is_rejected_by_shape_check() {
        let q = EShape::standard_quiver(1).unwrap();
        let mut b = q.matrix().to_vec();
        b[0][1] = -2;
        b[1][0] = 2;
        let flipped = Quiver::new(q.labels().to_vec(), b).unwrap();
        assert!(matches!(EShape::from_labels(&flipped), Err(ClusterError::NotEShape(_))));
    }

    #[test]
    fn word_order_is_detected_as_leftmost_first() {
        for k in 1..=3 {
            let action = ModularAction::new(&EShape::standard_quiver(k).unwrap()).unwrap();
            assert_eq!(action.order(), WordOrder::LeftmostFirst);
        }
    }

    #[test]
    fn rightmost_first_cannot_restore() {
        let q = EShape::standard_quiver(1).unwrap();
        let action = ModularAction::with_order(&q, WordOrder::RightmostFirst).unwrap();
        assert_eq!(action.apply(&Seed::initial(&q), Generator::TauA), Err(ClusterError::NoRestoringPermutation));
    }

    #[test]
    fn relations_hold_for_all_k() {
        for k in 1..=3 {
            let q = EShape::standard_quiver(k).unwrap();
            let action = ModularAction::new(&q).unwrap();
            let report = check_relations(&action, &Seed::initial(&q)).unwrap();
            assert!(report.all_hold(), "k = {k}: {report:?}");
            assert_eq!(report.gamma_relations.is_some(), k == 1);
        }
    }

    #[test]
    fn gamma_swaps_the_b_and_c_arms() {
        let q = EShape::standard_quiver(1).unwrap();
        let action = ModularAction::new(&q).unwrap();
        let shape = action.shape().clone();
        let g = action.symmetry().unwrap();
        assert_eq!(g[shape.b], shape.c);
        assert_eq!(g[shape.b1], shape.chain[0]);
        assert_eq!(g[shape.a], shape.a);
        assert_eq!(ModularAction::new(&EShape::standard_quiver(2).unwrap()).unwrap().symmetry(), Err(ClusterError::NoSymmetry));
    }

    #[test]
    fn generator_parsing() {
        assert_eq!(parse_generators("ta, tb,gamma").unwrap(), vec![Generator::TauA, Generator::TauB, Generator::Gamma]);
        assert!(matches!(parse_generators("tx"), Err(ClusterError::UnknownGenerator(_))));
    }

    #[test]
    fn e6_star_reaches_eshape() {
        let star = Quiver::from_labeled_arrows(
            &["1", "2", "3", "4", "5", "6", "7"],
            &[("5", "4"), ("4", "1"), ("3", "2"), ("2", "1"), ("6", "1"), ("7", "6")],
        )
        .unwrap();
        let (seed, word) = reach_eshape(&star, DEFAULT_MAX_NODES).unwrap();
        assert_eq!(seed.quiver(), &EShape::standard_quiver(1).unwrap());
        assert!(!word.steps.is_empty());
        let relabeled = word.apply(&star).unwrap();
        assert_eq!(relabeled.matrix(), seed.quiver().matrix());
    }
}
