use std::collections::BTreeSet;

use crate::cluster::quiver::{is_permutation, Quiver};
use crate::error::ClusterError;
use crate::laurent::{make_vars, LaurentPoly, Vars};

/// A quiver together with one cluster variable per vertex, each a Laurent polynomial in
/// the initial cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    quiver: Quiver,
    vars: Vec<LaurentPoly>,
    frozen: BTreeSet<usize>,
}

impl Seed {
    /// The initial seed: vertex `i` carries the variable named by [`Quiver::variable_name`].
    pub fn initial(quiver: &Quiver) -> Self {
        let names: Vec<String> = (0..quiver.size()).map(|i| quiver.variable_name(i)).collect();
        let ring = make_vars(&names);
        let vars = (0..quiver.size()).map(|i| LaurentPoly::var(&ring, i)).collect();
        Seed { quiver: quiver.clone(), vars, frozen: BTreeSet::new() }
    }

    /// Initial seed whose frozen vertices never mutate and carry the constant 1.
    pub fn initial_with_frozen(quiver: &Quiver, frozen: &[usize]) -> Result<Self, ClusterError> {
        let mut s = Self::initial(quiver);
        for &f in frozen {
            quiver.check_vertex(f)?;
            s.vars[f] = LaurentPoly::one(s.ring());
            s.frozen.insert(f);
        }
        Ok(s)
    }

    pub fn from_parts(quiver: Quiver, vars: Vec<LaurentPoly>, frozen: BTreeSet<usize>) -> Result<Self, ClusterError> {
        if vars.len() != quiver.size() {
            return Err(ClusterError::SizeMismatch(vars.len(), quiver.size()));
        }
        for &f in &frozen {
            quiver.check_vertex(f)?;
        }
        Ok(Seed { quiver, vars, frozen })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vars(&self) -> &[LaurentPoly] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> &LaurentPoly {
        &self.vars[i]
    }

    pub fn frozen(&self) -> &BTreeSet<usize> {
        &self.frozen
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        self.frozen.contains(&v)
    }

    /// The variable list of the ambient Laurent ring.
    pub fn ring(&self) -> &Vars {
        self.vars[0].vars()
    }

    pub fn size(&self) -> usize {
        self.quiver.size()
    }

    /// Seed mutation at `k`: the quiver mutates and `x_k` is replaced through the exchange
    /// relation `x_k x_k' = prod_{j -> k} x_j^{b_jk} + prod_{k -> j} x_j^{b_kj}`.
    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        self.quiver.check_vertex(k)?;
        if self.is_frozen(k) {
            return Err(ClusterError::FrozenVertex(k));
        }
        let ring = self.ring();
        let mut incoming = LaurentPoly::one(ring);
        let mut outgoing = LaurentPoly::one(ring);
        for j in 0..self.size() {
            let b = self.quiver.b(j, k);
            if b > 0 {
                incoming = &incoming * &self.vars[j].pow(b as u32);
            } else if b < 0 {
                outgoing = &outgoing * &self.vars[j].pow((-b) as u32);
            }
        }
        let numerator = &incoming + &outgoing;
        let new_var = numerator.div_exact(&self.vars[k])?;
        let mut vars = self.vars.clone();
        vars[k] = new_var;
        Ok(Seed { quiver: self.quiver.mutate(k)?, vars, frozen: self.frozen.clone() })
    }

    /// Mutates along `word`, first entry first.
    pub fn mutate_word(&self, word: &[usize]) -> Result<Seed, ClusterError> {
        word.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Reads the seed back in another labeling: vertex `i` of the result is vertex
    /// `sigma[i]` of `self`. When `sigma` is an isomorphism from `base` onto this seed's
    /// quiver, the result has quiver `base` exactly.
    pub fn pulled_back(&self, sigma: &[usize], base: &Quiver) -> Result<Seed, ClusterError> {
        let m = self.size();
        if !is_permutation(sigma, m) {
            return Err(ClusterError::NotAPermutation);
        }
        for i in 0..m {
            for j in 0..m {
                if self.quiver.b(sigma[i], sigma[j]) != base.b(i, j) {
                    return Err(ClusterError::NoRestoringPermutation);
                }
            }
        }
        let vars = sigma.iter().map(|&s| self.vars[s].clone()).collect();
        let frozen = self
            .frozen
            .iter()
            .map(|&f| sigma.iter().position(|&s| s == f).unwrap())
            .collect();
        Ok(Seed { quiver: base.clone(), vars, frozen })
    }
}
