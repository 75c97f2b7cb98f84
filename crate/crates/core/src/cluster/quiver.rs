use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ClusterError;

/// A quiver without loops or 2-cycles, stored as its skew-symmetric exchange matrix:
/// `b[i][j]` is the number of arrows `i -> j` minus the number of arrows `j -> i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<String>,
    b: Vec<Vec<i32>>,
}

impl Quiver {
    pub fn new(labels: Vec<String>, b: Vec<Vec<i32>>) -> Result<Self, ClusterError> {
        let m = b.len();
        if labels.len() != m {
            return Err(ClusterError::LabelCount(labels.len(), m));
        }
        for (row, r) in b.iter().enumerate() {
            if r.len() != m {
                return Err(ClusterError::NotSquare { row, len: r.len(), expected: m });
            }
        }
        for i in 0..m {
            for j in 0..m {
                if b[i][j] != -b[j][i] {
                    return Err(ClusterError::NotSkewSymmetric(i, j));
                }
            }
        }
        Ok(Quiver { labels, b })
    }

    /// Quiver with labels `"0".."m-1"` built from an exchange matrix.
    pub fn from_matrix(b: Vec<Vec<i32>>) -> Result<Self, ClusterError> {
        let labels = (0..b.len()).map(|i| i.to_string()).collect();
        Self::new(labels, b)
    }

    /// Quiver from a list of arrows `(tail, head)`; repeated pairs give multiple arrows.
    pub fn from_arrows<S: AsRef<str>>(labels: &[S], arrows: &[(usize, usize)]) -> Result<Self, ClusterError> {
        let m = labels.len();
        let mut b = vec![vec![0; m]; m];
        for &(t, h) in arrows {
            for v in [t, h] {
                if v >= m {
                    return Err(ClusterError::VertexOutOfRange { vertex: v, size: m });
                }
            }
            b[t][h] += 1;
            b[h][t] -= 1;
        }
        Self::new(labels.iter().map(|s| s.as_ref().to_string()).collect(), b)
    }

    /// Same as [`Quiver::from_arrows`] with arrows given by label.
    pub fn from_labeled_arrows(labels: &[&str], arrows: &[(&str, &str)]) -> Result<Self, ClusterError> {
        let find = |s: &str| {
            labels.iter().position(|l| *l == s).ok_or_else(|| ClusterError::UnknownLabel(s.to_string()))
        };
        let idx = arrows
            .iter()
            .map(|&(t, h)| Ok((find(t)?, find(h)?)))
            .collect::<Result<Vec<_>, ClusterError>>()?;
        Self::from_arrows(labels, &idx)
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, ClusterError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ClusterError::UnknownLabel(label.to_string()))
    }

    pub fn b(&self, i: usize, j: usize) -> i32 {
        self.b[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.b
    }

    /// Arrows as `(tail, head, multiplicity)` in row-major order.
    pub fn arrows(&self) -> Vec<(usize, usize, u32)> {
        let m = self.size();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if self.b[i][j] > 0 {
                    out.push((i, j, self.b[i][j] as u32));
                }
            }
        }
        out
    }

    /// Number of arrows between `i` and `j` in either direction.
    pub fn edge_weight(&self, i: usize, j: usize) -> u32 {
        self.b[i][j].unsigned_abs()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&w| self.b[v][w] != 0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), ClusterError> {
        if v < self.size() {
            Ok(())
        } else {
            Err(ClusterError::VertexOutOfRange { vertex: v, size: self.size() })
        }
    }

    /// Matrix mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver, ClusterError> {
        self.check_vertex(k)?;
        let m = self.size();
        let b = &self.b;
        let mut nb = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                nb[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    b[i][j] + b[i][k].max(0) * b[k][j].max(0) - (-b[i][k]).max(0) * (-b[k][j]).max(0)
                };
            }
        }
        Ok(Quiver { labels: self.labels.clone(), b: nb })
    }

    /// Mutates along `word`, first entry first.
    pub fn mutate_word(&self, word: &[usize]) -> Result<Quiver, ClusterError> {
        word.iter().try_fold(self.clone(), |q, &k| q.mutate(k))
    }

    /// All ordered pairs `(u, v)` with exactly two arrows `u -> v`.
    pub fn double_arrows(&self) -> Vec<(usize, usize)> {
        let m = self.size();
        let mut out = Vec::new();
        for u in 0..m {
            for v in 0..m {
                if self.b[u][v] == 2 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_double_arrow(&self) -> bool {
        self.b.iter().flatten().any(|&x| x == 2)
    }

    pub fn is_connected(&self) -> bool {
        let m = self.size();
        if m == 0 {
            return true;
        }
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Vertices in an order where every arrow points forward, or `None` for cyclic quivers.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let m = self.size();
        let mut indeg: Vec<usize> = (0..m).map(|j| (0..m).filter(|&i| self.b[i][j] > 0).count()).collect();
        let mut ready: VecDeque<usize> = (0..m).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(m);
        while let Some(v) = ready.pop_front() {
            order.push(v);
            for w in 0..m {
                if self.b[v][w] > 0 {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        ready.push_back(w);
                    }
                }
            }
        }
        (order.len() == m).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Relabels vertices: vertex `i` of `self` becomes vertex `perm[i]` of the result.
    pub fn permuted(&self, perm: &[usize]) -> Result<Quiver, ClusterError> {
        let m = self.size();
        if !is_permutation(perm, m) {
            return Err(ClusterError::NotAPermutation);
        }
        let mut b = vec![vec![0; m]; m];
        let mut labels = vec![String::new(); m];
        for i in 0..m {
            labels[perm[i]] = self.labels[i].clone();
            for j in 0..m {
                b[perm[i]][perm[j]] = self.b[i][j];
            }
        }
        Ok(Quiver { labels, b })
    }

    /// Copy with new labels and the same matrix.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Quiver, ClusterError> {
        Quiver::new(labels, self.b.clone())
    }

    /// Full subquiver on `keep`, in the given order.
    pub fn subquiver(&self, keep: &[usize]) -> Quiver {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let b = keep.iter().map(|&i| keep.iter().map(|&j| self.b[i][j]).collect()).collect();
        Quiver { labels, b }
    }

    /// Name of the initial cluster variable attached to vertex `i`: `x1` for numeric
    /// labels, `x_a` otherwise.
    pub fn variable_name(&self, i: usize) -> String {
        let l = &self.labels[i];
        if l.chars().all(|c| c.is_ascii_digit()) {
            format!("x{l}")
        } else {
            format!("x_{l}")
        }
    }

    pub fn to_json(&self, frozen: &[usize]) -> QuiverJson {
        QuiverJson { labels: Some(self.labels.clone()), b: self.b.clone(), frozen: frozen.to_vec() }
    }
}

pub fn is_permutation(perm: &[usize], m: usize) -> bool {
    if perm.len() != m {
        return false;
    }
    let mut seen = vec![false; m];
    for &p in perm {
        if p >= m || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver {:?} {:?}", self.labels, self.b)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows()
            .into_iter()
            .map(|(t, h, k)| {
                let arrow = if k == 1 { "->".to_string() } else { format!("={k}=>") };
                format!("{}{}{}", self.labels[t], arrow, self.labels[h])
            })
            .collect();
        write!(f, "[{}]", arrows.join(", "))
    }
}

/// Quiver file form: `{ "labels": [...], "b": [[...]], "frozen": [...] }`.
/// `frozen` lists vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub b: Vec<Vec<i32>>,
    #[serde(default)]
    pub frozen: Vec<usize>,
}

impl QuiverJson {
    pub fn to_quiver(&self) -> Result<(Quiver, Vec<usize>), ClusterError> {
        let q = match &self.labels {
            Some(l) => Quiver::new(l.clone(), self.b.clone())?,
            None => Quiver::from_matrix(self.b.clone())?,
        };
        for &f in &self.frozen {
            q.check_vertex(f)?;
        }
        Ok((q, self.frozen.clone()))
    }
}
