use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::grassmannian::is_prime;
use super::DimVector;
use crate::cluster::{Quiver, QuiverJson};
use crate::error::RepError;

/// The linear map attached to one arrow `tail -> head`, a `dims[head] x dims[tail]` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowMap {
    pub tail: usize,
    pub head: usize,
    pub matrix: Vec<Vec<i64>>,
}

/// A representation of an acyclic quiver. Entries are plain integers; counting reduces them
/// modulo a prime. Named parameters (such as `lambda`) mark entries that must stay away
/// from 0 and 1 modulo the prime for the representation to keep its isomorphism type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    quiver: Quiver,
    dims: DimVector,
    maps: Vec<ArrowMap>,
    params: BTreeMap<String, i64>,
}

impl QuiverRep {
    pub fn new(
        quiver: Quiver,
        dims: DimVector,
        maps: Vec<ArrowMap>,
        params: BTreeMap<String, i64>,
    ) -> Result<Self, RepError> {
        let m = quiver.size();
        if dims.len() != m {
            return Err(RepError::DimLength { expected: m, found: dims.len() });
        }
        if !quiver.is_acyclic() {
            return Err(RepError::Cyclic);
        }
        for map in &maps {
            quiver.check_vertex(map.tail)?;
            quiver.check_vertex(map.head)?;
            let (exp_rows, exp_cols) = (dims.0[map.head] as usize, dims.0[map.tail] as usize);
            let rows = map.matrix.len();
            let bad_cols = map.matrix.iter().find(|r| r.len() != exp_cols).map(Vec::len);
            if rows != exp_rows || bad_cols.is_some() {
                return Err(RepError::MatrixShape {
                    tail: map.tail,
                    head: map.head,
                    rows,
                    cols: bad_cols.unwrap_or(exp_cols),
                    exp_rows,
                    exp_cols,
                });
            }
        }
        for t in 0..m {
            for h in 0..m {
                let expected = quiver.b(t, h).max(0) as usize;
                let given = maps.iter().filter(|a| a.tail == t && a.head == h).count();
                if given != expected {
                    return Err(RepError::ArrowCount { tail: t, head: h, given, expected });
                }
            }
        }
        Ok(QuiverRep { quiver, dims, maps, params })
    }

    pub fn zero(quiver: &Quiver) -> Result<Self, RepError> {
        Self::simple_like(quiver, DimVector::zero(quiver.size()))
    }

    /// The simple representation at `v`.
    pub fn simple(quiver: &Quiver, v: usize) -> Result<Self, RepError> {
        quiver.check_vertex(v)?;
        Self::simple_like(quiver, DimVector::unit(quiver.size(), v))
    }

    fn simple_like(quiver: &Quiver, dims: DimVector) -> Result<Self, RepError> {
        let maps = quiver
            .arrows()
            .into_iter()
            .flat_map(|(t, h, k)| {
                let rows = dims.0[h] as usize;
                let cols = dims.0[t] as usize;
                (0..k).map(move |_| ArrowMap { tail: t, head: h, matrix: vec![vec![0; cols]; rows] })
            })
            .collect();
        Self::new(quiver.clone(), dims, maps, BTreeMap::new())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[ArrowMap] {
        &self.maps
    }

    pub fn params(&self) -> &BTreeMap<String, i64> {
        &self.params
    }

    /// A prime is admissible when no parameter is congruent to 0 or 1 modulo it.
    pub fn is_admissible(&self, p: u64) -> bool {
        is_prime(p)
            && self.params.values().all(|&v| {
                let r = v.rem_euclid(p as i64);
                r != 0 && r != 1
            })
    }

    pub fn check_prime(&self, p: u64) -> Result<(), RepError> {
        if !is_prime(p) {
            Err(RepError::NotPrime(p))
        } else if !self.is_admissible(p) {
            Err(RepError::InadmissiblePrime(p))
        } else {
            Ok(())
        }
    }

    /// Block-diagonal direct sum; the two summands must live on the same quiver.
    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep, RepError> {
        if self.quiver.matrix() != other.quiver.matrix() {
            return Err(RepError::QuiverMismatch);
        }
        let dims = DimVector(self.dims.0.iter().zip(&other.dims.0).map(|(a, b)| a + b).collect());
        let mut maps = Vec::new();
        let mut used = vec![false; other.maps.len()];
        for a in &self.maps {
            let j = (0..other.maps.len())
                .find(|&j| !used[j] && other.maps[j].tail == a.tail && other.maps[j].head == a.head)
                .expect("same quiver has the same arrows");
            used[j] = true;
            let b = &other.maps[j];
            let (r1, c1) = (self.dims.0[a.head] as usize, self.dims.0[a.tail] as usize);
            let (r2, c2) = (other.dims.0[a.head] as usize, other.dims.0[a.tail] as usize);
            let mut matrix = vec![vec![0; c1 + c2]; r1 + r2];
            for r in 0..r1 {
                matrix[r][..c1].copy_from_slice(&a.matrix[r]);
            }
            for r in 0..r2 {
                matrix[r1 + r][c1..].copy_from_slice(&b.matrix[r]);
            }
            maps.push(ArrowMap { tail: a.tail, head: a.head, matrix });
        }
        let mut params = self.params.clone();
        for (k, v) in &other.params {
            let key = if params.get(k).is_some_and(|x| x != v) { format!("{k}'") } else { k.clone() };
            params.insert(key, *v);
        }
        QuiverRep::new(self.quiver.clone(), dims, maps, params)
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            quiver: self.quiver.to_json(&[]),
            dims: self.dims.clone(),
            maps: self
                .maps
                .iter()
                .map(|a| MapJson { arrow: [a.tail, a.head], matrix: a.matrix.clone() })
                .collect(),
            params: self.params.clone(),
        }
    }

    pub fn from_json(json: &RepJson) -> Result<Self, RepError> {
        let (quiver, _) = json.quiver.to_quiver()?;
        let maps = json
            .maps
            .iter()
            .map(|m| ArrowMap { tail: m.arrow[0], head: m.arrow[1], matrix: m.matrix.clone() })
            .collect();
        QuiverRep::new(quiver, json.dims.clone(), maps, json.params.clone())
    }
}

/// File form: `{ "quiver": {...}, "dims": [...], "maps": [{"arrow": [t, h], "matrix": [[...]]}], "params": {...} }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub quiver: QuiverJson,
    pub dims: DimVector,
    pub maps: Vec<MapJson>,
    #[serde(default)]
    pub params: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub arrow: [usize; 2],
    pub matrix: Vec<Vec<i64>>,
}
