//! Quiver representations with integer matrices, reduced modulo primes for point counting.

mod forms;
mod grassmannian;
mod representation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::RepError;

pub use forms::{defect, delta, euler_form, extending_vertices, projective_dimvector, symmetrized_euler_matrix};
pub use grassmannian::{
    count_points, default_primes, euler_characteristic, grassmannian_table, is_prime, subrep_dimvectors,
    subspaces, CountPolynomial, GrassmannianRow, GrassmannianTable, DEFAULT_PRIME_POOL,
};
pub use representation::{ArrowMap, QuiverRep, RepJson};

/// Nonnegative integer vector indexed by the vertices of a quiver.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| i64::from(x)).collect()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All vectors componentwise below `self`, first coordinate varying fastest.
    pub fn below(&self) -> Vec<DimVector> {
        let mut out = vec![DimVector::zero(self.len())];
        for i in (0..self.len()).rev() {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=self.0[i]).map(move |x| {
                        let mut w = v.clone();
                        w.0[i] = x;
                        w
                    })
                })
                .collect();
        }
        // the loop above makes the last coordinate vary fastest; reverse the key order
        out.sort_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()));
        out
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for DimVector {
    type Err = RepError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        trimmed
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(DimVector)
            .map_err(|e| RepError::Parse(format!("dimension vector {s:?}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn below_is_colex() {
        let v = DimVector(vec![1, 2]);
        let all: Vec<String> = v.below().iter().map(|d| d.to_string()).collect();
        assert_eq!(all, ["(0,0)", "(1,0)", "(0,1)", "(1,1)", "(0,2)", "(1,2)"]);
    }

    #[test]
    fn parse_and_display() {
        let v: DimVector = "1,1,2,1,1".parse().unwrap();
        assert_eq!(v.to_string(), "(1,1,2,1,1)");
        assert_eq!("(0, 3)".parse::<DimVector>().unwrap(), DimVector(vec![0, 3]));
        assert!("1,x".parse::<DimVector>().is_err());
        assert!(DimVector(vec![1, 0]).le(&DimVector(vec![1, 1])));
        assert!(!DimVector(vec![2, 0]).le(&DimVector(vec![1, 1])));
    }
}
