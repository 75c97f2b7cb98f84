use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::DimVector;
use crate::cluster::Quiver;
use crate::error::RepError;

fn check_len(q: &Quiver, v: &DimVector) -> Result<(), RepError> {
    if v.len() == q.size() {
        Ok(())
    } else {
        Err(RepError::DimLength { expected: q.size(), found: v.len() })
    }
}

/// `<a, b> = sum_i a_i b_i - sum over arrows t -> h of a_t b_h`.
pub fn euler_form(q: &Quiver, a: &DimVector, b: &DimVector) -> Result<i64, RepError> {
    check_len(q, a)?;
    check_len(q, b)?;
    let (a, b) = (a.as_i64(), b.as_i64());
    let diag: i64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    let arrows: i64 = q.arrows().iter().map(|&(t, h, k)| i64::from(k) * a[t] * b[h]).sum();
    Ok(diag - arrows)
}

/// Matrix of `<a, b> + <b, a>`: 2 on the diagonal, minus the number of edges off it.
pub fn symmetrized_euler_matrix(q: &Quiver) -> Vec<Vec<i64>> {
    let m = q.size();
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { 2 } else { -i64::from(q.edge_weight(i, j)) }).collect())
        .collect()
}

/// The primitive positive generator of the radical of the symmetrized Euler form.
pub fn delta(q: &Quiver) -> Result<DimVector, RepError> {
    let m = q.size();
    let mut a: Vec<Vec<BigRational>> = symmetrized_euler_matrix(q)
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    // reduced row echelon form
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m {
        let Some(p) = (row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..m {
                    let sub = &f * &a[row][c];
                    a[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(RepError::NotAffine(format!("radical has dimension {}", free.len())));
    }
    let f = free[0];
    let mut v = vec![BigRational::zero(); m];
    v[f] = BigRational::one();
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = -a[r][f].clone();
    }
    let denom = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.iter().any(|x| x.is_negative()) { -1 } else { 1 };
    let prim: Vec<BigInt> = ints.iter().map(|x| x / &g * sign).collect();
    if prim.iter().any(|x| !x.is_positive()) {
        return Err(RepError::NotAffine("radical generator is not positive".into()));
    }
    Ok(DimVector(prim.iter().map(|x| u32::try_from(x).expect("small entries")).collect()))
}

/// `<delta, a>`.
pub fn defect(q: &Quiver, a: &DimVector) -> Result<i64, RepError> {
    euler_form(q, &delta(q)?, a)
}

/// Vertices where `delta` is 1.
pub fn extending_vertices(q: &Quiver) -> Result<Vec<usize>, RepError> {
    Ok(delta(q)?.0.iter().enumerate().filter(|(_, &d)| d == 1).map(|(i, _)| i).collect())
}

/// Dimension vector of the indecomposable projective at `v`: the number of paths from
/// `v` to each vertex.
pub fn projective_dimvector(q: &Quiver, v: usize) -> Result<DimVector, RepError> {
    q.check_vertex(v)?;
    let order = q.topological_order().ok_or(RepError::Cyclic)?;
    let mut paths = vec![0u32; q.size()];
    paths[v] = 1;
    for &t in &order {
        for h in 0..q.size() {
            if q.b(t, h) > 0 {
                paths[h] += paths[t] * q.b(t, h) as u32;
            }
        }
    }
    Ok(DimVector(paths))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4() -> Quiver {
        Quiver::from_arrows(&["1", "2", "3", "4", "5"], &[(3, 2), (4, 2), (2, 0), (2, 1)]).unwrap()
    }

    fn e6() -> Quiver {
        Quiver::from_labeled_arrows(
            &["1", "2", "3", "4", "5", "6", "7"],
            &[("5", "4"), ("4", "1"), ("3", "2"), ("2", "1"), ("6", "1"), ("7", "6")],
        )
        .unwrap()
    }

    #[test]
    fn deltas() {
        assert_eq!(delta(&d4()).unwrap(), DimVector(vec![1, 1, 2, 1, 1]));
        assert_eq!(delta(&e6()).unwrap(), DimVector(vec![3, 2, 1, 2, 1, 2, 1]));
        let k = Quiver::from_arrows(&["0", "1"], &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(delta(&k).unwrap(), DimVector(vec![1, 1]));
        let a3 = Quiver::from_arrows(&["1", "2", "3"], &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(delta(&a3), Err(RepError::NotAffine(_))));
    }

    #[test]
    fn isotropy_and_defect() {
        let q = d4();
        let d = delta(&q).unwrap();
        assert_eq!(euler_form(&q, &d, &d).unwrap(), 0);
        assert_eq!(defect(&q, &d).unwrap(), 0);
        let p3 = projective_dimvector(&q, 2).unwrap();
        assert_eq!(p3, DimVector(vec![1, 1, 1, 0, 0]));
        assert!(defect(&q, &p3).unwrap() < 0);
        assert_eq!(extending_vertices(&q).unwrap(), vec![0, 1, 3, 4]);
        for e in extending_vertices(&q).unwrap() {
            let p = projective_dimvector(&q, e).unwrap();
            assert_eq!(euler_form(&q, &p, &d).unwrap(), 1);
        }
    }

    #[test]
    fn simple_is_a_unit() {
        let q = d4();
        let s = DimVector::unit(5, 2);
        assert_eq!(euler_form(&q, &s, &s).unwrap(), 1);
        assert!(euler_form(&q, &s, &DimVector(vec![1])).is_err());
    }
}
