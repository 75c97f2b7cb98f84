//! Point counts of quiver Grassmannians over prime fields and the Euler characteristic
//! read off from the counting polynomial at `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{DimVector, QuiverRep};
use crate::error::RepError;

pub const DEFAULT_PRIME_POOL: [u64; 7] = [3, 5, 7, 11, 13, 17, 19];

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// A subspace of `F_p^d` in reduced row echelon form.
#[derive(Clone, Debug)]
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn contains(&self, v: &[u64], p: u64) -> bool {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + p - f * r % p) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

fn combinations(d: usize, e: usize) -> Vec<Vec<usize>> {
    if e == 0 {
        return vec![Vec::new()];
    }
    if e > d {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mut c in combinations(d - 1, e - 1) {
        c.push(d - 1);
        out.push(c);
    }
    out.extend(combinations(d - 1, e));
    out
}

fn enumerate_subspaces(d: usize, e: usize, p: u64) -> Vec<Subspace> {
    let mut out = Vec::new();
    for pivots in combinations(d, e) {
        // free slots: (row r, column c) with c > pivot r and c not a pivot
        let free: Vec<(usize, usize)> = (0..e)
            .flat_map(|r| {
                let pv = pivots.clone();
                (pivots[r] + 1..d).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let total = (p as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0u64; d]; e];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = (code % p as usize) as u64;
                code /= p as usize;
            }
            out.push(Subspace { rows, pivots: pivots.clone() });
        }
    }
    out
}

/// Number of `e`-dimensional subspaces of `F_p^d`, by explicit enumeration.
pub fn subspaces(d: usize, e: usize, p: u64) -> usize {
    enumerate_subspaces(d, e, p).len()
}

fn apply(matrix: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    matrix.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b % p).sum::<u64>() % p).collect()
}

/// Number of subrepresentations of `m` with dimension vector `e` over `F_p`.
pub fn count_points(m: &QuiverRep, e: &DimVector, p: u64) -> Result<u64, RepError> {
    m.check_prime(p)?;
    let n = m.quiver().size();
    if e.len() != n {
        return Err(RepError::DimLength { expected: n, found: e.len() });
    }
    if !e.le(m.dims()) {
        return Err(RepError::DimVectorTooLarge(e.0.clone()));
    }
    let dims = &m.dims().0;
    let choices: Vec<Vec<Subspace>> =
        (0..n).map(|i| enumerate_subspaces(dims[i] as usize, e.0[i] as usize, p)).collect();
    let maps: Vec<(usize, usize, Vec<Vec<u64>>)> = m
        .maps()
        .iter()
        .map(|a| {
            let red = a.matrix.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
            (a.tail, a.head, red)
        })
        .collect();
    // the arrows checked once both endpoints have been chosen
    let checks: Vec<Vec<usize>> =
        (0..n).map(|i| (0..maps.len()).filter(|&k| maps[k].0.max(maps[k].1) == i).collect()).collect();
    let mut chosen: Vec<usize> = vec![0; n];
    Ok(backtrack(0, &choices, &maps, &checks, &mut chosen, p))
}

fn backtrack(
    i: usize,
    choices: &[Vec<Subspace>],
    maps: &[(usize, usize, Vec<Vec<u64>>)],
    checks: &[Vec<usize>],
    chosen: &mut [usize],
    p: u64,
) -> u64 {
    if i == choices.len() {
        return 1;
    }
    let mut total = 0;
    for s in 0..choices[i].len() {
        chosen[i] = s;
        let closed = checks[i].iter().all(|&k| {
            let (t, h, ref a) = maps[k];
            let target = &choices[h][chosen[h]];
            choices[t][chosen[t]].rows.iter().all(|u| target.contains(&apply(a, u, p), p))
        });
        if closed {
            total += backtrack(i + 1, choices, maps, checks, chosen, p);
        }
    }
    total
}

/// The first `needed` admissible primes, starting from the default pool and continuing
/// with larger primes.
pub fn default_primes(m: &QuiverRep, needed: usize) -> Vec<u64> {
    let mut out: Vec<u64> = DEFAULT_PRIME_POOL.iter().copied().filter(|&p| m.is_admissible(p)).collect();
    let mut p = *DEFAULT_PRIME_POOL.last().unwrap();
    while out.len() < needed {
        p += 2;
        if m.is_admissible(p) {
            out.push(p);
        }
    }
    out.truncate(needed);
    out
}

/// The interpolated counting polynomial of one Grassmannian, with its held-out check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountPolynomial {
    /// Coefficients in increasing degree.
    #[serde(with = "crate::decimal::vec")]
    pub coefficients: Vec<BigInt>,
    pub primes: Vec<u64>,
    pub held_out: u64,
    pub held_out_count: u64,
}

impl CountPolynomial {
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }
}

fn interpolate(points: &[(u64, u64)]) -> Vec<BigRational> {
    let n = points.len();
    let mut out = vec![BigRational::zero(); n];
    for (j, &(xj, yj)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (l, &(xl, _)) in points.iter().enumerate() {
            if l == j {
                continue;
            }
            let xl = BigRational::from_integer(xl.into());
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &xl;
            }
            basis = next;
            denom *= BigRational::from_integer(xj.into()) - xl;
        }
        let scale = BigRational::from_integer(yj.into()) / denom;
        for (d, c) in basis.iter().enumerate() {
            out[d] += c * &scale;
        }
    }
    out
}

/// Euler characteristic of `Gr_e(m)` as the counting polynomial evaluated at 1.
///
/// The polynomial has degree at most `sum_i e_i (d_i - e_i)`; it is interpolated through
/// that many plus one admissible primes from `primes`, and one further prime must agree.
pub fn euler_characteristic(m: &QuiverRep, e: &DimVector, primes: &[u64]) -> Result<(BigInt, CountPolynomial), RepError> {
    for &p in primes {
        if !is_prime(p) {
            return Err(RepError::NotPrime(p));
        }
    }
    let usable: Vec<u64> = primes.iter().copied().filter(|&p| m.is_admissible(p)).collect();
    let degree: u32 = e.0.iter().zip(&m.dims().0).map(|(&a, &d)| a * d.saturating_sub(a)).sum();
    let needed = degree as usize + 2;
    if usable.len() < needed {
        return Err(RepError::TooFewPrimes { needed, available: usable.len() });
    }
    let points: Vec<(u64, u64)> = usable[..needed - 1]
        .iter()
        .map(|&p| count_points(m, e, p).map(|c| (p, c)))
        .collect::<Result<_, _>>()?;
    let coefficients = interpolate(&points);
    if let Some(c) = coefficients.iter().find(|c| !c.is_integer()) {
        return Err(RepError::NonPolynomialCount { e: e.0.clone(), detail: format!("non-integral coefficient {c}") });
    }
    let poly = CountPolynomial {
        coefficients: coefficients.iter().map(|c| c.to_integer()).collect(),
        primes: usable[..needed - 1].to_vec(),
        held_out: usable[needed - 1],
        held_out_count: count_points(m, e, usable[needed - 1])?,
    };
    let predicted = poly.eval(&BigInt::from(poly.held_out));
    if predicted != BigInt::from(poly.held_out_count) {
        return Err(RepError::NonPolynomialCount {
            e: e.0.clone(),
            detail: format!("predicted {predicted} points at p = {}, counted {}", poly.held_out, poly.held_out_count),
        });
    }
    Ok((poly.eval(&BigInt::one()), poly))
}

/// Every `e <= dims` whose Grassmannian has a point over some admissible pool prime, in
/// colexicographic order (first coordinate varying fastest).
pub fn subrep_dimvectors(m: &QuiverRep) -> Result<Vec<DimVector>, RepError> {
    let pool = default_primes(m, 2);
    m.dims()
        .below()
        .into_par_iter()
        .map(|e| {
            for &p in &pool {
                if count_points(m, &e, p)? > 0 {
                    return Ok(Some(e));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>, RepError>>()
        .map(|v| v.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannianRow {
    pub e: DimVector,
    #[serde(with = "crate::decimal")]
    pub chi: BigInt,
    pub polynomial: CountPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannianTable {
    pub rows: Vec<GrassmannianRow>,
}

impl GrassmannianTable {
    pub fn total(&self) -> BigInt {
        self.rows.iter().map(|r| &r.chi).sum()
    }

    pub fn chi(&self, e: &DimVector) -> Option<&BigInt> {
        self.rows.iter().find(|r| &r.e == e).map(|r| &r.chi)
    }
}

/// Euler characteristics of all nonempty quiver Grassmannians of `m`. Uses `primes` when
/// given, otherwise enough admissible primes for the largest degree bound.
pub fn grassmannian_table(m: &QuiverRep, primes: Option<&[u64]>) -> Result<GrassmannianTable, RepError> {
    let es = subrep_dimvectors(m)?;
    let max_degree = es
        .iter()
        .map(|e| e.0.iter().zip(&m.dims().0).map(|(&a, &d)| a * (d - a)).sum::<u32>())
        .max()
        .unwrap_or(0);
    let pool: Vec<u64> = match primes {
        Some(p) => p.to_vec(),
        None => default_primes(m, max_degree as usize + 2),
    };
    let rows = es
        .into_par_iter()
        .map(|e| euler_characteristic(m, &e, &pool).map(|(chi, polynomial)| GrassmannianRow { e, chi, polynomial }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GrassmannianTable { rows })
}
