//! Infinite periodic frieze patterns generated from quiddity sequences.
//!
//! Entries are indexed `x[i][j]` with `i <= j`; the entry lies in row `j - i - 1`, so the
//! row of zeros is row -1 (`x[i][i] = 0`) and the row of ones is row 0. The quiddity row is
//! row 1 with `a_i = x[i-2][i]`. Entries along each diagonal obey
//! `x[i][j+1] = a_{j+1} x[i][j] - x[i][j-1]`, which keeps everything integral; the diamond
//! relation is then an invariant that [`FriezePattern::check_diamond`] verifies.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chebyshev::chebyshev_t;
use crate::error::FriezeError;

/// A quiddity sequence, compared up to cyclic rotation.
#[derive(Clone, Debug)]
pub struct Quiddity {
    entries: Vec<BigInt>,
}

impl Quiddity {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, FriezeError> {
        if entries.is_empty() {
            return Err(FriezeError::EmptyQuiddity);
        }
        if let Some((index, v)) = entries.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            return Err(FriezeError::NonPositiveQuiddity { index, value: v.to_string() });
        }
        Ok(Quiddity { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self, FriezeError> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn period(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `a_i` with the index taken modulo the period.
    pub fn get(&self, i: i64) -> &BigInt {
        &self.entries[i.rem_euclid(self.period() as i64) as usize]
    }

    /// Lexicographically smallest rotation; equal quiddities share it.
    pub fn canonical_rotation(&self) -> Vec<BigInt> {
        let n = self.period();
        (0..n)
            .map(|r| (0..n).map(|k| self.entries[(r + k) % n].clone()).collect::<Vec<_>>())
            .min()
            .unwrap()
    }
}

impl PartialEq for Quiddity {
    fn eq(&self, other: &Self) -> bool {
        self.period() == other.period() && self.canonical_rotation() == other.canonical_rotation()
    }
}

impl Eq for Quiddity {}

impl fmt::Display for Quiddity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezePattern {
    quiddity: Quiddity,
    depth: usize,
    /// `diagonals[s][k] = x[s][s+k]` for `s` in `0..n`, `k` in `0..=depth+1`.
    diagonals: Vec<Vec<BigInt>>,
}

impl FriezePattern {
    /// Computes rows 1..=depth below the row of ones.
    pub fn generate(quiddity: &Quiddity, depth: usize) -> Result<Self, FriezeError> {
        if depth == 0 {
            return Err(FriezeError::ZeroDepth);
        }
        let n = quiddity.period();
        let mut diagonals = Vec::with_capacity(n);
        for s in 0..n {
            let mut d = Vec::with_capacity(depth + 2);
            d.push(BigInt::zero());
            d.push(BigInt::one());
            for k in 1..=depth {
                // x[s][s+k+1] = a_{s+k+1} x[s][s+k] - x[s][s+k-1]
                let next = quiddity.get((s + k + 1) as i64) * &d[k] - &d[k - 1];
                if !next.is_positive() {
                    return Err(FriezeError::NonPositiveEntry {
                        i: s as i64,
                        j: (s + k + 1) as i64,
                        row: k,
                        value: next.to_string(),
                    });
                }
                d.push(next);
            }
            diagonals.push(d);
        }
        Ok(FriezePattern { quiddity: quiddity.clone(), depth, diagonals })
    }

    pub fn quiddity(&self) -> &Quiddity {
        &self.quiddity
    }

    pub fn period(&self) -> usize {
        self.quiddity.period()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Entry `x[i][j]`, or `None` outside the computed rows `-1..=depth`.
    pub fn entry(&self, i: i64, j: i64) -> Option<&BigInt> {
        let k = j - i;
        if k < 0 || k > self.depth as i64 + 1 {
            return None;
        }
        let s = i.rem_euclid(self.period() as i64) as usize;
        Some(&self.diagonals[s][k as usize])
    }

    /// Row `r` (1-based, `r <= depth`) as `n` entries aligned under the quiddity:
    /// position `i` holds `x[i-1-ceil(r/2)][i+floor(r/2)]`, so odd rows sit directly
    /// below `a_i` and even rows sit between `a_i` and `a_{i+1}`.
    pub fn row(&self, r: usize) -> Vec<BigInt> {
        assert!(r >= 1 && r <= self.depth, "row {r} outside 1..={}", self.depth);
        let up = r.div_ceil(2) as i64;
        let down = (r / 2) as i64;
        (0..self.period() as i64)
            .map(|i| self.entry(i - 1 - up, i + down).unwrap().clone())
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (1..=self.depth).map(|r| self.row(r)).collect()
    }

    /// Verifies `x[i][j] x[i+1][j+1] - x[i][j+1] x[i+1][j] = 1` over every stored diamond.
    pub fn check_diamond(&self) -> Result<(), FriezeError> {
        let n = self.period() as i64;
        for i in 0..n {
            for k in 0..=self.depth as i64 {
                let j = i + k;
                // the diamond with top x[i][j+1] needs x[i+1][j+1]... all within rows -1..=depth
                let (Some(a), Some(b), Some(c), Some(d)) = (
                    self.entry(i, j),
                    self.entry(i + 1, j + 1),
                    self.entry(i, j + 1),
                    self.entry(i + 1, j),
                ) else {
                    continue;
                };
                if a * b - c * d != BigInt::one() {
                    return Err(FriezeError::InvalidFrieze(format!(
                        "diamond relation fails at x[{i}][{j}]"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Verifies `x[i+n][j+n] = x[i][j]` on a window of stored entries.
    pub fn check_periodicity(&self) -> Result<(), FriezeError> {
        let n = self.period() as i64;
        for i in -2 * n..2 * n {
            for k in 0..=self.depth as i64 + 1 {
                if self.entry(i, i + k) != self.entry(i + n, i + k + n) {
                    return Err(FriezeError::InvalidFrieze(format!("periodicity fails at x[{i}][{}]", i + k)));
                }
            }
        }
        Ok(())
    }

    /// `x[i][i+kn+1] - x[i+1][i+kn]` measured at every `i` of one period; requires `kn <= depth`.
    pub fn measured_growth(&self, k: usize) -> Result<BigInt, FriezeError> {
        let n = self.period();
        let needed = k * n;
        if k == 0 || needed > self.depth {
            return Err(FriezeError::InsufficientDepth { depth: self.depth, needed });
        }
        let mut value: Option<BigInt> = None;
        for i in 0..n as i64 {
            let kn = needed as i64;
            let s = self.entry(i, i + kn + 1).unwrap() - self.entry(i + 1, i + kn).unwrap();
            match &value {
                None => value = Some(s),
                Some(v) if *v != s => {
                    return Err(FriezeError::InvalidFrieze(format!(
                        "growth coefficient s_{k} depends on the position ({v} vs {s})"
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(value.unwrap())
    }

    /// Growth coefficients `[s_0, s_1, ..., s_kmax]` with `s_0 = 2`.
    ///
    /// `s_1` is read from the entries; higher coefficients follow
    /// `s_{k+1} = s_1 s_k - s_{k-1}` and are cross-checked against the entries when the
    /// depth allows and against `T_k(s_1)` always.
    pub fn growth_coefficients(&self, kmax: usize) -> Result<Vec<BigInt>, FriezeError> {
        let s1 = self.measured_growth(1)?;
        let mut s = vec![BigInt::from(2), s1.clone()];
        for k in 1..kmax {
            let next = &s1 * &s[k] - &s[k - 1];
            s.push(next);
        }
        s.truncate(kmax + 1);
        for (k, sk) in s.iter().enumerate().skip(1) {
            if k * self.period() <= self.depth {
                let measured = self.measured_growth(k)?;
                if measured != *sk {
                    return Err(FriezeError::InvalidFrieze(format!(
                        "measured s_{k} = {measured} disagrees with the recurrence value {sk}"
                    )));
                }
            }
            if chebyshev_t(k, &s1) != *sk {
                return Err(FriezeError::InvalidFrieze(format!("s_{k} != T_{k}(s_1)")));
            }
        }
        Ok(s)
    }

    /// The `k`-th growth coefficient, `k >= 1`.
    pub fn growth(&self, k: usize) -> Result<BigInt, FriezeError> {
        if k == 0 {
            return Ok(BigInt::from(2));
        }
        Ok(self.growth_coefficients(k)?.swap_remove(k))
    }

    pub fn classify_growth(&self) -> Result<GrowthClass, FriezeError> {
        classify_principal_growth(&self.measured_growth(1)?)
    }
}

/// Dichotomy for infinite periodic friezes: `s_1 = 2` (arithmetic diagonals) or `s_1 > 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthClass {
    ArithmeticLike,
    AffineFast,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthClass::ArithmeticLike => write!(f, "arithmetic-like"),
            GrowthClass::AffineFast => write!(f, "affine-fast"),
        }
    }
}

pub fn classify_principal_growth(s1: &BigInt) -> Result<GrowthClass, FriezeError> {
    let two = BigInt::from(2);
    if *s1 < two {
        Err(FriezeError::InvalidFrieze(format!("principal growth {s1} is below 2")))
    } else if *s1 == two {
        Ok(GrowthClass::ArithmeticLike)
    } else {
        Ok(GrowthClass::AffineFast)
    }
}

/// Default depth used by the command line: enough rows to observe `s_1..s_3` directly.
pub fn default_depth(period: usize) -> usize {
    3 * period + 1
}
