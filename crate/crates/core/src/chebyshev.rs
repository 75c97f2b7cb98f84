//! Normalized Chebyshev polynomials `T_k` (with `T_0 = 2`) and `S_k` (with `S_0 = 1`),
//! both satisfying `P_{k+1} = x P_k - P_{k-1}`.

use num_bigint::BigInt;

use crate::laurent::LaurentPoly;

/// Values the recurrence can be evaluated at: integers or Laurent polynomials.
pub trait RecurrenceArg: Clone {
    fn constant_like(&self, c: i64) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
}

impl RecurrenceArg for BigInt {
    fn constant_like(&self, c: i64) -> Self {
        BigInt::from(c)
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

impl RecurrenceArg for LaurentPoly {
    fn constant_like(&self, c: i64) -> Self {
        LaurentPoly::constant(self.vars(), c)
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

fn run_recurrence<R: RecurrenceArg>(first: R, second: R, x: &R, steps: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(steps + 2);
    out.push(first);
    out.push(second);
    for k in 1..=steps {
        let next = x.times(&out[k]).minus(&out[k - 1]);
        out.push(next);
    }
    out
}

/// `[T_0(x), ..., T_kmax(x)]`.
pub fn chebyshev_t_seq<R: RecurrenceArg>(kmax: usize, x: &R) -> Vec<R> {
    let mut v = run_recurrence(x.constant_like(2), x.clone(), x, kmax.saturating_sub(1));
    v.truncate(kmax + 1);
    v
}

pub fn chebyshev_t<R: RecurrenceArg>(k: usize, x: &R) -> R {
    chebyshev_t_seq(k, x).pop().unwrap()
}

/// `[S_{-2}(x), S_{-1}(x), S_0(x), ..., S_kmax(x)]`; the entry for `S_k` sits at index `k + 2`.
pub fn chebyshev_s_seq<R: RecurrenceArg>(kmax: usize, x: &R) -> Vec<R> {
    // S_{-2} = -1, S_{-1} = 0 continue the same recurrence: S_0 = x*0 - (-1) = 1.
    let mut v = run_recurrence(x.constant_like(-1), x.constant_like(0), x, kmax + 1);
    v.truncate(kmax + 3);
    v
}

/// `S_k(x)` for `k >= -2`.
pub fn chebyshev_s<R: RecurrenceArg>(k: i64, x: &R) -> R {
    assert!(k >= -2, "S_k is defined for k >= -2");
    let idx = (k + 2) as usize;
    let kmax = k.max(0) as usize;
    chebyshev_s_seq(kmax, x).swap_remove(idx)
}
