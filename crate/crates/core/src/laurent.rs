//! Multivariate Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! Terms are kept in a map keyed by exponent vectors, ordered graded-lexicographically
//! (total degree first, then lexicographic, both ascending). Zero coefficients are never
//! stored, so two polynomials over the same variables are equal iff their term maps are.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ArithError;

/// Exponent vector of a Laurent monomial; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(pub Vec<i32>);

impl Exponent {
    pub fn zero(len: usize) -> Self {
        Exponent(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut e = vec![0; len];
        e[i] = 1;
        Exponent(e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Exponent, BigInt>,
}

/// Shared, ordered list of variable names.
pub type Vars = Arc<[String]>;

pub fn make_vars<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, Exponent::zero(vars.len()), c)
    }

    /// The `i`-th variable.
    pub fn var(vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        Self::monomial(vars, Exponent::unit(vars.len(), i), 1)
    }

    pub fn monomial(vars: &Vars, exp: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exp.0.len(), vars.len(), "exponent length does not match variables");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Result<Self, ArithError>
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != vars.len() {
                return Err(ArithError::ExponentLength { expected: vars.len(), found: exp.len() });
            }
            *acc.entry(Exponent(exp)).or_insert_with(BigInt::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { vars: vars.clone(), terms: acc })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| e.0.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(&Exponent(exp.to_vec())).cloned().unwrap_or_default()
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    fn same_vars(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_vars(&self, other: &Self) -> Result<(), ArithError> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(ArithError::VarMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e, c.clone());
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e, -c);
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_vars(other)?;
        let mut acc: HashMap<Exponent, BigInt> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                *acc.entry(e1.add(e2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &Exponent) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.add(shift), c.clone())).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Componentwise minimum exponent over all terms (zero vector for the zero polynomial).
    fn min_exponent(&self) -> Exponent {
        let n = self.vars.len();
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Exponent::zero(n);
        };
        let mut m = first.0.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(&e.0) {
                *a = (*a).min(*b);
            }
        }
        Exponent(m)
    }

    fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, if it exists as a Laurent polynomial.
    ///
    /// Both operands are shifted by monomials to become ordinary polynomials not divisible
    /// by any variable; then the quotient, if it exists, is itself a polynomial and the
    /// leading-term division algorithm finds it.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ArithError> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let num_shift = self.min_exponent();
        let den_shift = divisor.min_exponent();
        let neg = |e: &Exponent| Exponent(e.0.iter().map(|x| -x).collect());
        let mut rem = self.shift(&neg(&num_shift));
        let den = divisor.shift(&neg(&den_shift));
        let (lead_exp, lead_coef) = den.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();

        let mut quotient: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let qe = e.sub(&lead_exp);
            if !qe.is_nonnegative() {
                return Err(ArithError::NotDivisible);
            }
            let (qc, r) = c.div_rem(&lead_coef);
            if !r.is_zero() {
                return Err(ArithError::NotDivisible);
            }
            for (de, dc) in &den.terms {
                add_term(&mut rem.terms, &de.add(&qe), -(dc * &qc));
            }
            debug_assert!(!rem.terms.contains_key(&e));
            quotient.insert(qe, qc);
        }
        let q = LaurentPoly { vars: self.vars.clone(), terms: quotient };
        Ok(q.shift(&num_shift.sub(&den_shift)))
    }

    /// Exact rational evaluation. Every variable must be assigned.
    pub fn specialize(&self, values: &HashMap<String, BigInt>) -> Result<BigRational, ArithError> {
        let vals = self
            .vars
            .iter()
            .map(|v| values.get(v).cloned().ok_or_else(|| ArithError::MissingValue(v.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        self.evaluate(&vals)
    }

    /// Exact rational evaluation at values listed in variable order.
    pub fn evaluate(&self, values: &[BigInt]) -> Result<BigRational, ArithError> {
        assert_eq!(values.len(), self.vars.len());
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut num = c.clone();
            let mut den = BigInt::one();
            for (i, (&k, v)) in e.0.iter().zip(values).enumerate() {
                match k.cmp(&0) {
                    Ordering::Greater => num *= num_traits::pow(v.clone(), k as usize),
                    Ordering::Less => {
                        if v.is_zero() {
                            return Err(ArithError::ZeroToNegativePower(self.vars[i].clone()));
                        }
                        den *= num_traits::pow(v.clone(), (-k) as usize);
                    }
                    Ordering::Equal => {}
                }
            }
            total += BigRational::new(num, den);
        }
        Ok(total)
    }

    /// Value with every variable set to 1, i.e. the sum of the coefficients.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes constants for some variables, keeping the variable list.
    pub fn substitute_constants(&self, values: &HashMap<usize, BigInt>) -> Result<Self, ArithError> {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            let mut num = c.clone();
            let mut den = BigInt::one();
            for (&i, v) in values {
                let k = exp.0[i];
                if k > 0 {
                    num *= num_traits::pow(v.clone(), k as usize);
                } else if k < 0 {
                    if v.is_zero() {
                        return Err(ArithError::ZeroToNegativePower(self.vars[i].clone()));
                    }
                    den *= num_traits::pow(v.clone(), (-k) as usize);
                }
                exp.0[i] = 0;
            }
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(ArithError::NotDivisible);
            }
            add_term(&mut acc, &exp, q);
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms: acc })
    }

    /// Parses the canonical text form, e.g. `x0^-1*x1 - 2*x_a + 3`.
    pub fn parse(text: &str, vars: &Vars) -> Result<Self, ArithError> {
        let perr = |msg: String| ArithError::Parse(msg);
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(perr("empty input".into()));
        }
        // split into signed terms; a sign right after '^' belongs to an exponent
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    pieces.push((negative, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(perr(format!("dangling sign in {text:?}")));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(perr(format!("trailing sign in {text:?}")));
        }
        pieces.push((negative, cur));

        let mut terms = Vec::new();
        for (neg, body) in pieces {
            let mut coef = BigInt::one();
            let mut exp = vec![0i32; vars.len()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(perr(format!("empty factor in {body:?}")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coef *= factor.parse::<BigInt>().map_err(|e| perr(e.to_string()))?;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<i32>().map_err(|e| perr(format!("{p:?}: {e}")))?),
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| perr(format!("unknown variable {name:?}")))?;
                exp[idx] += power;
            }
            if neg {
                coef = -coef;
            }
            terms.push((exp, coef));
        }
        Self::from_terms(vars, terms)
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            vars: self.vars.to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: e.0.clone(), coef: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(json: &LaurentJson) -> Result<Self, ArithError> {
        let vars = make_vars(&json.vars);
        let terms = json
            .terms
            .iter()
            .map(|t| {
                t.coef
                    .parse::<BigInt>()
                    .map(|c| (t.exp.clone(), c))
                    .map_err(|e| ArithError::Parse(format!("coefficient {:?}: {e}", t.coef)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_terms(&vars, terms)
    }

    /// Same polynomial over a different (equal) variable list handle.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self, ArithError> {
        if self.vars != *vars {
            return Err(ArithError::VarMismatch { left: self.vars.to_vec(), right: vars.to_vec() });
        }
        Ok(LaurentPoly { vars: vars.clone(), terms: self.terms.clone() })
    }
}

fn add_term(terms: &mut BTreeMap<Exponent, BigInt>, e: &Exponent, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(e) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                terms.remove(e);
            }
        }
        None => {
            terms.insert(e.clone(), c);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let sign = c.is_negative();
            match (k, sign) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .0
                .iter()
                .zip(self.vars.iter())
                .filter(|(&p, _)| p != 0)
                .map(|(&p, v)| if p == 1 { v.clone() } else { format!("{v}^{p}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// Operator forms panic on mismatched variable lists; use the `try_*` methods otherwise.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable lists differ")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(names: &[&str]) -> Vars {
        make_vars(names)
    }

    fn p(s: &str, vars: &Vars) -> LaurentPoly {
        LaurentPoly::parse(s, vars).unwrap()
    }

    #[test]
    fn add_examples() {
        let vs = v(&["x0", "x1"]);
        assert!((&p("x0", &vs) + &p("-x0", &vs)).is_zero());
        assert_eq!(&p("x0*x1^-1", &vs) + &p("x0*x1^-1", &vs), p("2*x0*x1^-1", &vs));
        assert_eq!(&p("x1^2 + 1", &vs) + &p("x1", &vs), p("x1^2 + x1 + 1", &vs));
    }

    #[test]
    fn add_rejects_mismatched_vars() {
        let a = LaurentPoly::var(&v(&["x0"]), 0);
        let b = LaurentPoly::var(&v(&["y0"]), 0);
        assert!(matches!(a.try_add(&b), Err(ArithError::VarMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(ArithError::VarMismatch { .. })));
    }

    #[test]
    fn mul_examples() {
        let vs = v(&["x0", "x1"]);
        assert!((&p("x0^-1", &vs) * &p("x0", &vs)).is_one());
        assert_eq!(&p("x0 + x1", &vs) * &p("x0 - x1", &vs), p("x0^2 - x1^2", &vs));
        let q = p("3*x0^-2*x1 + 7", &vs);
        assert!((&LaurentPoly::zero(&vs) * &q).is_zero());
    }

    #[test]
    fn div_exact_examples() {
        let vs = v(&["x0", "x1"]);
        let r = p("x0^2 - x1^2", &vs).div_exact(&p("x0 + x1", &vs)).unwrap();
        assert_eq!(r, p("x0 - x1", &vs));
        let q = p("x0^-1*x1 + 5*x0*x1^3 - 2", &vs);
        assert!(q.div_exact(&q).unwrap().is_one());
        assert_eq!(p("x0 + x1", &vs).div_exact(&p("x0 + 2*x1", &vs)), Err(ArithError::NotDivisible));
        assert_eq!(q.div_exact(&LaurentPoly::zero(&vs)), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn div_exact_with_negative_exponents() {
        let vs = v(&["x0", "x1", "x2"]);
        let a = p("x0^-3*x1 + x2^-1", &vs);
        let b = p("x0*x1^-2 - 4*x2^5 + x0^-1", &vs);
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
        // monomial divisors
        let m = p("-2*x0^-1*x2^3", &vs);
        assert_eq!((&a * &m).div_exact(&m).unwrap(), a);
    }

    #[test]
    fn coefficient_divisibility_is_checked() {
        let vs = v(&["x0"]);
        assert_eq!(p("3*x0 + 1", &vs).div_exact(&p("2", &vs)), Err(ArithError::NotDivisible));
        assert_eq!(p("4*x0 + 2", &vs).div_exact(&p("2", &vs)).unwrap(), p("2*x0 + 1", &vs));
    }

    #[test]
    fn specialize_examples() {
        let vs = v(&["x0", "x1", "x_a", "x_b", "x_c"]);
        let theta = p("x0*x1^-1 + x0^-1*x1 + x_a*x_b*x_c*x0^-1*x1^-1", &vs);
        assert_eq!(theta.at_ones(), BigInt::from(3));
        let ones: HashMap<String, BigInt> = vs.iter().map(|n| (n.clone(), BigInt::one())).collect();
        assert_eq!(theta.specialize(&ones).unwrap(), BigRational::from_integer(3.into()));

        let ws = v(&["x1", "x2", "x3", "x4", "x5"]);
        let m = p("x1^2*x2^2*x1^-1*x2^-1*x3^-2*x4^-1*x5^-1", &ws);
        let vals: Vec<BigInt> = [1, 1, 2, 1, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(
            m.evaluate(&vals).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(4))
        );
    }

    #[test]
    fn specialize_errors() {
        let vs = v(&["x0", "x1"]);
        let q = p("x0^-1 + x1", &vs);
        let vals = HashMap::from([("x0".to_string(), BigInt::zero()), ("x1".to_string(), BigInt::one())]);
        assert!(matches!(q.specialize(&vals), Err(ArithError::ZeroToNegativePower(_))));
        let partial = HashMap::from([("x0".to_string(), BigInt::one())]);
        assert!(matches!(q.specialize(&partial), Err(ArithError::MissingValue(_))));
    }

    #[test]
    fn display_uses_graded_lex_order() {
        let vs = v(&["x_a", "x_b", "x0", "x1"]);
        let q = p("x_a*x_b*x0^-1*x1^-1 + x0*x1^-1 + x0^-1*x1", &vs);
        assert_eq!(q.to_string(), "x0^-1*x1 + x0*x1^-1 + x_a*x_b*x0^-1*x1^-1");
        let r = p("-1 + 2*x0^2 - x1", &vs);
        assert_eq!(r.to_string(), "-1 - x1 + 2*x0^2");
        assert_eq!(LaurentPoly::zero(&vs).to_string(), "0");
    }

    #[test]
    fn json_form() {
        let vs = v(&["x0", "x1"]);
        let q = p("x0^-1*x1 - 12345678901234567890123*x1^2", &vs);
        let json = serde_json::to_string(&q.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"vars":["x0","x1"],"terms":[{"exp":[-1,1],"coef":"1"},{"exp":[0,2],"coef":"-12345678901234567890123"}]}"#
        );
        let back: LaurentJson = serde_json::from_str(&json).unwrap();
        assert_eq!(LaurentPoly::from_json(&back).unwrap(), q);
    }

    #[test]
    fn parse_errors() {
        let vs = v(&["x0"]);
        assert!(LaurentPoly::parse("y", &vs).is_err());
        assert!(LaurentPoly::parse("x0 +", &vs).is_err());
        assert!(LaurentPoly::parse("", &vs).is_err());
        assert!(LaurentPoly::parse("x0**2", &vs).is_err());
    }

    #[test]
    fn substitute_frozen_to_one() {
        let vs = v(&["x0", "x1", "x_a"]);
        let q = p("x_a*x0^-1 + x_a^-2*x1", &vs);
        let sub = q.substitute_constants(&HashMap::from([(2, BigInt::one())])).unwrap();
        assert_eq!(sub, p("x0^-1 + x1", &vs));
    }
}
