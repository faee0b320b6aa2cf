//! Exact arithmetic substrate: arbitrary-precision integers, rationals, and
//! sparse multivariate Laurent polynomials over `Z`.
//!
//! Polynomials are keyed by exponent vector (signed, so negative powers are
//! first-class) and aligned across operands by variable *name*, since the
//! engines freely mix bivariate and trivariate values.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Substitution target occurs with a negative exponent and the
    /// replacement is not an invertible monomial.
    #[error("cannot substitute `{var}`: negative exponent and replacement is not a unit monomial")]
    NonSubstitutable { var: String },
    /// No exact quotient exists over integer coefficients.
    #[error("polynomial division is not exact")]
    NotDivisible,
    /// Zero assigned to a variable occurring with a negative exponent, or a
    /// zero divisor.
    #[error("division by zero")]
    DivisionByZero,
    /// Evaluation assignment misses a variable that actually occurs.
    #[error("no value assigned to variable `{var}`")]
    MissingAssignment { var: String },
}

/// Sparse multivariate Laurent polynomial with `BigInt` coefficients.
///
/// Invariants: no stored zero coefficient, exponent vectors are unique and
/// have the same length as `vars`, and `vars` is sorted. Equality is
/// mathematical (term-set equality after aligning variable sets by name).
#[derive(Debug, Clone)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        LaurentPoly { vars: Vec::new(), terms }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `name^1`.
    pub fn var(name: &str) -> Self {
        Self::monomial(1, &[(name, 1)])
    }

    /// A single term `c * prod(var_i ^ exp_i)`. Exponents may be negative.
    pub fn monomial(c: impl Into<BigInt>, powers: &[(&str, i32)]) -> Self {
        let c: BigInt = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut vars: Vec<String> = powers
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(v, _)| v.to_string())
            .collect();
        vars.sort();
        vars.dedup();
        let mut exps = vec![0i32; vars.len()];
        for (v, e) in powers {
            if *e != 0 {
                let i = vars.iter().position(|w| w == v).unwrap();
                exps[i] += e;
            }
        }
        let mut terms = BTreeMap::new();
        terms.insert(exps, c);
        LaurentPoly { vars, terms }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Coefficient of the given monomial (variables not mentioned must have
    /// exponent zero; returns 0 when the term is absent).
    pub fn coeff(&self, powers: &[(&str, i32)]) -> BigInt {
        let mut exps = vec![0i32; self.vars.len()];
        for (v, e) in powers {
            match self.vars.iter().position(|w| w == v) {
                Some(i) => exps[i] = *e,
                None if *e != 0 => return BigInt::zero(),
                None => {}
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Drop zero coefficients and unused variables so the representation is
    /// canonical for the current term set.
    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c))
            .collect();
        LaurentPoly { vars, terms }
    }

    /// Re-express both polynomials over the union of their variable sets.
    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars: Vec<String> = self.vars.iter().chain(other.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        (self.embedded(&vars), other.embedded(&vars))
    }

    fn embedded(&self, vars: &[String]) -> Self {
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).unwrap())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exps = vec![0i32; vars.len()];
                for (i, &x) in e.iter().enumerate() {
                    exps[positions[i]] = x;
                }
                (exps, c.clone())
            })
            .collect();
        LaurentPoly { vars: vars.to_vec(), terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (e, c) in b.terms {
            let entry = a.terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        a.normalized()
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -(&*c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let nv = a.vars.len();
        let mut terms: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let mut e = vec![0i32; nv];
                for i in 0..nv {
                    e[i] = ea[i] + eb[i];
                }
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        LaurentPoly { vars: a.vars, terms }.normalized()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute `var := replacement`.
    ///
    /// Valid whenever `var` occurs only with nonnegative exponents, or the
    /// replacement is a single monomial with coefficient `±1` (so negative
    /// powers stay integral).
    pub fn substitute(&self, var: &str, replacement: &Self) -> Result<Self, PolyError> {
        let Some(vi) = self.vars.iter().position(|v| v == var) else {
            return Ok(self.clone());
        };
        let min_exp = self.terms.keys().map(|e| e[vi]).min().unwrap_or(0);
        let unit = replacement.unit_monomial();
        if min_exp < 0 && unit.is_none() {
            return Err(PolyError::NonSubstitutable { var: var.to_string() });
        }

        // Cache powers of the replacement; negative powers only reachable in
        // the unit-monomial case.
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let k = e[vi];
            let rest: Vec<(&str, i32)> = self
                .vars
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != vi)
                .map(|(i, v)| (v.as_str(), e[i]))
                .collect();
            let base = Self::monomial(c.clone(), &rest);
            let powered = if k >= 0 {
                base.mul(&replacement.pow(k as u32))
            } else {
                let (rc, rpowers) = unit.clone().unwrap();
                let inv_powers: Vec<(&str, i32)> =
                    rpowers.iter().map(|(v, e)| (v.as_str(), e * k)).collect();
                let coeff = if rc.is_negative() && k % 2 != 0 { BigInt::from(-1) } else { BigInt::one() };
                base.mul(&Self::monomial(coeff, &inv_powers))
            };
            acc = acc.add(&powered);
        }
        Ok(acc)
    }

    /// If `self` is a single term with coefficient `±1`, return it.
    fn unit_monomial(&self) -> Option<(BigInt, Vec<(String, i32)>)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.magnitude() != BigInt::one().magnitude() {
            return None;
        }
        let powers = self
            .vars
            .iter()
            .zip(e.iter())
            .map(|(v, &x)| (v.clone(), x))
            .collect();
        Some((c.clone(), powers))
    }

    /// Exact division: returns `r` with `r * divisor == self`, or
    /// `NotDivisible`. Laurent inputs are shifted to ordinary polynomials
    /// first; the quotient is then built by iterated leading-term
    /// elimination under graded-lex order.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (p, q) = self.aligned(divisor);
        let nv = p.vars.len();
        let shift_p: Vec<i32> = (0..nv)
            .map(|i| p.terms.keys().map(|e| e[i]).min().unwrap().min(0))
            .collect();
        let shift_q: Vec<i32> = (0..nv)
            .map(|i| q.terms.keys().map(|e| e[i]).min().unwrap().min(0))
            .collect();
        let p = p.shifted(&shift_p.iter().map(|s| -s).collect::<Vec<_>>());
        let q = q.shifted(&shift_q.iter().map(|s| -s).collect::<Vec<_>>());

        let mut rem = p.terms;
        let mut quo: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        let (lq_exp, lq_coeff) = leading_term(&q.terms).expect("divisor is nonzero");
        while let Some((lr_exp, lr_coeff)) = leading_term(&rem) {
            let mut t = vec![0i32; nv];
            for i in 0..nv {
                t[i] = lr_exp[i] - lq_exp[i];
                if t[i] < 0 {
                    return Err(PolyError::NotDivisible);
                }
            }
            let (c, r) = num_integer::Integer::div_rem(&lr_coeff, &lq_coeff);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            // rem -= c * t * q
            for (eq, cq) in &q.terms {
                let mut e = vec![0i32; nv];
                for i in 0..nv {
                    e[i] = eq[i] + t[i];
                }
                let entry = rem.entry(e).or_insert_with(BigInt::zero);
                *entry -= &c * cq;
            }
            rem.retain(|_, v| !v.is_zero());
            quo.insert(t, c);
        }

        let quotient = LaurentPoly { vars: p.vars, terms: quo };
        // Undo the Laurent shifts: r = r' * x^{shift_q - shift_p}.
        let back: Vec<i32> = (0..nv).map(|i| shift_q[i] - shift_p[i]).collect();
        Ok(quotient.shifted(&back).normalized())
    }

    fn shifted(&self, by: &[i32]) -> Self {
        if by.iter().all(|&s| s == 0) {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let shifted: Vec<i32> = e.iter().zip(by.iter()).map(|(x, s)| x + s).collect();
                (shifted, c.clone())
            })
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Exact evaluation at a rational point. Every variable that occurs must
    /// be assigned; variables with negative exponents must be nonzero.
    pub fn eval(&self, assignment: &[(&str, BigRational)]) -> Result<BigRational, PolyError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match assignment.iter().find(|(n, _)| n == v) {
                Some((_, val)) => values.push(val.clone()),
                None => return Err(PolyError::MissingAssignment { var: v.clone() }),
            }
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if values[i].is_zero() && k < 0 {
                    return Err(PolyError::DivisionByZero);
                }
                term *= rational_pow(&values[i], k);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Integer evaluation helper; errors as [`Self::eval`] and additionally
    /// if the result is non-integral (possible only with negative exponents).
    pub fn eval_int(&self, assignment: &[(&str, BigInt)]) -> Result<BigInt, PolyError> {
        let rat: Vec<(&str, BigRational)> = assignment
            .iter()
            .map(|(n, v)| (*n, BigRational::from_integer(v.clone())))
            .collect();
        let r = self.eval(&rat)?;
        if !r.is_integer() {
            return Err(PolyError::NotDivisible);
        }
        Ok(r.to_integer())
    }

    /// Terms in canonical display order (see [`fmt::Display`]).
    fn display_order(&self) -> Vec<(&Vec<i32>, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| display_cmp(ea, eb));
        terms
    }
}

fn rational_pow(base: &BigRational, k: i32) -> BigRational {
    let mut acc = BigRational::one();
    let b = if k < 0 { base.recip() } else { base.clone() };
    for _ in 0..k.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Leading term under graded-lex (total degree, then exponent vector).
fn leading_term(terms: &BTreeMap<Vec<i32>, BigInt>) -> Option<(Vec<i32>, BigInt)> {
    terms
        .iter()
        .max_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().map(|&x| x as i64).sum();
            let db: i64 = eb.iter().map(|&x| x as i64).sum();
            da.cmp(&db).then_with(|| ea.cmp(eb))
        })
        .map(|(e, c)| (e.clone(), c.clone()))
}

/// Canonical text order: leading variable exponent descending, remaining
/// exponents ascending. This writes `T(K_4)` as
/// `X^3 + 3*X^2 + 2*X + 4*X*Y + 2*Y + 3*Y^2 + Y^3`.
fn display_cmp(a: &[i32], b: &[i32]) -> Ordering {
    if a.is_empty() {
        return Ordering::Equal;
    }
    b[0].cmp(&a[0]).then_with(|| a[1..].cmp(&b[1..]))
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.display_order().into_iter().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.magnitude();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(mag.to_string());
            }
            for (v, &e) in self.vars.iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::var("X")
    }

    fn y() -> LaurentPoly {
        LaurentPoly::var("Y")
    }

    #[test]
    fn add_basic_and_identity() {
        let p = x().sub(&LaurentPoly::one());
        let q = x().add(&LaurentPoly::one());
        assert_eq!(p.add(&q), x().scale(&BigInt::from(2)));
        assert_eq!(p.add(&LaurentPoly::zero()), p);
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = y().sub(&LaurentPoly::one());
        let q = LaurentPoly::one().sub(&y());
        assert!(p.add(&q).is_zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        let p = x().sub(&LaurentPoly::one());
        let q = x().add(&LaurentPoly::one());
        let expect = x().mul(&x()).sub(&LaurentPoly::one());
        assert_eq!(p.mul(&q), expect);
    }

    #[test]
    fn mul_laurent_cancellation() {
        let p = LaurentPoly::monomial(1, &[("X", -1)]);
        assert_eq!(p.mul(&x()), LaurentPoly::one());
    }

    #[test]
    fn mul_square() {
        let p = y().sub(&LaurentPoly::one());
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(&[("Y", 2)]), BigInt::from(1));
        assert_eq!(sq.coeff(&[("Y", 1)]), BigInt::from(-2));
        assert_eq!(sq.coeff(&[]), BigInt::from(1));
    }

    #[test]
    fn substitute_polynomial_case() {
        // XZ with Z <- XYZ - XY gives X^2*Y*Z - X^2*Y.
        let p = x().mul(&LaurentPoly::var("Z"));
        let xyz = x().mul(&y()).mul(&LaurentPoly::var("Z"));
        let r = xyz.sub(&x().mul(&y()));
        let got = p.substitute("Z", &r).unwrap();
        let expect = LaurentPoly::monomial(1, &[("X", 2), ("Y", 1), ("Z", 1)])
            .sub(&LaurentPoly::monomial(1, &[("X", 2), ("Y", 1)]));
        assert_eq!(got, expect);
    }

    #[test]
    fn substitute_monomial_into_negative_power() {
        let p = LaurentPoly::monomial(1, &[("Z", -1)]);
        let got = p.substitute("Z", &y()).unwrap();
        assert_eq!(got, LaurentPoly::monomial(1, &[("Y", -1)]));
    }

    #[test]
    fn substitute_rejects_nonmonomial_into_negative_power() {
        let p = LaurentPoly::monomial(1, &[("Z", -1)]);
        let r = y().add(&LaurentPoly::one());
        assert!(matches!(
            p.substitute("Z", &r),
            Err(PolyError::NonSubstitutable { .. })
        ));
    }

    #[test]
    fn div_exact_linear() {
        let num = x().mul(&x()).sub(&LaurentPoly::one());
        let den = x().sub(&LaurentPoly::one());
        assert_eq!(num.div_exact(&den).unwrap(), x().add(&LaurentPoly::one()));
    }

    #[test]
    fn div_exact_rejects_cross_variable() {
        assert_eq!(x().div_exact(&y()), Err(PolyError::NotDivisible));
    }

    #[test]
    fn div_exact_rejects_inexact_coefficients() {
        let p = x().scale(&BigInt::from(3));
        let q = x().scale(&BigInt::from(2));
        assert_eq!(p.div_exact(&q), Err(PolyError::NotDivisible));
    }

    #[test]
    fn eval_rational_and_errors() {
        let p = LaurentPoly::monomial(1, &[("X", -1)]);
        let half = p.eval(&[("X", BigRational::from_integer(2.into()))]).unwrap();
        assert_eq!(half, BigRational::new(1.into(), 2.into()));
        assert_eq!(
            p.eval(&[("X", BigRational::zero())]),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn eval_named_point() {
        // X^2 + X + Y at (1, 2) = 4: the connected-graph count on 3 vertices.
        let p = x().mul(&x()).add(&x()).add(&y());
        let v = p
            .eval_int(&[("X", BigInt::from(1)), ("Y", BigInt::from(2))])
            .unwrap();
        assert_eq!(v, BigInt::from(4));
    }

    #[test]
    fn display_matches_canonical_tutte_k4_form() {
        // X^3 + 3X^2 + 2X + 4XY + 2Y + 3Y^2 + Y^3
        let mut p = LaurentPoly::monomial(1, &[("X", 3)]);
        p = p.add(&LaurentPoly::monomial(3, &[("X", 2)]));
        p = p.add(&LaurentPoly::monomial(2, &[("X", 1)]));
        p = p.add(&LaurentPoly::monomial(4, &[("X", 1), ("Y", 1)]));
        p = p.add(&LaurentPoly::monomial(2, &[("Y", 1)]));
        p = p.add(&LaurentPoly::monomial(3, &[("Y", 2)]));
        p = p.add(&LaurentPoly::monomial(1, &[("Y", 3)]));
        assert_eq!(
            p.to_string(),
            "X^3 + 3*X^2 + 2*X + 4*X*Y + 2*Y + 3*Y^2 + Y^3"
        );
    }

    #[test]
    fn display_signs_and_negative_exponents() {
        let p = x().mul(&x()).sub(&x().scale(&BigInt::from(2))).add(&LaurentPoly::one());
        assert_eq!(p.to_string(), "X^2 - 2*X + 1");
        let q = LaurentPoly::monomial(-1, &[("X", -1)]);
        assert_eq!(q.to_string(), "-X^-1");
    }
}
