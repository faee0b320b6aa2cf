//! Minimal commutative-ring abstraction so the convolution engines can run
//! over exact integers, residues, and symbolic polynomials unchanged.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith;
use crate::exact::LaurentPoly;

pub(crate) trait Ring {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

pub(crate) struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
}

pub(crate) struct ModRing {
    pub mu: u64,
}

impl ModRing {
    pub fn embed(&self, x: i64) -> u64 {
        arith::embed_i64(x, self.mu)
    }
}

impl Ring for ModRing {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.mu
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        arith::add_mod(*a, *b, self.mu)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        arith::sub_mod(*a, *b, self.mu)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        arith::mul_mod(*a, *b, self.mu)
    }
}

pub(crate) struct PolyRing;

impl Ring for PolyRing {
    type Elem = LaurentPoly;
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b)
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.sub(b)
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul(b)
    }
}

/// Rolling Pascal row: replaces row `k` with row `k + 1` in place.
pub(crate) fn pascal_step<R: Ring>(ring: &R, row: &mut Vec<R::Elem>) {
    row.push(ring.one());
    let len = row.len();
    for j in (1..len - 1).rev() {
        row[j] = ring.add(&row[j], &row[j - 1]);
    }
}
