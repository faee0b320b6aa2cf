//! Tutte polynomial engines for `K_n`.
//!
//! The workhorse is the random-cluster rewrite: with `q = (X-1)(Y-1)` and
//! `v = Y-1`,
//!
//! ```text
//! T(K_n; X, Y) = Z_n(q, v) / ((Y-1)^n (X-1)),
//! Z_n(q, v) = sum over A subset E(K_n) of q^{kappa(A)} v^{|A|},
//! ```
//!
//! and `Z_n` falls to a labelled-component convolution, which costs
//! polynomially many ring operations instead of a deletion-contraction
//! recursion. Modulo `mu`, the division becomes multiplication by modular
//! inverses, which exist exactly when `gcd(a-1, mu) = gcd(b-1, mu) = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::exact::LaurentPoly;

use super::convolution::{connected_weight_entries, z_table};
use super::ring::{IntRing, ModRing, PolyRing};
use super::EngineError;

/// Table of connected-subgraph weights `c_1..c_N`.
#[derive(Debug, Clone)]
pub struct ConnectedWeightTable<T> {
    entries: Vec<T>,
}

impl<T> ConnectedWeightTable<T> {
    /// `c_k`, 1-based.
    pub fn c(&self, k: usize) -> &T {
        assert!(k >= 1 && k < self.entries.len());
        &self.entries[k]
    }

    pub fn len(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn connected_weights(n: usize, v: &BigInt) -> ConnectedWeightTable<BigInt> {
    assert!(n >= 1);
    ConnectedWeightTable { entries: connected_weight_entries(&IntRing, v, n) }
}

pub fn connected_weights_symbolic(n: usize, v: &LaurentPoly) -> ConnectedWeightTable<LaurentPoly> {
    assert!(n >= 1);
    ConnectedWeightTable { entries: connected_weight_entries(&PolyRing, v, n) }
}

/// `Z_n = sum_{A subset E(K_n)} q^{kappa(A)} v^{|A|}` exactly.
pub fn z_partition(n: usize, q: &BigInt, v: &BigInt) -> BigInt {
    z_table(&IntRing, q, v, n).pop().expect("table is nonempty")
}

pub fn z_partition_symbolic(n: usize, q: &LaurentPoly, v: &LaurentPoly) -> LaurentPoly {
    z_table(&PolyRing, q, v, n).pop().expect("table is nonempty")
}

/// `f_{a,b}(n) = (b-1)^n (a-1) T(K_n; a, b) = Z_n((a-1)(b-1), b-1)`.
pub fn f_ab(n: usize, a: i64, b: i64) -> BigInt {
    assert!(n >= 1);
    let q = BigInt::from(a - 1) * BigInt::from(b - 1);
    z_partition(n, &q, &BigInt::from(b - 1))
}

/// Full symbolic `T(K_n; X, Y)` via the rewrite and one exact division.
pub fn tutte_complete_symbolic(n: usize, budget: usize) -> Result<LaurentPoly, EngineError> {
    assert!(n >= 1);
    if n > budget {
        return Err(EngineError::BudgetExceeded { n, budget });
    }
    let x1 = LaurentPoly::var("X").sub(&LaurentPoly::one());
    let y1 = LaurentPoly::var("Y").sub(&LaurentPoly::one());
    let q = x1.mul(&y1);
    let z = z_partition_symbolic(n, &q, &y1);
    let divisor = y1.pow(n as u32).mul(&x1);
    Ok(z
        .div_exact(&divisor)
        .expect("the rewrite sum is exactly divisible by (Y-1)^n (X-1)"))
}

/// Exact `T(K_n; a, b)`.
///
/// For `a != 1` and `b != 1` this is `f_{a,b}(n)` divided exactly by
/// `(b-1)^n (a-1)`; otherwise the full symbolic polynomial is evaluated,
/// which is subject to `budget`.
pub fn tutte_complete_eval(n: usize, a: i64, b: i64, budget: usize) -> Result<BigInt, EngineError> {
    assert!(n >= 1);
    if a != 1 && b != 1 {
        let f = f_ab(n, a, b);
        let divisor = pow_bigint(&BigInt::from(b - 1), n) * BigInt::from(a - 1);
        let (t, rem) = f.div_rem(&divisor);
        assert!(rem.is_zero(), "rewrite division must be exact");
        Ok(t)
    } else {
        let t = tutte_complete_symbolic(n, budget)?;
        Ok(t
            .eval_int(&[("X", BigInt::from(a)), ("Y", BigInt::from(b))])
            .expect("Tutte polynomials of complete graphs have nonnegative exponents"))
    }
}

/// `T(K_m; a, b) mod mu` for `m = 1..=horizon` in one pass, entirely in
/// modular arithmetic. Requires `gcd(a-1, mu) = gcd(b-1, mu) = 1`.
pub fn tutte_mod_sequence(a: i64, b: i64, mu: u64, horizon: usize) -> Result<Vec<u64>, EngineError> {
    assert!(mu >= 2);
    let ring = ModRing { mu };
    let a1 = ring.embed(a - 1);
    let b1 = ring.embed(b - 1);
    let inv_a1 = arith::inv_mod(a1, mu).ok_or(EngineError::NonInvertible { value: a1, mu })?;
    let inv_b1 = arith::inv_mod(b1, mu).ok_or(EngineError::NonInvertible { value: b1, mu })?;
    let q = arith::mul_mod(a1, b1, mu);
    let z = z_table(&ring, &q, &b1, horizon);
    let mut out = Vec::with_capacity(horizon);
    let mut inv_b1_pow = 1 % mu;
    for (m, zm) in z.iter().enumerate().skip(1) {
        inv_b1_pow = arith::mul_mod(inv_b1_pow, inv_b1, mu);
        let t = arith::mul_mod(arith::mul_mod(*zm, inv_a1, mu), inv_b1_pow, mu);
        out.push(t);
        debug_assert!(m <= horizon);
    }
    Ok(out)
}

/// `T(K_n; a, b) mod mu`: the modular fast path when the gcd hypotheses
/// hold, exact evaluation reduced mod `mu` otherwise.
pub fn tutte_complete_eval_mod(
    n: usize,
    a: i64,
    b: i64,
    mu: u64,
    budget: usize,
) -> Result<u64, EngineError> {
    assert!(n >= 1 && mu >= 2);
    let a1 = arith::embed_i64(a - 1, mu);
    let b1 = arith::embed_i64(b - 1, mu);
    if arith::gcd_u64(a1, mu) == 1 && arith::gcd_u64(b1, mu) == 1 {
        let seq = tutte_mod_sequence(a, b, mu, n)?;
        Ok(seq[n - 1])
    } else {
        let exact = tutte_complete_eval(n, a, b, budget)?;
        Ok(bigint_mod(&exact, mu))
    }
}

pub(crate) fn bigint_mod(x: &BigInt, mu: u64) -> u64 {
    let m = BigInt::from(mu);
    let r = x.mod_floor(&m);
    let digits = r.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

pub(crate) fn pow_bigint(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `x^k` for signed bases and small exponents, with `0^0 = 1`.
pub(crate) fn pow_i64_bigint(base: i64, exp: usize) -> BigInt {
    pow_bigint(&BigInt::from(base), exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::graph::{EnumBudget, SmallGraph};

    #[test]
    fn z_partition_small_values() {
        assert_eq!(z_partition(1, &BigInt::from(7), &BigInt::from(3)), BigInt::from(7));
        // Z_2 = q^2 + q v.
        assert_eq!(z_partition(2, &BigInt::from(2), &BigInt::from(3)), BigInt::from(10));
        // Z_3 at (2, 1): brute sum over the 8 triangle subsets of 2^kappa.
        assert_eq!(z_partition(3, &BigInt::from(2), &BigInt::from(1)), BigInt::from(28));
    }

    #[test]
    fn z_partition_matches_brute_statistics() {
        let budget = EnumBudget::default();
        for n in 1..=5usize {
            let g = SmallGraph::complete(n);
            for (q, v) in [(2i64, 1i64), (3, 2), (-1, 2), (2, -2)] {
                let mut direct = BigInt::zero();
                for a in g.edge_subsets(&budget).unwrap() {
                    let kappa = g.component_count(a);
                    direct += pow_i64_bigint(q, kappa) * pow_i64_bigint(v, a.len());
                }
                assert_eq!(z_partition(n, &BigInt::from(q), &BigInt::from(v)), direct);
            }
        }
    }

    #[test]
    fn f_ab_examples() {
        assert_eq!(f_ab(2, 3, 3), BigInt::from(24));
        assert_eq!(f_ab(1, 5, 9), BigInt::from(32));
        // (b-1)^3 (a-1) T(K_3; 2, 2) = 8.
        assert_eq!(f_ab(3, 2, 2), BigInt::from(8));
    }

    #[test]
    fn symbolic_tutte_matches_brute_oracle() {
        let budget = EnumBudget::default();
        for n in 1..=6usize {
            let fast = tutte_complete_symbolic(n, 16).unwrap();
            let slow = brute::tutte_brute(&SmallGraph::complete(n), &budget).unwrap();
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn symbolic_budget_is_enforced() {
        assert!(matches!(
            tutte_complete_symbolic(17, 16),
            Err(EngineError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn eval_named_points() {
        assert_eq!(tutte_complete_eval(4, 1, 1, 16).unwrap(), BigInt::from(16));
        assert_eq!(tutte_complete_eval(3, 2, 1, 16).unwrap(), BigInt::from(7));
        assert_eq!(tutte_complete_eval(3, 1, 2, 16).unwrap(), BigInt::from(4));
    }

    #[test]
    fn eval_agrees_with_symbolic_on_a_grid() {
        for n in 1..=6usize {
            let sym = tutte_complete_symbolic(n, 16).unwrap();
            for a in -1i64..=3 {
                for b in -1i64..=3 {
                    let direct = sym
                        .eval_int(&[("X", BigInt::from(a)), ("Y", BigInt::from(b))])
                        .unwrap();
                    assert_eq!(tutte_complete_eval(n, a, b, 16).unwrap(), direct, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn spanning_tree_counts_follow_cayley() {
        for n in 2..=9usize {
            let expect = pow_bigint(&BigInt::from(n as i64), n - 2);
            assert_eq!(tutte_complete_eval(n, 1, 1, 16).unwrap(), expect);
        }
    }

    #[test]
    fn rewrite_identity_ties_eval_to_f_ab() {
        for n in 1..=8usize {
            for (a, b) in [(2i64, 2i64), (3, 2), (2, 3), (5, 4), (0, 2), (2, 0)] {
                if a == 1 || b == 1 {
                    continue;
                }
                let t = tutte_complete_eval(n, a, b, 16).unwrap();
                let lhs = t * pow_bigint(&BigInt::from(b - 1), n) * BigInt::from(a - 1);
                assert_eq!(lhs, f_ab(n, a, b));
            }
        }
    }

    #[test]
    fn mod_fast_path_agrees_with_exact() {
        for n in 1..=30usize {
            for a in 2i64..=5 {
                for b in 2i64..=5 {
                    for mu in 2u64..=7 {
                        let a1 = arith::embed_i64(a - 1, mu);
                        let b1 = arith::embed_i64(b - 1, mu);
                        if arith::gcd_u64(a1, mu) != 1 || arith::gcd_u64(b1, mu) != 1 {
                            continue;
                        }
                        let fast = tutte_complete_eval_mod(n, a, b, mu, 16).unwrap();
                        let exact = bigint_mod(&tutte_complete_eval(n, a, b, 16).unwrap(), mu);
                        assert_eq!(fast, exact, "n={n} a={a} b={b} mu={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn mod_fallback_path_used_when_gcd_fails() {
        // a = 1 forces the symbolic fallback.
        assert_eq!(tutte_complete_eval_mod(3, 1, 0, 3, 16).unwrap(), 2);
        // gcd(b - 1, mu) > 1 forces exact-then-reduce.
        let v = tutte_complete_eval_mod(5, 2, 3, 4, 16).unwrap();
        let exact = bigint_mod(&tutte_complete_eval(5, 2, 3, 16).unwrap(), 4);
        assert_eq!(v, exact);
    }

    #[test]
    fn connected_weight_table_symbolic_matches_eval() {
        let v_poly = LaurentPoly::var("v");
        let table = connected_weights_symbolic(5, &v_poly);
        for v in 0i64..=3 {
            let eval_table = connected_weights(5, &BigInt::from(v));
            for k in 1..=5usize {
                let sym = table.c(k).eval_int(&[("v", BigInt::from(v))]).unwrap();
                assert_eq!(&sym, eval_table.c(k), "k={k} v={v}");
            }
        }
    }
}
