//! Crate-internal modular arithmetic helpers.

/// Canonical residue of a signed integer.
pub(crate) fn embed_i64(x: i64, mu: u64) -> u64 {
    let m = mu as i128;
    (((x as i128 % m) + m) % m) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, mu: u64) -> u64 {
    (a as u128 * b as u128 % mu as u128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, mu: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % mu as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, mu: u64) -> u64 {
    (a as u128 + mu as u128 - b as u128) as u64 % mu
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, mu: u64) -> u64 {
    base %= mu;
    let mut acc = 1 % mu;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, mu);
        }
        base = mul_mod(base, base, mu);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse modulo `mu`, if `gcd(a, mu) == 1`.
pub(crate) fn inv_mod(a: u64, mu: u64) -> Option<u64> {
    let (mut r0, mut r1) = (mu as i128, (a % mu) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    let m = mu as i128;
    Some((((s0 % m) + m) % m) as u64)
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_power() {
        for mu in [2u64, 3, 5, 7, 9, 12, 97] {
            for a in 1..mu {
                match inv_mod(a, mu) {
                    Some(i) => assert_eq!(mul_mod(a, i, mu), 1 % mu),
                    None => assert_ne!(gcd_u64(a, mu), 1),
                }
            }
        }
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(pow_mod(0, 0, 7), 1);
    }

    #[test]
    fn embedding_negatives() {
        assert_eq!(embed_i64(-1, 5), 4);
        assert_eq!(embed_i64(-7, 5), 3);
        assert_eq!(embed_i64(13, 5), 3);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }
}
