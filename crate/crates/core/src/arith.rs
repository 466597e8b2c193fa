//! Scalar number theory on machine words and big integers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    if m <= 1 << 32 {
        // reduced operands keep the product below 2^64
        if a < m && b < m {
            return a * b % m;
        }
        (a % m) * (b % m) % m
    } else {
        ((a as u128 * b as u128) % m as u128) as u64
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`; `a` must be a unit.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `>= start`, ascending.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime(n))
}

pub fn next_prime_after(n: u64) -> u64 {
    primes_from(n + 1).next().expect("prime above n")
}

/// Residue of a big integer in `[0, p)`.
pub fn big_mod_u64(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// `v_p(x)`, or `None` for `x = 0`.
pub fn valuation(x: &BigInt, p: u64) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        x = q;
        v += 1;
    }
}

/// Legendre-style square root search: returns every `m` in `[1, p)` with
/// `m^2 = a (mod p)`. Linear scan; the primes involved are small.
pub fn sqrt_mod_all(a: u64, p: u64) -> Vec<u64> {
    let a = a % p;
    (1..p).filter(|&m| mul_mod(m, m, p) == a).collect()
}

/// Smallest integer `r >= 0` with `r^k >= x` for `x >= 0`.
pub fn ceil_root(x: &BigUint, k: u32) -> BigUint {
    let r = x.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *x {
        r
    } else {
        r + 1u32
    }
}

/// Trial-division factorization of |x| into ascending primes, stopping at
/// `limit`. The returned cofactor is whatever is left (1 if fully factored).
pub fn trial_factor(x: &BigInt, limit: u64) -> (Vec<(u64, u32)>, BigInt) {
    let mut rest = x.abs();
    let mut out = Vec::new();
    if rest.is_zero() {
        return (out, rest);
    }
    let mut p = 2u64;
    while p <= limit && !rest.is_one() {
        let bp = BigInt::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        if &bp * &bp > rest {
            if !rest.is_one() {
                if let Some(r) = rest.to_u64() {
                    if r <= limit || is_prime(r) {
                        out.push((r, 1));
                        rest = BigInt::one();
                    }
                }
            }
            break;
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    (out, rest)
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(is_prime(18446744073709551557));
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&BigInt::from(50), 5), Some(2));
        assert_eq!(valuation(&BigInt::from(-7), 5), Some(0));
        assert_eq!(valuation(&BigInt::zero(), 5), None);
    }

    #[test]
    fn roots_and_binomials() {
        assert_eq!(ceil_root(&BigUint::from(8u32), 3), BigUint::from(2u32));
        assert_eq!(ceil_root(&BigUint::from(9u32), 3), BigUint::from(3u32));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(sqrt_mod_all(4, 7), vec![2, 5]);
    }

    #[test]
    fn trial_factoring() {
        let (f, rest) = trial_factor(&BigInt::from(-360), 100);
        assert_eq!(f, vec![(2, 3), (3, 2), (5, 1)]);
        assert!(rest.is_one());
        let (f, _) = trial_factor(&BigInt::from(17), 100);
        assert_eq!(f, vec![(17, 1)]);
    }
}
