//! Splitting-type fingerprints of number fields and exact isomorphism
//! testing for collisions.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::poly::{factor_mod_p, factor_over_q_uncapped, resultant, squarefree, DegreePartition, IntPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const DEFAULT_FINGERPRINT_PRIMES: usize = 50;
/// Large enough that small discriminants are rarely divisible by a
/// fingerprint prime, small enough for `u64` products.
pub const DEFAULT_FINGERPRINT_START: u64 = 1 << 30;
pub const DEFAULT_ISO_CAP: usize = 6;

/// The first `count` primes at or above `start`.
pub fn fingerprint_primes(start: u64, count: usize) -> Vec<u64> {
    (start..).filter(|&p| is_prime(p)).take(count).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldFingerprint {
    pub degree: usize,
    pub primes: Vec<u64>,
    pub types: Vec<DegreePartition>,
    pub class_id: Option<usize>,
}

impl FieldFingerprint {
    /// Short stable hash of the prime list and splitting types.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        for (p, t) in self.primes.iter().zip(&self.types) {
            h.update(format!("{p}:{t};"));
        }
        h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Splitting types agree at every prime both fingerprints used.
    pub fn agrees_with(&self, other: &FieldFingerprint) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let mut common = 0;
        for (p, t) in self.primes.iter().zip(&self.types) {
            if let Some(i) = other.primes.iter().position(|q| q == p) {
                if &other.types[i] != t {
                    return false;
                }
                common += 1;
            }
        }
        common > 0
    }
}

/// Splitting types of `F` at the given primes. A prime that is bad for
/// `F` is skipped and replaced by the next prime past the list.
pub fn fingerprint(f: &IntPolynomial, primes: &[u64]) -> Result<FieldFingerprint> {
    let degree = f.degree().ok_or(Error::ZeroInput)?;
    let mut used = Vec::with_capacity(primes.len());
    let mut types = Vec::with_capacity(primes.len());
    let mut next = primes.iter().max().map_or(2, |&p| p + 1);
    let mut queue = primes.to_vec().into_iter();
    let mut skipped = 0;
    while used.len() < primes.len() {
        let p = match queue.next() {
            Some(p) => p,
            None => {
                while !is_prime(next) {
                    next += 1;
                }
                next += 1;
                next - 1
            }
        };
        match factor_mod_p(f, p) {
            Ok(t) => {
                used.push(p);
                types.push(t);
            }
            Err(Error::BadPrime { .. }) => {
                skipped += 1;
                if skipped > 1000 {
                    return Err(Error::SearchExhausted("no good fingerprint primes".into()));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(FieldFingerprint { degree, primes: used, types, class_id: None })
}

/// `q(x + t y)` as a polynomial in `y`, for a fixed integer `x`.
fn shifted(q: &IntPolynomial, x: &BigInt, t: &BigInt) -> IntPolynomial {
    let lin = IntPolynomial::new(vec![x.clone(), t.clone()]);
    let mut acc = IntPolynomial::zero();
    for c in q.coeffs().iter().rev() {
        acc = &(&acc * &lin) + &IntPolynomial::constant(c.clone());
    }
    acc
}

/// Newton interpolation through `(i, values[i])`, `i = 0, 1, ...`.
fn interpolate(values: &[BigInt]) -> IntPolynomial {
    let mut dd: Vec<BigRational> = values.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    let m = dd.len();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner on the Newton basis (x)(x-1)...(x-k+1)
    let mut acc: Vec<BigRational> = vec![dd[m - 1].clone()];
    for k in (0..m - 1).rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c.clone();
            next[i] -= c.clone() * BigRational::from_integer(BigInt::from(k));
        }
        next[0] += dd[k].clone();
        acc = next;
    }
    IntPolynomial::new(acc.into_iter().map(|c| {
        debug_assert!(c.is_integer());
        c.to_integer()
    }).collect())
}

/// `Res_y(F1(y), F2(x + t y))` as a polynomial in `x`.
pub fn trager_norm(f1: &IntPolynomial, f2: &IntPolynomial, t: i64) -> Result<IntPolynomial> {
    let n1 = f1.degree().ok_or(Error::ZeroInput)?;
    let n2 = f2.degree().ok_or(Error::ZeroInput)?;
    let t = BigInt::from(t);
    let values = (0..=(n1 * n2) as i64)
        .map(|x| resultant(f1, &shifted(f2, &BigInt::from(x), &t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&values))
}

/// Whether `F2` has a root in `Q[x]/(F1)`, so the two define the same
/// field when both are irreducible of equal degree.
pub fn isomorphic_exact(f1: &IntPolynomial, f2: &IntPolynomial, cap: usize) -> Result<bool> {
    let n = f1.degree().ok_or(Error::ZeroInput)?;
    if f2.degree() != Some(n) {
        return Ok(false);
    }
    if n > cap {
        return Err(Error::DegreeCapExceeded { degree: n, cap });
    }
    if n == 1 {
        return Ok(true);
    }
    for t in 1..=64 {
        let norm = trager_norm(f1, f2, t)?;
        if !squarefree(&norm) {
            continue;
        }
        let fac = factor_over_q_uncapped(&norm);
        return Ok(fac.factors.iter().any(|g| g.degree() == Some(n)));
    }
    Err(Error::SearchExhausted("no squarefree norm for t <= 64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn interpolation_roundtrip() {
        let f = p(&[3, -1, 0, 2, 5]);
        let vals: Vec<BigInt> = (0..5).map(|x| f.eval(&BigInt::from(x))).collect();
        assert_eq!(interpolate(&vals), f);
    }

    #[test]
    fn quadratic_fields() {
        let primes = fingerprint_primes(3, 10);
        let a = fingerprint(&p(&[-2, 0, 1]), &primes).unwrap();
        let b = fingerprint(&p(&[-3, 0, 1]), &primes).unwrap();
        assert!(!a.agrees_with(&b));
        // 2 and 3 are both non-residues mod 5; mod 7 only 2 is a square
        let at = |f: &FieldFingerprint, q: u64| f.types[f.primes.iter().position(|&x| x == q).unwrap()].to_string();
        assert_eq!((at(&a, 5), at(&b, 5)), ("[2]".to_string(), "[2]".to_string()));
        assert_eq!((at(&a, 7), at(&b, 7)), ("[1,1]".to_string(), "[2]".to_string()));
        assert!(!isomorphic_exact(&p(&[-2, 0, 1]), &p(&[-3, 0, 1]), 6).unwrap());
        assert!(isomorphic_exact(&p(&[-2, 0, 1]), &p(&[-8, 0, 1]), 6).unwrap());
    }

    #[test]
    fn translates() {
        let f = p(&[1, 1, 0, 1]);
        let g = f.translate(&BigInt::from(3));
        let primes = fingerprint_primes(DEFAULT_FINGERPRINT_START, 20);
        assert_eq!(fingerprint(&f, &primes).unwrap().types, fingerprint(&g, &primes).unwrap().types);
        assert!(isomorphic_exact(&f, &g, 6).unwrap());
        assert!(!isomorphic_exact(&f, &p(&[1, 2, 0, 1]), 6).unwrap());
    }

    #[test]
    fn bad_primes_are_replaced() {
        // disc(x^2 - 5) = 20
        let fp = fingerprint(&p(&[-5, 0, 1]), &[2, 3, 5, 7]).unwrap();
        assert_eq!(fp.primes.len(), 4);
        assert!(!fp.primes.contains(&2) && !fp.primes.contains(&5));
    }

    #[test]
    fn cap() {
        let f = p(&[1, 1, 0, 0, 0, 0, 0, 1]);
        assert!(matches!(isomorphic_exact(&f, &f, 6), Err(Error::DegreeCapExceeded { .. })));
    }
}
