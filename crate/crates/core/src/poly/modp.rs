//! Polynomials over `F_p` for word-sized primes, with distinct-degree and
//! equal-degree factorization.

use super::{DegreePartition, IntPolynomial};
use crate::arith::{big_mod_u64, inv_mod, is_prime, mul_mod};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    p: u64,
    c: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|x| big_mod_u64(x, p)).collect())
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p);
        Self::new(self.p, self.c.iter().map(|&x| mul_mod(x, inv, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| {
                    (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0))
                        % self.p
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        Self::new(
            p,
            (0..n)
                .map(|i| {
                    (self.c.get(i).copied().unwrap_or(0) + p - o.c.get(i).copied().unwrap_or(0))
                        % p
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&x| mul_mod(x, k, self.p)).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial mod p");
        if self.c.len() <= dd {
            return (Self::new(p, vec![]), self.clone());
        }
        let inv = if d.lead() == 1 { 1 } else { inv_mod(d.lead(), p) };
        let mut rem = self.c.clone();
        let n = rem.len() - 1;
        let mut q = vec![0u64; n - dd + 1];
        for i in (0..=n - dd).rev() {
            let t = mul_mod(rem[i + dd], inv, p);
            if t == 0 {
                continue;
            }
            for (j, &c) in d.c.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mul_mod(t, c, p)) % p;
            }
            q[i] = t;
        }
        rem.truncate(dd);
        (Self::new(p, q), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s self + t o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::new(p, vec![]));
        let (mut t0, mut t1) = (Self::new(p, vec![]), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.lead(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree().map_or(false, |d| d == 0 || self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(k, product of all degree-k irreducible factors)` for each k present.
    pub fn distinct_degree(&self) -> Vec<(usize, ModPoly)> {
        let p = self.p;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut k = 0;
        while let Some(df) = f.degree() {
            if df == 0 {
                break;
            }
            k += 1;
            if 2 * k > df {
                out.push((df, f.clone()));
                break;
            }
            h = h.pow_mod(p, &f);
            let g = h.sub(&x).gcd(&f);
            if g.degree().unwrap_or(0) > 0 {
                out.push((k, g.clone()));
                f = f.div_rem(&g).0;
                h = h.rem(&f);
            }
        }
        out
    }

    /// Split a product of distinct monic irreducibles of degree `k` (odd p).
    fn equal_degree(&self, k: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
        let p = self.p;
        debug_assert!(p % 2 == 1);
        let d = self.degree().unwrap();
        if d == k {
            return vec![self.monic()];
        }
        let mut stack = vec![self.monic()];
        let mut out = Vec::new();
        while let Some(f) = stack.pop() {
            let df = f.degree().unwrap();
            if df == k {
                out.push(f);
                continue;
            }
            loop {
                let r = Self::new(p, (0..df).map(|_| rng.gen_range(0..p)).collect());
                if r.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let e = half_pk_minus_one(p, k);
                let s = pow_mod_big(&r, &e, &f).sub(&Self::one(p));
                let g = s.gcd(&f);
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && dg < df {
                    let other = f.div_rem(&g).0;
                    stack.push(g);
                    stack.push(other.monic());
                    break;
                }
            }
        }
        out
    }

    /// Complete factorization of a squarefree polynomial into monic
    /// irreducibles over `F_p`, p odd. Deterministic.
    pub fn factor_squarefree(&self) -> Vec<ModPoly> {
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd prime");
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.p);
        let mut out = Vec::new();
        for (k, g) in self.distinct_degree() {
            out.extend(g.equal_degree(k, &mut rng));
        }
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.c.cmp(&b.c)));
        out
    }
}

fn half_pk_minus_one(p: u64, k: usize) -> num_bigint::BigUint {
    let pk = num_traits::pow(num_bigint::BigUint::from(p), k);
    (pk - 1u32) / 2u32
}

fn pow_mod_big(base: &ModPoly, e: &num_bigint::BigUint, m: &ModPoly) -> ModPoly {
    let mut acc = ModPoly::one(base.p).rem(m);
    let b = base.rem(m);
    for bit in (0..e.bits()).rev() {
        acc = acc.mul(&acc).rem(m);
        if e.bit(bit) {
            acc = acc.mul(&b).rem(m);
        }
    }
    acc
}

/// Degrees of the irreducible factors of `f` modulo the prime `q`.
///
/// When `q` divides neither the leading coefficient nor the discriminant,
/// this is the cycle type of a Frobenius element at `q` (Dedekind).
pub fn factor_mod_p(f: &IntPolynomial, q: u64) -> Result<DegreePartition> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let Some(n) = f.degree() else {
        return Err(Error::ZeroInput);
    };
    let fq = ModPoly::from_int(f, q);
    if fq.degree() != Some(n) {
        return Err(Error::BadPrime { prime: q, reason: "divides the leading coefficient".into() });
    }
    if n == 0 {
        return Ok(DegreePartition::new(vec![]));
    }
    if !fq.is_squarefree() {
        return Err(Error::BadPrime { prime: q, reason: "divides the discriminant".into() });
    }
    let mut parts = Vec::new();
    for (k, g) in fq.distinct_degree() {
        let cnt = g.degree().unwrap() / k;
        parts.extend(std::iter::repeat(k).take(cnt));
    }
    Ok(DegreePartition::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn partition_examples() {
        assert_eq!(factor_mod_p(&p(&[1, 0, 1]), 5).unwrap().parts(), &[1, 1]);
        assert_eq!(factor_mod_p(&p(&[1, 0, 1]), 3).unwrap().parts(), &[2]);
        assert_eq!(factor_mod_p(&p(&[1, 1, 0, 1]), 2).unwrap().parts(), &[3]);
    }

    #[test]
    fn bad_primes() {
        assert!(matches!(factor_mod_p(&p(&[1, 0, 3]), 3), Err(Error::BadPrime { .. })));
        // x^2 + 1 = (x + 1)^2 mod 2
        assert!(matches!(factor_mod_p(&p(&[1, 0, 1]), 2), Err(Error::BadPrime { .. })));
        assert_eq!(factor_mod_p(&p(&[1, 0, 1]), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn full_factorization_multiplies_back() {
        let f = ModPoly::from_int(&p(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]), 17);
        let facs = f.factor_squarefree();
        assert_eq!(facs.len(), 8);
        let prod = facs.iter().fold(ModPoly::one(17), |a, b| a.mul(b));
        assert_eq!(prod, f);
        let g = ModPoly::from_int(&p(&[1, 1, 0, 0, 0, 1]), 7);
        let facs = g.factor_squarefree();
        let prod = facs.iter().fold(ModPoly::one(7), |a, b| a.mul(b));
        assert_eq!(prod, g.monic());
    }

    #[test]
    fn large_prime_partition() {
        // x^2 - 2 at a prime p = 1_000_000_007: 2 is a QR iff p = +-1 mod 8
        let q = 1_000_000_007u64;
        let parts = factor_mod_p(&p(&[-2, 0, 1]), q).unwrap();
        let expected = if q % 8 == 1 || q % 8 == 7 { vec![1, 1] } else { vec![2] };
        assert_eq!(parts.parts(), &expected[..]);
    }
}
