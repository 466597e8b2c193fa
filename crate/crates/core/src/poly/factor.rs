//! Factorization over `Q` by Zassenhaus: factor modulo a good prime, Hensel
//! lift past the Landau-Mignotte bound, recombine subsets exhaustively.

use super::{IntPolynomial, ModPoly};
use crate::arith::{is_prime, primes_from};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Default degree cap for [`factor_over_q`].
pub const DEFAULT_FACTOR_CAP: usize = 12;

/// `content * prod(factors) == input`. Factors are primitive with positive
/// leading coefficient, repeated according to multiplicity, sorted by
/// degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<IntPolynomial>,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn product(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::constant(self.content.clone()), |acc, f| &acc * f)
    }
}

pub fn factor_over_q(p: &IntPolynomial) -> Result<Factorization> {
    factor_over_q_with_cap(p, DEFAULT_FACTOR_CAP)
}

pub fn factor_over_q_with_cap(p: &IntPolynomial, cap: usize) -> Result<Factorization> {
    let Some(d) = p.degree() else {
        return Err(Error::ZeroInput);
    };
    if d > cap {
        return Err(Error::DegreeCapExceeded { degree: d, cap });
    }
    Ok(factor_over_q_uncapped(p))
}

pub(crate) fn factor_over_q_uncapped(p: &IntPolynomial) -> Factorization {
    assert!(!p.is_zero());
    let mut content = p.content();
    if p.lead().unwrap().is_negative() {
        content = -content;
    }
    let mut rest = p.div_scalar_exact(&content);
    let mut factors = Vec::new();

    let x = IntPolynomial::from_i64s(&[0, 1]);
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        rest = rest.div_exact(&x).unwrap();
        factors.push(x.clone());
    }
    if rest.degree().unwrap_or(0) > 0 {
        let sqf = rest.div_exact(&rest.gcd(&rest.derivative())).unwrap().primitive_part();
        for irr in factor_squarefree(&sqf) {
            while let Some(q) = rest.div_exact(&irr) {
                rest = q;
                factors.push(irr.clone());
            }
        }
    }
    debug_assert!(rest.degree() == Some(0) && rest.coeff(0).is_one());
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Factorization { content, factors }
}

/// Irreducible factors of a primitive squarefree polynomial of positive
/// degree with positive leading coefficient.
fn factor_squarefree(g: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = g.degree().unwrap();
    if n == 1 {
        return vec![g.clone()];
    }
    let lc = g.lead().unwrap().clone();

    // pick the good odd prime with the fewest modular factors among a few
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for p in primes_from(3) {
        let gp = ModPoly::from_int(g, p);
        if gp.degree() != Some(n) || !gp.is_squarefree() {
            continue;
        }
        let count: usize = gp
            .distinct_degree()
            .iter()
            .map(|(k, f)| f.degree().unwrap() / k)
            .sum();
        if count == 1 {
            return vec![g.clone()];
        }
        if best.map_or(true, |(_, c)| count < c) {
            best = Some((p, count));
        }
        tried += 1;
        if tried >= 8 {
            break;
        }
    }
    let (p, _) = best.expect("a good prime exists");
    debug_assert!(is_prime(p));
    let modular = ModPoly::from_int(g, p).factor_squarefree();

    // Landau-Mignotte: every coefficient of lc(g)/lc(h) * h is at most
    // 2^n ||g||_2 in absolute value; lift past twice that.
    let norm2_sq: BigInt = g.coeffs().iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + 1u32;
    let bound = (norm2 << n) * lc.abs();
    let mut k = 1u32;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= &bound * 2u32 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(g, &modular, p, k);
    recombine(g, lifted, &modulus)
}

fn recombine(g: &IntPolynomial, mut lifted: Vec<IntPolynomial>, modulus: &BigInt) -> Vec<IntPolynomial> {
    let mut out = Vec::new();
    let mut rest = g.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in Combinations::new(lifted.len(), s) {
            let lc = rest.lead().unwrap().clone();
            let mut cand = IntPolynomial::constant(lc);
            for &i in &subset {
                cand = symmetric_mod(&(&cand * &lifted[i]), modulus);
            }
            let cand = cand.primitive_part();
            if let Some(q) = rest.div_exact(&cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest.primitive_part());
    }
    out
}

fn symmetric_mod(p: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    let half = m / 2u32;
    IntPolynomial::new(
        p.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn reduce(p: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(p.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn to_int(p: &ModPoly) -> IntPolynomial {
    IntPolynomial::new(p.coeffs().iter().map(|&c| BigInt::from(c)).collect())
}

/// Division by a monic polynomial over `Z`.
fn divrem_monic(a: &IntPolynomial, h: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    let dh = h.degree().unwrap();
    debug_assert!(h.is_monic());
    let Some(da) = a.degree() else {
        return (IntPolynomial::zero(), IntPolynomial::zero());
    };
    if da < dh {
        return (IntPolynomial::zero(), a.clone());
    }
    let mut rem = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); da - dh + 1];
    for i in (0..=da - dh).rev() {
        let t = rem[i + dh].clone();
        if t.is_zero() {
            continue;
        }
        for (j, c) in h.coeffs().iter().enumerate() {
            rem[i + j] -= &t * c;
        }
        q[i] = t;
    }
    rem.truncate(dh);
    (IntPolynomial::new(q), IntPolynomial::new(rem))
}

/// Lift monic factors of `f / lc(f)` mod p to monic factors mod `p^k`.
fn hensel_lift(f: &IntPolynomial, facs: &[ModPoly], p: u64, k: u32) -> Vec<IntPolynomial> {
    let pk = num_traits::pow(BigInt::from(p), k as usize);
    if facs.len() == 1 {
        let lc = f.lead().unwrap().mod_floor(&pk);
        let inv = mod_inverse(&lc, &pk);
        return vec![reduce(&f.scalar_mul(&inv), &pk)];
    }
    let mid = facs.len() / 2;
    let lc_p = crate::arith::big_mod_u64(f.lead().unwrap(), p);
    let g0 = facs[..mid]
        .iter()
        .fold(ModPoly::new(p, vec![lc_p]), |a, b| a.mul(b));
    let h0 = facs[mid..].iter().fold(ModPoly::one(p), |a, b| a.mul(b));
    let (g, h) = hensel_two(f, &g0, &h0, p, &pk);
    let mut out = hensel_lift(&g, &facs[..mid], p, k);
    out.extend(hensel_lift(&h, &facs[mid..], p, k));
    out
}

/// Quadratic Hensel lifting of `f = g h (mod p)` to modulus `pk`; `h` is
/// kept monic.
fn hensel_two(
    f: &IntPolynomial,
    g0: &ModPoly,
    h0: &ModPoly,
    p: u64,
    pk: &BigInt,
) -> (IntPolynomial, IntPolynomial) {
    let (one, s0, t0) = g0.ext_gcd(h0);
    debug_assert_eq!(one.degree(), Some(0));
    let (mut g, mut h, mut s, mut t) = (to_int(g0), to_int(h0), to_int(&s0), to_int(&t0));
    let mut m = BigInt::from(p);
    while &m < pk {
        let m2 = &m * &m;
        let e = reduce(&(f - &(&g * &h)), &m2);
        let (q, r) = divrem_monic(&reduce(&(&s * &e), &m2), &h);
        let g_new = reduce(&(&(&g + &(&t * &e)) + &(&q * &g)), &m2);
        let h_new = reduce(&(&h + &r), &m2);
        let b = reduce(
            &(&(&(&s * &g_new) + &(&t * &h_new)) - &IntPolynomial::one()),
            &m2,
        );
        let (c, d) = divrem_monic(&reduce(&(&s * &b), &m2), &h_new);
        let s_new = reduce(&(&s - &d), &m2);
        let t_new = reduce(&(&(&t - &(&t * &b)) - &(&c * &g_new)), &m2);
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    (reduce(&g, pk), reduce(&h, pk))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Index subsets of `{0..n}` of size `k` in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn examples() {
        let f = factor_over_q(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
        let f = factor_over_q(&p(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![p(&[1, 0, 0, 0, 1])]);
        let f = factor_over_q(&p(&[1, -2, 1])).unwrap();
        assert_eq!(f.factors, vec![p(&[-1, 1]), p(&[-1, 1])]);
    }

    #[test]
    fn content_and_sign() {
        let f = factor_over_q(&p(&[-6, 0, -6])).unwrap();
        assert_eq!(f.content, BigInt::from(-6));
        assert_eq!(f.factors, vec![p(&[1, 0, 1])]);
        let f = factor_over_q(&p(&[0, 0, 2, 2])).unwrap();
        assert_eq!(f.product(), p(&[0, 0, 2, 2]));
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn non_monic_recombination() {
        // (6x^2 + 5x - 7)(10x^3 - 3x + 11)(x^2 + x + 1)
        let a = p(&[-7, 5, 6]);
        let b = p(&[11, -3, 0, 10]);
        let c = p(&[1, 1, 1]);
        let f = &(&a * &b) * &c;
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.product(), f);
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.contains(&a) && fac.factors.contains(&b) && fac.factors.contains(&c));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible but splits mod every prime
        let f = factor_over_q(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert!(f.is_irreducible());
    }

    #[test]
    fn cap() {
        let big = IntPolynomial::monomial(BigInt::one(), 13);
        assert!(matches!(factor_over_q(&big), Err(Error::DegreeCapExceeded { .. })));
        assert!(factor_over_q_with_cap(&big, 13).is_ok());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
