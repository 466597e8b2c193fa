//! Exact univariate polynomials over the integers and the rationals.
//!
//! Polynomials are dense, stored ascending (`coeffs[i]` multiplies `x^i`)
//! with no trailing zeros; the zero polynomial is the empty vector. Sparse
//! inputs get no special treatment.
//!
//! The text format used by every interface of this crate is a
//! comma-separated list of base-10 integer coefficients in ascending
//! degree: `"1,1,0,1"` is `x^3 + x + 1`. The zero polynomial is `"0"`.

mod factor;
mod modp;
mod partition;
mod rat;
mod resultant;

pub use factor::{factor_over_q, factor_over_q_with_cap, Factorization, DEFAULT_FACTOR_CAP};
pub use modp::{factor_mod_p, ModPoly};
pub use partition::DegreePartition;
pub use rat::RatPolynomial;
pub use resultant::{discriminant, resultant, squarefree, sylvester_resultant};

pub(crate) use factor::factor_over_q_uncapped;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: BigInt) -> Self {
        Self::new(vec![-r, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn degree_i(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().map_or(false, One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// The polynomial divided by its content, with positive leading
    /// coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().unwrap().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Divide every coefficient by `k`, which must divide them all.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % k).is_zero());
                    c / k
                })
                .collect(),
        )
    }

    /// Exact division in `Z[x]`: `Some(q)` when `self = q * d`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        let lc = d.lead().unwrap();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("pseudo-division by zero");
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        if n < dd {
            return self.clone();
        }
        let lc = d.lead().unwrap();
        let mut rem = self.coeffs.clone();
        let mut steps = n - dd + 1;
        for i in (dd..=n).rev() {
            let top = rem[i].clone();
            for c in rem.iter_mut().take(i + 1) {
                *c *= lc;
            }
            steps -= 1;
            if !top.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i - dd + j] -= &top * dc;
                }
            }
            rem.truncate(i);
        }
        debug_assert_eq!(steps, 0);
        Self::new(rem)
    }

    /// `p(x + k)` by repeated synthetic division (Taylor shift).
    pub fn translate(&self, k: &BigInt) -> IntPolynomial {
        if k.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * k;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `p(m x)`.
    pub fn scale_x(&self, m: &BigInt) -> Result<IntPolynomial> {
        if m.is_zero() {
            return Err(Error::ZeroScale);
        }
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= m;
        }
        Ok(Self::new(out))
    }

    /// `c_d^(d-1) f(x / c_d)`: a monic integer model of the same curve.
    pub fn monicize(&self) -> IntPolynomial {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let lc = self.lead().unwrap().clone();
        // coefficient of x^i becomes c_i * lc^(d-1-i); x^d gets lc^(d-1)/lc^(d-1)*lc/lc = 1
        let mut out = Vec::with_capacity(d + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i == d {
                out.push(BigInt::one());
            } else {
                out.push(c * num_traits::pow(lc.clone(), d - 1 - i));
            }
        }
        Self::new(out)
    }

    /// Rational remainder-free gcd over `Q[x]`, returned primitive with
    /// positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree_i() < b.degree_i() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Multiply by -1 if needed so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> IntPolynomial {
        match self.lead() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Human-readable form, e.g. `x^3 + x + 1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                s.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => s.push('x'),
                _ => s.push_str(&format!("x^{i}")),
            }
        }
        s
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.pretty())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial string".into()));
        }
        let coeffs = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                BigInt::from_str(t)
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPolynomial {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(if negate_b { x - y } else { x + y });
    }
    IntPolynomial::new(out)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p(&[1, 1]).square(), p(&[1, 2, 1]));
        assert!((&p(&[3, 4]) * &IntPolynomial::zero()).is_zero());
        assert_eq!(&p(&[3, 0, 1]) * &p(&[-5, 2]), p(&[-15, 6, -5, 2]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPolynomial::zero());
    }

    #[test]
    fn translate_examples() {
        assert_eq!(p(&[0, 0, 1]).translate(&1.into()), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 1, 0, 1]).translate(&0.into()), p(&[1, 1, 0, 1]));
        assert_eq!(p(&[1, 1, 0, 1]).translate(&2.into()), p(&[11, 13, 6, 1]));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(p(&[0, 1, 1]).scale_x(&3.into()).unwrap(), p(&[0, 3, 9]));
        assert_eq!(p(&[5, 1, 7]).scale_x(&1.into()).unwrap(), p(&[5, 1, 7]));
        assert_eq!(p(&[1, 0, 0, 1]).scale_x(&2.into()).unwrap(), p(&[1, 0, 0, 8]));
        assert_eq!(p(&[1, 1]).scale_x(&0.into()), Err(Error::ZeroScale));
    }

    #[test]
    fn monicize_examples() {
        assert_eq!(p(&[1, 1, 0, 2]).monicize(), p(&[4, 2, 0, 1]));
        assert_eq!(p(&[1, 1, 0, 1]).monicize(), p(&[1, 1, 0, 1]));
        assert_eq!(p(&[-6, 3]).monicize(), p(&[-6, 1]));
    }

    #[test]
    fn monicize_is_scaled_substitution() {
        // c^(d-1) f(x/c) == c^(-1) * (c^d f(x/c)) and c^d f(x/c) = sum c_i c^(d-i) x^i
        let f = p(&[3, -1, 4, 5]);
        let c = BigInt::from(5);
        let d = 3usize;
        let via_def: Vec<BigInt> = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, ci)| ci * num_traits::pow(c.clone(), d - i) / &c)
            .collect();
        assert_eq!(f.monicize(), IntPolynomial::new(via_def));
    }

    #[test]
    fn text_format_round_trip() {
        let q: IntPolynomial = "1,1,0,1".parse().unwrap();
        assert_eq!(q, p(&[1, 1, 0, 1]));
        assert_eq!(q.to_string(), "1,1,0,1");
        assert_eq!("-5, 0, 1".parse::<IntPolynomial>().unwrap().to_string(), "-5,0,1");
        assert_eq!("0".parse::<IntPolynomial>().unwrap(), IntPolynomial::zero());
        assert!("1,,2".parse::<IntPolynomial>().is_err());
        assert!("1,x".parse::<IntPolynomial>().is_err());
        assert_eq!(q.pretty(), "x^3 + x + 1");
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
        let g = (&a * &p(&[3, 1])).gcd(&(&a * &p(&[0, 2])));
        assert_eq!(g, a);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[1, 2, 3, 4, 5]);
        let d = p(&[7, 0, 3]);
        let r = a.pseudo_rem(&d);
        let lc_pow = BigInt::from(3).pow(3);
        let diff = &a.scalar_mul(&lc_pow) - &r;
        assert!(diff.div_exact(&d).is_some());
        assert!(r.degree_i() < 2);
    }
}
