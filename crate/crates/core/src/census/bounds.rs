//! Root and discriminant bounds.

use crate::arith::ceil_root;
use crate::census::boxes::CoefficientBox;
use crate::error::{Error, Result};
use crate::family::HyperellipticCurve;
use crate::poly::IntPolynomial;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Roots are rounded up to multiples of `2^-16`.
const ROUND_BITS: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootBound {
    /// Upper bound on every complex root modulus.
    #[serde(serialize_with = "ser_q")]
    pub root_bound: BigRational,
    /// `n^n (2 Y')^(n(n-1))` with `Y'` the root bound, rounded up.
    #[serde(serialize_with = "ser_int")]
    pub disc_bound: BigInt,
}

fn ser_q<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

fn ser_int<S: serde::Serializer>(q: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// Least `u` with `u^k / D^k >= x`, where `D = 2^ROUND_BITS`.
fn upper_root(x: &BigRational, k: u32) -> BigUint {
    let scale = BigInt::one() << (ROUND_BITS * k) as usize;
    let target = (x * BigRational::from_integer(scale)).ceil().to_integer();
    ceil_root(&target.magnitude().clone(), k)
}

/// Fujiwara's bound `2 max(|c_{n-1}|, |c_{n-2}|^(1/2), ..., |c_0 / 2|^(1/n))`
/// for a monic `F` (sign of the leading coefficient is ignored).
pub fn fujiwara(f: &IntPolynomial) -> Result<BigRational> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::ZeroInput),
    };
    if !f.lead().unwrap().abs().is_one() {
        return Err(Error::NonMonic);
    }
    let mut best = BigUint::zero();
    for k in 1..=n {
        let c = f.coeff(n - k).abs();
        let x = if k == n {
            BigRational::new(c, BigInt::from(2))
        } else {
            BigRational::from_integer(c)
        };
        best = best.max(upper_root(&x, k as u32));
    }
    Ok(BigRational::new(BigInt::from(best) * 2, BigInt::one() << ROUND_BITS as usize))
}

pub fn root_bound(f: &IntPolynomial) -> Result<RootBound> {
    let rb = fujiwara(f)?;
    let n = f.degree().unwrap() as u32;
    let two_y = (rb.clone() * BigInt::from(2)).ceil().to_integer();
    let disc_bound = BigInt::from(n).pow(n) * two_y.pow(n * (n - 1));
    Ok(RootBound { root_bound: rb, disc_bound })
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let r = x.sqrt();
    if &(&r * &r) == x {
        r
    } else {
        r + 1
    }
}

fn norm_sq(c: &[BigInt]) -> BigInt {
    c.iter().map(|x| x * x).sum()
}

/// Hadamard's inequality on the Sylvester matrix of `(F, F')` given
/// coefficient-wise absolute bounds on `F`:
///
///   |Disc F| <= |Res(F, F')| <= ceil ||F||^(n-1) * ceil ||F'||^n.
pub fn hadamard_from_bounds(abs_coeffs: &[BigInt]) -> BigInt {
    let n = abs_coeffs.len().saturating_sub(1);
    if n == 0 {
        return BigInt::one();
    }
    let deriv: Vec<BigInt> = abs_coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    ceil_sqrt(&norm_sq(abs_coeffs)).pow(n as u32 - 1) * ceil_sqrt(&norm_sq(&deriv)).pow(n as u32)
}

pub fn hadamard_disc_bound(f: &IntPolynomial) -> BigInt {
    let abs: Vec<BigInt> = f.coeffs().iter().map(|c| c.abs()).collect();
    hadamard_from_bounds(&abs)
}

/// A bound on `|Disc F|` valid for every member of the box: coefficient
/// bounds of `F = g^2 - f h^2` come from `G^2 + |f| H^2` where `G`, `H`
/// carry the coefficient bounds of `g` and `h`.
pub fn box_disc_bound(curve: &HyperellipticCurve, bx: &CoefficientBox) -> Result<BigInt> {
    let (g, h) = bx.bounds_as_specialization().polys(&bx.shape)?;
    let absf = IntPolynomial::new(curve.f.coeffs().iter().map(|c| c.abs()).collect());
    let big = &g.square() + &(&absf * &h.square());
    Ok(hadamard_from_bounds(big.coeffs()))
}
