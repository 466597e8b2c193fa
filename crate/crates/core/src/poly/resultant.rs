//! Resultants and discriminants.
//!
//! Sign convention: `Res(a, b) = lc(a)^deg(b) * prod b(alpha_i)` over the
//! roots `alpha_i` of `a`. This is the determinant of the Sylvester matrix
//! with the rows of `a` on top, so `Res(x - 2, x - 3) = -1`.

use super::IntPolynomial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact resultant by the subresultant pseudo-remainder sequence.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(subresultant(a, b))
}

fn subresultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        return num_traits::pow(b.coeff(0), da);
    }
    if da == 0 {
        return num_traits::pow(a.coeff(0), db);
    }
    let (mut a, mut b, mut s) = if da < db {
        let s = if da % 2 == 1 && db % 2 == 1 { -1 } else { 1 };
        (b.clone(), a.clone(), s)
    } else {
        (a.clone(), b.clone(), 1)
    };
    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let t = num_traits::pow(ca, b.degree().unwrap()) * num_traits::pow(cb, a.degree().unwrap());
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (dega, degb) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = dega - degb;
        if dega % 2 == 1 && degb % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r.div_scalar_exact(&divisor);
        g = a.lead().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        let degb = b.degree().unwrap();
        if degb == 0 {
            let dega = a.degree().unwrap();
            let lb = b.lead().unwrap().clone();
            let hh = num_traits::pow(lb, dega) / num_traits::pow(h, dega - 1);
            return BigInt::from(s) * t * hh;
        }
    }
}

/// Sylvester matrix of `a` (degree m) and `b` (degree n): n shifted rows of
/// `a`, then m shifted rows of `b`, coefficients in descending degree.
pub(crate) fn sylvester_matrix(a: &IntPolynomial, b: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let m = a.degree().unwrap_or(0);
    let n = b.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    let desc = |p: &IntPolynomial| -> Vec<BigInt> { p.coeffs().iter().rev().cloned().collect() };
    let (ra, rb) = (desc(a), desc(b));
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in ra.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in rb.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free (Bareiss) determinant.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant as the Sylvester determinant. Slower than [`resultant`]; kept
/// as an independent route for cross-checking.
pub fn sylvester_resultant(a: &IntPolynomial, b: &IntPolynomial) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    if a.degree() == Some(0) && b.degree() == Some(0) {
        return Ok(BigInt::one());
    }
    Ok(bareiss_det(sylvester_matrix(a, b)))
}

/// `Disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p)`.
///
/// # Panics
/// If `p` is constant.
pub fn discriminant(p: &IntPolynomial) -> BigInt {
    let d = p.degree().expect("discriminant of zero polynomial");
    assert!(d >= 1, "discriminant needs degree >= 1");
    let r = subresultant(p, &p.derivative());
    let q = r / p.lead().unwrap();
    if (d * (d - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}

/// True iff `gcd(p, p')` is constant.
pub fn squarefree(p: &IntPolynomial) -> bool {
    match p.degree() {
        None => false,
        Some(0) => true,
        Some(_) => p.gcd(&p.derivative()).degree() == Some(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), BigInt::from(-1));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[1, 0, 1])).unwrap(), BigInt::zero());
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap(), BigInt::one());
        assert_eq!(resultant(&IntPolynomial::zero(), &p(&[1])), Err(Error::ZeroInput));
    }

    #[test]
    fn resultant_constants_and_swap_sign() {
        assert_eq!(resultant(&p(&[1, 0, 2]), &p(&[3])).unwrap(), BigInt::from(9));
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 2])).unwrap(), BigInt::from(9));
        // Res(b, a) = (-1)^(deg a deg b) Res(a, b)
        let a = p(&[1, 2, 0, 1]);
        let b = p(&[5, 0, 0, 0, 0, 1]);
        let r1 = resultant(&a, &b).unwrap();
        let r2 = resultant(&b, &a).unwrap();
        assert_eq!(r1, -r2.clone());
        assert_eq!(r1, sylvester_resultant(&a, &b).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[1, 1, 1])), BigInt::from(-3));
        assert_eq!(discriminant(&p(&[1, 1, 0, 1])), BigInt::from(-31));
        let rep = &p(&[-1, 1]).square() * &p(&[2, 1]);
        assert_eq!(discriminant(&rep), BigInt::zero());
        assert_eq!(discriminant(&p(&[1, 0, 0, 0, 1])), BigInt::from(256));
        assert_eq!(discriminant(&p(&[7, 3])), BigInt::one());
    }

    #[test]
    fn squarefree_examples() {
        assert!(squarefree(&p(&[1, 1, 0, 1])));
        assert!(!squarefree(&(&p(&[-1, 1]).square() * &p(&[2, 1]))));
        assert!(squarefree(&p(&[0, 1])));
    }
}
