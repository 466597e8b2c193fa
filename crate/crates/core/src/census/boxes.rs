//! Coefficient boxes and their odometer enumeration.

use crate::error::{Error, Result};
use crate::family::{FamilyShape, MonicSide, ParityCase, Specialization};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub const DEFAULT_BOX_CAP: u64 = 100_000_000;

/// Parses `"5"`, `"5/2"` or `"2.5"` as a positive rational.
pub fn parse_height(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad height {s:?}"));
    let y = if let Some((w, f)) = s.split_once('.') {
        if f.is_empty() || !f.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let den = BigInt::from(10u32).pow(f.len() as u32);
        let whole = if w.is_empty() { BigInt::zero() } else { BigInt::from_str(w).map_err(|_| bad())? };
        let frac = BigInt::from_str(f).map_err(|_| bad())?;
        BigRational::new(whole * &den + frac, den)
    } else {
        BigRational::from_str(s).map_err(|_| bad())?
    };
    if !y.is_positive() {
        return Err(Error::Parse(format!("height must be positive, got {s}")));
    }
    Ok(y)
}

fn floor_pow(y: &BigRational, e: u32) -> BigInt {
    num_traits::pow(y.clone(), e as usize).floor().to_integer()
}

/// `floor(y^(e/2))`, using `floor(sqrt(q)) = isqrt(floor(q))`.
fn floor_half_pow(y: &BigRational, twice: u32) -> BigInt {
    floor_pow(y, twice).sqrt()
}

/// Per-coefficient bounds of the census box, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientBox {
    pub shape: FamilyShape,
    pub y: BigRational,
    pub a_bounds: Vec<BigInt>,
    pub b_bounds: Vec<BigInt>,
    /// Exponent of Y in each bound, doubled so that half-integers stay exact.
    pub a_twice_exp: Vec<u32>,
    pub b_twice_exp: Vec<u32>,
}

impl CoefficientBox {
    pub fn new(shape: &FamilyShape, y: &BigRational) -> Result<Self> {
        if shape.monic == MonicSide::None {
            return Err(Error::InvalidShape("boxes need a census shape".into()));
        }
        if !y.is_positive() {
            return Err(Error::Parse("height must be positive".into()));
        }
        let (la, lb) = shape.free_lengths();
        let n = shape.n as u32;
        // twice the exponent of the bound on a_k and b_k
        let a_twice_exp: Vec<u32> = (0..la as u32)
            .map(|k| match shape.case {
                ParityCase::OddDOddN => 2 * ((n - 1) / 2 - k),
                _ => 2 * (n / 2 - k),
            })
            .collect();
        let b_twice_exp: Vec<u32> = (0..lb as u32)
            .map(|k| {
                let d = shape.d as u32;
                match shape.case {
                    ParityCase::OddDEvenN => 2 * ((n - d - 1) / 2 - k) + 1,
                    _ => 2 * ((n - d) / 2 - k),
                }
            })
            .collect();
        let bound = |t: u32| if t % 2 == 0 { floor_pow(y, t / 2) } else { floor_half_pow(y, t) };
        Ok(CoefficientBox {
            shape: *shape,
            y: y.clone(),
            a_bounds: a_twice_exp.iter().map(|&t| bound(t)).collect(),
            b_bounds: b_twice_exp.iter().map(|&t| bound(t)).collect(),
            a_twice_exp,
            b_twice_exp,
        })
    }

    /// Product of `2 * bound + 1` over the free coefficients.
    pub fn cardinality(&self) -> BigInt {
        self.a_bounds
            .iter()
            .chain(&self.b_bounds)
            .fold(BigInt::one(), |acc, b| acc * (BigInt::from(2) * b + 1))
    }

    /// Sum of the bound exponents: the box has about `Y^exponent` members.
    pub fn exponent(&self) -> BigRational {
        let s: u32 = self.a_twice_exp.iter().chain(&self.b_twice_exp).sum();
        BigRational::new(BigInt::from(s), BigInt::from(2))
    }

    pub fn check_cap(&self, cap: u64) -> Result<u64> {
        let c = self.cardinality();
        match c.to_u64() {
            Some(v) if v <= cap => Ok(v),
            _ => Err(Error::BoxTooLarge { cardinality: c.to_string(), cap }),
        }
    }

    /// Odometer digits: `a` from the top index down, then `b` likewise.
    fn radices(&self) -> Vec<u64> {
        self.a_bounds
            .iter()
            .rev()
            .chain(self.b_bounds.iter().rev())
            .map(|b| 2 * b.to_u64().unwrap() + 1)
            .collect()
    }

    /// The member at odometer position `idx`; the last digit moves fastest
    /// and every range runs from `-bound` to `+bound`.
    pub fn member(&self, mut idx: u64) -> Specialization {
        let radices = self.radices();
        let mut digits = vec![0i64; radices.len()];
        for (slot, r) in digits.iter_mut().zip(&radices).rev() {
            let (q, m) = idx.div_rem(r);
            *slot = m as i64 - (*r as i64 - 1) / 2;
            idx = q;
        }
        let la = self.a_bounds.len();
        let mut a: Vec<BigInt> = digits[..la].iter().map(|&x| BigInt::from(x)).collect();
        let mut b: Vec<BigInt> = digits[la..].iter().map(|&x| BigInt::from(x)).collect();
        a.reverse();
        b.reverse();
        Specialization::new(a, b)
    }

    /// The corner with every free coefficient at its bound.
    pub fn bounds_as_specialization(&self) -> Specialization {
        Specialization::new(self.a_bounds.clone(), self.b_bounds.clone())
    }

    /// All members in odometer order. Requires the box to pass `check_cap`.
    pub fn iter(&self) -> impl Iterator<Item = Specialization> + '_ {
        let total = self.cardinality().to_u64().expect("box within cap");
        (0..total).map(move |i| self.member(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::HyperellipticCurve;
    use crate::poly::IntPolynomial;

    fn curve() -> HyperellipticCurve {
        HyperellipticCurve::new(IntPolynomial::from_i64s(&[1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn heights() {
        assert_eq!(parse_height("2.5").unwrap(), parse_height("5/2").unwrap());
        assert!(parse_height("0").is_err());
        assert!(parse_height("x").is_err());
    }

    #[test]
    fn cubic_n3() {
        let shape = FamilyShape::census(&curve(), 3).unwrap();
        let b = CoefficientBox::new(&shape, &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(b.a_bounds, vec![BigInt::from(2), BigInt::from(1)]);
        assert!(b.b_bounds.is_empty());
        assert_eq!(b.cardinality(), BigInt::from(15));
    }

    #[test]
    fn half_powers() {
        let shape = FamilyShape::census(&curve(), 4).unwrap();
        let b = CoefficientBox::new(&shape, &BigRational::from_integer(8.into())).unwrap();
        // a_1 <= 8, a_0 <= 64, b_0 <= floor(sqrt 8)
        assert_eq!(b.a_bounds, vec![BigInt::from(64), BigInt::from(8)]);
        assert_eq!(b.b_bounds, vec![BigInt::from(2)]);
        assert_eq!(b.exponent(), BigRational::new(7.into(), 2.into()));
    }

    #[test]
    fn odometer_order() {
        let shape = FamilyShape::census(&curve(), 3).unwrap();
        let b = CoefficientBox::new(&shape, &BigRational::from_integer(2.into())).unwrap();
        let all: Vec<_> = b.iter().collect();
        assert_eq!(all.len(), 15);
        assert_eq!(all[0], Specialization::from_i64s(&[-2, -1], &[]));
        assert_eq!(all[1], Specialization::from_i64s(&[-1, -1], &[]));
        assert_eq!(all[14], Specialization::from_i64s(&[2, 1], &[]));
        let set: std::collections::HashSet<_> = all.into_iter().collect();
        assert_eq!(set.len(), 15);
    }

    #[test]
    fn cap() {
        let shape = FamilyShape::census(&curve(), 4).unwrap();
        let b = CoefficientBox::new(&shape, &BigRational::from_integer(1000.into())).unwrap();
        assert!(matches!(b.check_cap(1000), Err(Error::BoxTooLarge { .. })));
    }
}
