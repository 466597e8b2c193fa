//! The family `F = g^2 - f h^2` attached to a hyperelliptic curve
//! `y^2 = f(x)`, its degree bookkeeping, and the specialization recipes.

mod recipe;

pub use recipe::{
    admissible, family_certificate, find_prime, normalize_even, normalize_even_with, predicted_segment, prepare, select_bertrand_prime, verify_witness, witness,
    witness_report, Prepared, RecipeId, Transform, WitnessReport,
};

use crate::error::{Error, Result};
use crate::poly::{squarefree, IntPolynomial, RatPolynomial};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// `y^2 = f(x)` with `f` squarefree of degree at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperellipticCurve {
    pub f: IntPolynomial,
}

impl HyperellipticCurve {
    pub fn new(f: IntPolynomial) -> Result<Self> {
        match f.degree() {
            Some(d) if d >= 3 => {}
            _ => return Err(Error::InvalidCurve(format!("degree of {f} is below 3"))),
        }
        if !squarefree(&f) {
            return Err(Error::InvalidCurve(format!("{f} is not squarefree")));
        }
        Ok(HyperellipticCurve { f })
    }

    pub fn degree(&self) -> usize {
        self.f.degree().unwrap()
    }

    pub fn genus(&self) -> usize {
        (self.degree() - 1) / 2
    }

    pub fn is_odd(&self) -> bool {
        self.degree() % 2 == 1
    }
}

impl fmt::Display for HyperellipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f.pretty())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ParityCase {
    OddDEvenN,
    OddDOddN,
    EvenDEvenN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonicSide {
    None,
    G,
    H,
}

/// Degrees of `g` and `h` for a target degree `n`.
///
/// The proof shape leaves every coefficient free; the census shape makes
/// one side monic so that the leading term is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyShape {
    pub n: usize,
    pub d: usize,
    pub d_g: usize,
    pub d_h: usize,
    pub case: ParityCase,
    pub monic: MonicSide,
}

impl FamilyShape {
    fn degrees(curve: &HyperellipticCurve, n: usize) -> Result<(ParityCase, usize, usize)> {
        let d = curve.degree();
        if d % 2 == 1 {
            if n < d || (n % 2 == 0 && n < d + 1) {
                return Err(Error::InvalidShape(format!("n = {n} is below the curve degree {d}")));
            }
            Ok(if n % 2 == 0 {
                (ParityCase::OddDEvenN, n / 2, (n - d - 1) / 2)
            } else {
                (ParityCase::OddDOddN, (n - 1) / 2, (n - d) / 2)
            })
        } else {
            if n % 2 == 1 {
                return Err(Error::InvalidShape(format!(
                    "n = {n} is odd; even-degree curves need even n"
                )));
            }
            if n < d + 2 {
                return Err(Error::InvalidShape(format!("even-degree curves need n >= d + 2 = {}", d + 2)));
            }
            Ok((ParityCase::EvenDEvenN, n / 2, (n - d) / 2 - 1))
        }
    }

    pub fn proof(curve: &HyperellipticCurve, n: usize) -> Result<Self> {
        let (case, d_g, d_h) = Self::degrees(curve, n)?;
        Ok(FamilyShape { n, d: curve.degree(), d_g, d_h, case, monic: MonicSide::None })
    }

    pub fn census(curve: &HyperellipticCurve, n: usize) -> Result<Self> {
        let (case, d_g, d_h) = Self::degrees(curve, n)?;
        let monic = match case {
            ParityCase::OddDOddN => MonicSide::H,
            _ => MonicSide::G,
        };
        Ok(FamilyShape { n, d: curve.degree(), d_g, d_h, case, monic })
    }

    /// Number of free coefficients of `g` and `h`.
    pub fn free_lengths(&self) -> (usize, usize) {
        let la = self.d_g + usize::from(self.monic != MonicSide::G);
        let lb = self.d_h + usize::from(self.monic != MonicSide::H);
        (la, lb)
    }

    pub fn family_degree(&self) -> usize {
        (2 * self.d_g).max(self.d + 2 * self.d_h)
    }
}

/// Free coefficients of `g` and `h`, constant term first. The monic
/// leading coefficient of a census shape is not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Specialization {
    #[serde(serialize_with = "big_vec")]
    pub a: Vec<BigInt>,
    #[serde(serialize_with = "big_vec")]
    pub b: Vec<BigInt>,
}

fn big_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl Specialization {
    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>) -> Self {
        Specialization { a, b }
    }

    pub fn from_i64s(a: &[i64], b: &[i64]) -> Self {
        Specialization {
            a: a.iter().map(|&x| BigInt::from(x)).collect(),
            b: b.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// `g` and `h` as polynomials.
    pub fn polys(&self, shape: &FamilyShape) -> Result<(IntPolynomial, IntPolynomial)> {
        let (la, lb) = shape.free_lengths();
        if self.a.len() != la || self.b.len() != lb {
            return Err(Error::InvalidShape(format!(
                "specialization has {} + {} coefficients, shape needs {la} + {lb}",
                self.a.len(),
                self.b.len()
            )));
        }
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        match shape.monic {
            MonicSide::G => a.push(BigInt::one()),
            MonicSide::H => b.push(BigInt::one()),
            MonicSide::None => {}
        }
        Ok((IntPolynomial::new(a), IntPolynomial::new(b)))
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a=[{}] b=[{}]", join(&self.a), join(&self.b))
    }
}

/// `F = g^2 - f h^2`, which must have degree exactly `n`.
pub fn build_family_member(
    curve: &HyperellipticCurve,
    shape: &FamilyShape,
    s: &Specialization,
) -> Result<IntPolynomial> {
    let (g, h) = s.polys(shape)?;
    let big_f = &g.square() - &(&curve.f * &h.square());
    if big_f.degree() != Some(shape.n) {
        return Err(Error::DegreeDrop { expected: shape.n, actual: big_f.degree_i() });
    }
    Ok(big_f)
}

/// `(g/h)^2 - f` reduced modulo `F`; zero exactly when `(x, g/h)` is a
/// point of the curve over `Q[x]/(F)`.
pub fn point_residue(curve: &HyperellipticCurve, shape: &FamilyShape, s: &Specialization) -> Result<RatPolynomial> {
    let big_f = build_family_member(curve, shape, s)?;
    let (g, h) = s.polys(shape)?;
    let m = RatPolynomial::from(&big_f);
    let h_inv = RatPolynomial::from(&h).inverse_mod(&m).ok_or(Error::NonCoprimeH)?;
    let y = (&RatPolynomial::from(&g) * &h_inv).rem(&m);
    Ok((&(&y * &y) - &RatPolynomial::from(&curve.f)).rem(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(c: &[i64]) -> HyperellipticCurve {
        HyperellipticCurve::new(IntPolynomial::from_i64s(c)).unwrap()
    }

    #[test]
    fn curve_validation() {
        assert!(HyperellipticCurve::new(IntPolynomial::from_i64s(&[0, 0, 1])).is_err());
        // (x - 1)^2 (x + 2)
        assert!(HyperellipticCurve::new(IntPolynomial::from_i64s(&[2, -3, 0, 1])).is_err());
        assert_eq!(curve(&[1, 1, 0, 1]).genus(), 1);
        assert_eq!(curve(&[3, 1, 0, 0, 0, 0, 1]).genus(), 2);
    }

    #[test]
    fn shape_degrees() {
        let c3 = curve(&[1, 1, 0, 1]);
        let c5 = curve(&[1, -1, 0, 0, 0, 1]);
        let c6 = curve(&[3, 1, 0, 0, 0, 0, 1]);
        for (c, n, case) in [
            (&c3, 4, ParityCase::OddDEvenN),
            (&c5, 7, ParityCase::OddDOddN),
            (&c6, 8, ParityCase::EvenDEvenN),
        ] {
            let s = FamilyShape::proof(c, n).unwrap();
            assert_eq!(s.case, case);
            assert_eq!(s.family_degree(), n);
        }
        assert!(FamilyShape::proof(&c6, 7).is_err());
        assert!(FamilyShape::proof(&c6, 6).is_err());
        assert!(FamilyShape::proof(&c5, 4).is_err());
    }

    #[test]
    fn build_examples() {
        let c = curve(&[1, 1, 0, 1]);
        let shape = FamilyShape::census(&c, 3).unwrap();
        assert_eq!(shape.free_lengths(), (2, 0));
        let zero = Specialization::from_i64s(&[0, 0], &[]);
        assert_eq!(build_family_member(&c, &shape, &zero).unwrap(), IntPolynomial::from_i64s(&[-1, -1, 0, -1]));
        let s = Specialization::from_i64s(&[0, 1], &[]);
        assert_eq!(build_family_member(&c, &shape, &s).unwrap(), IntPolynomial::from_i64s(&[-1, -1, 1, -1]));
        assert!(point_residue(&c, &shape, &s).unwrap().is_zero());
    }

    #[test]
    fn degree_drop_and_lengths() {
        let c = curve(&[1, 1, 0, 1]);
        let shape = FamilyShape::proof(&c, 4).unwrap();
        let s = Specialization::from_i64s(&[1, 1, 0], &[1]);
        assert!(matches!(
            build_family_member(&c, &shape, &s),
            Err(Error::DegreeDrop { expected: 4, actual: 3 })
        ));
        let bad = Specialization::from_i64s(&[1, 1], &[1]);
        assert!(matches!(build_family_member(&c, &shape, &bad), Err(Error::InvalidShape(_))));
    }

    #[test]
    fn non_coprime_h() {
        // g = x^2 and h = x share the root 0 with F
        let c = curve(&[1, 1, 0, 1]);
        let shape = FamilyShape::proof(&c, 5).unwrap();
        let s = Specialization::from_i64s(&[0, 0, 1], &[0, 1]);
        assert_eq!(point_residue(&c, &shape, &s), Err(Error::NonCoprimeH));
    }
}
