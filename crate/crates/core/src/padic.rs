//! p-adic Newton polygons and the certificates read off them.

use crate::arith::{is_prime, valuation};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Signed;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fmt;

/// `v_p` of an integer; zero has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PadicValuation {
    Finite(u32),
    Infinity,
}

impl PadicValuation {
    pub fn of(x: &num_bigint::BigInt, p: u64) -> Self {
        match valuation(x, p) {
            Some(v) => PadicValuation::Finite(v),
            None => PadicValuation::Infinity,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            PadicValuation::Finite(v) => Some(v),
            PadicValuation::Infinity => None,
        }
    }
}

impl std::ops::Add for PadicValuation {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        match (self, o) {
            (PadicValuation::Finite(a), PadicValuation::Finite(b)) => PadicValuation::Finite(a + b),
            _ => PadicValuation::Infinity,
        }
    }
}

impl fmt::Display for PadicValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicValuation::Finite(v) => write!(f, "{v}"),
            PadicValuation::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub length: usize,
    pub slope: Rational64,
}

impl Segment {
    /// Denominator of the reduced slope.
    pub fn reduced_denominator(&self) -> usize {
        *self.slope.denom() as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub prime: u64,
    /// Power of x dividing the polynomial; those roots sit at infinity.
    pub x_power: usize,
    pub vertices: Vec<(usize, u32)>,
    pub segments: Vec<Segment>,
}

/// Lower convex hull of `{(i, v_q(c_i)) : c_i != 0}`.
pub fn newton_polygon(p: &IntPolynomial, q: u64) -> Result<NewtonPolygon> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let pts: Vec<(usize, u32)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| valuation(c, q).map(|v| (i, v)))
        .collect();
    Ok(from_points(q, &pts))
}

/// Polygon of a point set with strictly increasing abscissae.
pub fn from_points(prime: u64, pts: &[(usize, u32)]) -> NewtonPolygon {
    let mut hull: Vec<(usize, u32)> = Vec::new();
    for &pt in pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below the chord a -> pt
            let cross = (b.0 as i128 - a.0 as i128) * (pt.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (pt.0 as i128 - a.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let length = w[1].0 - w[0].0;
            Segment {
                length,
                slope: Rational64::new(w[1].1 as i64 - w[0].1 as i64, length as i64),
            }
        })
        .collect();
    NewtonPolygon {
        prime,
        x_power: pts.first().map_or(0, |p| p.0),
        vertices: hull,
        segments,
    }
}

impl NewtonPolygon {
    pub fn width(&self) -> usize {
        self.segments.iter().map(|s| s.length).sum()
    }

    /// Each slope repeated by its segment length.
    pub fn slope_multiset(&self) -> Vec<Rational64> {
        self.segments
            .iter()
            .flat_map(|s| std::iter::repeat(s.slope).take(s.length))
            .collect()
    }

    pub fn has_segment(&self, length: usize, slope: Rational64) -> bool {
        self.segments.iter().any(|s| s.length == length && s.slope == slope)
    }

    /// Does the point `(i, v)` lie on or above the polygon?
    pub fn lies_above(&self, i: usize, v: u32) -> bool {
        let Some(&(x0, y0)) = self.vertices.first() else {
            return true;
        };
        if i < x0 {
            return false;
        }
        let mut x = x0;
        let mut y = Rational64::from(y0 as i64);
        for s in &self.segments {
            if i <= x + s.length {
                let h = y + s.slope * Rational64::from((i - x) as i64);
                return Rational64::from(v as i64) >= h;
            }
            x += s.length;
            y += s.slope * Rational64::from(s.length as i64);
        }
        i == x && Rational64::from(v as i64) >= y
    }

    pub fn certificate(&self, poly: &IntPolynomial) -> NpCertificate {
        NpCertificate {
            prime: self.prime,
            segments: self
                .segments
                .iter()
                .map(|s| SegmentJson {
                    length: s.length,
                    slope_num: *s.slope.numer(),
                    slope_den: *s.slope.denom(),
                })
                .collect(),
            cycles: cycles_of(self, poly).iter().map(|c| c.cycle_length).collect(),
        }
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}", self.prime)?;
        for s in &self.segments {
            write!(f, " [len {} slope {}]", s.length, s.slope)?;
        }
        Ok(())
    }
}

/// Stable JSON form: `{prime, segments: [{length, slope_num, slope_den}], cycles}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NpCertificate {
    pub prime: u64,
    pub segments: Vec<SegmentJson>,
    pub cycles: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentJson {
    pub length: usize,
    pub slope_num: i64,
    pub slope_den: i64,
}

/// A block of `degree` roots whose local irreducible factors all have
/// degree divisible by `divisor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactorBlock {
    pub degree: usize,
    pub divisor: usize,
    pub irreducible: bool,
}

pub fn factorization_shape(np: &NewtonPolygon) -> Vec<FactorBlock> {
    np.segments
        .iter()
        .map(|s| {
            let d = s.reduced_denominator();
            FactorBlock { degree: s.length, divisor: d, irreducible: d == s.length }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCertificate {
    pub prime: u64,
    pub cycle_length: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub slope: Rational64,
    pub digest: String,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// Short stable digest of a polynomial's text form.
pub fn poly_digest(p: &IntPolynomial) -> String {
    let h = Sha256::digest(p.to_string().as_bytes());
    h[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// One certificate per tame segment with coprime slope. Length-one
/// segments are skipped; they certify nothing.
pub fn cycle_from_polygon(p: &IntPolynomial, q: u64) -> Result<Vec<CycleCertificate>> {
    let np = newton_polygon(p, q)?;
    Ok(cycles_of(&np, p))
}

pub fn cycles_of(np: &NewtonPolygon, p: &IntPolynomial) -> Vec<CycleCertificate> {
    let q = np.prime;
    let mut digest = None;
    np.segments
        .iter()
        .filter(|s| s.length >= 2 && s.reduced_denominator() == s.length)
        .filter(|s| (s.length as u64).gcd(&q) == 1)
        .map(|s| CycleCertificate {
            prime: q,
            cycle_length: s.length,
            slope: s.slope,
            digest: digest.get_or_insert_with(|| poly_digest(p)).clone(),
        })
        .collect()
}

/// Slopes of `NP(ab)` are the union of those of `NP(a)` and `NP(b)`.
pub fn np_product_check(a: &IntPolynomial, b: &IntPolynomial, q: u64) -> Result<bool> {
    let ab = a * b;
    let mut merged = newton_polygon(a, q)?.slope_multiset();
    merged.extend(newton_polygon(b, q)?.slope_multiset());
    merged.sort();
    Ok(newton_polygon(&ab, q)?.slope_multiset() == merged)
}

/// Whether every Q-factor degree pattern is compatible with the blocks:
/// each factor's degree must split as a sum of multiples of the block
/// divisors, using each block's capacity at most once overall.
pub fn shape_admits(blocks: &[FactorBlock], factor_degrees: &[usize]) -> bool {
    fn go(blocks: &mut Vec<usize>, divs: &[usize], degs: &[usize], rest: usize) -> bool {
        if degs.is_empty() {
            return blocks.iter().all(|b| *b == 0);
        }
        if rest == 0 {
            return go(blocks, divs, &degs[1..], degs.get(1).copied().unwrap_or(0));
        }
        for j in 0..blocks.len() {
            let d = divs[j];
            let mut take = d;
            while take <= rest && take <= blocks[j] {
                blocks[j] -= take;
                let ok = go(blocks, divs, degs, rest - take);
                blocks[j] += take;
                if ok {
                    return true;
                }
                take += d;
            }
        }
        false
    }
    let mut caps: Vec<usize> = blocks.iter().map(|b| b.degree).collect();
    let divs: Vec<usize> = blocks.iter().map(|b| b.divisor).collect();
    if factor_degrees.iter().sum::<usize>() != caps.iter().sum::<usize>() {
        return false;
    }
    factor_degrees.is_empty() || go(&mut caps, &divs, factor_degrees, factor_degrees[0])
}

/// `v_q` of each coefficient, constant term first.
pub fn valuation_row(p: &IntPolynomial, q: u64) -> Vec<PadicValuation> {
    p.coeffs().iter().map(|c| PadicValuation::of(&c.abs(), q)).collect()
}
