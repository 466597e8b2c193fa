use super::{build_family_member, FamilyShape, HyperellipticCurve, MonicSide, ParityCase, Specialization};
use crate::arith::{big_mod_u64, inv_mod, is_prime, primes_from, sqrt_mod_all, trial_factor, valuation};
use crate::error::{Error, Result};
use crate::padic::{cycles_of, factorization_shape, newton_polygon, CycleCertificate, FactorBlock, NewtonPolygon, NpCertificate};
use crate::perm::{recognize_sn, CycleType, Evidence, GroupCertificate};
use crate::poly::{discriminant, IntPolynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

const PRIME_SEARCH_LIMIT: u64 = 100_000;
const SHIFT_SEARCH_LIMIT: i64 = 10_000;
const TRIAL_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecipeId {
    OddEvenSplit,
    OddEvenN1Cycle,
    OddEvenTransp,
    OddOddNCycle,
    OddOddQCycle,
    D3N3Transp,
    EvenNCycle,
    EvenN2Cycle,
    KCycle(usize),
}

impl RecipeId {
    pub const DISPLAYED: [RecipeId; 8] = [
        RecipeId::OddEvenSplit,
        RecipeId::OddEvenN1Cycle,
        RecipeId::OddEvenTransp,
        RecipeId::OddOddNCycle,
        RecipeId::OddOddQCycle,
        RecipeId::D3N3Transp,
        RecipeId::EvenNCycle,
        RecipeId::EvenN2Cycle,
    ];

    /// Length of the short segment forced at the left end, for the
    /// transposition-style recipes.
    fn short_cycle(self) -> Option<usize> {
        match self {
            RecipeId::OddEvenTransp | RecipeId::D3N3Transp => Some(2),
            RecipeId::KCycle(k) => Some(k),
            _ => None,
        }
    }

    pub fn applies_to(self, shape: &FamilyShape) -> bool {
        use ParityCase::*;
        match self {
            RecipeId::OddEvenSplit | RecipeId::OddEvenN1Cycle => shape.case == OddDEvenN,
            RecipeId::OddOddNCycle => shape.case == OddDOddN,
            RecipeId::OddOddQCycle => shape.case == OddDOddN && shape.n > 3,
            RecipeId::D3N3Transp => shape.d == 3 && shape.n == 3,
            RecipeId::EvenNCycle | RecipeId::EvenN2Cycle => shape.case == EvenDEvenN,
            RecipeId::OddEvenTransp => shape.n >= 4,
            RecipeId::KCycle(k) => k >= 2 && shape.n >= 2 * k,
        }
    }

    /// Recipes that apply to a shape, including every k-cycle.
    pub fn all_for(shape: &FamilyShape) -> Vec<RecipeId> {
        let mut out: Vec<RecipeId> = Self::DISPLAYED.iter().copied().filter(|r| r.applies_to(shape)).collect();
        out.extend((2..=shape.n / 2).map(RecipeId::KCycle));
        out
    }
}

impl fmt::Display for RecipeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecipeId::OddEvenSplit => f.write_str("ODD_EVEN_SPLIT"),
            RecipeId::OddEvenN1Cycle => f.write_str("ODD_EVEN_N1CYCLE"),
            RecipeId::OddEvenTransp => f.write_str("ODD_EVEN_TRANSP"),
            RecipeId::OddOddNCycle => f.write_str("ODD_ODD_NCYCLE"),
            RecipeId::OddOddQCycle => f.write_str("ODD_ODD_QCYCLE"),
            RecipeId::D3N3Transp => f.write_str("D3N3_TRANSP"),
            RecipeId::EvenNCycle => f.write_str("EVEN_NCYCLE"),
            RecipeId::EvenN2Cycle => f.write_str("EVEN_N2CYCLE"),
            RecipeId::KCycle(k) => write!(f, "K_CYCLE({k})"),
        }
    }
}

impl FromStr for RecipeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        for r in Self::DISPLAYED {
            if r.to_string() == t {
                return Ok(r);
            }
        }
        let k = t
            .strip_prefix("K_CYCLE(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("K_CYCLE:"))
            .and_then(|k| k.parse::<usize>().ok());
        k.map(RecipeId::KCycle).ok_or_else(|| Error::Parse(format!("unknown recipe {s:?}")))
    }
}

impl Serialize for RecipeId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `f'(x) = f(scale * x + shift)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transform {
    #[serde(serialize_with = "as_string")]
    pub shift: BigInt,
    #[serde(serialize_with = "as_string")]
    pub scale: BigInt,
}

fn as_string<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl Transform {
    pub fn identity() -> Self {
        Transform { shift: BigInt::zero(), scale: BigInt::one() }
    }

    pub fn is_identity(&self) -> bool {
        self.shift.is_zero() && self.scale.is_one()
    }

    pub fn apply(&self, f: &IntPolynomial) -> Result<IntPolynomial> {
        f.translate(&self.shift).scale_x(&self.scale)
    }
}

/// A curve model adapted to a recipe, with the change of variables used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prepared {
    pub curve: HyperellipticCurve,
    pub transform: Transform,
    /// Fixed by the preconditioning, when it chooses the prime.
    pub prime: Option<u64>,
}

fn translated(curve: &HyperellipticCurve, shift: i64) -> Result<Prepared> {
    let transform = Transform { shift: BigInt::from(shift), scale: BigInt::one() };
    Ok(Prepared {
        curve: HyperellipticCurve::new(transform.apply(&curve.f)?)?,
        transform,
        prime: None,
    })
}

/// Change of variables a recipe needs before it can run.
pub fn prepare(curve: &HyperellipticCurve, recipe: RecipeId, n: usize) -> Result<Prepared> {
    match recipe {
        RecipeId::OddEvenTransp | RecipeId::KCycle(_) => {
            let k = (0..SHIFT_SEARCH_LIMIT)
                .find(|&k| !curve.f.eval(&BigInt::from(k)).is_zero())
                .ok_or_else(|| Error::SearchExhausted("no shift with nonzero constant term".into()))?;
            translated(curve, k)
        }
        RecipeId::D3N3Transp => {
            for k in 0..SHIFT_SEARCH_LIMIT {
                let f = curve.f.translate(&BigInt::from(k));
                let (c0, c1, c2) = (f.coeff(0), f.coeff(1), f.coeff(2));
                if !c0.is_zero() && !(&c1 * &c1 - BigInt::from(4) * &c0 * &c2).is_zero() {
                    return translated(curve, k);
                }
            }
            Err(Error::SearchExhausted("no shift with c0 and c1^2 - 4 c0 c2 nonzero".into()))
        }
        RecipeId::EvenNCycle | RecipeId::EvenN2Cycle => normalize_even_with(curve, |p| p as usize > n),
        _ => Ok(Prepared { curve: curve.clone(), transform: Transform::identity(), prime: None }),
    }
}

/// Even-degree preconditioning: translate so that `v_p(c_0) = 1` for a
/// prime `p` not dividing the discriminant, then scale `x` by `p`.
pub fn normalize_even(curve: &HyperellipticCurve) -> Result<Prepared> {
    normalize_even_with(curve, |_| true)
}

pub fn normalize_even_with(curve: &HyperellipticCurve, accept: impl Fn(u64) -> bool) -> Result<Prepared> {
    if curve.is_odd() {
        return Err(Error::InvalidCurve("normalization applies to even-degree curves".into()));
    }
    let disc = discriminant(&curve.f);
    for k in 0..SHIFT_SEARCH_LIMIT {
        let value = curve.f.eval(&BigInt::from(k));
        if value.is_zero() {
            continue;
        }
        let (mut primes, cofactor) = trial_factor(&value, TRIAL_LIMIT);
        if let Some(c) = cofactor.abs().to_u64() {
            if c > 1 && is_prime(c) {
                primes.push((c, 1));
            }
        }
        primes.sort();
        for (p, e) in primes {
            if !accept(p) || big_mod_u64(&disc, p) == 0 {
                continue;
            }
            // p is a simple root mod p, so moving by p fixes v_p = 1
            let shift = if e >= 2 { k + p as i64 } else { k };
            let transform = Transform { shift: BigInt::from(shift), scale: BigInt::from(p) };
            let f = transform.apply(&curve.f)?;
            debug_assert_eq!(valuation(&f.coeff(0), p), Some(1));
            return Ok(Prepared { curve: HyperellipticCurve::new(f)?, transform, prime: Some(p) });
        }
    }
    Err(Error::SearchExhausted(format!("no suitable value f(k) for k < {SHIFT_SEARCH_LIMIT}")))
}

/// Smallest prime in `((n - 1)/2, n - 1)`.
pub fn select_bertrand_prime(n: usize) -> Result<u64> {
    if n % 2 == 0 || n <= 3 {
        return Err(Error::HypothesisViolated(format!("Bertrand prime needs odd n > 3, got {n}")));
    }
    let lo = (n as u64 - 1) / 2;
    Ok(primes_from(lo + 1).next().filter(|&q| q < n as u64 - 1).expect("Bertrand's postulate"))
}

fn inadmissible(p: u64, condition: impl Into<String>) -> Error {
    Error::InadmissiblePrime { prime: p, condition: condition.into() }
}

fn is_nonzero_square(c: &BigInt, p: u64) -> bool {
    let r = big_mod_u64(c, p);
    r != 0 && !sqrt_mod_all(r, p).is_empty()
}

/// Check the recipe's conditions on `p` for an already prepared curve.
pub fn admissible(curve: &HyperellipticCurve, shape: &FamilyShape, recipe: RecipeId, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !recipe.applies_to(shape) {
        return Err(Error::InvalidShape(format!("{recipe} does not apply to n = {}, d = {}", shape.n, shape.d)));
    }
    let f = &curve.f;
    let n = shape.n;
    let c0 = f.coeff(0);
    let clean = || {
        if f.coeffs().iter().any(|c| !c.is_zero() && big_mod_u64(c, p) == 0) {
            Err(inadmissible(p, "p divides a nonzero coefficient of f"))
        } else {
            Ok(())
        }
    };
    match recipe {
        RecipeId::OddEvenSplit | RecipeId::OddOddNCycle => clean(),
        RecipeId::OddEvenN1Cycle => {
            clean()?;
            if (n as u64 - 1) % p == 0 {
                return Err(inadmissible(p, "p divides n - 1"));
            }
            Ok(())
        }
        RecipeId::OddOddQCycle => {
            clean()?;
            if select_bertrand_prime(n)? == p {
                return Err(inadmissible(p, "p equals the Bertrand prime q"));
            }
            Ok(())
        }
        RecipeId::OddEvenTransp | RecipeId::KCycle(_) => {
            let k = recipe.short_cycle().unwrap();
            if p == 2 {
                return Err(inadmissible(p, "p must be odd"));
            }
            clean()?;
            if c0.is_zero() {
                return Err(inadmissible(p, "constant term of f is zero; translate first"));
            }
            if !is_nonzero_square(&c0, p) {
                return Err(inadmissible(p, "c0 is not a nonzero square mod p"));
            }
            if k as u64 % p == 0 {
                return Err(inadmissible(p, format!("p divides the cycle length {k}")));
            }
            Ok(())
        }
        RecipeId::D3N3Transp => {
            if p == 2 {
                return Err(inadmissible(p, "p must be odd"));
            }
            let (c1, c2) = (f.coeff(1), f.coeff(2));
            if big_mod_u64(&(&c1 * &c1 - BigInt::from(4) * &c0 * &c2), p) == 0 {
                return Err(inadmissible(p, "p divides c1^2 - 4 c0 c2"));
            }
            if !is_nonzero_square(&c0, p) {
                return Err(inadmissible(p, "c0 is not a nonzero square mod p"));
            }
            Ok(())
        }
        RecipeId::EvenNCycle | RecipeId::EvenN2Cycle => {
            if valuation(&c0, p) != Some(1) {
                return Err(inadmissible(p, "v_p(c0) != 1; run normalize_even first"));
            }
            if f.coeffs()[1..].iter().any(|c| big_mod_u64(c, p) != 0) {
                return Err(inadmissible(p, "p does not divide every c_i with i >= 1"));
            }
            let l = if recipe == RecipeId::EvenNCycle { n } else { n - 2 };
            if l as u64 % p == 0 {
                return Err(inadmissible(p, format!("p divides the cycle length {l}")));
            }
            Ok(())
        }
    }
}

/// Least admissible prime, ascending from 3. The n-cycle recipe also asks
/// for a tame prime so that the segment certifies a cycle.
pub fn find_prime(curve: &HyperellipticCurve, shape: &FamilyShape, recipe: RecipeId) -> Result<u64> {
    for p in primes_from(3).take_while(|&p| p < PRIME_SEARCH_LIMIT) {
        if recipe == RecipeId::OddOddNCycle && shape.n as u64 % p == 0 {
            continue;
        }
        match admissible(curve, shape, recipe, p) {
            Ok(()) => return Ok(p),
            Err(Error::InadmissiblePrime { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SearchExhausted(format!("no admissible prime below {PRIME_SEARCH_LIMIT} for {recipe}")))
}

struct Draw {
    rng: ChaCha8Rng,
    p: u64,
    pb: BigInt,
}

impl Draw {
    fn unit(&mut self) -> BigInt {
        BigInt::from(self.rng.gen_range(1..self.p))
    }

    fn residue(&mut self) -> BigInt {
        BigInt::from(self.rng.gen_range(0..self.p))
    }

    /// Exactly `p^e` times a unit.
    fn val(&mut self, e: u32) -> BigInt {
        num_traits::pow(self.pb.clone(), e as usize) * self.unit()
    }
}

/// A specialization of the proof shape meeting the recipe's valuation
/// constraints at `p`; free residues come from `seed`.
pub fn witness(
    curve: &HyperellipticCurve,
    shape: &FamilyShape,
    recipe: RecipeId,
    p: u64,
    seed: u64,
) -> Result<Specialization> {
    if shape.monic != MonicSide::None {
        return Err(Error::InvalidShape("recipes apply to the proof shape".into()));
    }
    admissible(curve, shape, recipe, p)?;
    let mut r = Draw { rng: ChaCha8Rng::seed_from_u64(seed), p, pb: BigInt::from(p) };
    let (dg, dh, n) = (shape.d_g, shape.d_h, shape.n);
    let s = match recipe {
        RecipeId::OddEvenSplit => {
            let mut a: Vec<BigInt> = (0..dg).map(|_| r.val(1)).collect();
            a.push(r.unit());
            let b = (0..=dh).map(|_| r.val(2)).collect();
            Specialization::new(a, b)
        }
        RecipeId::OddEvenN1Cycle | RecipeId::OddOddNCycle => {
            let mut a = vec![r.unit()];
            a.extend((1..=dg).map(|_| r.val(2)));
            let mut b: Vec<BigInt> = (0..dh).map(|_| r.val(2)).collect();
            b.push(r.val(1));
            Specialization::new(a, b)
        }
        RecipeId::OddOddQCycle => {
            let q = select_bertrand_prime(n)? as usize;
            let u = (n - q) / 2;
            let a = (0..=dg).map(|i| if i == u { r.unit() } else { r.val(2) }).collect();
            let mut b: Vec<BigInt> = (0..dh).map(|_| r.val(2)).collect();
            b.push(r.val(1));
            Specialization::new(a, b)
        }
        RecipeId::EvenNCycle | RecipeId::EvenN2Cycle => {
            let u = if recipe == RecipeId::EvenNCycle { n / 2 } else { (n - 2) / 2 };
            let a = (0..=dg).map(|i| if i == u { r.unit() } else { r.val(1) }).collect();
            let mut b = vec![r.unit()];
            b.extend((1..=dh).map(|_| r.residue()));
            Specialization::new(a, b)
        }
        RecipeId::OddEvenTransp | RecipeId::KCycle(_) | RecipeId::D3N3Transp => {
            short_cycle_witness(curve, shape, recipe, &mut r)?
        }
    };
    Ok(s)
}

/// Constant term of valuation one, `p` dividing the terms of degree below
/// `k`, and a unit in degree `k`.
fn short_cycle_witness(
    curve: &HyperellipticCurve,
    shape: &FamilyShape,
    recipe: RecipeId,
    r: &mut Draw,
) -> Result<Specialization> {
    let k = recipe.short_cycle().unwrap();
    let (p, pb) = (r.p, r.pb.clone());
    let (dg, dh) = (shape.d_g, shape.d_h);
    let leading_from_h = shape.case == ParityCase::OddDOddN;

    let mut b = Vec::with_capacity(dh + 1);
    b.push(if recipe == RecipeId::D3N3Transp {
        BigInt::one() + &pb * r.residue()
    } else {
        BigInt::one() + &pb * &pb * r.residue()
    });
    for j in 1..=dh {
        b.push(if j <= k {
            BigInt::one() + &pb * r.residue()
        } else if j == dh && leading_from_h {
            r.unit()
        } else {
            r.residue()
        });
    }
    let fh2 = &curve.f * &IntPolynomial::new(b.clone()).square();

    let c0b = &fh2.coeff(0);
    let roots = sqrt_mod_all(big_mod_u64(c0b, p), p);
    let m = roots[r.rng.gen_range(0..roots.len())];
    let good: Vec<u64> = (0..p)
        .filter(|&t| {
            let a0 = BigInt::from(m) + &pb * t;
            valuation(&(&a0 * &a0 - c0b), p) == Some(1)
        })
        .collect();
    let t = good[r.rng.gen_range(0..good.len())];
    let a0 = BigInt::from(m) + &pb * t;
    let inv2a0 = inv_mod(big_mod_u64(&(2 * &a0), p), p);

    let mut a = vec![a0];
    // residue of a_i that makes the degree-i coefficient of F vanish mod p
    let target = |a: &[BigInt], i: usize| -> u64 {
        let mut s = fh2.coeff(i);
        for j in 1..i {
            s -= &a[j] * &a[i - j];
        }
        (big_mod_u64(&s, p) as u128 * inv2a0 as u128 % p as u128) as u64
    };
    for i in 1..=dg {
        let v = if i < k {
            BigInt::from(target(&a, i)) + &pb * r.residue()
        } else if i == k {
            let bad = target(&a, i);
            let mut x = r.rng.gen_range(0..p - 1);
            if x >= bad {
                x += 1;
            }
            if x == 0 && i == dg {
                pb.clone()
            } else {
                BigInt::from(x)
            }
        } else if i == dg && !leading_from_h {
            r.unit()
        } else {
            r.residue()
        };
        a.push(v);
    }
    Ok(Specialization::new(a, b))
}

/// Segment (length, slope) the recipe forces.
pub fn predicted_segment(shape: &FamilyShape, recipe: RecipeId) -> Result<(usize, Rational64)> {
    let n = shape.n;
    let ni = n as i64;
    Ok(match recipe {
        RecipeId::OddEvenSplit => (n, Rational64::new(-2, ni)),
        RecipeId::OddEvenN1Cycle => (n - 1, Rational64::new(2, ni - 1)),
        RecipeId::OddOddNCycle => (n, Rational64::new(2, ni)),
        RecipeId::OddOddQCycle => {
            let q = select_bertrand_prime(n)? as i64;
            (q as usize, Rational64::new(2, q))
        }
        RecipeId::EvenNCycle => (n, Rational64::new(-1, ni)),
        RecipeId::EvenN2Cycle => (n - 2, Rational64::new(-1, ni - 2)),
        RecipeId::OddEvenTransp | RecipeId::D3N3Transp | RecipeId::KCycle(_) => {
            let k = recipe.short_cycle().unwrap();
            (k, Rational64::new(-1, k as i64))
        }
    })
}

/// Build `F`, check the predicted polygon at `p`, and return its cycle
/// certificates.
pub fn verify_witness(
    curve: &HyperellipticCurve,
    shape: &FamilyShape,
    recipe: RecipeId,
    s: &Specialization,
    p: u64,
) -> Result<(NewtonPolygon, Vec<CycleCertificate>)> {
    let big_f = build_family_member(curve, shape, s)?;
    let np = newton_polygon(&big_f, p)?;
    let (len, slope) = predicted_segment(shape, recipe)?;
    if !np.has_segment(len, slope) {
        return Err(Error::WitnessFailed(format!(
            "{recipe}: no segment of length {len} and slope {slope} in {np}"
        )));
    }
    if recipe == RecipeId::OddEvenSplit {
        let expected = FactorBlock { degree: shape.n, divisor: shape.n / 2, irreducible: false };
        if factorization_shape(&np) != [expected] {
            return Err(Error::WitnessFailed(format!("{recipe}: factorization shape differs in {np}")));
        }
    }
    let certs = cycles_of(&np, &big_f);
    let tame = len >= 2 && (len as u64).gcd(&p) == 1 && *slope.denom() as usize == len;
    if tame && !certs.iter().any(|c| c.cycle_length == len) {
        return Err(Error::WitnessFailed(format!("{recipe}: no {len}-cycle certificate at {p}")));
    }
    Ok((np, certs))
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub recipe: RecipeId,
    pub prime: u64,
    pub n: usize,
    pub curve: IntPolynomial,
    pub transform: Transform,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub member: IntPolynomial,
    pub polygon: NpCertificate,
    pub certificates: Vec<CycleCertificate>,
}

/// Prepare the curve, pick the prime, build and verify a witness.
pub fn witness_report(
    curve: &HyperellipticCurve,
    n: usize,
    recipe: RecipeId,
    prime: Option<u64>,
    seed: u64,
) -> Result<WitnessReport> {
    let prepared = prepare(curve, recipe, n)?;
    let c = &prepared.curve;
    let shape = FamilyShape::proof(c, n)?;
    if !recipe.applies_to(&shape) {
        return Err(Error::InvalidShape(format!("{recipe} does not apply to n = {n}, d = {}", shape.d)));
    }
    let p = match (prime, prepared.prime) {
        (Some(p), _) | (None, Some(p)) => p,
        (None, None) => find_prime(c, &shape, recipe)?,
    };
    let s = witness(c, &shape, recipe, p, seed)?;
    let (np, certificates) = verify_witness(c, &shape, recipe, &s, p)?;
    let member = build_family_member(c, &shape, &s)?;
    Ok(WitnessReport {
        recipe,
        prime: p,
        n,
        curve: c.f.clone(),
        transform: prepared.transform,
        a: s.a.iter().map(|x| x.to_string()).collect(),
        b: s.b.iter().map(|x| x.to_string()).collect(),
        polygon: np.certificate(&member),
        certificates,
        member,
    })
}

/// Run the standard recipes for the curve's parity case and feed
/// the resulting cycle types to the recognizer.
pub fn family_certificate(curve: &HyperellipticCurve, n: usize, seed: u64) -> Result<GroupCertificate> {
    let shape = FamilyShape::proof(curve, n)?;
    let (transitivity, cycles): (Vec<RecipeId>, Vec<RecipeId>) = match shape.case {
        ParityCase::OddDEvenN => (
            vec![RecipeId::OddEvenSplit, RecipeId::OddEvenN1Cycle],
            vec![RecipeId::OddEvenN1Cycle, RecipeId::OddEvenTransp],
        ),
        ParityCase::OddDOddN if n == 3 => (vec![RecipeId::OddOddNCycle], vec![RecipeId::OddOddNCycle, RecipeId::D3N3Transp]),
        ParityCase::OddDOddN => (
            vec![RecipeId::OddOddNCycle],
            vec![RecipeId::OddOddQCycle, RecipeId::OddEvenTransp],
        ),
        ParityCase::EvenDEvenN => (
            vec![RecipeId::EvenNCycle],
            vec![RecipeId::EvenNCycle, RecipeId::EvenN2Cycle, RecipeId::OddEvenTransp, RecipeId::KCycle(3)],
        ),
    };
    for r in &transitivity {
        witness_report(curve, n, *r, None, seed)?;
    }
    let mut evidence = Vec::new();
    for r in cycles {
        let rep = witness_report(curve, n, r, None, seed)?;
        for c in rep.certificates {
            let mut parts = vec![c.cycle_length];
            parts.resize(n - c.cycle_length + 1, 1);
            evidence.push(Evidence::new(CycleType::new(parts), format!("{r}@{}", rep.prime)));
        }
    }
    recognize_sn(n, &evidence, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::point_residue;
    use crate::perm::Conclusion;

    fn curve(c: &[i64]) -> HyperellipticCurve {
        HyperellipticCurve::new(IntPolynomial::from_i64s(c)).unwrap()
    }

    #[test]
    fn bertrand() {
        assert_eq!(select_bertrand_prime(5).unwrap(), 3);
        assert_eq!(select_bertrand_prime(7).unwrap(), 5);
        assert_eq!(select_bertrand_prime(9).unwrap(), 5);
        assert!(select_bertrand_prime(3).is_err());
    }

    #[test]
    fn normalize_examples() {
        let c = curve(&[1, 0, 0, 0, 1]);
        let prep = normalize_even(&c).unwrap();
        assert_eq!(prep.prime, Some(17));
        assert_eq!(prep.transform.shift, BigInt::from(2));
        assert_eq!(prep.transform.apply(&c.f).unwrap(), prep.curve.f);
        // f(0) = 3 and 3 does not divide the discriminant
        let c = curve(&[3, 1, 0, 0, 0, 0, 1]);
        let prep = normalize_even(&c).unwrap();
        assert_eq!(prep.transform.shift, BigInt::zero());
    }

    #[test]
    fn recipe_names_round_trip() {
        for r in RecipeId::DISPLAYED.into_iter().chain([RecipeId::KCycle(3)]) {
            assert_eq!(r.to_string().parse::<RecipeId>().unwrap(), r);
        }
        assert!("NOPE".parse::<RecipeId>().is_err());
    }

    #[test]
    fn ncycle_at_p_equal_n() {
        let c = curve(&[1, 1, 0, 1]);
        let shape = FamilyShape::proof(&c, 5).unwrap();
        let s = witness(&c, &shape, RecipeId::OddOddNCycle, 5, 0).unwrap();
        let (np, certs) = verify_witness(&c, &shape, RecipeId::OddOddNCycle, &s, 5).unwrap();
        assert_eq!(np.segments.len(), 1);
        assert!(certs.is_empty());
    }

    #[test]
    fn transposition_constant_term() {
        // c0 = 1, p = 5, m = 1 or 4
        let c = curve(&[1, 1, 0, 1]);
        let shape = FamilyShape::proof(&c, 4).unwrap();
        for seed in 0..10 {
            let s = witness(&c, &shape, RecipeId::OddEvenTransp, 5, seed).unwrap();
            let f = build_family_member(&c, &shape, &s).unwrap();
            assert_eq!(valuation(&f.coeff(0), 5), Some(1));
            assert_eq!(big_mod_u64(&f.coeff(1), 5), 0);
            assert_ne!(big_mod_u64(&f.coeff(2), 5), 0);
        }
    }

    #[test]
    fn inadmissible_primes() {
        let c = curve(&[1, 1, 0, 1]);
        let shape = FamilyShape::proof(&c, 4).unwrap();
        // p = 3 divides n - 1
        assert!(matches!(
            witness(&c, &shape, RecipeId::OddEvenN1Cycle, 3, 0),
            Err(Error::InadmissiblePrime { .. })
        ));
        assert!(matches!(
            witness(&c, &shape, RecipeId::OddEvenTransp, 2, 0),
            Err(Error::InadmissiblePrime { .. })
        ));
    }

    #[test]
    fn all_recipes_small() {
        for (coeffs, ns) in [(&[1i64, 1, 0, 1][..], &[3usize, 4, 5, 6][..]), (&[3, 1, 0, 0, 0, 0, 1], &[8])] {
            let c = curve(coeffs);
            for &n in ns {
                let shape = FamilyShape::proof(&c, n).unwrap();
                for r in RecipeId::all_for(&shape) {
                    for seed in 0..5 {
                        let rep = witness_report(&c, n, r, None, seed)
                            .unwrap_or_else(|e| panic!("{r} n={n}: {e}"));
                        let prep = prepare(&c, r, n).unwrap();
                        let shape = FamilyShape::proof(&prep.curve, n).unwrap();
                        let s = Specialization::new(
                            rep.a.iter().map(|x| x.parse().unwrap()).collect(),
                            rep.b.iter().map(|x| x.parse().unwrap()).collect(),
                        );
                        assert!(point_residue(&prep.curve, &shape, &s).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn family_certificates_reach_sn() {
        for (coeffs, n) in [
            (&[1i64, 1, 0, 1][..], 3),
            (&[1, 1, 0, 1], 4),
            (&[1, 1, 0, 1], 5),
            (&[1, -1, 0, 0, 0, 1], 5),
            (&[1, -1, 0, 0, 0, 1], 6),
            (&[3, 1, 0, 0, 0, 0, 1], 8),
        ] {
            let cert = family_certificate(&curve(coeffs), n, 1).unwrap();
            assert_eq!(cert.conclusion, Conclusion::Symmetric, "{coeffs:?} n={n}: {cert:?}");
        }
    }
}
