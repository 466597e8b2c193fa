//! Enumeration of the family boxes, irreducibility and Galois filtering,
//! field classing, and the counting diagnostics.

pub mod bounds;
pub mod boxes;
pub mod exponents;
pub mod fingerprint;

pub use bounds::{box_disc_bound, fujiwara, hadamard_disc_bound, root_bound, RootBound};
pub use boxes::{parse_height, CoefficientBox, DEFAULT_BOX_CAP};
pub use exponents::{ev_threshold_search, exponents, ExponentReport};
pub use fingerprint::{fingerprint, fingerprint_primes, isomorphic_exact, FieldFingerprint};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::family::{build_family_member, point_residue, FamilyShape, HyperellipticCurve, Specialization};
use crate::padic::newton_polygon;
use crate::perm::{recognize_sn, Conclusion, Evidence, GroupCertificate};
use crate::poly::{discriminant, factor_mod_p, factor_over_q_with_cap, DegreePartition, IntPolynomial, DEFAULT_FACTOR_CAP};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::io::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub y: BigRational,
    pub box_cap: u64,
    pub factor_cap: usize,
    pub iso_cap: usize,
    /// Good primes tried for a modular irreducibility proof.
    pub irreducibility_primes: usize,
    /// Primes at which a one-segment Newton polygon is tried.
    pub newton_prime_limit: u64,
    pub fingerprint_primes: usize,
    pub fingerprint_start: u64,
    /// Worker count; `None` falls back to `HYPERFIELD_THREADS`.
    pub threads: Option<usize>,
}

impl CensusConfig {
    pub fn new(y: BigRational) -> Self {
        CensusConfig {
            y,
            box_cap: DEFAULT_BOX_CAP,
            factor_cap: DEFAULT_FACTOR_CAP,
            iso_cap: fingerprint::DEFAULT_ISO_CAP,
            irreducibility_primes: 5,
            newton_prime_limit: 50,
            fingerprint_primes: fingerprint::DEFAULT_FINGERPRINT_PRIMES,
            fingerprint_start: fingerprint::DEFAULT_FINGERPRINT_START,
            threads: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Reducible,
    IrreducibleUncertified,
    SnCertified,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Reducible => "REDUCIBLE",
            Status::IrreducibleUncertified => "IRREDUCIBLE_UNCERTIFIED",
            Status::SnCertified => "SN_CERTIFIED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub specialization: Specialization,
    pub f: IntPolynomial,
    #[serde(serialize_with = "ser_int")]
    pub disc: BigInt,
    pub status: Status,
    pub fingerprint: Option<FieldFingerprint>,
    pub certificate: Option<GroupCertificate>,
}

fn ser_int<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Proper factor degrees compatible with one splitting type.
fn subset_sums(t: &DegreePartition) -> Vec<bool> {
    let n = t.total();
    let mut can = vec![false; n + 1];
    can[0] = true;
    for &p in t.parts() {
        for s in (p..=n).rev() {
            can[s] |= can[s - p];
        }
    }
    can
}

/// Modular splitting types that leave no room for a proper factor over Q.
fn types_force_irreducible(n: usize, types: &[DegreePartition]) -> bool {
    let mut possible = vec![true; n + 1];
    for t in types {
        for (p, c) in possible.iter_mut().zip(subset_sums(t)) {
            *p &= c;
        }
    }
    (1..n).all(|d| !possible[d])
}

/// Single-segment Newton polygon whose slope has denominator `n`.
fn newton_irreducible(f: &IntPolynomial, n: usize, limit: u64) -> bool {
    (2..=limit).filter(|&p| is_prime(p)).any(|p| {
        newton_polygon(f, p).is_ok_and(|np| {
            np.segments.len() == 1 && np.segments[0].length == n && np.segments[0].reduced_denominator() == n
        })
    })
}

/// Status, certificate and fingerprint of one family member.
pub fn classify_polynomial(f: &IntPolynomial, fp_primes: &[u64], cfg: &CensusConfig) -> Result<CensusRecord> {
    let n = f.degree().ok_or(Error::ZeroInput)?;
    let disc = discriminant(f);
    let blank = |status| CensusRecord {
        specialization: Specialization::new(vec![], vec![]),
        f: f.clone(),
        disc: disc.clone(),
        status,
        fingerprint: None,
        certificate: None,
    };
    if n >= 2 && disc.is_zero() {
        return Ok(blank(Status::Reducible));
    }
    let mut evidence = Vec::new();
    let mut p = 2;
    while evidence.len() < cfg.irreducibility_primes && p < 10_000 {
        p += 1;
        if !is_prime(p) {
            continue;
        }
        if let Ok(t) = factor_mod_p(f, p) {
            evidence.push(Evidence::new(t, format!("p={p}")));
        }
    }
    let types: Vec<DegreePartition> = evidence.iter().map(|e| e.cycle_type.clone()).collect();
    let irreducible = types_force_irreducible(n, &types)
        || newton_irreducible(f, n, cfg.newton_prime_limit)
        || factor_over_q_with_cap(f, cfg.factor_cap)?.is_irreducible();
    if !irreducible {
        return Ok(blank(Status::Reducible));
    }
    let fp = fingerprint(f, fp_primes)?;
    for (q, t) in fp.primes.iter().zip(&fp.types) {
        evidence.push(Evidence::new(t.clone(), format!("p={q}")));
    }
    let cert = recognize_sn(n, &evidence, true)?;
    let status = if cert.conclusion == Conclusion::Symmetric {
        Status::SnCertified
    } else {
        Status::IrreducibleUncertified
    };
    Ok(CensusRecord {
        status,
        fingerprint: Some(fp),
        certificate: (status == Status::SnCertified).then_some(cert),
        ..blank(status)
    })
}

fn member_record(
    curve: &HyperellipticCurve,
    shape: &FamilyShape,
    s: Specialization,
    fp_primes: &[u64],
    cfg: &CensusConfig,
) -> Result<CensusRecord> {
    let f = build_family_member(curve, shape, &s)?;
    let mut rec = classify_polynomial(&f, fp_primes, cfg)?;
    rec.specialization = s;
    Ok(rec)
}

/// Records of the box in odometer order, computed lazily on one thread.
pub fn enumerate_box<'a>(
    curve: &'a HyperellipticCurve,
    shape: &'a FamilyShape,
    cfg: &'a CensusConfig,
) -> Result<impl Iterator<Item = Result<CensusRecord>> + 'a> {
    let bx = CoefficientBox::new(shape, &cfg.y)?;
    let total = bx.check_cap(cfg.box_cap)?;
    let primes = fingerprint_primes(cfg.fingerprint_start, cfg.fingerprint_primes);
    Ok((0..total).map(move |i| member_record(curve, shape, bx.member(i), &primes, cfg)))
}

fn thread_count(cfg: &CensusConfig) -> Option<usize> {
    cfg.threads.or_else(|| std::env::var("HYPERFIELD_THREADS").ok()?.parse().ok()).filter(|&t| t > 0)
}

/// All records of the box, split into contiguous odometer ranges across
/// workers and merged back in order.
pub fn enumerate_box_parallel(
    curve: &HyperellipticCurve,
    shape: &FamilyShape,
    cfg: &CensusConfig,
) -> Result<Vec<CensusRecord>> {
    let bx = CoefficientBox::new(shape, &cfg.y)?;
    let total = bx.check_cap(cfg.box_cap)?;
    let primes = fingerprint_primes(cfg.fingerprint_start, cfg.fingerprint_primes);
    let work = || {
        (0..total as usize)
            .into_par_iter()
            .with_min_len(64)
            .map(|i| member_record(curve, shape, bx.member(i as u64), &primes, cfg))
            .collect::<Result<Vec<_>>>()
    };
    match thread_count(cfg) {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(work),
        None => work(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DedupeGroup {
    pub f: IntPolynomial,
    /// Indices into the record list, in order.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DedupeReport {
    pub groups: Vec<DedupeGroup>,
    pub max_multiplicity: usize,
}

/// Groups records by their polynomial `F`.
pub fn dedupe_gh(records: &[CensusRecord]) -> DedupeReport {
    let mut index: HashMap<&IntPolynomial, usize> = HashMap::new();
    let mut groups: Vec<DedupeGroup> = Vec::new();
    for (i, r) in records.iter().enumerate() {
        match index.get(&r.f) {
            Some(&g) => groups[g].members.push(i),
            None => {
                index.insert(&r.f, groups.len());
                groups.push(DedupeGroup { f: r.f.clone(), members: vec![i] });
            }
        }
    }
    let max_multiplicity = groups.iter().map(|g| g.members.len()).max().unwrap_or(0);
    DedupeReport { groups, max_multiplicity }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldClass {
    pub representative: IntPolynomial,
    /// Distinct polynomials in the class.
    pub multiplicity: usize,
    #[serde(serialize_with = "ser_int")]
    pub min_disc: BigInt,
    /// Merged on fingerprints alone, above the isomorphism cap.
    pub unconfirmed: bool,
}

/// Sorts the irreducible records into field classes and writes each
/// record's class id into its fingerprint.
pub fn assign_classes(records: &mut [CensusRecord], cfg: &CensusConfig) -> Result<Vec<FieldClass>> {
    let mut classes: Vec<FieldClass> = Vec::new();
    let mut reps: Vec<FieldFingerprint> = Vec::new();
    let mut by_types: HashMap<Vec<DegreePartition>, Vec<usize>> = HashMap::new();
    let mut seen: HashMap<IntPolynomial, usize> = HashMap::new();
    let standard = fingerprint_primes(cfg.fingerprint_start, cfg.fingerprint_primes);
    for r in records.iter_mut() {
        let Some(fp) = r.fingerprint.as_mut() else { continue };
        if let Some(&c) = seen.get(&r.f) {
            fp.class_id = Some(c);
            continue;
        }
        let regular = fp.primes == standard;
        let candidates: Vec<usize> = if regular {
            by_types.get(&fp.types).cloned().unwrap_or_default()
        } else {
            (0..classes.len()).filter(|&c| reps[c].agrees_with(fp)).collect()
        };
        let mut found = None;
        for c in candidates {
            if fp.degree > cfg.iso_cap {
                classes[c].unconfirmed = true;
                found = Some(c);
                break;
            }
            if isomorphic_exact(&classes[c].representative, &r.f, cfg.iso_cap)? {
                found = Some(c);
                break;
            }
        }
        let c = match found {
            Some(c) => {
                let class = &mut classes[c];
                class.multiplicity += 1;
                if r.disc.abs() < class.min_disc {
                    class.min_disc = r.disc.abs();
                }
                c
            }
            None => {
                classes.push(FieldClass {
                    representative: r.f.clone(),
                    multiplicity: 1,
                    min_disc: r.disc.abs(),
                    unconfirmed: false,
                });
                reps.push(fp.clone());
                if regular {
                    by_types.entry(fp.types.clone()).or_default().push(classes.len() - 1);
                }
                classes.len() - 1
            }
        };
        fp.class_id = Some(c);
        seen.insert(r.f.clone(), c);
    }
    Ok(classes)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub reducible: usize,
    pub irreducible: usize,
    pub sn_certified: usize,
}

impl Counts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Reducible => self.reducible += 1,
            Status::IrreducibleUncertified => self.irreducible += 1,
            Status::SnCertified => self.sn_certified += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.reducible + self.irreducible + self.sn_certified
    }

    pub fn reducible_fraction(&self) -> f64 {
        if self.total() == 0 {
            0.0
        } else {
            self.reducible as f64 / self.total() as f64
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ResidueCounts {
    /// Members where the point `(x, g/h)` lies on the curve modulo `F`.
    pub zero: usize,
    pub nonzero: usize,
    /// `h` not invertible modulo `F`.
    pub undefined: usize,
    /// Undefined members that are nonetheless irreducible.
    pub undefined_irreducible: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    #[serde(serialize_with = "ser_q")]
    pub box_exponent: BigRational,
    /// `log |box| / log Y`.
    pub log_cardinality_over_log_y: Option<f64>,
    /// Bound on `|Disc F|` over the whole box.
    #[serde(serialize_with = "ser_int")]
    pub box_disc_bound: BigInt,
    /// Irreducible members by number of decimal digits of `|Disc F|`.
    pub disc_histogram: Vec<(usize, usize)>,
    /// max over classes of `M_K / max(Y^n |disc|^(-1/2), Y^(n/2))`, with the
    /// polynomial discriminant standing in for the field discriminant.
    pub multiplicity_ratio: Option<f64>,
    /// Least-squares slope of `log #{classes with |disc| <= X}` against `log X`.
    pub log_count_slope: Option<f64>,
}

fn ser_q<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusSummary {
    pub curve: String,
    pub n: usize,
    #[serde(serialize_with = "ser_q")]
    pub y: BigRational,
    pub box_cardinality: u64,
    pub counts: Counts,
    /// Counts restricted to members with `h != 0`.
    pub counts_h_nonzero: Counts,
    pub distinct_polynomials: usize,
    pub classes: usize,
    pub unconfirmed_classes: usize,
    pub max_multiplicity: usize,
    pub max_class_multiplicity: usize,
    pub point_residue: ResidueCounts,
    pub exponent_report: Option<ExponentReport>,
    pub diagnostics: Diagnostics,
}

pub struct CensusRun {
    pub shape: FamilyShape,
    pub records: Vec<CensusRecord>,
    pub classes: Vec<FieldClass>,
    pub summary: CensusSummary,
}

fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        x.to_f64().unwrap().abs().ln()
    } else {
        let shift = bits - 900;
        (x.abs() >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

fn least_squares_slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 3 {
        return None;
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx).powi(2)));
    (den > 0.0).then(|| num / den)
}

fn diagnostics(
    curve: &HyperellipticCurve,
    bx: &CoefficientBox,
    records: &[CensusRecord],
    classes: &[FieldClass],
) -> Result<Diagnostics> {
    let y = bx.y.to_f64().unwrap_or(f64::NAN);
    let n = bx.shape.n as f64;
    let mut hist: HashMap<usize, usize> = HashMap::new();
    for r in records.iter().filter(|r| r.status != Status::Reducible) {
        *hist.entry(r.disc.magnitude().to_string().len()).or_default() += 1;
    }
    let mut disc_histogram: Vec<_> = hist.into_iter().collect();
    disc_histogram.sort();
    let multiplicity_ratio = classes
        .iter()
        .map(|c| {
            let a = n * y.ln() - 0.5 * ln_big(&c.min_disc);
            let b = 0.5 * n * y.ln();
            c.multiplicity as f64 / a.max(b).exp()
        })
        .reduce(f64::max);
    let mut logs: Vec<f64> = classes.iter().filter(|c| !c.min_disc.is_zero()).map(|c| ln_big(&c.min_disc)).collect();
    logs.sort_by(|a, b| a.total_cmp(b));
    let pts: Vec<(f64, f64)> = logs.iter().enumerate().map(|(i, &x)| (x, ((i + 1) as f64).ln())).collect();
    let card = bx.cardinality();
    Ok(Diagnostics {
        box_exponent: bx.exponent(),
        log_cardinality_over_log_y: (y > 1.0).then(|| ln_big(&card) / y.ln()),
        box_disc_bound: box_disc_bound(curve, bx)?,
        disc_histogram,
        multiplicity_ratio,
        log_count_slope: least_squares_slope(&pts),
    })
}

/// Runs the whole census for the box of height `cfg.y`.
pub fn run_census(curve: &HyperellipticCurve, n: usize, cfg: &CensusConfig) -> Result<CensusRun> {
    let shape = FamilyShape::census(curve, n)?;
    if n > cfg.factor_cap {
        return Err(Error::DegreeCapExceeded { degree: n, cap: cfg.factor_cap });
    }
    let bx = CoefficientBox::new(&shape, &cfg.y)?;
    let total = bx.check_cap(cfg.box_cap)?;
    let mut records = enumerate_box_parallel(curve, &shape, cfg)?;
    let classes = assign_classes(&mut records, cfg)?;
    let dedupe = dedupe_gh(&records);

    let mut counts = Counts::default();
    let mut counts_h_nonzero = Counts::default();
    let mut residues = ResidueCounts::default();
    for r in &records {
        counts.add(r.status);
        let (_, h) = r.specialization.polys(&shape)?;
        if !h.is_zero() {
            counts_h_nonzero.add(r.status);
        }
        match point_residue(curve, &shape, &r.specialization) {
            Ok(res) if res.is_zero() => residues.zero += 1,
            Ok(_) => residues.nonzero += 1,
            Err(Error::NonCoprimeH) => {
                residues.undefined += 1;
                if r.status != Status::Reducible {
                    residues.undefined_irreducible += 1;
                }
            }
            Err(e) => return Err(e),
        }
    }
    let g = curve.genus() as u64;
    let summary = CensusSummary {
        curve: curve.f.to_string(),
        n,
        y: cfg.y.clone(),
        box_cardinality: total,
        counts,
        counts_h_nonzero,
        distinct_polynomials: dedupe.groups.len(),
        classes: classes.len(),
        unconfirmed_classes: classes.iter().filter(|c| c.unconfirmed).count(),
        max_multiplicity: dedupe.max_multiplicity,
        max_class_multiplicity: classes.iter().map(|c| c.multiplicity).max().unwrap_or(0),
        point_residue: residues,
        exponent_report: exponents(g, curve.degree() as u64, n as u64).ok(),
        diagnostics: diagnostics(curve, &bx, &records, &classes)?,
    };
    Ok(CensusRun { shape, records, classes, summary })
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `spec_a;spec_b;F_coeffs;disc_F;status;fingerprint_hash;class_id`
pub fn write_csv<W: Write>(records: &[CensusRecord], mut w: W) -> Result<()> {
    writeln!(w, "spec_a;spec_b;F_coeffs;disc_F;status;fingerprint_hash;class_id")?;
    for r in records {
        let (hash, class) = match &r.fingerprint {
            Some(fp) => (fp.hash(), fp.class_id.map(|c| c.to_string()).unwrap_or_default()),
            None => (String::new(), String::new()),
        };
        writeln!(
            w,
            "{};{};{};{};{};{};{}",
            join(&r.specialization.a),
            join(&r.specialization.b),
            r.f,
            r.disc,
            r.status,
            hash,
            class
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve() -> HyperellipticCurve {
        HyperellipticCurve::new(IntPolynomial::from_i64s(&[1, 1, 0, 1])).unwrap()
    }

    fn cfg(y: i64) -> CensusConfig {
        let mut c = CensusConfig::new(BigRational::from_integer(y.into()));
        c.fingerprint_primes = 20;
        c
    }

    #[test]
    fn incompatible_types() {
        let t = |v: Vec<usize>| DegreePartition::new(v);
        assert!(types_force_irreducible(4, &[t(vec![3, 1]), t(vec![2, 2])]));
        assert!(!types_force_irreducible(4, &[t(vec![2, 2]), t(vec![2, 1, 1])]));
    }

    #[test]
    fn zero_spec_is_minus_f() {
        let c = curve();
        let shape = FamilyShape::census(&c, 3).unwrap();
        let cf = cfg(2);
        let rec = member_record(&c, &shape, Specialization::from_i64s(&[0, 0], &[]), &[1_000_003], &cf).unwrap();
        assert_eq!(rec.f, IntPolynomial::from_i64s(&[-1, -1, 0, -1]));
        assert_ne!(rec.status, Status::Reducible);
    }

    #[test]
    fn reducible_member() {
        // g = x^2 - 1, h = 0 gives F = g^2
        let r = classify_polynomial(&IntPolynomial::from_i64s(&[1, 0, -2, 0, 1]), &[1_000_003], &cfg(2)).unwrap();
        assert_eq!(r.status, Status::Reducible);
        let r = classify_polynomial(&IntPolynomial::from_i64s(&[-2, 0, 0, 0, 1]), &[1_000_003], &cfg(2)).unwrap();
        assert_ne!(r.status, Status::Reducible);
    }

    #[test]
    fn dedupe_pairs_h_signs() {
        let c = curve();
        let shape = FamilyShape::census(&c, 4).unwrap();
        let cf = cfg(2);
        let recs: Vec<_> = enumerate_box(&c, &shape, &cf).unwrap().collect::<Result<_>>().unwrap();
        let d = dedupe_gh(&recs);
        assert!(d.max_multiplicity >= 2);
        assert_eq!(d.groups.iter().map(|g| g.members.len()).sum::<usize>(), recs.len());
    }

    #[test]
    fn small_run() {
        let run = run_census(&curve(), 3, &cfg(2)).unwrap();
        let s = &run.summary;
        assert_eq!(s.box_cardinality, 15);
        assert_eq!(s.counts.total(), 15);
        assert_eq!(s.point_residue.nonzero, 0);
        let mut out = Vec::new();
        write_csv(&run.records, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 16);
    }

    #[test]
    fn parallel_matches_sequential() {
        let c = curve();
        let shape = FamilyShape::census(&c, 4).unwrap();
        let mut cf = cfg(2);
        cf.threads = Some(3);
        let seq: Vec<_> = enumerate_box(&c, &shape, &cf).unwrap().collect::<Result<_>>().unwrap();
        assert_eq!(seq, enumerate_box_parallel(&c, &shape, &cf).unwrap());
    }
}
