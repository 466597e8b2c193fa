use super::CycleType;
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::poly::{factor_mod_p, IntPolynomial};
use num_integer::Integer;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    #[serde(rename = "FULL_CYCLE+TRANSPOSITION")]
    FullCycleTransposition,
    #[serde(rename = "LONG_PRIME_CYCLE+TRANSPOSITION")]
    LongPrimeCycleTransposition,
    #[serde(rename = "N_MINUS_1+TRANSPOSITION")]
    NMinus1Transposition,
    #[serde(rename = "N_MINUS_2+3CYCLE+TRANSPOSITION")]
    NMinus2ThreeCycleTransposition,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::FullCycleTransposition => "FULL_CYCLE+TRANSPOSITION",
            Rule::LongPrimeCycleTransposition => "LONG_PRIME_CYCLE+TRANSPOSITION",
            Rule::NMinus1Transposition => "N_MINUS_1+TRANSPOSITION",
            Rule::NMinus2ThreeCycleTransposition => "N_MINUS_2+3CYCLE+TRANSPOSITION",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    #[serde(rename = "S_n")]
    Symmetric,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

/// A cycle type together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub cycle_type: CycleType,
    pub source: String,
}

impl Evidence {
    pub fn new(cycle_type: CycleType, source: impl Into<String>) -> Self {
        Evidence { cycle_type, source: source.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupCertificate {
    pub degree: usize,
    pub evidence: Vec<Evidence>,
    pub transitive: bool,
    pub rule: Option<Rule>,
    pub conclusion: Conclusion,
}

/// Cycle lengths that some power of an element of this type realizes as a
/// single cycle: a part coprime to the lcm of the remaining nontrivial parts.
pub fn isolated_cycles(t: &CycleType) -> BTreeSet<usize> {
    let parts: Vec<usize> = t.nontrivial().collect();
    let mut out = BTreeSet::new();
    for (i, &l) in parts.iter().enumerate() {
        let rest = parts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(1usize, |acc, (_, &m)| acc.lcm(&m));
        if l.gcd(&rest) == 1 {
            out.insert(l);
        }
    }
    out
}

pub fn recognize_sn(n: usize, evidence: &[Evidence], transitive: bool) -> Result<GroupCertificate> {
    for e in evidence {
        if e.cycle_type.total() != n {
            return Err(Error::BadEvidence(format!(
                "cycle type {} does not partition {n}",
                e.cycle_type
            )));
        }
    }
    let cycles: BTreeSet<usize> = evidence.iter().flat_map(|e| isolated_cycles(&e.cycle_type)).collect();
    let has = |l: usize| cycles.contains(&l);
    let rule = if !transitive || n < 2 || !has(2) {
        None
    } else if is_prime(n as u64) && has(n) {
        Some(Rule::FullCycleTransposition)
    } else if n >= 3 && has(n - 1) {
        Some(Rule::NMinus1Transposition)
    } else if cycles.iter().any(|&p| 2 * p > n && is_prime(p as u64)) {
        Some(Rule::LongPrimeCycleTransposition)
    } else if n >= 4 && has(3) && has(n - 2) {
        Some(Rule::NMinus2ThreeCycleTransposition)
    } else {
        None
    };
    Ok(GroupCertificate {
        degree: n,
        evidence: evidence.to_vec(),
        transitive,
        rule,
        conclusion: if rule.is_some() { Conclusion::Symmetric } else { Conclusion::Inconclusive },
    })
}

/// Frobenius cycle types at each prime, by Dedekind's theorem.
pub fn frobenius_sample(p: &IntPolynomial, primes: &[u64]) -> Result<Vec<CycleType>> {
    let n = p.degree().ok_or(Error::ZeroInput)?;
    primes.iter().map(|&q| Ok(factor_mod_p(p, q)?.padded(n))).collect()
}

pub const DEFAULT_CERTIFY_PRIMES: usize = 100;

/// Irreducibility over Q followed by Frobenius sampling at the given primes
/// (bad primes are skipped) and [`recognize_sn`].
pub fn certify_polynomial(p: &IntPolynomial, primes: &[u64]) -> Result<GroupCertificate> {
    let n = p.degree().ok_or(Error::ZeroInput)?;
    let fac = crate::poly::factor_over_q(p)?;
    if !fac.is_irreducible() {
        let f = fac.factors.iter().find(|f| f.degree() < Some(n)).unwrap_or(&fac.factors[0]);
        return Err(Error::Reducible(f.pretty()));
    }
    let evidence: Vec<Evidence> = primes
        .iter()
        .filter_map(|&q| factor_mod_p(p, q).ok().map(|t| Evidence::new(t.padded(n), format!("p={q}"))))
        .collect();
    recognize_sn(n, &evidence, true)
}

/// The first `count` primes from 3 that are good for `p`.
pub fn good_primes(p: &IntPolynomial, count: usize) -> Vec<u64> {
    crate::arith::primes_from(3).filter(|&q| factor_mod_p(p, q).is_ok()).take(count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(parts: &[usize]) -> Evidence {
        Evidence::new(CycleType::new(parts.to_vec()), "test")
    }

    #[test]
    fn recognition_examples() {
        let c = recognize_sn(7, &[ev(&[2, 1, 1, 1, 1, 1]), ev(&[7])], true).unwrap();
        assert_eq!(c.conclusion, Conclusion::Symmetric);
        let c = recognize_sn(8, &[ev(&[2, 1, 1, 1, 1, 1, 1]), ev(&[5, 1, 1, 1])], true).unwrap();
        assert_eq!(c.rule, Some(Rule::LongPrimeCycleTransposition));
        let c = recognize_sn(
            8,
            &[ev(&[2, 1, 1, 1, 1, 1, 1]), ev(&[3, 1, 1, 1, 1, 1]), ev(&[6, 1, 1])],
            true,
        )
        .unwrap();
        assert_eq!(c.rule, Some(Rule::NMinus2ThreeCycleTransposition));
    }

    #[test]
    fn needs_transitivity_and_transposition() {
        let e = [ev(&[2, 1, 1, 1, 1, 1]), ev(&[7])];
        assert_eq!(recognize_sn(7, &e, false).unwrap().conclusion, Conclusion::Inconclusive);
        assert_eq!(recognize_sn(7, &[ev(&[7])], true).unwrap().conclusion, Conclusion::Inconclusive);
        // a full cycle of composite length is not enough
        let e = [ev(&[2, 1, 1]), ev(&[4])];
        assert_eq!(recognize_sn(4, &e, true).unwrap().conclusion, Conclusion::Inconclusive);
    }

    #[test]
    fn powering_isolates_parts() {
        // [2,3] cubed is a transposition
        let c = recognize_sn(5, &[ev(&[3, 2]), ev(&[4, 1])], true).unwrap();
        assert_eq!(c.rule, Some(Rule::NMinus1Transposition));
        // [2,2] never yields a transposition
        assert!(isolated_cycles(&CycleType::new(vec![2, 2])).is_empty());
        assert_eq!(isolated_cycles(&CycleType::new(vec![4, 2])), BTreeSet::new());
    }

    #[test]
    fn bad_evidence() {
        assert!(matches!(recognize_sn(5, &[ev(&[2, 1])], true), Err(Error::BadEvidence(_))));
    }

    #[test]
    fn frobenius_examples() {
        let f = IntPolynomial::from_i64s(&[1, 1, 0, 1]);
        let t = frobenius_sample(&f, &[2, 3, 5]).unwrap();
        let parts: Vec<Vec<usize>> = t.iter().map(|c| c.parts().to_vec()).collect();
        // mod 3: (x - 1)(x^2 + x + 2)
        assert_eq!(parts, vec![vec![3], vec![2, 1], vec![3]]);
        let g = IntPolynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(frobenius_sample(&g, &[5]).unwrap()[0].parts(), &[1, 1]);
    }

    #[test]
    fn certify_examples() {
        let p = IntPolynomial::from_i64s(&[-1, -1, 0, 0, 0, 1]);
        let c = certify_polynomial(&p, &good_primes(&p, DEFAULT_CERTIFY_PRIMES)).unwrap();
        assert_eq!(c.conclusion, Conclusion::Symmetric);
        let q = IntPolynomial::from_i64s(&[1, 0, 0, 0, 1]);
        let c = certify_polynomial(&q, &good_primes(&q, DEFAULT_CERTIFY_PRIMES)).unwrap();
        assert_eq!(c.conclusion, Conclusion::Inconclusive);
        let r = IntPolynomial::from_i64s(&[-1, 0, 0, 0, 1]);
        assert!(matches!(certify_polynomial(&r, &[3, 5]), Err(Error::Reducible(_))));
    }
}
