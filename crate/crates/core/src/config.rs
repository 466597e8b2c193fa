//! Flat `key=value` run configuration for census runs.
//!
//! Blank lines and lines starting with `#` are ignored. Every key is
//! validated while parsing; unknown or repeated keys are errors.

use crate::census::{parse_height, CensusConfig};
use crate::error::{Error, Result};
use crate::family::HyperellipticCurve;
use crate::poly::IntPolynomial;
use num_rational::BigRational;
use std::path::{Path, PathBuf};

pub const KEYS: &[&str] = &[
    "curve",
    "curve_file",
    "n",
    "y",
    "sweep",
    "fingerprint_primes",
    "fingerprint_start",
    "irreducibility_primes",
    "box_cap",
    "factor_cap",
    "iso_cap",
    "seed",
    "threads",
    "csv_out",
    "summary_out",
];

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RunConfig {
    pub curve: Option<IntPolynomial>,
    pub n: Option<usize>,
    /// Heights to run; `y` and `sweep` both add to this list.
    pub heights: Vec<BigRational>,
    pub fingerprint_primes: Option<usize>,
    pub fingerprint_start: Option<u64>,
    pub irreducibility_primes: Option<usize>,
    pub box_cap: Option<u64>,
    pub factor_cap: Option<usize>,
    pub iso_cap: Option<usize>,
    pub seed: u64,
    pub threads: Option<usize>,
    pub csv_out: Option<PathBuf>,
    pub summary_out: Option<PathBuf>,
}

fn num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Config(format!("{key}: not a valid number: {v:?}")))
}

impl RunConfig {
    /// Parses config text; relative `curve_file` paths resolve against `base`.
    pub fn parse(text: &str, base: Option<&Path>) -> Result<Self> {
        let mut cfg = RunConfig::default();
        let mut seen = std::collections::HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(Error::Config(format!("line {}: expected key=value", lineno + 1)));
            };
            let (k, v) = (k.trim(), v.trim());
            if !KEYS.contains(&k) {
                return Err(Error::Config(format!("line {}: unknown key {k:?}", lineno + 1)));
            }
            if !seen.insert(k.to_string()) {
                return Err(Error::Config(format!("line {}: repeated key {k:?}", lineno + 1)));
            }
            cfg.set(k, v, base)?;
        }
        if seen.contains("curve") && seen.contains("curve_file") {
            return Err(Error::Config("give either curve or curve_file, not both".into()));
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, path.parent())
    }

    fn set(&mut self, k: &str, v: &str, base: Option<&Path>) -> Result<()> {
        match k {
            "curve" => self.curve = Some(v.parse()?),
            "curve_file" => {
                let p = base.map_or_else(|| PathBuf::from(v), |b| b.join(v));
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| Error::Config(format!("curve_file {}: {e}", p.display())))?;
                self.curve = Some(text.trim().parse()?);
            }
            "n" => self.n = Some(num(k, v)?),
            "y" => self.heights.push(parse_height(v)?),
            "sweep" => {
                for part in v.split(',') {
                    self.heights.push(parse_height(part)?);
                }
            }
            "fingerprint_primes" => self.fingerprint_primes = Some(num(k, v)?),
            "fingerprint_start" => self.fingerprint_start = Some(num(k, v)?),
            "irreducibility_primes" => self.irreducibility_primes = Some(num(k, v)?),
            "box_cap" => self.box_cap = Some(num(k, v)?),
            "factor_cap" => self.factor_cap = Some(num(k, v)?),
            "iso_cap" => self.iso_cap = Some(num(k, v)?),
            "seed" => self.seed = num(k, v)?,
            "threads" => self.threads = Some(num(k, v)?),
            "csv_out" => self.csv_out = Some(PathBuf::from(v)),
            "summary_out" => self.summary_out = Some(PathBuf::from(v)),
            _ => unreachable!("key list checked above"),
        }
        Ok(())
    }

    pub fn curve(&self) -> Result<HyperellipticCurve> {
        HyperellipticCurve::new(self.curve.clone().ok_or_else(|| Error::Config("missing curve".into()))?)
    }

    pub fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::Config("missing n".into()))
    }

    /// Census settings for one height.
    pub fn census(&self, y: &BigRational) -> CensusConfig {
        let mut c = CensusConfig::new(y.clone());
        if let Some(v) = self.fingerprint_primes {
            c.fingerprint_primes = v;
        }
        if let Some(v) = self.fingerprint_start {
            c.fingerprint_start = v;
        }
        if let Some(v) = self.irreducibility_primes {
            c.irreducibility_primes = v;
        }
        if let Some(v) = self.box_cap {
            c.box_cap = v;
        }
        if let Some(v) = self.factor_cap {
            c.factor_cap = v;
        }
        if let Some(v) = self.iso_cap {
            c.iso_cap = v;
        }
        c.threads = self.threads;
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let c = RunConfig::parse("# cubic\ncurve = 1,1,0,1\nn=4\nsweep=2,4,8\nthreads=2\n", None).unwrap();
        assert_eq!(c.heights.len(), 3);
        assert_eq!(c.n().unwrap(), 4);
        assert_eq!(c.census(&c.heights[0]).threads, Some(2));
    }

    #[test]
    fn rejects() {
        assert!(matches!(RunConfig::parse("colour=red", None), Err(Error::Config(_))));
        assert!(matches!(RunConfig::parse("n=4\nn=5", None), Err(Error::Config(_))));
        assert!(matches!(RunConfig::parse("n=four", None), Err(Error::Config(_))));
        assert!(matches!(RunConfig::parse("curve=1,x", None), Err(Error::Parse(_))));
        assert!(matches!(RunConfig::parse("just text", None), Err(Error::Config(_))));
    }
}
