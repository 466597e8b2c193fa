//! Brute-force checks of the recognition rules at small degree.
//!
//! A generating set X passes when every transitive subgroup of `S_n`
//! containing X is `S_n` itself. If `<X>` is transitive that is a single
//! order check; otherwise every transitive overgroup contains some
//! `<X, pi>` with `pi` outside `<X>`, and `pi` only matters up to its
//! double coset, so we recurse over double coset representatives.

use super::{closure, Permutation};
use crate::error::Result;
use num_integer::Integer;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub statement: String,
    pub degree: usize,
    pub placements: usize,
    pub groups_explored: usize,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct Sweep {
    n: usize,
    factorial: u64,
    done: HashSet<Vec<u32>>,
}

impl Sweep {
    fn new(n: usize) -> Self {
        Sweep { n, factorial: (1..=n as u64).product(), done: HashSet::new() }
    }

    /// A transitive proper overgroup of `<gens>`, if any.
    fn overgroup_counterexample(&mut self, gens: &[Permutation]) -> Result<Option<Vec<Permutation>>> {
        let g = closure(gens)?;
        if g.is_symmetric() {
            return Ok(None);
        }
        if g.is_transitive() {
            return Ok(Some(gens.to_vec()));
        }
        let mut key: Vec<u32> = g.elements()?.iter().map(|e| e.rank() as u32).collect();
        key.sort_unstable();
        if self.done.contains(&key) {
            return Ok(None);
        }
        let mut covered = vec![false; self.factorial as usize];
        for &r in &key {
            covered[r as usize] = true;
        }
        for r in 0..self.factorial {
            if covered[r as usize] {
                continue;
            }
            let pi = Permutation::unrank(self.n, r);
            // mark the double coset <gens> pi <gens>
            covered[r as usize] = true;
            let mut stack = vec![pi.clone()];
            while let Some(x) = stack.pop() {
                for s in gens {
                    for y in [s.compose(&x), x.compose(s)] {
                        let ry = y.rank() as usize;
                        if !covered[ry] {
                            covered[ry] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            let mut bigger = gens.to_vec();
            bigger.push(pi);
            if let Some(bad) = self.overgroup_counterexample(&bigger)? {
                return Ok(Some(bad));
            }
        }
        self.done.insert(key);
        Ok(None)
    }

    fn run(&mut self, statement: &str, placements: Vec<Vec<Permutation>>) -> Result<SweepReport> {
        let mut counterexamples = Vec::new();
        let count = placements.len();
        for gens in placements {
            if let Some(bad) = self.overgroup_counterexample(&gens)? {
                let shown: Vec<String> = bad.iter().map(|g| g.to_string()).collect();
                counterexamples.push(shown.join(", "));
            }
        }
        Ok(SweepReport {
            statement: statement.into(),
            degree: self.n,
            placements: count,
            groups_explored: self.done.len(),
            counterexamples,
        })
    }
}

fn transpositions(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push(Permutation::from_cycles(n, &[&[a, b]]).unwrap());
        }
    }
    out
}

fn three_cycles(n: usize) -> Vec<Permutation> {
    // each 3-cycle generates the same group as its inverse
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                out.push(Permutation::from_cycles(n, &[&[a, b, c]]).unwrap());
            }
        }
    }
    out
}

fn is_prime(p: usize) -> bool {
    crate::arith::is_prime(p as u64)
}

/// Transitive groups containing a copy of `S_k` with `k > n/2` are `S_n`.
pub fn lifting_lemma(n: usize) -> Result<SweepReport> {
    let placements = (n / 2 + 1..n)
        .map(|k| vec![Permutation::cycle(n, k), Permutation::cycle(n, 2)])
        .collect();
    Sweep::new(n).run("lifting lemma", placements)
}

/// Transposition plus an (n-1)-cycle or a p-cycle with prime p > n/2.
pub fn transposition_long_cycle(n: usize) -> Result<SweepReport> {
    let mut lengths: Vec<usize> = (n / 2 + 1..=n).filter(|&p| is_prime(p)).collect();
    if n >= 3 && !lengths.contains(&(n - 1)) {
        lengths.push(n - 1);
    }
    let mut placements = Vec::new();
    for c in lengths {
        let sigma = Permutation::cycle(n, c);
        for tau in transpositions(n) {
            placements.push(vec![sigma.clone(), tau]);
        }
    }
    Sweep::new(n).run("transposition and long cycle", placements)
}

/// Transposition, 3-cycle and (n-2)-cycle.
pub fn transposition_three_cycle(n: usize) -> Result<SweepReport> {
    let sigma = Permutation::cycle(n, n - 2);
    let mut placements = Vec::new();
    for tau in transpositions(n) {
        for mu in three_cycles(n) {
            placements.push(vec![sigma.clone(), tau.clone(), mu]);
        }
    }
    Sweep::new(n).run("transposition, 3-cycle and (n-2)-cycle", placements)
}

/// `<(1 .. n), (1 1+d)>` is `S_n` exactly when `gcd(d, n) = 1`. Returns the
/// offsets where that fails.
pub fn full_cycle_criterion(n: usize) -> Result<Vec<usize>> {
    let sigma = Permutation::cycle(n, n);
    let mut bad = Vec::new();
    for d in 1..n {
        let tau = Permutation::from_cycles(n, &[&[1, 1 + d]]).unwrap();
        let full = closure(&[sigma.clone(), tau])?.is_symmetric();
        if full != (d.gcd(&n) == 1) {
            bad.push(d);
        }
    }
    Ok(bad)
}
