//! Permutation groups: enough machinery to recognize `S_n` from cycle types
//! and to check the recognition rules by brute force.

mod recognize;
pub mod verify;

pub use recognize::{
    certify_polynomial, frobenius_sample, good_primes, recognize_sn, Conclusion, Evidence, GroupCertificate, Rule,
    DEFAULT_CERTIFY_PRIMES,
};

use crate::error::{Error, Result};
use crate::poly::DegreePartition;
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Cycle type of a permutation, as a partition of its degree.
pub type CycleType = DegreePartition;

/// Full element enumeration is allowed up to this degree.
pub const ENUMERATION_CAP: usize = 9;
/// Order computation by stabilizer chain is allowed up to this degree.
pub const ORDER_CAP: usize = 16;

/// A bijection of `{0..n}`; displayed 1-based in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From 0-based images; `None` unless a bijection.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if (i as usize) >= images.len() || std::mem::replace(&mut seen[i as usize], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// From 1-based disjoint cycles, e.g. `&[&[1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut moved = vec![false; n];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n || moved[a - 1] {
                    return None;
                }
                moved[a - 1] = true;
                images[a - 1] = (b - 1) as u8;
            }
        }
        Permutation::from_images(images)
    }

    /// The c-cycle `(1 2 ... c)` in degree n.
    pub fn cycle(n: usize, c: usize) -> Self {
        let pts: Vec<usize> = (1..=c).collect();
        Permutation::from_cycles(n, &[&pts]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&j| self.images[j as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        DegreePartition::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Lexicographic rank among all permutations of the same degree.
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut r = 0u64;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            r = r * (n - i) as u64 + smaller as u64;
        }
        r
    }

    pub fn unrank(n: usize, mut r: u64) -> Permutation {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = (n - i) as u64;
            digits[i] = (r % base) as usize;
            r /= base;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        Permutation { images: digits.into_iter().map(|d| pool.remove(d)).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn common_degree(gens: &[Permutation]) -> Result<usize> {
    let n = gens.first().map_or(0, Permutation::degree);
    if gens.iter().any(|g| g.degree() != n) {
        return Err(Error::BadEvidence("generators of different degrees".into()));
    }
    Ok(n)
}

/// Orbit of `start` under the group generated by `gens`.
pub fn orbit(gens: &[Permutation], n: usize, start: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

pub fn is_transitive(gens: &[Permutation]) -> bool {
    let Some(n) = gens.first().map(Permutation::degree) else {
        return false;
    };
    n <= 1 || orbit(gens, n, 0).len() == n
}

struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// A group given by a stabilizer chain.
pub struct PermGroup {
    n: usize,
    gens: Vec<Permutation>,
    levels: Vec<Level>,
}

/// The group generated by `gens`.
pub fn closure(gens: &[Permutation]) -> Result<PermGroup> {
    let n = common_degree(gens)?;
    if n > ORDER_CAP {
        return Err(Error::DegreeCapExceeded { degree: n, cap: ORDER_CAP });
    }
    let mut g = PermGroup { n, gens: gens.to_vec(), levels: Vec::new() };
    for s in gens {
        if !s.is_identity() && !g.contains(s) {
            g.extend(0, s.clone());
        }
    }
    Ok(g)
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn is_symmetric(&self) -> bool {
        self.order() == (1..=self.n as u128).product::<u128>()
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(&self.gens)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.n && self.strip(g.clone(), 0).0.is_identity()
    }

    /// All elements; only for degree up to [`ENUMERATION_CAP`].
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        if self.n > ENUMERATION_CAP {
            return Err(Error::DegreeCapExceeded { degree: self.n, cap: ENUMERATION_CAP });
        }
        let mut out = vec![Permutation::identity(self.n)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &x in &level.orbit {
                let u = level.transversal[x].as_ref().unwrap();
                next.extend(out.iter().map(|h| u.compose(h)));
            }
            out = next;
        }
        Ok(out)
    }

    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (k, level) in self.levels.iter().enumerate().skip(from) {
            let x = g.apply(level.base);
            match &level.transversal[x] {
                Some(u) => g = u.inverse().compose(&g),
                None => return (g, k),
            }
        }
        (g, self.levels.len())
    }

    /// Add `g`, which fixes the first `k` base points, to level `k`.
    fn extend(&mut self, k: usize, g: Permutation) {
        if k == self.levels.len() {
            let base = (0..self.n).find(|&i| g.apply(i) != i).unwrap();
            let mut transversal = vec![None; self.n];
            transversal[base] = Some(Permutation::identity(self.n));
            self.levels.push(Level { base, gens: Vec::new(), transversal, orbit: vec![base] });
        }
        let level = &mut self.levels[k];
        level.gens.push(g);
        let mut queue: VecDeque<usize> = level.orbit.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for s in &level.gens {
                let y = s.apply(x);
                if level.transversal[y].is_none() {
                    level.transversal[y] = Some(s.compose(level.transversal[x].as_ref().unwrap()));
                    level.orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        let orbit = level.orbit.clone();
        let gens = level.gens.clone();
        for &x in &orbit {
            for s in &gens {
                let (ux, usx) = {
                    let l = &self.levels[k];
                    (
                        l.transversal[x].clone().unwrap(),
                        l.transversal[s.apply(x)].clone().unwrap(),
                    )
                };
                let schreier = usx.inverse().compose(&s.compose(&ux));
                let (r, _) = self.strip(schreier, k + 1);
                if !r.is_identity() {
                    self.extend(k + 1, r);
                }
            }
        }
    }
}

/// Element set of the generated group by breadth-first search.
pub fn enumerate(gens: &[Permutation]) -> Result<HashSet<Permutation>> {
    let n = common_degree(gens)?;
    if n > ENUMERATION_CAP {
        return Err(Error::DegreeCapExceeded { degree: n, cap: ENUMERATION_CAP });
    }
    let id = Permutation::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn closure_examples() {
        let s3 = closure(&[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(closure(&[perm(4, &[&[1, 2], &[3, 4]])]).unwrap().order(), 2);
        let s5 = closure(&[perm(5, &[&[1, 2, 3, 4, 5]]), perm(5, &[&[1, 2]])]).unwrap();
        assert_eq!(s5.order(), 120);
        assert_eq!(s5.elements().unwrap().len(), 120);
        assert_eq!(enumerate(s5.generators()).unwrap().len(), 120);
    }

    #[test]
    fn stabilizer_chain_matches_enumeration() {
        let d4 = closure(&[perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 3]])]).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(d4.is_transitive());
        let m = enumerate(d4.generators()).unwrap();
        for x in 0..24 {
            let g = Permutation::unrank(4, x);
            assert_eq!(d4.contains(&g), m.contains(&g));
        }
        // AGL(1,7): x -> x + 1 and x -> 3x on 0..6
        let a = perm(7, &[&[1, 2, 3, 4, 5, 6, 7]]);
        let b = perm(7, &[&[2, 4, 3, 7, 5, 6]]);
        let g = closure(&[a, b]).unwrap();
        assert_eq!(g.order(), 42);
        assert_eq!(g.order() as usize, enumerate(g.generators()).unwrap().len());
    }

    #[test]
    fn large_degree_order() {
        let s16 = closure(&[Permutation::cycle(16, 16), Permutation::cycle(16, 2)]).unwrap();
        assert!(s16.is_symmetric());
        assert!(matches!(s16.elements(), Err(Error::DegreeCapExceeded { .. })));
        assert!(matches!(
            closure(&[Permutation::cycle(17, 2)]),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&[perm(3, &[&[1, 2, 3]])]));
        assert!(!is_transitive(&[perm(3, &[&[1, 2]])]));
        assert!(!is_transitive(&[perm(4, &[&[1, 2]]), perm(4, &[&[3, 4]])]));
    }

    #[test]
    fn rank_round_trip_and_display() {
        for r in 0..120 {
            assert_eq!(Permutation::unrank(5, r).rank(), r);
        }
        assert_eq!(perm(5, &[&[1, 3], &[2, 4, 5]]).to_string(), "(1 3)(2 4 5)");
        assert_eq!(perm(5, &[&[1, 3], &[2, 4, 5]]).cycle_type().parts(), &[3, 2]);
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_none());
    }
}
