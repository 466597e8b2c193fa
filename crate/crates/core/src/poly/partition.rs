use serde::{Deserialize, Serialize};
use std::fmt;

/// Multiset of positive integers, kept sorted descending.
///
/// Produced as the degrees of the irreducible factors of a polynomial mod a
/// prime, and reused as the cycle type of a permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreePartition {
    parts: Vec<usize>,
}

impl DegreePartition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        DegreePartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Pad with 1s up to `n`.
    pub fn padded(&self, n: usize) -> Self {
        let mut parts = self.parts.clone();
        let t = self.total();
        parts.extend(std::iter::repeat(1).take(n.saturating_sub(t)));
        Self::new(parts)
    }

    /// Parts other than 1.
    pub fn nontrivial(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().copied().filter(|&p| p > 1)
    }
}

impl fmt::Display for DegreePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for DegreePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<usize>> for DegreePartition {
    fn from(v: Vec<usize>) -> Self {
        Self::new(v)
    }
}
