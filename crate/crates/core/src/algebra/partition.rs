use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-decreasing finite sequence of integers. The empty sequence is `0̄`.
///
/// Ordering is the canonical basis order: weight descending (so `0̄` and
/// zero-only partitions come first), then length, then parts lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a partition from arbitrary parts, sorting them.
    pub fn new(mut parts: Vec<i64>) -> Self {
        parts.sort_unstable();
        Self(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `|λ|`.
    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `λ(k)`, the number of parts equal to `k`.
    pub fn multiplicity(&self, k: i64) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn first(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|&p| p <= 0)
    }

    /// Positive partitions are non-empty with all parts ≥ 1.
    pub fn is_positive(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&p| p >= 1)
    }

    /// `λ{i}`: the first `i` parts, `0 ≤ i ≤ ℓ(λ)`.
    pub fn prefix(&self, i: usize) -> Result<Self> {
        self.check(i, 0)?;
        Ok(Self(self.0[..i].to_vec()))
    }

    /// `λ[j]`: everything after the first `j` parts, `0 ≤ j ≤ ℓ(λ)`.
    pub fn suffix(&self, j: usize) -> Result<Self> {
        self.check(j, 0)?;
        Ok(Self(self.0[j..].to_vec()))
    }

    /// `λ<i>`: `λ` with its `i`-th part (1-based) removed.
    pub fn remove(&self, i: usize) -> Result<Self> {
        self.check(i, 1)?;
        let mut parts = self.0.clone();
        parts.remove(i - 1);
        Ok(Self(parts))
    }

    fn check(&self, i: usize, lo: usize) -> Result<()> {
        if i < lo || i > self.0.len() {
            return Err(Error::SliceOutOfRange {
                index: i,
                len: self.0.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn push_front(&mut self, part: i64) {
        debug_assert!(self.0.first().is_none_or(|&f| part <= f));
        self.0.insert(0, part);
    }

    pub(crate) fn split_first(&self) -> Option<(i64, Self)> {
        self.0
            .split_first()
            .map(|(&first, rest)| (first, Self(rest.to_vec())))
    }
}

impl From<Vec<i64>> for Partition {
    fn from(parts: Vec<i64>) -> Self {
        Self::new(parts)
    }
}

impl<const N: usize> From<[i64; N]> for Partition {
    fn from(parts: [i64; N]) -> Self {
        Self::new(parts.to_vec())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .weight()
            .cmp(&self.weight())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0̄");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All non-positive partitions with `|λ| ≥ -max_depth` and `ℓ(λ) ≤ max_len`,
/// in canonical order.
pub fn enumerate_nonpositive(max_depth: u32, max_len: u32) -> Vec<Partition> {
    fn extend(
        parts: &mut Vec<i64>,
        min_part: i64,
        budget: i64,
        slots: u32,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition(parts.clone()));
        if slots == 0 {
            return;
        }
        // next part p ≥ min_part, p ≤ 0, and -p ≤ remaining budget
        let lo = min_part.max(-budget);
        for p in lo..=0 {
            parts.push(p);
            extend(parts, p, budget + p, slots - 1, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    extend(
        &mut Vec::new(),
        i64::MIN / 2,
        max_depth as i64,
        max_len,
        &mut out,
    );
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accessors() {
        let l = Partition::from([-2, -1, -1, 0]);
        assert_eq!(l.multiplicity(-1), 2);
        assert_eq!(l.len(), 4);
        assert_eq!(l.weight(), -4);
        let e = Partition::empty();
        assert_eq!((e.len(), e.weight()), (0, 0));
    }

    #[test]
    fn slices() {
        let l = Partition::from([-2, -1, 0]);
        assert_eq!(l.prefix(2).unwrap(), Partition::from([-2, -1]));
        assert_eq!(l.remove(2).unwrap(), Partition::from([-2, 0]));
        assert_eq!(l.suffix(3).unwrap(), Partition::empty());
        assert_eq!(l.prefix(0).unwrap(), Partition::empty());
        assert!(l.remove(0).is_err());
        assert!(l.remove(4).is_err());
        assert!(l.suffix(4).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got = enumerate_nonpositive(2, 2);
        let mut want: Vec<Partition> = vec![
            Partition::empty(),
            [0].into(),
            [-1].into(),
            [-2].into(),
            [0, 0].into(),
            [-1, 0].into(),
            [-1, -1].into(),
            [-2, 0].into(),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(enumerate_nonpositive(0, 0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_nonpositive(0, 2),
            vec![Partition::empty(), [0].into(), [0, 0].into()]
        );
    }

    #[test]
    fn canonical_order() {
        let got = enumerate_nonpositive(2, 2);
        let shown: Vec<String> = got.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            ["0̄", "(0)", "(0,0)", "(-1)", "(-1,0)", "(-2)", "(-2,0)", "(-1,-1)"]
        );
    }
}
