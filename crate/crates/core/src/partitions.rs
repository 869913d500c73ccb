//! Integer partitions, the dominance order, and the constrained partition
//! families that index elliptic classes and unipotent classes.
//!
//! A [`Partition`] is stored as a weakly decreasing list of positive parts.
//! Trailing zeros are stripped on construction, so `[3,1,0]` and `[3,1]`
//! are the same value. Comparisons that need more parts than are stored
//! read missing parts as zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which [`PartitionFamily::members`] will enumerate.
pub const DEFAULT_ENUMERATION_BOUND: u32 = 60;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; anything else out of order is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part before a positive part in {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given multiset of parts into a partition.
    pub fn from_multiset(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (nonzero) parts, the `ℓ` of the partition.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` counted from 1; zero past the end (and at `i = 0`).
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.parts.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Sum of the first `k` parts.
    pub fn prefix_sum(&self, k: usize) -> u32 {
        self.parts.iter().take(k).sum()
    }

    /// Conjugate partition: `transpose()[j-1]` is the number of parts `>= j`.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at most the matching
    /// prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.total() != other.total() {
            return Err(Error::MismatchedTotal {
                left: self.total(),
                right: other.total(),
            });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn scale(&self, c: u32) -> Partition {
        assert!(c > 0, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|p| p * c).collect(),
        }
    }

    pub fn append_one(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition { parts }
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// `ψ_α`, the `{-1, 0, +1}` correction vector (one entry per part).
    pub fn psi(&self) -> Result<PsiVector> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let values = (1..=self.len())
            .map(|i| {
                if i == 1 || (i % 2 == 1 && self.part(i - 1) > self.part(i)) {
                    1
                } else if i % 2 == 0 && self.part(i) > self.part(i + 1) {
                    -1
                } else {
                    0
                }
            })
            .collect();
        Ok(PsiVector { values })
    }

    /// `α + ψ_α` for a partition with only even parts; the result is a
    /// partition of `n + κ_ℓ` where `κ_ℓ` is the parity of the length.
    pub fn add_psi(&self) -> Result<Partition> {
        if !self.all_even() {
            return Err(Error::OddPart(self.clone()));
        }
        if self.is_empty() {
            return Ok(Partition::empty());
        }
        let psi = self.psi()?;
        let parts = self
            .parts
            .iter()
            .zip(psi.values())
            .map(|(&p, &d)| (p as i64 + d as i64) as u32)
            .collect::<Vec<_>>();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[6,6,4,2]`, `6,6,4,2`, `6+6+4+2`, and `[]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split([',', '+'])
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on parts. This is a total order used for sorting and
/// map keys, not the dominance order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts.cmp(&other.parts)
    }
}

/// Values of `ψ_α` at positions `1..=ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiVector {
    values: Vec<i8>,
}

impl PsiVector {
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Value at position `i` (1-based).
    pub fn at(&self, i: usize) -> i8 {
        self.values[i - 1]
    }

    pub fn prefix_sum(&self, k: usize) -> i32 {
        self.values.iter().take(k).map(|&v| v as i32).sum()
    }

    /// The first of the identities below that fails, numbered 4 to 7, or
    /// `None`. With `ℓ` the number of parts and `κ_ℓ` its parity:
    ///
    /// 4. `ψ(1) = 1`, and `ψ(ℓ) = -1` when `ℓ` is even;
    /// 5. `Σ_{i≤k} ψ(i) = 1` for odd `k ≤ ℓ`;
    /// 6. `Σ_{i≤k} ψ(i) = 1 + ψ(k)` for even `k ≤ ℓ`;
    /// 7. `Σ_{i≤ℓ} ψ(i) = κ_ℓ`.
    pub fn first_violation(&self) -> Option<u8> {
        let l = self.values.len();
        if self.at(1) != 1 || (l.is_multiple_of(2) && self.at(l) != -1) {
            return Some(4);
        }
        for k in (1..=l).step_by(2) {
            if self.prefix_sum(k) != 1 {
                return Some(5);
            }
        }
        for k in (2..=l).step_by(2) {
            if self.prefix_sum(k) != 1 + self.at(k) as i32 {
                return Some(6);
            }
        }
        if self.prefix_sum(l) != (l % 2) as i32 {
            return Some(7);
        }
        None
    }
}

/// All partitions of `n`, in reverse-lexicographic order (`[n]` first).
pub fn partitions_of(n: u32) -> PartitionIter {
    PartitionIter {
        current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) },
    }
}

pub struct PartitionIter {
    current: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        // Successor in reverse-lex order: find the last part > 1, decrease it,
        // and refill the remainder greedily.
        let mut next = cur;
        let mut ones = 0u32;
        while next.last() == Some(&1) {
            next.pop();
            ones += 1;
        }
        if let Some(last) = next.pop() {
            let k = last - 1;
            let mut rem = ones + 1 + k;
            while rem > 0 {
                let take = rem.min(k);
                next.push(take);
                rem -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Sign `κ` in `P_κ(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kappa {
    Plus,
    Minus,
}

impl Kappa {
    fn sign(self) -> i32 {
        match self {
            Kappa::Plus => 1,
            Kappa::Minus => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionFamily {
    All(u32),
    /// `m_α(i)` is even whenever `(-1)^i = κ`.
    Kappa(u32, Kappa),
    EvenLength(u32),
    OddLength(u32),
    OddParts(u32),
}

impl PartitionFamily {
    pub fn n(&self) -> u32 {
        match *self {
            PartitionFamily::All(n)
            | PartitionFamily::Kappa(n, _)
            | PartitionFamily::EvenLength(n)
            | PartitionFamily::OddLength(n)
            | PartitionFamily::OddParts(n) => n,
        }
    }

    pub fn contains(&self, a: &Partition) -> bool {
        if a.total() != self.n() {
            return false;
        }
        match *self {
            PartitionFamily::All(_) => true,
            PartitionFamily::Kappa(_, kappa) => a.parts().iter().all(|&i| {
                let parity = if i % 2 == 0 { 1 } else { -1 };
                parity != kappa.sign() || a.multiplicity(i).is_multiple_of(2)
            }),
            PartitionFamily::EvenLength(_) => a.len().is_multiple_of(2),
            PartitionFamily::OddLength(_) => a.len() % 2 == 1,
            PartitionFamily::OddParts(_) => a.all_odd(),
        }
    }

    pub fn members(&self) -> Result<Vec<Partition>> {
        self.members_with_bound(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn members_with_bound(&self, bound: u32) -> Result<Vec<Partition>> {
        let n = self.n();
        if n > bound {
            return Err(Error::BoundExceeded { n, bound });
        }
        Ok(partitions_of(n).filter(|a| self.contains(a)).collect())
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionFamily::All(n) => write!(f, "P({n})"),
            PartitionFamily::Kappa(n, Kappa::Plus) => write!(f, "P_1({n})"),
            PartitionFamily::Kappa(n, Kappa::Minus) => write!(f, "P_-1({n})"),
            PartitionFamily::EvenLength(n) => write!(f, "P({n})_0"),
            PartitionFamily::OddLength(n) => write!(f, "P({n})_1"),
            PartitionFamily::OddParts(n) => write!(f, "P^odd({n})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(p("[2,2]").dominance_leq(&p("[3,1]")).unwrap());
        assert!(!p("[3,1]").dominance_leq(&p("[2,2]")).unwrap());
        assert!(p("[1,1,1,1]").dominance_leq(&p("[4]")).unwrap());
        assert!(p("[4]").dominance_leq(&p("[4]")).unwrap());
        assert_eq!(
            p("[4]").dominance_leq(&p("[2,1]")),
            Err(Error::MismatchedTotal { left: 4, right: 3 })
        );
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("[6,6,4,2]").transpose(), p("[4,4,3,3,2,2]"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("[5]").transpose(), p("[1,1,1,1,1]"));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p("[4,4,2]").multiplicity(4), 2);
        assert_eq!(p("[4,4,2]").multiplicity(3), 0);
        assert_eq!(p("[6,6,4,2]").multiplicity(6), 2);
        assert_eq!(p("[6,6,4,2]").multiplicity(0), 0);
    }

    #[test]
    fn family_examples() {
        let all4 = PartitionFamily::All(4).members().unwrap();
        let expected: Vec<_> = ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(all4, expected);
        assert_eq!(
            PartitionFamily::OddParts(4).members().unwrap(),
            vec![p("[3,1]"), p("[1,1,1,1]")]
        );
        // odd rows must have even multiplicity: [3,1] fails.
        assert_eq!(
            PartitionFamily::Kappa(4, Kappa::Minus).members().unwrap(),
            vec![p("[4]"), p("[2,2]"), p("[2,1,1]"), p("[1,1,1,1]")]
        );
        assert!(matches!(
            PartitionFamily::All(100).members(),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(p("[6,6,4,2]").psi().unwrap().values(), &[1, -1, 1, -1]);
        assert_eq!(p("[2,2]").psi().unwrap().values(), &[1, -1]);
        assert_eq!(p("[2,2,2,2]").psi().unwrap().values(), &[1, 0, 0, -1]);
        assert_eq!(Partition::empty().psi(), Err(Error::EmptyPartition));
    }

    #[test]
    fn psi_identities_exhaustive() {
        for n in 1..=30 {
            for a in partitions_of(n) {
                assert_eq!(a.psi().unwrap().first_violation(), None, "{a}");
            }
        }
        let bogus = PsiVector { values: vec![1, 0] };
        assert_eq!(bogus.first_violation(), Some(4));
        let bogus = PsiVector { values: vec![1, 0, 1] };
        assert_eq!(bogus.first_violation(), Some(5));
    }

    #[test]
    fn add_psi_examples() {
        assert_eq!(p("[6,6,4,2]").add_psi().unwrap(), p("[7,5,5,1]"));
        assert_eq!(p("[4,4]").add_psi().unwrap(), p("[5,3]"));
        assert_eq!(
            p("[2,2,2,2,2,2]").add_psi().unwrap(),
            p("[3,2,2,2,2,1]")
        );
        assert!(matches!(p("[3,1]").add_psi(), Err(Error::OddPart(_))));
    }

    #[test]
    fn scale_and_append() {
        assert_eq!(p("[2,1]").scale(2), p("[4,2]"));
        assert_eq!(p("[4,2]").append_one(), p("[4,2,1]"));
        assert_eq!(p("[1,1]").scale(2), p("[2,2]"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("6+6+4+2"), p("[6,6,4,2]"));
        assert_eq!(p("3,1,0"), p("[3,1]"));
        assert!("[1,3]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        let json = serde_json::to_string(&p("[6,6,4,2]")).unwrap();
        assert_eq!(json, "[6,6,4,2]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn dominance_is_partial_order_and_reversed_by_transpose() {
        for n in 0..=12 {
            let ps: Vec<_> = partitions_of(n).collect();
            for a in &ps {
                assert!(a.dominance_leq(a).unwrap());
                for b in &ps {
                    let ab = a.dominance_leq(b).unwrap();
                    let ba = b.dominance_leq(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    assert_eq!(ab, b.transpose().dominance_leq(&a.transpose()).unwrap());
                    if ab {
                        for c in &ps {
                            if b.dominance_leq(c).unwrap() {
                                assert!(a.dominance_leq(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    fn arb_partition(max_total: u32) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1..=max_total, 0..8)
            .prop_map(Partition::from_multiset)
    }

    fn same_total_pair(max_n: u32) -> impl Strategy<Value = (Partition, Partition)> {
        (0..=max_n).prop_flat_map(|n| {
            let ps: Vec<Partition> = partitions_of(n).collect();
            (
                proptest::sample::select(ps.clone()),
                proptest::sample::select(ps),
            )
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(a in arb_partition(9)) {
            prop_assert_eq!(a.transpose().transpose(), a.clone());
            prop_assert_eq!(a.transpose().largest() as usize, a.len());
        }

        #[test]
        fn scaling_preserves_dominance((a, b) in same_total_pair(14)) {
            let d = a.dominance_leq(&b).unwrap();
            prop_assert_eq!(d, a.scale(2).dominance_leq(&b.scale(2)).unwrap());
            prop_assert_eq!(d, a.append_one().dominance_leq(&b.append_one()).unwrap());
        }

        #[test]
        fn add_psi_prefix_sums(a in arb_partition(10)) {
            let a = a.scale(2);
            prop_assume!(!a.is_empty());
            let psi = a.psi().unwrap();
            let b = a.add_psi().unwrap();
            prop_assert_eq!(b.total() as usize, a.total() as usize + a.len() % 2);
            for k in 1..=a.len() {
                let expected = a.prefix_sum(k) as i32 + 1
                    + if k % 2 == 0 { psi.at(k) as i32 } else { 0 };
                prop_assert_eq!(b.prefix_sum(k) as i32, expected);
            }
        }
    }
}
