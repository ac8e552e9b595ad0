//! Integer partitions and the arithmetic this crate needs on them:
//! transpose, dominance order, parity collapses, and enumeration.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_csv())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_csv())
    }
}

impl Partition {
    /// Builds a partition, sorting and dropping zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The part at 1-based index `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.0.iter().filter(|&&p| p == v).count()
    }

    /// Conjugate partition (column lengths).
    pub fn transpose(&self) -> Partition {
        let mut cols = Vec::new();
        if let Some(&first) = self.0.first() {
            for c in 1..=first {
                cols.push(self.0.iter().filter(|&&p| p >= c).count() as u32);
            }
        }
        Partition(cols)
    }

    /// Dominance order: every partial sum of `self` is at most the
    /// corresponding partial sum of `other`. Both must have equal totals.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.total(), other.total());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 1..=self.0.len().max(other.0.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Subtracts 1 from the smallest part, dropping it if it reaches zero.
    pub fn decrement_smallest(&self) -> Partition {
        let mut parts = self.0.clone();
        if let Some(last) = parts.last_mut() {
            *last -= 1;
        }
        Partition::new(parts)
    }

    /// True when every part with the given parity has even multiplicity.
    /// `parity = 0` constrains even parts (orthogonal types), `parity = 1`
    /// constrains odd parts (symplectic type).
    pub fn parity_valid(&self, parity: u32) -> bool {
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == v {
                j += 1;
            }
            if v % 2 == parity && (j - i) % 2 == 1 {
                return false;
            }
            i = j;
        }
        true
    }

    /// Greedy parity collapse: repeatedly move one unit down from the last
    /// copy of the largest violating part until the parity condition holds.
    /// Returns the largest dominated partition satisfying `parity_valid`.
    ///
    /// The total must admit a valid partition at all: symplectic collapse
    /// (`parity = 1`) requires an even total.
    pub fn collapse(&self, parity: u32) -> Partition {
        assert!(
            parity == 0 || self.total() % 2 == 0,
            "symplectic collapse needs an even total, got {}",
            self.total()
        );
        let mut parts = self.0.clone();
        loop {
            let violating = {
                let p = Partition(parts.clone());
                let mut found = None;
                for &v in p.parts() {
                    if v % 2 == parity && p.multiplicity(v) % 2 == 1 {
                        found = Some(v);
                        break;
                    }
                }
                found
            };
            let Some(v) = violating else { break };
            let i = parts.iter().rposition(|&p| p == v).unwrap();
            parts[i] -= 1;
            // Hand the unit to the first later slot that stays non-increasing.
            let mut placed = false;
            for j in i + 1..parts.len() {
                if parts[j] + 1 <= parts[j - 1] && (j == i + 1 || parts[j] < parts[j - 1]) {
                    parts[j] += 1;
                    placed = true;
                    break;
                }
            }
            if !placed {
                parts.push(1);
            }
            parts.retain(|&p| p > 0);
            parts.sort_unstable_by(|a, b| b.cmp(a));
        }
        Partition(parts)
    }

    /// Brute-force collapse: the dominance-greatest partition of the same
    /// total satisfying `parity_valid`. Used as an independent check.
    pub fn collapse_by_search(&self, parity: u32) -> Option<Partition> {
        let candidates: Vec<Partition> = partitions_of(self.total())
            .into_iter()
            .filter(|p| p.parity_valid(parity) && p.dominated_by(self))
            .collect();
        let mut best: Option<Partition> = None;
        for c in candidates.iter() {
            if candidates.iter().all(|d| d.dominated_by(c)) {
                if best.is_some() {
                    return None; // not unique
                }
                best = Some(c.clone());
            }
        }
        best
    }

    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_csv(s: &str) -> Option<Partition> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let v: u32 = tok.parse().ok()?;
            if v == 0 {
                return None;
            }
            parts.push(v);
        }
        let sorted = {
            let mut c = parts.clone();
            c.sort_unstable_by(|a, b| b.cmp(a));
            c
        };
        if sorted != parts {
            return None; // requires decreasing order on the wire
        }
        Some(Partition(parts))
    }
}

/// All partitions of `n`, largest-first lexicographic.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let hi = remaining.min(max);
        for v in (1..=hi).rev() {
            current.push(v);
            rec(remaining - v, v, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(
            Partition::new(vec![6, 3]).transpose(),
            Partition::new(vec![2, 2, 2, 1, 1, 1])
        );
        assert_eq!(Partition::new(vec![5]).transpose(), Partition::new(vec![1; 5]));
        assert_eq!(
            Partition::new(vec![2, 2, 2, 1]).transpose(),
            Partition::new(vec![4, 3])
        );
    }

    #[test]
    fn decrement_examples() {
        assert_eq!(
            Partition::new(vec![2, 2, 2, 1, 1, 1]).decrement_smallest(),
            Partition::new(vec![2, 2, 2, 1, 1])
        );
        assert_eq!(Partition::new(vec![1]).decrement_smallest(), Partition::empty());
        assert_eq!(
            Partition::new(vec![3, 3]).decrement_smallest(),
            Partition::new(vec![3, 2])
        );
    }

    #[test]
    fn collapse_examples() {
        // Already symplectic-valid.
        let p = Partition::new(vec![2, 2, 2, 1, 1]);
        assert_eq!(p.collapse(1), p);
        // Orthogonal collapse moves a unit down.
        assert_eq!(
            Partition::new(vec![4, 3]).collapse(0),
            Partition::new(vec![3, 3, 1])
        );
        assert_eq!(
            Partition::new(vec![2, 2, 2]).collapse(0),
            Partition::new(vec![2, 2, 1, 1])
        );
        assert_eq!(Partition::new(vec![2]).collapse(0), Partition::new(vec![1, 1]));
    }

    #[test]
    fn csv_round_trip() {
        let p = Partition::new(vec![2, 2, 2, 1, 1]);
        assert_eq!(p.to_csv(), "2,2,2,1,1");
        assert_eq!(Partition::from_csv("2,2,2,1,1"), Some(p));
        assert_eq!(Partition::from_csv("1,2"), None);
    }

    proptest! {
        #[test]
        fn transpose_is_involution(parts in proptest::collection::vec(1u32..8, 0..8)) {
            let p = Partition::new(parts);
            prop_assume!(p.total() <= 24);
            prop_assert_eq!(p.transpose().transpose(), p);
        }

        #[test]
        fn collapse_is_idempotent_and_matches_search(
            parts in proptest::collection::vec(1u32..6, 0..7),
            parity in 0u32..2,
        ) {
            let p = Partition::new(parts);
            prop_assume!(p.total() <= 14);
            prop_assume!(parity == 0 || p.total() % 2 == 0);
            let c = p.collapse(parity);
            prop_assert!(c.parity_valid(parity));
            prop_assert_eq!(c.collapse(parity), c.clone());
            prop_assert!(c.dominated_by(&p));
            // The greedy result is the dominance maximum.
            let best = p.collapse_by_search(parity);
            prop_assert_eq!(best, Some(c));
        }
    }
}
