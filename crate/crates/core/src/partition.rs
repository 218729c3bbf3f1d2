//! Integer partitions in normalized (weakly decreasing) form.
//!
//! A [`Partition`] caches its block form: the run-length encoding
//! `(s_1^m_1, ..., s_t^m_t)` with `s_1 > ... > s_t > 0`. Blocks are indexed
//! from 1 in every public accessor that takes an index.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One run of equal parts: `multiplicity` copies of `size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub size: usize,
    pub multiplicity: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    blocks: Vec<Block>,
    weight: usize,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// `parts` must already be weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_some_and(|&p| p > 0));
        let mut blocks: Vec<Block> = Vec::new();
        for &part in &parts {
            match blocks.last_mut() {
                Some(block) if block.size == part => block.multiplicity += 1,
                _ => blocks.push(Block {
                    size: part,
                    multiplicity: 1,
                }),
            }
        }
        let weight = parts.iter().sum();
        Self {
            parts,
            blocks,
            weight,
        }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWeight(0));
        }
        Self::new(vec![1; n])
    }

    /// The staircase `(t, t-1, ..., 1)`.
    pub fn staircase(t: usize) -> Result<Self> {
        Self::new((1..=t).rev().collect::<Vec<_>>())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// The `n` this is a partition of.
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts (rows of the Ferrers diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Support size: the number of distinct part sizes.
    pub fn support_size(&self) -> usize {
        self.blocks.len()
    }

    /// Distinct part sizes `s_1 > ... > s_t`.
    pub fn support(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.size).collect()
    }

    /// `s_k` for `1 <= k <= t + 1`, with `s_{t+1} = 0`.
    pub fn block_size(&self, k: usize) -> usize {
        assert!(
            k >= 1 && k <= self.blocks.len() + 1,
            "block index {k} out of range"
        );
        self.blocks.get(k - 1).map_or(0, |b| b.size)
    }

    /// `m_k` for `1 <= k <= t`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.blocks[k - 1].multiplicity
    }

    /// Support gaps `g_i = s_i - s_{i+1}`, taking `s_{t+1} = 0`.
    pub fn gaps(&self) -> Vec<usize> {
        let sizes = self.support();
        sizes
            .iter()
            .enumerate()
            .map(|(k, &s)| s - sizes.get(k + 1).copied().unwrap_or(0))
            .collect()
    }

    /// The transpose: `conj[k-1]` is the number of parts that are `>= k`.
    pub fn conjugate(&self) -> Partition {
        Partition::from_sorted(self.conjugate_parts())
    }

    pub(crate) fn conjugate_parts(&self) -> Vec<usize> {
        let width = self.parts[0];
        let mut columns = vec![0; width];
        for &part in &self.parts {
            for column in &mut columns[..part] {
                *column += 1;
            }
        }
        columns
    }

    /// Ferrers diagram drawn with `#`, one row per part.
    pub fn diagram(&self) -> String {
        self.parts
            .iter()
            .map(|&p| "#".repeat(p))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                input: s.to_owned(),
                reason: format!("{token:?} is not an integer"),
            })?;
            if value <= 0 {
                return Err(Error::NonPositivePart(value));
            }
            parts.push(value as usize);
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse-lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidWeight(0));
    }
    Ok(PartitionsOf::new(n).collect())
}

/// Iterator behind [`enumerate_partitions`].
#[derive(Debug, Clone)]
pub struct PartitionsOf {
    current: Option<Vec<usize>>,
}

impl PartitionsOf {
    pub fn new(n: usize) -> Self {
        Self {
            current: (n > 0).then(|| vec![n]),
        }
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let result = Partition::from_sorted(parts.clone());

        // Successor: lower the rightmost part above 1, then refill the tail
        // greedily with parts no larger than it.
        if let Some(k) = parts.iter().rposition(|&p| p > 1) {
            let mut next = parts[..=k].to_vec();
            next[k] -= 1;
            let cap = next[k];
            let mut remaining = parts.len() - k;
            while remaining > 0 {
                let part = remaining.min(cap);
                next.push(part);
                remaining -= part;
            }
            self.current = Some(next);
        }
        Some(result)
    }
}

/// Number of partitions of `n` by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u128 {
    let mut counts = vec![0u128; n + 1];
    counts[0] = 1;
    for m in 1..=n {
        let mut total: i128 = 0;
        for k in 1.. {
            let first = k * (3 * k - 1) / 2;
            if first > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * counts[m - first] as i128;
            let second = k * (3 * k + 1) / 2;
            if second <= m {
                total += sign * counts[m - second] as i128;
            }
        }
        counts[m] = total as u128;
    }
    counts[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalizes_on_construction() {
        let q = p(&[2, 4, 2, 4]);
        assert_eq!(q.parts(), &[4, 4, 2, 2]);
        assert_eq!(
            q.blocks(),
            &[
                Block {
                    size: 4,
                    multiplicity: 2
                },
                Block {
                    size: 2,
                    multiplicity: 2
                }
            ]
        );
        assert_eq!(q.weight(), 12);

        assert_eq!(
            p(&[5]).blocks(),
            &[Block {
                size: 5,
                multiplicity: 1
            }]
        );
        let ones = p(&[1, 1, 1]);
        assert_eq!(ones.parts(), &[1, 1, 1]);
        assert_eq!(
            ones.blocks(),
            &[Block {
                size: 1,
                multiplicity: 3
            }]
        );
        assert_eq!(ones.weight(), 3);
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert_eq!(
            Partition::new(Vec::<usize>::new()),
            Err(Error::EmptyPartition)
        );
        assert_eq!(Partition::new(vec![3, 0]), Err(Error::NonPositivePart(0)));
    }

    #[test]
    fn parses_text_form() {
        assert_eq!("2,4,2,4".parse::<Partition>().unwrap(), p(&[4, 4, 2, 2]));
        assert_eq!(" 3, 1 ".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("0,3".parse::<Partition>(), Err(Error::NonPositivePart(0)));
        assert_eq!("-2,3".parse::<Partition>(), Err(Error::NonPositivePart(-2)));
        assert!(matches!(
            "3,x".parse::<Partition>(),
            Err(Error::Parse { .. })
        ));
        assert_eq!("".parse::<Partition>(), Err(Error::EmptyPartition));
    }

    #[test]
    fn json_form_is_descending_array() {
        let q = p(&[2, 4, 2, 4]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[4,4,2,2]");
        let back: Partition = serde_json::from_str("[2,2,4,4]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[]").is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 4, 2, 2]).conjugate(), p(&[4, 4, 2, 2]));
        assert_eq!(p(&[6]).conjugate(), Partition::column(6).unwrap());
        assert_eq!(
            Partition::staircase(4).unwrap().conjugate(),
            Partition::staircase(4).unwrap()
        );
    }

    #[test]
    fn support_gaps() {
        assert_eq!(p(&[4, 4, 2, 2]).gaps(), vec![2, 2]);
        assert_eq!(Partition::column(5).unwrap().gaps(), vec![1]);
        assert_eq!(p(&[3, 2, 1]).gaps(), vec![1, 1, 1]);
        assert_eq!(p(&[7, 3, 3]).gaps(), vec![4, 3]);
    }

    #[test]
    fn enumerates_in_reverse_lex_order() {
        let four: Vec<Vec<usize>> = enumerate_partitions(4)
            .unwrap()
            .into_iter()
            .map(Vec::from)
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        assert_eq!(enumerate_partitions(7).unwrap().len(), 15);
        assert_eq!(enumerate_partitions(0), Err(Error::InvalidWeight(0)));
    }

    #[test]
    fn pentagonal_counts() {
        let known = [1u128, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &count) in known.iter().enumerate() {
            assert_eq!(partition_count(n), count, "p({n})");
        }
        assert_eq!(partition_count(30), 5604);
    }
}
