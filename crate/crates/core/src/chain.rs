//! Chains, chain sets and the involution read off from them.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::WeightVec;

/// `{top, top−2, …, top−2(len−1)}`. Stored by its endpoints so the step-2
/// shape cannot be broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    top: i64,
    len: usize,
}

impl Chain {
    pub fn new(top: i64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyChain);
        }
        Ok(Chain { top, len })
    }

    /// Parses an explicit entry list, which must descend in steps of 2.
    pub fn from_entries(entries: &[i64]) -> Result<Self> {
        let top = *entries.first().ok_or(Error::EmptyChain)?;
        if entries.windows(2).any(|w| w[0] - w[1] != 2) {
            return Err(Error::NotAChain(entries.to_vec()));
        }
        Ok(Chain {
            top,
            len: entries.len(),
        })
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn bottom(&self) -> i64 {
        self.top - 2 * (self.len as i64 - 1)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Average entry `k = top − (len − 1)`; always an integer.
    pub fn avg(&self) -> i64 {
        self.top - (self.len as i64 - 1)
    }

    pub fn entries(&self) -> Vec<i64> {
        (0..self.len as i64).map(|i| self.top - 2 * i).collect()
    }

    pub fn contains(&self, x: i64) -> bool {
        x <= self.top && x >= self.bottom() && (self.top - x) % 2 == 0
    }

    pub fn intersects(&self, other: &Chain) -> bool {
        self.entries().into_iter().any(|x| other.contains(x))
    }

    /// Same chain with `top + 2` prepended.
    pub fn extended_up(&self) -> Chain {
        Chain {
            top: self.top + 2,
            len: self.len + 1,
        }
    }

    /// Linked iff `A > B > a` or `B > A > b` for `{A…a}`, `{B…b}`.
    pub fn is_linked(&self, other: &Chain) -> Result<bool> {
        if self.intersects(other) {
            return Err(Error::Overlap(
                self.entries()
                    .into_iter()
                    .find(|&x| other.contains(x))
                    .unwrap_or(self.top),
            ));
        }
        Ok(self.spans_link(other))
    }

    fn spans_link(&self, other: &Chain) -> bool {
        let (a_top, a_bot) = (self.top, self.bottom());
        let (b_top, b_bot) = (other.top, other.bottom());
        (a_top > b_top && b_top > a_bot) || (b_top > a_top && a_top > b_bot)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered union of pairwise disjoint chains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ChainSetJson", into = "ChainSetJson")]
pub struct ChainSet {
    chains: Vec<Chain>,
}

#[derive(Serialize, Deserialize)]
struct ChainSetJson {
    chains: Vec<Vec<i64>>,
}

impl TryFrom<ChainSetJson> for ChainSet {
    type Error = Error;

    fn try_from(raw: ChainSetJson) -> Result<Self> {
        let chains = raw
            .chains
            .iter()
            .map(|c| Chain::from_entries(c))
            .collect::<Result<Vec<_>>>()?;
        ChainSet::new(chains)
    }
}

impl From<ChainSet> for ChainSetJson {
    fn from(cs: ChainSet) -> Self {
        ChainSetJson {
            chains: cs.chains.iter().map(Chain::entries).collect(),
        }
    }
}

/// Serializes a [`ChainSet`] as a bare list of entry lists.
pub mod as_lists {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{ChainSet, ChainSetJson};

    pub fn serialize<S: Serializer>(cs: &ChainSet, ser: S) -> Result<S::Ok, S::Error> {
        ChainSetJson::from(cs.clone()).chains.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<ChainSet, D::Error> {
        let chains = Vec::<Vec<i64>>::deserialize(de)?;
        ChainSet::try_from(ChainSetJson { chains }).map_err(serde::de::Error::custom)
    }
}

impl ChainSet {
    pub fn new(chains: Vec<Chain>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &chains {
            for e in c.entries() {
                if !seen.insert(e) {
                    return Err(Error::Overlap(e));
                }
            }
        }
        Ok(ChainSet { chains })
    }

    pub fn from_entry_lists(lists: &[&[i64]]) -> Result<Self> {
        let chains = lists
            .iter()
            .map(|l| Chain::from_entries(l))
            .collect::<Result<Vec<_>>>()?;
        ChainSet::new(chains)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: ChainSetJson = serde_json::from_str(s)?;
        ChainSet::try_from(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chain set serializes")
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    /// Total number of entries.
    pub fn n(&self) -> usize {
        self.chains.iter().map(Chain::len).sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.chains.iter().map(Chain::bottom).min()
    }

    pub fn max_entry(&self) -> Option<i64> {
        self.chains.iter().map(Chain::top).max()
    }

    /// The linkage graph on chains is connected. A single chain counts as
    /// interlaced.
    pub fn is_interlaced(&self) -> bool {
        let m = self.chains.len();
        if m == 0 {
            return false;
        }
        let mut reached = vec![false; m];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(i) = stack.pop() {
            for (j, c) in self.chains.iter().enumerate() {
                if !reached[j] && self.chains[i].spans_link(c) {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    /// Reorders so that earlier chains have larger average, ties broken by
    /// shorter length first.
    pub fn canonical_order(&self) -> ChainSet {
        let mut chains = self.chains.clone();
        chains.sort_by(|x, y| y.avg().cmp(&x.avg()).then(x.len().cmp(&y.len())));
        debug_assert!(chains
            .windows(2)
            .all(|w| (w[0].avg(), w[0].len()) != (w[1].avg(), w[1].len())));
        ChainSet { chains }
    }

    /// Chains sorted by descending top; equal sets have equal forms.
    pub fn normalized(&self) -> ChainSet {
        let mut chains = self.chains.clone();
        chains.sort_by_key(|c| std::cmp::Reverse(c.top()));
        ChainSet { chains }
    }

    /// All entries in descending order: `λ` in doubled coordinates.
    pub fn lambda_doubled(&self) -> WeightVec {
        let mut all: Vec<i64> = self.chains.iter().flat_map(Chain::entries).collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        WeightVec::new(all)
    }

    /// Label entries `p_1 > … > p_n`, reverse the entries of every chain and
    /// read the labels back slot by slot.
    pub fn extract_involution(&self) -> Involution {
        let sorted = self.lambda_doubled();
        let slot_of = |x: i64| {
            sorted
                .coords()
                .iter()
                .position(|&y| y == x)
                .expect("entry present")
        };
        let mut images = vec![0usize; self.n()];
        for c in &self.chains {
            let slots: Vec<usize> = c.entries().into_iter().map(slot_of).collect();
            for (t, &slot) in slots.iter().enumerate() {
                images[slot] = slots[slots.len() - 1 - t] + 1;
            }
        }
        Involution { images }
    }

    pub(crate) fn from_chains_unchecked(chains: Vec<Chain>) -> ChainSet {
        debug_assert!(ChainSet::new(chains.clone()).is_ok());
        ChainSet { chains }
    }
}

impl fmt::Display for ChainSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.chains.iter().enumerate() {
            if i > 0 {
                write!(f, "∪")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A permutation of `1..=n` in one-line notation with `s∘s = id`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Involution {
    images: Vec<usize>,
}

impl Involution {
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        let s = Involution { images };
        if !s.squares_to_identity() {
            return Err(Error::Parse(format!("{:?} is not an involution", s.images)));
        }
        Ok(s)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn squares_to_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x - 1] == i + 1)
    }

    /// No proper prefix `{1..a}` is mapped onto itself, i.e. every simple
    /// reflection `s_a` occurs in a reduced word.
    pub fn involves_all_simple_reflections(&self) -> bool {
        involves_all_simple_reflections(&self.images)
    }
}

/// Same test as [`Involution::involves_all_simple_reflections`] for any
/// one-line permutation.
pub fn involves_all_simple_reflections(one_line: &[usize]) -> bool {
    let mut prefix_max = 0;
    for (a, &x) in one_line.iter().enumerate() {
        prefix_max = prefix_max.max(x);
        if a + 1 < one_line.len() && prefix_max == a + 1 {
            return false;
        }
    }
    true
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<i64> = self.images.iter().map(|&x| x as i64).collect();
        crate::weight::write_tuple(f, &v)
    }
}
