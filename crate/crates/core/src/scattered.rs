//! Scattered representations of `SL(n)`: interlaced chain sets whose smallest
//! entry is 1.
//!
//! [`generate`] grows every such set from `{3, 1}` by the two-way branching
//! step, [`brute_force_enumerate`] finds them by exhaustive search, and
//! [`build_record`] assembles the data reported for one representation.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{Chain, ChainSet, Involution};
use crate::error::{Error, Result};
use crate::lr::multiplicity_in_induced;
use crate::spin::{spin_lowest_k_type, verify_spin_identity};
use crate::weight::{rho_doubled, WeightVec};

fn base() -> ChainSet {
    ChainSet::from_chains_unchecked(vec![Chain::new(3, 2).expect("non-empty")])
}

fn top_index(chains: &[Chain], top: i64) -> usize {
    chains
        .iter()
        .position(|c| c.top() == top)
        .expect("largest entry of a parity class tops its chain")
}

/// The two sets with one more entry produced from `cs`.
pub fn children(cs: &ChainSet) -> [ChainSet; 2] {
    let chains = cs.chains();
    let all = cs.lambda_doubled();
    let max_odd = all
        .coords()
        .iter()
        .copied()
        .find(|x| x.rem_euclid(2) == 1)
        .expect("entry 1 keeps an odd chain present");
    let max_even = all.coords().iter().copied().find(|x| x.rem_euclid(2) == 0);

    let grow = |top: i64| {
        let mut v = chains.to_vec();
        let k = top_index(&v, top);
        v[k] = v[k].extended_up();
        ChainSet::from_chains_unchecked(v).normalized()
    };
    let add = |entry: i64| {
        let mut v = chains.to_vec();
        v.push(Chain::new(entry, 1).expect("non-empty"));
        ChainSet::from_chains_unchecked(v).normalized()
    };

    match max_even {
        // CASE I (including the set with no even chain)
        None => [grow(max_odd), add(max_odd - 1)],
        Some(e) if max_odd > e + 1 => [grow(max_odd), add(max_odd - 1)],
        // CASE II and CASE III
        Some(e) if max_odd == e + 1 || max_odd == e - 1 => [grow(max_odd), grow(e)],
        // CASE IV
        Some(e) => [add(e - 1), grow(e)],
    }
}

/// All interlaced chain sets with `n` entries and smallest entry 1, grown
/// from `{3, 1}`. The output is sorted and duplicates, if the branching ever
/// produced any, are kept so callers can detect them.
pub fn generate(n: usize) -> Result<Vec<ChainSet>> {
    if n < 2 {
        return Err(Error::BoundExceeded {
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    let mut level = vec![base()];
    for _ in 2..n {
        level = level.par_iter().flat_map_iter(children).collect();
    }
    level.par_sort();
    Ok(level)
}

/// Number of distinct sets produced by [`generate`].
pub fn count(n: usize) -> Result<usize> {
    let sets = generate(n)?;
    Ok(sets.iter().collect::<HashSet<_>>().len())
}

/// Inverse of one branching step: drop the chain `{M − 1}` if present,
/// otherwise drop the largest entry `M`.
pub fn reduce(cs: &ChainSet) -> Result<ChainSet> {
    check_scattered(cs)?;
    if cs.n() <= 2 {
        return Err(Error::IrreducibleBase);
    }
    let max = cs.max_entry().expect("non-empty");
    let mut chains = cs.chains().to_vec();
    if let Some(k) = chains
        .iter()
        .position(|c| c.len() == 1 && c.top() == max - 1)
    {
        chains.remove(k);
    } else {
        let k = top_index(&chains, max);
        let c = chains[k];
        if c.len() == 1 {
            chains.remove(k);
        } else {
            chains[k] = Chain::new(c.top() - 2, c.len() - 1)?;
        }
    }
    Ok(ChainSet::from_chains_unchecked(chains).normalized())
}

/// Exhaustive search over every chain set with `n` distinct entries in
/// `1..=max_entry` that contains 1 and is interlaced. Sorted, normalized.
pub fn brute_force_enumerate(n: usize, max_entry: i64) -> Vec<ChainSet> {
    enumerate_chain_sets(n, max_entry, true)
}

/// Every chain set with `n` distinct entries in `1..=max_entry` containing 1,
/// interlaced or not.
pub fn all_chain_sets(n: usize, max_entry: i64) -> Vec<ChainSet> {
    enumerate_chain_sets(n, max_entry, false)
}

fn enumerate_chain_sets(n: usize, max_entry: i64, interlaced_only: bool) -> Vec<ChainSet> {
    let mut found = Vec::new();
    let mut open: Vec<Chain> = Vec::new();
    search(max_entry, n, interlaced_only, &mut open, &mut found);
    let mut found: Vec<ChainSet> = found
        .into_iter()
        .map(|v| ChainSet::from_chains_unchecked(v).normalized())
        .collect();
    found.sort();
    found.dedup();
    found
}

fn search(
    value: i64,
    left: usize,
    interlaced_only: bool,
    chains: &mut Vec<Chain>,
    found: &mut Vec<Vec<Chain>>,
) {
    if value == 0 {
        if left == 0
            && (!interlaced_only || ChainSet::from_chains_unchecked(chains.clone()).is_interlaced())
        {
            found.push(chains.clone());
        }
        return;
    }
    // Need room for the remaining entries, and 1 is mandatory.
    if left as i64 > value || left == 0 {
        return;
    }
    if value > 1 {
        search(value - 1, left, interlaced_only, chains, found);
    }
    chains.push(Chain::new(value, 1).expect("non-empty"));
    search(value - 1, left - 1, interlaced_only, chains, found);
    chains.pop();
    if let Some(k) = chains.iter().position(|c| c.bottom() == value + 2) {
        let old = chains[k];
        chains[k] = Chain::new(old.top(), old.len() + 1).expect("non-empty");
        search(value - 1, left - 1, interlaced_only, chains, found);
        chains[k] = old;
    }
}

/// `⟨τ − 2ρ, ϖ_i⟩ ≤ 0` for every `i`; `tau` doubled.
pub fn is_u_small(tau: &WeightVec) -> bool {
    let shifted = tau - &rho_doubled(tau.len()).scale(2);
    shifted.fundamental_pairing_signs().iter().all(|&x| x <= 0)
}

/// Everything reported about one scattered representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScatteredRecord {
    pub n: usize,
    #[serde(with = "crate::chain::as_lists")]
    pub chains: ChainSet,
    /// Fundamental coordinates of `2λ′` (so 1 stands for `λ′_i = 1/2`).
    pub lambda2_fund: Vec<i64>,
    pub s: Involution,
    /// Fundamental coordinates of `τ`.
    pub tau_fund: Vec<i64>,
    /// `{τ − ρ}` in doubled coordinates.
    pub gamma: WeightVec,
    pub u_small: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u64>,
}

fn check_scattered(cs: &ChainSet) -> Result<()> {
    if cs.min_entry() != Some(1) {
        return Err(Error::NotScattered(format!(
            "smallest entry of {cs} is not 1"
        )));
    }
    if !cs.is_interlaced() {
        return Err(Error::NotScattered(format!("{cs} is not interlaced")));
    }
    Ok(())
}

pub fn build_record(cs: &ChainSet, with_multiplicity: bool) -> Result<ScatteredRecord> {
    check_scattered(cs)?;
    let res = spin_lowest_k_type(cs)?;
    let lambda2_fund = cs.lambda_doubled().to_fundamental()?.coeffs().to_vec();
    let tau_std = WeightVec::new(res.tau_standard());
    let multiplicity = if with_multiplicity {
        Some(multiplicity_in_induced(cs, &res.tau)?)
    } else {
        None
    };
    Ok(ScatteredRecord {
        n: cs.n(),
        chains: cs.clone(),
        lambda2_fund,
        s: cs.extract_involution(),
        tau_fund: tau_std.to_fundamental()?.coeffs().to_vec(),
        gamma: res.gamma.clone(),
        u_small: is_u_small(&res.tau),
        multiplicity,
    })
}

impl ScatteredRecord {
    /// Recomputes the record from its chains and reports the first field
    /// that disagrees or the first property that fails.
    pub fn reverify(&self) -> std::result::Result<(), String> {
        let fresh =
            build_record(&self.chains, self.multiplicity.is_some()).map_err(|e| e.to_string())?;
        if &fresh != self {
            return Err(format!(
                "record for {} does not match recomputation",
                self.chains
            ));
        }
        let res = spin_lowest_k_type(&self.chains).map_err(|e| e.to_string())?;
        if !verify_spin_identity(&res) {
            return Err(format!("{{τ−ρ}} != 2λ−ρ for {}", self.chains));
        }
        if !self.u_small {
            return Err(format!("τ is not u-small for {}", self.chains));
        }
        if self.lambda2_fund.iter().any(|&c| c != 1 && c != 2) {
            return Err(format!(
                "λ′ has a coefficient outside {{1/2, 1}} for {}",
                self.chains
            ));
        }
        if !self.s.involves_all_simple_reflections() {
            return Err(format!("s misses a simple reflection for {}", self.chains));
        }
        if let Some(m) = self.multiplicity {
            if m != 1 {
                return Err(format!("τ has multiplicity {m} for {}", self.chains));
            }
        }
        Ok(())
    }
}

/// `{2a−1, …, 3, 1} ∪ {a+b−1, a+b−3, …, a−b+1}`: the spherical scattered
/// parameters, for `a > b > 0` of different parity.
pub fn spherical_family(a: i64, b: i64) -> Result<ChainSet> {
    if !(a > b && b > 0) || (a + b) % 2 == 0 {
        return Err(Error::InvalidSpherical { a, b });
    }
    ChainSet::new(vec![
        Chain::new(2 * a - 1, a as usize)?,
        Chain::new(a + b - 1, b as usize)?,
    ])
}
