//! The full invariant sweep behind `spin-chains verify`.
//!
//! Every check runs over all scattered parameters of each rank up to
//! `n_max`. The τ computation is injectable so that a deliberately broken
//! rule set can be run through the same sweep as a negative control.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::ChainSet;
use crate::error::{Error, Result};
use crate::lr::multiplicity_in_induced;
use crate::scattered::{
    all_chain_sets, brute_force_enumerate, build_record, children, generate, is_u_small, reduce,
};
use crate::spin::{lowest_k_type, spin_lowest_k_type, verify_spin_identity, SpinResult};
use crate::weight::{rho_doubled, WeightVec};

pub const MAX_VERIFY_RANK: usize = 12;

pub type SpinFn = dyn Fn(&ChainSet) -> Result<SpinResult> + Sync;

/// Rank caps for the expensive sub-suites.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Limits {
    pub oracle: usize,
    pub wide_oracle: usize,
    pub multiplicity: usize,
    pub uniqueness: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle: 10,
            wide_oracle: 8,
            multiplicity: 8,
            uniqueness: 6,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub n: usize,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub n_max: usize,
    pub passed: bool,
    pub counts: BTreeMap<usize, usize>,
    pub checks: Vec<CheckOutcome>,
}

impl VerifySummary {
    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub fn verify_up_to(n_max: usize) -> Result<VerifySummary> {
    verify_with(n_max, Limits::default(), &spin_lowest_k_type)
}

pub fn verify_with(n_max: usize, limits: Limits, spin: &SpinFn) -> Result<VerifySummary> {
    if !(2..=MAX_VERIFY_RANK).contains(&n_max) {
        return Err(Error::BoundExceeded {
            n: n_max,
            min: 2,
            max: MAX_VERIFY_RANK,
        });
    }
    let mut checks = Vec::new();
    let mut counts = BTreeMap::new();
    for n in 2..=n_max {
        let sets = generate(n)?;
        counts.insert(n, sets.len());
        checks.extend(checks_for_rank(n, &sets, limits, spin));
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifySummary {
        n_max,
        passed,
        counts,
        checks,
    })
}

fn outcome(check: &'static str, n: usize, cases: usize, failure: Option<String>) -> CheckOutcome {
    CheckOutcome {
        check,
        n,
        cases,
        passed: failure.is_none(),
        failure,
    }
}

/// Runs `f` on every set and keeps the first failure in input order.
fn sweep<F>(sets: &[ChainSet], f: F) -> Option<String>
where
    F: Fn(&ChainSet) -> std::result::Result<(), String> + Sync,
{
    sets.par_iter()
        .map(|cs| f(cs).err().map(|e| format!("{cs}: {e}")))
        .find_first(Option::is_some)
        .flatten()
}

fn checks_for_rank(
    n: usize,
    sets: &[ChainSet],
    limits: Limits,
    spin: &SpinFn,
) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let expected = 1usize << (n - 2);
    let distinct: HashSet<&ChainSet> = sets.iter().collect();
    let count_failure = (sets.len() != expected || distinct.len() != sets.len()).then(|| {
        format!(
            "generated {} sets ({} distinct), expected {expected}",
            sets.len(),
            distinct.len()
        )
    });
    out.push(outcome("count", n, sets.len(), count_failure));

    if n <= limits.oracle {
        let oracle = brute_force_enumerate(n, 2 * n as i64 - 1);
        let failure = (oracle != sets).then(|| {
            format!(
                "brute force found {} sets, generation {}",
                oracle.len(),
                sets.len()
            )
        });
        out.push(outcome("oracle", n, oracle.len(), failure));

        let all = all_chain_sets(n, 2 * n as i64 - 1);
        let failure = sweep(&all, |cs| {
            let s = cs.extract_involution();
            if !s.squares_to_identity() {
                return Err("s is not an involution".into());
            }
            if s.involves_all_simple_reflections() != cs.is_interlaced() {
                return Err("interlacing and simple reflections disagree".into());
            }
            Ok(())
        });
        out.push(outcome(
            "interlaced-iff-all-reflections",
            n,
            all.len(),
            failure,
        ));
    }
    if n <= limits.wide_oracle {
        let wide = brute_force_enumerate(n, 2 * n as i64 + 1);
        let failure = (wide != sets).then(|| {
            format!(
                "widened search found {} sets, generation {}",
                wide.len(),
                sets.len()
            )
        });
        out.push(outcome("oracle-wide", n, wide.len(), failure));
    }

    let failure = sweep(sets, |cs| {
        for child in children(cs) {
            if reduce(&child).map_err(|e| e.to_string())? != *cs {
                return Err(format!("child {child} does not reduce back"));
            }
        }
        if n > 2 {
            let parent = reduce(cs).map_err(|e| e.to_string())?;
            if !children(&parent).contains(cs) {
                return Err(format!("not a child of its reduction {parent}"));
            }
        }
        Ok(())
    });
    out.push(outcome("reduce-round-trip", n, sets.len(), failure));

    let failure = sweep(sets, |cs| {
        let r = build_record(cs, false).map_err(|e| e.to_string())?;
        if !r.s.squares_to_identity() || !r.s.involves_all_simple_reflections() {
            return Err(format!("s = {} misses a simple reflection", r.s));
        }
        if r.lambda2_fund.iter().any(|&c| c != 1 && c != 2) {
            return Err(format!(
                "2λ′ = {:?} has a coefficient outside {{1, 2}}",
                r.lambda2_fund
            ));
        }
        Ok(())
    });
    out.push(outcome("involution-and-lambda", n, sets.len(), failure));

    let failure = sweep(sets, |cs| {
        let res = spin(cs).map_err(|e| e.to_string())?;
        if !verify_spin_identity(&res) {
            return Err(format!(
                "{{τ−ρ}} = {} but 2λ−ρ = {}",
                res.gamma,
                &res.lambda.scale(2) - &rho_doubled(n)
            ));
        }
        Ok(())
    });
    out.push(outcome("spin-identity", n, sets.len(), failure));

    let failure = sweep(sets, |cs| {
        let res = spin(cs).map_err(|e| e.to_string())?;
        if !is_u_small(&res.tau) {
            return Err(format!("τ = {} is not u-small", res.tau));
        }
        Ok(())
    });
    out.push(outcome("u-small", n, sets.len(), failure));

    let failure = sweep(sets, |cs| {
        let res = spin(cs).map_err(|e| e.to_string())?;
        let lowest = lowest_k_type(cs);
        if res.tau.sum() != lowest.sum() {
            return Err(format!(
                "Σ τ = {} but Σ lowest K-type = {}",
                res.tau.sum(),
                lowest.sum()
            ));
        }
        if res.tau.spin_norm_sq() != res.lambda.scale(2).norm_sq() {
            return Err("‖τ‖_spin != ‖2λ‖".into());
        }
        if cs.chains().len() > 1 && res.tau == lowest {
            return Err("τ equals the lowest K-type".into());
        }
        Ok(())
    });
    out.push(outcome("tau-shape", n, sets.len(), failure));

    if n <= limits.multiplicity {
        let failure = sweep(sets, |cs| {
            let res = spin(cs).map_err(|e| e.to_string())?;
            let m = multiplicity_in_induced(cs, &res.tau).map_err(|e| e.to_string())?;
            if m != 1 {
                return Err(format!("[J : V_τ] = {m}"));
            }
            let m = multiplicity_in_induced(cs, &lowest_k_type(cs)).map_err(|e| e.to_string())?;
            if m != 1 {
                return Err(format!("lowest K-type has multiplicity {m}"));
            }
            Ok(())
        });
        out.push(outcome("multiplicity", n, sets.len(), failure));
    }

    if n <= limits.uniqueness {
        let failure = sweep(sets, |cs| {
            let res = spin(cs).map_err(|e| e.to_string())?;
            check_unique_spin_lowest(cs, &res.tau)
        });
        out.push(outcome("uniqueness", n, sets.len(), failure));
    }
    out
}

/// Dominant integral `δ` (doubled) with the central character of `cs` and
/// `‖δ − ρ‖ ≤ ‖2λ‖`. Every K-type of spin norm at most `‖2λ‖` lies here.
pub fn dirac_ball(cs: &ChainSet) -> Vec<WeightVec> {
    let n = cs.n();
    let rho = rho_doubled(n);
    let radius = cs.lambda_doubled().scale(2).norm_sq();
    let total = cs.lambda_doubled().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    ball_rec(rho.coords(), radius, total, i64::MAX, &mut cur, &mut out);
    out
}

fn ball_rec(
    rho: &[i64],
    budget: i64,
    left: i64,
    cap: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<WeightVec>,
) {
    let i = cur.len();
    let dist = |x: i64| (2 * x - rho[i]) * (2 * x - rho[i]);
    if i + 1 == rho.len() {
        if left <= cap && dist(left) <= budget {
            cur.push(left);
            out.push(WeightVec::from_standard(cur));
            cur.pop();
        }
        return;
    }
    let r = isqrt(budget);
    let lo = (rho[i] - r).div_euclid(2) + i64::from((rho[i] - r).rem_euclid(2) != 0);
    let hi = (rho[i] + r).div_euclid(2).min(cap);
    for x in lo..=hi {
        let d = dist(x);
        if d > budget {
            continue;
        }
        cur.push(x);
        ball_rec(rho, budget - d, left - x, x, cur, out);
        cur.pop();
    }
}

fn isqrt(v: i64) -> i64 {
    if v <= 0 {
        return 0;
    }
    let mut r = (v as f64).sqrt() as i64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// Inside the Dirac ball, no K-type of the module has spin norm below `‖2λ‖`
/// and `τ` is the only one attaining it, with multiplicity one.
pub fn check_unique_spin_lowest(cs: &ChainSet, tau: &WeightVec) -> std::result::Result<(), String> {
    let bound = cs.lambda_doubled().scale(2).norm_sq();
    let mut found_tau = false;
    for delta in dirac_ball(cs) {
        let spin = delta.spin_norm_sq();
        if spin > bound {
            continue;
        }
        let m = multiplicity_in_induced(cs, &delta).map_err(|e| e.to_string())?;
        if m == 0 {
            continue;
        }
        if spin < bound {
            return Err(format!("V_{delta} occurs with spin norm below ‖2λ‖"));
        }
        if &delta != tau {
            return Err(format!("V_{delta} also attains ‖2λ‖ (multiplicity {m})"));
        }
        if m != 1 {
            return Err(format!("τ has multiplicity {m}"));
        }
        found_tau = true;
    }
    if !found_tau {
        return Err(format!(
            "τ = {tau} does not attain ‖2λ‖ with positive multiplicity"
        ));
    }
    Ok(())
}
