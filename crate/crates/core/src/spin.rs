//! Lowest and spin-lowest K-types of the modules `J(λ, −sλ)` of `GL(n)`
//! given by a chain set.
//!
//! Each chain `C_i` with average `k_i` and length `d_i` contributes a row
//! `T_i = (k_i, …, k_i)`. Linked pairs then rewrite parts of their rows by
//! one of three rules; the sorted result is the highest weight `τ`.

use std::fmt;

use serde::Serialize;

use crate::chain::{Chain, ChainSet};
use crate::error::{Error, Result};
use crate::weight::{rho_doubled, WeightVec};

/// How a linked pair `C_i`, `C_j` (`i` before `j` in canonical order) is
/// rewritten.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", content = "value")]
pub enum Rule {
    /// `C_j` sits strictly inside the span of `C_i`.
    A(usize),
    /// `C_j` starts inside `C_i` and ends below it.
    B(usize),
    /// `C_i` sits strictly inside the span of `C_j`.
    C(usize),
}

impl Rule {
    pub fn letter(&self) -> char {
        match self {
            Rule::A(_) => 'a',
            Rule::B(_) => 'b',
            Rule::C(_) => 'c',
        }
    }

    pub fn parameter(&self) -> usize {
        match *self {
            Rule::A(p) | Rule::B(p) | Rule::C(p) => p,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::A(p) => write!(f, "(a) p={p}"),
            Rule::B(p) => write!(f, "(b) p={p}"),
            Rule::C(q) => write!(f, "(c) q={q}"),
        }
    }
}

/// One rule firing, with chain indices in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub i: usize,
    pub j: usize,
    #[serde(flatten)]
    pub rule: Rule,
}

impl fmt::Display for RuleApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (letter, name) = match self.rule {
            Rule::A(_) => ('a', 'p'),
            Rule::B(_) => ('b', 'p'),
            Rule::C(_) => ('c', 'q'),
        };
        write!(
            f,
            "({letter}) T{},T{} {name}={}",
            self.i,
            self.j,
            self.rule.parameter()
        )
    }
}

/// Decides which rule applies to `ci` before `cj` in canonical order.
pub fn classify_link(ci: &Chain, cj: &Chain) -> Result<Rule> {
    if !ci.is_linked(cj)? {
        return Err(Error::NotLinked(ci.entries(), cj.entries()));
    }
    let (top_i, bot_i, top_j, bot_j) = (ci.top(), ci.bottom(), cj.top(), cj.bottom());
    let half = |gap: i64| -> Result<usize> {
        if gap <= 0 || gap % 2 == 0 {
            return Err(Error::AlgorithmViolation(format!(
                "gap {gap} between {ci} and {cj} is not a positive odd number"
            )));
        }
        Ok(((gap + 1) / 2) as usize)
    };
    if top_i > top_j {
        let p = half(top_j - bot_i)?;
        if bot_j > bot_i {
            if cj.len() > p {
                return Err(Error::AlgorithmViolation(format!(
                    "rule (a) needs d_j <= p for {ci}, {cj}"
                )));
            }
            Ok(Rule::A(p))
        } else {
            if cj.len() <= p {
                return Err(Error::AlgorithmViolation(format!(
                    "rule (b) needs d_j > p for {ci}, {cj}"
                )));
            }
            Ok(Rule::B(p))
        }
    } else {
        if bot_i <= bot_j {
            return Err(Error::AlgorithmViolation(format!(
                "{ci} precedes {cj} but has the smaller average"
            )));
        }
        Ok(Rule::C(half(top_j - bot_i)?))
    }
}

/// Rows `T_i` under rewriting, one per chain in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauLayout {
    rows: Vec<Vec<i64>>,
    #[serde(skip)]
    touched: Vec<Vec<bool>>,
}

impl TauLayout {
    /// Constant rows `(k_i, …, k_i)` of length `d_i`.
    pub fn initial(chains: &[Chain]) -> Self {
        TauLayout {
            rows: chains.iter().map(|c| vec![c.avg(); c.len()]).collect(),
            touched: chains.iter().map(|c| vec![false; c.len()]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn flatten(&self) -> Vec<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    fn write(&mut self, row: usize, pos: usize, value: i64) -> Result<()> {
        let slot = self
            .touched
            .get_mut(row)
            .and_then(|r| r.get_mut(pos))
            .ok_or_else(|| {
                Error::AlgorithmViolation(format!("position {pos} of row {row} is out of range"))
            })?;
        if *slot {
            return Err(Error::AlgorithmViolation(format!(
                "position {pos} of row {row} is written twice"
            )));
        }
        *slot = true;
        self.rows[row][pos] = value;
        Ok(())
    }
}

/// Writes the values prescribed by `rule` for chains `ci` (row `i`) and `cj`
/// (row `j`). Values are computed from the chain averages, never from the
/// current contents of the layout.
pub fn apply_rule(
    layout: &mut TauLayout,
    (i, ci): (usize, &Chain),
    (j, cj): (usize, &Chain),
    rule: Rule,
) -> Result<()> {
    let (ki, kj) = (ci.avg(), cj.avg());
    let (di, dj) = (ci.len(), cj.len());
    let under = || Error::AlgorithmViolation(format!("{rule} does not fit rows {i}, {j}"));
    match rule {
        Rule::A(p) => {
            let start = di.checked_sub(p).ok_or_else(under)?;
            for t in 0..dj {
                let shift = (p - t) as i64;
                layout.write(i, start + t, ki + shift)?;
                layout.write(j, t, kj - shift)?;
            }
        }
        Rule::B(p) => {
            let start = di.checked_sub(p).ok_or_else(under)?;
            for t in 0..p {
                layout.write(i, start + t, ki + 1 + t as i64)?;
                layout.write(j, t, kj - 1 - t as i64)?;
            }
        }
        Rule::C(q) => {
            let start = q.checked_sub(di).ok_or_else(under)?;
            for t in 0..di {
                let shift = (start + 1 + t) as i64;
                layout.write(i, t, ki + shift)?;
                layout.write(j, start + t, kj - shift)?;
            }
        }
    }
    Ok(())
}

/// Output of the spin-lowest K-type computation. All weights doubled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinResult {
    /// Input chains in canonical order; row `i` of the layout is chain `i`.
    pub chains: ChainSet,
    pub layout: TauLayout,
    pub trace: Vec<RuleApplication>,
    pub tau: WeightVec,
    /// `{τ − ρ}`.
    pub gamma: WeightVec,
    /// The chain entries, i.e. `λ` doubled.
    pub lambda: WeightVec,
}

impl SpinResult {
    pub fn n(&self) -> usize {
        self.tau.len()
    }

    /// `τ` in standard coordinates (always integral).
    pub fn tau_standard(&self) -> Vec<i64> {
        self.layout_sorted()
    }

    fn layout_sorted(&self) -> Vec<i64> {
        let mut v = self.layout.flatten();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Sorted multiset of chain averages, doubled.
pub fn lowest_k_type(cs: &ChainSet) -> WeightVec {
    let v: Vec<i64> = cs
        .chains()
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.avg(), c.len()))
        .collect();
    WeightVec::from_standard(&v).dominant()
}

/// Runs the rewriting rules. Chains are added one at a time in canonical
/// order and each new chain is resolved against every earlier chain it is
/// linked with. Writing a position twice is reported as an
/// [`Error::AlgorithmViolation`].
pub fn spin_lowest_k_type(cs: &ChainSet) -> Result<SpinResult> {
    let ordered = cs.canonical_order();
    let chains = ordered.chains();
    let mut layout = TauLayout::initial(chains);
    let mut trace = Vec::new();
    for m in 1..chains.len() {
        for i in 0..m {
            if chains[i].is_linked(&chains[m])? {
                let rule = classify_link(&chains[i], &chains[m])?;
                apply_rule(&mut layout, (i, &chains[i]), (m, &chains[m]), rule)?;
                trace.push(RuleApplication { i, j: m, rule });
            }
        }
    }
    Ok(finish(ordered, layout, trace))
}

pub(crate) fn finish(
    ordered: ChainSet,
    layout: TauLayout,
    trace: Vec<RuleApplication>,
) -> SpinResult {
    let tau = WeightVec::from_standard(&layout.flatten()).dominant();
    let rho = rho_doubled(tau.len());
    let gamma = (&tau - &rho).dominant();
    let lambda = ordered.lambda_doubled();
    SpinResult {
        chains: ordered,
        layout,
        trace,
        tau,
        gamma,
        lambda,
    }
}

/// Rebuilds a result after its layout has been edited; used by negative
/// controls that corrupt the rule output.
#[doc(hidden)]
pub fn with_layout(res: &SpinResult, rows: Vec<Vec<i64>>) -> SpinResult {
    let touched = rows.iter().map(|r| vec![true; r.len()]).collect();
    finish(
        res.chains.clone(),
        TauLayout { rows, touched },
        res.trace.clone(),
    )
}

/// `{τ − ρ} = 2λ − ρ`, checked in doubled coordinates.
pub fn verify_spin_identity(res: &SpinResult) -> bool {
    let n = res.n();
    if res.lambda.len() != n {
        return false;
    }
    let rho = rho_doubled(n);
    let expected = &res.lambda.scale(2) - &rho;
    (&res.tau - &rho).dominant() == expected && res.gamma == expected
}

/// The Dirac cohomology of a scattered representation of `SL(n)`: one
/// `K̃`-type of highest weight `{τ − ρ}` with multiplicity `2^⌊(n−1)/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiracReport {
    pub gamma: WeightVec,
    pub multiplicity: u64,
}

pub fn dirac_report(cs: &ChainSet) -> Result<DiracReport> {
    if cs.min_entry() != Some(1) {
        return Err(Error::NotScattered(format!(
            "{cs} does not have smallest entry 1"
        )));
    }
    if !cs.is_interlaced() {
        return Err(Error::NotScattered(format!("{cs} is not interlaced")));
    }
    let res = spin_lowest_k_type(cs)?;
    let rank = cs.n() as u32 - 1;
    Ok(DiracReport {
        gamma: res.gamma,
        multiplicity: 1u64 << (rank / 2),
    })
}
