//! Littlewood–Richardson coefficients by direct enumeration of LR tableaux,
//! and K-type multiplicities of modules induced from characters of
//! `∏ GL(d_i)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::chain::ChainSet;
use crate::error::{Error, Result};
use crate::weight::WeightVec;

/// A weakly decreasing list of non-negative parts; trailing zeros dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `width` repeated `height` times.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; height])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
        crate::weight::write_tuple(f, &v)
    }
}

/// Every prefix has at least as many `i`s as `(i+1)`s.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &letter in word {
        if letter == 0 {
            return false;
        }
        if counts.len() < letter {
            counts.resize(letter, 0);
        }
        counts[letter - 1] += 1;
        if letter > 1 && counts[letter - 1] > counts[letter - 2] {
            return false;
        }
    }
    true
}

/// Number of semistandard skew tableaux of shape `outer/inner` and content
/// `weight` whose reading word (rows top to bottom, each right to left) is a
/// lattice word.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, weight: &Partition) -> Result<u64> {
    if !outer.contains(inner) {
        return Err(Error::ShapeMismatch(format!(
            "{inner} is not contained in {outer}"
        )));
    }
    if outer.size() - inner.size() != weight.size() {
        return Err(Error::ShapeMismatch(format!(
            "|{outer}| - |{inner}| != |{weight}|"
        )));
    }
    Ok(Filler::new(outer, inner, weight).count())
}

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl<'a> Filler<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, weight: &'a Partition) -> Self {
        let mut cells = Vec::new();
        for r in 0..outer.len() {
            for c in (inner.part(r)..outer.part(r)).rev() {
                cells.push((r, c));
            }
        }
        Filler {
            outer,
            inner,
            content: weight.parts(),
            cells,
            grid: outer.parts().iter().map(|&w| vec![0; w]).collect(),
            used: vec![0; weight.len()],
        }
    }

    fn count(&mut self) -> u64 {
        self.fill(0)
    }

    fn fill(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        // Row weakly increasing: bounded by the (already filled) right neighbour.
        let hi = if c + 1 < self.outer.part(r) {
            self.grid[r][c + 1]
        } else {
            self.content.len()
        };
        // Column strictly increasing: above the cell is either inner or filled.
        let lo = if r > 0 && c >= self.inner.part(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        // An entry in row r of an LR tableau never exceeds r + 1.
        let hi = hi.min(r + 1);
        let mut total = 0;
        for v in lo..=hi {
            if self.used[v - 1] == self.content[v - 1] {
                continue;
            }
            if v > 1 && self.used[v - 1] + 1 > self.used[v - 2] {
                continue;
            }
            self.used[v - 1] += 1;
            self.grid[r][c] = v;
            total += self.fill(idx + 1);
            self.used[v - 1] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// Multiplicity of the `GL(n)`-type `V_δ` in the module induced from the
/// characters `det^{k_i}` of `∏ GL(d_i)`, one per chain. `delta` is in
/// doubled coordinates. A central-character mismatch gives 0.
pub fn multiplicity_in_induced(cs: &ChainSet, delta: &WeightVec) -> Result<u64> {
    let std = checked_standard(cs, delta)?;
    let min_k = cs.chains().iter().map(|c| c.avg()).min().unwrap_or(0);
    let min_delta = std.iter().copied().min().unwrap_or(0);
    let shift = (-min_k).max(-min_delta).max(0);
    multiplicity_with_shift(cs, delta, shift)
}

/// Same as [`multiplicity_in_induced`] with an explicit uniform shift `t`;
/// every `k_i + t` and every coordinate of `δ + t` must be non-negative.
pub fn multiplicity_with_shift(cs: &ChainSet, delta: &WeightVec, shift: i64) -> Result<u64> {
    let std = checked_standard(cs, delta)?;
    let total: i64 = cs.chains().iter().map(|c| c.avg() * c.len() as i64).sum();
    if std.iter().sum::<i64>() != total {
        return Ok(0);
    }
    let to_part = |x: i64| {
        usize::try_from(x + shift).map_err(|_| {
            Error::InvalidPartition(format!("shift {shift} leaves {x} + {shift} negative"))
        })
    };
    let target = Partition::new(std.iter().map(|&x| to_part(x)).collect::<Result<_>>()?)?;
    let rects = cs
        .canonical_order()
        .chains()
        .iter()
        .map(|c| Ok((to_part(c.avg())?, c.len())))
        .collect::<Result<Vec<_>>>()?;

    let mut layer: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    for (step, &(width, height)) in rects.iter().enumerate() {
        let rect = Partition::rectangle(width, height);
        let last = step + 1 == rects.len();
        let mut next = BTreeMap::new();
        for (mu, mult) in &layer {
            let candidates = if last {
                vec![target.clone()]
            } else {
                between(mu, &target, width, height)
            };
            for lam in candidates {
                if !lam.contains(mu) || lam.size() != mu.size() + rect.size() {
                    continue;
                }
                let c = lr_coefficient(&lam, mu, &rect)?;
                if c > 0 {
                    *next.entry(lam).or_insert(0) += mult * c;
                }
            }
        }
        layer = next;
    }
    Ok(layer.get(&target).copied().unwrap_or(0))
}

fn checked_standard(cs: &ChainSet, delta: &WeightVec) -> Result<Vec<i64>> {
    if delta.len() != cs.n() {
        return Err(Error::DimensionMismatch {
            expected: cs.n(),
            got: delta.len(),
        });
    }
    if !delta.is_dominant() {
        return Err(Error::NotDominant(delta.coords().to_vec()));
    }
    delta
        .to_standard()
        .ok_or_else(|| Error::Parse(format!("{delta} is not integral (odd doubled coordinate)")))
}

/// Partitions `λ` with `μ ⊆ λ ⊆ bound`, `|λ/μ| = width·height`, at most
/// `width` new cells per row and at most `height` per column.
fn between(mu: &Partition, bound: &Partition, width: usize, height: usize) -> Vec<Partition> {
    let mut search = Between {
        mu,
        bound,
        width,
        height,
        cur: vec![0; bound.len()],
        out: Vec::new(),
    };
    search.go(0, width * height);
    search.out
}

struct Between<'a> {
    mu: &'a Partition,
    bound: &'a Partition,
    width: usize,
    height: usize,
    cur: Vec<usize>,
    out: Vec<Partition>,
}

impl Between<'_> {
    fn go(&mut self, r: usize, left: usize) {
        if r == self.cur.len() {
            if left == 0 {
                self.out.push(
                    Partition::new(self.cur.clone()).expect("weakly decreasing by construction"),
                );
            }
            return;
        }
        let lo = self.mu.part(r);
        let mut hi = self.bound.part(r).min(lo + self.width).min(lo + left);
        if r > 0 {
            hi = hi.min(self.cur[r - 1]);
        }
        if r >= self.height {
            hi = hi.min(self.mu.part(r - self.height));
        }
        if hi < lo {
            return;
        }
        for v in lo..=hi {
            self.cur[r] = v;
            self.go(r + 1, left - (v - lo));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent route: `s_μ · s_ν` through Jacobi–Trudi
    /// `s_ν = det(h_{ν_i − i + j})` and the Pieri rule for `s_κ · h_r`.
    fn lr_by_jacobi_trudi(outer: &Partition, inner: &Partition, weight: &Partition) -> i64 {
        let l = weight.len();
        let mut total: HashMap<Vec<usize>, i64> = HashMap::new();
        for perm in permutations(l) {
            let sign = perm_sign(&perm);
            let mut expansion: HashMap<Vec<usize>, i64> =
                HashMap::from([(inner.parts().to_vec(), sign)]);
            let mut dead = false;
            for (i, &wi) in perm.iter().enumerate() {
                let r = weight.part(i) as i64 - i as i64 + wi as i64;
                if r < 0 {
                    dead = true;
                    break;
                }
                expansion = pieri(&expansion, r as usize);
            }
            if dead {
                continue;
            }
            for (k, v) in expansion {
                *total.entry(k).or_insert(0) += v;
            }
        }
        total.get(outer.parts()).copied().unwrap_or(0)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in permutations(n - 1) {
            for pos in 0..=rest.len() {
                let mut v = rest.clone();
                v.insert(pos, n - 1);
                out.push(v);
            }
        }
        out
    }

    fn perm_sign(perm: &[usize]) -> i64 {
        let mut inv = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Multiplies a Schur expansion by `h_r`: add horizontal strips of size r.
    fn pieri(expansion: &HashMap<Vec<usize>, i64>, r: usize) -> HashMap<Vec<usize>, i64> {
        let mut out = HashMap::new();
        for (shape, &coef) in expansion {
            let mut rows = shape.clone();
            rows.push(0);
            strips(&rows, 0, r, &mut rows.clone(), &mut |new| {
                let mut v = new.to_vec();
                while v.last() == Some(&0) {
                    v.pop();
                }
                *out.entry(v).or_insert(0) += coef;
            });
        }
        out
    }

    fn strips(
        base: &[usize],
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if row == base.len() {
            if left == 0 {
                emit(cur);
            }
            return;
        }
        // New row length may not exceed the previous row's old length.
        let cap = if row == 0 { usize::MAX } else { base[row - 1] };
        for add in 0..=left {
            let len = base[row] + add;
            if len > cap {
                break;
            }
            cur[row] = len;
            strips(base, row + 1, left - add, cur, emit);
        }
        cur[row] = base[row];
    }

    fn partitions_of(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions_of(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice_word(&[1, 1, 2, 1, 2, 3]));
        assert!(!is_lattice_word(&[2, 1]));
        assert!(!is_lattice_word(&[1, 2, 2]));
        assert!(is_lattice_word(&[]));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap(), 1);
        assert_eq!(
            lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(),
            1
        );
        assert_eq!(
            lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            2
        );
        assert_eq!(
            lr_coefficient(&p(&[3, 1]), &p(&[2, 1]), &p(&[1])).unwrap(),
            1
        );
        assert_eq!(lr_coefficient(&p(&[]), &p(&[]), &p(&[])).unwrap(), 1);
    }

    #[test]
    fn oracle_agrees_on_examples() {
        assert_eq!(
            lr_by_jacobi_trudi(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])),
            2
        );
        assert_eq!(lr_by_jacobi_trudi(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[])),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1])),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn matches_jacobi_trudi_oracle_up_to_size_7() {
        for size in 0..=7 {
            for outer in partitions_of(size, size) {
                let outer = p(&outer);
                for inner_size in 0..=size {
                    for inner in partitions_of(inner_size, inner_size) {
                        let inner = p(&inner);
                        if !outer.contains(&inner) {
                            continue;
                        }
                        for weight in partitions_of(size - inner_size, size) {
                            let weight = p(&weight);
                            let fast = lr_coefficient(&outer, &inner, &weight).unwrap();
                            let slow = lr_by_jacobi_trudi(&outer, &inner, &weight);
                            assert_eq!(fast as i64, slow, "{outer}/{inner} weight {weight}");
                        }
                    }
                }
            }
        }
    }

    fn cs(lists: &[&[i64]]) -> ChainSet {
        ChainSet::from_entry_lists(lists).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        let single = cs(&[&[5, 3, 1]]);
        assert_eq!(
            multiplicity_in_induced(&single, &WeightVec::from_standard(&[3, 3, 3])).unwrap(),
            1
        );
        let ex = cs(&[&[10, 8], &[9, 7, 5, 3, 1], &[6], &[4]]);
        let tau = WeightVec::from_standard(&[10, 9, 8, 7, 5, 5, 4, 3, 2]);
        assert_eq!(multiplicity_in_induced(&ex, &tau).unwrap(), 1);
        let lowest = WeightVec::from_standard(&[9, 9, 6, 5, 5, 5, 5, 5, 4]);
        assert_eq!(multiplicity_in_induced(&ex, &lowest).unwrap(), 1);
        // Wrong central character.
        let off = WeightVec::from_standard(&[10, 9, 8, 7, 5, 5, 4, 3, 3]);
        assert_eq!(multiplicity_in_induced(&ex, &off).unwrap(), 0);
    }

    #[test]
    fn multiplicity_is_shift_invariant() {
        let ex = cs(&[&[10, 8], &[9, 7, 5, 3, 1], &[6], &[4]]);
        let tau = WeightVec::from_standard(&[10, 9, 8, 7, 5, 5, 4, 3, 2]);
        for t in [0, 1, 3] {
            assert_eq!(multiplicity_with_shift(&ex, &tau, t).unwrap(), 1);
        }
        // Induced from two trivial characters of GL(1): V_(1,-1) occurs once.
        let two = cs(&[&[1], &[-1]]);
        let neg = two.canonical_order();
        let d = WeightVec::from_standard(&[1, -1]);
        assert_eq!(multiplicity_in_induced(&neg, &d).unwrap(), 1);
        assert_eq!(multiplicity_with_shift(&neg, &d, 4).unwrap(), 1);
        assert!(multiplicity_with_shift(&neg, &d, 0).is_err());
    }

    #[test]
    fn multiplicity_input_errors() {
        let single = cs(&[&[5, 3, 1]]);
        assert!(matches!(
            multiplicity_in_induced(&single, &WeightVec::from_standard(&[3, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            multiplicity_in_induced(&single, &WeightVec::new(vec![6, 6, 5])),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            multiplicity_in_induced(&single, &WeightVec::from_standard(&[1, 3, 5])),
            Err(Error::NotDominant(_))
        ));
    }
}
