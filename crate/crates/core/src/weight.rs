//! Weights of `GL(n)` / `SL(n)` in doubled coordinates.
//!
//! Every weight is stored as twice its standard coordinate vector, so `ρ`,
//! `λ` (half-integral for the parameters of interest) and `{τ − ρ}` are all
//! integer vectors. Norms use the standard coordinate form; every comparison
//! made with them is between vectors of the same scale.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer weight vector in doubled coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(Vec<i64>);

impl WeightVec {
    pub fn new(coords: Vec<i64>) -> Self {
        WeightVec(coords)
    }

    /// Doubles every coordinate; turns a standard weight into its stored form.
    pub fn from_standard(coords: &[i64]) -> Self {
        WeightVec(coords.iter().map(|c| 2 * c).collect())
    }

    /// Standard coordinates, if every stored coordinate is even.
    pub fn to_standard(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| if c % 2 == 0 { Some(c / 2) } else { None })
            .collect()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, factor: i64) -> Self {
        WeightVec(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn shift(&self, c: i64) -> Self {
        WeightVec(self.0.iter().map(|x| x + c).collect())
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The dominant representative `{v}`: coordinates sorted weakly decreasing.
    pub fn dominant(&self) -> Self {
        let mut c = self.0.clone();
        c.sort_unstable_by(|a, b| b.cmp(a));
        WeightVec(c)
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|c| c * c).sum()
    }

    /// `‖{δ − ρ} + ρ‖²` with `δ` and `ρ` both doubled.
    pub fn spin_norm_sq(&self) -> i64 {
        let rho = rho_doubled(self.len());
        (&(self - &rho).dominant() + &rho).norm_sq()
    }

    /// For `i = 1..n-1`, the integer `n·S_i − i·S_n` with `S_i` the `i`-th
    /// partial sum. It is a positive multiple of `⟨v, ϖ_i⟩` for `sl(n)`, so
    /// only its sign carries meaning.
    pub fn fundamental_pairing_signs(&self) -> Vec<i64> {
        let n = self.len() as i64;
        let total = self.sum();
        let mut partial = 0;
        self.0
            .iter()
            .take(self.len().saturating_sub(1))
            .enumerate()
            .map(|(i, c)| {
                partial += c;
                n * partial - (i as i64 + 1) * total
            })
            .collect()
    }

    /// Coefficients in the fundamental-weight basis (differences of
    /// neighbouring coordinates). Errors unless the vector is dominant.
    pub fn to_fundamental(&self) -> Result<FundamentalCoords> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.0.clone()));
        }
        Ok(FundamentalCoords(
            self.0.windows(2).map(|w| w[0] - w[1]).collect(),
        ))
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;

    fn add(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.len(), rhs.len(), "weight dimension mismatch");
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;

    fn sub(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.len(), rhs.len(), "weight dimension mismatch");
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Coefficients `a_i` of `Σ a_i ϖ_i`, doubled like everything else: a stored
/// `1` means `a_i = 1/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FundamentalCoords(Vec<i64>);

impl FundamentalCoords {
    pub fn new(coeffs: Vec<i64>) -> Self {
        FundamentalCoords(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Rebuilds the dominant weight with the given last coordinate.
    pub fn to_weight(&self, last: i64) -> WeightVec {
        let mut coords = vec![last; self.0.len() + 1];
        for i in (0..self.0.len()).rev() {
            coords[i] = coords[i + 1] + self.0[i];
        }
        WeightVec(coords)
    }

    /// Halves every coefficient; `None` if any coefficient is odd.
    pub fn halved(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| if c % 2 == 0 { Some(c / 2) } else { None })
            .collect()
    }
}

impl fmt::Display for FundamentalCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// `2ρ` for `GL(n)`: `(n−1, n−3, …, 1−n)`.
pub fn rho_doubled(n: usize) -> WeightVec {
    let n = n as i64;
    WeightVec((0..n).map(|i| n - 1 - 2 * i).collect())
}
