//! Exact arithmetic in the representation ring of sl2 and its level-l
//! (Verlinde) quotient.
//!
//! Classes are stored as finite maps `highest weight -> multiplicity`. The
//! untruncated product follows the Clebsch-Gordan rule; the truncated product
//! cuts the decomposition off at `min(i + j, 2l - i - j)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bracketing::BracketTree;
use crate::error::{Error, Result};

/// Label `i` of the simple module `V_i` (dimension `i + 1`).
pub type HighestWeight = u32;

/// A positive level `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Level(u32);

impl Level {
    pub fn new(value: u32) -> Result<Self> {
        if value == 0 {
            Err(Error::InvalidLevel(value))
        } else {
            Ok(Level(value))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Fails with [`Error::OutsideAlcove`] unless `weight <= l`.
    pub fn check_alcove(self, weight: HighestWeight) -> Result<()> {
        if weight > self.0 {
            Err(Error::OutsideAlcove {
                weight,
                level: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl TryFrom<u32> for Level {
    type Error = Error;
    fn try_from(value: u32) -> Result<Self> {
        Level::new(value)
    }
}

impl From<Level> for u32 {
    fn from(level: Level) -> u32 {
        level.0
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of the representation ring: integer combination of classes `[V_k]`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// ring elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RingElementRepr")]
pub struct RingElement {
    coeffs: BTreeMap<HighestWeight, i64>,
}

#[derive(Deserialize)]
struct RingElementRepr {
    coeffs: BTreeMap<HighestWeight, i64>,
}

impl From<RingElementRepr> for RingElement {
    fn from(repr: RingElementRepr) -> Self {
        RingElement::from_terms(repr.coeffs)
    }
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `[V_0]`.
    pub fn one() -> Self {
        Self::simple(0)
    }

    /// The class `[V_k]`.
    pub fn simple(k: HighestWeight) -> Self {
        let mut x = Self::zero();
        x.add_term(k, 1);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (HighestWeight, i64)>>(terms: I) -> Self {
        let mut x = Self::zero();
        for (k, c) in terms {
            x.add_term(k, c);
        }
        x
    }

    pub fn add_term(&mut self, k: HighestWeight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: HighestWeight) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (HighestWeight, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coeffs(&self) -> &BTreeMap<HighestWeight, i64> {
        &self.coeffs
    }

    pub fn max_weight(&self) -> Option<HighestWeight> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Virtual dimension `sum_k c_k (k + 1)`.
    pub fn dim(&self) -> i64 {
        self.iter().map(|(k, c)| c * (i64::from(k) + 1)).sum()
    }

    pub fn scale(&self, factor: i64) -> Self {
        Self::from_terms(self.iter().map(|(k, c)| (k, c * factor)))
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(-1)
    }
}

impl fmt::Display for RingElement {
    /// Renders as `V0 + 2·V2 - V4`; the zero element renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (idx, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            write!(f, "V{k}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse ring element: {0}")]
pub struct ParseRingElementError(String);

impl FromStr for RingElement {
    type Err = ParseRingElementError;

    /// Accepts the [`Display`](fmt::Display) format; `*` is accepted in place of `·`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseRingElementError(s.to_string());
        let trimmed = s.trim();
        if trimmed == "0" {
            return Ok(RingElement::zero());
        }
        // Split into signed terms.
        let mut terms = Vec::new();
        let mut sign = 1i64;
        let mut current = String::new();
        let mut expect_term = true;
        for ch in trimmed.chars() {
            match ch {
                '+' | '-' if expect_term && current.trim().is_empty() => {
                    if ch == '-' {
                        sign = -sign;
                    }
                }
                '+' | '-' => {
                    terms.push((sign, std::mem::take(&mut current)));
                    sign = if ch == '-' { -1 } else { 1 };
                    expect_term = true;
                }
                _ => {
                    if !ch.is_whitespace() {
                        expect_term = false;
                    }
                    current.push(ch);
                }
            }
        }
        terms.push((sign, current));

        let mut out = RingElement::zero();
        for (sign, term) in terms {
            let term = term.trim();
            let (mult, simple) = match term.split_once(['·', '*']) {
                Some((m, v)) => (m.trim().parse::<i64>().map_err(|_| err())?, v.trim()),
                None => (1, term),
            };
            let k = simple
                .strip_prefix('V')
                .and_then(|k| k.parse::<HighestWeight>().ok())
                .ok_or_else(err)?;
            out.add_term(k, sign * mult);
        }
        Ok(out)
    }
}

fn cg_range(i: HighestWeight, j: HighestWeight, top: i64) -> impl Iterator<Item = HighestWeight> {
    let bottom = i64::from(i.abs_diff(j));
    (bottom..=top).step_by(2).map(|k| k as HighestWeight)
}

/// Clebsch-Gordan decomposition `V_i ⊗ V_j = ⊕ V_k`, `k = |i-j|, |i-j|+2, ..., i+j`.
pub fn tensor_cg(i: HighestWeight, j: HighestWeight) -> RingElement {
    RingElement::from_terms(cg_range(i, j, i64::from(i) + i64::from(j)).map(|k| (k, 1)))
}

/// Level-l truncated product `V_i ⊗_l V_j`.
pub fn fuse_pair(i: HighestWeight, j: HighestWeight, level: Level) -> Result<RingElement> {
    level.check_alcove(i)?;
    level.check_alcove(j)?;
    let (i64_, j64, l) = (i64::from(i), i64::from(j), i64::from(level.get()));
    let top = (i64_ + j64).min(2 * l - i64_ - j64);
    Ok(RingElement::from_terms(cg_range(i, j, top).map(|k| (k, 1))))
}

/// Bilinear extension of [`fuse_pair`]. Both operands must be nonnegative
/// combinations of weights in the alcove.
pub fn fuse_elements(x: &RingElement, y: &RingElement, level: Level) -> Result<RingElement> {
    let mut out = RingElement::zero();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            for (k, c) in fuse_pair(i, j, level)?.iter() {
                out.add_term(k, a * b * c);
            }
        }
    }
    Ok(out)
}

/// Iterated fusion product of `weights`, bracketed according to `tree`.
pub fn fuse_many(weights: &[HighestWeight], level: Level, tree: &BracketTree) -> Result<RingElement> {
    if tree.leaf_count() != weights.len() {
        return Err(Error::LeafCountMismatch {
            expected: weights.len(),
            found: tree.leaf_count(),
        });
    }
    for &w in weights {
        level.check_alcove(w)?;
    }
    tree.try_fold(
        &mut |leaf| Ok(RingElement::simple(weights[leaf - 1])),
        &mut |left, right| fuse_elements(&left, &right, level),
    )
}

/// Left-comb fusion product; the empty product is the unit.
pub fn fuse_all(weights: &[HighestWeight], level: Level) -> Result<RingElement> {
    if weights.is_empty() {
        return Ok(RingElement::one());
    }
    fuse_many(weights, level, &BracketTree::left_comb(weights.len()))
}

/// Product in the untruncated representation ring.
pub fn ring_mul(x: &RingElement, y: &RingElement) -> RingElement {
    let mut out = RingElement::zero();
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            for k in cg_range(i, j, i64::from(i) + i64::from(j)) {
                out.add_term(k, a * b);
            }
        }
    }
    out
}

/// Class of `V_{w_1} ⊗ ... ⊗ V_{w_r}`; the empty product is the unit.
pub fn tensor_many(weights: &[HighestWeight]) -> RingElement {
    weights.iter().fold(RingElement::one(), |acc, &w| {
        ring_mul(&acc, &RingElement::simple(w))
    })
}

/// Row-reduced basis of the ideal `[V_{l+1}]` intersected with the span of
/// `[V_0] .. [V_top]`. Row `j` has pivot `l + 1 + j` with coefficient 1.
struct IdealWindow {
    level: usize,
    rows: Vec<Vec<i64>>,
}

impl IdealWindow {
    fn new(level: Level, top: usize) -> Self {
        let l = level.get() as usize;
        let generator = RingElement::simple(level.get() + 1);
        let mut rows: Vec<Vec<i64>> = (0..top.saturating_sub(l))
            .map(|j| {
                let product = ring_mul(&generator, &RingElement::simple(j as HighestWeight));
                let mut row = vec![0; top + 1];
                for (k, c) in product.iter() {
                    row[k as usize] = c;
                }
                row
            })
            .collect();
        // Back-substitute so each pivot column is zero in every other row.
        for pivot_row in 0..rows.len() {
            let pivot = l + 1 + pivot_row;
            debug_assert_eq!(rows[pivot_row][pivot], 1);
            for other in pivot_row + 1..rows.len() {
                let factor = rows[other][pivot];
                if factor != 0 {
                    let (head, tail) = rows.split_at_mut(other);
                    for (dst, src) in tail[0].iter_mut().zip(&head[pivot_row]) {
                        *dst -= factor * src;
                    }
                }
            }
        }
        IdealWindow { level: l, rows }
    }

    fn reduce(&self, dense: &mut [i64]) {
        for (j, row) in self.rows.iter().enumerate().rev() {
            let c = dense[self.level + 1 + j];
            if c != 0 {
                for (dst, src) in dense.iter_mut().zip(row) {
                    *dst -= c * src;
                }
            }
        }
    }
}

/// Normal form of `x` in the level-l quotient, supported on `{0, ..., l}`.
pub fn quotient_reduce(x: &RingElement, level: Level) -> RingElement {
    let l = level.get();
    let top = match x.max_weight() {
        Some(top) if top > l => top as usize,
        _ => return x.clone(),
    };
    let window = IdealWindow::new(level, top);
    let mut dense = vec![0i64; top + 1];
    for (k, c) in x.iter() {
        dense[k as usize] = c;
    }
    window.reduce(&mut dense);
    debug_assert!(dense[l as usize + 1..].iter().all(|&c| c == 0));
    RingElement::from_terms(
        dense
            .into_iter()
            .enumerate()
            .take(l as usize + 1)
            .map(|(k, c)| (k as HighestWeight, c)),
    )
}

/// `dim Hom(V_{w_1} ⊗ ... ⊗ V_{w_r}, V_mu)`.
pub fn dim_hom_tensor(weights: &[HighestWeight], mu: HighestWeight) -> u64 {
    tensor_many(weights).coeff(mu) as u64
}

/// `dim Hom(V_{w_1} ⊗_l ... ⊗_l V_{w_r}, V_mu)` for the bracketing `tree`.
pub fn dim_hom_fusion(
    weights: &[HighestWeight],
    mu: HighestWeight,
    level: Level,
    tree: &BracketTree,
) -> Result<u64> {
    Ok(fuse_many(weights, level, tree)?.coeff(mu) as u64)
}

/// Dimensions of the weight spaces of the module whose class is `x`.
pub fn weight_multiplicities(x: &RingElement) -> Result<BTreeMap<i64, u64>> {
    let mut out = BTreeMap::new();
    for (mu, c) in x.iter() {
        if c < 0 {
            return Err(Error::NegativeCoefficient { weight: mu, coeff: c });
        }
        let mu = i64::from(mu);
        for k in (-mu..=mu).step_by(2) {
            *out.entry(k).or_insert(0) += c as u64;
        }
    }
    Ok(out)
}
