//! The sl2-module spanned by truncated oriented lower matches.
//!
//! Each truncation-passing match `b` with `mu` unmatched vertices spans a copy
//! of `V_mu`; its orientation with `k` down-arrows is the weight vector of
//! weight `mu - 2k`. The action is block diagonal over the underlying matches.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bracketing::{satisfies_truncation, BracketTree};
use crate::diagrams::{enumerate_lcm, orientations, BoxConfig, OrientedLowerMatch};
use crate::error::{Error, Result};
use crate::fusion_ring::{HighestWeight, Level, RingElement};

/// Square integer matrix stored by its nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.dim && col < self.dim, "index out of bounds");
        if value == 0 {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    /// Nonzero entries `(row, col, value)` in row-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.dim];
        for (r, c, v) in rhs.triples() {
            by_row[r].push((c, v));
        }
        let mut out = IntMatrix::zeros(self.dim);
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, k, a) in self.triples() {
            for &(c, b) in &by_row[k] {
                *acc.entry((r, c)).or_insert(0) += a * b;
            }
        }
        for ((r, c), v) in acc {
            out.set(r, c, v);
        }
        out
    }

    /// `self - rhs`.
    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        self.add_scaled(rhs, -1)
    }

    /// `self + factor * rhs`.
    pub fn add_scaled(&self, rhs: &IntMatrix, factor: i64) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (r, c, v) in rhs.triples() {
            let sum = out.get(r, c) + factor * v;
            out.set(r, c, sum);
        }
        out
    }

    pub fn scale(&self, factor: i64) -> IntMatrix {
        IntMatrix::zeros(self.dim).add_scaled(self, factor)
    }

    pub fn commutator(&self, rhs: &IntMatrix) -> IntMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn trace(&self) -> i64 {
        self.triples().filter(|(r, c, _)| r == c).map(|(_, _, v)| v).sum()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.triples())
    }
}

/// Contiguous run of basis elements sharing one underlying match.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub mu: HighestWeight,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.mu as usize + 1
    }
}

/// Basis of oriented truncated matches, ordered by match (canonical order)
/// and then by number of down-arrows.
#[derive(Debug, Clone)]
pub struct ModuleBasis {
    boxes: BoxConfig,
    level: Level,
    tree: BracketTree,
    elements: Vec<OrientedLowerMatch>,
    blocks: Vec<Block>,
}

impl ModuleBasis {
    pub fn boxes(&self) -> &BoxConfig {
        &self.boxes
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn tree(&self) -> &BracketTree {
        &self.tree
    }

    pub fn elements(&self) -> &[OrientedLowerMatch] {
        &self.elements
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn build_basis(boxes: &BoxConfig, level: Level, tree: &BracketTree) -> Result<ModuleBasis> {
    for &w in boxes.sizes() {
        level.check_alcove(w)?;
    }
    if tree.leaf_count() != boxes.len() {
        return Err(Error::LeafCountMismatch {
            expected: boxes.len(),
            found: tree.leaf_count(),
        });
    }
    let mut elements = Vec::new();
    let mut blocks = Vec::new();
    for m in enumerate_lcm(boxes) {
        if satisfies_truncation(&m, level, tree)? {
            blocks.push(Block {
                start: elements.len(),
                mu: m.mu(),
            });
            elements.extend(orientations(&m)?);
        }
    }
    Ok(ModuleBasis {
        boxes: boxes.clone(),
        level,
        tree: tree.clone(),
        elements,
        blocks,
    })
}

/// Matrices of `E`, `F`, `H` on a [`ModuleBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrices {
    pub e: IntMatrix,
    pub f: IntMatrix,
    pub h: IntMatrix,
    labels: Vec<(String, u32)>,
}

impl ActionMatrices {
    /// Basis labels `(canonical key, downs)` in matrix index order.
    pub fn labels(&self) -> &[(String, u32)] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }
}

impl Serialize for ActionMatrices {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Label<'a> {
            key: &'a str,
            k: u32,
        }
        let basis: Vec<Label<'_>> = self.labels.iter().map(|(key, k)| Label { key, k: *k }).collect();
        let mut s = serializer.serialize_struct("ActionMatrices", 4)?;
        s.serialize_field("basis", &basis)?;
        s.serialize_field("e", &self.e)?;
        s.serialize_field("f", &self.f)?;
        s.serialize_field("h", &self.h)?;
        s.end()
    }
}

/// Within the block of a match with `mu` unmatched vertices, on `a_k`:
/// `H a_k = (mu - 2k) a_k`, `F a_k = a_{k+1}`, `E a_k = k (mu - k + 1) a_{k-1}`.
pub fn action_matrices(basis: &ModuleBasis) -> ActionMatrices {
    let n = basis.len();
    let (mut e, mut f, mut h) = (IntMatrix::zeros(n), IntMatrix::zeros(n), IntMatrix::zeros(n));
    for block in basis.blocks() {
        let mu = i64::from(block.mu);
        for k in 0..=block.mu as usize {
            let idx = block.start + k;
            let ki = k as i64;
            h.set(idx, idx, mu - 2 * ki);
            if k < block.mu as usize {
                f.set(idx + 1, idx, 1);
            }
            if k > 0 {
                e.set(idx - 1, idx, ki * (mu - ki + 1));
            }
        }
    }
    let labels = basis
        .elements()
        .iter()
        .map(|a| (a.base().canonical_key(), a.downs()))
        .collect();
    ActionMatrices { e, f, h, labels }
}

/// `[E, F] = H`, `[H, E] = 2E`, `[H, F] = -2F`, in exact integer arithmetic.
pub fn verify_sl2(m: &ActionMatrices) -> bool {
    m.e.commutator(&m.f) == m.h
        && m.h.commutator(&m.e) == m.e.scale(2)
        && m.h.commutator(&m.f) == m.f.scale(-2)
}

/// Multiplicity of each `V_mu`: the number of blocks with `mu` unmatched vertices.
pub fn isotypic_census(basis: &ModuleBasis) -> RingElement {
    RingElement::from_terms(basis.blocks().iter().map(|b| (b.mu, 1)))
}

/// Dimensions of the eigenspaces of `H`.
pub fn weight_census(m: &ActionMatrices) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for i in 0..m.dim() {
        *out.entry(m.h.get(i, i)).or_insert(0) += 1;
    }
    out
}
