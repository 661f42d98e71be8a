//! Combinatorial shadows of the quiver-variety side: dimension formulas,
//! highest weight from the rank of the nilpotent, and the kernel/rank
//! inequalities cutting out the fusion variety.
//!
//! A stratum is identified with its lower crossingless match; the kernel
//! dimension of the nilpotent restricted to the first `i` summands is the
//! number of vertices there minus the arcs closing there.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bracketing::{satisfies_truncation, BracketTree};
use crate::diagrams::{arc_census, enumerate_lcm, BoxConfig, LowerMatch};
use crate::error::{Error, Result};
use crate::fusion_ring::{HighestWeight, Level};

/// Dimensions `(v, w)` of a subspace and its ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimPair {
    v: u32,
    w: u32,
}

impl DimPair {
    pub fn new(v: u32, w: u32) -> Result<Self> {
        if v > w {
            Err(Error::DimensionOutOfRange { v, w })
        } else {
            Ok(DimPair { v, w })
        }
    }

    pub fn v(self) -> u32 {
        self.v
    }

    pub fn w(self) -> u32 {
        self.w
    }

    /// `dim Gr(v, w) = v (w - v)`.
    pub fn grassmannian_dim(self) -> u64 {
        u64::from(self.v) * u64::from(self.w - self.v)
    }
}

/// Dimension of the cotangent bundle of `Gr(v, w)`: `2 v (w - v)`.
pub fn dim_m(v: u32, w: u32) -> Result<u64> {
    Ok(2 * DimPair::new(v, w)?.grassmannian_dim())
}

/// `v1 (w - v1) + v2 (w - v2)`.
pub fn dim_z(v1: u32, v2: u32, w: u32) -> Result<u64> {
    Ok(DimPair::new(v1, w)?.grassmannian_dim() + DimPair::new(v2, w)?.grassmannian_dim())
}

/// Highest weight `w - 2u` of the module attached to a nilpotent of rank `u`.
pub fn hw_from_rank(w: u32, rank: u32) -> Result<HighestWeight> {
    if 2 * u64::from(rank) > u64::from(w) {
        Err(Error::RankTooLarge { weight: w, rank })
    } else {
        Ok(w - 2 * rank)
    }
}

/// Prefix kernel dimensions and ranks; index `i` covers boxes `1..=i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelProfile {
    pub dimker: Vec<u32>,
    pub rank: Vec<u32>,
}

pub fn kernel_profile(m: &LowerMatch) -> Result<KernelProfile> {
    let census = arc_census(m)?;
    let prefix_dims = m.boxes().sizes().iter().scan(0, |acc, &w| {
        *acc += w;
        Some(*acc)
    });
    let dimker = prefix_dims.zip(&census.c).map(|(d, &c)| d - c).collect();
    Ok(KernelProfile {
        dimker,
        rank: census.c,
    })
}

/// `dimker[i] <= l + rank[i - 1]` for every prefix, with `rank[-1] = 0`.
pub fn nl_condition(m: &LowerMatch, level: Level) -> Result<bool> {
    let profile = kernel_profile(m)?;
    let l = level.get();
    Ok(profile.dimker.iter().enumerate().all(|(i, &dk)| {
        let prev_rank = if i == 0 { 0 } else { profile.rank[i - 1] };
        dk <= l + prev_rank
    }))
}

/// Irreducible components of the (possibly truncated) tensor product variety,
/// labelled by lower matches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCensus {
    pub per_mu: BTreeMap<HighestWeight, u64>,
    pub total_components: u64,
    pub total_dim: u64,
    pub labels: Vec<String>,
}

/// Components for the default (left comb) bracketing; `None` means no truncation.
pub fn component_census(boxes: &BoxConfig, level: Option<Level>) -> Result<ComponentCensus> {
    let tree = BracketTree::left_comb(boxes.len());
    if let Some(level) = level {
        for &w in boxes.sizes() {
            level.check_alcove(w)?;
        }
    }
    let mut per_mu = BTreeMap::new();
    let mut labels = Vec::new();
    let mut total_dim = 0;
    for m in enumerate_lcm(boxes) {
        let keep = match level {
            Some(level) => satisfies_truncation(&m, level, &tree)?,
            None => true,
        };
        if keep {
            *per_mu.entry(m.mu()).or_insert(0) += 1;
            total_dim += u64::from(m.mu()) + 1;
            labels.push(m.canonical_key());
        }
    }
    Ok(ComponentCensus {
        total_components: labels.len() as u64,
        per_mu,
        total_dim,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(l: u32) -> Level {
        Level::new(l).unwrap()
    }

    fn lm(sizes: &[u32], arcs: &[(u32, u32)]) -> LowerMatch {
        LowerMatch::new(BoxConfig::new(sizes.to_vec()).unwrap(), arcs.to_vec())
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(dim_m(1, 2).unwrap(), 2);
        assert_eq!(dim_m(0, 7).unwrap(), 0);
        assert_eq!(dim_m(3, 2), Err(Error::DimensionOutOfRange { v: 3, w: 2 }));
        assert_eq!(dim_z(1, 1, 2).unwrap(), 2);
        assert_eq!(dim_z(0, 0, 5).unwrap(), 0);
        assert!(dim_z(1, 6, 5).is_err());
        for w in 0..=8 {
            for v in 0..=w {
                let gr = DimPair::new(v, w).unwrap().grassmannian_dim();
                assert_eq!(dim_m(v, w).unwrap(), 2 * gr);
                assert_eq!(dim_z(v, v, w).unwrap(), dim_m(v, w).unwrap());
            }
        }
    }

    #[test]
    fn rank_to_weight() {
        assert_eq!(hw_from_rank(4, 1).unwrap(), 2);
        assert_eq!(hw_from_rank(5, 0).unwrap(), 5);
        assert_eq!(
            hw_from_rank(3, 2),
            Err(Error::RankTooLarge { weight: 3, rank: 2 })
        );
    }

    #[test]
    fn kernel_profiles() {
        let p = kernel_profile(&lm(&[1, 1, 1], &[(2, 3)])).unwrap();
        assert_eq!(p.dimker, vec![1, 2, 2]);
        assert_eq!(p.rank, vec![0, 0, 1]);
        let p = kernel_profile(&lm(&[2, 1, 3], &[])).unwrap();
        assert_eq!(p.dimker, vec![2, 3, 6]);
        assert_eq!(p.rank, vec![0, 0, 0]);
        let p = kernel_profile(&lm(&[3, 3], &[(1, 6), (2, 5), (3, 4)])).unwrap();
        assert_eq!(p.dimker, vec![3, 3]);
        assert_eq!(p.rank, vec![0, 3]);
        assert!(kernel_profile(&lm(&[2], &[(1, 2)])).is_err());
    }

    #[test]
    fn nl_examples() {
        assert!(nl_condition(&lm(&[1, 1], &[(1, 2)]), lv(1)).unwrap());
        assert!(!nl_condition(&lm(&[1, 1], &[]), lv(1)).unwrap());
        assert!(!nl_condition(&lm(&[1, 1, 1], &[(2, 3)]), lv(1)).unwrap());
    }

    #[test]
    fn census_examples() {
        let b = |s: &[u32]| BoxConfig::new(s.to_vec()).unwrap();
        let c = component_census(&b(&[1, 1]), Some(lv(1))).unwrap();
        assert_eq!(c.per_mu, BTreeMap::from([(0, 1)]));
        assert_eq!(c.total_dim, 1);
        assert_eq!(c.labels, vec!["1,1|1-2".to_string()]);
        let c = component_census(&b(&[1, 1]), None).unwrap();
        assert_eq!(c.per_mu, BTreeMap::from([(0, 1), (2, 1)]));
        assert_eq!(c.total_dim, 4);
        assert_eq!(c.total_components, 2);
        assert_eq!(component_census(&b(&[2, 2]), Some(lv(2))).unwrap().total_dim, 1);
        assert!(component_census(&b(&[3, 1]), Some(lv(2))).is_err());
    }

    #[test]
    fn two_factor_highest_weights() {
        for l in 1..=6 {
            for w1 in 0..=l {
                for w2 in 0..=l {
                    let c = component_census(&BoxConfig::new(vec![w1, w2]).unwrap(), Some(lv(l))).unwrap();
                    for mu in 0..=w1 + w2 {
                        let top = (w1 + w2).min((2 * l).saturating_sub(w1 + w2));
                        let expected = u64::from(
                            w1.abs_diff(w2) <= mu && mu <= top && (mu + w1 + w2) % 2 == 0 && w1 + w2 <= 2 * l,
                        );
                        assert_eq!(
                            c.per_mu.get(&mu).copied().unwrap_or(0),
                            expected,
                            "{w1} {w2} {l} {mu}"
                        );
                    }
                }
            }
        }
    }
}
