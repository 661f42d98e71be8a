//! Bounded property sweeps behind `fusionkit verify`.
//!
//! Every fusion-side quantity is computed through [`Verifier::fuse_pair`],
//! which defaults to [`fusion_ring::fuse_pair`] and can be replaced to check
//! that the sweeps catch a corrupted formula.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bracketing::{
    count_truncated, enumerate_trees, outer_curve_stratum, ra_count, ra_count_c, rb_count, rb_count_c,
    satisfies_truncation, BracketTree,
};
use crate::diagrams::{enumerate_cm, enumerate_lcm, orientations, BoxConfig, LowerMatch};
use crate::error::Result;
use crate::fusion_ring::{
    self, quotient_reduce, ring_mul, tensor_cg, tensor_many, weight_multiplicities, HighestWeight, Level,
    RingElement,
};
use crate::geometry::{component_census, dim_m, dim_z, nl_condition};
use crate::module_action::{action_matrices, build_basis, isotypic_census, verify_sl2, weight_census};

const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Ring,
    Matches,
    Bracketing,
    Module,
    Geometry,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["ring", "matches", "bracketing", "module", "geometry", "all"];
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "ring" => Suite::Ring,
            "matches" => Suite::Matches,
            "bracketing" => Suite::Bracketing,
            "module" => Suite::Module,
            "geometry" => Suite::Geometry,
            "all" => Suite::All,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

/// Sweep bounds: number of factors, largest factor weight, largest level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_rank: usize,
    pub max_weight: u32,
    pub max_level: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_rank: 4,
            max_weight: 4,
            max_level: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub properties: Vec<PropertyReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            if p.passed() {
                writeln!(f, "PASS {} ({} cases)", p.name, p.cases)?;
            } else {
                writeln!(f, "FAIL {} ({}/{} cases failed)", p.name, p.failures, p.cases)?;
                for c in &p.counterexamples {
                    writeln!(f, "  counterexample: {c}")?;
                }
            }
        }
        let failed = self.properties.iter().filter(|p| !p.passed()).count();
        write!(
            f,
            "{} properties, {} passed, {} failed",
            self.properties.len(),
            self.properties.len() - failed,
            failed
        )
    }
}

pub type FusePairFn = fn(HighestWeight, HighestWeight, Level) -> Result<RingElement>;

/// Evaluates `cases` in parallel; `check` returns a description of each failure.
fn property<T, F>(name: &str, cases: Vec<T>, check: F) -> PropertyReport
where
    T: Send + Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    let outcomes: Vec<Option<String>> = cases.par_iter().map(&check).collect();
    let failures: Vec<String> = outcomes.into_iter().flatten().collect();
    PropertyReport {
        name: name.to_string(),
        cases: cases.len() as u64,
        failures: failures.len() as u64,
        counterexamples: failures.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
    }
}

/// All weight vectors of length `r` with entries in `lo..=hi`, lexicographic.
pub fn weight_vectors(r: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    (0..r).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |w| {
                    let mut v = v.clone();
                    v.push(w);
                    v
                })
            })
            .collect()
    })
}

fn level(l: u32) -> Level {
    Level::new(l).expect("sweep levels start at 1")
}

fn boxes(ws: &[u32]) -> BoxConfig {
    BoxConfig::new(ws.to_vec()).expect("sweep configurations are nonempty")
}

/// Every partial matching of the vertices, filtered by the match axioms.
/// Independent of the stack-based enumerator; exponential, keep `w <= 10`.
pub fn brute_force_lcm(config: &BoxConfig) -> Vec<LowerMatch> {
    fn go(rest: &[u32], acc: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        go(tail, acc, out);
        for idx in 0..tail.len() {
            let mut remaining = tail.to_vec();
            let partner = remaining.remove(idx);
            acc.push((first, partner));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let vertices: Vec<u32> = (1..=config.total()).collect();
    let mut all = Vec::new();
    go(&vertices, &mut Vec::new(), &mut all);
    let mut valid: Vec<LowerMatch> = all
        .into_iter()
        .map(|arcs| LowerMatch::new(config.clone(), arcs))
        .filter(LowerMatch::validate)
        .collect();
    valid.sort();
    valid
}

pub struct Verifier {
    bounds: Bounds,
    fuse_pair: FusePairFn,
}

impl Verifier {
    pub fn new(bounds: Bounds) -> Self {
        Verifier {
            bounds,
            fuse_pair: fusion_ring::fuse_pair,
        }
    }

    /// Replaces the two-factor fusion rule used on the fusion side of every check.
    pub fn with_fuse_pair(mut self, fuse_pair: FusePairFn) -> Self {
        self.fuse_pair = fuse_pair;
        self
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn fuse_many(&self, ws: &[u32], l: Level, tree: &BracketTree) -> Result<RingElement> {
        let fuse_pair = self.fuse_pair;
        tree.try_fold(
            &mut |leaf| Ok(RingElement::simple(ws[leaf - 1])),
            &mut |x: RingElement, y: RingElement| {
                let mut out = RingElement::zero();
                for (i, a) in x.iter() {
                    for (j, b) in y.iter() {
                        for (k, c) in fuse_pair(i, j, l)?.iter() {
                            out.add_term(k, a * b * c);
                        }
                    }
                }
                Ok(out)
            },
        )
    }

    pub fn run(&self, suite: Suite) -> Report {
        let mut report = Report::default();
        let suites: &[Suite] = match suite {
            Suite::All => &[
                Suite::Ring,
                Suite::Matches,
                Suite::Bracketing,
                Suite::Module,
                Suite::Geometry,
            ],
            Suite::Ring => &[Suite::Ring],
            Suite::Matches => &[Suite::Matches],
            Suite::Bracketing => &[Suite::Bracketing],
            Suite::Module => &[Suite::Module],
            Suite::Geometry => &[Suite::Geometry],
        };
        for s in suites {
            report.properties.extend(match s {
                Suite::Ring => self.ring_suite(),
                Suite::Matches => self.matches_suite(),
                Suite::Bracketing => self.bracketing_suite(),
                Suite::Module => self.module_suite(),
                Suite::Geometry => self.geometry_suite(),
                Suite::All => unreachable!(),
            });
        }
        report
    }

    /// `(ws, l)` with `1 <= w_i <= max_weight`, `max(ws) <= l <= max_level`,
    /// `r <= max_rank`.
    fn fusion_sweep(&self, min_rank: usize) -> Vec<(Vec<u32>, u32)> {
        let b = self.bounds;
        let mut out = Vec::new();
        for r in min_rank.max(1)..=b.max_rank {
            for ws in weight_vectors(r, 1, b.max_weight) {
                let top = *ws.iter().max().unwrap();
                for l in top.max(1)..=b.max_level {
                    out.push((ws.clone(), l));
                }
            }
        }
        out
    }

    fn tensor_sweep(&self) -> Vec<Vec<u32>> {
        (1..=self.bounds.max_rank)
            .flat_map(|r| weight_vectors(r, 0, self.bounds.max_weight))
            .collect()
    }

    fn ring_suite(&self) -> Vec<PropertyReport> {
        let max_l = self.bounds.max_level;
        let fuse_pair = self.fuse_pair;
        let mut out = Vec::new();

        let pairs: Vec<(u32, u32)> = (0..=2 * max_l)
            .flat_map(|i| (0..=2 * max_l).map(move |j| (i, j)))
            .collect();
        out.push(property("ring.cg_total_dimension", pairs, |&(i, j)| {
            let dim = tensor_cg(i, j).dim();
            let expected = (i64::from(i) + 1) * (i64::from(j) + 1);
            (dim != expected).then(|| format!("i={i} j={j}: dim {dim} != {expected}"))
        }));

        let triples: Vec<(u32, u32, u32)> = (1..=max_l)
            .flat_map(|l| (0..=l).flat_map(move |i| (0..=l).map(move |j| (i, j, l))))
            .collect();
        out.push(property(
            "ring.fuse_pair_is_truncated_cg",
            triples.clone(),
            |&(i, j, l)| {
                let fused = match fuse_pair(i, j, level(l)) {
                    Ok(x) => x,
                    Err(e) => return Some(format!("i={i} j={j} l={l}: {e}")),
                };
                let cut = i64::from(i + j).min(2 * i64::from(l) - i64::from(i + j));
                let restricted =
                    RingElement::from_terms(tensor_cg(i, j).iter().filter(|&(k, _)| i64::from(k) <= cut));
                (fused != restricted).then(|| format!("i={i} j={j} l={l}: {fused} != {restricted}"))
            },
        ));

        out.push(property("ring.quotient_identity", triples, |&(i, j, l)| {
            let reduced = quotient_reduce(
                &ring_mul(&RingElement::simple(i), &RingElement::simple(j)),
                level(l),
            );
            match fuse_pair(i, j, level(l)) {
                Ok(fused) if fused == reduced => None,
                Ok(fused) => Some(format!("i={i} j={j} l={l}: quotient {reduced} != fusion {fused}")),
                Err(e) => Some(format!("i={i} j={j} l={l}: {e}")),
            }
        }));

        let reflections: Vec<(u32, u32)> = (1..=max_l)
            .flat_map(|l| (1..=l + 1).map(move |m| (l, m)))
            .collect();
        out.push(property("ring.reflection", reflections, |&(l, m)| {
            let reduced = quotient_reduce(&RingElement::simple(l + 1 + m), level(l));
            let expected = RingElement::from_terms([(l + 1 - m, -1)]);
            (reduced != expected).then(|| format!("l={l} m={m}: {reduced} != {expected}"))
        }));

        let mut cases = Vec::new();
        for l in 1..=max_l {
            for r in 1..=self.bounds.max_rank.min(4) {
                for ws in weight_vectors(r, 0, l) {
                    cases.push((ws, l));
                }
            }
        }
        out.push(property(
            "ring.fusion_bracketing_independence",
            cases,
            |(ws, l)| {
                let trees = enumerate_trees(ws.len()).ok()?;
                let first = self.fuse_many(ws, level(*l), &trees[0]);
                for t in &trees[1..] {
                    let other = self.fuse_many(ws, level(*l), t);
                    if other != first {
                        return Some(format!(
                            "ws={ws:?} l={l}: {first:?} under {} != {other:?} under {t}",
                            trees[0]
                        ));
                    }
                }
                None
            },
        ));

        let gens: Vec<(u32, u32, u32)> = weight_vectors(3, 0, max_l + 2)
            .into_iter()
            .map(|v| (v[0], v[1], v[2]))
            .collect();
        out.push(property("ring.associative_commutative", gens, |&(a, b, c)| {
            let (x, y, z) = (
                RingElement::simple(a),
                RingElement::simple(b),
                RingElement::simple(c),
            );
            let left = ring_mul(&ring_mul(&x, &y), &z);
            let right = ring_mul(&x, &ring_mul(&y, &z));
            if left != right {
                return Some(format!("({a}·{b})·{c} = {left} != {right}"));
            }
            (ring_mul(&x, &y) != ring_mul(&y, &x)).then(|| format!("{a}·{b} not commutative"))
        }));
        out
    }

    fn matches_suite(&self) -> Vec<PropertyReport> {
        let sweep = self.tensor_sweep();
        let mut out = Vec::new();
        out.push(property("matches.intertwiner_bijection", sweep.clone(), |ws| {
            let tensor = tensor_many(ws);
            let b = boxes(ws);
            for mu in 0..=b.total() {
                let count = enumerate_cm(&b, mu).len() as i64;
                if count != tensor.coeff(mu) {
                    return Some(format!(
                        "ws={ws:?} mu={mu}: {count} matches != multiplicity {}",
                        tensor.coeff(mu)
                    ));
                }
            }
            None
        }));
        out.push(property("matches.total_dimension", sweep.clone(), |ws| {
            let b = boxes(ws);
            let total: u64 = enumerate_lcm(&b).iter().map(|m| u64::from(m.mu()) + 1).sum();
            (total != b.tensor_dim()).then(|| format!("ws={ws:?}: {total} != {}", b.tensor_dim()))
        }));
        out.push(property("matches.weight_census", sweep.clone(), |ws| {
            let mut census: BTreeMap<i64, u64> = BTreeMap::new();
            for m in enumerate_lcm(&boxes(ws)) {
                for a in orientations(&m).ok()? {
                    *census.entry(a.weight()).or_insert(0) += 1;
                }
            }
            let expected = weight_multiplicities(&tensor_many(ws)).ok()?;
            (census != expected).then(|| format!("ws={ws:?}: {census:?} != {expected:?}"))
        }));
        out.push(property("matches.no_nested_unmatched", sweep.clone(), |ws| {
            enumerate_lcm(&boxes(ws)).into_iter().find_map(|m| {
                let nested = m
                    .unmatched()
                    .into_iter()
                    .any(|v| m.arcs().iter().any(|&(p, q)| p < v && v < q));
                nested.then(|| m.canonical_key())
            })
        }));
        let small: Vec<Vec<u32>> = sweep
            .into_iter()
            .filter(|ws| ws.iter().sum::<u32>() <= 10)
            .collect();
        out.push(property("matches.brute_force_equivalence", small, |ws| {
            let b = boxes(ws);
            let fast = enumerate_lcm(&b);
            let slow = brute_force_lcm(&b);
            (fast != slow).then(|| {
                format!(
                    "ws={ws:?}: {} enumerated vs {} by brute force",
                    fast.len(),
                    slow.len()
                )
            })
        }));
        out
    }

    fn bracketing_suite(&self) -> Vec<PropertyReport> {
        let mut out = Vec::new();
        let sweep = self.fusion_sweep(1);

        out.push(property(
            "bracketing.truncated_count_equals_fusion",
            sweep.clone(),
            |(ws, l)| {
                let b = boxes(ws);
                let tree = BracketTree::left_comb(ws.len());
                let fused = match self.fuse_many(ws, level(*l), &tree) {
                    Ok(x) => x,
                    Err(e) => return Some(format!("ws={ws:?} l={l}: {e}")),
                };
                for mu in 0..=b.total() {
                    let count = count_truncated(&b, mu, level(*l), &tree).ok()? as i64;
                    if count != fused.coeff(mu) {
                        return Some(format!(
                            "ws={ws:?} l={l} mu={mu}: {count} truncated matches != fusion multiplicity {}",
                            fused.coeff(mu)
                        ));
                    }
                }
                None
            },
        ));

        let multi: Vec<_> = sweep.iter().filter(|(ws, _)| ws.len() >= 3).cloned().collect();
        out.push(property(
            "bracketing.count_independent_of_bracketing",
            multi,
            |(ws, l)| {
                let b = boxes(ws);
                let trees = enumerate_trees(ws.len()).ok()?;
                for mu in 0..=b.total() {
                    let counts: Vec<u64> = trees
                        .iter()
                        .map(|t| count_truncated(&b, mu, level(*l), t).unwrap_or(u64::MAX))
                        .collect();
                    if counts.iter().any(|&c| c != counts[0]) {
                        return Some(format!("ws={ws:?} l={l} mu={mu}: counts {counts:?} across trees"));
                    }
                }
                None
            },
        ));

        let three: Vec<_> = sweep.iter().filter(|(ws, _)| ws.len() == 3).cloned().collect();
        out.push(property(
            "bracketing.three_factor_closed_forms",
            three,
            |(ws, l)| check_three_factor_strata(ws, level(*l)).err(),
        ));

        let two: Vec<_> = sweep.iter().filter(|(ws, _)| ws.len() == 2).cloned().collect();
        out.push(property("bracketing.two_factor_rule", two, |(ws, l)| {
            let tree = BracketTree::left_comb(2);
            enumerate_lcm(&boxes(ws)).into_iter().find_map(|m| {
                let lhs = satisfies_truncation(&m, level(*l), &tree).ok()?;
                let rhs = ws[0] + ws[1] + m.mu() <= 2 * l;
                (lhs != rhs).then(|| {
                    format!(
                        "{} l={l}: predicate {lhs} vs curve count rule {rhs}",
                        m.canonical_key()
                    )
                })
            })
        }));

        out.push(property("bracketing.monotone_in_level", sweep, |(ws, l)| {
            let trees = enumerate_trees(ws.len()).ok()?;
            let matches = enumerate_lcm(&boxes(ws));
            for t in &trees {
                for m in &matches {
                    if satisfies_truncation(m, level(*l), t).ok()?
                        && !satisfies_truncation(m, level(l + 1), t).ok()?
                    {
                        return Some(format!(
                            "{} under {t}: passes at l={l} but not at l={}",
                            m.canonical_key(),
                            l + 1
                        ));
                    }
                }
            }
            None
        }));
        out
    }

    fn module_suite(&self) -> Vec<PropertyReport> {
        let sweep = self.fusion_sweep(1);
        vec![property("module.fusion_module_structure", sweep, |(ws, l)| {
            let b = boxes(ws);
            let l = level(*l);
            let trees = enumerate_trees(ws.len()).ok()?;
            for tree in &trees {
                let basis = match build_basis(&b, l, tree) {
                    Ok(x) => x,
                    Err(e) => return Some(format!("ws={ws:?} l={l}: {e}")),
                };
                let matrices = action_matrices(&basis);
                let ctx = || format!("ws={ws:?} l={l} tree={tree}");
                if !verify_sl2(&matrices) {
                    return Some(format!("{}: sl2 relations fail", ctx()));
                }
                let fused = match self.fuse_many(ws, l, tree) {
                    Ok(x) => x,
                    Err(e) => return Some(format!("{}: {e}", ctx())),
                };
                let census = isotypic_census(&basis);
                if census != fused {
                    return Some(format!("{}: isotypic census {census} != fusion {fused}", ctx()));
                }
                if basis.len() as i64 != fused.dim() {
                    return Some(format!(
                        "{}: basis size {} != dim {}",
                        ctx(),
                        basis.len(),
                        fused.dim()
                    ));
                }
                let expected = weight_multiplicities(&fused).ok()?;
                let weights = weight_census(&matrices);
                if weights != expected {
                    return Some(format!("{}: H spectrum {weights:?} != {expected:?}", ctx()));
                }
            }
            None
        })]
    }

    fn geometry_suite(&self) -> Vec<PropertyReport> {
        let mut out = Vec::new();
        let sweep = self.fusion_sweep(1);
        out.push(property(
            "geometry.kernel_rank_condition_is_truncation",
            sweep.clone(),
            |(ws, l)| {
                let tree = BracketTree::left_comb(ws.len());
                enumerate_lcm(&boxes(ws)).into_iter().find_map(|m| {
                    let nl = nl_condition(&m, level(*l)).ok()?;
                    let tr = satisfies_truncation(&m, level(*l), &tree).ok()?;
                    (nl != tr).then(|| {
                        format!(
                            "{} l={l}: kernel condition {nl} vs truncation {tr}",
                            m.canonical_key()
                        )
                    })
                })
            },
        ));
        out.push(property("geometry.census_matches_fusion", sweep, |(ws, l)| {
            let census = component_census(&boxes(ws), Some(level(*l))).ok()?;
            let fused = match self.fuse_many(ws, level(*l), &BracketTree::left_comb(ws.len())) {
                Ok(x) => x,
                Err(e) => return Some(format!("ws={ws:?} l={l}: {e}")),
            };
            let per_mu = RingElement::from_terms(census.per_mu.iter().map(|(&k, &c)| (k, c as i64)));
            if per_mu != fused || census.total_dim as i64 != fused.dim() {
                return Some(format!(
                    "ws={ws:?} l={l}: components {per_mu} (dim {}) != fusion {fused}",
                    census.total_dim
                ));
            }
            None
        }));
        let untruncated: Vec<Vec<u32>> = (1..=self.bounds.max_rank + 1)
            .flat_map(|r| weight_vectors(r, 0, self.bounds.max_weight))
            .collect();
        out.push(property("geometry.untruncated_dimension", untruncated, |ws| {
            let b = boxes(ws);
            let census = component_census(&b, None).ok()?;
            (census.total_dim != b.tensor_dim())
                .then(|| format!("ws={ws:?}: {} != {}", census.total_dim, b.tensor_dim()))
        }));
        let dims: Vec<(u32, u32)> = (0..=20).flat_map(|w| (0..=w).map(move |v| (v, w))).collect();
        out.push(property("geometry.dimension_formulas", dims, |&(v, w)| {
            let m = dim_m(v, w).ok()?;
            let z = dim_z(v, v, w).ok()?;
            let expected = 2 * u64::from(v) * u64::from(w - v);
            (m != expected || z != m)
                .then(|| format!("v={v} w={w}: dim_m {m}, dim_z {z}, expected {expected}"))
        }));
        out
    }
}

/// Compares three-factor stratified enumeration against the closed forms.
///
/// Strata with no outer curves are indexed by the number `n` of lower curves;
/// strata with `c >= 1` outer curves must have every middle vertex matched.
pub fn check_three_factor_strata(ws: &[u32], l: Level) -> std::result::Result<(), String> {
    let (w1, w2, w3) = (ws[0], ws[1], ws[2]);
    let b = boxes(ws);
    let left = BracketTree::left_comb(3);
    let right = BracketTree::right_comb(3);
    let mut left_counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    let mut right_counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for m in enumerate_lcm(&b) {
        let stratum = outer_curve_stratum(&m).expect("three boxes");
        if satisfies_truncation(&m, l, &left).map_err(|e| e.to_string())? {
            *left_counts.entry(stratum).or_insert(0) += 1;
        }
        if satisfies_truncation(&m, l, &right).map_err(|e| e.to_string())? {
            *right_counts.entry(stratum).or_insert(0) += 1;
        }
    }
    let get = |map: &BTreeMap<(u32, u32), u64>, key| map.get(&key).copied().unwrap_or(0);
    for n in 0..=w1 + w2 + w3 {
        let (ra, rb) = (ra_count(w1, w2, w3, l, n), rb_count(w1, w2, w3, l, n));
        let (ea, eb) = (get(&left_counts, (0, n)), get(&right_counts, (0, n)));
        if ra != rb || ra != ea || rb != eb {
            return Err(format!(
                "ws={ws:?} l={l} c=0 n={n}: r_a={ra} r_b={rb}, enumerated {ea} / {eb}"
            ));
        }
    }
    for c in 1..=w1.min(w3) {
        let ci = i64::from(c);
        let ra = ra_count_c(w1, w2, w3, l, ci).map_err(|e| e.to_string())?;
        let rb = rb_count_c(w1, w2, w3, l, ci).map_err(|e| e.to_string())?;
        for n in 0..=w1 + w2 + w3 {
            let (ea, eb) = (get(&left_counts, (c, n)), get(&right_counts, (c, n)));
            let (xa, xb) = if n == w2 { (ra, rb) } else { (0, 0) };
            if ra != rb || ea != xa || eb != xb {
                return Err(format!(
                    "ws={ws:?} l={l} c={c} n={n}: r_a={ra} r_b={rb}, expected {xa} / {xb}, enumerated {ea} / {eb}"
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_rank: 3,
            max_weight: 2,
            max_level: 3,
        }
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("rings".parse::<Suite>().is_err());
    }

    #[test]
    fn small_sweep_passes() {
        let report = Verifier::new(small()).run(Suite::All);
        assert!(report.passed(), "{report}");
        assert!(report.properties.iter().all(|p| p.cases > 0), "{report}");
    }

    fn off_by_one(i: u32, j: u32, l: Level) -> Result<RingElement> {
        // truncation bound shifted up by one step
        let top = (i + j).min(2 * l.get() + 2 - i - j);
        Ok(RingElement::from_terms(
            (i.abs_diff(j)..=top).step_by(2).map(|k| (k, 1)),
        ))
    }

    #[test]
    fn corrupted_formula_is_caught() {
        let report = Verifier::new(small()).with_fuse_pair(off_by_one).run(Suite::All);
        assert!(!report.passed());
        let failed: Vec<&str> = report
            .properties
            .iter()
            .filter(|p| !p.passed())
            .map(|p| p.name.as_str())
            .collect();
        assert!(failed.contains(&"ring.quotient_identity"));
        assert!(failed.contains(&"bracketing.truncated_count_equals_fusion"));
        assert!(failed.contains(&"module.fusion_module_structure"));
        assert!(failed.contains(&"geometry.census_matches_fusion"));
        let text = report.to_string();
        assert!(text.contains("counterexample: i=1 j=1 l=1"), "{text}");
    }

    #[test]
    fn weight_vector_enumeration() {
        assert_eq!(
            weight_vectors(2, 0, 1),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(weight_vectors(0, 0, 3), vec![Vec::<u32>::new()]);
    }
}
