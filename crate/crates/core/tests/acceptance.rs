//! Acceptance criteria: exact identities over the stated sweeps.
//!
//! Runs as a plain binary and prints one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fusionkit_core::fusion_ring::tensor_many;
use fusionkit_core::geometry::ComponentCensus;
use fusionkit_core::module_action::weight_census;
use fusionkit_core::verify::{check_three_factor_strata, weight_vectors};
use fusionkit_core::{
    action_matrices, build_basis, component_census, count_truncated, dim_hom_fusion, dim_hom_tensor, dim_m,
    dim_z, enumerate_cm, enumerate_lcm, enumerate_trees, fuse_many, fuse_pair, isotypic_census, nl_condition,
    quotient_reduce, ring_mul, satisfies_truncation, verify_sl2, weight_multiplicities, BoxConfig,
    BracketTree, Level, RingElement,
};

const TIME_LIMIT_QUOTIENT: Duration = Duration::from_secs(5);
const TIME_LIMIT_TRUNCATED_COUNT: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn lv(l: u32) -> Level {
    Level::new(l).unwrap()
}

fn bx(ws: &[u32]) -> BoxConfig {
    BoxConfig::new(ws.to_vec()).unwrap()
}

/// `(ws, l)` with `r <= 4`, `1 <= w_i <= 4`, `max(w_i) <= l <= 6`.
fn fusion_sweep(min_rank: usize) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    for r in min_rank..=4 {
        for ws in weight_vectors(r, 1, 4) {
            let top = *ws.iter().max().unwrap();
            for l in top..=6 {
                out.push((ws.clone(), l));
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for l in 1..=10 {
        for i in 1..=l {
            for j in 1..=l {
                let reduced =
                    quotient_reduce(&ring_mul(&RingElement::simple(i), &RingElement::simple(j)), lv(l));
                let fused = fuse_pair(i, j, lv(l)).map_err(|e| e.to_string())?;
                if reduced != fused {
                    return Err(format!("i={i} j={j} l={l}: {reduced} != {fused}"));
                }
                cases += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > TIME_LIMIT_QUOTIENT {
        return Err(format!("took {elapsed:?}, limit {TIME_LIMIT_QUOTIENT:?}"));
    }
    Ok(format!("{cases} pairs in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for (ws, l) in fusion_sweep(1) {
        let tree = BracketTree::left_comb(ws.len());
        let b = bx(&ws);
        for mu in 0..=b.total() {
            let count = count_truncated(&b, mu, lv(l), &tree).map_err(|e| e.to_string())?;
            let dim = dim_hom_fusion(&ws, mu, lv(l), &tree).map_err(|e| e.to_string())?;
            if count != dim {
                return Err(format!("ws={ws:?} l={l} mu={mu}: {count} != {dim}"));
            }
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > TIME_LIMIT_TRUNCATED_COUNT {
        return Err(format!("took {elapsed:?}, limit {TIME_LIMIT_TRUNCATED_COUNT:?}"));
    }
    Ok(format!("{cases} (ws, l, mu) cases in {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let mut cases = 0;
    for (ws, l) in fusion_sweep(3) {
        let b = bx(&ws);
        let trees = enumerate_trees(ws.len()).map_err(|e| e.to_string())?;
        for mu in 0..=b.total() {
            let counts = trees
                .iter()
                .map(|t| count_truncated(&b, mu, lv(l), t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            if counts.iter().any(|&c| c != counts[0]) {
                return Err(format!("ws={ws:?} l={l} mu={mu}: {counts:?}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases across 2 and 5 bracketings"))
}

fn criterion_4() -> Outcome {
    let mut cases = 0;
    for ws in weight_vectors(3, 0, 4) {
        let top = (*ws.iter().max().unwrap()).max(1);
        for l in top..=6 {
            check_three_factor_strata(&ws, lv(l))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (ws, l) stratifications"))
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for r in 1..=4 {
        for ws in weight_vectors(r, 0, 4) {
            let b = bx(&ws);
            for mu in 0..=b.total() {
                let count = enumerate_cm(&b, mu).len() as u64;
                let dim = dim_hom_tensor(&ws, mu);
                let oracle = common::tensor_by_characters(&ws).coeff(mu) as u64;
                if count != dim || dim != oracle {
                    return Err(format!(
                        "ws={ws:?} mu={mu}: {count} matches, dim {dim}, oracle {oracle}"
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (ws, mu) cases"))
}

fn criterion_6() -> Outcome {
    let mut cases = 0;
    for (ws, l) in fusion_sweep(1) {
        let b = bx(&ws);
        for tree in enumerate_trees(ws.len()).map_err(|e| e.to_string())? {
            let ctx = format!("ws={ws:?} l={l} tree={tree}");
            let basis = build_basis(&b, lv(l), &tree).map_err(|e| e.to_string())?;
            let matrices = action_matrices(&basis);
            if !verify_sl2(&matrices) {
                return Err(format!("{ctx}: sl2 relations fail"));
            }
            let fused = fuse_many(&ws, lv(l), &tree).map_err(|e| e.to_string())?;
            let census = isotypic_census(&basis);
            if census != fused {
                return Err(format!("{ctx}: census {census} != {fused}"));
            }
            if basis.len() as i64 != fused.dim() {
                return Err(format!("{ctx}: basis size {} != {}", basis.len(), fused.dim()));
            }
            let expected = weight_multiplicities(&fused).map_err(|e| e.to_string())?;
            if weight_census(&matrices) != expected {
                return Err(format!("{ctx}: H spectrum differs from weight multiplicities"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} modules"))
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for (ws, l) in fusion_sweep(1) {
        let tree = BracketTree::left_comb(ws.len());
        for m in enumerate_lcm(&bx(&ws)) {
            let nl = nl_condition(&m, lv(l)).map_err(|e| e.to_string())?;
            let tr = satisfies_truncation(&m, lv(l), &tree).map_err(|e| e.to_string())?;
            if nl != tr {
                return Err(format!(
                    "{} l={l}: kernel condition {nl}, truncation {tr}",
                    m.canonical_key()
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} matches"))
}

fn criterion_8() -> Outcome {
    let mut cases = 0;
    for r in 1..=5 {
        for ws in weight_vectors(r, 0, 4) {
            let b = bx(&ws);
            let ComponentCensus {
                total_dim, per_mu, ..
            } = component_census(&b, None).map_err(|e| e.to_string())?;
            let product: u64 = ws.iter().map(|&w| u64::from(w) + 1).product();
            if total_dim != product {
                return Err(format!("ws={ws:?}: {total_dim} != {product}"));
            }
            let expected = tensor_many(&ws);
            let found = RingElement::from_terms(per_mu.iter().map(|(&k, &c)| (k, c as i64)));
            if found != expected {
                return Err(format!("ws={ws:?}: components {found} != {expected}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} configurations"))
}

fn criterion_9() -> Outcome {
    let mut cases = 0;
    for w in 0..=20u32 {
        for v in 0..=w {
            let m = dim_m(v, w).map_err(|e| e.to_string())?;
            let expected = 2 * u64::from(v) * u64::from(w - v);
            if m != expected {
                return Err(format!("dim_m({v},{w}) = {m} != {expected}"));
            }
            for v2 in 0..=w {
                let z = dim_z(v, v2, w).map_err(|e| e.to_string())?;
                let expected = u64::from(v * (w - v) + v2 * (w - v2));
                if z != expected {
                    return Err(format!("dim_z({v},{v2},{w}) = {z} != {expected}"));
                }
            }
            if dim_z(v, v, w).unwrap() != m {
                return Err(format!("dim_z({v},{v},{w}) != dim_m({v},{w})"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (v, w) pairs"))
}

fn criterion_10() -> Outcome {
    let mut cases = 0;
    for l in 1..=8 {
        for m in 1..=l + 1 {
            let x = RingElement::simple(l + 1 + m);
            let expected = RingElement::from_terms([(l + 1 - m, -1)]);
            let oracle = common::quotient_by_polynomials(&x, l);
            let reduced = quotient_reduce(&x, lv(l));
            if oracle != expected || reduced != expected {
                return Err(format!(
                    "l={l} m={m}: library {reduced}, oracle {oracle}, expected {expected}"
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (l, m) cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 fusion quotient identity", criterion_1),
        ("2 truncated matches count intertwiners", criterion_2),
        ("3 truncated count independent of bracketing", criterion_3),
        ("4 three-factor closed forms", criterion_4),
        ("5 matches count intertwiners", criterion_5),
        ("6 sl2-module structure", criterion_6),
        ("7 kernel/rank condition equals truncation", criterion_7),
        ("8 untruncated dimension", criterion_8),
        ("9 dimension formulas", criterion_9),
        ("10 reflection identity", criterion_10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed += 1;
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
