use std::fmt::Write;

use anyhow::{anyhow, Result};
use fusionkit_core::fusion_ring::tensor_many;
use fusionkit_core::verify::{Bounds, Suite, Verifier};
use fusionkit_core::{
    action_matrices, build_basis, component_census, enumerate_lcm, fuse_many, fuse_pair, isotypic_census,
    orientations, quotient_reduce, satisfies_truncation, verify_sl2, BoxConfig, BracketTree, HighestWeight,
    Level, LowerMatch, OrientedLowerMatch, RingElement,
};
use serde::Serialize;

use crate::render;
use crate::{
    ComponentsArgs, Format, FuseArgs, LevelArg, MatchesArgs, ModuleArgs, Outcome, RenderArgs, TensorArgs,
    UsageError, VerifyArgs,
};

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(usage(
            format!("--format {format:?} is not available for {command}").to_lowercase(),
        ))
    }
}

fn fusion_level(level: LevelArg, command: &str) -> Result<Level> {
    level
        .0
        .ok_or_else(|| usage(format!("{command} needs an integer --level")))
}

fn tree(bracketing: Option<&str>, r: usize) -> Result<BracketTree> {
    match bracketing {
        Some(text) => BracketTree::parse(text, r).map_err(|e| usage(format!("--bracketing: {e}"))),
        None => Ok(BracketTree::left_comb(r)),
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn ok(body: String) -> Result<Outcome> {
    Ok(Outcome { body, ok: true })
}

fn ring_output(x: &RingElement, format: Format) -> Result<Outcome> {
    match format {
        Format::Json => ok(json(x)?),
        _ => ok(x.to_string()),
    }
}

pub fn fuse(a: &FuseArgs) -> Result<Outcome> {
    require_format(a.output.format, &[Format::Text, Format::Json], "fuse")?;
    let level = fusion_level(a.level, "fuse")?;
    let tree = tree(a.bracketing.as_deref(), a.weights.len())?;
    ring_output(&fuse_many(&a.weights, level, &tree)?, a.output.format)
}

pub fn tensor(a: &TensorArgs) -> Result<Outcome> {
    require_format(a.output.format, &[Format::Text, Format::Json], "tensor")?;
    let product = tensor_many(&a.weights);
    let result = match a.level.and_then(|l| l.0) {
        Some(level) => quotient_reduce(&product, level),
        None => product,
    };
    ring_output(&result, a.output.format)
}

/// Shared selection logic of `matches` and `render --index`.
fn select(
    boxes: &[u32],
    mu: Option<HighestWeight>,
    level: Option<LevelArg>,
    bracketing: Option<&str>,
) -> Result<Vec<LowerMatch>> {
    let config = BoxConfig::new(boxes.to_vec())?;
    let truncation = match level.and_then(|l| l.0) {
        Some(level) => {
            for &w in boxes {
                level.check_alcove(w)?;
            }
            Some((level, tree(bracketing, boxes.len())?))
        }
        None => {
            if bracketing.is_some() {
                tree(bracketing, boxes.len())?;
            }
            None
        }
    };
    let mut out = Vec::new();
    for m in enumerate_lcm(&config) {
        if mu.is_some_and(|mu| m.mu() != mu) {
            continue;
        }
        if let Some((level, tree)) = &truncation {
            if !satisfies_truncation(&m, *level, tree)? {
                continue;
            }
        }
        out.push(m);
    }
    Ok(out)
}

pub fn matches(a: &MatchesArgs) -> Result<Outcome> {
    require_format(a.output.format, &[Format::Text, Format::Json], "matches")?;
    let selected = select(&a.boxes, a.mu, a.level, a.bracketing.as_deref())?;
    let body = if a.oriented {
        let mut all: Vec<OrientedLowerMatch> = Vec::new();
        for m in &selected {
            all.extend(orientations(m)?);
        }
        match a.output.format {
            Format::Json => json(&all)?,
            _ => all.iter().fold(String::new(), |mut s, o| {
                let m = o.base();
                let _ = writeln!(
                    s,
                    "{}\tmu={}\tk={}\tweight={}",
                    m.canonical_key(),
                    m.mu(),
                    o.downs(),
                    o.weight()
                );
                s
            }),
        }
    } else {
        match a.output.format {
            Format::Json => json(&selected)?,
            _ => selected.iter().fold(String::new(), |mut s, m| {
                let _ = writeln!(s, "{}\tmu={}", m.canonical_key(), m.mu());
                s
            }),
        }
    };
    ok(body)
}

pub fn components(a: &ComponentsArgs) -> Result<Outcome> {
    require_format(a.output.format, &[Format::Text, Format::Json], "components")?;
    let config = BoxConfig::new(a.boxes.clone())?;
    let census = component_census(&config, a.level.and_then(|l| l.0))?;
    if a.output.format == Format::Json {
        return ok(json(&census)?);
    }
    let mut s = String::new();
    writeln!(s, "total_components: {}", census.total_components)?;
    writeln!(s, "total_dim: {}", census.total_dim)?;
    for (mu, count) in &census.per_mu {
        writeln!(s, "mu={mu}: {count}")?;
    }
    for label in &census.labels {
        writeln!(s, "{label}")?;
    }
    ok(s)
}

/// Fusion rule evaluated one level too high: wrong whenever `i + j > l`.
fn off_by_one(i: HighestWeight, j: HighestWeight, level: Level) -> fusionkit_core::Result<RingElement> {
    fuse_pair(i, j, Level::new(level.get() + 1)?)
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    require_format(a.output.format, &[Format::Text, Format::Json], "verify")?;
    let suite: Suite = a.suite.parse().map_err(usage)?;
    let bounds = Bounds {
        max_rank: a.max_rank as usize,
        max_weight: a.max_weight,
        max_level: a.max_level,
    };
    let mut verifier = Verifier::new(bounds);
    if a.inject_fault.as_deref() == Some("off-by-one") {
        verifier = verifier.with_fuse_pair(off_by_one);
    }
    let report = verifier.run(suite);
    let body = match a.output.format {
        Format::Json => json(&report)?,
        _ => report.to_string(),
    };
    Ok(Outcome {
        body,
        ok: report.passed(),
    })
}

pub fn render(a: &RenderArgs) -> Result<Outcome> {
    let m = match (&a.key, a.index) {
        (Some(key), _) => LowerMatch::from_key(key)?,
        (None, Some(index)) => {
            let selected = select(&a.boxes, a.mu, a.level, a.bracketing.as_deref())?;
            let count = selected.len();
            selected
                .into_iter()
                .nth(index)
                .ok_or_else(|| anyhow!("index {index} out of range: the listing has {count} matches"))?
        }
        (None, None) => return Err(usage("render needs --key or --boxes with --index")),
    };
    let oriented = match (a.oriented, a.downs) {
        (_, Some(k)) => Some(OrientedLowerMatch::new(m.clone(), k)?),
        (true, None) => Some(OrientedLowerMatch::new(m.clone(), 0)?),
        (false, None) => None,
    };
    let downs = oriented.as_ref().map(|o| o.downs());
    let body = match a.output.format {
        Format::Text => render::ascii(&m, downs),
        Format::Svg => render::svg(&m, downs),
        Format::Json => match &oriented {
            Some(o) => json(o)?,
            None => json(&m)?,
        },
    };
    ok(body)
}

pub fn module(a: &ModuleArgs) -> Result<Outcome> {
    require_format(a.output.format, &[Format::Text, Format::Json], "module")?;
    let level = fusion_level(a.level, "module")?;
    let config = BoxConfig::new(a.boxes.clone())?;
    let tree = tree(a.bracketing.as_deref(), a.boxes.len())?;
    let basis = build_basis(&config, level, &tree)?;
    let matrices = action_matrices(&basis);
    let relations = verify_sl2(&matrices);
    if a.output.format == Format::Json {
        return Ok(Outcome {
            body: json(&matrices)?,
            ok: relations,
        });
    }
    let mut s = String::new();
    writeln!(s, "dim: {}", basis.len())?;
    writeln!(s, "decomposition: {}", isotypic_census(&basis))?;
    writeln!(s, "sl2 relations: {}", if relations { "hold" } else { "FAIL" })?;
    for o in basis.elements() {
        writeln!(
            s,
            "{}\tk={}\tweight={}",
            o.base().canonical_key(),
            o.downs(),
            o.weight()
        )?;
    }
    Ok(Outcome {
        body: s,
        ok: relations,
    })
}
