//! Lower crossingless matches and their oriented variants.
//!
//! Vertices are numbered `1..=w` from left to right across all boxes. A lower
//! match pairs some vertices by noncrossing arcs between distinct boxes; the
//! remaining (unmatched) vertices stand for middle curves to an implicit upper
//! box, so none of them may sit underneath an arc.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fusion_ring::HighestWeight;

/// Sizes `w_1, ..., w_r` of the boxes on the lower line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxConfig {
    sizes: Vec<u32>,
    // box_of[p - 1] is the 1-based box holding vertex p
    box_of: Vec<usize>,
}

impl BoxConfig {
    pub fn new(sizes: Vec<u32>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::NoBoxes);
        }
        let box_of = sizes
            .iter()
            .enumerate()
            .flat_map(|(b, &w)| std::iter::repeat_n(b + 1, w as usize))
            .collect();
        Ok(BoxConfig { sizes, box_of })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// Number of boxes `r`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Total number of vertices `w`.
    pub fn total(&self) -> u32 {
        self.box_of.len() as u32
    }

    /// 1-based box index of the 1-based vertex `p`.
    ///
    /// # Panics
    /// If `p` is not a vertex.
    pub fn box_of(&self, p: u32) -> usize {
        self.box_of[p as usize - 1]
    }

    /// Dimension of the full tensor product, `prod (w_i + 1)`.
    pub fn tensor_dim(&self) -> u64 {
        self.sizes.iter().map(|&w| u64::from(w) + 1).product()
    }
}

/// A lower crossingless match: boxes plus arcs `(p, q)`, `p < q`, sorted by `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LowerMatch {
    boxes: BoxConfig,
    arcs: Vec<(u32, u32)>,
}

impl LowerMatch {
    /// Normalizes arc orientation and order; does not validate.
    pub fn new(boxes: BoxConfig, arcs: Vec<(u32, u32)>) -> Self {
        let mut arcs: Vec<_> = arcs
            .into_iter()
            .map(|(p, q)| if p <= q { (p, q) } else { (q, p) })
            .collect();
        arcs.sort_unstable();
        LowerMatch { boxes, arcs }
    }

    /// Like [`LowerMatch::new`] but rejects matches failing [`LowerMatch::validate`].
    pub fn checked(boxes: BoxConfig, arcs: Vec<(u32, u32)>) -> Result<Self> {
        let m = Self::new(boxes, arcs);
        if m.validate() {
            Ok(m)
        } else {
            Err(Error::InvalidMatch(m.canonical_key()))
        }
    }

    pub fn boxes(&self) -> &BoxConfig {
        &self.boxes
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    /// Number of unmatched vertices, the highest weight of the match.
    pub fn mu(&self) -> HighestWeight {
        self.boxes.total() - 2 * self.arcs.len() as u32
    }

    /// Unmatched vertices in increasing order.
    pub fn unmatched(&self) -> Vec<u32> {
        let matched: HashSet<u32> = self.arcs.iter().flat_map(|&(p, q)| [p, q]).collect();
        (1..=self.boxes.total())
            .filter(|p| !matched.contains(p))
            .collect()
    }

    pub fn validate(&self) -> bool {
        let w = self.boxes.total();
        let mut seen = vec![false; w as usize + 1];
        for &(p, q) in &self.arcs {
            if p == 0 || q > w || p >= q {
                return false;
            }
            for v in [p, q] {
                if std::mem::replace(&mut seen[v as usize], true) {
                    return false;
                }
            }
            if self.boxes.box_of(p) == self.boxes.box_of(q) {
                return false;
            }
        }
        for (idx, &(_, q)) in self.arcs.iter().enumerate() {
            for &(a, b) in &self.arcs[idx + 1..] {
                // arcs are sorted so p < a
                if a < q && q < b {
                    return false;
                }
            }
        }
        (1..=w)
            .filter(|&v| !seen[v as usize])
            .all(|v| !self.arcs.iter().any(|&(p, q)| p < v && v < q))
    }

    /// `"w1,w2,...|p1-q1,p2-q2,..."`.
    pub fn canonical_key(&self) -> String {
        let mut key = String::new();
        for (idx, w) in self.boxes.sizes().iter().enumerate() {
            if idx > 0 {
                key.push(',');
            }
            write!(key, "{w}").unwrap();
        }
        key.push('|');
        for (idx, (p, q)) in self.arcs.iter().enumerate() {
            if idx > 0 {
                key.push(',');
            }
            write!(key, "{p}-{q}").unwrap();
        }
        key
    }

    /// Inverse of [`LowerMatch::canonical_key`]; the result is validated.
    pub fn from_key(key: &str) -> Result<Self> {
        let bad = || Error::InvalidMatch(format!("malformed key {key:?}"));
        let (boxes, arcs) = key.split_once('|').ok_or_else(bad)?;
        let sizes = boxes
            .split(',')
            .map(|w| w.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let arcs = if arcs.trim().is_empty() {
            Vec::new()
        } else {
            arcs.split(',')
                .map(|arc| {
                    let (p, q) = arc.split_once('-').ok_or_else(bad)?;
                    Ok((
                        p.trim().parse().map_err(|_| bad())?,
                        q.trim().parse().map_err(|_| bad())?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::checked(BoxConfig::new(sizes)?, arcs)
    }
}

impl PartialOrd for LowerMatch {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LowerMatch {
    /// Canonical order: by arc list, then by boxes.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.arcs
            .cmp(&other.arcs)
            .then_with(|| self.boxes.sizes.cmp(&other.boxes.sizes))
    }
}

#[derive(Serialize, Deserialize)]
struct LowerMatchRepr {
    boxes: Vec<u32>,
    arcs: Vec<[u32; 2]>,
    mu: HighestWeight,
}

impl Serialize for LowerMatch {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LowerMatchRepr {
            boxes: self.boxes.sizes.clone(),
            arcs: self.arcs.iter().map(|&(p, q)| [p, q]).collect(),
            mu: self.mu(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LowerMatch {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = LowerMatchRepr::deserialize(deserializer)?;
        let boxes = BoxConfig::new(repr.boxes).map_err(D::Error::custom)?;
        let m = LowerMatch::checked(boxes, repr.arcs.into_iter().map(|[p, q]| (p, q)).collect())
            .map_err(D::Error::custom)?;
        if m.mu() != repr.mu {
            return Err(D::Error::custom(format!(
                "mu {} does not match the {} unmatched vertices",
                repr.mu,
                m.mu()
            )));
        }
        Ok(m)
    }
}

/// All lower crossingless matches on `boxes`, in canonical order.
pub fn enumerate_lcm(boxes: &BoxConfig) -> Vec<LowerMatch> {
    struct Search<'a> {
        boxes: &'a BoxConfig,
        open: Vec<u32>,
        arcs: Vec<(u32, u32)>,
        out: Vec<Vec<(u32, u32)>>,
    }

    impl Search<'_> {
        fn visit(&mut self, p: u32) {
            let w = self.boxes.total();
            if p > w {
                if self.open.is_empty() {
                    self.out.push(self.arcs.clone());
                }
                return;
            }
            // every open arc still needs a right end point
            if self.open.len() as u32 > w - p + 1 {
                return;
            }
            if self.open.is_empty() {
                self.visit(p + 1);
            }
            if let Some(&top) = self.open.last() {
                if self.boxes.box_of(top) != self.boxes.box_of(p) {
                    self.open.pop();
                    self.arcs.push((top, p));
                    self.visit(p + 1);
                    self.arcs.pop();
                    self.open.push(top);
                }
            }
            self.open.push(p);
            self.visit(p + 1);
            self.open.pop();
        }
    }

    let mut search = Search {
        boxes,
        open: Vec::new(),
        arcs: Vec::new(),
        out: Vec::new(),
    };
    search.visit(1);
    let mut matches: Vec<LowerMatch> = search
        .out
        .into_iter()
        .map(|arcs| LowerMatch::new(boxes.clone(), arcs))
        .collect();
    matches.sort();
    matches
}

/// Matches with exactly `mu` unmatched vertices.
pub fn enumerate_cm(boxes: &BoxConfig, mu: HighestWeight) -> Vec<LowerMatch> {
    if !(boxes.total() + mu).is_multiple_of(2) || mu > boxes.total() {
        return Vec::new();
    }
    enumerate_lcm(boxes)
        .into_iter()
        .filter(|m| m.mu() == mu)
        .collect()
}

/// A lower match whose rightmost `downs` unmatched vertices point down and
/// the rest point up. Arcs are implicitly oriented leftwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedLowerMatch {
    base: LowerMatch,
    downs: u32,
}

impl OrientedLowerMatch {
    pub fn new(base: LowerMatch, downs: u32) -> Result<Self> {
        if !base.validate() {
            return Err(Error::InvalidMatch(base.canonical_key()));
        }
        if downs > base.mu() {
            return Err(Error::InvalidOrientation {
                downs,
                unmatched: base.mu(),
            });
        }
        Ok(OrientedLowerMatch { base, downs })
    }

    pub fn base(&self) -> &LowerMatch {
        &self.base
    }

    pub fn downs(&self) -> u32 {
        self.downs
    }

    /// `mu - 2k`.
    pub fn weight(&self) -> i64 {
        i64::from(self.base.mu()) - 2 * i64::from(self.downs)
    }

    pub fn down_vertices(&self) -> Vec<u32> {
        let unmatched = self.base.unmatched();
        unmatched[unmatched.len() - self.downs as usize..].to_vec()
    }
}

#[derive(Serialize, Deserialize)]
struct OrientedRepr {
    boxes: Vec<u32>,
    arcs: Vec<[u32; 2]>,
    mu: HighestWeight,
    downs: u32,
}

impl Serialize for OrientedLowerMatch {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        OrientedRepr {
            boxes: self.base.boxes.sizes.clone(),
            arcs: self.base.arcs.iter().map(|&(p, q)| [p, q]).collect(),
            mu: self.base.mu(),
            downs: self.downs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrientedLowerMatch {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = OrientedRepr::deserialize(deserializer)?;
        let base = LowerMatch::deserialize(serde_json::json!({
            "boxes": repr.boxes,
            "arcs": repr.arcs,
            "mu": repr.mu,
        }))
        .map_err(D::Error::custom)?;
        OrientedLowerMatch::new(base, repr.downs).map_err(D::Error::custom)
    }
}

/// All `mu + 1` orientations of `m`, by number of down-arrows.
pub fn orientations(m: &LowerMatch) -> Result<Vec<OrientedLowerMatch>> {
    if !m.validate() {
        return Err(Error::InvalidMatch(m.canonical_key()));
    }
    Ok((0..=m.mu())
        .map(|downs| OrientedLowerMatch {
            base: m.clone(),
            downs,
        })
        .collect())
}

/// Per-box arc statistics of a match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcCensus {
    /// `c[i]`: arcs with both end points in boxes `1..=i+1`.
    pub c: Vec<u32>,
    /// `b[i]`: left end points plus unmatched vertices in box `i+1`.
    pub b: Vec<u32>,
    /// Arc end points (left or right) in box `i+1`.
    pub endpoints_by_box: Vec<u32>,
}

pub fn arc_census(m: &LowerMatch) -> Result<ArcCensus> {
    if !m.validate() {
        return Err(Error::InvalidMatch(m.canonical_key()));
    }
    let boxes = m.boxes();
    let r = boxes.len();
    let mut closing = vec![0u32; r];
    let mut b = vec![0u32; r];
    let mut endpoints_by_box = vec![0u32; r];
    for &(p, q) in m.arcs() {
        let (bp, bq) = (boxes.box_of(p) - 1, boxes.box_of(q) - 1);
        closing[bq] += 1;
        b[bp] += 1;
        endpoints_by_box[bp] += 1;
        endpoints_by_box[bq] += 1;
    }
    for v in m.unmatched() {
        b[boxes.box_of(v) - 1] += 1;
    }
    let c = closing
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    Ok(ArcCensus {
        c,
        b,
        endpoints_by_box,
    })
}
