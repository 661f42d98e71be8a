//! Bracketings of an r-fold tensor product, the level-l truncation predicate
//! on lower crossingless matches, and closed-form counts for three factors.

use std::fmt;
use std::ops::RangeInclusive;

use crate::diagrams::{enumerate_cm, BoxConfig, LowerMatch};
use crate::error::{Error, Result};
use crate::fusion_ring::{HighestWeight, Level};

pub const MAX_ENUMERATED_LEAVES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Node {
    Leaf(usize),
    Join(Box<Node>, Box<Node>),
}

/// A full binary tree whose leaves are labelled `1..=r` from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketTree {
    root: Node,
    leaves: usize,
}

/// Leaf ranges separated by one tensor operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeScope {
    pub left: RangeInclusive<usize>,
    pub right: RangeInclusive<usize>,
}

impl NodeScope {
    pub fn span(&self) -> RangeInclusive<usize> {
        *self.left.start()..=*self.right.end()
    }
}

impl BracketTree {
    /// The one-leaf tree.
    pub fn leaf() -> Self {
        BracketTree {
            root: Node::Leaf(1),
            leaves: 1,
        }
    }

    /// `(left right)`, relabelling the leaves of `right` after those of `left`.
    pub fn join(left: BracketTree, right: BracketTree) -> Self {
        fn shift(node: Node, by: usize) -> Node {
            match node {
                Node::Leaf(i) => Node::Leaf(i + by),
                Node::Join(a, b) => Node::Join(Box::new(shift(*a, by)), Box::new(shift(*b, by))),
            }
        }
        let leaves = left.leaves + right.leaves;
        BracketTree {
            root: Node::Join(Box::new(left.root), Box::new(shift(right.root, left.leaves))),
            leaves,
        }
    }

    /// `(...((1 2) 3) ... r)`, the default bracketing.
    ///
    /// # Panics
    /// If `r == 0`.
    pub fn left_comb(r: usize) -> Self {
        assert!(r >= 1, "a bracketing needs at least one leaf");
        (1..r).fold(Self::leaf(), |acc, _| Self::join(acc, Self::leaf()))
    }

    /// `(1 (2 (... (r-1 r))))`.
    ///
    /// # Panics
    /// If `r == 0`.
    pub fn right_comb(r: usize) -> Self {
        assert!(r >= 1, "a bracketing needs at least one leaf");
        (1..r).fold(Self::leaf(), |acc, _| Self::join(Self::leaf(), acc))
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    /// Scopes of all internal nodes, children before parents.
    pub fn scopes(&self) -> Vec<NodeScope> {
        fn walk(node: &Node, out: &mut Vec<NodeScope>) -> RangeInclusive<usize> {
            match node {
                Node::Leaf(i) => *i..=*i,
                Node::Join(a, b) => {
                    let left = walk(a, out);
                    let right = walk(b, out);
                    let span = *left.start()..=*right.end();
                    out.push(NodeScope { left, right });
                    span
                }
            }
        }
        let mut out = Vec::with_capacity(self.leaves.saturating_sub(1));
        walk(&self.root, &mut out);
        out
    }

    /// Evaluates the tree bottom-up; `leaf` receives 1-based leaf labels.
    pub fn try_fold<T, E>(
        &self,
        leaf: &mut impl FnMut(usize) -> std::result::Result<T, E>,
        join: &mut impl FnMut(T, T) -> std::result::Result<T, E>,
    ) -> std::result::Result<T, E> {
        fn go<T, E>(
            node: &Node,
            leaf: &mut impl FnMut(usize) -> std::result::Result<T, E>,
            join: &mut impl FnMut(T, T) -> std::result::Result<T, E>,
        ) -> std::result::Result<T, E> {
            match node {
                Node::Leaf(i) => leaf(*i),
                Node::Join(a, b) => {
                    let x = go(a, leaf, join)?;
                    let y = go(b, leaf, join)?;
                    join(x, y)
                }
            }
        }
        go(&self.root, leaf, join)
    }

    /// Parses `expr := leaf | "(" expr expr ")"` with optional whitespace.
    ///
    /// For `r <= 9` every digit is its own leaf, so `((12)3)` has three
    /// leaves. For larger `r` a leaf is a maximal run of digits and adjacent
    /// leaves must be separated by whitespace or parentheses.
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let mut parser = Parser {
            bytes: text.as_bytes(),
            pos: 0,
            multi_digit: r > 9,
            next_leaf: 1,
        };
        let root = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("trailing input after bracketing"));
        }
        let found = parser.next_leaf - 1;
        if found != r {
            return Err(Error::LeafCountMismatch { expected: r, found });
        }
        Ok(BracketTree { root, leaves: r })
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    multi_digit: bool,
    next_leaf: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Node> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let left = self.expr()?;
                let right = self.expr()?;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(Node::Join(Box::new(left), Box::new(right)))
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                self.pos += 1;
                if self.multi_digit {
                    while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        self.pos += 1;
                    }
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
                let label: usize = digits.parse().map_err(|_| Error::Syntax {
                    pos: start,
                    msg: format!("leaf index {digits} is too large"),
                })?;
                if label != self.next_leaf {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("expected leaf {} but found {label}", self.next_leaf),
                    });
                }
                self.next_leaf += 1;
                Ok(Node::Leaf(label))
            }
            Some(_) => Err(self.error("expected '(' or a leaf index")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(node: &Node, spaced: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match node {
                Node::Leaf(i) => write!(f, "{i}"),
                Node::Join(a, b) => {
                    f.write_str("(")?;
                    go(a, spaced, f)?;
                    if spaced {
                        f.write_str(" ")?;
                    }
                    go(b, spaced, f)?;
                    f.write_str(")")
                }
            }
        }
        go(&self.root, self.leaves > 9, f)
    }
}

/// All bracketings of `r` ordered factors, `Catalan(r - 1)` of them.
///
/// Trees are ordered by the size of the left subtree at the root, then
/// recursively by left and right subtree.
pub fn enumerate_trees(r: usize) -> Result<Vec<BracketTree>> {
    if !(1..=MAX_ENUMERATED_LEAVES).contains(&r) {
        return Err(Error::TreeSizeOutOfRange(r));
    }
    fn all(r: usize) -> Vec<BracketTree> {
        if r == 1 {
            return vec![BracketTree::leaf()];
        }
        let mut out = Vec::new();
        for k in 1..r {
            let lefts = all(k);
            let rights = all(r - k);
            for a in &lefts {
                for b in &rights {
                    out.push(BracketTree::join(a.clone(), b.clone()));
                }
            }
        }
        out
    }
    Ok(all(r))
}

/// Number of curves crossing each tensor operation of `tree`, in the order of
/// [`BracketTree::scopes`]. Unmatched vertices count as curves leaving every
/// scope that contains them.
pub fn node_curve_counts(m: &LowerMatch, tree: &BracketTree) -> Result<Vec<u32>> {
    let boxes = m.boxes();
    if tree.leaf_count() != boxes.len() {
        return Err(Error::LeafCountMismatch {
            expected: boxes.len(),
            found: tree.leaf_count(),
        });
    }
    let arc_boxes: Vec<(usize, usize)> = m
        .arcs()
        .iter()
        .map(|&(p, q)| (boxes.box_of(p), boxes.box_of(q)))
        .collect();
    let unmatched_boxes: Vec<usize> = m.unmatched().into_iter().map(|p| boxes.box_of(p)).collect();

    Ok(tree
        .scopes()
        .iter()
        .map(|scope| {
            let span = scope.span();
            let mut count = 0;
            for &(bp, bq) in &arc_boxes {
                let across = (scope.left.contains(&bp) && scope.right.contains(&bq))
                    || (scope.right.contains(&bp) && scope.left.contains(&bq));
                let leaving = span.contains(&bp) != span.contains(&bq);
                count += u32::from(across) + u32::from(leaving);
            }
            count += unmatched_boxes.iter().filter(|b| span.contains(b)).count() as u32;
            count
        })
        .collect())
}

/// Whether `m` lies in the level-l truncated set for the bracketing `tree`:
/// at every tensor operation at most `l` curves cross it.
pub fn satisfies_truncation(m: &LowerMatch, level: Level, tree: &BracketTree) -> Result<bool> {
    if !m.validate() {
        return Err(Error::InvalidMatch(m.canonical_key()));
    }
    Ok(node_curve_counts(m, tree)?
        .into_iter()
        .all(|count| count <= level.get()))
}

/// Number of matches with `mu` unmatched vertices passing the level-l
/// truncation for `tree`.
pub fn count_truncated(
    boxes: &BoxConfig,
    mu: HighestWeight,
    level: Level,
    tree: &BracketTree,
) -> Result<u64> {
    for &w in boxes.sizes() {
        level.check_alcove(w)?;
    }
    let mut count = 0;
    for m in enumerate_cm(boxes, mu) {
        if satisfies_truncation(&m, level, tree)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Stratum of a three-box match: `(c, n)` with `c` the number of arcs joining
/// the outer boxes and `n` the number of arcs with an end point in the middle box.
///
/// Returns `None` unless the match has exactly three boxes.
pub fn outer_curve_stratum(m: &LowerMatch) -> Option<(u32, u32)> {
    let boxes = m.boxes();
    if boxes.len() != 3 {
        return None;
    }
    let mut outer = 0;
    let mut middle = 0;
    for &(p, q) in m.arcs() {
        match (boxes.box_of(p), boxes.box_of(q)) {
            (1, 3) => outer += 1,
            (a, b) if a == 2 || b == 2 => middle += 1,
            _ => {}
        }
    }
    Some((outer, middle))
}

fn clamp_count(low: i64, high: i64) -> u64 {
    (high - low + 1).max(0) as u64
}

fn i(x: u32) -> i64 {
    i64::from(x)
}

/// Bare truncation-bound expression for `(V1 ⊗ V2) ⊗ V3`, no outer curves,
/// `n` lower curves: `min(w1, n) - max(w1 + w2 - l, w1 + w2 + w3 - n - l) + 1`,
/// clamped at zero. It ignores that at most `w3` curves reach the third box
/// and that the middle box has only `w2` vertices, so it overcounts whenever
/// those bounds bind; [`ra_count`] includes them.
pub fn ra_count_truncation_only(w1: u32, w2: u32, w3: u32, level: Level, n: u32) -> u64 {
    let l = i(level.get());
    let high = i(w1).min(i(n));
    let low = (i(w1) + i(w2) - l).max(i(w1) + i(w2) + i(w3) - i(n) - l);
    clamp_count(low, high)
}

/// Mirror of [`ra_count_truncation_only`] for `V1 ⊗ (V2 ⊗ V3)`.
pub fn rb_count_truncation_only(w1: u32, w2: u32, w3: u32, level: Level, n: u32) -> u64 {
    let l = i(level.get());
    let high = i(w3).min(i(n));
    let low = (i(w2) + i(w3) - l).max(i(w1) + i(w2) + i(w3) - i(n) - l);
    clamp_count(low, high)
}

/// Number of matches for `(V1 ⊗ V2) ⊗ V3` in the level-l truncated set with no
/// curve joining the outer boxes and `n` lower curves.
///
/// Counts the admissible numbers `a` of curves joining the first two boxes:
/// `max(0, n - w3, w1 + w2 - l, w1 + w2 + w3 - n - l) <= a <= min(w1, n)`,
/// and zero when `n > w2`.
pub fn ra_count(w1: u32, w2: u32, w3: u32, level: Level, n: u32) -> u64 {
    if n > w2 {
        return 0;
    }
    let l = i(level.get());
    let high = i(w1).min(i(n));
    let low = [
        0,
        i(n) - i(w3),
        i(w1) + i(w2) - l,
        i(w1) + i(w2) + i(w3) - i(n) - l,
    ]
    .into_iter()
    .max()
    .unwrap();
    clamp_count(low, high)
}

/// Mirror of [`ra_count`] for `V1 ⊗ (V2 ⊗ V3)`, counting curves `b` joining
/// the last two boxes.
pub fn rb_count(w1: u32, w2: u32, w3: u32, level: Level, n: u32) -> u64 {
    if n > w2 {
        return 0;
    }
    let l = i(level.get());
    let high = i(w3).min(i(n));
    let low = [
        0,
        i(n) - i(w1),
        i(w2) + i(w3) - l,
        i(w1) + i(w2) + i(w3) - i(n) - l,
    ]
    .into_iter()
    .max()
    .unwrap();
    clamp_count(low, high)
}

fn check_outer_curves(c: i64) -> Result<()> {
    if c < 1 {
        Err(Error::InvalidCurveCount(c))
    } else {
        Ok(())
    }
}

/// Bare truncation-bound expression with `c >= 1` outer curves:
/// `min(w1 - c, w2) - max(w1 + w2 - l, w1 + w3 - l - c) + 1`, clamped at zero.
pub fn ra_count_c_truncation_only(w1: u32, w2: u32, w3: u32, level: Level, c: i64) -> Result<u64> {
    check_outer_curves(c)?;
    let l = i(level.get());
    let high = (i(w1) - c).min(i(w2));
    let low = (i(w1) + i(w2) - l).max(i(w1) + i(w3) - l - c);
    Ok(clamp_count(low, high))
}

/// Mirror of [`ra_count_c_truncation_only`].
pub fn rb_count_c_truncation_only(w1: u32, w2: u32, w3: u32, level: Level, c: i64) -> Result<u64> {
    check_outer_curves(c)?;
    let l = i(level.get());
    let high = (i(w3) - c).min(i(w2));
    let low = (i(w2) + i(w3) - l).max(i(w1) + i(w3) - l - c);
    Ok(clamp_count(low, high))
}

/// Number of matches for `(V1 ⊗ V2) ⊗ V3` in the level-l truncated set with
/// `c >= 1` curves joining the outer boxes.
///
/// The outer curves forbid unmatched vertices in the middle box, so all `w2`
/// of its vertices are matched and the count ranges over
/// `max(0, w2 - w3 + c, w1 + w2 - l, w1 + w3 - l - c) <= a <= min(w1 - c, w2)`.
pub fn ra_count_c(w1: u32, w2: u32, w3: u32, level: Level, c: i64) -> Result<u64> {
    check_outer_curves(c)?;
    let l = i(level.get());
    let high = (i(w1) - c).min(i(w2));
    let low = [0, i(w2) - i(w3) + c, i(w1) + i(w2) - l, i(w1) + i(w3) - l - c]
        .into_iter()
        .max()
        .unwrap();
    Ok(clamp_count(low, high))
}

/// Mirror of [`ra_count_c`] for `V1 ⊗ (V2 ⊗ V3)`.
pub fn rb_count_c(w1: u32, w2: u32, w3: u32, level: Level, c: i64) -> Result<u64> {
    check_outer_curves(c)?;
    let l = i(level.get());
    let high = (i(w3) - c).min(i(w2));
    let low = [0, i(w2) - i(w1) + c, i(w2) + i(w3) - l, i(w1) + i(w3) - l - c]
        .into_iter()
        .max()
        .unwrap();
    Ok(clamp_count(low, high))
}
