//! ASCII and SVG drawings of a lower match.
//!
//! Boxes sit on a horizontal line, arcs hang below it and unmatched vertices
//! carry rays pointing up. Arc depth is the nesting height, so the layout is
//! a pure function of the match.

use std::fmt::Write;

use fusionkit_core::LowerMatch;

/// Nesting height of each arc: 1 plus the largest height of an arc inside it.
fn arc_heights(m: &LowerMatch) -> Vec<usize> {
    let arcs = m.arcs();
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&i| arcs[i].1 - arcs[i].0);
    let mut heights = vec![0; arcs.len()];
    for &i in &order {
        let (p, q) = arcs[i];
        heights[i] = 1 + arcs
            .iter()
            .zip(&heights)
            .filter(|(&(a, b), _)| p < a && b < q)
            .map(|(_, &h)| h)
            .max()
            .unwrap_or(0);
    }
    heights
}

/// Unmatched vertices paired with whether they carry a down-arrow.
fn rays(m: &LowerMatch, downs: Option<u32>) -> Vec<(u32, bool)> {
    let unmatched = m.unmatched();
    let first_down = unmatched.len() - downs.unwrap_or(0) as usize;
    unmatched
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, i >= first_down))
        .collect()
}

/// Text drawing; `downs` adds `^`/`v` marks in place of plain `|` rays.
pub fn ascii(m: &LowerMatch, downs: Option<u32>) -> String {
    let mut line = String::new();
    let mut column = vec![0; m.boxes().total() as usize + 1];
    let mut v = 1;
    for (b, &w) in m.boxes().sizes().iter().enumerate() {
        if b > 0 {
            line.push(' ');
        }
        line.push('[');
        for i in 0..w {
            if i > 0 {
                line.push(' ');
            }
            column[v] = line.len();
            line.push('o');
            v += 1;
        }
        line.push(']');
    }
    let width = line.len();

    let mut out = String::new();
    let rays = rays(m, downs);
    if !rays.is_empty() {
        let mut top = vec![' '; width];
        for (v, down) in rays {
            top[column[v as usize]] = match (downs, down) {
                (None, _) => '|',
                (Some(_), false) => '^',
                (Some(_), true) => 'v',
            };
        }
        out.push_str(top.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out.push_str(&line);
    out.push('\n');

    let heights = arc_heights(m);
    let depth = heights.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![' '; width]; depth];
    for (&(p, q), &h) in m.arcs().iter().zip(&heights) {
        let (cp, cq) = (column[p as usize], column[q as usize]);
        for row in grid.iter_mut().take(h - 1) {
            row[cp] = '|';
            row[cq] = '|';
        }
        let bottom = &mut grid[h - 1];
        bottom[cp] = '\\';
        bottom[cp + 1..cq].fill('_');
        bottom[cq] = '/';
    }
    for row in grid {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}

const MARGIN: i64 = 20;
const PAD: i64 = 15;
const STEP: i64 = 30;
const GAP: i64 = 20;
const RAY: i64 = 50;
const BOX_HEIGHT: i64 = 16;
const ARROW: i64 = 6;

/// SVG drawing: rectangles for boxes, semicircles for arcs, vertical rays for
/// unmatched vertices and arrowheads when `downs` is given.
pub fn svg(m: &LowerMatch, downs: Option<u32>) -> String {
    let mut xs = vec![0; m.boxes().total() as usize + 1];
    let mut rects = Vec::new();
    let mut cursor = MARGIN;
    let mut v = 1;
    for &w in m.boxes().sizes() {
        let width = if w == 0 {
            2 * PAD / 3
        } else {
            2 * PAD + STEP * (i64::from(w) - 1)
        };
        for i in 0..w {
            xs[v] = cursor + PAD + STEP * i64::from(i);
            v += 1;
        }
        rects.push((cursor, width));
        cursor += width + GAP;
    }
    let width = cursor - GAP + MARGIN;
    let box_top = MARGIN + RAY;
    let base = box_top + BOX_HEIGHT;
    let max_radius = m
        .arcs()
        .iter()
        .map(|&(p, q)| (xs[q as usize] - xs[p as usize]) / 2)
        .max()
        .unwrap_or(0);
    let height = base + max_radius + MARGIN;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<title>{}</title>"#, m.canonical_key());
    let _ = writeln!(s, r#"<g fill="none" stroke="black" stroke-width="2">"#);
    for (x, w) in rects {
        let _ = writeln!(
            s,
            r#"<rect class="box" x="{x}" y="{box_top}" width="{w}" height="{BOX_HEIGHT}"/>"#
        );
    }
    for &(p, q) in m.arcs() {
        let (x1, x2) = (xs[p as usize], xs[q as usize]);
        let r = (x2 - x1) / 2;
        let _ = writeln!(
            s,
            r#"<path class="arc" d="M {x1} {base} A {r} {r} 0 0 0 {x2} {base}"/>"#
        );
    }
    for (v, down) in rays(m, downs) {
        let x = xs[v as usize];
        let _ = writeln!(
            s,
            r#"<line class="ray" x1="{x}" y1="{box_top}" x2="{x}" y2="{MARGIN}"/>"#
        );
        if downs.is_some() {
            let mid = MARGIN + RAY / 2;
            let (class, points) = if down {
                (
                    "arrow-down",
                    format!(
                        "{},{} {},{} {},{}",
                        x - ARROW,
                        mid - ARROW,
                        x + ARROW,
                        mid - ARROW,
                        x,
                        mid + ARROW
                    ),
                )
            } else {
                (
                    "arrow-up",
                    format!(
                        "{},{} {},{} {},{}",
                        x - ARROW,
                        mid + ARROW,
                        x + ARROW,
                        mid + ARROW,
                        x,
                        mid - ARROW
                    ),
                )
            };
            let _ = writeln!(s, r#"<polygon class="{class}" points="{points}" fill="black"/>"#);
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}
