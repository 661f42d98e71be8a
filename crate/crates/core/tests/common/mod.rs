//! Oracles independent of the library's arithmetic paths.

#![allow(dead_code)]

use std::collections::BTreeMap;

use fusionkit_core::{HighestWeight, RingElement};

/// Character of `V_i` as a Laurent polynomial `exponent -> coefficient`.
pub fn character(i: HighestWeight) -> BTreeMap<i64, i64> {
    let i = i64::from(i);
    (-i..=i).step_by(2).map(|k| (k, 1)).collect()
}

pub fn character_product(a: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for (&x, &c) in a {
        for (&y, &d) in b {
            *out.entry(x + y).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Peels simple characters off from the top weight down.
pub fn decompose_character(mut chi: BTreeMap<i64, i64>) -> RingElement {
    let mut out = RingElement::zero();
    while let Some((&top, &c)) = chi.iter().next_back() {
        assert!(top >= 0, "not a character of a module");
        out.add_term(top as HighestWeight, c);
        for (k, d) in character(top as HighestWeight) {
            let e = chi.entry(k).or_insert(0);
            *e -= c * d;
            if *e == 0 {
                chi.remove(&k);
            }
        }
    }
    out
}

/// Class of `V_{w_1} ⊗ ... ⊗ V_{w_r}` via characters.
pub fn tensor_by_characters(ws: &[HighestWeight]) -> RingElement {
    let chi = ws
        .iter()
        .fold(character(0), |acc, &w| character_product(&acc, &character(w)));
    decompose_character(chi)
}

/// Polynomial in `x = [V_1]`, coefficients by degree.
type Poly = Vec<i64>;

/// `[V_n]` as the Chebyshev-type polynomial `P_0 = 1, P_1 = x, P_{n+1} = x P_n - P_{n-1}`.
pub fn simple_poly(n: usize) -> Poly {
    let mut prev: Poly = vec![1];
    if n == 0 {
        return prev;
    }
    let mut cur: Poly = vec![0, 1];
    for _ in 1..n {
        let mut next = vec![0; cur.len() + 1];
        for (d, &c) in cur.iter().enumerate() {
            next[d + 1] += c;
        }
        for (d, &c) in prev.iter().enumerate() {
            next[d] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Normal form of `x` modulo the ideal generated by `[V_{l+1}]`, computed by
/// polynomial division by the monic `P_{l+1}` and conversion back to the
/// basis `[V_0] .. [V_l]`.
pub fn quotient_by_polynomials(x: &RingElement, l: u32) -> RingElement {
    let l = l as usize;
    let top = x.max_weight().map_or(0, |k| k as usize);
    let mut poly: Poly = vec![0; top.max(l) + 1];
    for (k, c) in x.iter() {
        for (d, &p) in simple_poly(k as usize).iter().enumerate() {
            poly[d] += c * p;
        }
    }
    let divisor = simple_poly(l + 1);
    for deg in (l + 1..poly.len()).rev() {
        let c = poly[deg];
        if c != 0 {
            for (d, &p) in divisor.iter().enumerate() {
                poly[deg - (l + 1) + d] -= c * p;
            }
        }
    }
    // remainder has degree <= l; rewrite in the simple basis from the top
    let mut out = RingElement::zero();
    for deg in (0..=l).rev() {
        let c = poly[deg];
        if c != 0 {
            out.add_term(deg as HighestWeight, c);
            for (d, &p) in simple_poly(deg).iter().enumerate() {
                poly[d] -= c * p;
            }
        }
    }
    out
}

/// Level-l truncated decomposition straight from the cut-off rule.
pub fn fusion_rule(i: u32, j: u32, l: u32) -> RingElement {
    let (i, j, l) = (i64::from(i), i64::from(j), i64::from(l));
    let top = (i + j).min(2 * l - i - j);
    RingElement::from_terms(((i - j).abs()..=top).step_by(2).map(|k| (k as u32, 1)))
}
