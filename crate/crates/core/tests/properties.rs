mod common;

use proptest::prelude::*;

use fusionkit_core::fusion_ring::tensor_many;
use fusionkit_core::{
    enumerate_lcm, enumerate_trees, fuse_many, orientations, quotient_reduce, ring_mul, satisfies_truncation,
    BoxConfig, BracketTree, Level, LowerMatch, OrientedLowerMatch, RingElement,
};

fn ring_element() -> impl Strategy<Value = RingElement> {
    prop::collection::vec((0u32..16, -5i64..=5), 0..6).prop_map(RingElement::from_terms)
}

fn positive_element(max_weight: u32) -> impl Strategy<Value = RingElement> {
    prop::collection::vec((0..=max_weight, 1i64..=3), 1..4).prop_map(RingElement::from_terms)
}

fn sizes() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=4, 1..=4)
}

proptest! {
    #[test]
    fn ring_element_text_and_json_round_trip(x in ring_element()) {
        prop_assert_eq!(x.to_string().parse::<RingElement>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<RingElement>(&json).unwrap(), x);
    }

    #[test]
    fn ring_mul_commutes_and_preserves_dimension(x in ring_element(), y in ring_element()) {
        let xy = ring_mul(&x, &y);
        prop_assert_eq!(&xy, &ring_mul(&y, &x));
        prop_assert_eq!(xy.dim(), x.dim() * y.dim());
    }

    #[test]
    fn quotient_is_linear_and_idempotent(x in ring_element(), y in ring_element(), l in 1u32..=6) {
        let l = Level::new(l).unwrap();
        let rx = quotient_reduce(&x, l);
        prop_assert!(rx.max_weight().is_none_or(|k| k <= l.get()));
        prop_assert_eq!(quotient_reduce(&rx, l), rx.clone());
        prop_assert_eq!(quotient_reduce(&(&x + &y), l), &rx + &quotient_reduce(&y, l));
        prop_assert_eq!(rx, common::quotient_by_polynomials(&x, l.get()));
    }

    #[test]
    fn quotient_is_a_ring_map(x in positive_element(5), y in positive_element(5), l in 1u32..=5) {
        let l = Level::new(l).unwrap();
        let lhs = quotient_reduce(&ring_mul(&x, &y), l);
        let rhs = quotient_reduce(&ring_mul(&quotient_reduce(&x, l), &quotient_reduce(&y, l)), l);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fusion_is_reduced_tensor_product(ws in prop::collection::vec(0u32..=4, 1..=5), extra in 0u32..3) {
        let l = Level::new(ws.iter().copied().max().unwrap().max(1) + extra).unwrap();
        let trees = enumerate_trees(ws.len()).unwrap();
        let reduced = quotient_reduce(&tensor_many(&ws), l);
        for t in &trees {
            prop_assert_eq!(&fuse_many(&ws, l, t).unwrap(), &reduced);
        }
    }

    #[test]
    fn enumeration_invariants(ws in sizes()) {
        let boxes = BoxConfig::new(ws).unwrap();
        let matches = enumerate_lcm(&boxes);
        let total: u64 = matches.iter().map(|m| u64::from(m.mu()) + 1).sum();
        prop_assert_eq!(total, boxes.tensor_dim());
        prop_assert!(matches.windows(2).all(|w| w[0] < w[1]));
        for m in &matches {
            prop_assert!(m.validate());
            prop_assert_eq!(&LowerMatch::from_key(&m.canonical_key()).unwrap(), m);
            let json = serde_json::to_string(m).unwrap();
            prop_assert_eq!(&serde_json::from_str::<LowerMatch>(&json).unwrap(), m);
        }
    }

    #[test]
    fn oriented_json_round_trip(ws in sizes(), pick in any::<prop::sample::Index>()) {
        let boxes = BoxConfig::new(ws).unwrap();
        let all: Vec<OrientedLowerMatch> = enumerate_lcm(&boxes)
            .iter()
            .flat_map(|m| orientations(m).unwrap())
            .collect();
        let a = pick.get(&all);
        let json = serde_json::to_string(a).unwrap();
        prop_assert_eq!(&serde_json::from_str::<OrientedLowerMatch>(&json).unwrap(), a);
    }

    #[test]
    fn truncation_monotone(ws in prop::collection::vec(1u32..=3, 2..=4), extra in 0u32..3, pick in any::<prop::sample::Index>()) {
        let l = ws.iter().copied().max().unwrap() + extra;
        let boxes = BoxConfig::new(ws.clone()).unwrap();
        let trees = enumerate_trees(ws.len()).unwrap();
        let tree = pick.get(&trees);
        for m in enumerate_lcm(&boxes) {
            if satisfies_truncation(&m, Level::new(l).unwrap(), tree).unwrap() {
                prop_assert!(satisfies_truncation(&m, Level::new(l + 1).unwrap(), tree).unwrap());
            }
        }
    }

    #[test]
    fn bracketing_text_round_trip(r in 1usize..=8, pick in any::<prop::sample::Index>()) {
        let trees = enumerate_trees(r).unwrap();
        let t = pick.get(&trees);
        prop_assert_eq!(&BracketTree::parse(&t.to_string(), r).unwrap(), t);
        prop_assert_eq!(t.scopes().len(), r - 1);
    }
}
