mod common;

use common::ordered_link;
use proptest::prelude::*;
use skeinforge::diagram::{Resolution, ResolutionVector, SingularBraidWord};

/// Components of the closure by union-find over the arcs between letters.
fn components_by_union_find(w: &SingularBraidWord) -> usize {
    let n = w.strands();
    let levels = w.len() + 1;
    let mut parent: Vec<usize> = (0..n * levels).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra] = rb;
    };
    for (k, l) in w.letters().iter().enumerate() {
        let i = l.index() - 1;
        for s in 0..n {
            let next = if s == i {
                i + 1
            } else if s == i + 1 {
                i
            } else {
                s
            };
            union(&mut parent, k * n + s, (k + 1) * n + next);
        }
    }
    for s in 0..n {
        union(&mut parent, (levels - 1) * n + s, s);
    }
    (0..n * levels)
        .filter(|&v| find(&mut parent, v) == v)
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn component_count_matches_union_find(l in ordered_link(5, 12, 3)) {
        prop_assert_eq!(l.closure_components(), components_by_union_find(l.word()));
    }

    #[test]
    fn iterated_resolve_first_is_resolve_all(l in ordered_link(4, 10, 4), bits in any::<u16>()) {
        let d = l.singular_count();
        let rho = ResolutionVector::from_index(d, bits as usize % (1 << d));
        let full = l.resolve_all(&rho).unwrap();
        prop_assert!(full.is_nonsingular());
        let mut step = l.clone();
        for &b in rho.bits() {
            step = step.resolve_first(Resolution::from_bit(b)).unwrap();
        }
        prop_assert_eq!(step.word(), &full);
        prop_assert_eq!(full.closure_components(), components_by_union_find(&full));
    }

    #[test]
    fn text_round_trip(l in ordered_link(5, 12, 4)) {
        let text = l.to_string();
        prop_assert_eq!(text.parse::<skeinforge::diagram::OrderedSingularLink>().unwrap(), l);
    }
}
