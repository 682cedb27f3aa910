mod common;

use common::{letter, nonsingular_word, with_letter};
use proptest::prelude::*;
use skeinforge::coeff::{LaurentPoly, RingMode};
use skeinforge::diagram::{Letter, OrderedSingularLink, SingularBraidWord};
use skeinforge::homfly::{naive_homfly, HomflyEngine};

const G: RingMode = RingMode::Generic;

fn closure_word(w: &OrderedSingularLink) -> SingularBraidWord {
    w.word().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn skein_relation_at_every_crossing(w in nonsingular_word(4, 10), pick in any::<prop::sample::Index>()) {
        prop_assume!(!w.is_empty());
        let k = pick.index(w.len());
        let i = w.letters()[k].index();
        let e = HomflyEngine::new(G);
        let plus = e.homfly(&with_letter(&w, k, Some(Letter::Pos(i)))).unwrap();
        let minus = e.homfly(&with_letter(&w, k, Some(Letter::Neg(i)))).unwrap();
        let zero = e.homfly(&with_letter(&w, k, None)).unwrap();
        prop_assert_eq!(&G.x() * &zero, &(&G.t_inv() * &plus) - &(&G.t() * &minus));
    }

    #[test]
    fn conjugation_invariance(w in nonsingular_word(4, 10), u in (2usize..=4).prop_flat_map(|n| letter(n, false))) {
        prop_assume!(u.index() < w.strands());
        let e = HomflyEngine::new(G);
        let mut letters = vec![u];
        letters.extend_from_slice(w.letters());
        letters.push(u.inverse().unwrap());
        let conj = SingularBraidWord::new(w.strands(), letters).unwrap();
        prop_assert_eq!(e.homfly(&conj).unwrap(), e.homfly(&w).unwrap());
    }

    #[test]
    fn stabilization_invariance(w in nonsingular_word(4, 10), positive in any::<bool>()) {
        let e = HomflyEngine::new(G);
        let n = w.strands();
        let mut letters = w.letters().to_vec();
        letters.push(if positive { Letter::Pos(n) } else { Letter::Neg(n) });
        let stab = SingularBraidWord::new(n + 1, letters).unwrap();
        prop_assert_eq!(e.homfly(&stab).unwrap(), e.homfly(&w).unwrap());
    }

    #[test]
    fn braid_relation_invariance(w in nonsingular_word(4, 8), at in any::<prop::sample::Index>(), i in 1usize..3, positive in any::<bool>()) {
        prop_assume!(i + 1 < w.strands());
        let l = |k| if positive { Letter::Pos(k) } else { Letter::Neg(k) };
        let at = at.index(w.len() + 1);
        let splice = |seg: [Letter; 3]| {
            let mut letters = w.letters().to_vec();
            letters.splice(at..at, seg);
            SingularBraidWord::new(w.strands(), letters).unwrap()
        };
        let e = HomflyEngine::new(G);
        let a = e.homfly(&splice([l(i), l(i + 1), l(i)])).unwrap();
        let b = naive_homfly(G, &splice([l(i + 1), l(i), l(i + 1)])).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn split_union_and_connected_sum(
        a in nonsingular_word(3, 6),
        b in nonsingular_word(3, 6),
    ) {
        let e = HomflyEngine::new(G);
        let (la, lb) = (OrderedSingularLink::from_word(a.clone()), OrderedSingularLink::from_word(b.clone()));
        let pa = e.homfly(&a).unwrap();
        let pb = e.homfly(&b).unwrap();
        let split = e.homfly(&closure_word(&la.split_union(&lb))).unwrap();
        let sum = e.homfly(&closure_word(&la.connected_sum(&lb))).unwrap();
        prop_assert_eq!(split, &(&G.delta() * &pa) * &pb);
        prop_assert_eq!(sum, &pa * &pb);
    }

    #[test]
    fn memoized_matches_naive(w in nonsingular_word(5, 9)) {
        let e = HomflyEngine::new(G);
        prop_assert_eq!(e.homfly(&w).unwrap(), naive_homfly(G, &w).unwrap());
    }

    #[test]
    fn prime_field_and_conway_are_specializations(w in nonsingular_word(4, 9)) {
        let generic = HomflyEngine::new(G).homfly(&w).unwrap();
        let conway = HomflyEngine::new(RingMode::Conway).homfly(&w).unwrap();
        let gf5 = HomflyEngine::new(RingMode::PrimeField(5)).homfly(&w).unwrap();
        prop_assert_eq!(generic.at_t_one(), conway);
        prop_assert_eq!(generic.reduce_mod(5).unwrap(), gf5);
    }
}

#[test]
fn unknot_value_under_every_mode() {
    for mode in [G, RingMode::Conway, RingMode::PrimeField(7)] {
        let e = HomflyEngine::new(mode);
        assert_eq!(
            e.homfly(&"1:".parse().unwrap()).unwrap(),
            LaurentPoly::one(mode.base())
        );
        assert_eq!(
            e.homfly(&"3: s1 s2".parse().unwrap()).unwrap(),
            LaurentPoly::one(mode.base())
        );
    }
}
