//! Independent HOMFLY-PT evaluation through the Hecke algebra and its Markov
//! trace, compared against the skein-tree engine.
//!
//! In the skein module `g^-1 = t^-2 g - t^-1 x`, so `g^2 = t x g + t^2`. The
//! trace satisfies `tr(h ⊗ 1) = δ tr(h)` and `tr(a g_{n-1} b) = tr(a b)` for
//! `a, b` on `n - 1` strands.

mod common;

use std::collections::HashMap;

use common::nonsingular_word;
use proptest::prelude::*;
use skeinforge::coeff::{LaurentPoly, RingMode};
use skeinforge::diagram::{Letter, SingularBraidWord};
use skeinforge::homfly::HomflyEngine;

const G: RingMode = RingMode::Generic;

type Perm = Vec<usize>;
type Elem = HashMap<Perm, LaurentPoly>;

struct Hecke {
    tx: LaurentPoly,
    t2: LaurentPoly,
    t_neg2: LaurentPoly,
    neg_t_inv_x: LaurentPoly,
    delta: LaurentPoly,
}

fn add_to(e: &mut Elem, w: Perm, c: LaurentPoly) {
    let entry = e.entry(w.clone()).or_insert_with(|| G.zero());
    *entry = &*entry + &c;
    if entry.is_zero() {
        e.remove(&w);
    }
}

impl Hecke {
    fn new() -> Self {
        Hecke {
            tx: &G.t() * &G.x(),
            t2: G.t_pow(2),
            t_neg2: G.t_pow(-2),
            neg_t_inv_x: -(&G.t_inv() * &G.x()),
            delta: G.delta(),
        }
    }

    /// `T_w g_i` (1-based `i` swaps positions `i - 1, i`).
    fn right_mul(&self, e: &Elem, i: usize) -> Elem {
        let mut out = Elem::new();
        for (w, c) in e {
            let mut ws = w.clone();
            ws.swap(i - 1, i);
            if w[i - 1] < w[i] {
                add_to(&mut out, ws, c.clone());
            } else {
                add_to(&mut out, w.clone(), &self.tx * c);
                add_to(&mut out, ws, &self.t2 * c);
            }
        }
        out
    }

    /// `g_i T_w`: swaps the values `i - 1, i` in one-line notation.
    fn left_mul(&self, i: usize, e: &Elem) -> Elem {
        let mut out = Elem::new();
        for (w, c) in e {
            let pa = w.iter().position(|&v| v == i - 1).unwrap();
            let pb = w.iter().position(|&v| v == i).unwrap();
            let mut sw = w.clone();
            sw.swap(pa, pb);
            if pa < pb {
                add_to(&mut out, sw, c.clone());
            } else {
                add_to(&mut out, w.clone(), &self.tx * c);
                add_to(&mut out, sw, &self.t2 * c);
            }
        }
        out
    }

    fn trace(&self, e: &Elem, memo: &mut HashMap<Perm, LaurentPoly>) -> LaurentPoly {
        e.iter().fold(G.zero(), |acc, (w, c)| {
            &acc + &(c * &self.trace_basis(w, memo))
        })
    }

    fn trace_basis(&self, w: &Perm, memo: &mut HashMap<Perm, LaurentPoly>) -> LaurentPoly {
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let n = w.len();
        let value = if n == 1 {
            G.one()
        } else if w[n - 1] == n - 1 {
            &self.delta * &self.trace_basis(&w[..n - 1].to_vec(), memo)
        } else {
            // w = u s_{n-1} s_{n-2} ... s_{p+1} with u fixing n - 1
            let p = w.iter().position(|&v| v == n - 1).unwrap();
            let mut u = w.clone();
            for i in p + 1..n {
                u.swap(i - 1, i);
            }
            // tr(T_u g_{n-1} h) = tr(h T_u) with h = g_{n-2} ... g_{p+1}
            let mut prod: Elem = HashMap::from([(u, G.one())]);
            for i in p + 1..n - 1 {
                prod = self.left_mul(i, &prod);
            }
            let reduced: Elem = prod
                .into_iter()
                .map(|(mut v, c)| {
                    assert_eq!(v.pop(), Some(n - 1));
                    (v, c)
                })
                .collect();
            self.trace(&reduced, memo)
        };
        memo.insert(w.clone(), value.clone());
        value
    }

    fn homfly(&self, word: &SingularBraidWord) -> LaurentPoly {
        let n = word.strands();
        let mut e: Elem = HashMap::from([((0..n).collect(), G.one())]);
        for l in word.letters() {
            e = match *l {
                Letter::Pos(i) => self.right_mul(&e, i),
                Letter::Neg(i) => {
                    let mut out = Elem::new();
                    for (w, c) in self.right_mul(&e, i) {
                        add_to(&mut out, w, &self.t_neg2 * &c);
                    }
                    for (w, c) in &e {
                        add_to(&mut out, w.clone(), &self.neg_t_inv_x * c);
                    }
                    out
                }
                Letter::Sing(_) => panic!("singular letter"),
            };
        }
        self.trace(&e, &mut HashMap::new())
    }
}

fn all_words(strands: usize, len: usize) -> Vec<SingularBraidWord> {
    let letters: Vec<Letter> = (1..strands)
        .flat_map(|i| [Letter::Pos(i), Letter::Neg(i)])
        .collect();
    let mut words = vec![vec![]];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                letters.iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(*l);
                    w
                })
            })
            .collect();
    }
    words
        .into_iter()
        .map(|w| SingularBraidWord::new(strands, w).unwrap())
        .collect()
}

#[test]
fn hecke_trace_matches_skein_tree_exhaustively() {
    let hecke = Hecke::new();
    let engine = HomflyEngine::new(G);
    for strands in 1..=3 {
        for len in 0..=5 {
            if strands == 1 && len > 0 {
                continue;
            }
            for w in all_words(strands, len) {
                assert_eq!(hecke.homfly(&w), engine.homfly(&w).unwrap(), "word {w}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hecke_trace_matches_on_five_strands(w in nonsingular_word(5, 12)) {
        prop_assert_eq!(Hecke::new().homfly(&w), HomflyEngine::new(G).homfly(&w).unwrap());
    }
}
