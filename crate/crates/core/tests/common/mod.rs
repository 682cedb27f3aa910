#![allow(dead_code)]

use proptest::prelude::*;
use skeinforge::diagram::{Letter, OrderedSingularLink, SingularBraidWord};

/// A letter on `strands` strands; singular letters only when `singular`.
pub fn letter(strands: usize, singular: bool) -> impl Strategy<Value = Letter> {
    let kinds = if singular { 3 } else { 2 };
    (1..strands, 0..kinds).prop_map(|(i, k)| match k {
        0 => Letter::Pos(i),
        1 => Letter::Neg(i),
        _ => Letter::Sing(i),
    })
}

pub fn nonsingular_word(
    max_strands: usize,
    max_len: usize,
) -> impl Strategy<Value = SingularBraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec(letter(n, false), 0..=max_len)
            .prop_map(move |letters| SingularBraidWord::new(n, letters).unwrap())
    })
}

/// A singular word with at most `max_sing` singular letters, with a random
/// ordering of its singular points.
pub fn ordered_link(
    max_strands: usize,
    max_len: usize,
    max_sing: usize,
) -> impl Strategy<Value = OrderedSingularLink> {
    (2..=max_strands, 0..=max_sing).prop_flat_map(move |(n, d)| {
        (
            prop::collection::vec(letter(n, false), 0..=max_len.saturating_sub(d)),
            prop::collection::vec(1..n, d),
            prop::collection::vec(any::<prop::sample::Index>(), d),
            Just((1..=d).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(mut letters, sings, spots, ordering)| {
                for (i, spot) in sings.into_iter().zip(spots) {
                    let at = spot.index(letters.len() + 1);
                    letters.insert(at, Letter::Sing(i));
                }
                OrderedSingularLink::new(SingularBraidWord::new(n, letters).unwrap(), ordering)
                    .unwrap()
            })
    })
}

/// Replaces the letter at `k` and returns the new word.
pub fn with_letter(w: &SingularBraidWord, k: usize, l: Option<Letter>) -> SingularBraidWord {
    let mut letters = w.letters().to_vec();
    match l {
        Some(l) => letters[k] = l,
        None => {
            letters.remove(k);
        }
    }
    SingularBraidWord::new(w.strands(), letters).unwrap()
}
