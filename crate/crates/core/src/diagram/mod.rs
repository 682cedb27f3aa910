//! Ordered singular links presented as closures of singular braid words.

pub mod moves;
mod parse;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use parse::{parse_link, parse_word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("ordering {0:?} is not a permutation of 1..={1}")]
    InvalidOrdering(Vec<usize>, usize),
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("singular letter {0} is not invertible")]
    NotInvertible(Letter),
    #[error("the link has no singular point to resolve")]
    NoSingularPoint,
}

/// One generator of the singular braid monoid. Indices are 1-based: the
/// letter with index `i` acts on strands `i` and `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Positive crossing `s<i>`, the `L_+` of the skein relation.
    Pos(usize),
    /// Negative crossing `s<i>^-1`.
    Neg(usize),
    /// Singular crossing `t<i>`.
    Sing(usize),
}

impl Letter {
    pub fn index(&self) -> usize {
        match *self {
            Letter::Pos(i) | Letter::Neg(i) | Letter::Sing(i) => i,
        }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self, Letter::Sing(_))
    }

    /// Inverse in the braid group; singular letters have none.
    pub fn inverse(&self) -> Option<Letter> {
        match *self {
            Letter::Pos(i) => Some(Letter::Neg(i)),
            Letter::Neg(i) => Some(Letter::Pos(i)),
            Letter::Sing(_) => None,
        }
    }

    pub fn with_index(&self, i: usize) -> Letter {
        match self {
            Letter::Pos(_) => Letter::Pos(i),
            Letter::Neg(_) => Letter::Neg(i),
            Letter::Sing(_) => Letter::Sing(i),
        }
    }

    fn shifted(&self, by: usize) -> Letter {
        self.with_index(self.index() + by)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Pos(i) => write!(f, "s{i}"),
            Letter::Neg(i) => write!(f, "s{i}^-1"),
            Letter::Sing(i) => write!(f, "t{i}"),
        }
    }
}

/// A word in the singular braid monoid on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularBraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl SingularBraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::NoStrands);
        }
        if let Some(l) = letters
            .iter()
            .find(|l| l.index() == 0 || l.index() >= strands)
        {
            return Err(DiagramError::IndexOutOfRange {
                index: l.index(),
                strands,
            });
        }
        Ok(SingularBraidWord { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn trivial(strands: usize) -> Result<Self, DiagramError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn singular_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_singular()).count()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.singular_count() == 0
    }

    /// `perm[p]` is the strand (by starting position) found at position `p`
    /// after reading the whole word. Every letter transposes its two strands.
    pub fn strand_permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index() - 1, l.index());
        }
        at
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.strand_permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }
}

impl fmt::Display for SingularBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for SingularBraidWord {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        parse_word(s)
    }
}

/// Which way a singular point is resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Resolution {
    /// Oriented smoothing: the singular letter is deleted.
    Smooth,
    /// The singular letter becomes a negative crossing.
    Negative,
}

impl Resolution {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Resolution::Negative
        } else {
            Resolution::Smooth
        }
    }
}

/// `ε ∈ {0,1}^d`; entry `k` refers to the singular point labeled `k + 1`.
/// `0` is the smoothing and `1` the negative crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResolutionVector(Vec<bool>);

impl ResolutionVector {
    pub fn new(bits: Vec<bool>) -> Self {
        ResolutionVector(bits)
    }

    pub fn zeros(d: usize) -> Self {
        ResolutionVector(vec![false; d])
    }

    /// The vector whose binary expansion (first entry most significant) is
    /// `index`. Lexicographic order on vectors matches numeric order.
    pub fn from_index(d: usize, index: usize) -> Self {
        ResolutionVector((0..d).map(|k| index >> (d - 1 - k) & 1 == 1).collect())
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| acc << 1 | b as usize)
    }

    pub fn all(d: usize) -> impl Iterator<Item = ResolutionVector> {
        (0..1usize << d).map(move |i| Self::from_index(d, i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn concat(&self, other: &ResolutionVector) -> ResolutionVector {
        ResolutionVector(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `wε` with `(wε)_{w(k)} = ε_k`, for `w` given as 1-based images.
    pub fn permuted(&self, w: &[usize]) -> ResolutionVector {
        let mut out = vec![false; self.0.len()];
        for (k, &b) in self.0.iter().enumerate() {
            out[w[k] - 1] = b;
        }
        ResolutionVector(out)
    }
}

impl fmt::Display for ResolutionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b as u8)?;
        }
        Ok(())
    }
}

fn check_permutation(p: &[usize], d: usize) -> Result<(), DiagramError> {
    if p.len() != d {
        return Err(DiagramError::LengthMismatch {
            expected: d,
            found: p.len(),
        });
    }
    let mut seen = vec![false; d];
    for &k in p {
        if k == 0 || k > d || seen[k - 1] {
            return Err(DiagramError::InvalidOrdering(p.to_vec(), d));
        }
        seen[k - 1] = true;
    }
    Ok(())
}

/// A closed singular braid with a linear order on its singular points.
///
/// `ordering[k]` is the label of the `k`-th singular letter of the word in
/// reading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSingularLink {
    word: SingularBraidWord,
    ordering: Vec<usize>,
}

impl OrderedSingularLink {
    pub fn new(word: SingularBraidWord, ordering: Vec<usize>) -> Result<Self, DiagramError> {
        check_permutation(&ordering, word.singular_count())?;
        Ok(OrderedSingularLink { word, ordering })
    }

    /// Labels singular points in reading order.
    pub fn from_word(word: SingularBraidWord) -> Self {
        let d = word.singular_count();
        OrderedSingularLink {
            word,
            ordering: (1..=d).collect(),
        }
    }

    /// Builds a link from letters annotated with the labels of their
    /// singular points (`None` for crossings).
    pub fn from_labeled(
        strands: usize,
        labeled: Vec<(Letter, Option<usize>)>,
    ) -> Result<Self, DiagramError> {
        let ordering = labeled.iter().filter_map(|(_, l)| *l).collect();
        let letters = labeled.into_iter().map(|(l, _)| l).collect();
        Self::new(SingularBraidWord::new(strands, letters)?, ordering)
    }

    /// Letters paired with the label of each singular point.
    pub fn labeled(&self) -> Vec<(Letter, Option<usize>)> {
        let mut labels = self.ordering.iter();
        self.word
            .letters
            .iter()
            .map(|l| {
                (
                    *l,
                    if l.is_singular() {
                        labels.next().copied()
                    } else {
                        None
                    },
                )
            })
            .collect()
    }

    pub fn word(&self) -> &SingularBraidWord {
        &self.word
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn singular_count(&self) -> usize {
        self.ordering.len()
    }

    pub fn closure_components(&self) -> usize {
        self.word.closure_components()
    }

    /// Resolves every singular point: the point labeled `k` follows `rho[k-1]`.
    pub fn resolve_all(&self, rho: &ResolutionVector) -> Result<SingularBraidWord, DiagramError> {
        let d = self.singular_count();
        if rho.len() != d {
            return Err(DiagramError::LengthMismatch {
                expected: d,
                found: rho.len(),
            });
        }
        let letters = self
            .labeled()
            .into_iter()
            .filter_map(|(l, label)| match label {
                None => Some(l),
                Some(k) => match Resolution::from_bit(rho.bits()[k - 1]) {
                    Resolution::Smooth => None,
                    Resolution::Negative => Some(Letter::Neg(l.index())),
                },
            })
            .collect();
        Ok(SingularBraidWord {
            strands: self.word.strands,
            letters,
        })
    }

    /// Resolves the point labeled 1 and shifts the remaining labels down.
    pub fn resolve_first(&self, mode: Resolution) -> Result<OrderedSingularLink, DiagramError> {
        if self.singular_count() == 0 {
            return Err(DiagramError::NoSingularPoint);
        }
        let labeled = self
            .labeled()
            .into_iter()
            .filter_map(|(l, label)| match label {
                Some(1) => match mode {
                    Resolution::Smooth => None,
                    Resolution::Negative => Some((Letter::Neg(l.index()), None)),
                },
                Some(k) => Some((l, Some(k - 1))),
                None => Some((l, None)),
            })
            .collect();
        Self::from_labeled(self.word.strands, labeled)
    }

    fn juxtapose(&self, other: &OrderedSingularLink, shift: usize) -> OrderedSingularLink {
        let d1 = self.singular_count();
        let mut letters = self.word.letters.clone();
        letters.extend(other.word.letters.iter().map(|l| l.shifted(shift)));
        let mut ordering = self.ordering.clone();
        ordering.extend(other.ordering.iter().map(|k| k + d1));
        OrderedSingularLink {
            word: SingularBraidWord {
                strands: shift + other.word.strands,
                letters,
            },
            ordering,
        }
    }

    /// Connected sum along the last strand of `self`, which doubles as the
    /// first strand of `other`. Labels of `other` are shifted past `self`'s.
    pub fn connected_sum(&self, other: &OrderedSingularLink) -> OrderedSingularLink {
        self.juxtapose(other, self.word.strands - 1)
    }

    /// Split union: `other` placed beside `self` on fresh strands.
    pub fn split_union(&self, other: &OrderedSingularLink) -> OrderedSingularLink {
        self.juxtapose(other, self.word.strands)
    }

    /// Relabels the point labeled `k` as `w[k-1]`.
    pub fn reorder(&self, w: &[usize]) -> Result<OrderedSingularLink, DiagramError> {
        check_permutation(w, self.singular_count())?;
        let ordering = self.ordering.iter().map(|&k| w[k - 1]).collect();
        Ok(OrderedSingularLink {
            word: self.word.clone(),
            ordering,
        })
    }
}

impl fmt::Display for OrderedSingularLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)?;
        if self.ordering.iter().enumerate().any(|(k, &o)| o != k + 1) {
            write!(f, " | o =")?;
            for o in &self.ordering {
                write!(f, " {o}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for OrderedSingularLink {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        parse_link(s)
    }
}

/// The unknot, closure of the trivial 1-braid.
pub fn unknot() -> OrderedSingularLink {
    OrderedSingularLink::from_word(SingularBraidWord {
        strands: 1,
        letters: vec![],
    })
}

/// The generator `X`: closure of `t1` on two strands (a singular knot).
pub fn generator_x() -> OrderedSingularLink {
    OrderedSingularLink::from_word(SingularBraidWord {
        strands: 2,
        letters: vec![Letter::Sing(1)],
    })
}

/// The generator `Y`: closure of `t1 s1` (two components).
pub fn generator_y() -> OrderedSingularLink {
    OrderedSingularLink::from_word(SingularBraidWord {
        strands: 2,
        letters: vec![Letter::Sing(1), Letter::Pos(1)],
    })
}

/// `Y'`: closure of `t1 s1^-1`, related by `t^-1 Y - t Y' = x X`.
pub fn generator_y_prime() -> OrderedSingularLink {
    OrderedSingularLink::from_word(SingularBraidWord {
        strands: 2,
        letters: vec![Letter::Sing(1), Letter::Neg(1)],
    })
}

/// The basis link `Z_ε`: connected sum of `X` (for 0) and `Y` (for 1) copies
/// in the order of `eps`. The empty pattern gives the unknot.
pub fn basis_link(eps: &ResolutionVector) -> OrderedSingularLink {
    eps.bits().iter().fold(unknot(), |acc, &b| {
        acc.connected_sum(&if b { generator_y() } else { generator_x() })
    })
}
