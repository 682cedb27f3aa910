//! Rewrites of singular braid words that preserve the isotopy class of the
//! ordered closure. Labels always travel with their singular letters.

use super::{DiagramError, Letter, OrderedSingularLink};

/// `u w u^-1` for an invertible letter `u`.
pub fn conjugate(
    link: &OrderedSingularLink,
    u: Letter,
) -> Result<OrderedSingularLink, DiagramError> {
    let inv = u.inverse().ok_or(DiagramError::NotInvertible(u))?;
    let mut labeled = vec![(u, None)];
    labeled.extend(link.labeled());
    labeled.push((inv, None));
    OrderedSingularLink::from_labeled(link.word().strands(), labeled)
}

/// Moves the first `k` letters to the end.
pub fn rotate(link: &OrderedSingularLink, k: usize) -> OrderedSingularLink {
    let mut labeled = link.labeled();
    if !labeled.is_empty() {
        let k = k % labeled.len();
        labeled.rotate_left(k);
    }
    OrderedSingularLink::from_labeled(link.word().strands(), labeled)
        .expect("rotation keeps the word valid")
}

/// Markov stabilization: adds a strand and a crossing `s_n^±1` at the end.
pub fn stabilize(link: &OrderedSingularLink, positive: bool) -> OrderedSingularLink {
    let n = link.word().strands();
    let mut labeled = link.labeled();
    labeled.push((
        if positive {
            Letter::Pos(n)
        } else {
            Letter::Neg(n)
        },
        None,
    ));
    OrderedSingularLink::from_labeled(n + 1, labeled).expect("stabilization keeps the word valid")
}

/// Inserts `segment` before letter `at`. Singular letters in the segment carry
/// their labels, which must extend the link's labels to a permutation.
pub fn splice(
    link: &OrderedSingularLink,
    at: usize,
    segment: &[(Letter, Option<usize>)],
) -> Result<OrderedSingularLink, DiagramError> {
    let mut labeled = link.labeled();
    let at = at.min(labeled.len());
    labeled.splice(at..at, segment.iter().copied());
    OrderedSingularLink::from_labeled(link.word().strands(), labeled)
}

/// A defining relation of the singular braid monoid, as two equal segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`, or its inverse when `positive`
    /// is false.
    Braid { i: usize, positive: bool },
    /// `a b = b a` for letters whose indices differ by at least two.
    Distant(Letter, Letter),
    /// `t_i s_i = s_i t_i`
    SingCommutes { i: usize },
    /// `t_i s_j s_i = s_j s_i t_j` for `|i - j| = 1`.
    Mixed { i: usize, j: usize },
}

type Segment = Vec<(Letter, Option<usize>)>;

impl Relation {
    /// Both sides; new singular points are labeled from `next_label` upward.
    pub fn sides(&self, next_label: usize) -> (Segment, Segment) {
        use Letter::*;
        match *self {
            Relation::Braid { i, positive } => {
                let l = |k| if positive { Pos(k) } else { Neg(k) };
                (
                    vec![(l(i), None), (l(i + 1), None), (l(i), None)],
                    vec![(l(i + 1), None), (l(i), None), (l(i + 1), None)],
                )
            }
            Relation::Distant(a, b) => {
                let la = a.is_singular().then_some(next_label);
                let lb = b
                    .is_singular()
                    .then_some(next_label + a.is_singular() as usize);
                (vec![(a, la), (b, lb)], vec![(b, lb), (a, la)])
            }
            Relation::SingCommutes { i } => (
                vec![(Sing(i), Some(next_label)), (Pos(i), None)],
                vec![(Pos(i), None), (Sing(i), Some(next_label))],
            ),
            Relation::Mixed { i, j } => (
                vec![(Sing(i), Some(next_label)), (Pos(j), None), (Pos(i), None)],
                vec![(Pos(j), None), (Pos(i), None), (Sing(j), Some(next_label))],
            ),
        }
    }

    /// The two links obtained by splicing each side into `link` at `at`.
    pub fn apply(
        &self,
        link: &OrderedSingularLink,
        at: usize,
    ) -> Result<(OrderedSingularLink, OrderedSingularLink), DiagramError> {
        let (lhs, rhs) = self.sides(link.singular_count() + 1);
        Ok((splice(link, at, &lhs)?, splice(link, at, &rhs)?))
    }
}
