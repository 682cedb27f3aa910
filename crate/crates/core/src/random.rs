//! Seeded generators of braid words, ordered links, isotopy moves and
//! coefficient vectors. The same seed always yields the same sequence.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{BaseRing, LaurentPoly};
use crate::diagram::moves::{conjugate, rotate, stabilize, Relation};
use crate::diagram::{Letter, OrderedSingularLink, ResolutionVector, SingularBraidWord};

/// Size limits for generated links.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_strands: usize,
    pub max_len: usize,
    pub max_sing: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_strands: 4,
            max_len: 8,
            max_sing: 3,
        }
    }
}

/// The isotopy moves exercised by the property suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Conjugation,
    PositiveStabilization,
    NegativeStabilization,
    Braid,
    Distant,
    SingCommutes,
    Mixed,
}

impl MoveKind {
    pub const ALL: [MoveKind; 7] = [
        MoveKind::Conjugation,
        MoveKind::PositiveStabilization,
        MoveKind::NegativeStabilization,
        MoveKind::Braid,
        MoveKind::Distant,
        MoveKind::SingCommutes,
        MoveKind::Mixed,
    ];

    fn min_strands(self) -> usize {
        match self {
            MoveKind::Braid | MoveKind::Mixed => 3,
            MoveKind::Distant => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MoveKind::Conjugation => "conjugation",
            MoveKind::PositiveStabilization => "positive stabilization",
            MoveKind::NegativeStabilization => "negative stabilization",
            MoveKind::Braid => "braid relation",
            MoveKind::Distant => "distant commutation",
            MoveKind::SingCommutes => "t_i s_i = s_i t_i",
            MoveKind::Mixed => "t_i s_j s_i = s_j s_i t_j",
        };
        f.write_str(name)
    }
}

/// `L_0`, `L_+`, `L_-` differing at one crossing.
#[derive(Clone, Debug)]
pub struct SkeinTriple {
    pub smoothed: OrderedSingularLink,
    pub positive: OrderedSingularLink,
    pub negative: OrderedSingularLink,
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bounds: Bounds,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bounds(seed, Bounds::default())
    }

    pub fn with_bounds(seed: u64, bounds: Bounds) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bounds,
        }
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn crossing(&mut self, strands: usize) -> Letter {
        let i = self.rng.gen_range(1..strands);
        if self.rng.gen_bool(0.5) {
            Letter::Pos(i)
        } else {
            Letter::Neg(i)
        }
    }

    fn any_letter(&mut self, strands: usize) -> Letter {
        let i = self.rng.gen_range(1..strands);
        match self.rng.gen_range(0..3) {
            0 => Letter::Pos(i),
            1 => Letter::Neg(i),
            _ => Letter::Sing(i),
        }
    }

    /// A uniform index in `0..n`.
    pub fn rng_range(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn permutation(&mut self, d: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (1..=d).collect();
        w.shuffle(&mut self.rng);
        w
    }

    /// A word on exactly `strands` strands with `d` singular letters.
    pub fn word_with(&mut self, strands: usize, d: usize) -> SingularBraidWord {
        let len = self
            .rng
            .gen_range(0..=self.bounds.max_len.saturating_sub(d));
        let mut letters: Vec<Letter> = (0..len).map(|_| self.crossing(strands)).collect();
        for _ in 0..d {
            let i = self.rng.gen_range(1..strands);
            let at = self.rng.gen_range(0..=letters.len());
            letters.insert(at, Letter::Sing(i));
        }
        SingularBraidWord::new(strands, letters).expect("indices below strand count")
    }

    pub fn nonsingular_word(&mut self) -> SingularBraidWord {
        let n = self.rng.gen_range(2..=self.bounds.max_strands.max(2));
        self.word_with(n, 0)
    }

    fn strands_at_least(&mut self, min: usize) -> usize {
        self.rng.gen_range(min..=self.bounds.max_strands.max(min))
    }

    fn link_with(&mut self, strands: usize, d: usize) -> OrderedSingularLink {
        let word = self.word_with(strands, d);
        let ordering = self.permutation(d);
        OrderedSingularLink::new(word, ordering).expect("ordering is a permutation")
    }

    /// A random ordered link with a random ordering of its singular points.
    pub fn link(&mut self) -> OrderedSingularLink {
        let n = self.strands_at_least(2);
        let d = self.rng.gen_range(0..=self.bounds.max_sing);
        self.link_with(n, d)
    }

    /// Three links that agree except at one position, where they carry
    /// nothing, a positive crossing, or a negative crossing.
    pub fn skein_triple(&mut self) -> SkeinTriple {
        let n = self.strands_at_least(2);
        let d = self.rng.gen_range(
            0..=self
                .bounds
                .max_sing
                .min(self.bounds.max_len.saturating_sub(1)),
        );
        let base = self.link_with(n, d);
        let mut labeled = base.labeled();
        let at = self.rng.gen_range(0..=labeled.len());
        let i = self.rng.gen_range(1..n);
        let build = |labeled: &[(Letter, Option<usize>)]| {
            OrderedSingularLink::from_labeled(n, labeled.to_vec()).expect("valid splice")
        };
        let smoothed = build(&labeled);
        labeled.insert(at, (Letter::Pos(i), None));
        let positive = build(&labeled);
        labeled[at] = (Letter::Neg(i), None);
        let negative = build(&labeled);
        SkeinTriple {
            smoothed,
            positive,
            negative,
        }
    }

    /// Two presentations of the same ordered link related by `kind`.
    pub fn isotopy_pair(&mut self, kind: MoveKind) -> (OrderedSingularLink, OrderedSingularLink) {
        let n = self.strands_at_least(kind.min_strands());
        let d = self
            .rng
            .gen_range(0..=self.bounds.max_sing.saturating_sub(1));
        let base = self.link_with(n, d);
        let at = self.rng.gen_range(0..=base.word().len());
        match kind {
            MoveKind::Conjugation => {
                let u = self.crossing(n);
                let k = self.rng.gen_range(0..=base.word().len());
                let conj = conjugate(&base, u).expect("crossings are invertible");
                (base, rotate(&conj, k))
            }
            MoveKind::PositiveStabilization => {
                let s = stabilize(&base, true);
                (base, s)
            }
            MoveKind::NegativeStabilization => {
                let s = stabilize(&base, false);
                (base, s)
            }
            MoveKind::Braid => {
                let i = self.rng.gen_range(1..n - 1);
                let positive = self.rng.gen_bool(0.5);
                Relation::Braid { i, positive }
                    .apply(&base, at)
                    .expect("valid relation")
            }
            MoveKind::Distant => {
                let i = self.rng.gen_range(1..n - 2);
                let j = self.rng.gen_range(i + 2..n);
                let (i, j) = if self.rng.gen_bool(0.5) {
                    (i, j)
                } else {
                    (j, i)
                };
                let a = self.any_letter(n).with_index(i);
                let b = self.any_letter(n).with_index(j);
                Relation::Distant(a, b)
                    .apply(&base, at)
                    .expect("valid relation")
            }
            MoveKind::SingCommutes => {
                let i = self.rng.gen_range(1..n);
                Relation::SingCommutes { i }
                    .apply(&base, at)
                    .expect("valid relation")
            }
            MoveKind::Mixed => {
                let i = self.rng.gen_range(1..n);
                let j = if i == 1 || (i + 1 < n && self.rng.gen_bool(0.5)) {
                    i + 1
                } else {
                    i - 1
                };
                Relation::Mixed { i, j }
                    .apply(&base, at)
                    .expect("valid relation")
            }
        }
    }

    /// A Laurent polynomial with up to four terms, exponents in `[-3, 3]`
    /// and coefficients in `[-5, 5]`.
    pub fn laurent(&mut self, base: BaseRing) -> LaurentPoly {
        let k = self.rng.gen_range(0..=4);
        let terms: Vec<(i64, i64, i64)> = (0..k)
            .map(|_| {
                (
                    self.rng.gen_range(-3..=3),
                    self.rng.gen_range(-3..=3),
                    self.rng.gen_range(-5..=5),
                )
            })
            .collect();
        LaurentPoly::from_terms(base, terms)
    }

    /// A full resolution vector of `2^d` random values.
    pub fn resolution_values(
        &mut self,
        base: BaseRing,
        d: usize,
    ) -> BTreeMap<ResolutionVector, LaurentPoly> {
        ResolutionVector::all(d)
            .map(|rho| (rho, self.laurent(base)))
            .collect()
    }
}
