//! Seeded property suites. Each suite stops at its first counterexample and
//! reports it together with the seed that produced it.

use std::fmt;
use std::str::FromStr;

use crate::coeff::RingMode;
use crate::diagram::moves::rotate;
use crate::diagram::{unknot, Letter, OrderedSingularLink, SingularBraidWord};
use crate::homfly::{naive_homfly, DEFAULT_MAX_CROSSINGS};
use crate::random::{Bounds, MoveKind, Sampler};
use crate::skein::{SkeinConfig, SkeinEngine, SkeinError, DEFAULT_MAX_SINGULAR};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Skein,
    Markov,
    Star,
    SplitProduct,
    Ordering,
    Specialize,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Skein,
        Suite::Markov,
        Suite::Star,
        Suite::SplitProduct,
        Suite::Ordering,
        Suite::Specialize,
        Suite::Oracle,
    ];

    /// Suites selected by a command-line name; `all` selects every suite.
    pub fn select(name: &str) -> Result<Vec<Suite>, UnknownSuite> {
        if name == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![name.parse()?])
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Skein => "skein",
            Suite::Markov => "markov",
            Suite::Star => "star",
            Suite::SplitProduct => "lemma22",
            Suite::Ordering => "ordering",
            Suite::Specialize => "specialize",
            Suite::Oracle => "oracle",
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("unknown suite `{0}` (expected skein, markov, star, lemma22, ordering, specialize, oracle or all)")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub mode: RingMode,
    pub seed: u64,
    /// Random cases per property.
    pub cases: usize,
    pub bounds: Bounds,
    pub jobs: usize,
    pub max_crossings: usize,
    pub max_singular: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            mode: RingMode::Generic,
            seed: 0,
            cases: 100,
            bounds: Bounds::default(),
            jobs: 1,
            max_crossings: DEFAULT_MAX_CROSSINGS,
            max_singular: DEFAULT_MAX_SINGULAR,
        }
    }
}

impl CheckConfig {
    fn engine(&self, mode: RingMode) -> SkeinEngine {
        SkeinEngine::with_config(
            mode,
            SkeinConfig {
                jobs: self.jobs,
                max_crossings: self.max_crossings,
                max_singular: self.max_singular,
            },
        )
    }

    fn sampler(&self) -> Sampler {
        Sampler::with_bounds(self.seed, self.bounds)
    }
}

/// The first failing case of a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub case: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub mode: RingMode,
    pub seed: u64,
    pub cases: usize,
    pub failure: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "{}: ok ({} cases, ring {}, seed {})",
                self.suite, self.cases, self.mode, self.seed
            ),
            Some(c) => write!(
                f,
                "{}: FAIL (ring {}, seed {}, case {}): {}",
                self.suite, self.mode, self.seed, c.case, c.detail
            ),
        }
    }
}

type Outcome = Result<usize, Counterexample>;

fn fail(case: usize, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        case,
        detail: detail.into(),
    }
}

fn engine_error(case: usize, subject: impl fmt::Display, e: SkeinError) -> Counterexample {
    fail(case, format!("{subject}: {e}"))
}

pub fn run(suite: Suite, config: &CheckConfig) -> SuiteReport {
    let outcome = match suite {
        Suite::Skein => skein_relation(config),
        Suite::Markov => isotopy(config),
        Suite::Star => multiplicativity(config),
        Suite::SplitProduct => sum_vs_union(config),
        Suite::Ordering => ordering(config),
        Suite::Specialize => specialization(config),
        Suite::Oracle => oracle(config),
    };
    let (cases, failure) = match outcome {
        Ok(n) => (n, None),
        Err(c) => (c.case + 1, Some(c)),
    };
    SuiteReport {
        suite,
        mode: config.mode,
        seed: config.seed,
        cases,
        failure,
    }
}

/// `x inv(L_0) = t^-1 inv(L_+) - t inv(L_-)` on ordered coordinates.
pub fn skein_relation(config: &CheckConfig) -> Outcome {
    let mode = config.mode;
    let engine = config.engine(mode);
    let mut sampler = config.sampler();
    for case in 0..config.cases {
        let t = sampler.skein_triple();
        let inv = |l: &OrderedSingularLink| {
            engine
                .invariant_ordered(l)
                .map_err(|e| engine_error(case, l, e))
        };
        let (a0, ap, am) = (inv(&t.smoothed)?, inv(&t.positive)?, inv(&t.negative)?);
        let lhs = a0
            .scale(&mode.x())
            .map_err(|e| engine_error(case, &t.smoothed, e))?;
        let rhs = ap
            .scale(&mode.t_inv())
            .and_then(|p| p.try_sub(&am.scale(&mode.t())?))
            .map_err(|e| engine_error(case, &t.positive, e))?;
        if lhs != rhs {
            return Err(fail(
                case,
                format!("L0 = {}, L+ = {}, L- = {}: x*inv(L0) = {{{lhs}}} but t^-1 inv(L+) - t inv(L-) = {{{rhs}}}", t.smoothed, t.positive, t.negative),
            ));
        }
    }
    Ok(config.cases)
}

/// Every move of [`MoveKind::ALL`] leaves the ordered coordinates unchanged;
/// `config.cases` applications of each.
pub fn isotopy(config: &CheckConfig) -> Outcome {
    let engine = config.engine(config.mode);
    let mut sampler = config.sampler();
    let mut case = 0;
    for kind in MoveKind::ALL {
        for _ in 0..config.cases {
            let (a, b) = sampler.isotopy_pair(kind);
            let ia = engine
                .invariant_ordered(&a)
                .map_err(|e| engine_error(case, &a, e))?;
            let ib = engine
                .invariant_ordered(&b)
                .map_err(|e| engine_error(case, &b, e))?;
            if ia != ib {
                return Err(fail(
                    case,
                    format!("{kind}: `{a}` gives {{{ia}}} but `{b}` gives {{{ib}}}"),
                ));
            }
            case += 1;
        }
    }
    Ok(case)
}

/// Connected sum against the algebra structure: coordinates multiply under
/// `⋆`, polynomials multiply in `R[X, Y]`, the unknot is a unit, and the sum
/// does not depend on where the band is attached.
pub fn multiplicativity(config: &CheckConfig) -> Outcome {
    let engine = config.engine(config.mode);
    let mut sampler = config.sampler();
    for case in 0..config.cases {
        let (l1, l2) = (sampler.link(), sampler.link());
        let sum = l1.connected_sum(&l2);
        let inv = |l: &OrderedSingularLink| {
            engine
                .invariant_ordered(l)
                .map_err(|e| engine_error(case, l, e))
        };
        let (a1, a2, a) = (inv(&l1)?, inv(&l2)?, inv(&sum)?);
        let starred = a1.star(&a2).map_err(|e| engine_error(case, &sum, e))?;
        if a != starred {
            return Err(fail(case, format!("`{l1}` # `{l2}` = `{sum}`: {{{a}}} but the star of the factors is {{{starred}}}")));
        }
        let product = a1
            .project()
            .try_mul(&a2.project())
            .map_err(|e| engine_error(case, &sum, e))?;
        if a.project() != product {
            return Err(fail(
                case,
                format!(
                    "`{sum}`: invariant {} but product of factors {product}",
                    a.project()
                ),
            ));
        }
        for unit_sum in [unknot().connected_sum(&l1), l1.connected_sum(&unknot())] {
            let u = inv(&unit_sum)?;
            if u != a1 {
                return Err(fail(
                    case,
                    format!("unit law fails for `{l1}`: `{unit_sum}` gives {{{u}}}"),
                ));
            }
        }
        let k1 = sampler.rng_range(l1.word().len() + 1);
        let k2 = sampler.rng_range(l2.word().len() + 1);
        let moved = rotate(&l1, k1).connected_sum(&rotate(&l2, k2));
        let b = inv(&moved)?;
        if a != b {
            return Err(fail(
                case,
                format!("band site: `{sum}` gives {{{a}}} but `{moved}` gives {{{b}}}"),
            ));
        }
    }
    Ok(config.cases)
}

/// `(t^-1 - t) inv(L1 # L2) = x inv(L1 ⊔ L2)`; at `t = 1` both sides vanish.
pub fn sum_vs_union(config: &CheckConfig) -> Outcome {
    let mode = config.mode;
    let engine = config.engine(mode);
    let mut sampler = config.sampler();
    for case in 0..config.cases {
        let (l1, l2) = (sampler.link(), sampler.link());
        let (sum, union) = (l1.connected_sum(&l2), l1.split_union(&l2));
        let inv =
            |l: &OrderedSingularLink| engine.invariant(l).map_err(|e| engine_error(case, l, e));
        let lhs = inv(&sum)?
            .scale(&mode.t_inv_minus_t())
            .map_err(|e| engine_error(case, &sum, e))?;
        let rhs = inv(&union)?
            .scale(&mode.x())
            .map_err(|e| engine_error(case, &union, e))?;
        if lhs != rhs {
            return Err(fail(
                case,
                format!("`{sum}` and `{union}`: (t^-1 - t)*sum = {lhs} but x*union = {rhs}"),
            ));
        }
        if mode == RingMode::Conway && !rhs.is_zero() {
            return Err(fail(
                case,
                format!("`{union}`: split product {rhs} is nonzero at t = 1"),
            ));
        }
    }
    Ok(config.cases)
}

/// Relabeling by `w` permutes coordinates, `a_{wε}(reorder(L, w)) = a_ε(L)`,
/// and leaves the unordered invariant alone.
pub fn ordering(config: &CheckConfig) -> Outcome {
    let engine = config.engine(config.mode);
    let mut sampler = config.sampler();
    for case in 0..config.cases {
        let l = sampler.link();
        let w = sampler.permutation(l.singular_count());
        let r = l
            .reorder(&w)
            .map_err(|e| engine_error(case, &l, e.into()))?;
        let a = engine
            .invariant_ordered(&l)
            .map_err(|e| engine_error(case, &l, e))?;
        let b = engine
            .invariant_ordered(&r)
            .map_err(|e| engine_error(case, &r, e))?;
        if b != a.permuted(&w) {
            return Err(fail(
                case,
                format!("`{l}` reordered by {w:?}: {{{b}}} is not the permutation of {{{a}}}"),
            ));
        }
        if a.project() != b.project() {
            return Err(fail(
                case,
                format!(
                    "`{l}` reordered by {w:?}: {} vs {}",
                    b.project(),
                    a.project()
                ),
            ));
        }
    }
    Ok(config.cases)
}

fn specialization_targets(mode: RingMode) -> Vec<RingMode> {
    match mode {
        RingMode::Generic => vec![RingMode::Conway, RingMode::PrimeField(5)],
        other => vec![other],
    }
}

/// Generic coordinates specialized to `t = 1` and to `GF(p)` agree with the
/// coordinates computed natively there. The targets are Conway and `GF(5)`
/// unless the configured ring selects one of them.
pub fn specialization(config: &CheckConfig) -> Outcome {
    let generic = config.engine(RingMode::Generic);
    let natives: Vec<(RingMode, SkeinEngine)> = specialization_targets(config.mode)
        .into_iter()
        .map(|m| (m, config.engine(m)))
        .collect();
    let mut sampler = config.sampler();
    for case in 0..config.cases {
        let l = sampler.link();
        let a = generic
            .invariant_ordered(&l)
            .map_err(|e| engine_error(case, &l, e))?;
        for (target, native) in &natives {
            let s = a
                .specialize(*target)
                .map_err(|e| engine_error(case, &l, e))?;
            let n = native
                .invariant_ordered(&l)
                .map_err(|e| engine_error(case, &l, e))?;
            if s != n {
                return Err(fail(
                    case,
                    format!("`{l}` in {target}: specialized {{{s}}} but native {{{n}}}"),
                ));
            }
        }
    }
    Ok(config.cases)
}

/// All nonsingular words on `strands` strands of length exactly `len`.
pub fn all_words(strands: usize, len: usize) -> Vec<SingularBraidWord> {
    let letters: Vec<Letter> = (1..strands)
        .flat_map(|i| [Letter::Pos(i), Letter::Neg(i)])
        .collect();
    if letters.is_empty() {
        return if len == 0 {
            vec![SingularBraidWord::trivial(strands).expect("one strand")]
        } else {
            vec![]
        };
    }
    let mut words: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
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
        .map(|w| SingularBraidWord::new(strands, w).expect("indices below strand count"))
        .collect()
}

/// The memoized engine against the naive skein expansion on every word of
/// length at most 6 on at most 3 strands. Deterministic; ignores the seed.
pub fn oracle(config: &CheckConfig) -> Outcome {
    let engine = config.engine(config.mode);
    let mut case = 0;
    for strands in 1..=3 {
        for len in 0..=6 {
            for w in all_words(strands, len) {
                let fast = engine
                    .homfly_engine()
                    .homfly(&w)
                    .map_err(|e| engine_error(case, &w, e.into()))?;
                let slow =
                    naive_homfly(config.mode, &w).map_err(|e| engine_error(case, &w, e.into()))?;
                if fast != slow {
                    return Err(fail(
                        case,
                        format!("`{w}`: engine {fast} but naive expansion {slow}"),
                    ));
                }
                case += 1;
            }
        }
    }
    Ok(case)
}
