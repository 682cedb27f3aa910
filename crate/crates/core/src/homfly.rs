//! HOMFLY-PT polynomial of closed braids, normalized so the unknot is `1`
//! and satisfying `x P(L_0) = t^-1 P(L_+) - t P(L_-)`.
//!
//! The evaluation is a skein tree. Each closure is walked from a basepoint
//! on every component, components in order of their lowest strand at the
//! top of the braid. The first crossing met from below is switched, which
//! leaves one fewer such crossing, and smoothed, which leaves one fewer
//! crossing. A diagram with none left is descending, hence an unlink.

use std::collections::HashMap;
use std::sync::RwLock;

use thiserror::Error;

use crate::coeff::{LaurentPoly, RingMode};
use crate::diagram::{Letter, SingularBraidWord};

/// A value of the HOMFLY-PT invariant.
pub type SkeinValue = LaurentPoly;

pub const DEFAULT_MAX_CROSSINGS: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomflyError {
    #[error("word has {0} singular crossing(s); HOMFLY-PT needs a nonsingular word")]
    SingularInput(usize),
    #[error("{found} crossings exceed the limit of {max}")]
    TooManyCrossings { found: usize, max: usize },
    #[error("the empty link has no value")]
    EmptyLink,
}

/// Signed 1-based generators: `+i` is `s_i`, `-i` is `s_i^-1`.
type Gens = Vec<i32>;

fn to_gens(w: &SingularBraidWord) -> Result<Gens, HomflyError> {
    let d = w.singular_count();
    if d > 0 {
        return Err(HomflyError::SingularInput(d));
    }
    Ok(w.letters()
        .iter()
        .map(|l| match *l {
            Letter::Pos(i) => i as i32,
            Letter::Neg(i) => -(i as i32),
            Letter::Sing(_) => unreachable!(),
        })
        .collect())
}

/// Skein coefficients of one ring mode.
#[derive(Debug)]
struct SkeinCoeffs {
    delta: LaurentPoly,
    /// `P(+) = t^2 P(-) + t x P(0)`
    t2: LaurentPoly,
    tx: LaurentPoly,
    /// `P(-) = t^-2 P(+) - t^-1 x P(0)`
    t_neg2: LaurentPoly,
    neg_t_inv_x: LaurentPoly,
}

impl SkeinCoeffs {
    fn new(mode: RingMode) -> Self {
        SkeinCoeffs {
            delta: mode.delta(),
            t2: mode.t_pow(2),
            tx: &mode.t() * &mode.x(),
            t_neg2: mode.t_pow(-2),
            neg_t_inv_x: -(&mode.t_inv() * &mode.x()),
        }
    }

    fn unlink(&self, components: usize) -> LaurentPoly {
        self.delta.pow(components as u32 - 1)
    }

    /// Combines the values of the switched and smoothed diagrams at a
    /// crossing of sign `positive`.
    fn expand(
        &self,
        positive: bool,
        switched: &LaurentPoly,
        smoothed: &LaurentPoly,
    ) -> LaurentPoly {
        if positive {
            &(&self.t2 * switched) + &(&self.tx * smoothed)
        } else {
            &(&self.t_neg2 * switched) + &(&self.neg_t_inv_x * smoothed)
        }
    }
}

enum Descent {
    /// Index of the first crossing reached along its under-strand.
    Ascending(usize),
    /// The diagram is descending; number of components.
    Descending(usize),
}

/// In `s_i` the strand entering from the left (position `i - 1`, 0-based)
/// passes over; in `s_i^-1` the one entering from the right does.
fn descent(strands: usize, gens: &[i32]) -> Descent {
    let mut visited = vec![false; gens.len()];
    let mut seen_top = vec![false; strands];
    let mut components = 0;
    for start in 0..strands {
        if seen_top[start] {
            continue;
        }
        components += 1;
        let mut pos = start;
        loop {
            seen_top[pos] = true;
            for (k, &g) in gens.iter().enumerate() {
                let i = g.unsigned_abs() as usize;
                if pos + 1 != i && pos != i {
                    continue;
                }
                let from_left = pos + 1 == i;
                let over = from_left == (g > 0);
                if !visited[k] {
                    visited[k] = true;
                    if !over {
                        return Descent::Ascending(k);
                    }
                }
                pos = if from_left { i } else { i - 1 };
            }
            if pos == start {
                break;
            }
        }
    }
    Descent::Descending(components)
}

fn switch_and_smooth(gens: &[i32], k: usize) -> (Gens, Gens) {
    let mut switched = gens.to_vec();
    switched[k] = -switched[k];
    let mut smoothed = gens.to_vec();
    smoothed.remove(k);
    (switched, smoothed)
}

/// Value of the `k`-component unlink, `δ^(k-1)` with `δ = x^-1 (t^-1 - t)`.
pub fn unlink_value(mode: RingMode, k: usize) -> Result<SkeinValue, HomflyError> {
    if k == 0 {
        return Err(HomflyError::EmptyLink);
    }
    Ok(SkeinCoeffs::new(mode).unlink(k))
}

/// Full skein-tree expansion without memoization or simplification. Only
/// suitable for small words; used as a reference for [`HomflyEngine`].
pub fn naive_homfly(mode: RingMode, word: &SingularBraidWord) -> Result<SkeinValue, HomflyError> {
    fn expand(c: &SkeinCoeffs, strands: usize, gens: &[i32]) -> LaurentPoly {
        match descent(strands, gens) {
            Descent::Descending(components) => c.unlink(components),
            Descent::Ascending(k) => {
                let (switched, smoothed) = switch_and_smooth(gens, k);
                c.expand(
                    gens[k] > 0,
                    &expand(c, strands, &switched),
                    &expand(c, strands, &smoothed),
                )
            }
        }
    }
    let gens = to_gens(word)?;
    Ok(expand(&SkeinCoeffs::new(mode), word.strands(), &gens))
}

/// Cancels `g g^-1` pairs, including across the ends of the cyclic word.
fn cyclic_reduce(gens: &mut Gens) {
    let mut out: Gens = Vec::with_capacity(gens.len());
    for &g in gens.iter() {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    let mut lo = 0;
    let mut hi = out.len();
    while hi - lo >= 2 && out[lo] == -out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    *gens = out[lo..hi].to_vec();
}

/// Lexicographically least rotation.
fn least_rotation(gens: &[i32]) -> Gens {
    let m = gens.len();
    (0..m.max(1))
        .map(|r| gens[r.min(m)..].iter().chain(&gens[..r.min(m)]))
        .min_by(|a, b| a.clone().cmp(b.clone()))
        .map(|it| it.copied().collect())
        .unwrap_or_default()
}

/// Memoizing HOMFLY-PT evaluator for one ring mode.
///
/// The cache maps cyclically reduced, least-rotated words to their values and
/// may be shared by concurrent callers.
#[derive(Debug)]
pub struct HomflyEngine {
    mode: RingMode,
    max_crossings: usize,
    coeffs: SkeinCoeffs,
    cache: RwLock<HashMap<(usize, Gens), LaurentPoly>>,
}

impl HomflyEngine {
    pub fn new(mode: RingMode) -> Self {
        Self::with_max_crossings(mode, DEFAULT_MAX_CROSSINGS)
    }

    pub fn with_max_crossings(mode: RingMode, max_crossings: usize) -> Self {
        HomflyEngine {
            mode,
            max_crossings,
            coeffs: SkeinCoeffs::new(mode),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn max_crossings(&self) -> usize {
        self.max_crossings
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    /// HOMFLY-PT polynomial of the closure of a nonsingular word.
    pub fn homfly(&self, word: &SingularBraidWord) -> Result<SkeinValue, HomflyError> {
        let gens = to_gens(word)?;
        if gens.len() > self.max_crossings {
            return Err(HomflyError::TooManyCrossings {
                found: gens.len(),
                max: self.max_crossings,
            });
        }
        Ok(self.eval(word.strands(), gens))
    }

    fn eval(&self, mut strands: usize, mut gens: Gens) -> LaurentPoly {
        loop {
            cyclic_reduce(&mut gens);
            if strands == 1 {
                return self.mode.one();
            }
            let mut uses = vec![0usize; strands];
            for g in &gens {
                uses[g.unsigned_abs() as usize] += 1;
            }
            // An unused gap splits the closure into two unlinked pieces.
            if let Some(i) = (1..strands).find(|&i| uses[i] == 0) {
                let cut = i as i32;
                let left = gens.iter().copied().filter(|g| g.abs() < cut).collect();
                let right = gens
                    .iter()
                    .filter(|g| g.abs() > cut)
                    .map(|&g| g - g.signum() * cut)
                    .collect();
                let l = self.eval(i, left);
                let r = self.eval(strands - i, right);
                return &(&self.coeffs.delta * &l) * &r;
            }
            // Markov destabilization on the last or first strand.
            let last = strands as i32 - 1;
            if uses[strands - 1] == 1 {
                let k = gens.iter().position(|g| g.abs() == last).expect("counted");
                gens.rotate_left(k + 1);
                gens.pop();
                strands -= 1;
                continue;
            }
            if uses[1] == 1 {
                let k = gens.iter().position(|g| g.abs() == 1).expect("counted");
                gens.remove(k);
                for g in gens.iter_mut() {
                    *g -= g.signum();
                }
                strands -= 1;
                continue;
            }
            break;
        }

        // The rotated form is only a cache key: the walk below must keep the
        // caller's basepoints so that each switch removes an ascending crossing.
        let key = (strands, least_rotation(&gens));
        if let Some(v) = self.cache.read().expect("cache lock").get(&key) {
            return v.clone();
        }
        let value = match descent(strands, &gens) {
            Descent::Descending(components) => self.coeffs.unlink(components),
            Descent::Ascending(k) => {
                let (switched, smoothed) = switch_and_smooth(&gens, k);
                let a = self.eval(strands, switched);
                let b = self.eval(strands, smoothed);
                self.coeffs.expand(gens[k] > 0, &a, &b)
            }
        };
        self.cache
            .write()
            .expect("cache lock")
            .entry(key)
            .or_insert(value)
            .clone()
    }
}

/// One-shot evaluation with a fresh engine.
pub fn homfly(mode: RingMode, word: &SingularBraidWord) -> Result<SkeinValue, HomflyError> {
    HomflyEngine::new(mode).homfly(word)
}
