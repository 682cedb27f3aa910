//! Coordinates of ordered singular links in the free basis `{Z_ε}` and their
//! projection to the polynomial algebra `R[X, Y]`.
//!
//! A link with `d` singular points is resolved in all `2^d` ways (smoothing
//! or negative crossing at each point), every resolution is evaluated with
//! the HOMFLY-PT engine, and the resulting vector is pulled back through the
//! Kronecker power of the 2x2 evaluation matrix.

mod element;
mod polynomial;
mod solve;

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

pub use element::{project_unordered, star, OrderedSkeinElement};
pub use polynomial::SkeinPolynomial;
pub use solve::{evaluate_coordinates, solve_coordinates, EvalMatrix};

use crate::coeff::{RingError, RingMode};
use crate::diagram::{DiagramError, OrderedSingularLink, ResolutionVector};
use crate::homfly::{HomflyEngine, HomflyError, SkeinValue, DEFAULT_MAX_CROSSINGS};

pub const DEFAULT_MAX_SINGULAR: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("{found} singular points exceed the limit of {max}")]
    TooManySingularPoints { found: usize, max: usize },
    #[error("malformed index set: {0}")]
    MalformedIndexSet(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error(transparent)]
    Homfly(#[from] HomflyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Limits and parallelism for [`SkeinEngine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeinConfig {
    pub jobs: usize,
    pub max_crossings: usize,
    pub max_singular: usize,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig {
            jobs: 1,
            max_crossings: DEFAULT_MAX_CROSSINGS,
            max_singular: DEFAULT_MAX_SINGULAR,
        }
    }
}

/// Computes skein invariants in one ring mode, sharing a HOMFLY-PT cache
/// across calls.
pub struct SkeinEngine {
    homfly: HomflyEngine,
    max_singular: usize,
    pool: Option<rayon::ThreadPool>,
}

impl SkeinEngine {
    pub fn new(mode: RingMode) -> Self {
        Self::with_config(mode, SkeinConfig::default())
    }

    /// With `jobs > 1` resolutions are evaluated on a dedicated pool of that
    /// many threads.
    pub fn with_config(mode: RingMode, config: SkeinConfig) -> Self {
        let pool = (config.jobs > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs)
                .build()
                .expect("thread pool")
        });
        SkeinEngine {
            homfly: HomflyEngine::with_max_crossings(mode, config.max_crossings),
            max_singular: config.max_singular,
            pool,
        }
    }

    pub fn mode(&self) -> RingMode {
        self.homfly.mode()
    }

    pub fn homfly_engine(&self) -> &HomflyEngine {
        &self.homfly
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match &self.pool {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }

    fn check_bound(&self, link: &OrderedSingularLink) -> Result<(), SkeinError> {
        let d = link.singular_count();
        if d > self.max_singular {
            return Err(SkeinError::TooManySingularPoints {
                found: d,
                max: self.max_singular,
            });
        }
        Ok(())
    }

    /// HOMFLY-PT value of every full resolution of `link`.
    pub fn eval_vector(
        &self,
        link: &OrderedSingularLink,
    ) -> Result<BTreeMap<ResolutionVector, SkeinValue>, SkeinError> {
        self.check_bound(link)?;
        let d = link.singular_count();
        let rhos: Vec<ResolutionVector> = ResolutionVector::all(d).collect();
        let eval = |rho: &ResolutionVector| -> Result<(ResolutionVector, SkeinValue), SkeinError> {
            let word = link.resolve_all(rho)?;
            Ok((rho.clone(), self.homfly.homfly(&word)?))
        };
        if self.pool.is_some() {
            self.run(|| rhos.par_iter().map(eval).collect())
        } else {
            rhos.iter().map(eval).collect()
        }
    }

    /// Coordinates of `link` in the basis `{Z_ε}` of the ordered skein module.
    pub fn invariant_ordered(
        &self,
        link: &OrderedSingularLink,
    ) -> Result<OrderedSkeinElement, SkeinError> {
        let p = self.eval_vector(link)?;
        self.run(|| solve_coordinates(self.mode(), &p))
    }

    /// The class of `link` in `R[X, Y]`; independent of the ordering.
    pub fn invariant(&self, link: &OrderedSingularLink) -> Result<SkeinPolynomial, SkeinError> {
        Ok(self.invariant_ordered(link)?.project())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{LaurentPoly, LocalizedScalar};
    use crate::diagram::{basis_link, generator_x, generator_y, generator_y_prime};

    const G: RingMode = RingMode::Generic;

    fn rv(bits: &[u8]) -> ResolutionVector {
        ResolutionVector::new(bits.iter().map(|&b| b == 1).collect())
    }

    #[test]
    fn eval_vectors_of_generators() {
        let e = SkeinEngine::new(G);
        let delta = G.delta();
        let x = e.eval_vector(&generator_x()).unwrap();
        assert_eq!(x[&rv(&[0])], delta);
        assert!(x[&rv(&[1])].is_one());
        let y = e.eval_vector(&generator_y()).unwrap();
        assert!(y[&rv(&[0])].is_one());
        assert_eq!(y[&rv(&[1])], delta);
    }

    // f_{i,d}(u ⋆ v) = f_{i,1}(u) ⋆ v and O ⋆ v = v give the product of the
    // factors' vectors.
    #[test]
    fn eval_vector_of_connected_sum() {
        let e = SkeinEngine::new(G);
        let delta = G.delta();
        let p = e
            .eval_vector(&generator_x().connected_sum(&generator_y()))
            .unwrap();
        assert_eq!(p[&rv(&[0, 0])], delta);
        assert_eq!(p[&rv(&[0, 1])], delta.pow(2));
        assert!(p[&rv(&[1, 0])].is_one());
        assert_eq!(p[&rv(&[1, 1])], delta);
    }

    #[test]
    fn y_prime_coordinates() {
        let a = SkeinEngine::new(G)
            .invariant_ordered(&generator_y_prime())
            .unwrap();
        let base = G.base();
        let expect_x =
            LocalizedScalar::from_poly(G, LaurentPoly::monomial(base, -1, -1, 1)).unwrap();
        let expect_y =
            LocalizedScalar::from_poly(G, LaurentPoly::monomial(base, 1, -2, 0)).unwrap();
        assert_eq!(a.coord(&rv(&[0])), expect_x);
        assert_eq!(a.coord(&rv(&[1])), expect_y);
    }

    #[test]
    fn nonsingular_links_are_scalars() {
        let e = SkeinEngine::new(G);
        let l: OrderedSingularLink = "2: s1 s1 s1".parse().unwrap();
        let a = e.invariant_ordered(&l).unwrap();
        assert_eq!(a.d(), 0);
        let p = e.invariant(&l).unwrap();
        assert_eq!(p.to_string(), "-1 t^4 + 2 t^2 + 1 t^2 x^2");
    }

    #[test]
    fn basis_links_are_unit_vectors() {
        let e = SkeinEngine::new(G);
        for d in 0..=3 {
            for eps in ResolutionVector::all(d) {
                let a = e.invariant_ordered(&basis_link(&eps)).unwrap();
                assert_eq!(a, OrderedSkeinElement::basis(G, eps));
            }
        }
    }

    #[test]
    fn singular_bound() {
        let config = SkeinConfig {
            max_singular: 1,
            ..SkeinConfig::default()
        };
        let e = SkeinEngine::with_config(G, config);
        let l: OrderedSingularLink = "3: t1 t2".parse().unwrap();
        assert!(matches!(
            e.invariant(&l),
            Err(SkeinError::TooManySingularPoints { found: 2, max: 1 })
        ));
    }

    #[test]
    fn parallel_matches_sequential() {
        let l: OrderedSingularLink = "4: t1 s2 t3 s1^-1 t2 s3 t1 | o = 2 4 1 3".parse().unwrap();
        let seq = SkeinEngine::new(G).invariant_ordered(&l).unwrap();
        let config = SkeinConfig {
            jobs: 4,
            ..SkeinConfig::default()
        };
        let par = SkeinEngine::with_config(G, config)
            .invariant_ordered(&l)
            .unwrap();
        assert_eq!(seq, par);
    }
}
