//! The resolution cube as a Kronecker-structured linear system.
//!
//! Resolving the first singular point of `X` gives `(δ, 1)` and of `Y` gives
//! `(1, δ)`, so a full resolution of `Σ a_ε Z_ε` is `M^{⊗d} a` with
//! `M = [[δ, 1], [1, δ]]`. Since `det M = x^-2 D`, the inverse is
//! `D^-1 [[x(t^-1 - t), -x^2], [-x^2, x(t^-1 - t)]]`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{OrderedSkeinElement, SkeinError};
use crate::coeff::{LaurentPoly, LocalizedScalar, RingMode};
use crate::diagram::ResolutionVector;
use crate::homfly::SkeinValue;

/// `M` and `M^-1` over one ring mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalMatrix {
    forward: [[LocalizedScalar; 2]; 2],
    inverse: [[LocalizedScalar; 2]; 2],
}

impl EvalMatrix {
    pub fn new(mode: RingMode) -> Self {
        let lift = |p: LaurentPoly| LocalizedScalar::from_poly(mode, p).expect("same base");
        let delta = lift(mode.delta());
        let one = LocalizedScalar::one(mode);
        let diag = lift(&mode.x() * &mode.t_inv_minus_t()).div_determinant();
        let off = lift(-(&mode.x() * &mode.x())).div_determinant();
        EvalMatrix {
            forward: [[delta.clone(), one.clone()], [one, delta]],
            inverse: [[diag.clone(), off.clone()], [off, diag]],
        }
    }

    pub fn forward(&self) -> &[[LocalizedScalar; 2]; 2] {
        &self.forward
    }

    pub fn inverse(&self) -> &[[LocalizedScalar; 2]; 2] {
        &self.inverse
    }

    /// Whether `M · M^-1` is exactly the identity.
    pub fn is_inverse_pair(&self) -> bool {
        (0..2).all(|r| {
            (0..2).all(|c| {
                let v = &(&self.forward[r][0] * &self.inverse[0][c])
                    + &(&self.forward[r][1] * &self.inverse[1][c]);
                if r == c {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }
}

/// Applies `m` along every tensor axis of a dense vector of length `2^d`,
/// indexed by [`ResolutionVector::index`]. Cost `O(d 2^d)` scalar operations.
pub(crate) fn apply_kronecker(m: &[[LocalizedScalar; 2]; 2], values: &mut [LocalizedScalar]) {
    let d = values.len().trailing_zeros();
    debug_assert_eq!(values.len(), 1 << d);
    for axis in 0..d {
        let stride = 1usize << (d - 1 - axis);
        values.par_chunks_mut(2 * stride).for_each(|chunk| {
            let (lo, hi) = chunk.split_at_mut(stride);
            for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
                let n0 = &(&m[0][0] * a0) + &(&m[0][1] * a1);
                let n1 = &(&m[1][0] * a0) + &(&m[1][1] * a1);
                *a0 = n0;
                *a1 = n1;
            }
        });
    }
}

/// Unique `a` with `M^{⊗d} a = p`.
pub fn solve_coordinates(
    mode: RingMode,
    p: &BTreeMap<ResolutionVector, SkeinValue>,
) -> Result<OrderedSkeinElement, SkeinError> {
    let size = p.len();
    if !size.is_power_of_two() {
        return Err(SkeinError::MalformedIndexSet(format!(
            "{size} entries is not a power of two"
        )));
    }
    let d = size.trailing_zeros() as usize;
    let mut values = Vec::with_capacity(size);
    for (k, (eps, v)) in p.iter().enumerate() {
        // BTreeMap iteration is lexicographic, matching index order
        if eps.len() != d || eps.index() != k {
            return Err(SkeinError::MalformedIndexSet(format!(
                "unexpected index {eps} among {size} entries"
            )));
        }
        values.push(LocalizedScalar::from_poly(mode, v.clone())?);
    }
    apply_kronecker(EvalMatrix::new(mode).inverse(), &mut values);
    let coords = values
        .into_iter()
        .enumerate()
        .map(|(k, v)| (ResolutionVector::from_index(d, k), v))
        .collect();
    OrderedSkeinElement::new(mode, d, coords)
}

/// `M^{⊗d} a`: the values of all full resolutions of `a`.
pub fn evaluate_coordinates(
    a: &OrderedSkeinElement,
) -> BTreeMap<ResolutionVector, LocalizedScalar> {
    let d = a.d();
    let mut values: Vec<LocalizedScalar> =
        ResolutionVector::all(d).map(|eps| a.coord(&eps)).collect();
    apply_kronecker(EvalMatrix::new(a.mode()).forward(), &mut values);
    values
        .into_iter()
        .enumerate()
        .map(|(k, v)| (ResolutionVector::from_index(d, k), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: RingMode = RingMode::Generic;

    fn vector(entries: Vec<LaurentPoly>) -> BTreeMap<ResolutionVector, SkeinValue> {
        let d = entries.len().trailing_zeros() as usize;
        entries
            .into_iter()
            .enumerate()
            .map(|(k, v)| (ResolutionVector::from_index(d, k), v))
            .collect()
    }

    #[test]
    fn inverse_pairs() {
        for mode in [
            G,
            RingMode::Conway,
            RingMode::PrimeField(5),
            RingMode::PrimeField(3),
        ] {
            assert!(EvalMatrix::new(mode).is_inverse_pair(), "{mode}");
        }
    }

    // Solving the 2x2 system by hand: (δ, 1) = M e_0 and (1, δ) = M e_1.
    #[test]
    fn generators_solve_to_unit_vectors() {
        let x = solve_coordinates(G, &vector(vec![G.delta(), G.one()])).unwrap();
        assert!(x.coord(&ResolutionVector::new(vec![false])).is_one());
        assert!(x.coord(&ResolutionVector::new(vec![true])).is_zero());
        let y = solve_coordinates(G, &vector(vec![G.one(), G.delta()])).unwrap();
        assert!(y.coord(&ResolutionVector::new(vec![false])).is_zero());
        assert!(y.coord(&ResolutionVector::new(vec![true])).is_one());
    }

    #[test]
    fn malformed_inputs() {
        let three: BTreeMap<_, _> = (0..3)
            .map(|k| (ResolutionVector::from_index(2, k), G.one()))
            .collect();
        assert!(matches!(
            solve_coordinates(G, &three),
            Err(SkeinError::MalformedIndexSet(_))
        ));
        let mut wrong = BTreeMap::new();
        wrong.insert(ResolutionVector::new(vec![false]), G.one());
        wrong.insert(ResolutionVector::new(vec![true, true]), G.one());
        assert!(matches!(
            solve_coordinates(G, &wrong),
            Err(SkeinError::MalformedIndexSet(_))
        ));
    }

    #[test]
    fn empty_vector_is_degree_zero() {
        let p = BTreeMap::from([(ResolutionVector::zeros(0), G.delta())]);
        let a = solve_coordinates(G, &p).unwrap();
        assert_eq!(a.d(), 0);
        assert_eq!(a.coord(&ResolutionVector::zeros(0)).numerator(), &G.delta());
    }
}
