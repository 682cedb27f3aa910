use std::collections::BTreeMap;
use std::fmt;

use super::{SkeinError, SkeinPolynomial};
use crate::coeff::{LaurentPoly, LocalizedScalar, RingMode};
use crate::diagram::ResolutionVector;

/// `Σ a_ε Z_ε` in degree `d` of the ordered skein module, where
/// `Z_ε = Z_{ε_1} ⋆ … ⋆ Z_{ε_d}` with `Z_0 = X` and `Z_1 = Y`.
///
/// Only nonzero coordinates are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSkeinElement {
    mode: RingMode,
    d: usize,
    coords: BTreeMap<ResolutionVector, LocalizedScalar>,
}

impl OrderedSkeinElement {
    pub fn new(
        mode: RingMode,
        d: usize,
        coords: BTreeMap<ResolutionVector, LocalizedScalar>,
    ) -> Result<Self, SkeinError> {
        for (eps, v) in &coords {
            if eps.len() != d {
                return Err(SkeinError::MalformedIndexSet(format!(
                    "index {eps} in degree {d}"
                )));
            }
            if v.mode() != mode {
                return Err(crate::coeff::RingError::ModeMismatch(v.mode(), mode).into());
            }
        }
        let coords = coords.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(OrderedSkeinElement { mode, d, coords })
    }

    pub fn zero(mode: RingMode, d: usize) -> Self {
        OrderedSkeinElement {
            mode,
            d,
            coords: BTreeMap::new(),
        }
    }

    /// The basis element `Z_ε`.
    pub fn basis(mode: RingMode, eps: ResolutionVector) -> Self {
        let d = eps.len();
        OrderedSkeinElement {
            mode,
            d,
            coords: BTreeMap::from([(eps, LocalizedScalar::one(mode))]),
        }
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Nonzero coordinates in lexicographic order of `ε`.
    pub fn coords(&self) -> &BTreeMap<ResolutionVector, LocalizedScalar> {
        &self.coords
    }

    pub fn coord(&self, eps: &ResolutionVector) -> LocalizedScalar {
        self.coords
            .get(eps)
            .cloned()
            .unwrap_or_else(|| LocalizedScalar::zero(self.mode))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn check(&self, other: &OrderedSkeinElement) -> Result<(), SkeinError> {
        if self.mode != other.mode {
            return Err(crate::coeff::RingError::ModeMismatch(self.mode, other.mode).into());
        }
        if self.d != other.d {
            return Err(SkeinError::DegreeMismatch(self.d, other.d));
        }
        Ok(())
    }

    fn combine(&self, other: &OrderedSkeinElement, negate: bool) -> Result<Self, SkeinError> {
        self.check(other)?;
        let mut coords = self.coords.clone();
        for (eps, v) in &other.coords {
            let cur = coords
                .remove(eps)
                .unwrap_or_else(|| LocalizedScalar::zero(self.mode));
            let next = if negate {
                cur.try_sub(v)?
            } else {
                cur.try_add(v)?
            };
            if !next.is_zero() {
                coords.insert(eps.clone(), next);
            }
        }
        Ok(OrderedSkeinElement {
            mode: self.mode,
            d: self.d,
            coords,
        })
    }

    pub fn try_add(&self, other: &OrderedSkeinElement) -> Result<Self, SkeinError> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &OrderedSkeinElement) -> Result<Self, SkeinError> {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Result<Self, SkeinError> {
        let coords = self
            .coords
            .iter()
            .map(|(eps, v)| Ok((eps.clone(), v.scale(c)?)))
            .collect::<Result<BTreeMap<_, _>, SkeinError>>()?;
        OrderedSkeinElement::new(self.mode, self.d, coords)
    }

    /// Concatenation product: `(a ⋆ b)_{(ε, μ)} = a_ε b_μ`.
    pub fn star(&self, other: &OrderedSkeinElement) -> Result<Self, SkeinError> {
        if self.mode != other.mode {
            return Err(crate::coeff::RingError::ModeMismatch(self.mode, other.mode).into());
        }
        let mut coords = BTreeMap::new();
        for (e, a) in &self.coords {
            for (m, b) in &other.coords {
                let v = a.try_mul(b)?;
                if !v.is_zero() {
                    coords.insert(e.concat(m), v);
                }
            }
        }
        Ok(OrderedSkeinElement {
            mode: self.mode,
            d: self.d + other.d,
            coords,
        })
    }

    /// Image under the relabeling `w`: `b_{wε} = a_ε`.
    pub fn permuted(&self, w: &[usize]) -> Self {
        let coords = self
            .coords
            .iter()
            .map(|(eps, v)| (eps.permuted(w), v.clone()))
            .collect();
        OrderedSkeinElement {
            mode: self.mode,
            d: self.d,
            coords,
        }
    }

    /// Sums each symmetric-group orbit: `c_{i,j}` collects the `a_ε` with
    /// `i` zeros and `j` ones.
    pub fn project(&self) -> SkeinPolynomial {
        let mut coeffs: BTreeMap<(u32, u32), LocalizedScalar> = BTreeMap::new();
        for (eps, v) in &self.coords {
            let j = eps.ones() as u32;
            let i = self.d as u32 - j;
            let entry = coeffs
                .entry((i, j))
                .or_insert_with(|| LocalizedScalar::zero(self.mode));
            *entry = &*entry + v;
        }
        SkeinPolynomial::from_coeffs(self.mode, coeffs).expect("coefficients share the mode")
    }

    pub fn specialize(&self, target: RingMode) -> Result<Self, SkeinError> {
        let coords = self
            .coords
            .iter()
            .map(|(eps, v)| Ok((eps.clone(), v.specialize(target)?)))
            .collect::<Result<BTreeMap<_, _>, SkeinError>>()?;
        OrderedSkeinElement::new(target, self.d, coords)
    }
}

/// `a ⋆ b` on coordinates.
pub fn star(
    a: &OrderedSkeinElement,
    b: &OrderedSkeinElement,
) -> Result<OrderedSkeinElement, SkeinError> {
    a.star(b)
}

/// The projection `π` to the unordered module `R[X, Y]`.
pub fn project_unordered(a: &OrderedSkeinElement) -> SkeinPolynomial {
    a.project()
}

/// One `Z_ε = <coefficient>` line per nonzero coordinate; the basis element
/// of degree zero is the unknot `O`.
impl fmt::Display for OrderedSkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (k, (eps, v)) in self.coords.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            if self.d == 0 {
                write!(f, "O = {v}")?;
            } else {
                write!(f, "Z_{eps} = {v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: RingMode = RingMode::Generic;

    fn rv(bits: &[u8]) -> ResolutionVector {
        ResolutionVector::new(bits.iter().map(|&b| b == 1).collect())
    }

    #[test]
    fn star_of_basis_is_basis() {
        let x = OrderedSkeinElement::basis(G, rv(&[0]));
        let y = OrderedSkeinElement::basis(G, rv(&[1]));
        assert_eq!(
            x.star(&y).unwrap(),
            OrderedSkeinElement::basis(G, rv(&[0, 1]))
        );
        let unit = OrderedSkeinElement::basis(G, rv(&[]));
        assert_eq!(unit.star(&x).unwrap(), x);
    }

    #[test]
    fn projection_sums_orbits() {
        let x = OrderedSkeinElement::basis(G, rv(&[0]));
        let p = x.project();
        assert!(p.coeff(1, 0).is_one());
        let a = OrderedSkeinElement::basis(G, rv(&[0, 1]))
            .try_add(&OrderedSkeinElement::basis(G, rv(&[1, 0])))
            .unwrap();
        assert_eq!(
            a.project().coeff(1, 1).numerator(),
            &LaurentPoly::constant(G.base(), 2)
        );
    }

    #[test]
    fn degree_mismatch() {
        let x = OrderedSkeinElement::basis(G, rv(&[0]));
        let xx = OrderedSkeinElement::basis(G, rv(&[0, 0]));
        assert!(matches!(
            x.try_add(&xx),
            Err(SkeinError::DegreeMismatch(1, 2))
        ));
    }

    #[test]
    fn display() {
        let a = OrderedSkeinElement::basis(G, rv(&[0, 1]));
        assert_eq!(a.to_string(), "Z_01 = 1");
        assert_eq!(OrderedSkeinElement::basis(G, rv(&[])).to_string(), "O = 1");
        assert_eq!(OrderedSkeinElement::zero(G, 2).to_string(), "0");
    }
}
