use std::collections::BTreeMap;
use std::fmt;

use super::SkeinError;
use crate::coeff::{fmt_monomial, LaurentPoly, LocalizedScalar, RingError, RingMode};

/// `Σ c_{i,j} X^i Y^j` in the commutative algebra `R[X, Y]`, coefficients in
/// the localization at `D`. Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinPolynomial {
    mode: RingMode,
    coeffs: BTreeMap<(u32, u32), LocalizedScalar>,
}

impl SkeinPolynomial {
    pub fn from_coeffs(
        mode: RingMode,
        coeffs: BTreeMap<(u32, u32), LocalizedScalar>,
    ) -> Result<Self, SkeinError> {
        if let Some(v) = coeffs.values().find(|v| v.mode() != mode) {
            return Err(RingError::ModeMismatch(v.mode(), mode).into());
        }
        let coeffs = coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(SkeinPolynomial { mode, coeffs })
    }

    pub fn zero(mode: RingMode) -> Self {
        SkeinPolynomial {
            mode,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(mode: RingMode, i: u32, j: u32) -> Self {
        SkeinPolynomial {
            mode,
            coeffs: BTreeMap::from([((i, j), LocalizedScalar::one(mode))]),
        }
    }

    pub fn one(mode: RingMode) -> Self {
        Self::monomial(mode, 0, 0)
    }

    pub fn x(mode: RingMode) -> Self {
        Self::monomial(mode, 1, 0)
    }

    pub fn y(mode: RingMode) -> Self {
        Self::monomial(mode, 0, 1)
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), LocalizedScalar> {
        &self.coeffs
    }

    /// Coefficient of `X^i Y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> LocalizedScalar {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| LocalizedScalar::zero(self.mode))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether every nonzero term has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.coeffs.keys().all(|(i, j)| i + j == d)
    }

    fn check(&self, other: &SkeinPolynomial) -> Result<(), SkeinError> {
        if self.mode == other.mode {
            Ok(())
        } else {
            Err(RingError::ModeMismatch(self.mode, other.mode).into())
        }
    }

    fn accumulate(
        coeffs: &mut BTreeMap<(u32, u32), LocalizedScalar>,
        key: (u32, u32),
        v: LocalizedScalar,
    ) -> Result<(), SkeinError> {
        let next = match coeffs.remove(&key) {
            Some(cur) => cur.try_add(&v)?,
            None => v,
        };
        if !next.is_zero() {
            coeffs.insert(key, next);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SkeinPolynomial) -> Result<Self, SkeinError> {
        self.check(other)?;
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            Self::accumulate(&mut coeffs, *k, v.clone())?;
        }
        Ok(SkeinPolynomial {
            mode: self.mode,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &SkeinPolynomial) -> Result<Self, SkeinError> {
        self.check(other)?;
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            Self::accumulate(&mut coeffs, *k, -v)?;
        }
        Ok(SkeinPolynomial {
            mode: self.mode,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &SkeinPolynomial) -> Result<Self, SkeinError> {
        self.check(other)?;
        let mut coeffs = BTreeMap::new();
        for ((i1, j1), a) in &self.coeffs {
            for ((i2, j2), b) in &other.coeffs {
                Self::accumulate(&mut coeffs, (i1 + i2, j1 + j2), a.try_mul(b)?)?;
            }
        }
        Ok(SkeinPolynomial {
            mode: self.mode,
            coeffs,
        })
    }

    pub fn scale(&self, c: &LaurentPoly) -> Result<Self, SkeinError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| Ok((*k, v.scale(c)?)))
            .collect::<Result<BTreeMap<_, _>, SkeinError>>()?;
        Self::from_coeffs(self.mode, coeffs)
    }

    pub fn specialize(&self, target: RingMode) -> Result<Self, SkeinError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| Ok((*k, v.specialize(target)?)))
            .collect::<Result<BTreeMap<_, _>, SkeinError>>()?;
        Self::from_coeffs(target, coeffs)
    }
}

fn xy_monomial(i: u32, j: u32) -> String {
    let var = |name: &str, k: u32| match k {
        0 => None,
        1 => Some(name.to_string()),
        k => Some(format!("{name}^{k}")),
    };
    [var("X", i), var("Y", j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Sign and text of a coefficient; the text is empty for `±1`.
fn coefficient_parts(c: &LocalizedScalar, alone: bool) -> (bool, String) {
    if c.dpow() == 0 {
        if let Some((neg, e)) = c.numerator().as_signed_monomial() {
            return (neg, fmt_monomial(e));
        }
        if c.numerator().terms().len() == 1 {
            let text = c.to_string();
            return match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
        }
    }
    if alone {
        (false, c.to_string())
    } else {
        (false, format!("({c})"))
    }
}

/// Terms in ascending `(i, j)`. Unit coefficients are elided, single-term
/// coefficients are written inline (`- x X`), and anything longer is
/// parenthesized.
impl fmt::Display for SkeinPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, ((i, j), c)) in self.coeffs.iter().enumerate() {
            let mono = xy_monomial(*i, *j);
            let (neg, text) = coefficient_parts(c, mono.is_empty());
            let term = match (text.is_empty(), mono.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => mono,
                (false, true) => text,
                (false, false) => format!("{text} {mono}"),
            };
            match (k, neg) {
                (0, true) => write!(f, "-{term}")?,
                (0, false) => write!(f, "{term}")?,
                (_, true) => write!(f, " - {term}")?,
                (_, false) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}
