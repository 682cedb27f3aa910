use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithOp, LaurentPoly, RingError, RingMode};

/// `num / D^dpow` in the localization of a [`RingMode`]'s ring at its
/// determinant `D`.
///
/// Always normalized: either `dpow == 0` or `D` does not divide `num`. Zero is
/// `(0, 0)`. With this normal form each value has exactly one representation,
/// so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalizedScalar {
    mode: RingMode,
    num: LaurentPoly,
    dpow: u32,
}

impl LocalizedScalar {
    pub fn new(mode: RingMode, num: LaurentPoly, dpow: u32) -> Result<Self, RingError> {
        if num.base() != mode.base() {
            return Err(RingError::BaseMismatch(num.base(), mode.base()));
        }
        Ok(Self::normalized(mode, num, dpow))
    }

    pub fn from_poly(mode: RingMode, num: LaurentPoly) -> Result<Self, RingError> {
        Self::new(mode, num, 0)
    }

    pub fn zero(mode: RingMode) -> Self {
        LocalizedScalar {
            mode,
            num: mode.zero(),
            dpow: 0,
        }
    }

    pub fn one(mode: RingMode) -> Self {
        LocalizedScalar {
            mode,
            num: mode.one(),
            dpow: 0,
        }
    }

    fn normalized(mode: RingMode, mut num: LaurentPoly, mut dpow: u32) -> Self {
        if num.is_zero() {
            return Self::zero(mode);
        }
        if dpow > 0 {
            let d = mode.determinant();
            while dpow > 0 {
                match num.exact_div(&d).expect("determinant is nonzero") {
                    Some(q) => {
                        num = q;
                        dpow -= 1;
                    }
                    None => break,
                }
            }
        }
        LocalizedScalar { mode, num, dpow }
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn dpow(&self) -> u32 {
        self.dpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.dpow == 0 && self.num.is_one()
    }

    fn check_mode(&self, other: &LocalizedScalar) -> Result<(), RingError> {
        if self.mode == other.mode {
            Ok(())
        } else {
            Err(RingError::ModeMismatch(self.mode, other.mode))
        }
    }

    fn lift(&self, k: u32) -> LaurentPoly {
        &self.num * &self.mode.determinant().pow(k - self.dpow)
    }

    pub fn try_add(&self, other: &LocalizedScalar) -> Result<LocalizedScalar, RingError> {
        self.check_mode(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let k = self.dpow.max(other.dpow);
        Ok(Self::normalized(
            self.mode,
            &self.lift(k) + &other.lift(k),
            k,
        ))
    }

    pub fn try_sub(&self, other: &LocalizedScalar) -> Result<LocalizedScalar, RingError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &LocalizedScalar) -> Result<LocalizedScalar, RingError> {
        self.check_mode(other)?;
        Ok(Self::normalized(
            self.mode,
            &self.num * &other.num,
            self.dpow + other.dpow,
        ))
    }

    /// Multiplies by an element of the unlocalized ring.
    pub fn scale(&self, c: &LaurentPoly) -> Result<LocalizedScalar, RingError> {
        let num = self.num.try_mul(c)?;
        Ok(Self::normalized(self.mode, num, self.dpow))
    }

    /// Multiplies by `D^-1`.
    pub fn div_determinant(&self) -> LocalizedScalar {
        Self::normalized(self.mode, self.num.clone(), self.dpow + 1)
    }

    /// Value equality by cross-multiplication, independent of the normal form.
    pub fn cross_eq(&self, other: &LocalizedScalar) -> bool {
        self.mode == other.mode && {
            let d = self.mode.determinant();
            &self.num * &d.pow(other.dpow) == &other.num * &d.pow(self.dpow)
        }
    }

    /// Maps through the ring homomorphism into `target`, then renormalizes
    /// against the target's determinant.
    pub fn specialize(&self, target: RingMode) -> Result<LocalizedScalar, RingError> {
        let num = self.mode.specialize_into(&self.num, target)?;
        Ok(Self::normalized(target, num, self.dpow))
    }
}

pub fn localized_arith(
    a: &LocalizedScalar,
    b: &LocalizedScalar,
    op: ArithOp,
) -> Result<LocalizedScalar, RingError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

impl fmt::Display for LocalizedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dpow {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "{} / D", self.num),
            k => write!(f, "{} / D^{k}", self.num),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&LocalizedScalar> for &LocalizedScalar {
            type Output = LocalizedScalar;
            fn $method(self, rhs: &LocalizedScalar) -> LocalizedScalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LocalizedScalar {
    type Output = LocalizedScalar;
    fn neg(self) -> LocalizedScalar {
        LocalizedScalar {
            mode: self.mode,
            num: -&self.num,
            dpow: self.dpow,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BaseRing;

    const G: RingMode = RingMode::Generic;

    fn poly(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(BaseRing::Integers, terms.iter().copied())
    }

    #[test]
    fn d_over_d_is_one() {
        let a = LocalizedScalar::new(G, G.determinant(), 1).unwrap();
        let sum = localized_arith(&a, &LocalizedScalar::zero(G), ArithOp::Add).unwrap();
        assert!(sum.is_one());
        assert_eq!(sum.dpow(), 0);
    }

    #[test]
    fn cancellation() {
        let a = LocalizedScalar::new(G, poly(&[(0, 2, 1)]), 1).unwrap();
        let b = LocalizedScalar::new(G, G.determinant(), 0).unwrap();
        let prod = &a * &b;
        assert_eq!(prod.numerator(), &poly(&[(0, 2, 1)]));
        assert_eq!(prod.dpow(), 0);
    }

    #[test]
    fn zero_normal_form() {
        let z = LocalizedScalar::new(G, G.zero(), 3).unwrap();
        assert_eq!(z, LocalizedScalar::zero(G));
        assert_eq!(z.dpow(), 0);
    }

    #[test]
    fn conway_always_clears_denominators() {
        let c = RingMode::Conway;
        let a = LocalizedScalar::new(c, LaurentPoly::x(BaseRing::Integers), 4).unwrap();
        assert_eq!(a.dpow(), 0);
        // x / (-x^2)^4 = x^-7
        assert_eq!(
            a.numerator(),
            &LaurentPoly::monomial(BaseRing::Integers, 1, 0, -7)
        );
    }

    #[test]
    fn mode_mismatch_errors() {
        let a = LocalizedScalar::one(G);
        let b = LocalizedScalar::one(RingMode::Conway);
        assert!(matches!(a.try_add(&b), Err(RingError::ModeMismatch(..))));
        assert!(LocalizedScalar::new(RingMode::PrimeField(5), G.one(), 0).is_err());
    }

    #[test]
    fn display() {
        let a = LocalizedScalar::new(G, poly(&[(0, 2, 1)]), 2).unwrap();
        assert_eq!(a.to_string(), "1 x^2 / D^2");
        assert_eq!(a.div_determinant().to_string(), "1 x^2 / D^3");
        assert_eq!(LocalizedScalar::one(G).to_string(), "1");
    }

    #[test]
    fn specialize_to_conway() {
        let a = LocalizedScalar::new(G, poly(&[(0, 0, 1)]), 1).unwrap();
        let s = a.specialize(RingMode::Conway).unwrap();
        assert_eq!(s.dpow(), 0);
        assert_eq!(
            s.numerator(),
            &LaurentPoly::monomial(BaseRing::Integers, -1, 0, -2)
        );
    }
}
