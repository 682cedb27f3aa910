//! Exact coefficient arithmetic.
//!
//! Three coefficient rings are supported, selected by [`RingMode`]:
//! Laurent polynomials in `t, x` over the integers, the same over a prime
//! field, and the Conway specialization `t = 1` over the integers. Skein
//! coordinates live in the localization of these rings at the determinant
//! `D = (t^-1 - t - x)(t^-1 - t + x)`, see [`LocalizedScalar`].

mod laurent;
mod localized;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use laurent::{laurent_arith, ArithOp, BaseRing, Exponent, LaurentPoly};
pub use localized::{localized_arith, LocalizedScalar};

pub(crate) use laurent::fmt_monomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("mismatched base rings: {0} vs {1}")]
    BaseMismatch(BaseRing, BaseRing),
    #[error("mismatched ring modes: {0} vs {1}")]
    ModeMismatch(RingMode, RingMode),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("reduction modulo p requires integer coefficients, found {0}")]
    NotIntegral(BaseRing),
    #[error("cannot specialize from {0} to {1}")]
    BadSpecialization(RingMode, RingMode),
    #[error("invalid ring `{0}` (expected generic, conway or gf:<prime>)")]
    UnknownRing(String),
    #[error("malformed polynomial `{0}`")]
    MalformedPolynomial(String),
}

/// The coefficient ring a computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingMode {
    /// `Z[t^±1, x^±1]`
    Generic,
    /// `Z[x^±1]` with `t = 1`
    Conway,
    /// `F_p[t^±1, x^±1]`
    PrimeField(u64),
}

impl RingMode {
    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        BaseRing::prime_field(p).map(|_| RingMode::PrimeField(p))
    }

    pub fn base(&self) -> BaseRing {
        match self {
            RingMode::Generic | RingMode::Conway => BaseRing::Integers,
            RingMode::PrimeField(p) => BaseRing::PrimeField(*p),
        }
    }

    pub fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.base())
    }

    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.base())
    }

    pub fn t(&self) -> LaurentPoly {
        self.t_pow(1)
    }

    pub fn t_inv(&self) -> LaurentPoly {
        self.t_pow(-1)
    }

    /// `t^k`, which is `1` in Conway mode.
    pub fn t_pow(&self, k: i64) -> LaurentPoly {
        match self {
            RingMode::Conway => self.one(),
            _ => LaurentPoly::monomial(self.base(), 1, k, 0),
        }
    }

    pub fn x(&self) -> LaurentPoly {
        LaurentPoly::x(self.base())
    }

    pub fn x_inv(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.base(), 1, 0, -1)
    }

    /// `t^-1 - t`
    pub fn t_inv_minus_t(&self) -> LaurentPoly {
        &self.t_inv() - &self.t()
    }

    /// Value of the two-component unlink, `x^-1 (t^-1 - t)`.
    pub fn delta(&self) -> LaurentPoly {
        &self.x_inv() * &self.t_inv_minus_t()
    }

    /// `D = (t^-1 - t - x)(t^-1 - t + x) = t^-2 - 2 + t^2 - x^2`
    pub fn determinant(&self) -> LaurentPoly {
        let s = self.t_inv_minus_t();
        let x = self.x();
        &(&s - &x) * &(&s + &x)
    }

    /// Applies the ring homomorphism from this mode's ring into `target`'s.
    pub fn specialize_into(
        &self,
        a: &LaurentPoly,
        target: RingMode,
    ) -> Result<LaurentPoly, RingError> {
        match (self, target) {
            (s, t) if *s == t => Ok(a.clone()),
            (RingMode::Generic, RingMode::Conway) => specialize(a, Specialization::ConwayT1),
            (RingMode::Generic, RingMode::PrimeField(p)) => {
                specialize(a, Specialization::ToPrimeField(p))
            }
            (s, t) => Err(RingError::BadSpecialization(*s, t)),
        }
    }
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingMode::Generic => write!(f, "generic"),
            RingMode::Conway => write!(f, "conway"),
            RingMode::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for RingMode {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, RingError> {
        match s {
            "generic" => Ok(RingMode::Generic),
            "conway" => Ok(RingMode::Conway),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| RingError::UnknownRing(s.to_string()))?;
                RingMode::prime_field(p)
            }
        }
    }
}

/// A ring homomorphism out of `Z[t^±1, x^±1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    ConwayT1,
    ToPrimeField(u64),
}

pub fn specialize(a: &LaurentPoly, mode: Specialization) -> Result<LaurentPoly, RingError> {
    match mode {
        Specialization::ConwayT1 => Ok(a.at_t_one()),
        Specialization::ToPrimeField(p) => a.reduce_mod(p),
    }
}
