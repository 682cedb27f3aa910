//! Sparse Laurent polynomials in `t` and `x` over the integers or a prime field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// The ring of coefficients underneath the Laurent variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    PrimeField(u64),
}

impl BaseRing {
    /// The prime field with `p` elements. Fails unless `p` is prime.
    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if is_prime(p) {
            Ok(BaseRing::PrimeField(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub(crate) fn reduce(&self, c: BigInt) -> BigInt {
        match self {
            BaseRing::Integers => c,
            BaseRing::PrimeField(p) => c.mod_floor(&BigInt::from(*p)),
        }
    }

    /// Exact quotient `a / b` in the base ring, if it exists.
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        match self {
            BaseRing::Integers => {
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(q)
            }
            BaseRing::PrimeField(p) => {
                let p = BigInt::from(*p);
                let inv = b.modpow(&(&p - 2u32), &p);
                Some((a * inv).mod_floor(&p))
            }
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent pair of the monomial `t^t x^x`.
///
/// The derived ordering is lexicographic on `(t, x)`, which is a group order on
/// `Z^2` and therefore compatible with monomial multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub t: i64,
    pub x: i64,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { t: 0, x: 0 };

    pub fn new(t: i64, x: i64) -> Self {
        Exponent { t, x }
    }

    fn add(self, other: Exponent) -> Exponent {
        Exponent {
            t: self.t.checked_add(other.t).expect("exponent overflow"),
            x: self.x.checked_add(other.x).expect("exponent overflow"),
        }
    }

    fn sub(self, other: Exponent) -> Exponent {
        Exponent {
            t: self.t.checked_sub(other.t).expect("exponent overflow"),
            x: self.x.checked_sub(other.x).expect("exponent overflow"),
        }
    }
}

/// A Laurent polynomial in `t, x` with no stored zero coefficients.
///
/// Terms are kept sorted ascending by [`Exponent`], so two equal values always
/// have identical term vectors and the derived equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    base: BaseRing,
    terms: Vec<(Exponent, BigInt)>,
}

impl LaurentPoly {
    pub fn zero(base: BaseRing) -> Self {
        LaurentPoly {
            base,
            terms: Vec::new(),
        }
    }

    pub fn one(base: BaseRing) -> Self {
        Self::constant(base, 1)
    }

    pub fn constant(base: BaseRing, c: impl Into<BigInt>) -> Self {
        Self::monomial(base, c, 0, 0)
    }

    /// `c t^et x^ex`
    pub fn monomial(base: BaseRing, c: impl Into<BigInt>, et: i64, ex: i64) -> Self {
        let c = base.reduce(c.into());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Exponent::new(et, ex), c)]
        };
        LaurentPoly { base, terms }
    }

    pub fn t(base: BaseRing) -> Self {
        Self::monomial(base, 1, 1, 0)
    }

    pub fn x(base: BaseRing) -> Self {
        Self::monomial(base, 1, 0, 1)
    }

    /// Builds a polynomial from arbitrary `(e_t, e_x, coefficient)` triples,
    /// merging repeated exponents.
    pub fn from_terms<I, C>(base: BaseRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (et, ex, c) in terms {
            *acc.entry(Exponent::new(et, ex)).or_default() += c.into();
        }
        Self::from_map(base, acc)
    }

    fn from_map(base: BaseRing, acc: BTreeMap<Exponent, BigInt>) -> Self {
        let terms = acc
            .into_iter()
            .filter_map(|(e, c)| {
                let c = base.reduce(c);
                (!c.is_zero()).then_some((e, c))
            })
            .collect();
        LaurentPoly { base, terms }
    }

    pub fn base(&self) -> BaseRing {
        self.base
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(Exponent, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Exponent::ZERO && self.terms[0].1.is_one()
    }

    pub fn leading(&self) -> Option<&(Exponent, BigInt)> {
        self.terms.last()
    }

    /// Coefficient of `t^et x^ex`, zero when absent.
    pub fn coeff(&self, et: i64, ex: i64) -> BigInt {
        let e = Exponent::new(et, ex);
        self.terms
            .binary_search_by(|(k, _)| k.cmp(&e))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    fn check_base(&self, other: &LaurentPoly) -> Result<(), RingError> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(RingError::BaseMismatch(self.base, other.base))
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        self.check_base(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        self.check_base(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        self.check_base(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.base));
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Ok(self.mul_term(*e, c));
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return Ok(other.mul_term(*e, c));
        }
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.add(*eb)).or_default() += ca * cb;
            }
        }
        Ok(Self::from_map(self.base, acc))
    }

    /// Sorted merge of two term lists; `negate` subtracts `other`.
    fn merge(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Less => {
                    terms.push((*ea, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push((*eb, self.base.reduce(sign(cb))));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.base.reduce(ca + sign(cb));
                    if !c.is_zero() {
                        terms.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(
            other.terms[j..]
                .iter()
                .map(|(e, c)| (*e, self.base.reduce(sign(c)))),
        );
        LaurentPoly {
            base: self.base,
            terms,
        }
    }

    /// Multiplies by the single term `c t^e.t x^e.x`.
    pub fn mul_term(&self, e: Exponent, c: &BigInt) -> LaurentPoly {
        let c = self.base.reduce(c.clone());
        if c.is_zero() {
            return LaurentPoly::zero(self.base);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(ea, ca)| {
                let v = self.base.reduce(ca * &c);
                (!v.is_zero()).then_some((ea.add(e), v))
            })
            .collect();
        LaurentPoly {
            base: self.base,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.base);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn bounding_box(&self) -> (Exponent, Exponent) {
        let mut lo = self.terms[0].0;
        let mut hi = lo;
        for (e, _) in &self.terms {
            lo.t = lo.t.min(e.t);
            lo.x = lo.x.min(e.x);
            hi.t = hi.t.max(e.t);
            hi.x = hi.x.max(e.x);
        }
        (lo, hi)
    }

    /// Returns `q` with `q * divisor == self` when it exists.
    ///
    /// Iterated leading-term elimination. If the quotient exists its exponents
    /// lie in the box `[min(a) - min(b), max(a) - max(b)]` taken per variable,
    /// so any quotient term outside that box certifies non-divisibility and the
    /// loop terminates.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>, RingError> {
        self.check_base(divisor)?;
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero(self.base)));
        }
        let (alo, ahi) = self.bounding_box();
        let (blo, bhi) = divisor.bounding_box();
        let qlo = alo.sub(blo);
        let qhi = ahi.sub(bhi);
        if qlo.t > qhi.t || qlo.x > qhi.x {
            return Ok(None);
        }
        let (lead_e, lead_c) = divisor.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quotient: Vec<(Exponent, BigInt)> = Vec::new();
        while let Some((e, c)) = rem.leading() {
            let qe = e.sub(*lead_e);
            if qe.t < qlo.t || qe.t > qhi.t || qe.x < qlo.x || qe.x > qhi.x {
                return Ok(None);
            }
            let Some(qc) = self.base.div_exact(c, lead_c) else {
                return Ok(None);
            };
            rem = rem.merge(&divisor.mul_term(qe, &qc), true);
            quotient.push((qe, qc));
        }
        quotient.reverse();
        Ok(Some(LaurentPoly {
            base: self.base,
            terms: quotient,
        }))
    }

    /// Substitutes `t = 1`; the result has only `e_t = 0` terms.
    pub fn at_t_one(&self) -> LaurentPoly {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            *acc.entry(Exponent::new(0, e.x)).or_default() += c;
        }
        Self::from_map(self.base, acc)
    }

    /// Reduces integer coefficients modulo the prime `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<LaurentPoly, RingError> {
        if self.base != BaseRing::Integers {
            return Err(RingError::NotIntegral(self.base));
        }
        let base = BaseRing::prime_field(p)?;
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let c = base.reduce(c.clone());
                (!c.is_zero()).then_some((*e, c))
            })
            .collect();
        Ok(LaurentPoly { base, terms })
    }

    /// Whether the polynomial is `±m` for a single monomial `m` (sign only over
    /// the integers). Used by renderers that elide unit coefficients.
    pub(crate) fn as_signed_monomial(&self) -> Option<(bool, Exponent)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = &self.terms[0];
        if c.is_one() {
            Some((false, *e))
        } else if self.base == BaseRing::Integers && (-c).is_one() {
            Some((true, *e))
        } else {
            None
        }
    }
}

/// Which arithmetic operation [`laurent_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn laurent_arith(
    a: &LaurentPoly,
    b: &LaurentPoly,
    op: ArithOp,
) -> Result<LaurentPoly, RingError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

pub(crate) fn fmt_monomial(e: Exponent) -> String {
    let var = |name: &str, k: i64| match k {
        1 => name.to_string(),
        k if k < 0 => format!("{name}^({k})"),
        k => format!("{name}^{k}"),
    };
    let mut parts = Vec::new();
    if e.t != 0 {
        parts.push(var("t", e.t));
    }
    if e.x != 0 {
        parts.push(var("x", e.x));
    }
    parts.join(" ")
}

fn parse_power(token: &str, var: char) -> Option<i64> {
    let rest = token.strip_prefix(var)?;
    if rest.is_empty() {
        return Some(1);
    }
    let k = rest.strip_prefix('^')?;
    let k = k
        .strip_prefix('(')
        .and_then(|k| k.strip_suffix(')'))
        .unwrap_or(k);
    k.parse().ok()
}

impl LaurentPoly {
    /// Reads the canonical text form back, e.g. `-1 t^4 + 2 t^(-2) x`.
    pub fn parse(base: BaseRing, text: &str) -> Result<Self, RingError> {
        let bad = || RingError::MalformedPolynomial(text.to_string());
        let mut terms = Vec::new();
        let mut tokens = text.split_whitespace().peekable();
        let mut sign = 1;
        while let Some(tok) = tokens.next() {
            let coeff: BigInt = tok.parse().map_err(|_| bad())?;
            let (mut et, mut ex) = (0, 0);
            while let Some(next) = tokens.peek() {
                if let Some(k) = parse_power(next, 't') {
                    et += k;
                } else if let Some(k) = parse_power(next, 'x') {
                    ex += k;
                } else {
                    break;
                }
                tokens.next();
            }
            terms.push((et, ex, coeff * sign));
            sign = match tokens.next() {
                None => break,
                Some("+") => 1,
                Some("-") => -1,
                Some(_) => return Err(bad()),
            };
            if tokens.peek().is_none() {
                return Err(bad());
            }
        }
        if terms.is_empty() {
            return Err(bad());
        }
        Ok(Self::from_terms(base, terms))
    }
}

/// Display order: descending in `e_t`, then ascending in `e_x`.
pub(crate) fn display_order(terms: &[(Exponent, BigInt)]) -> Vec<&(Exponent, BigInt)> {
    let mut v: Vec<_> = terms.iter().collect();
    v.sort_by(|(a, _), (b, _)| b.t.cmp(&a.t).then(a.x.cmp(&b.x)));
    v
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in display_order(&self.terms).into_iter().enumerate() {
            let mono = fmt_monomial(*e);
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (k, neg) {
                (0, true) => write!(f, "-{mag}")?,
                (0, false) => write!(f, "{mag}")?,
                (_, true) => write!(f, " - {mag}")?,
                (_, false) => write!(f, " + {mag}")?,
            }
            if !mono.is_empty() {
                write!(f, " {mono}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the operands live over different base rings; use the
            /// `try_*` methods to get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::zero(self.base).merge(self, true)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
