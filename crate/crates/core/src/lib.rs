//! Exact HOMFLY-PT skein module invariants of singular links.
//!
//! A singular link is given as the closure of a singular braid word. Its
//! class in the skein module is a polynomial in the two generators `X` and
//! `Y`, with coefficients in one of the rings of [`coeff::RingMode`].

pub mod check;
pub mod cli;
pub mod coeff;
pub mod diagram;
pub mod homfly;
pub mod random;
pub mod skein;
