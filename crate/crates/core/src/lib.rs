//! Exact-arithmetic tropical geometry on homogeneous-space models.
//!
//! The crate is split along the pipeline that leads from exact series
//! arithmetic to tropical data:
//!
//! * [`exact_arith`] — arbitrary-precision rationals and truncated Puiseux
//!   series with the order-of-vanishing valuation,
//! * [`poly_engine`] — sparse multivariate (Laurent) polynomials, term
//!   orders in the minimum convention, division and Buchberger,
//! * [`geometry`] — exact rational cones, polyhedra and a small simplex
//!   solver used by everything polyhedral,
//! * [`grobner_fan`] — weight initial ideals, Groebner cones and fan
//!   enumeration, Newton polytopes,
//! * [`trop_classical`] — tropical hypersurfaces and varieties over the
//!   Puiseux field, with a fundamental-theorem cross-check harness,
//! * [`spherical_core`] — valuation cones and tropicalization of points on
//!   the torus, SL(2) punctured-plane and GL(n) models,
//! * [`snf_series`] — Smith normal form of matrices over series rings by
//!   two independent algorithms,
//! * [`spherical_trop`] — spherical tropical sets on the worked models,
//! * [`numeric_amoeba`] — double-precision SVD, spherical logarithm maps
//!   and the invariant-factors-versus-singular-values limit harness.
//!
//! Everything outside [`numeric_amoeba`] is exact: no floating point enters
//! any fan, cone or valuation computation. The crate is `no_std` (it only
//! needs `alloc`); IO, file formats and the command-line front end live in
//! the companion `spherotrop` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod exact_arith;
pub mod geometry;
pub mod grobner_fan;
pub mod numeric_amoeba;
pub mod poly_engine;
pub mod snf_series;
pub mod spherical_core;
pub mod spherical_trop;
pub mod trop_classical;

pub use exact_arith::{PuiseuxSeries, Rational};
