//! Generalized Marcum-Q function, the regularized confluent hypergeometric
//! function of two variables (Φ̃₃), and the closed-form distributions that
//! connect them.
//!
//! For integer `b > 0` and integer `c`, Φ̃₃(b, c; w, z) can be written as a
//! finite sum of Marcum-Q functions weighted by the coefficient polynomials
//! `A_i(b, c; z)`. This crate evaluates both sides of that identity
//! independently and uses it to compute:
//!
//! * the joint CDF of two correlated Nakagami-m envelopes,
//! * the CDF of the minimum eigenvalue of a square, correlated, complex
//!   non-central Wishart matrix with rank-one mean.
//!
//! Everything that can be checked against an independent route (quadrature,
//! brute-force series, Monte Carlo) lives in [`oracles`], and [`verify`]
//! bundles those checks into reproducible suites.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod distributions;
pub mod error;
pub mod marcum;
pub mod oracles;
pub mod phi3;
pub mod special;
pub mod verify;

pub use config::EvalConfig;
pub use distributions::{NakagamiBivariate, WishartModel};
pub use error::{Error, Result};
pub use marcum::MarcumArgs;
pub use phi3::{CoeffPolynomial, Phi3Args};
pub use special::SignedLog;
