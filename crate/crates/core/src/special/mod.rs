//! Building-block special functions.
//!
//! Products of Gammas, Pochhammer symbols and powers are carried as
//! [`SignedLog`] values and exponentiated once, so that the e^{+w} growth of
//! the hypergeometric series and the e^{-w} decay of Marcum tails never meet
//! in direct floating-point arithmetic.

mod bessel;
mod gamma;
mod hyp1f1;
mod logdomain;
mod pochhammer;

pub use bessel::bessel_i_scaled;
pub use gamma::{
    factorial, gamma, ln_factorial, log_gamma, recip_gamma, regularized_gamma_pair,
    regularized_lower_gamma, regularized_upper_gamma, sin_pi,
};
pub use hyp1f1::reg_confluent_1f1;
pub use logdomain::SignedLog;
pub use pochhammer::{pochhammer, pochhammer_log};

pub(crate) use gamma::RecipGammaSeq;
pub(crate) use logdomain::LogAccumulator;
