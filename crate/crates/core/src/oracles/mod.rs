//! Independent reference computations used to validate the production
//! evaluators: adaptive quadrature of the Marcum-Q integral, a rectangular
//! truncation of the Φ̃₃ double series, Monte Carlo samplers for both
//! distributions, and a Laplace-transform identity for Φ̃₃.

mod laplace;
mod marcum;
mod montecarlo;
mod phi3;
mod quadrature;

pub use laplace::{laplace_transform_check, LaplaceCheck};
pub use marcum::marcum_quadrature;
pub use montecarlo::{
    empirical_cdf, sample_bivariate_nakagami, sample_wishart_min_eig, McResult, McSamples,
    MIN_SAMPLES, CHUNK,
};
pub use phi3::phi3_tilde_rectangular;
pub use quadrature::{integrate, Integral, QuadTolerance};
