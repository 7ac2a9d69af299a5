use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncated series or iteration did not reach its tolerance.
    #[error("{what} did not converge within {terms} terms")]
    Convergence { what: &'static str, terms: usize },

    /// Adaptive quadrature could not meet its error target.
    #[error("quadrature failed: estimated error {error:e} exceeds target {target:e}")]
    Quadrature { error: f64, target: f64 },

    /// A coefficient index was out of its admissible range.
    #[error("index {index} out of range 0..={max}")]
    Index { index: usize, max: usize },

    /// A matrix failed a structural requirement (Hermitian, definite, rank).
    #[error("linear algebra: {0}")]
    LinearAlgebra(String),

    /// A probability came out further outside [0, 1] than rounding explains.
    #[error("{what} = {value:e} lies outside [0, 1] beyond tolerance")]
    Probability { what: &'static str, value: f64 },

    /// Intermediate or final value is not representable as a finite f64.
    #[error("overflow while evaluating {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors that come from the arguments rather than the numerics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::Index { .. } | Error::LinearAlgebra(_)
        )
    }
}
