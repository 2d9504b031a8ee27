//! Error taxonomy shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at (or too close to) a pole.
    #[error("pole error: {0}")]
    Pole(String),

    /// Adaptive refinement or series acceleration failed to reach tolerance.
    #[error("non-convergence: {0}")]
    NonConvergence(String),

    /// A derivative of higher order than registered was requested.
    #[error("order error: requested derivative order {needed}, function provides {available}")]
    Order { needed: usize, available: usize },

    /// A theorem hypothesis (primitivity, parity of modulus, b+c odd, ...) fails.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// A parity condition on the character/index pair fails.
    #[error("parity condition violation: {0}")]
    Parity(String),

    /// Structural parameter outside its allowed range.
    #[error("parameter range error: {0}")]
    Range(String),

    /// Invalid configuration (CLI/suite layer).
    #[error("config error: {0}")]
    Config(String),

    /// A floating-point result came out non-finite.
    #[error("non-finite result: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
