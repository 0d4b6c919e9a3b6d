use thiserror::Error;

/// Errors raised by polynomial validation and the bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient a_{index} = {value} is not strictly positive and finite")]
    NonPositiveCoefficient { index: usize, value: f64 },

    #[error("polynomial needs at least {required} coefficients, got {actual}")]
    TooShort { required: usize, actual: usize },

    #[error("method requires degree >= {required}, polynomial has degree {actual}")]
    DegreeTooLow { required: usize, actual: usize },

    #[error("leading coefficient is zero")]
    ZeroLeading,

    #[error("invalid multiplier: {0}")]
    InvalidMultiplier(&'static str),

    #[error("kind k = {k} outside 1..={degree}")]
    InvalidKind { k: usize, degree: usize },

    #[error("all trailing coefficients a_0..a_(n-k) vanish; no positive Cauchy radius")]
    DegenerateTail,

    #[error("multiplier has no positive root")]
    NoPositiveRoot,

    #[error("multiplier has {0} distinct positive roots")]
    MultiplePositiveRoots(usize),

    #[error("epsilon = {0} outside (0, 1]")]
    EpsilonOutOfRange(f64),

    #[error("hypothesis violated: R = {r} must exceed 1/|a| = {inv_a}")]
    HypothesisViolated { r: f64, inv_a: f64 },

    #[error("method `{0}` does not produce a {1}")]
    UnsupportedMethod(&'static str, &'static str),

    #[error("no figure {0} (expected 1 to 4)")]
    UnknownFigure(u8),

    #[error("{0} did not converge within the iteration cap")]
    NonConvergence(&'static str),
}

impl Error {
    /// True for errors caused by bad input rather than numerical trouble.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::NonConvergence(_) | Error::NoPositiveRoot | Error::MultiplePositiveRoots(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
