use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n = {n} exceeds the enumeration budget (cap {cap})")]
    Capacity { n: usize, cap: usize },

    #[error("invalid group element: {0}")]
    InvalidElement(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate Möbius map (alpha*delta == beta*gamma)")]
    DegenerateMap,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("interval endpoint {0} is a root")]
    EndpointRoot(String),

    #[error("polynomial {index} is not real-rooted ({real} real roots for degree {degree})")]
    NotRealRooted {
        index: usize,
        real: usize,
        degree: usize,
    },

    #[error("degree gap: deg F = {big} must be deg f = {small} or deg f + 1")]
    DegreeGap { small: usize, big: usize },

    #[error("polynomial {0} has a non-positive leading coefficient")]
    NonPositiveLeading(usize),

    #[error("series division by a series with zero constant term")]
    SingularSeries,

    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
