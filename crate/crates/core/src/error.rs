use core::fmt;

/// Errors raised by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A Jack parameter or multiplicity was not strictly positive.
    NonPositiveParameter,
    /// A sequence that should have been a partition was not weakly decreasing.
    NotAPartition,
    /// The partition has more nonzero parts than the ambient number of variables.
    TooManyParts { parts: usize, nvars: usize },
    /// The number of coordinates does not match the number of variables.
    DimensionMismatch { expected: usize, found: usize },
    /// An operation that needs a homogeneous polynomial received a mixed-degree one.
    NotHomogeneous,
    /// Two partitions in the triangular solve share an eigenvalue.
    DegenerateEigenvalue,
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    /// The split discriminant is negative beyond rounding noise.
    NegativeDiscriminant(f64),
    /// A generalized Pochhammer factor vanished in a series denominator.
    PochhammerPole,
    /// Exact division by a linear form left a remainder.
    InexactDivision,
    /// The requested number of variables is not supported by the operation.
    UnsupportedDimension(usize),
    /// Too few quadrature nodes for the requested exactness.
    TooFewNodes { needed: usize, found: usize },
    /// An integrand failed at a quadrature node.
    Integrand { node: usize, source: alloc::boxed::Box<Error> },
    /// Neither candidate Bessel order reproduced the series.
    ResolutionFailure { best_error: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveParameter => write!(f, "parameter must be strictly positive"),
            Error::NotAPartition => write!(f, "parts must be weakly decreasing"),
            Error::TooManyParts { parts, nvars } => {
                write!(f, "partition has {parts} parts but only {nvars} variables")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::DegenerateEigenvalue => write!(f, "degenerate eigenvalue in triangular solve"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::NegativeDiscriminant(d) => write!(f, "negative discriminant {d:e}"),
            Error::PochhammerPole => write!(f, "generalized Pochhammer symbol vanishes"),
            Error::InexactDivision => write!(f, "exact division by a linear form left a remainder"),
            Error::UnsupportedDimension(n) => write!(f, "{n} variables not supported here"),
            Error::TooFewNodes { needed, found } => {
                write!(f, "need at least {needed} quadrature nodes, got {found}")
            }
            Error::Integrand { node, source } => write!(f, "integrand failed at node {node}: {source}"),
            Error::ResolutionFailure { best_error } => {
                write!(f, "no candidate order reproduces the series (best error {best_error:e})")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
