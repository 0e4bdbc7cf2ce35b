use core::fmt;

/// Errors reported by the exact engines and the samplers.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(missing_docs)]
pub enum Error {
    /// A length vector with no bars.
    EmptyLengths,
    /// Bar `index` (1-based) has a length that is zero or negative.
    NonPositiveLength { index: usize },
    /// The query needs at least `min` bars (or simplex vertices).
    TooFew { n: usize, min: usize },
    /// Homological degree outside `0..=max`.
    DegreeOutOfRange { p: usize, max: usize },
    /// Bar label outside `1..=n`.
    IndexOutOfRange { index: usize, n: usize },
    /// Subset cardinality larger than the number of bars.
    CardinalityOutOfRange { cardinality: usize, n: usize },
    /// The distinct-value slice formula was given repeated values.
    RepeatedValues,
    /// Grouped values are not strictly decreasing, or a multiplicity is zero.
    MalformedGroups,
    /// The operation needs a nonempty subset.
    EmptySubset,
    /// A sampler was asked for zero samples.
    ZeroSamples,
    /// Exhaustive enumeration over `n` bars exceeds the supported `max`.
    TooLarge { n: usize, max: usize },
    /// An integer result does not fit in 64 bits.
    Overflow,
    /// A closed-form reference was requested outside the range where it holds.
    OutsideClosedForm { n: usize, p: usize },
    /// Convergence range does not start at or above `min`.
    RangeStart { n_min: usize, min: usize },
}

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyLengths => write!(f, "length vector is empty"),
            Error::NonPositiveLength { index } => {
                write!(f, "bar {index} has a nonpositive length")
            }
            Error::TooFew { n, min } => write!(f, "need at least {min} entries, got {n}"),
            Error::DegreeOutOfRange { p, max } => {
                write!(f, "degree p = {p} is outside 0..={max}")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "index {index} is outside 1..={n}")
            }
            Error::CardinalityOutOfRange { cardinality, n } => {
                write!(f, "cardinality {cardinality} exceeds n = {n}")
            }
            Error::RepeatedValues => write!(
                f,
                "vertex values are not pairwise distinct; use the confluent formula"
            ),
            Error::MalformedGroups => write!(
                f,
                "grouped values must be strictly decreasing with positive multiplicities"
            ),
            Error::EmptySubset => write!(f, "subset must be nonempty"),
            Error::ZeroSamples => write!(f, "sample count must be at least 1"),
            Error::TooLarge { n, max } => {
                write!(f, "n = {n} exceeds the enumeration limit of {max}")
            }
            Error::Overflow => write!(f, "integer result overflows 64 bits"),
            Error::OutsideClosedForm { n, p } => {
                write!(f, "closed form requires 2p < n - 3 (n = {n}, p = {p})")
            }
            Error::RangeStart { n_min, min } => {
                write!(f, "n_min = {n_min} must be at least {min}")
            }
        }
    }
}

impl core::error::Error for Error {}
