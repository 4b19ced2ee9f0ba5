use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong in the core crate.
///
/// Vertex indices carried by the variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An arrow from a vertex to itself.
    LoopArrow { vertex: usize },
    /// Arrows in both directions between two vertices.
    TwoCycle { source: usize, target: usize },
    /// A vertex label outside `1..=n`.
    BadIndex { index: usize, n: usize },
    /// A multiplicity of zero in an arrow list.
    ZeroMultiplicity { source: usize, target: usize },
    /// Attempt to mutate at a frozen vertex of a framed quiver.
    FrozenVertex { vertex: usize },
    /// The Euler form was requested for a quiver with an oriented cycle.
    CyclicQuiver,
    /// Vector, charge or quiver sizes disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// Integer overflow in arrow multiplicities or class entries.
    Overflow,
    /// The zero class was passed where a nonzero nonnegative class is required.
    ZeroClass,
    /// A class with a negative entry was passed where a nonnegative one is required.
    NegativeClass,
    /// A complex number outside the closed-on-the-left upper half-plane.
    OutOfHalfPlane { index: Option<usize> },
    /// Two green vertices tie for maximal phase.
    NondiscreteCharge {
        step: usize,
        vertices: (usize, usize),
    },
    /// Inversion of the zero rational function.
    DivisionByZero,
    /// Exponent vector of total degree above the truncation bound.
    DegreeOverflow { degree: u32, bound: u32 },
    /// Series from different quantum affine spaces were combined.
    IncompatibleAlgebras,
    /// Inverse requested for a series whose constant term vanishes.
    NonUnitConstantTerm,
    /// The mutation method did not reach an all-red quiver within its budget.
    InfiniteSpectrum { steps: usize },
    /// The final framed quiver of a maximal run is not a permuted copy of the start.
    SelfDualityViolated,
    /// An operation requiring a maximal run received a truncated one.
    NotMaximal,
    /// Two oracle classes share a phase.
    PhaseTie,
    /// A step budget or bound of zero.
    ZeroBudget,
    /// Malformed polynomial text.
    Parse { position: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopArrow { vertex } => write!(f, "loop arrow at vertex {vertex}"),
            Error::TwoCycle { source, target } => {
                write!(f, "arrow {source}->{target} creates a 2-cycle")
            }
            Error::BadIndex { index, n } => {
                write!(f, "vertex {index} out of range 1..={n}")
            }
            Error::ZeroMultiplicity { source, target } => {
                write!(f, "arrow {source}->{target} has multiplicity 0")
            }
            Error::FrozenVertex { vertex } => write!(f, "vertex {vertex} is frozen"),
            Error::CyclicQuiver => f.write_str("quiver has an oriented cycle"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Overflow => f.write_str("integer overflow in arrow multiplicities"),
            Error::ZeroClass => f.write_str("class vector is zero"),
            Error::NegativeClass => f.write_str("class vector has a negative entry"),
            Error::OutOfHalfPlane { index: Some(i) } => {
                write!(f, "z_{i} is not in the upper half-plane")
            }
            Error::OutOfHalfPlane { index: None } => {
                f.write_str("value is not in the upper half-plane")
            }
            Error::NondiscreteCharge { step, vertices } => write!(
                f,
                "non-discrete charge: green vertices {} and {} tie for maximal phase at step {step}",
                vertices.0, vertices.1
            ),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::DegreeOverflow { degree, bound } => {
                write!(f, "total degree {degree} exceeds truncation bound {bound}")
            }
            Error::IncompatibleAlgebras => {
                f.write_str("series belong to different quantum affine spaces")
            }
            Error::NonUnitConstantTerm => f.write_str("series has zero constant term"),
            Error::InfiniteSpectrum { steps } => {
                write!(f, "no maximal green sequence within {steps} steps")
            }
            Error::SelfDualityViolated => {
                f.write_str("final quiver is not a permutation of the original")
            }
            Error::NotMaximal => f.write_str("run did not reach an all-red quiver"),
            Error::PhaseTie => f.write_str("two classes have equal phase"),
            Error::ZeroBudget => f.write_str("budget must be at least 1"),
            Error::Parse { position } => write!(f, "malformed polynomial at byte {position}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn check_len<T>(v: &[T], n: usize) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        })
    }
}
