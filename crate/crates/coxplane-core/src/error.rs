use alloc::string::String;
use thiserror::Error;

/// Errors shared by every module in this crate.
///
/// Variants that report a broken internal invariant (rather than bad input)
/// carry enough context to identify the offending object in logs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoxError {
    /// The type string is not one of the recognized families.
    #[error("unknown group type: {0}")]
    UnknownType(String),

    /// The requested rank or dihedral label is outside the supported range.
    #[error("unsupported group: {0}")]
    Unsupported(String),

    /// The bilinear form of the diagram is not positive definite, so the
    /// group is infinite and has no finite root system.
    #[error("bilinear form is not positive definite: {0}")]
    NonFiniteSystem(String),

    /// A generator, root, or orbit index is out of bounds.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// An enumeration exceeded its configured element budget.
    #[error("enumeration budget of {budget} exceeded: {what}")]
    BudgetExceeded { budget: usize, what: String },

    /// The plane eigenspace does not have the expected dimension.
    #[error("rotation eigenspace is degenerate: {0}")]
    EigenbasisDegenerate(String),

    /// A projected quantity failed to land within tolerance of the exact
    /// lattice of admissible values (radii, phases, integer offsets).
    #[error("failed to snap projected value: {0}")]
    SnapFailure(String),

    /// A diagram segment has numerically coincident endpoints.
    #[error("degenerate segment: {0}")]
    DegenerateSegment(String),

    /// A rotation step left the set of almost positive roots.
    #[error("rotation left the almost positive roots: {0}")]
    RootEscaped(String),

    /// The alternating rotation walk failed to reach a negative simple root
    /// within its proven step bound.
    #[error("no negative simple root reached: {0}")]
    NoNegativeSimpleReached(String),

    /// A ring does not have exactly two distinguished boundary edges.
    #[error("distinguished edge count is not 2: {0}")]
    DistinguishedEdgeCountError(String),

    /// No candidate symmetry axis fixes the required segment diagrams.
    #[error("no admissible axis found: {0}")]
    AxisNotFound(String),

    /// Several inequivalent axis pairs fix the required segment diagrams.
    #[error("axis pair is not unique: {0}")]
    AxisNotUnique(String),

    /// Two rotation paths assigned different diagrams to the same root.
    #[error("inconsistent diagram propagation: {0}")]
    InconsistentPropagation(String),

    /// Wrapper for input/output failures in downstream crates.
    #[error("io error: {0}")]
    IOError(String),
}
