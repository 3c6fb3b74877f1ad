use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials are over different variable sets: {{{left}}} vs {{{right}}}")]
    VariableSetMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("evaluation is missing an assignment for `{0}`")]
    MissingAssignment(String),

    #[error("cannot parse `{input}` as a rational number: {reason}")]
    BadRational { input: String, reason: String },

    #[error("cannot parse polynomial `{input}`: {reason}")]
    BadPolynomial { input: String, reason: String },

    #[error("matrix dimension mismatch: {0}")]
    MatrixShape(String),

    #[error("vectors are not jointly linearly independent")]
    NotIndependent,

    #[error("vector does not lie in the spanned subspace")]
    OutsideSpan,

    #[error("cannot parse algebra definition: {0}")]
    BadAlgebraFile(String),

    #[error("bracket table conflicts with antisymmetry at entry ({i},{j})")]
    AntisymmetryConflict { i: usize, j: usize },

    #[error("Jacobi identity fails for basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),

    #[error("unknown algebra `{name}`; available: {available}")]
    UnknownAlgebra { name: String, available: String },

    #[error("parameter assignment violates domain constraint `{0}`")]
    DomainViolation(String),

    #[error("plane span{{e{0}, e{1}}} is degenerate with respect to g")]
    DegeneratePlane(usize, usize),

    #[error("tensor does not satisfy the admissible symmetries (component {0} of the residual is nonzero)")]
    NotAdmissible(String),

    #[error("basic-class subspaces do not form a direct sum: {0}")]
    DirectSumFailure(String),

    #[error("{0}")]
    Invalid(String),
}
