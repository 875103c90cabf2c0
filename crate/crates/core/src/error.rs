//! Error type shared by every module in the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Field construction rejected the (p, e, modulus) triple.
    #[error("invalid field spec: {0}")]
    InvalidFieldSpec(String),

    /// Division or inversion of the zero element.
    #[error("division by zero")]
    DivisionByZero,

    /// An input required to lie in the subfield of q-degree `k` does not.
    #[error("element is not in the subfield of degree {k} over F_q")]
    NotInSubfield { k: u32 },

    /// Subfield index outside {1, 2, 3, 6}.
    #[error("no subfield of q-degree {k} inside F_q6")]
    BadSubfieldIndex { k: u32 },

    /// Operation only defined in odd characteristic.
    #[error("operation requires odd characteristic")]
    OddCharRequired,

    /// Operation only defined in characteristic two.
    #[error("operation requires characteristic two")]
    EvenCharRequired,

    /// A quadratic was passed with zero leading coefficient.
    #[error("leading coefficient of the quadratic is zero")]
    ZeroLeadingCoefficient,

    /// An input that must be nonzero was zero.
    #[error("input must be nonzero")]
    ZeroInput,

    /// Index-style argument out of its documented range.
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: u64, bound: u64 },

    /// An exhaustive enumeration would exceed its safety guard.
    #[error("enumeration of size {size} exceeds the guard {limit}")]
    EnumerationTooLarge { size: u128, limit: u128 },

    /// Brute-force kernel counting found a root count that is not a power of q.
    #[error("kernel root count {count} is not a power of q")]
    NonSubspaceKernel { count: u128 },

    /// Equivalence queries are undefined on norm-1 parameters.
    #[error("norm of the binomial parameter is 1")]
    NormOne,

    /// The closed-form criterion and the brute-force scan disagreed on a
    /// norm-fiber representative (digits of b, constant first). This firing
    /// means the implementation is wrong somewhere, never the formulas.
    #[error("criterion disagrees with the brute-force oracle at b = {b:?}")]
    OracleDisagreement { b: Vec<u64> },

    /// A set handed to the orbit partitioner is not closed under x -> x^p.
    #[error("set is not closed under the p-power map")]
    NotClosed,

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
