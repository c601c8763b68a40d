use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Binary operation on operator polynomials over different algebras.
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch {
        left: &'static str,
        right: &'static str,
    },

    /// Binary operation on phase-space objects over different variable pairs.
    #[error("variable mismatch: {left} vs {right}")]
    VarMismatch {
        left: &'static str,
        right: &'static str,
    },

    /// An exponent would exceed the configured degree cap.
    #[error("degree overflow: exponent {got} exceeds cap {cap}")]
    DegreeOverflow { got: u64, cap: u32 },

    /// Complex conjugation requested while a formal ordering parameter is
    /// still present. Substitute a concrete value first, or use the
    /// real-parameter convention explicitly.
    #[error("conjugation undefined: formal ordering parameter present; substitute a concrete value or use the real-parameter convention")]
    SymbolicConjugation,

    /// A numeric evaluation requires all formal units substituted away.
    #[error("scalar is not concrete: formal unit {unit} remains")]
    SymbolicScalar { unit: &'static str },

    /// Exact division by i*hbar failed because some term carries no hbar.
    #[error("not divisible by i*hbar: a term without an hbar factor remains")]
    NotDivisibleByHbar,

    /// Argument outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Combinatorial size guard tripped.
    #[error("size guard exceeded: {what} = {got} is larger than {limit}")]
    SizeGuard {
        what: &'static str,
        got: u64,
        limit: u64,
    },
}
