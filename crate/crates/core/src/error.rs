use thiserror::Error;

/// Errors produced while building states or integrating densities.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violated a precondition (non-positive width, bad quantum number, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature ran out of subdivisions before reaching the requested tolerance.
    #[error(
        "quadrature did not converge: error estimate {achieved:.3e} > requested {requested:.3e} \
         after {subdivisions} subdivisions"
    )]
    Convergence {
        achieved: f64,
        requested: f64,
        subdivisions: usize,
    },

    /// The root-finding bracket does not enclose a sign change.
    #[error("no sign change on bracket [{lo}, {hi}]: f(lo) = {f_lo:.6e}, f(hi) = {f_hi:.6e}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// A physical inequality failed beyond numerical tolerance; indicates a numerics bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// An error with context about which row or state triggered it.
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn with_context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    /// Strips any context layers and returns the underlying error.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }

    /// True when the root cause is a quadrature convergence failure.
    pub fn is_convergence(&self) -> bool {
        matches!(self.root(), Error::Convergence { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
