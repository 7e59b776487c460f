use core::fmt;

/// Errors raised by the analytic and simulation routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A parameter lies outside its legal range.
    Domain {
        /// Parameter name as it appears on the command line.
        name: &'static str,
        /// Offending value.
        value: f64,
        /// Human readable legal range, e.g. `"must exceed 2"`.
        expected: &'static str,
    },
    /// The constraints cannot be met, e.g. no power split yields a positive
    /// secrecy capacity.
    Infeasible(&'static str),
    /// The request exceeds a documented capability limit.
    Unsupported {
        /// What was requested.
        what: &'static str,
        /// The limit that was exceeded.
        limit: u32,
        /// Suggested alternative.
        hint: &'static str,
    },
    /// An objective or integrand produced NaN or an infinity.
    NonFinite {
        /// Argument at which the evaluation failed.
        at: f64,
    },
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain {
                name,
                value,
                expected,
            } => write!(f, "{name} {expected} (got {value})"),
            Error::Infeasible(why) => write!(f, "infeasible: {why}"),
            Error::Unsupported { what, limit, hint } => {
                write!(f, "{what} is limited to {limit}; {hint}")
            }
            Error::NonFinite { at } => write!(f, "non-finite evaluation at {at}"),
        }
    }
}

impl core::error::Error for Error {}
