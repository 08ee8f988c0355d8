use thiserror::Error;

/// Errors produced by the fan, algebra, cohomology and census routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The fan input is malformed. `cone` and `ray` point at the offending
    /// item when there is one.
    #[error("invalid fan: {reason}")]
    InvalidFan {
        reason: String,
        cone: Option<usize>,
        ray: Option<usize>,
    },

    #[error("could not parse fan JSON: {0}")]
    FanParse(String),

    #[error("degree vector has length {found}, fan has {expected} rays")]
    DegreeLength { expected: usize, found: usize },

    /// `sum_i d_i u_i` is not zero; the offending lattice sum is carried along.
    #[error("degree vector is not admissible: sum of d_i * u_i = {lattice_sum:?}")]
    Inadmissible { lattice_sum: Vec<i64> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("relation {index} is not homogeneous")]
    NonHomogeneous { index: usize },

    /// Two independent computations disagreed, or a derived quantity came out
    /// impossible (negative h-vector entry, indivisible census, ...).
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("enumeration needs {required} tuples, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid_fan(reason: impl Into<String>) -> Self {
        Error::InvalidFan {
            reason: reason.into(),
            cone: None,
            ray: None,
        }
    }

    pub(crate) fn invalid_cone(cone: usize, reason: impl Into<String>) -> Self {
        Error::InvalidFan {
            reason: reason.into(),
            cone: Some(cone),
            ray: None,
        }
    }

    pub(crate) fn invalid_ray(ray: usize, reason: impl Into<String>) -> Self {
        Error::InvalidFan {
            reason: reason.into(),
            cone: None,
            ray: Some(ray),
        }
    }
}
