use thiserror::Error;

use crate::constructions::SwitchingViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderCap(usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("invalid parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("invalid switching partition: {0}")]
    InvalidSwitching(SwitchingViolation),

    /// One message per violated precondition.
    #[error("precondition failed: {}", .0.join("; "))]
    Preconditions(Vec<String>),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Preconditions(vec![msg.into()])
    }

    pub(crate) fn bad_params(name: &str, reason: impl Into<String>) -> Self {
        Error::BadParams {
            name: name.to_string(),
            reason: reason.into(),
        }
    }
}
