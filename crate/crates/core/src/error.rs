use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("structure constant n{index} = {value} is outside {{-1, 0, 1}}")]
    StructureConstant { index: usize, value: i64 },

    #[error("equation-of-state parameter k = {0} is outside [0, 1)")]
    KOutOfRange(String),

    #[error("unknown model tag {0:?}")]
    UnknownModel(String),

    #[error("unknown {kind} {name:?}; available: {available}")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("component {component} of the vector field is not divisible by x{variable}")]
    NotDivisible { component: usize, variable: usize },

    #[error("variable count mismatch: expected {expected}, got {actual}")]
    VariableCount { expected: usize, actual: usize },

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_error(what: &'static str, input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}
