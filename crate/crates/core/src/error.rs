use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: syntax error at offset {pos}: {msg}")]
    Syntax { what: &'static str, pos: usize, msg: String },

    #[error("tree pair leaf counts differ ({plus} vs {minus})")]
    LeafCountMismatch { plus: usize, minus: usize },

    #[error("leaf index {index} out of range for {len} leaves")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("not an element of F: {0}")]
    InvalidPlMap(String),

    #[error("point {0} is outside the open interval (0, 1)")]
    RNotInRange(String),

    #[error("r = 1/2: every nontrivial element of Stab(1/2) gives a split link L ⊔ ○, so no unknot element exists")]
    RIsHalf,

    #[error("binary expansion exhausted after {digits} digits before the construction could decide")]
    InsufficientPrecision { digits: usize },

    #[error("no basic element for address {0}")]
    UnknownBasicAddress(String),

    #[error("diagram has {crossings} crossings, above the bracket cap of {cap}")]
    CrossingCapExceeded { crossings: usize, cap: usize },

    #[error("unknown library element @{0}")]
    UnknownName(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn syntax(what: &'static str, pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { what, pos, msg: msg.into() }
    }
}
