use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: cannot combine sqrt({left}) with sqrt({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("group construction failed: {0}")]
    Construction(String),

    #[error("{sub} is not a subgroup of {group}")]
    NotASubgroup { sub: String, group: String },

    #[error("unknown particle `{0}`")]
    UnknownParticle(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("inconsistent row `{row}`: {detail}")]
    Inconsistent { row: String, detail: String },

    #[error("expected exactly one doublet assignment for ({up}, {down}), found {found}")]
    Uniqueness {
        up: String,
        down: String,
        found: usize,
    },

    #[error("identity failed: {0}")]
    IdentityFailed(String),

    #[error("units never used: {0:?}")]
    CoverageGap(Vec<String>),

    #[error("report encoding: {0}")]
    Encoding(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
