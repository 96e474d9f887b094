use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("element index {index} out of range for a poset with {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("order relation contains a cycle: {}", .0.join(" <= "))]
    Cycle(Vec<String>),

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("{what} has size {size}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("subset does not match the carrier of the space")]
    CarrierMismatch,

    #[error("subset is not Thomason, so it is not the support of a radical ideal")]
    NotThomason,

    #[error("{0} needs a finite space")]
    NotFinite(&'static str),

    #[error("point does not belong to the space")]
    NoSuchPoint,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
