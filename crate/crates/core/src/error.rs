use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which configured limit was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    Ideals,
    OracleOrder,
    Domination,
    Isomorphism,
}

impl fmt::Display for CapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapKind::Ideals => "ideal count",
            CapKind::OracleOrder => "oracle ring order",
            CapKind::Domination => "domination vertex",
            CapKind::Isomorphism => "isomorphism vertex",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("{kind} cap exceeded: {actual} > {limit}")]
    Cap {
        kind: CapKind,
        limit: u64,
        actual: u64,
    },

    #[error("ring {0} has no non-zero proper ideals")]
    NoVertices(String),

    #[error("invalid ring spec {input:?}: {reason}")]
    RingSpec { input: String, reason: String },

    #[error("invalid ideal {input:?}: {reason}")]
    IdealSpec { input: String, reason: String },

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn cap(kind: CapKind, limit: impl TryInto<u64>, actual: impl TryInto<u64>) -> Self {
        Error::Cap {
            kind,
            limit: limit.try_into().unwrap_or(u64::MAX),
            actual: actual.try_into().unwrap_or(u64::MAX),
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::Cap { .. })
    }
}
