use thiserror::Error;

use crate::coeffs::Rational;

/// Broad error families, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Io,
    Parse,
    Invariant,
    Pole,
    Parity,
    Input,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("rational function has a pole at y = {at}")]
    Pole { at: Rational },
    #[error("pole at y = {at} in the coefficient of basis element `{label}`")]
    ClassPole { label: String, at: Rational },

    #[error("class belongs to a different module than expected")]
    ModuleMismatch,
    #[error("series belong to different space models")]
    ModelMismatch,
    #[error("basis index {index} out of range for a module of rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("map entry {src} -> {dst} joins half-degrees {src_degree} and {dst_degree}")]
    DegreeMismatch {
        src: usize,
        dst: usize,
        src_degree: u32,
        dst_degree: u32,
    },

    #[error("model invariant violated ({invariant}): {detail}")]
    Invariant { invariant: &'static str, detail: String },

    #[error("series has a nonzero constant term; exp needs a_0 = 0")]
    NonzeroConstantTerm,
    #[error("series constant term is not the unit; log needs a_0 = 1")]
    NonUnitConstantTerm,
    #[error("coefficient of `{label}` depends on y; a y-free class is required")]
    NotYFree { label: String },
    #[error("signature {sigma} and Euler characteristic {chi} have different parity")]
    ParityMismatch { sigma: i64, chi: i64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Io(_) => ErrorKind::Io,
            Error::Parse(_) | Error::Json(_) | Error::UnknownLabel(_) => ErrorKind::Parse,
            Error::Pole { .. } | Error::ClassPole { .. } => ErrorKind::Pole,
            Error::ParityMismatch { .. } => ErrorKind::Parity,
            Error::Invariant { .. }
            | Error::DegreeMismatch { .. }
            | Error::DuplicateLabel(_)
            | Error::IndexOutOfRange { .. }
            | Error::ModuleMismatch
            | Error::ModelMismatch
            | Error::NotYFree { .. } => ErrorKind::Invariant,
            Error::DivisionByZero
            | Error::NonzeroConstantTerm
            | Error::NonUnitConstantTerm
            | Error::InvalidInput(_) => ErrorKind::Input,
        }
    }

    pub(crate) fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            invariant,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
