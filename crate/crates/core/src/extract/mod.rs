//! Witness extractors. Each one mirrors a constructive argument: it either
//! returns a certificate that [`crate::verify::verify_certificate`]
//! accepts, reports honest absence with [`Extraction::NotFound`], or
//! signals a [`ParadoxError`] — a branch the underlying argument proves
//! unreachable, so hitting one means a bug, never an expected outcome.

pub mod basic;

use crate::cert::Certificate;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extraction {
    Found(Certificate),
    NotFound,
}

impl Extraction {
    pub fn found(self) -> Option<Certificate> {
        match self {
            Extraction::Found(c) => Some(c),
            Extraction::NotFound => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Extraction::Found(_))
    }
}

/// A proof-impossible branch executed. Carries enough context to localize
/// the defect.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("paradox: {context} (data {data:?})")]
pub struct ParadoxError {
    pub context: String,
    pub data: Vec<u32>,
}

impl ParadoxError {
    pub fn new(context: impl Into<String>, data: Vec<u32>) -> Self {
        ParadoxError {
            context: context.into(),
            data,
        }
    }
}

pub type ExtractResult = Result<Extraction, ParadoxError>;

pub(crate) fn found(cert: Certificate) -> ExtractResult {
    Ok(Extraction::Found(cert))
}

pub(crate) fn not_found() -> ExtractResult {
    Ok(Extraction::NotFound)
}
