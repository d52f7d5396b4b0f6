use thiserror::Error;

use crate::Natural;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("floor of +inf is undefined")]
    InfiniteSurd,
    #[error("empty interval: lower endpoint is not below upper endpoint")]
    EmptyInterval,
    #[error("index {index} out of range for a finite expansion with {len} terms")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("no k <= sigma(a) with sigma_k(a) = sigma(a) for a = {0}")]
    NoKFound(Natural),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
