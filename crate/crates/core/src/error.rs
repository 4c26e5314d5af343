use thiserror::Error;

/// Errors raised by category models and the constructions built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("cannot compose {g} after {f}: codomain {cod} does not match domain {dom}")]
    NotComposable {
        g: String,
        f: String,
        cod: String,
        dom: String,
    },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("table entry missing: {0}")]
    MissingEntry(String),
    #[error("morphism {0} has no stored inverse")]
    NotInvertible(String),
    #[error("sequence of length {seq} does not fit a shape with {leaves} leaves")]
    LengthMismatch { seq: usize, leaves: usize },
    #[error("target category is {0}, but the construction needs the opposite")]
    StrictnessMismatch(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = CatError> = std::result::Result<T, E>;
