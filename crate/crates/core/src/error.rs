use thiserror::Error;

/// Errors raised by the library. Every variant names the violated condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex id {0}")]
    UnknownVertex(u32),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(u32),
    #[error("loop at vertex {0}: plumbing edges must join distinct vertices")]
    Loop(u32),
    #[error("negative genus {genus} at vertex {id}")]
    NegativeGenus { id: u32, genus: i64 },
    #[error("graph must be connected (found {0} components)")]
    Disconnected(usize),
    #[error("graph has {0} boundary legs; a closed graph is required")]
    BoundaryLegs(usize),
    #[error("cannot blow down vertex {id}: {reason}")]
    BlowDown { id: u32, reason: &'static str },
    #[error("cannot blow up: {0}")]
    BlowUp(&'static str),
    #[error("matrix is {rows}x{cols}, a square matrix is required")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix data has {got} entries, expected {expected}")]
    Shape { expected: usize, got: usize },
    #[error("invalid continued fraction input {n}/{q}: {reason}")]
    ContinuedFraction { n: i64, q: i64, reason: &'static str },
    #[error("invalid Seifert pair (alpha={alpha}, class={class}): {reason}")]
    SeifertPair { alpha: i64, class: i64, reason: &'static str },
    #[error("Euler number e is not defined for this Seifert data")]
    MissingEuler,
    #[error("inconsistent monodromy data: {0}")]
    Monodromy(String),
    #[error("invalid germ data: {0}")]
    Germ(String),
    #[error("invalid parameter {name}={value}: {reason}")]
    Parameter { name: &'static str, value: i64, reason: &'static str },
    #[error("no boundary leg with index {0}")]
    MissingLeg(usize),
    #[error("incompatible boundary sections: {0}")]
    IncompatibleSections(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
