use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("non-involutive gluing at tetrahedron {tet}, face {face}")]
    NonInvolutive { tet: usize, face: u8 },
    #[error("face {face} of tetrahedron {tet} is glued to itself")]
    SelfGluing { tet: usize, face: u8 },
    #[error("the dual gluing graph is disconnected")]
    Disconnected,
    #[error("closed manifold: no boundary face")]
    Closed,
    #[error("boundary surface is disconnected ({0} components)")]
    DisconnectedBoundary(usize),
    #[error("boundary surface is non-orientable")]
    NonOrientableBoundary,
    #[error("length mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("not a surface: {0}")]
    NotSurface(String),
    #[error("incompatible sum: {0}")]
    Incompatible(String),
    #[error("edge counts do not match on boundary edge {0}")]
    EdgeMismatch(usize),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
