use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{op}: dimension mismatch between {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("entry {position}: index ({row}, {col}) out of range for a {nrows}x{ncols} matrix")]
    IndexOutOfBounds {
        position: usize,
        row: usize,
        col: usize,
        nrows: usize,
        ncols: usize,
    },

    #[error("{what}: index {index} out of range (bound {bound})")]
    SelectionOutOfBounds {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("{what}: duplicate index {index}")]
    DuplicateIndex { what: &'static str, index: usize },

    #[error("triples have mismatched lengths: i={i}, j={j}, v={v}")]
    RaggedTriples { i: usize, j: usize, v: usize },

    #[error("unknown semiring {0:?}")]
    UnknownSemiring(String),

    #[error("semiring {semiring} violates {law}: {detail}")]
    SemiringLaw {
        semiring: String,
        law: String,
        detail: String,
    },

    #[error("{op} requires a semiring whose additive identity annihilates multiplication ({semiring} does not)")]
    MissingAnnihilator { op: &'static str, semiring: String },

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("edge {src} -> {dst} has a zero weight (zero means no edge)")]
    ZeroWeight { src: String, dst: String },

    #[error("edge {src} -> {dst} has negative weight {weight}")]
    NegativeWeight { src: String, dst: String, weight: i64 },

    #[error("edge {edge:?}: {reason}")]
    InvalidEdge { edge: String, reason: String },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("{}line {line}: {message}", path_prefix(path))]
    Parse {
        path: Option<PathBuf>,
        line: usize,
        message: String,
    },

    #[error("scale {scale} exceeds the generator cap of {cap}")]
    ScaleTooLarge { scale: u32, cap: u32 },

    #[error("result checksum differs across thread counts: {0}")]
    ChecksumMismatch(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn path_prefix(path: &Option<PathBuf>) -> String {
    match path {
        Some(p) => format!("{}: ", p.display()),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: None,
            line,
            message: message.into(),
        }
    }

    pub(crate) fn with_path(self, p: &std::path::Path) -> Self {
        match self {
            Error::Parse { line, message, .. } => Error::Parse {
                path: Some(p.to_path_buf()),
                line,
                message,
            },
            other => other,
        }
    }
}
