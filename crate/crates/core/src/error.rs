use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("{family}: {requirement} required (got {got})")]
    ParameterOutOfRange {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
}

/// Errors from the text formats, always tagged with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatErrorKind {
    #[error("malformed header, expected \"n m\"")]
    MalformedHeader,
    #[error("malformed line, expected two positive integers")]
    MalformedLine,
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("color must be a positive integer")]
    ZeroColor,
    #[error("vertex {0} is assigned twice")]
    DuplicateVertex(usize),
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring covers {found} vertices but the graph has {expected}")]
    DomainMismatch { expected: usize, found: usize },
    #[error("vertex {0} has color 0; colors are positive")]
    ZeroColor(Vertex),
    #[error("empty coloring")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
