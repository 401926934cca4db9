use thiserror::Error;

/// Errors produced by the library.
///
/// Qubit, vertex and face numbers in messages are 1-based, matching the
/// text formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pauli string is empty")]
    EmptyPauli,
    #[error("bad pauli string at position {position}: unexpected {found:?}")]
    PauliSyntax { position: usize, found: char },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("symplectic vectors need an even number of columns, got {0}")]
    OddColumns(usize),
    #[error("rows {first} and {second} anticommute")]
    NonCommuting { first: usize, second: usize },
    #[error("no checks given and no qubit count")]
    NoChecks,
    #[error("logical basis is degenerate: no partner for vector {0}")]
    DegenerateLogicals(usize),
    #[error("invalid logical basis: {0}")]
    InvalidLogicals(String),

    #[error("polyhedron has no vertices")]
    NoVertices,
    #[error("face {face} has {len} vertices, need at least 3")]
    FaceTooSmall { face: usize, len: usize },
    #[error("face {face} references vertex {vertex}, outside 1..={n_vertices}")]
    VertexOutOfRange {
        face: usize,
        vertex: usize,
        n_vertices: usize,
    },
    #[error("face {face} repeats vertex {vertex}")]
    RepeatedVertex { face: usize, vertex: usize },
    #[error("edge {{{u},{v}}} lies on {count} face(s), expected 2")]
    EdgeMultiplicity { u: usize, v: usize, count: usize },
    #[error("vertex {0} lies on no face")]
    IsolatedVertex(usize),
    #[error("Euler characteristic is {0}, expected 2")]
    EulerCharacteristic(i64),
    #[error("faces cannot be 3-colored: {0}")]
    NotThreeColorable(String),
    #[error("no 3-coloring of the faces gives commuting checks")]
    NoCommutingColoring,
    #[error("face {0} has no color")]
    UncoloredFace(usize),
    #[error("unknown builtin polyhedron {0:?}")]
    UnknownBuiltin(String),
    #[error("polyhedron file, line {line}: {message}")]
    PolyFormat { line: usize, message: String },

    #[error("twist count {0} is odd; twists come in pairs")]
    OddTwistCount(usize),
    #[error("code encodes no logical qubits; distance is undefined")]
    NoLogicalQubits,
    #[error("no logical operator of weight <= {0}")]
    DistanceExceeds(usize),
    #[error("decoder table would need 2^{0} entries (limit 2^{1})")]
    TableTooLarge(usize, usize),
    #[error("error and correction have different syndromes")]
    SyndromeMismatch,
    #[error("bad syndrome string at position {0}")]
    SyndromeSyntax(usize),
    #[error("decoder table, line {line}: {message}")]
    TableFormat { line: usize, message: String },

    #[error("depolarizing probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("shot count must be positive")]
    ZeroShots,
}

pub type Result<T> = std::result::Result<T, Error>;
