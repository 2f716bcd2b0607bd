use thiserror::Error;

/// Errors produced by the graph, coloring, decomposition and embedding routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tuple is not strictly increasing at position {position}")]
    NotIncreasing { position: usize },

    #[error("tuple must have at least one entry")]
    EmptyTuple,

    #[error("tuple length {len} exceeds cap {cap}")]
    TupleTooLong { len: usize, cap: usize },

    #[error("value {value} exceeds cap {cap}")]
    ValueTooLarge { value: u64, cap: u64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("digit {digit} at position {position} is out of range for radix {radix}")]
    DigitOutOfRange {
        position: usize,
        digit: u64,
        radix: u64,
    },

    #[error("radix at position {position} must be at least 1")]
    ZeroRadix { position: usize },

    #[error("mixed-radix value does not fit in 64 bits")]
    Overflow,

    #[error("map is not strictly increasing: f({x}) = {fx} but f({y}) = {fy}")]
    NotMonotone { x: u64, fx: u64, y: u64, fy: u64 },

    #[error("no vertices: need n >= {min}, got n = {n}")]
    NoVertices { n: usize, min: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("pattern not irreflexive: both sides have identical ranks")]
    PatternNotIrreflexive,

    #[error("map is not a homomorphism: edge ({0}, {1}) is not preserved")]
    NotHomomorphism(usize, usize),

    #[error("coloring is not proper: vertices {0} and {1} share a color")]
    ImproperColoring(usize, usize),

    #[error("vertex subsets do not partition the vertex set: {0}")]
    NotPartition(String),

    #[error("edge pieces do not cover the edge set: edge ({0}, {1}) is missing")]
    IncompleteCover(usize, usize),

    #[error("pair must differ")]
    EqualPair,

    #[error("class has sign zero; only plus or minus classes carry a block analysis")]
    ZeroSignClass,

    #[error("invalid class bounds [{lo}, {hi}] for tuples of length {len}")]
    InvalidClass { lo: usize, hi: usize, len: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("merged image has {size} values, above the exhaustive-search cap {cap}")]
    SearchCapExceeded { size: usize, cap: usize },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("(\u{2020}) fails at level {level}: a[{upper}] vs b[{lower}] disagrees with g-values")]
    DaggerViolation {
        level: usize,
        upper: usize,
        lower: usize,
    },

    #[error("embedding verification failed on arc {from:?} -> {to:?}")]
    EmbeddingFailed { from: Vec<u64>, to: Vec<u64> },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
