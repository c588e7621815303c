use thiserror::Error;

/// Errors produced anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop arc ({0},{0}) is not allowed")]
    LoopArc(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("circulant jump set is empty")]
    EmptyJumpSet,
    #[error("jump {jump} is not in 1..{m}")]
    JumpOutOfRange { jump: usize, m: usize },
    #[error("3-cycle extension parts must be nonempty")]
    ZeroPartSize,
    #[error("path length {k} out of range for order {n}")]
    LengthOutOfRange { k: usize, n: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("strong 4-transitive digraph of order {0} matches no family clause")]
    Unclassified(usize),
    #[error("malformed digraph6 header: {0}")]
    MalformedHeader(String),
    #[error("invalid digraph6 payload: {0}")]
    MalformedPayload(String),
    #[error("digraph6 padding bits are nonzero")]
    TrailingBitsNonzero,
    #[error("digraph6 payload truncated: expected {expected} bytes, got {got}")]
    TruncatedPayload { expected: usize, got: usize },
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("predicate `{0}` is not hereditary and cannot prune generation")]
    NonHereditaryPruneRequested(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
}

pub type Result<T> = std::result::Result<T, Error>;
