use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate arc {0}->{1}")]
    DuplicateArc(String, String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("graph is not reflexive: vertex `{0}` has no loop")]
    NotReflexive(String),
    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("template has {n} vertices, over the soft limit {limit} (pass an override to search anyway)")]
    TemplateTooLarge { n: usize, limit: usize },
    #[error("search budget exceeded ({0} evaluations)")]
    BudgetExceeded(u64),
    #[error("size argument {0} out of range (max {1})")]
    SizeOutOfRange(usize, usize),
    #[error("ordering is not Min-Max: {0}")]
    BandViolation(String),
    #[error("cost matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("colour class `{class}` is not independent: edge {a}-{b}")]
    ClassNotIndependent { class: String, a: String, b: String },
    #[error("no homomorphism from the instance to the template exists")]
    NoHomomorphism,
    #[error("obstruction catalog is unlabeled; run the labeling identification first")]
    UnlabeledCatalog,
    #[error("no catalog member satisfies the constraint table for index {0}")]
    NoMemberMatches(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
