use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HkrError {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("group order cap exceeded: closure reached more than {cap} elements")]
    OrderCap { cap: usize },

    #[error("tuple work cap exceeded: more than {cap} candidate checks")]
    TupleWorkCap { cap: u64 },

    #[error("size cap exceeded: {what} (limit {cap})")]
    SizeCap { what: String, cap: u64 },

    #[error("group expression parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unsupported group family `{0}`")]
    UnsupportedFamily(String),

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("level k = {k} is too small: some element order does not divide {p}^{k}")]
    LevelTooSmall { p: u64, k: u32 },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("coefficient is not a unit: {0}")]
    NotUnit(String),

    #[error("formal group law axiom fails: {0}")]
    AxiomFailure(String),

    #[error("coefficient {coefficient} is not {p}-integral")]
    NotIntegral { coefficient: String, p: u64 },

    #[error("truncation degree {degree} too small: {reason}")]
    TruncationTooSmall { degree: usize, reason: String },

    #[error("no suitable prime below {bound} for the character table")]
    NoSuitablePrime { bound: u64 },

    #[error("group is not a p-group (order {order})")]
    NotPGroup { order: usize },

    #[error("invalid G-set: {0}")]
    InvalidGSet(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, HkrError>;
