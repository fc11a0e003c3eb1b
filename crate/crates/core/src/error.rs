use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} out of range (1..=32)")]
    VertexCount(usize),
    #[error("invalid vertex set: {0}")]
    VertexSet(String),
    #[error("variable x{} out of range for {n} variables", .index + 1)]
    VariableOutOfRange { index: usize, n: usize },
    #[error("ambient rings differ: {0} vs {1} variables")]
    AmbientMismatch(usize, usize),
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined on the unit ideal")]
    UnitIdeal,
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("monomial {0} is not t-spread for t = {1:?}")]
    NotTSpread(String, Vec<usize>),
    #[error("spread vector {0:?} invalid for a degree-{1} monomial")]
    SpreadLength(Vec<usize>, usize),
    #[error("x{} already divides a generator", .0 + 1)]
    VariableInSupport(usize),
    #[error("{0} is not a prime below 32768")]
    NotPrime(u32),
    #[error("generators of I are not the disjoint union of those of I1 and I2")]
    GeneratorPartition,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("graph has isolated vertices")]
    IsolatedVertex,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("checkpoint i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
