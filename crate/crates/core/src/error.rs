use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semilattice has no unique minimum element")]
    NoMinimum,
    #[error("order relation is not a partial order: flats {0} and {1} are mutually below each other")]
    NotAPartialOrder(usize, usize),
    #[error("flats {0} and {1} have no greatest lower bound")]
    MissingMeet(usize, usize),
    #[error("rank is not strictly monotone: flat {below} < flat {above} but rk {below} >= rk {above}")]
    RankViolation { below: usize, above: usize },
    #[error("flat {flat} has dimension {dim}, expected at most {ambient}")]
    InvalidDimension { flat: usize, dim: usize, ambient: usize },
    #[error("the minimum flat has dimension {dim}, expected the ambient dimension {ambient}")]
    MinimumNotAmbient { dim: usize, ambient: usize },
    #[error("unknown flat {0}")]
    UnknownFlat(i64),
    #[error("duplicate flat id {0}")]
    DuplicateFlat(i64),
    #[error("coefficient of x^{power} is {coeff}; not the Möbius polynomial of an arrangement")]
    NegativeCoefficient { power: u32, coeff: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension must be at least 1")]
    ZeroAmbientDimension,
    #[error("hyperplane {0} has a zero normal vector")]
    ZeroNormal(usize),
    #[error("hyperplanes {first} and {second} are identical")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("the given flat is not an element of the intersection semilattice")]
    FlatNotInLattice,
    #[error("{count} hyperplanes exceed the enumeration cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("wiring diagram needs at least one wire")]
    NoWires,
    #[error("event {event} (top {top}, size {size}) does not fit {wires} wires")]
    OutOfRange { event: usize, top: usize, size: usize, wires: usize },
    #[error("event {event} has size {size}; crossings involve at least two wires")]
    EventTooSmall { event: usize, size: usize },
    #[error("event {event} crosses wires {a} and {b} a second time")]
    RepeatedCrossing { event: usize, a: usize, b: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    Param(String),
}
