use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("coordinate is not finite")]
    NonFinite,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point lies outside the domain{}", fmt_index(*.index))]
    PointOutsideDomain { index: Option<usize> },

    #[error("cayley transform has a pole at -1")]
    PoleAtMinusOne,

    #[error("point is at the pole of the Moebius map")]
    PoleInput,

    #[error("Moebius map is degenerate (ad - bc = {det:e})")]
    DegenerateMap { det: f64 },

    #[error("epsilon must be positive, got {0}")]
    NonpositiveEpsilon(f64),

    #[error("parameter `{name}` must be positive, got {value}")]
    NonpositiveParameter { name: &'static str, value: f64 },

    #[error("n_points * delta = {product} exceeds the cap {cap}")]
    OverflowGuard { product: f64, cap: f64 },

    #[error("base point is off the horocycle by {deviation:e}")]
    BaseOffCurve { deviation: f64 },

    #[error("no bracket found after {0} halvings of the arc parameter")]
    BracketNotFound(usize),

    #[error("walk origin has boundary distance {distance} < c = {c}")]
    OriginOutsideDc { distance: f64, c: f64 },

    #[error("ray leaves D_c at walk parameter {parameter}")]
    RayEscapesDc { parameter: f64 },

    #[error("invalid packer configuration: {0}")]
    InvalidPackerConfig(String),

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),

    #[error("need at least {needed} partial sums, got {found}")]
    TooFewTerms { needed: usize, found: usize },

    #[error("boundary distance {distance} at index {index} is not < 1")]
    BoundaryDistanceNotLessThanOne { index: usize, distance: f64 },

    #[error("weight function is not increasing: {0}")]
    NonincreasingWeight(String),

    #[error("admissibility is only decided for the power family")]
    UnsupportedFamily,

    #[error("weight evaluated at {x} outside its tabulated range [{lo}, {hi}]")]
    WeightOutOfRange { x: f64, lo: f64, hi: f64 },

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

fn fmt_index(index: Option<usize>) -> String {
    match index {
        Some(i) => format!(" (index {i})"),
        None => String::new(),
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
