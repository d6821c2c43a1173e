use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("requested Golay length 2^{0} exceeds the supported maximum 2^20")]
    LengthOverflow(u32),

    #[error("sequences have mismatched lengths ({0} vs {1})")]
    MismatchedLengths(usize, usize),

    #[error("sequence entries must be +1 or -1")]
    NotUnimodular,

    #[error("code sequence is empty")]
    EmptyCode,

    #[error("samples_per_chip must be at least 1")]
    InvalidSampling,

    #[error("sequence length {0} is too short (need at least 2)")]
    TooShort(usize),

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("weights must be strictly positive")]
    NonPositiveWeight,

    #[error("signed product sequence must have no zero entries")]
    ZeroProductEntry,

    #[error(
        "null order {order} must be less than N-1 = {limit} \
         (a null of order N-1 forces the all-zero product sequence)"
    )]
    OrderTooLarge { order: usize, limit: usize },

    #[error("no feasible design within coefficient bound {bound}")]
    Infeasible { bound: u32 },

    #[error("coefficient bound must be at least 1")]
    InvalidBound,

    #[error("search is too large: {0}")]
    SearchTooLarge(String),

    #[error("delay lag {lag} outside the supported range +/-{max}")]
    LagOutOfRange { lag: i64, max: i64 },

    #[error("PRI {pri} s is shorter than the waveform duration {duration} s")]
    PriTooShort { pri: f64, duration: f64 },

    #[error("theta grid is empty")]
    EmptyGrid,

    #[error("doppler interval [{lo}, {hi}] selects no grid cells")]
    EmptyInterval { lo: f64, hi: f64 },

    #[error("target delay {delay} lies outside the delay window [{lo}, {hi}]")]
    TargetOutsideWindow { delay: i64, lo: i64, hi: i64 },

    #[error("noise power must be nonnegative (got {0})")]
    NegativeNoise(f64),

    #[error("delay-Doppler map has no energy to normalize")]
    ZeroEnergy,

    #[error("invalid scene: {0}")]
    SceneConfig(String),

    #[error("invalid design record: {0}")]
    DesignRecord(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
