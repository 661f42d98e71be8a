use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level must be at least 1, got {0}")]
    InvalidLevel(u32),

    #[error("weight {weight} lies outside the level-{level} alcove (need weight <= {level})")]
    OutsideAlcove { weight: u32, level: u32 },

    #[error("negative multiplicity {coeff} on V{weight}")]
    NegativeCoefficient { weight: u32, coeff: i64 },

    #[error("box configuration must contain at least one box")]
    NoBoxes,

    #[error("invalid lower crossingless match: {0}")]
    InvalidMatch(String),

    #[error("orientation with {downs} down-arrows exceeds the {unmatched} unmatched vertices")]
    InvalidOrientation { downs: u32, unmatched: u32 },

    #[error("bracketing has {found} leaves but {expected} factors were given")]
    LeafCountMismatch { expected: usize, found: usize },

    #[error("bracketing syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("number of factors {0} outside the supported range 1..=8")]
    TreeSizeOutOfRange(usize),

    #[error("number of curves joining the outer boxes must be at least 1, got {0}")]
    InvalidCurveCount(i64),

    #[error("subspace dimension {v} exceeds ambient dimension {w}")]
    DimensionOutOfRange { v: u32, w: u32 },

    #[error("rank {rank} too large for total weight {weight} (need 2*rank <= weight)")]
    RankTooLarge { weight: u32, rank: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
