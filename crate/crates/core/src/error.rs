use thiserror::Error;

use crate::mosaic::Position;
use crate::tiles::Side;

pub type Result<T, E = MosaicError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum MosaicError {
    #[error("mosaic must be a non-empty square matrix (row {row} has {len} entries, expected {expected})")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("tile id {value} at ({row}, {col}) is outside 0..=10")]
    BadTileId { value: i64, row: usize, col: usize },

    #[error("tile T{tile} has no connection point on its {side:?} side")]
    NoConnection { tile: u8, side: Side },

    #[error("tile T{0} is not a crossing")]
    NotACrossingTile(u8),

    #[error("no crossing tile at {0}")]
    NotACrossing(Position),

    #[error("no strand enters {position} through its {side:?} side")]
    NoStrand { position: Position, side: Side },

    #[error("strand leaves the mosaic through the {side:?} side of {position}")]
    BoundaryExit { position: Position, side: Side },

    #[error("position {0} is outside the mosaic")]
    OutOfBounds(Position),

    #[error("mosaic is not suitably connected")]
    NotSuitablyConnected,

    #[error("({row}, {col}) is not the next row-major position (expected index {expected})")]
    OutOfOrder { row: usize, col: usize, expected: usize },

    #[error("{count} crossings exceeds the cap of {cap}")]
    TooManyCrossings { count: usize, cap: usize },

    #[error("mosaic has {0} components, expected exactly one")]
    NotOneComponent(usize),

    #[error("unknot oracle failed: {0}")]
    OracleFailure(String),

    #[error("tangle terms must be nonzero")]
    ZeroTerm,

    #[error("no mosaic satisfied the constraints after {0} attempts")]
    AttemptsExhausted(usize),

    #[error("invalid generation spec: {0}")]
    InvalidSpec(String),

    #[error("{0} crossing-free component(s) cannot be represented in a PD code")]
    SkippedComponents(usize),

    #[error("unknown direction {0:?}")]
    BadDirection(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}
