//! The eleven standard mosaic tiles `T0`..`T10`.
//!
//! Each tile is described by the sides carrying a connection point and by
//! how those points are paired into local strands. Crossing tiles (`T9`,
//! `T10`) pair opposite sides and carry an over-strand axis.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MosaicError, Result};

/// An edge of a tile. Iteration order everywhere is `Top, Right, Bottom, Left`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Top,
    Right,
    Bottom,
    Left,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Right, Side::Bottom, Side::Left];

    /// Counterclockwise cyclic order with rows growing downward.
    pub const COUNTERCLOCKWISE: [Side; 4] = [Side::Right, Side::Top, Side::Left, Side::Bottom];

    pub const fn opposite(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Right => Side::Left,
            Side::Bottom => Side::Top,
            Side::Left => Side::Right,
        }
    }

    pub const fn index(self) -> usize {
        self as usize
    }

    /// Bit used in connection masks.
    pub const fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// Direction of motion when leaving a tile through this side.
    pub const fn outward(self) -> Direction {
        match self {
            Side::Top => Direction::Up,
            Side::Right => Direction::Right,
            Side::Bottom => Direction::Down,
            Side::Left => Direction::Left,
        }
    }

    pub const fn is_vertical(self) -> bool {
        matches!(self, Side::Top | Side::Bottom)
    }
}

/// Direction of motion on the grid. `Up` decreases the row index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Right,
    Down,
    Left,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Up, Direction::Right, Direction::Down, Direction::Left];

    /// The side a strand moving in this direction leaves through.
    pub const fn exit_side(self) -> Side {
        match self {
            Direction::Up => Side::Top,
            Direction::Right => Side::Right,
            Direction::Down => Side::Bottom,
            Direction::Left => Side::Left,
        }
    }

    /// The side a strand moving in this direction enters the next tile through.
    pub const fn entry_side(self) -> Side {
        self.exit_side().opposite()
    }

    pub const fn reverse(self) -> Direction {
        self.entry_side().outward()
    }

    /// `(d_row, d_col)` offset of one step.
    pub const fn delta(self) -> (isize, isize) {
        match self {
            Direction::Up => (-1, 0),
            Direction::Right => (0, 1),
            Direction::Down => (1, 0),
            Direction::Left => (0, -1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Right => "right",
            Direction::Down => "down",
            Direction::Left => "left",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Direction {
    type Err = MosaicError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "up" | "u" => Ok(Direction::Up),
            "right" | "r" => Ok(Direction::Right),
            "down" | "d" => Ok(Direction::Down),
            "left" | "l" => Ok(Direction::Left),
            _ => Err(MosaicError::BadDirection(s.to_string())),
        }
    }
}

/// Which strand of a crossing tile passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverAxis {
    Vertical,
    Horizontal,
}

/// Identifier of one of the eleven standard tiles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct TileId(u8);

impl TileId {
    pub const COUNT: usize = 11;

    pub const BLANK: TileId = TileId(0);
    pub const T1: TileId = TileId(1);
    pub const T2: TileId = TileId(2);
    pub const T3: TileId = TileId(3);
    pub const T4: TileId = TileId(4);
    pub const HORIZONTAL: TileId = TileId(5);
    pub const VERTICAL: TileId = TileId(6);
    pub const T7: TileId = TileId(7);
    pub const T8: TileId = TileId(8);
    pub const T9: TileId = TileId(9);
    pub const T10: TileId = TileId(10);

    pub fn new(value: u8) -> Result<Self> {
        if (value as usize) < Self::COUNT {
            Ok(TileId(value))
        } else {
            Err(MosaicError::BadTileId { value: value as i64, row: 0, col: 0 })
        }
    }

    pub fn all() -> impl Iterator<Item = TileId> + Clone {
        (0..Self::COUNT as u8).map(TileId)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn spec(self) -> &'static TileSpec {
        tile_spec(self)
    }

    pub fn is_crossing(self) -> bool {
        self.0 == 9 || self.0 == 10
    }

    pub fn is_blank(self) -> bool {
        self.0 == 0
    }

    /// Connection bitmask built from [`Side::bit`].
    pub fn mask(self) -> u8 {
        TILES[self.0 as usize].mask
    }

    pub fn connects(self, side: Side) -> bool {
        self.mask() & side.bit() != 0
    }
}

impl TryFrom<u8> for TileId {
    type Error = MosaicError;

    fn try_from(value: u8) -> Result<Self> {
        TileId::new(value)
    }
}

impl From<TileId> for u8 {
    fn from(t: TileId) -> u8 {
        t.0
    }
}

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

/// Static description of one tile.
#[derive(Debug, PartialEq, Eq)]
pub struct TileSpec {
    pub id: TileId,
    /// Each pair is stored with its sides in `Side` order.
    pub pairings: &'static [(Side, Side)],
    pub over_axis: Option<OverAxis>,
    mask: u8,
}

impl TileSpec {
    pub fn connections(&self) -> impl Iterator<Item = Side> + '_ {
        Side::ALL.into_iter().filter(move |s| self.mask & s.bit() != 0)
    }

    pub fn is_crossing(&self) -> bool {
        self.over_axis.is_some()
    }

    pub fn partner(&self, entry: Side) -> Option<Side> {
        self.pairings.iter().find_map(|&(a, b)| {
            if a == entry {
                Some(b)
            } else if b == entry {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Index into `pairings` of the local strand using `side`.
    pub fn pairing_index(&self, side: Side) -> Option<usize> {
        self.pairings.iter().position(|&(a, b)| a == side || b == side)
    }

    /// Whether a strand entering through `entry` is the under-strand.
    pub fn is_under_entry(&self, entry: Side) -> bool {
        match self.over_axis {
            Some(OverAxis::Vertical) => !entry.is_vertical(),
            Some(OverAxis::Horizontal) => entry.is_vertical(),
            None => false,
        }
    }
}

const fn mask_of(pairings: &[(Side, Side)]) -> u8 {
    let mut m = 0;
    let mut i = 0;
    while i < pairings.len() {
        m |= pairings[i].0.bit() | pairings[i].1.bit();
        i += 1;
    }
    m
}

macro_rules! tile {
    ($id:expr, [$(($a:ident, $b:ident)),*], $over:expr) => {{
        const P: &[(Side, Side)] = &[$((Side::$a, Side::$b)),*];
        TileSpec { id: TileId($id), pairings: P, over_axis: $over, mask: mask_of(P) }
    }};
}

static TILES: [TileSpec; 11] = [
    tile!(0, [], None),
    tile!(1, [(Bottom, Left)], None),
    tile!(2, [(Right, Bottom)], None),
    tile!(3, [(Top, Right)], None),
    tile!(4, [(Top, Left)], None),
    tile!(5, [(Right, Left)], None),
    tile!(6, [(Top, Bottom)], None),
    tile!(7, [(Top, Right), (Bottom, Left)], None),
    tile!(8, [(Top, Left), (Right, Bottom)], None),
    tile!(9, [(Top, Bottom), (Right, Left)], Some(OverAxis::Horizontal)),
    tile!(10, [(Top, Bottom), (Right, Left)], Some(OverAxis::Vertical)),
];

pub fn tile_spec(id: TileId) -> &'static TileSpec {
    &TILES[id.0 as usize]
}

/// Follow the local strand entering `id` through `entry` and return the exit side.
pub fn traverse_tile(id: TileId, entry: Side) -> Result<Side> {
    tile_spec(id).partner(entry).ok_or(MosaicError::NoConnection { tile: id.0, side: entry })
}

/// Mirror image across a vertical axis.
pub fn reflect_h(id: TileId) -> TileId {
    const MAP: [u8; 11] = [0, 2, 1, 4, 3, 5, 6, 8, 7, 9, 10];
    TileId(MAP[id.0 as usize])
}

/// `(A-smoothing, B-smoothing)` replacement tiles of a crossing.
///
/// The A-regions of a crossing are swept by turning the over-strand
/// counterclockwise. With a vertical over-strand these are the upper-left and
/// lower-right corners, which the A-smoothing joins, leaving `T7`.
pub fn smoothing_tiles(id: TileId) -> Result<(TileId, TileId)> {
    match tile_spec(id).over_axis {
        Some(OverAxis::Vertical) => Ok((TileId::T7, TileId::T8)),
        Some(OverAxis::Horizontal) => Ok((TileId::T8, TileId::T7)),
        None => Err(MosaicError::NotACrossingTile(id.0)),
    }
}
