//! Square tile matrices and their local validity rules.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MosaicError, Result};
use crate::tiles::{reflect_h, Direction, Side, TileId};

/// 0-based `(row, col)` cell index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub const fn new(row: usize, col: usize) -> Self {
        Position { row, col }
    }
}

impl From<(usize, usize)> for Position {
    fn from((row, col): (usize, usize)) -> Self {
        Position { row, col }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// An `n x n` matrix of standard tiles, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mosaic {
    n: usize,
    tiles: Vec<TileId>,
}

impl Mosaic {
    /// Build a mosaic from rows of integer tile labels.
    pub fn new<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(MosaicError::NotSquare { row: 0, len: 0, expected: 1 });
        }
        let mut tiles = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(MosaicError::NotSquare { row, len: r.len(), expected: n });
            }
            for (col, &value) in r.iter().enumerate() {
                let t = u8::try_from(value).ok().and_then(|v| TileId::new(v).ok()).ok_or(MosaicError::BadTileId {
                    value,
                    row,
                    col,
                })?;
                tiles.push(t);
            }
        }
        Ok(Mosaic { n, tiles })
    }

    /// Build from a row-major tile vector of length `n * n`.
    pub fn from_tiles(n: usize, tiles: Vec<TileId>) -> Result<Self> {
        if n == 0 || tiles.len() != n * n {
            return Err(MosaicError::NotSquare { row: 0, len: tiles.len(), expected: n * n });
        }
        Ok(Mosaic { n, tiles })
    }

    pub fn blank(n: usize) -> Self {
        assert!(n >= 1, "mosaic dimension must be at least 1");
        Mosaic { n, tiles: vec![TileId::BLANK; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn tiles(&self) -> &[TileId] {
        &self.tiles
    }

    pub fn get(&self, p: Position) -> TileId {
        self.tiles[p.row * self.n + p.col]
    }

    pub fn try_get(&self, p: Position) -> Option<TileId> {
        (p.row < self.n && p.col < self.n).then(|| self.get(p))
    }

    /// Copy with the tile at `p` replaced.
    pub fn with_tile(&self, p: Position, t: TileId) -> Mosaic {
        let mut m = self.clone();
        m.tiles[p.row * self.n + p.col] = t;
        m
    }

    pub fn rows(&self) -> impl Iterator<Item = &[TileId]> {
        self.tiles.chunks(self.n)
    }

    /// Tile labels as nested integer rows.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows().map(|r| r.iter().map(|t| t.value()).collect()).collect()
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        let n = self.n;
        (0..n * n).map(move |i| Position::new(i / n, i % n))
    }

    /// The cell one step from `p` in direction `d`, if inside the mosaic.
    pub fn step(&self, p: Position, d: Direction) -> Option<Position> {
        let (dr, dc) = d.delta();
        let row = p.row.checked_add_signed(dr)?;
        let col = p.col.checked_add_signed(dc)?;
        (row < self.n && col < self.n).then_some(Position { row, col })
    }

    pub fn neighbor(&self, p: Position, side: Side) -> Option<Position> {
        self.step(p, side.outward())
    }

    pub fn is_suitably_connected(&self) -> bool {
        self.positions().all(|p| {
            let t = self.get(p);
            Side::ALL
                .into_iter()
                .filter(|&s| t.connects(s))
                .all(|s| self.neighbor(p, s).is_some_and(|q| self.get(q).connects(s.opposite())))
        })
    }

    /// Connection points that face the mosaic boundary.
    pub fn boundary_endpoints(&self) -> Vec<(Position, Side)> {
        let mut out = Vec::new();
        for p in self.positions() {
            let t = self.get(p);
            for s in Side::ALL {
                if t.connects(s) && self.neighbor(p, s).is_none() {
                    out.push((p, s));
                }
            }
        }
        out
    }

    /// Positions of crossing tiles in row-major order.
    pub fn find_crossings(&self) -> Vec<Position> {
        self.positions().filter(|&p| self.get(p).is_crossing()).collect()
    }

    pub fn number_of_crossings(&self) -> usize {
        self.tiles.iter().filter(|t| t.is_crossing()).count()
    }

    /// Reflection across a vertical axis.
    pub fn flip(&self) -> Mosaic {
        let tiles = self.rows().flat_map(|r| r.iter().rev().map(|&t| reflect_h(t))).collect();
        Mosaic { n: self.n, tiles }
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|t| format!("{:2}", t.value())).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A row-major prefix of placed tiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMosaic {
    n: usize,
    placed: Vec<TileId>,
}

impl PartialMosaic {
    pub fn new(n: usize) -> Self {
        PartialMosaic { n, placed: Vec::with_capacity(n * n) }
    }

    pub fn from_prefix(n: usize, placed: Vec<TileId>) -> Result<Self> {
        if placed.len() > n * n {
            return Err(MosaicError::NotSquare { row: 0, len: placed.len(), expected: n * n });
        }
        Ok(PartialMosaic { n, placed })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn placed(&self) -> &[TileId] {
        &self.placed
    }

    pub fn is_complete(&self) -> bool {
        self.placed.len() == self.n * self.n
    }

    /// The next unfilled row-major cell, if any.
    pub fn frontier(&self) -> Option<Position> {
        (!self.is_complete()).then(|| Position::new(self.placed.len() / self.n, self.placed.len() % self.n))
    }

    pub fn push(&mut self, t: TileId) {
        assert!(!self.is_complete(), "partial mosaic is already complete");
        self.placed.push(t);
    }

    pub fn pop(&mut self) -> Option<TileId> {
        self.placed.pop()
    }

    pub fn into_mosaic(self) -> Result<Mosaic> {
        Mosaic::from_tiles(self.n, self.placed)
    }

    /// Tiles that may be placed at the frontier `(i, j)`.
    pub fn potential_tiles(&self, i: usize, j: usize) -> Result<Vec<TileId>> {
        let expected = self.placed.len();
        if i >= self.n || j >= self.n || i * self.n + j != expected {
            return Err(MosaicError::OutOfOrder { row: i, col: j, expected });
        }
        Ok(self.frontier_candidates().to_vec())
    }

    /// Candidate list at the current frontier, ascending by tile id.
    pub(crate) fn frontier_candidates(&self) -> &'static [TileId] {
        let k = self.placed.len();
        let (i, j) = (k / self.n, k % self.n);
        let need_top = i > 0 && self.placed[k - self.n].connects(Side::Bottom);
        let need_left = j > 0 && self.placed[k - 1].connects(Side::Right);
        candidates(need_top, need_left, i + 1 == self.n, j + 1 == self.n)
    }
}

/// Candidate table keyed by the frontier context:
/// bit 0 = Top required, bit 1 = Left required, bit 2 = last row, bit 3 = last column.
static CANDIDATES: std::sync::OnceLock<[Vec<TileId>; 16]> = std::sync::OnceLock::new();

pub(crate) fn candidates(need_top: bool, need_left: bool, last_row: bool, last_col: bool) -> &'static [TileId] {
    let table = CANDIDATES.get_or_init(|| {
        std::array::from_fn(|key| {
            let need_top = key & 1 != 0;
            let need_left = key & 2 != 0;
            let last_row = key & 4 != 0;
            let last_col = key & 8 != 0;
            TileId::all()
                .filter(|t| {
                    t.connects(Side::Top) == need_top
                        && t.connects(Side::Left) == need_left
                        && !(last_row && t.connects(Side::Bottom))
                        && !(last_col && t.connects(Side::Right))
                })
                .collect()
        })
    });
    let key = need_top as usize | (need_left as usize) << 1 | (last_row as usize) << 2 | (last_col as usize) << 3;
    &table[key]
}
