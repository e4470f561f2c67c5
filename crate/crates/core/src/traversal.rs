//! Following strands through a mosaic.

use crate::error::{MosaicError, Result};
use crate::mosaic::{Mosaic, Position};
use crate::tiles::{traverse_tile, Direction, Side, TileId};

/// Arrival at `position` after moving in direction `motion`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub position: Position,
    pub motion: Direction,
}

impl Step {
    pub const fn new(position: Position, motion: Direction) -> Self {
        Step { position, motion }
    }

    pub fn entry_side(&self) -> Side {
        self.motion.entry_side()
    }
}

/// One strand segment inside one tile: index into that tile's pairings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalStrand {
    pub position: Position,
    pub pairing: usize,
}

/// A closed cyclic walk along one link component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTrace {
    steps: Vec<Step>,
}

impl ComponentTrace {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.steps.iter().map(|s| s.position)
    }

    /// The local strand each step passes along.
    pub fn local_strands(&self, m: &Mosaic) -> Vec<LocalStrand> {
        self.steps
            .iter()
            .map(|s| LocalStrand {
                position: s.position,
                pairing: m
                    .get(s.position)
                    .spec()
                    .pairing_index(s.entry_side())
                    .expect("trace step enters a connection"),
            })
            .collect()
    }

    /// The same component walked in the opposite direction.
    pub fn reversed(&self) -> ComponentTrace {
        let k = self.steps.len();
        let steps =
            (0..k).rev().map(|i| Step::new(self.steps[i].position, self.steps[(i + 1) % k].motion.reverse())).collect();
        ComponentTrace { steps }
    }
}

fn tile_at(m: &Mosaic, p: Position) -> Result<TileId> {
    m.try_get(p).ok_or(MosaicError::OutOfBounds(p))
}

/// Follow the local strand entered by moving `motion` into `p`; return the arrival in the next tile.
pub fn exit_path(m: &Mosaic, p: Position, motion: Direction) -> Result<Step> {
    let tile = tile_at(m, p)?;
    let entry = motion.entry_side();
    let exit = traverse_tile(tile, entry).map_err(|_| MosaicError::NoStrand { position: p, side: entry })?;
    let next = m.neighbor(p, exit).ok_or(MosaicError::BoundaryExit { position: p, side: exit })?;
    Ok(Step::new(next, exit.outward()))
}

/// Trace the whole component through the strand entered by moving `motion` into `p`.
pub fn strand_of(m: &Mosaic, p: Position, motion: Direction) -> Result<ComponentTrace> {
    let start = Step::new(p, motion);
    let entry = motion.entry_side();
    if !tile_at(m, p)?.connects(entry) {
        return Err(MosaicError::NoStrand { position: p, side: entry });
    }
    let mut steps = vec![start];
    let mut cur = start;
    loop {
        let next = exit_path(m, cur.position, cur.motion)?;
        if next == start {
            break;
        }
        let side = next.entry_side();
        if !m.get(next.position).connects(side) {
            return Err(MosaicError::NoStrand { position: next.position, side });
        }
        steps.push(next);
        cur = next;
    }
    Ok(ComponentTrace { steps })
}

/// All components in canonical order.
///
/// Each component starts at the row-major-first tile that still owns an
/// unvisited local strand, on its first unvisited pairing, heading out
/// through the later side of that pairing.
pub fn strands(m: &Mosaic) -> Result<Vec<ComponentTrace>> {
    if !m.is_suitably_connected() {
        return Err(MosaicError::NotSuitablyConnected);
    }
    let n = m.dim();
    let mut visited = vec![[false; 2]; n * n];
    let mut out = Vec::new();
    for p in m.positions() {
        let spec = m.get(p).spec();
        for (k, &(first, _later)) in spec.pairings.iter().enumerate() {
            if visited[p.row * n + p.col][k] {
                continue;
            }
            let trace = strand_of(m, p, first.outward().reverse())?;
            for ls in trace.local_strands(m) {
                visited[ls.position.row * n + ls.position.col][ls.pairing] = true;
            }
            out.push(trace);
        }
    }
    Ok(out)
}

pub fn number_of_components(m: &Mosaic) -> Result<usize> {
    strands(m).map(|s| s.len())
}

/// Total number of local strands over all tiles.
pub fn local_strand_count(m: &Mosaic) -> usize {
    m.tiles().iter().map(|t| t.spec().pairings.len()).sum()
}

fn walk_steps(m: &Mosaic, c: Position, motion: Direction) -> Result<Vec<Step>> {
    if !tile_at(m, c)?.is_crossing() {
        return Err(MosaicError::NotACrossing(c));
    }
    let exit = motion.exit_side();
    let first = m.neighbor(c, exit).ok_or(MosaicError::BoundaryExit { position: c, side: exit })?;
    let mut steps = vec![Step::new(c, motion)];
    let mut cur = Step::new(first, motion);
    loop {
        let side = cur.entry_side();
        if !m.get(cur.position).connects(side) {
            return Err(MosaicError::NoStrand { position: cur.position, side });
        }
        steps.push(cur);
        if m.get(cur.position).is_crossing() {
            return Ok(steps);
        }
        cur = exit_path(m, cur.position, cur.motion)?;
    }
}

/// Positions from crossing `c`, leaving in direction `motion`, up to and including the next crossing.
pub fn walk(m: &Mosaic, c: Position, motion: Direction) -> Result<Vec<Position>> {
    walk_steps(m, c, motion).map(|s| s.into_iter().map(|s| s.position).collect())
}

/// The crossing reached by [`walk`] and the direction of arrival there.
pub fn shift(m: &Mosaic, c: Position, motion: Direction) -> Result<(Position, Direction)> {
    let steps = walk_steps(m, c, motion)?;
    let last = steps.last().expect("walk has at least two steps");
    Ok((last.position, last.motion))
}

/// Replace each tile by a `3 x 3` block: the tile at the centre, straight connectors on its connected sides.
pub fn zoom(m: &Mosaic) -> Mosaic {
    let n = m.dim();
    let big = 3 * n;
    let mut tiles = vec![TileId::BLANK; big * big];
    for p in m.positions() {
        let t = m.get(p);
        let (r, c) = (3 * p.row + 1, 3 * p.col + 1);
        tiles[r * big + c] = t;
        if t.connects(Side::Left) {
            tiles[r * big + c - 1] = TileId::HORIZONTAL;
        }
        if t.connects(Side::Right) {
            tiles[r * big + c + 1] = TileId::HORIZONTAL;
        }
        if t.connects(Side::Top) {
            tiles[(r - 1) * big + c] = TileId::VERTICAL;
        }
        if t.connects(Side::Bottom) {
            tiles[(r + 1) * big + c] = TileId::VERTICAL;
        }
    }
    Mosaic::from_tiles(big, tiles).expect("zoomed mosaic is square")
}
