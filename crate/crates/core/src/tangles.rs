//! Rational tangle mosaics.

use std::fmt;
use std::str::FromStr;

use crate::error::{MosaicError, Result};
use crate::mosaic::Mosaic;
use crate::tiles::TileId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangleValue {
    Integer(i64),
    Infinity,
}

impl FromStr for TangleValue {
    type Err = MosaicError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(TangleValue::Infinity),
            other => other.parse().map(TangleValue::Integer).map_err(|_| MosaicError::Parse {
                line: 1,
                column: 1,
                message: format!("expected an integer or \"inf\", got {s:?}"),
            }),
        }
    }
}

impl fmt::Display for TangleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleValue::Integer(k) => write!(f, "{k}"),
            TangleValue::Infinity => f.write_str("inf"),
        }
    }
}

fn crossing_for(k: i64) -> TileId {
    if k > 0 {
        TileId::T10
    } else {
        TileId::T9
    }
}

/// Twist region of `|k|` crossings on the diagonal, `T1` above and `T3` below.
fn jordan_block(grid: &mut [TileId], n: usize, row0: usize, col0: usize, k: i64) {
    let m = k.unsigned_abs() as usize;
    let crossing = crossing_for(k);
    for i in 0..m {
        grid[(row0 + i) * n + col0 + i] = crossing;
        if i + 1 < m {
            grid[(row0 + i) * n + col0 + i + 1] = TileId::T1;
            grid[(row0 + i + 1) * n + col0 + i] = TileId::T3;
        }
    }
}

pub fn rational_tangle(v: TangleValue) -> Mosaic {
    match v {
        TangleValue::Infinity => Mosaic::from_tiles(1, vec![TileId::T7]).unwrap(),
        TangleValue::Integer(0) => Mosaic::from_tiles(1, vec![TileId::T8]).unwrap(),
        TangleValue::Integer(k) => {
            let m = k.unsigned_abs() as usize;
            let mut grid = vec![TileId::BLANK; m * m];
            jordan_block(&mut grid, m, 0, 0, k);
            Mosaic::from_tiles(m, grid).unwrap()
        }
    }
}

/// Join an `a`-twist and a `b`-twist region into one `(|a| + |b|)`-mosaic.
///
/// The `b` region runs along the anti-diagonal of the top-right corner, the
/// `a` region is a Jordan block in the bottom-left corner, and a row of
/// horizontal connectors and a column of vertical connectors tie them
/// together.
pub fn tangle_join(a: i64, b: i64) -> Result<Mosaic> {
    if a == 0 || b == 0 {
        return Err(MosaicError::ZeroTerm);
    }
    let (ma, mb) = (a.unsigned_abs() as usize, b.unsigned_abs() as usize);
    let n = ma + mb;
    let mut g = vec![TileId::BLANK; n * n];
    let b_crossing = crossing_for(b);
    for r in 0..mb {
        let c = n - 1 - r;
        g[r * n + c] = b_crossing;
        if r + 1 < mb {
            g[r * n + c - 1] = TileId::T2;
            g[(r + 1) * n + c] = TileId::T4;
        }
    }
    // connector row feeding the last b crossing at column |a|
    let r = mb - 1;
    g[r * n] = TileId::T2;
    for c in 1..ma {
        g[r * n + c] = TileId::HORIZONTAL;
    }
    jordan_block(&mut g, n, mb, 0, a);
    // connector column below the last b crossing
    for r in mb..n - 1 {
        g[r * n + ma] = TileId::VERTICAL;
    }
    g[(n - 1) * n + ma] = TileId::T4;
    Mosaic::from_tiles(n, g)
}
