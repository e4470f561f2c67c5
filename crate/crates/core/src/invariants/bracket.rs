//! State-sum evaluation of the Kauffman bracket.
//!
//! Every crossing is replaced by its A- or B-smoothing tile and the
//! resulting loops are counted. Loops are counted on a compressed model of
//! the mosaic: arcs between crossing connection points are merged once up
//! front, so each state only unions the two smoothing pairs per crossing.

use super::laurent::{LaurentPoly, Variable};
use super::{loop_value, BracketOptions};
use crate::error::{MosaicError, Result};
use crate::mosaic::Mosaic;
use crate::par::{map_reduce, Execution};
use crate::tiles::{smoothing_tiles, Side};
use crate::traversal::number_of_components;

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n as u32).collect() }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    /// Returns whether two classes were merged.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

/// Arcs between crossings, reduced to a small union-find instance per state.
struct LoopModel {
    /// Loops that never touch a crossing.
    free_loops: usize,
    /// Number of arc classes touching crossings.
    arcs: usize,
    /// Per crossing: arc pairs joined by the A- and B-smoothing.
    smoothings: Vec<[[(u32, u32); 2]; 2]>,
}

impl LoopModel {
    fn new(m: &Mosaic) -> Self {
        let n = m.dim();
        let node = |r: usize, c: usize, s: Side| ((r * n + c) * 4 + s.index()) as u32;
        let mut dsu = Dsu::new(4 * n * n);
        let mut used = vec![false; 4 * n * n];
        for p in m.positions() {
            let t = m.get(p);
            for s in Side::ALL.into_iter().filter(|&s| t.connects(s)) {
                used[node(p.row, p.col, s) as usize] = true;
                if let Some(q) = m.neighbor(p, s) {
                    dsu.union(node(p.row, p.col, s), node(q.row, q.col, s.opposite()));
                }
            }
            if !t.is_crossing() {
                for &(a, b) in t.spec().pairings {
                    dsu.union(node(p.row, p.col, a), node(p.row, p.col, b));
                }
            }
        }

        let mut class_of = std::collections::HashMap::new();
        let mut smoothings = Vec::new();
        for p in m.find_crossings() {
            let mut ends = [0u32; 4];
            for s in Side::ALL {
                let root = dsu.find(node(p.row, p.col, s));
                let next = class_of.len() as u32;
                ends[s.index()] = *class_of.entry(root).or_insert(next);
            }
            let (a_tile, b_tile) = smoothing_tiles(m.get(p)).expect("crossing tile");
            let pairs = |t: crate::tiles::TileId| -> [(u32, u32); 2] {
                let ps = t.spec().pairings;
                [(ends[ps[0].0.index()], ends[ps[0].1.index()]), (ends[ps[1].0.index()], ends[ps[1].1.index()])]
            };
            smoothings.push([pairs(a_tile), pairs(b_tile)]);
        }

        let mut roots: Vec<u32> = (0..4 * n * n).filter(|&i| used[i]).map(|i| dsu.find(i as u32)).collect();
        roots.sort_unstable();
        roots.dedup();
        let free_loops = roots.iter().filter(|r| !class_of.contains_key(r)).count();
        LoopModel { free_loops, arcs: class_of.len(), smoothings }
    }
}

fn check(m: &Mosaic, cap: usize) -> Result<usize> {
    if !m.is_suitably_connected() {
        return Err(MosaicError::NotSuitablyConnected);
    }
    let c = m.number_of_crossings();
    if c > cap {
        return Err(MosaicError::TooManyCrossings { count: c, cap });
    }
    Ok(c)
}

/// `sum_{b, L} count[b][L] * A^(c - 2b) * delta^(L - 1)`.
fn assemble(c: usize, stride: usize, counts: &[u64]) -> LaurentPoly {
    let delta = loop_value();
    let mut delta_pow = vec![LaurentPoly::one(Variable::A)];
    let mut out = LaurentPoly::zero(Variable::A);
    for b in 0..=c {
        for loops in 1..stride {
            let k = counts[b * stride + loops];
            if k == 0 {
                continue;
            }
            while delta_pow.len() < loops {
                let next = delta_pow.last().unwrap() * &delta;
                delta_pow.push(next);
            }
            let term = delta_pow[loops - 1].shift(c as i64 - 2 * b as i64);
            out = &out + &(&term * &LaurentPoly::monomial(Variable::A, k as i128, 0));
        }
    }
    out
}

const CHUNK_BITS: u32 = 12;

fn state_sum(m: &Mosaic, order: &[usize], exec: Execution) -> LaurentPoly {
    let c = order.len();
    let model = LoopModel::new(m);
    if c == 0 {
        return match model.free_loops {
            0 => LaurentPoly::one(Variable::A),
            l => loop_value().pow(l as u32 - 1),
        };
    }
    let stride = model.free_loops + model.arcs + 1;
    let states: u64 = 1 << c;
    let chunk_bits = CHUNK_BITS.min(c as u32);
    let chunks = (states >> chunk_bits) as usize;
    let smoothings: Vec<[[(u32, u32); 2]; 2]> = order.iter().map(|&i| model.smoothings[i]).collect();

    let table = map_reduce(
        exec,
        chunks,
        |chunk| {
            let mut counts = vec![0u64; (c + 1) * stride];
            let mut dsu = Dsu::new(model.arcs);
            let base = (chunk as u64) << chunk_bits;
            for state in base..base + (1 << chunk_bits) {
                dsu.reset();
                let mut components = model.arcs;
                for (i, choice) in smoothings.iter().enumerate() {
                    let bit = ((state >> i) & 1) as usize;
                    for &(x, y) in &choice[bit] {
                        if dsu.union(x, y) {
                            components -= 1;
                        }
                    }
                }
                let b = state.count_ones() as usize;
                counts[b * stride + model.free_loops + components] += 1;
            }
            counts
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
    .expect("at least one chunk");
    assemble(c, stride, &table)
}

pub fn kauffman_bracket(m: &Mosaic) -> Result<LaurentPoly> {
    kauffman_bracket_with(m, &BracketOptions::default())
}

pub fn kauffman_bracket_with(m: &Mosaic, opts: &BracketOptions) -> Result<LaurentPoly> {
    let c = check(m, opts.crossing_cap)?;
    let order: Vec<usize> = (0..c).collect();
    Ok(state_sum(m, &order, opts.execution))
}

/// State sum with the crossings' state bits assigned in the given order.
///
/// `order` must be a permutation of `0..number_of_crossings`; the result does not depend on it.
pub fn kauffman_bracket_ordered(m: &Mosaic, order: &[usize], opts: &BracketOptions) -> Result<LaurentPoly> {
    let c = check(m, opts.crossing_cap)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..c).collect::<Vec<_>>() {
        return Err(MosaicError::InvalidSpec(format!("{order:?} is not a permutation of 0..{c}")));
    }
    Ok(state_sum(m, order, opts.execution))
}

/// Reference state sum: substitute smoothing tiles into the mosaic and count loops by tracing.
pub fn kauffman_bracket_by_substitution(m: &Mosaic, cap: usize) -> Result<LaurentPoly> {
    let c = check(m, cap)?;
    let crossings = m.find_crossings();
    let delta = loop_value();
    let mut out = LaurentPoly::zero(Variable::A);
    for state in 0u64..1 << c {
        let mut smoothed = m.clone();
        let mut b = 0;
        for (i, &p) in crossings.iter().enumerate() {
            let (a_tile, b_tile) = smoothing_tiles(m.get(p))?;
            let pick_b = (state >> i) & 1 == 1;
            b += usize::from(pick_b);
            smoothed = smoothed.with_tile(p, if pick_b { b_tile } else { a_tile });
        }
        let loops = number_of_components(&smoothed)?;
        let term = if loops == 0 { LaurentPoly::one(Variable::A) } else { delta.pow(loops as u32 - 1) };
        out = &out + &term.shift(c as i64 - 2 * b as i64);
    }
    Ok(out)
}
