//! Constrained random mosaics and exhaustive enumeration.
//!
//! Random generation fills cells in row-major order, drawing each tile
//! uniformly from the tiles allowed by the neighbours above and to the
//! left and by the boundary. A dead end abandons the attempt. Attempt `i`
//! uses its own ChaCha stream derived from `(seed, i)`, so the returned
//! mosaic is the same whether attempts run in parallel or one by one.

use std::sync::atomic::{AtomicBool, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{MosaicError, Result};
use crate::invariants::{is_unknot_with, BracketOptions, Oracle, UnknotMethod};
use crate::mosaic::{Mosaic, PartialMosaic};
use crate::par::{find_map_first, map_reduce, Execution};
use crate::tiles::TileId;
use crate::traversal::number_of_components;

pub const DEFAULT_MAX_ATTEMPTS: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationSpec {
    pub n: usize,
    pub suitably_connected: bool,
    pub number_of_crossings: Option<usize>,
    pub number_of_components: Option<usize>,
    pub unknot: bool,
    pub seed: u64,
    pub max_attempts: usize,
    pub oracle: Option<Oracle>,
    pub bracket: BracketOptions,
}

impl GenerationSpec {
    pub fn new(n: usize) -> Self {
        GenerationSpec {
            n,
            suitably_connected: true,
            number_of_crossings: None,
            number_of_components: None,
            unknot: false,
            seed: 0,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
            oracle: None,
            bracket: BracketOptions::default(),
        }
    }

    pub fn crossings(mut self, k: usize) -> Self {
        self.number_of_crossings = Some(k);
        self
    }

    pub fn components(mut self, k: usize) -> Self {
        self.number_of_components = Some(k);
        self
    }

    pub fn unknot(mut self, yes: bool) -> Self {
        self.unknot = yes;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn any_tiles(mut self) -> Self {
        self.suitably_connected = false;
        self
    }

    pub fn max_attempts(mut self, attempts: usize) -> Self {
        self.max_attempts = attempts;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(MosaicError::InvalidSpec(m.to_string()));
        if self.n == 0 {
            return bad("dimension must be at least 1");
        }
        if self.max_attempts == 0 {
            return bad("max_attempts must be positive");
        }
        if self.unknot && self.number_of_components.is_some_and(|c| c != 1) {
            return bad("the unknot constraint requires exactly one component");
        }
        let constrained = self.number_of_crossings.is_some() || self.number_of_components.is_some() || self.unknot;
        if !self.suitably_connected && constrained {
            return bad("constraints require suitably connected generation");
        }
        Ok(())
    }

    fn has_constraints(&self) -> bool {
        self.number_of_crossings.is_some() || self.number_of_components.is_some() || self.unknot
    }
}

/// A generated mosaic with the attempt that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub mosaic: Mosaic,
    /// 1-based index of the accepted attempt.
    pub attempts: usize,
    /// How the unknot constraint was decided, when requested.
    pub unknot_method: Option<UnknotMethod>,
}

fn attempt_rng(seed: u64, attempt: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt as u64);
    rng
}

/// One greedy row-major fill; `None` on a dead end.
fn greedy_fill(n: usize, rng: &mut impl Rng) -> Option<Mosaic> {
    let mut p = PartialMosaic::new(n);
    while !p.is_complete() {
        let options = p.frontier_candidates();
        if options.is_empty() {
            return None;
        }
        p.push(options[rng.gen_range(0..options.len())]);
    }
    Some(p.into_mosaic().expect("complete prefix"))
}

fn any_tiles(n: usize, rng: &mut impl Rng) -> Mosaic {
    let tiles = (0..n * n).map(|_| TileId::new(rng.gen_range(0..TileId::COUNT as u8)).unwrap()).collect();
    Mosaic::from_tiles(n, tiles).unwrap()
}

/// `Some(Ok(..))` accepted, `Some(Err(..))` fatal, `None` rejected.
fn run_attempt(spec: &GenerationSpec, attempt: usize) -> Option<Result<Generated>> {
    let mut rng = attempt_rng(spec.seed, attempt);
    let m = greedy_fill(spec.n, &mut rng)?;
    if spec.number_of_crossings.is_some_and(|k| m.number_of_crossings() != k) {
        return None;
    }
    if spec.number_of_components.is_some() || spec.unknot {
        let comps = number_of_components(&m).expect("greedy fill is suitably connected");
        if spec.number_of_components.is_some_and(|k| comps != k) || (spec.unknot && comps != 1) {
            return None;
        }
    }
    let mut unknot_method = None;
    if spec.unknot {
        match is_unknot_with(&m, spec.oracle.as_ref(), &spec.bracket) {
            Ok(v) if v.result => unknot_method = Some(v.method),
            Ok(_) | Err(MosaicError::TooManyCrossings { .. }) => return None,
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(Generated { mosaic: m, attempts: attempt + 1, unknot_method }))
}

pub fn generate(spec: &GenerationSpec) -> Result<Generated> {
    spec.validate()?;
    if !spec.suitably_connected {
        let mut rng = attempt_rng(spec.seed, 0);
        return Ok(Generated { mosaic: any_tiles(spec.n, &mut rng), attempts: 1, unknot_method: None });
    }
    let exec = if spec.has_constraints() { spec.bracket.execution } else { Execution::Sequential };
    find_map_first(exec, spec.max_attempts, |a| run_attempt(spec, a))
        .unwrap_or(Err(MosaicError::AttemptsExhausted(spec.max_attempts)))
}

pub fn random_mosaic(spec: &GenerationSpec) -> Result<Mosaic> {
    generate(spec).map(|g| g.mosaic)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerationOptions<'a> {
    pub execution: Execution,
    /// Checked between rows; once set, counting stops and returns `None`.
    pub cancel: Option<&'a AtomicBool>,
}

fn cancelled(cancel: Option<&AtomicBool>) -> bool {
    cancel.is_some_and(|c| c.load(Ordering::Relaxed))
}

fn count_completions(p: &mut PartialMosaic, cancel: Option<&AtomicBool>) -> Option<u64> {
    if p.is_complete() {
        return Some(1);
    }
    if p.placed().len().is_multiple_of(p.dim()) && cancelled(cancel) {
        return None;
    }
    let mut total = 0;
    for &t in p.frontier_candidates() {
        p.push(t);
        let sub = count_completions(p, cancel);
        p.pop();
        total += sub?;
    }
    Some(total)
}

/// All valid placements of the first `depth` cells, in lexicographic order.
fn prefixes(n: usize, depth: usize) -> Vec<Vec<TileId>> {
    let mut out = Vec::new();
    let mut stack = PartialMosaic::new(n);
    fn go(p: &mut PartialMosaic, depth: usize, out: &mut Vec<Vec<TileId>>) {
        if p.placed().len() == depth {
            out.push(p.placed().to_vec());
            return;
        }
        for &t in p.frontier_candidates() {
            p.push(t);
            go(p, depth, out);
            p.pop();
        }
    }
    go(&mut stack, depth, &mut out);
    out
}

/// Number of suitably connected `n`-mosaics.
pub fn count_mosaics(n: usize) -> u64 {
    count_mosaics_with(n, &EnumerationOptions::default()).expect("no cancellation flag")
}

pub fn count_mosaics_with(n: usize, opts: &EnumerationOptions<'_>) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    // split the search tree on first-row prefixes
    let roots = prefixes(n, n);
    let cancel = opts.cancel;
    map_reduce(
        opts.execution,
        roots.len(),
        |i| {
            let mut p = PartialMosaic::from_prefix(n, roots[i].clone()).expect("prefix fits");
            count_completions(&mut p, cancel)
        },
        |a, b| Some(a? + b?),
    )
    .unwrap_or(Some(0))
}

/// Visit suitably connected `n`-mosaics in lexicographic row-major order, stopping after `limit`.
pub fn iterate_mosaics<F: FnMut(&Mosaic)>(n: usize, mut visitor: F, limit: Option<u64>) -> u64 {
    fn go<F: FnMut(&Mosaic)>(p: &mut PartialMosaic, visitor: &mut F, seen: &mut u64, limit: u64) {
        if *seen >= limit {
            return;
        }
        if p.is_complete() {
            let m = Mosaic::from_tiles(p.dim(), p.placed().to_vec()).expect("complete");
            visitor(&m);
            *seen += 1;
            return;
        }
        for &t in p.frontier_candidates() {
            p.push(t);
            go(p, visitor, seen, limit);
            p.pop();
            if *seen >= limit {
                return;
            }
        }
    }
    if n == 0 {
        return 0;
    }
    let mut seen = 0;
    go(&mut PartialMosaic::new(n), &mut visitor, &mut seen, limit.unwrap_or(u64::MAX));
    seen
}

/// `count^(1 / n^2)`, the finite-size growth estimate.
pub fn growth_estimate(count: u64, n: usize) -> f64 {
    (count as f64).powf(1.0 / (n * n) as f64)
}
