//! Kauffman bracket, writhe, Jones polynomial and unknot checks.

mod bracket;
pub mod laurent;
mod unknot;

pub use bracket::{
    kauffman_bracket, kauffman_bracket_by_substitution, kauffman_bracket_ordered, kauffman_bracket_with,
};
pub use laurent::{Coeff, LaurentPoly, Variable};
pub use unknot::{is_unknot, is_unknot_with, Oracle, UnknotMethod, UnknotVerdict};

use crate::error::Result;
use crate::mosaic::Mosaic;
use crate::par::Execution;
use crate::traversal::{number_of_components, strands};

/// Crossing-count limit applied unless overridden.
pub const DEFAULT_CROSSING_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketOptions {
    pub crossing_cap: usize,
    pub execution: Execution,
}

impl Default for BracketOptions {
    fn default() -> Self {
        BracketOptions { crossing_cap: DEFAULT_CROSSING_CAP, execution: Execution::default() }
    }
}

/// `delta = -A^2 - A^-2`, the value of an extra disjoint loop.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Variable::A, [(2, -1), (-2, -1)])
}

/// Crossing signs in row-major crossing order, with each component oriented by its canonical trace.
///
/// A crossing is positive when the under-strand passes from right to left
/// as seen travelling along the over-strand. Rows grow downward, so in grid
/// coordinates that is `over x under < 0`.
pub fn crossing_signs(m: &Mosaic) -> Result<Vec<i8>> {
    let crossings = m.find_crossings();
    // (over motion, under motion) as (d_col, d_row) with rows growing downward
    let mut motions: Vec<[Option<(isize, isize)>; 2]> = vec![[None; 2]; crossings.len()];
    for trace in strands(m)? {
        for step in trace.steps() {
            let t = m.get(step.position);
            if !t.is_crossing() {
                continue;
            }
            let idx = crossings.binary_search(&step.position).expect("crossing listed");
            let (dr, dc) = step.motion.delta();
            let slot = usize::from(t.spec().is_under_entry(step.entry_side()));
            motions[idx][slot] = Some((dc, dr));
        }
    }
    Ok(motions
        .into_iter()
        .map(|[over, under]| {
            let ((ox, oy), (ux, uy)) = (over.expect("over visit"), under.expect("under visit"));
            if ox * uy - oy * ux < 0 {
                1
            } else {
                -1
            }
        })
        .collect())
}

pub fn writhe(m: &Mosaic) -> Result<i64> {
    Ok(crossing_signs(m)?.into_iter().map(i64::from).sum())
}

/// Normalize a bracket into the Jones polynomial, `(-A)^(-3w) <D>` with `A = t^(-1/4)`.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = &bracket.shift(-3 * writhe) * &LaurentPoly::monomial(Variable::A, sign, 0);
    normalized.scale_exponents(-1).with_variable(Variable::TQuarter)
}

pub fn jones_polynomial(m: &Mosaic) -> Result<LaurentPoly> {
    jones_polynomial_with(m, &BracketOptions::default())
}

pub fn jones_polynomial_with(m: &Mosaic, opts: &BracketOptions) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket_with(m, opts)?;
    Ok(jones_from_bracket(&bracket, writhe(m)?))
}

/// Necessary condition for isotopy: equal component counts and Jones polynomials.
///
/// Distinct knots can share both invariants, so `true` is not a certificate.
pub fn possibly_isotopic(a: &Mosaic, b: &Mosaic) -> Result<bool> {
    possibly_isotopic_with(a, b, &BracketOptions::default())
}

pub fn possibly_isotopic_with(a: &Mosaic, b: &Mosaic, opts: &BracketOptions) -> Result<bool> {
    if number_of_components(a)? != number_of_components(b)? {
        return Ok(false);
    }
    Ok(jones_polynomial_with(a, opts)? == jones_polynomial_with(b, opts)?)
}
