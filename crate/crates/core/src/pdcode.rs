//! Planar diagram codes extracted from mosaics.
//!
//! Components are walked in canonical order with one global arc counter.
//! Within a component the label advances each time a crossing is left, and
//! the arc running into the component's first crossing visit is shared with
//! the arc leaving its last one. At every crossing the four incident labels
//! are listed counterclockwise starting from the incoming under-strand.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{MosaicError, Result};
use crate::mosaic::{Mosaic, Position};
use crate::tiles::Side;
use crate::traversal::strands;

pub type ArcLabel = u32;
pub type CrossingTuple = [ArcLabel; 4];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    /// One tuple per crossing, in row-major crossing order.
    #[serde(rename = "pd")]
    pub tuples: Vec<CrossingTuple>,
    /// Canonical indices of components that carry no crossing.
    #[serde(rename = "skipped_components")]
    pub skipped: Vec<usize>,
}

impl PdCode {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("PD code serializes")
    }
}

#[derive(Clone, Copy, Debug)]
struct Visit {
    entry: Side,
    exit: Side,
    incoming: ArcLabel,
    outgoing: ArcLabel,
}

pub fn pd_code(m: &Mosaic) -> Result<PdCode> {
    let traces = strands(m)?;
    let crossings = m.find_crossings();
    let index: HashMap<Position, usize> = crossings.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut visits: Vec<Vec<Visit>> = vec![Vec::with_capacity(2); crossings.len()];
    let mut skipped = Vec::new();
    let mut next_label: ArcLabel = 1;

    for (ci, trace) in traces.iter().enumerate() {
        let steps = trace.steps();
        let on_crossings: Vec<usize> = (0..steps.len()).filter(|&k| m.get(steps[k].position).is_crossing()).collect();
        if on_crossings.is_empty() {
            skipped.push(ci);
            continue;
        }
        let k = on_crossings.len() as ArcLabel;
        for (j, &si) in on_crossings.iter().enumerate() {
            let step = steps[si];
            let j = j as ArcLabel;
            visits[index[&step.position]].push(Visit {
                entry: step.entry_side(),
                exit: step.motion.exit_side(),
                incoming: next_label + j,
                outgoing: next_label + (j + 1) % k,
            });
        }
        next_label += k;
    }

    let tuples = crossings
        .iter()
        .zip(&visits)
        .map(|(&p, vs)| {
            let spec = m.get(p).spec();
            let mut label_at = [0; 4];
            for v in vs {
                label_at[v.entry.index()] = v.incoming;
                label_at[v.exit.index()] = v.outgoing;
            }
            let under = vs.iter().find(|v| spec.is_under_entry(v.entry)).expect("crossing has an under-strand visit");
            let start = Side::COUNTERCLOCKWISE.iter().position(|&s| s == under.entry).unwrap();
            std::array::from_fn(|i| label_at[Side::COUNTERCLOCKWISE[(start + i) % 4].index()])
        })
        .collect();

    Ok(PdCode { tuples, skipped })
}

/// Like [`pd_code`] but fails when a crossing-free component would be dropped.
pub fn pd_code_strict(m: &Mosaic) -> Result<PdCode> {
    let code = pd_code(m)?;
    if code.skipped.is_empty() {
        Ok(code)
    } else {
        Err(MosaicError::SkippedComponents(code.skipped.len()))
    }
}

/// Every label `1..=2c` occurs exactly twice, where `c` is the number of tuples.
pub fn validate_pd_code(code: &PdCode) -> bool {
    let max = 2 * code.tuples.len();
    let mut seen = vec![0u8; max + 1];
    for &label in code.tuples.iter().flatten() {
        let l = label as usize;
        if l == 0 || l > max {
            return false;
        }
        seen[l] += 1;
    }
    seen[1..].iter().all(|&c| c == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mosaic::tests::{five_two, HOPF_LIKE};

    #[test]
    fn five_two_code_is_valid() {
        let code = pd_code(&five_two()).unwrap();
        assert_eq!(code.tuples.len(), 5);
        assert!(code.skipped.is_empty());
        assert!(validate_pd_code(&code));
        assert!(code.tuples.iter().flatten().all(|&l| (1..=10).contains(&l)));
    }

    #[test]
    fn under_strand_occupies_positions_zero_and_two() {
        // The under-strand passes straight through, so its labels sit opposite each other and are consecutive.
        let code = pd_code(&five_two()).unwrap();
        for t in &code.tuples {
            let (a, c) = (t[0], t[2]);
            assert!(c == a + 1 || c <= a, "{t:?}");
        }
    }

    #[test]
    fn circle_is_skipped() {
        let code = pd_code(&Mosaic::new(&[[2, 1], [3, 4]]).unwrap()).unwrap();
        assert!(code.tuples.is_empty());
        assert_eq!(code.skipped, vec![0]);
        assert!(matches!(
            pd_code_strict(&Mosaic::new(&[[2, 1], [3, 4]]).unwrap()),
            Err(MosaicError::SkippedComponents(1))
        ));
    }

    #[test]
    fn link_code() {
        let code = pd_code(&Mosaic::new(&HOPF_LIKE).unwrap()).unwrap();
        assert_eq!(code.tuples.len(), 4);
        assert!(code.skipped.is_empty());
        assert!(validate_pd_code(&code));
    }

    #[test]
    fn not_suitably_connected() {
        assert!(matches!(pd_code(&Mosaic::new(&[[10]]).unwrap()), Err(MosaicError::NotSuitablyConnected)));
    }

    #[test]
    fn validation() {
        let listed = PdCode {
            tuples: vec![[9, 4, 10, 5], [3, 10, 4, 1], [5, 8, 6, 9], [1, 6, 2, 7], [7, 2, 8, 3]],
            skipped: vec![],
        };
        assert!(validate_pd_code(&listed));
        assert!(!validate_pd_code(&PdCode { tuples: vec![[1, 2, 3, 4]], skipped: vec![] }));
        assert!(validate_pd_code(&PdCode::default()));
        assert!(!validate_pd_code(&PdCode { tuples: vec![[0, 0, 1, 1]], skipped: vec![] }));
    }

    #[test]
    fn json_shape() {
        let code = PdCode { tuples: vec![[1, 2, 2, 1]], skipped: vec![3] };
        assert_eq!(code.to_json(), r#"{"pd":[[1,2,2,1]],"skipped_components":[3]}"#);
    }
}
