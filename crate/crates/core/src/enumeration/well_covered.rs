use serde::{Deserialize, Serialize};

use super::maximal::MaximalSets;
use super::{co_components, components};
use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellCoveredReport {
    pub is_well_covered: bool,
    /// Independence number.
    pub alpha: usize,
    /// Two maximal independent sets of different sizes (smaller first);
    /// present exactly when the graph is not well-covered.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

struct Analysis {
    alpha: usize,
    maximum: Vec<usize>,
    witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Decides well-coveredness exactly.
///
/// Components and joins are split off first: a disjoint union is
/// well-covered iff every component is, and a join iff every part is and all
/// parts share the same independence number. The remaining pieces are
/// settled by enumerating their maximal independent sets.
pub fn is_well_covered(g: &Graph) -> WellCoveredReport {
    let a = analyze(g, g.vertex_set());
    WellCoveredReport {
        is_well_covered: a.witness.is_none(),
        alpha: a.alpha,
        witness: a.witness,
    }
}

fn union(parts: &[&[usize]]) -> Vec<usize> {
    let mut out: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    out.sort_unstable();
    out
}

fn analyze(g: &Graph, set: BitSet) -> Analysis {
    if set.is_empty() {
        return Analysis {
            alpha: 0,
            maximum: Vec::new(),
            witness: None,
        };
    }

    let parts = components(g, &set);
    if parts.len() > 1 {
        let subs: Vec<Analysis> = parts.into_iter().map(|p| analyze(g, p)).collect();
        let alpha = subs.iter().map(|a| a.alpha).sum();
        let maxima: Vec<&[usize]> = subs.iter().map(|a| a.maximum.as_slice()).collect();
        let maximum = union(&maxima);
        // extend one component's witness by maximum sets of the others
        let witness = subs.iter().enumerate().find_map(|(i, a)| {
            let (small, large) = a.witness.as_ref()?;
            let mut with_small = maxima.clone();
            with_small[i] = small;
            let mut with_large = maxima.clone();
            with_large[i] = large;
            Some((union(&with_small), union(&with_large)))
        });
        return Analysis { alpha, maximum, witness };
    }

    let parts = co_components(g, &set);
    if parts.len() > 1 {
        let subs: Vec<Analysis> = parts.into_iter().map(|p| analyze(g, p)).collect();
        if let Some(a) = subs.iter().find(|a| a.witness.is_some()) {
            let (alpha, maximum) = subs
                .iter()
                .max_by_key(|a| a.alpha)
                .map(|a| (a.alpha, a.maximum.clone()))
                .expect("non-empty");
            return Analysis {
                alpha,
                maximum,
                witness: a.witness.clone(),
            };
        }
        // every part is well-covered, so each maximum set is maximal in the join
        let lo = subs.iter().min_by_key(|a| a.alpha).expect("non-empty");
        let hi = subs.iter().max_by_key(|a| a.alpha).expect("non-empty");
        let witness = (lo.alpha != hi.alpha).then(|| (lo.maximum.clone(), hi.maximum.clone()));
        return Analysis {
            alpha: hi.alpha,
            maximum: hi.maximum.clone(),
            witness,
        };
    }

    let mut smallest: Option<Vec<usize>> = None;
    let mut largest: Option<Vec<usize>> = None;
    for s in MaximalSets::independent_within(g, set) {
        if smallest.as_ref().is_none_or(|m| s.len() < m.len()) {
            smallest = Some(s.clone());
        }
        if largest.as_ref().is_none_or(|m| s.len() > m.len()) {
            largest = Some(s);
        }
    }
    let (smallest, largest) = (smallest.expect("non-empty"), largest.expect("non-empty"));
    let witness = (smallest.len() != largest.len()).then(|| (smallest, largest.clone()));
    Analysis {
        alpha: largest.len(),
        maximum: largest,
        witness,
    }
}
