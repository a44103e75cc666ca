//! Exact counting and enumeration: independence and clique polynomials,
//! maximal independent sets and cliques, well-coveredness, property
//! `P(k, q; m)`, and the binomial-ratio inequality for well-covered graphs.

mod indpoly;
mod maximal;
mod mt;
mod property_p;
mod well_covered;

pub use indpoly::{clique_polynomial, independence_polynomial, independence_polynomial_brute_force, BRUTE_FORCE_MAX_N};
pub use maximal::{maximal_cliques, maximal_independent_sets, MaximalSets};
pub use mt::{binomial_ratio_violation, mt_inequality_check, MtReport};
pub use property_p::{check_property_p, for_each_clique, PropertyPReport, Violation};
pub use well_covered::{is_well_covered, WellCoveredReport};

use crate::bitset::BitSet;
use crate::graph::Graph;

/// Connected components of `g[set]`.
pub(crate) fn components(g: &Graph, set: &BitSet) -> Vec<BitSet> {
    split(set, |v, remaining| remaining.intersection(g.neighbors(v)))
}

/// Connected components of the complement of `g[set]`. More than one part
/// means `g[set]` is the join of the parts.
pub(crate) fn co_components(g: &Graph, set: &BitSet) -> Vec<BitSet> {
    split(set, |v, remaining| remaining.difference(g.neighbors(v)))
}

fn split(set: &BitSet, step: impl Fn(usize, &BitSet) -> BitSet) -> Vec<BitSet> {
    let mut remaining = set.clone();
    let mut parts = Vec::new();
    while let Some(start) = remaining.first() {
        remaining.remove(start);
        let mut part = BitSet::new(set.universe());
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            part.insert(v);
            let next = step(v, &remaining);
            remaining.difference_with(&next);
            frontier.extend(next.iter());
        }
        parts.push(part);
    }
    parts
}
