use serde::{Deserialize, Serialize};

use super::maximal::maximal_cliques;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A failed condition of `P(k, q; m)` with a witness clique.
///
/// `observed` is the clique size for condition 1 and the number of maximal
/// cliques containing the witness for conditions 2 and 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: u8,
    pub clique: Vec<usize>,
    pub observed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyPReport {
    pub holds: bool,
    pub k: usize,
    pub q: usize,
    pub m: usize,
    pub maximal_cliques: usize,
    /// Number of cliques of size `k + 1` examined for condition 2.
    pub upper_cliques: usize,
    /// Number of cliques of size `k` examined for condition 3.
    pub lower_cliques: usize,
    /// Fewest and most maximal cliques containing a `k`-clique.
    pub lower_containment: Option<(usize, usize)>,
    pub violations: Vec<Violation>,
}

/// Calls `f` on every clique of exactly `size` vertices, each listed
/// ascending, by depth-first extension over common neighborhoods.
pub fn for_each_clique(g: &Graph, size: usize, mut f: impl FnMut(&[usize])) {
    fn extend(g: &Graph, clique: &mut Vec<usize>, cand: &BitSet, size: usize, f: &mut dyn FnMut(&[usize])) {
        if clique.len() == size {
            f(clique);
            return;
        }
        let need = size - clique.len();
        for v in cand.iter() {
            let mut next = cand.intersection(g.neighbors(v));
            // keep only later vertices so each clique is produced once
            next.remove_range(0, v + 1);
            if next.count() + 1 < need {
                continue;
            }
            clique.push(v);
            extend(g, clique, &next, size, f);
            clique.pop();
        }
    }
    extend(g, &mut Vec::with_capacity(size), &g.vertex_set(), size, &mut f);
}

/// Exhaustively checks property `P(k, q; m)`:
///
/// 1. every maximal clique has `q` vertices;
/// 2. every `(k+1)`-clique lies in exactly one maximal clique;
/// 3. every `k`-clique lies in at least `m` maximal cliques (for `k = 0` the
///    empty clique lies in all of them).
///
/// One witness is reported per failed condition.
pub fn check_property_p(g: &Graph, k: usize, q: usize, m: usize) -> Result<PropertyPReport> {
    if k >= q {
        return Err(Error::InvalidParameters(format!("property P needs k < q, got k = {k}, q = {q}")));
    }
    if m == 0 {
        return Err(Error::InvalidParameters("property P needs m >= 1".into()));
    }
    let cliques: Vec<Vec<usize>> = maximal_cliques(g).collect();
    let count = cliques.len();
    let mut violations = Vec::new();

    if let Some(c) = cliques.iter().find(|c| c.len() != q) {
        violations.push(Violation {
            condition: 1,
            clique: c.clone(),
            observed: c.len(),
        });
    }

    // membership[v] = maximal cliques containing v
    let mut membership = vec![BitSet::new(count); g.n()];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            membership[v].insert(i);
        }
    }
    let containing = |clique: &[usize]| -> usize {
        match clique.split_first() {
            None => count,
            Some((&first, rest)) => {
                let mut acc = membership[first].clone();
                for &v in rest {
                    acc.intersect_with(&membership[v]);
                }
                acc.count()
            }
        }
    };

    let mut upper = 0;
    let mut upper_violation = None;
    for_each_clique(g, k + 1, |c| {
        upper += 1;
        if upper_violation.is_none() {
            let n = containing(c);
            if n != 1 {
                upper_violation = Some(Violation {
                    condition: 2,
                    clique: c.to_vec(),
                    observed: n,
                });
            }
        }
    });
    violations.extend(upper_violation);

    let mut lower = 0;
    let mut range: Option<(usize, usize)> = None;
    let mut lower_violation = None;
    for_each_clique(g, k, |c| {
        lower += 1;
        let n = containing(c);
        range = Some(range.map_or((n, n), |(lo, hi)| (lo.min(n), hi.max(n))));
        if n < m && lower_violation.is_none() {
            lower_violation = Some(Violation {
                condition: 3,
                clique: c.to_vec(),
                observed: n,
            });
        }
    });
    violations.extend(lower_violation);

    Ok(PropertyPReport {
        holds: violations.is_empty(),
        k,
        q,
        m,
        maximal_cliques: count,
        upper_cliques: upper,
        lower_cliques: lower,
        lower_containment: range,
        violations,
    })
}
