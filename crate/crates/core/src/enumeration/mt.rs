use num::BigUint;
use serde::{Deserialize, Serialize};

use super::indpoly::independence_polynomial;
use super::well_covered::is_well_covered;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::subsets::binomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtReport {
    pub holds: bool,
    pub alpha: usize,
    /// Smallest `t` with `i_t / C(q,t) > i_{t+1} / C(q,t+1)`.
    pub first_violation: Option<usize>,
    pub counts: Polynomial,
}

/// First `t` in `1..q` where `counts[t] / C(q,t) <= counts[t+1] / C(q,t+1)`
/// fails, compared by cross-multiplication.
pub fn binomial_ratio_violation(counts: &[BigUint], q: usize) -> Option<usize> {
    let at = |t: usize| counts.get(t).cloned().unwrap_or_default();
    (1..q).find(|&t| {
        let lhs = at(t) * binomial(q as u64, t as i64 + 1);
        let rhs = at(t + 1) * binomial(q as u64, t as i64);
        lhs > rhs
    })
}

/// Checks `i_t / C(q,t) <= i_{t+1} / C(q,t+1)` for `1 <= t < q` on a
/// well-covered graph with independence number `q`.
pub fn mt_inequality_check(g: &Graph) -> Result<MtReport> {
    let report = is_well_covered(g);
    if let Some((small, large)) = &report.witness {
        return Err(Error::NotWellCovered {
            small: small.len(),
            large: large.len(),
        });
    }
    let counts = independence_polynomial(g);
    let first_violation = binomial_ratio_violation(counts.coeffs(), report.alpha);
    Ok(MtReport {
        holds: first_violation.is_none(),
        alpha: report.alpha,
        first_violation,
        counts,
    })
}
