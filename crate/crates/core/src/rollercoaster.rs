//! Well-covered graphs whose independence sequence has a prescribed order on
//! its tail `i_s, s >= ceil(q/2)`.
//!
//! A permutation `pi` of the tail set `S` becomes the target
//! `a_t = C(q,t)` below `S` and `a_t = 2^q + pi(t)` on `S`; the tail gaps are
//! at least 1, so an `epsilon = 1/3` certificate already preserves their
//! order. The realization checks the order on the exact planned counts.

use std::collections::BTreeMap;

use num::{BigRational, BigUint, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::{
    build_plan_with, check_binomial_chain, materialize, plan_within_budget, verify_certificate, CertificatePlan,
    PlanOptions, TargetSequence, DEFAULT_M_CAP,
};
use crate::enumeration::{independence_polynomial, is_well_covered};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6_string;
use crate::hkqm::DEFAULT_VERTEX_BUDGET;
use crate::rational;
use crate::subsets::binomial;

/// A bijection `pi` of `S = {ceil(q/2), ..., q}` onto itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TailPermutation {
    q: usize,
    /// `images[i] = pi(tail_start + i)`.
    images: Vec<usize>,
}

impl TailPermutation {
    /// `images` lists `pi(s)` for `s` in `S` in increasing order.
    pub fn new(q: usize, images: Vec<usize>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidPermutation("q must be at least 1".into()));
        }
        let start = Self::tail_start_of(q);
        let len = q - start + 1;
        if images.len() != len {
            return Err(Error::InvalidPermutation(format!(
                "expected {len} images for the tail {{{start}..{q}}}, got {}",
                images.len()
            )));
        }
        let mut seen = vec![false; len];
        for &x in &images {
            if x < start || x > q {
                return Err(Error::InvalidPermutation(format!("{x} is outside {{{start}..{q}}}")));
            }
            if std::mem::replace(&mut seen[x - start], true) {
                return Err(Error::InvalidPermutation(format!("{x} appears twice; not a bijection")));
            }
        }
        Ok(TailPermutation { q, images })
    }

    pub fn identity(q: usize) -> Result<Self> {
        Self::new(q, (Self::tail_start_of(q.max(1))..=q).collect())
    }

    /// Every permutation of the tail set, lexicographic in the image list.
    pub fn all(q: usize) -> Result<Vec<Self>> {
        let mut images: Vec<usize> = Self::identity(q)?.images;
        let mut out = vec![TailPermutation { q, images: images.clone() }];
        while next_permutation(&mut images) {
            out.push(TailPermutation { q, images: images.clone() });
        }
        Ok(out)
    }

    /// Parses an image list such as `3,2` (or `[3,2]`) or a JSON map such as
    /// `{"2":3,"3":2}`.
    pub fn parse(q: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            let map: BTreeMap<String, usize> = serde_json::from_str(s)
                .map_err(|e| Error::InvalidPermutation(format!("bad permutation map: {e}")))?;
            let mut by_index = BTreeMap::new();
            for (k, v) in map {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidPermutation(format!("bad index {k:?}")))?;
                by_index.insert(k, v);
            }
            let start = Self::tail_start_of(q.max(1));
            let domain: Vec<usize> = by_index.keys().copied().collect();
            if domain != (start..=q).collect::<Vec<_>>() {
                return Err(Error::InvalidPermutation(format!(
                    "map keys {domain:?} are not the tail {{{start}..{q}}}"
                )));
            }
            return Self::new(q, by_index.into_values().collect());
        }
        let body = s.trim_start_matches('[').trim_end_matches(']');
        let images = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad image {:?} in {s:?}", x.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, images)
    }

    fn tail_start_of(q: usize) -> usize {
        q.div_ceil(2).max(1)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `ceil(q/2)`, or 1 when `q = 1`.
    pub fn tail_start(&self) -> usize {
        Self::tail_start_of(self.q)
    }

    pub fn tail(&self) -> std::ops::RangeInclusive<usize> {
        self.tail_start()..=self.q
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `pi(s)` for `s` in the tail.
    pub fn image(&self, s: usize) -> usize {
        self.images[s - self.tail_start()]
    }

    /// Tail indices sorted by increasing `pi`: the order the realized counts
    /// must follow, smallest count first.
    pub fn ordering(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self.tail().collect();
        idx.sort_by_key(|&s| self.image(s));
        idx
    }

    /// `{"s": pi(s)}`.
    pub fn to_map(&self) -> BTreeMap<String, usize> {
        self.tail().map(|s| (s.to_string(), self.image(s))).collect()
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `a_t = C(q,t)` for `t < ceil(q/2)` and `a_t = 2^q + pi(t)` on the tail.
pub fn target_from_permutation(p: &TailPermutation) -> Result<TargetSequence> {
    let q = p.q;
    let two_q = BigUint::one() << q;
    let a = (1..=q)
        .map(|t| {
            let v = if t < p.tail_start() {
                binomial(q as u64, t as i64)
            } else {
                &two_q + p.image(t)
            };
            rational::from_uint(&v)
        })
        .collect();
    let target = TargetSequence::new(q, a)?;
    if let Some(t) = check_binomial_chain(&target).first_violation {
        return Err(Error::Internal(format!("generated target breaks the binomial chain at t = {t}")));
    }
    Ok(target)
}

/// One third of the smallest gap between target values on `indices`.
/// A single index yields `1/3`.
pub fn epsilon_from_target(target: &TargetSequence, indices: &[usize]) -> Result<BigRational> {
    if let Some(&bad) = indices.iter().find(|&&s| s == 0 || s > target.q()) {
        return Err(Error::InvalidParameters(format!("index {bad} outside 1..={}", target.q())));
    }
    let mut min_gap: Option<BigRational> = None;
    for (x, &s) in indices.iter().enumerate() {
        for &r in &indices[x + 1..] {
            let gap = (target.a(s) - target.a(r)).abs();
            if gap.is_zero() {
                return Err(Error::TiedTargets {
                    first: s.min(r),
                    second: s.max(r),
                });
            }
            if min_gap.as_ref().is_none_or(|g| gap < *g) {
                min_gap = Some(gap);
            }
        }
    }
    let third = BigRational::new(1.into(), 3.into());
    Ok(min_gap.map_or(third.clone(), |g| g * third))
}

/// The two inequalities behind the binomial chain on the tail, for one `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailRatioCheck {
    pub t: usize,
    /// `a_t / a_{t+1}`.
    #[serde(with = "rational")]
    pub ratio: BigRational,
    /// `1 + 2/q`.
    #[serde(with = "rational")]
    pub bound: BigRational,
    /// `C(q,t) / C(q,t+1)`.
    #[serde(with = "rational")]
    pub binomial_ratio: BigRational,
    pub ratio_within_bound: bool,
    pub bound_within_binomial_ratio: bool,
}

/// `a_t / a_{t+1} <= 1 + 2/q <= C(q,t) / C(q,t+1)` for consecutive tail
/// indices `t, t+1`.
pub fn tail_ratio_checks(p: &TailPermutation) -> Result<Vec<TailRatioCheck>> {
    let target = target_from_permutation(p)?;
    let q = p.q;
    let bound = BigRational::one() + BigRational::new(2.into(), (q as i64).into());
    Ok((p.tail_start()..q)
        .map(|t| {
            let ratio = target.a(t) / target.a(t + 1);
            let binomial_ratio = rational::from_uint(&binomial(q as u64, t as i64))
                / rational::from_uint(&binomial(q as u64, t as i64 + 1));
            TailRatioCheck {
                t,
                ratio_within_bound: ratio <= bound,
                bound_within_binomial_ratio: bound <= binomial_ratio,
                ratio,
                bound: bound.clone(),
                binomial_ratio,
            }
        })
        .collect())
}

/// When materializing and the smallest certified plan is over budget,
/// certified plans with `m` up to this multiple of its `m` are also tried.
pub const MATERIALIZE_SEARCH_FACTOR: usize = 4;

#[derive(Clone, Debug)]
pub struct RealizeOptions {
    pub m_cap: u64,
    /// Build the graph when a certified plan fits the vertex budget.
    pub materialize: bool,
    pub vertex_budget: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            m_cap: DEFAULT_M_CAP,
            materialize: false,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub index: usize,
    #[serde(with = "rational::uint")]
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationReport {
    pub q: usize,
    /// `{"s": pi(s)}` over the tail.
    pub permutation: BTreeMap<String, usize>,
    pub plan: CertificatePlan,
    pub target: TargetSequence,
    #[serde(with = "rational")]
    pub epsilon: BigRational,
    /// Tail indices, smallest count first.
    pub ordering: Vec<usize>,
    /// Tail counts in `ordering` order; strictly increasing when verified.
    pub chain: Vec<ChainEntry>,
    /// Exact `i_1, ..., i_q` of the planned graph.
    #[serde(with = "rational::uint::vec")]
    pub counts: Vec<BigUint>,
    pub ordering_verified: bool,
    /// The certified deviations alone force the target order on the counts.
    pub target_order_matches: bool,
    pub materialized: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

pub fn realize(p: &TailPermutation) -> Result<RealizationReport> {
    realize_with(p, &RealizeOptions::default()).map(|(report, _)| report)
}

/// Runs the pipeline; the graph is returned when it was materialized.
pub fn realize_with(p: &TailPermutation, options: &RealizeOptions) -> Result<(RealizationReport, Option<Graph>)> {
    let target = target_from_permutation(p)?;
    let tail: Vec<usize> = p.tail().collect();
    let epsilon = epsilon_from_target(&target, &tail)?;
    let mut plan = build_plan_with(&target, &epsilon, &PlanOptions { m_cap: options.m_cap })?;
    if options.materialize && plan.total_vertices > BigUint::from(options.vertex_budget) {
        let to = plan.m.saturating_mul(MATERIALIZE_SEARCH_FACTOR);
        if let Some(fit) = plan_within_budget(&target, &epsilon, plan.m + 1, to, options.vertex_budget)? {
            plan = fit;
        }
    }

    let ordering = p.ordering();
    let chain: Vec<ChainEntry> = ordering
        .iter()
        .map(|&s| ChainEntry {
            index: s,
            count: plan.predicted[s - 1].clone(),
        })
        .collect();
    let ordering_verified = chain.windows(2).all(|w| w[0].count < w[1].count);
    if !ordering_verified {
        return Err(Error::Internal(format!(
            "planned counts do not follow the prescribed tail order {ordering:?}"
        )));
    }

    // Deviations below a third of the least gap keep scaled counts in
    // disjoint windows around the targets, so the target order carries over.
    let check = verify_certificate(&plan.predicted, &plan.scale, &target, &epsilon)?;
    let by_target = {
        let mut idx = tail.clone();
        idx.sort_by(|&x, &y| target.a(x).cmp(target.a(y)));
        idx
    };
    let target_order_matches = by_target.windows(2).all(|w| plan.predicted[w[0] - 1] < plan.predicted[w[1] - 1]);
    if check.holds && !target_order_matches {
        return Err(Error::Internal("certified plan does not preserve the target order".into()));
    }

    let fits = plan.total_vertices <= BigUint::from(options.vertex_budget);
    let graph = if options.materialize && fits {
        let g = materialize(&plan, options.vertex_budget)?;
        let got = independence_polynomial(&g);
        if got.coeffs().get(1..) != Some(&plan.predicted[..]) {
            return Err(Error::Internal("materialized graph disagrees with planned counts".into()));
        }
        Some(g)
    } else {
        None
    };

    let report = RealizationReport {
        q: p.q,
        permutation: p.to_map(),
        counts: plan.predicted.clone(),
        plan,
        target,
        epsilon,
        ordering,
        chain,
        ordering_verified,
        target_order_matches,
        materialized: graph.is_some(),
        graph6: graph.as_ref().map(to_graph6_string),
    };
    Ok((report, graph))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVerdict {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Independence sequence `i_0, ..., i_alpha`.
    #[serde(with = "rational::uint::vec")]
    pub counts: Vec<BigUint>,
}

/// Checks that `g` is well-covered with independence number `q` and that its
/// tail counts follow `p`.
pub fn verify_on_graph(g: &Graph, p: &TailPermutation) -> GraphVerdict {
    let fail = |reason: String, counts: Vec<BigUint>| GraphVerdict {
        holds: false,
        reason: Some(reason),
        counts,
    };
    let wc = is_well_covered(g);
    let counts = independence_polynomial(g).into_coeffs();
    if let Some((small, large)) = &wc.witness {
        return fail(
            format!(
                "not well-covered: maximal independent sets of sizes {} and {}",
                small.len(),
                large.len()
            ),
            counts,
        );
    }
    if wc.alpha != p.q {
        return fail(format!("independence number is {}, expected {}", wc.alpha, p.q), counts);
    }
    let ordering = p.ordering();
    if let Some(w) = ordering.windows(2).find(|w| counts[w[0]] >= counts[w[1]]) {
        return fail(
            format!(
                "i_{} = {} is not below i_{} = {}",
                w[0], counts[w[0]], w[1], counts[w[1]]
            ),
            counts,
        );
    }
    GraphVerdict {
        holds: true,
        reason: None,
        counts,
    }
}
