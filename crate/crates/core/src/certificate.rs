//! Approximate well-covered independence polynomials and their certificates.
//!
//! A target `a_1 x + ... + a_q x^q` whose normalized coefficients
//! `a_t / C(q,t)` are non-decreasing is written as `sum_j b_j P_j(x)` with
//! `P_j(x) = sum_{t >= j} C(q,t) x^t` and `b_j >= 0`. Each `P_j` is
//! approximated by the complement of `H(j-1, q; m)`, whose `t`-independent
//! sets are the `t`-cliques of `H`, and the pieces are combined by joining
//! integer numbers of copies. With a common scale `T` and copy counts chosen
//! so that `copies_j / T = b_j / m^C(q, j-1)` exactly, the only error left is
//! the low-order clique counts of each `H`, which shrink as `m` grows.

use num::{BigInt, BigRational, BigUint, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hkqm::{build_hkqm_with_budget, clique_count_closed_form, HkqmParams};
use crate::rational;
use crate::subsets::binomial;

/// Largest `m` the retry loop may try.
pub const DEFAULT_M_CAP: u64 = 1 << 20;

/// Target coefficients `a_1, ..., a_q`; the constant term is not certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetSequence {
    q: usize,
    #[serde(with = "rational::vec")]
    a: Vec<BigRational>,
}

impl TargetSequence {
    pub fn new(q: usize, a: Vec<BigRational>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameters("target degree q must be at least 1".into()));
        }
        if a.len() != q {
            return Err(Error::InvalidParameters(format!("expected {q} target values, got {}", a.len())));
        }
        if let Some(t) = a.iter().position(|x| x.is_negative()) {
            return Err(Error::InvalidParameters(format!("target a_{} is negative", t + 1)));
        }
        Ok(TargetSequence { q, a })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.len(), values.iter().map(|&v| rational::from_i64(v)).collect())
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `a_t` for `1 <= t <= q`.
    pub fn a(&self, t: usize) -> &BigRational {
        &self.a[t - 1]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.a
    }

    fn normalized(&self, t: usize) -> BigRational {
        self.a(t) / rational::from_uint(&binomial(self.q as u64, t as i64))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCheck {
    pub holds: bool,
    /// Smallest `t` with `a_t / C(q,t) > a_{t+1} / C(q,t+1)`.
    pub first_violation: Option<usize>,
}

/// Exact check of `a_1/C(q,1) <= a_2/C(q,2) <= ... <= a_q/C(q,q)`.
pub fn check_binomial_chain(target: &TargetSequence) -> ChainCheck {
    let first_violation = (1..target.q).find(|&t| target.normalized(t) > target.normalized(t + 1));
    ChainCheck {
        holds: first_violation.is_none(),
        first_violation,
    }
}

/// `b_1 = a_1/C(q,1)` and `b_t = a_t/C(q,t) - a_{t-1}/C(q,t-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BDecomposition {
    #[serde(with = "rational::vec")]
    b: Vec<BigRational>,
}

impl BDecomposition {
    /// `b_1, ..., b_q`.
    pub fn b(&self) -> &[BigRational] {
        &self.b
    }

    /// `a_t = C(q,t) * sum_{s <= t} b_s`.
    pub fn reconstruct(&self) -> Vec<BigRational> {
        let q = self.b.len();
        let mut partial = BigRational::zero();
        self.b
            .iter()
            .enumerate()
            .map(|(i, b)| {
                partial += b;
                &partial * rational::from_uint(&binomial(q as u64, i as i64 + 1))
            })
            .collect()
    }
}

pub fn b_decomposition(target: &TargetSequence) -> Result<BDecomposition> {
    if let Some(index) = check_binomial_chain(target).first_violation {
        return Err(Error::ChainViolated { index });
    }
    let normalized: Vec<BigRational> = (1..=target.q).map(|t| target.normalized(t)).collect();
    let b = normalized
        .iter()
        .enumerate()
        .map(|(i, x)| if i == 0 { x.clone() } else { x - &normalized[i - 1] })
        .collect();
    Ok(BDecomposition { b })
}

fn check_epsilon(epsilon: &BigRational) -> Result<()> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidParameters(format!(
            "epsilon must be positive, got {}",
            rational::format(epsilon)
        )));
    }
    Ok(())
}

/// Smallest `m` with `2^q / m < epsilon`.
pub fn choose_m(q: usize, epsilon: &BigRational) -> Result<BigUint> {
    check_epsilon(epsilon)?;
    let two_q = BigInt::one() << q;
    // m > 2^q / eps  <=>  m >= floor(2^q * den / num) + 1
    let floor = (two_q * epsilon.denom()) / epsilon.numer();
    Ok((floor + 1u32).to_biguint().expect("positive"))
}

/// One summand of a plan: `copies` joined copies of the complement of
/// `H(k, q; m)`, standing in for `weight * P_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanComponent {
    pub k: usize,
    pub m: usize,
    #[serde(with = "rational::uint")]
    pub copies: BigUint,
    /// `b_{k+1}`.
    #[serde(with = "rational")]
    pub weight: BigRational,
    /// `m^C(q,k)`: number of maximal cliques of `H(k, q; m)`.
    #[serde(with = "rational::uint")]
    pub scale: BigUint,
    #[serde(with = "rational::uint")]
    pub vertices_per_copy: BigUint,
    /// Independent-set counts `i_1, ..., i_q` of one copy.
    #[serde(with = "rational::uint::vec")]
    pub per_copy_counts: Vec<BigUint>,
    /// Whether the per-copy counts lie in the range where the closed form was
    /// checked against clique enumeration (`q <= 5`, `m <= 4`, at most 200
    /// vertices).
    pub closed_form_validated: bool,
}

/// A symbolic certificate: the join over components of their copies.
///
/// Counts for `t > k` follow from property `P(k, q; m)` alone
/// (`scale * C(q,t)`); counts for `t <= k` come from the clique-count closed
/// form and are additionally checked against the bound
/// `scale * C(q,t) / m` that `P(k, q; m)` guarantees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePlan {
    pub q: usize,
    #[serde(with = "rational")]
    pub epsilon: BigRational,
    pub m: usize,
    pub target: TargetSequence,
    pub components: Vec<PlanComponent>,
    #[serde(rename = "T", with = "rational::uint")]
    pub scale: BigUint,
    /// Exact `i_1, ..., i_q` of the planned graph.
    #[serde(with = "rational::uint::vec")]
    pub predicted: Vec<BigUint>,
    /// `|predicted_t / T - a_t|`.
    #[serde(with = "rational::vec")]
    pub deviations: Vec<BigRational>,
    /// Every deviation is below epsilon.
    pub certified: bool,
    #[serde(with = "rational::uint")]
    pub total_vertices: BigUint,
}

impl CertificatePlan {
    pub fn max_deviation(&self) -> BigRational {
        self.deviations.iter().max().cloned().unwrap_or_default()
    }
}

#[derive(Clone, Debug)]
pub struct PlanOptions {
    pub m_cap: u64,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions { m_cap: DEFAULT_M_CAP }
    }
}

fn closed_form_validated(params: HkqmParams) -> bool {
    params.q <= 5 && params.m <= 4 && params.vertex_count() <= BigUint::from(200u32)
}

fn component_counts(params: HkqmParams) -> Result<Vec<BigUint>> {
    let HkqmParams { k, q, m } = params;
    let scale = params.maximal_clique_count();
    (1..=q)
        .map(|t| {
            let count = clique_count_closed_form(k, q, m, t)?;
            let full = &scale * binomial(q as u64, t as i64);
            let consistent = if t > k { count == full } else { &count * m <= full };
            if !consistent {
                return Err(Error::Internal(format!(
                    "clique count of H({k},{q};{m}) at size {t} is {count}, inconsistent with {full}"
                )));
            }
            Ok(count)
        })
        .collect()
}

/// The plan for a fixed `m`, certified or not.
pub fn plan_at_m(target: &TargetSequence, epsilon: &BigRational, m: usize) -> Result<CertificatePlan> {
    check_epsilon(epsilon)?;
    let decomposition = b_decomposition(target)?;
    plan_from_decomposition(target, &decomposition, epsilon, m)
}

fn plan_from_decomposition(
    target: &TargetSequence,
    decomposition: &BDecomposition,
    epsilon: &BigRational,
    m: usize,
) -> Result<CertificatePlan> {
    let q = target.q;
    if m == 0 {
        return Err(Error::InvalidParameters("m must be at least 1".into()));
    }
    let active: Vec<(usize, &BigRational)> = decomposition
        .b
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .collect();
    if active.is_empty() {
        return Err(Error::InvalidParameters("target is identically zero".into()));
    }

    // Smallest T with every copies_j = b_j * T / scale_j integral.
    let mut scale = BigUint::one();
    let mut pieces = Vec::with_capacity(active.len());
    for &(j, b) in &active {
        let params = HkqmParams::new(j, q, m)?;
        let comp_scale = params.maximal_clique_count();
        let numer = b.numer().to_biguint().expect("b_j > 0");
        let denom = b.denom().to_biguint().expect("positive denominator");
        let need = &denom * &comp_scale;
        let need = &need / need.gcd(&numer);
        scale = scale.lcm(&need);
        pieces.push((params, b.clone(), comp_scale, numer, denom));
    }

    let mut components = Vec::with_capacity(pieces.len());
    let mut predicted = vec![BigUint::zero(); q];
    let mut total_vertices = BigUint::zero();
    for (params, weight, comp_scale, numer, denom) in pieces {
        let copies = (&numer * &scale) / (&denom * &comp_scale);
        debug_assert_eq!(&copies * &denom * &comp_scale, &numer * &scale);
        let per_copy_counts = component_counts(params)?;
        for (p, c) in predicted.iter_mut().zip(&per_copy_counts) {
            *p += &copies * c;
        }
        let vertices_per_copy = params.vertex_count();
        total_vertices += &copies * &vertices_per_copy;
        components.push(PlanComponent {
            k: params.k,
            m,
            copies,
            weight,
            scale: comp_scale,
            vertices_per_copy,
            per_copy_counts,
            closed_form_validated: closed_form_validated(params),
        });
    }

    let check = verify_certificate(&predicted, &scale, target, epsilon)?;
    Ok(CertificatePlan {
        q,
        epsilon: epsilon.clone(),
        m,
        target: target.clone(),
        components,
        scale,
        predicted,
        deviations: check.deviations,
        certified: check.holds,
        total_vertices,
    })
}

pub fn build_plan(target: &TargetSequence, epsilon: &BigRational) -> Result<CertificatePlan> {
    build_plan_with(target, epsilon, &PlanOptions::default())
}

/// Finds the certified plan with the smallest `m` at or above
/// [`choose_m`]: doubles `m` until the plan certifies, then bisects between
/// the last failure and the first success. Deviations are non-increasing in
/// `m`, so the bisection lands on the smallest certifying `m`.
pub fn build_plan_with(target: &TargetSequence, epsilon: &BigRational, options: &PlanOptions) -> Result<CertificatePlan> {
    check_epsilon(epsilon)?;
    let decomposition = b_decomposition(target)?;
    let cap = options.m_cap.min(usize::MAX as u64);
    let start = choose_m(target.q, epsilon)?
        .to_u64()
        .filter(|&m| m <= cap)
        .ok_or(Error::RetryCap { cap })?;
    let at = |m: u64| plan_from_decomposition(target, &decomposition, epsilon, m as usize);

    let first = at(start)?;
    if first.certified {
        return Ok(first);
    }
    let mut hi = start;
    let mut lo;
    let mut found = loop {
        if hi == cap {
            return Err(Error::RetryCap { cap });
        }
        lo = hi;
        hi = hi.saturating_mul(2).min(cap);
        let plan = at(hi)?;
        if plan.certified {
            break plan;
        }
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let plan = at(mid)?;
        if plan.certified {
            hi = mid;
            found = plan;
        } else {
            lo = mid;
        }
    }
    Ok(found)
}

/// First certified plan with `m` in `from..=to` whose graph has at most
/// `vertex_budget` vertices. Copy counts depend on the arithmetic of `m`, so
/// a larger `m` can give a much smaller graph.
pub fn plan_within_budget(
    target: &TargetSequence,
    epsilon: &BigRational,
    from: usize,
    to: usize,
    vertex_budget: usize,
) -> Result<Option<CertificatePlan>> {
    check_epsilon(epsilon)?;
    let decomposition = b_decomposition(target)?;
    let budget = BigUint::from(vertex_budget);
    for m in from.max(1)..=to {
        let plan = plan_from_decomposition(target, &decomposition, epsilon, m)?;
        if plan.certified && plan.total_vertices <= budget {
            return Ok(Some(plan));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub holds: bool,
    /// `|counts_t / T - a_t|` for `t = 1..=q`.
    #[serde(with = "rational::vec")]
    pub deviations: Vec<BigRational>,
    pub first_failure: Option<usize>,
}

/// Checks `|counts_t / T - a_t| < epsilon` for every `1 <= t <= q`;
/// `counts[t-1]` is `i_t`.
pub fn verify_certificate(
    counts: &[BigUint],
    scale: &BigUint,
    target: &TargetSequence,
    epsilon: &BigRational,
) -> Result<CertificateCheck> {
    check_epsilon(epsilon)?;
    if counts.len() != target.q {
        return Err(Error::InvalidParameters(format!(
            "{} counts for a degree-{} target",
            counts.len(),
            target.q
        )));
    }
    if scale.is_zero() {
        return Err(Error::InvalidParameters("scaling factor T must be positive".into()));
    }
    let t_rat = rational::from_uint(scale);
    let deviations: Vec<BigRational> = counts
        .iter()
        .zip(&target.a)
        .map(|(c, a)| (rational::from_uint(c) / &t_rat - a).abs())
        .collect();
    let first_failure = deviations.iter().position(|d| d >= epsilon).map(|i| i + 1);
    Ok(CertificateCheck {
        holds: first_failure.is_none(),
        deviations,
        first_failure,
    })
}

/// Builds the planned graph: the join, in plan order, of `copies` copies of
/// the complement of `H(k, q; m)` for each component.
pub fn materialize(plan: &CertificatePlan, vertex_budget: usize) -> Result<Graph> {
    let over = || Error::Budget {
        what: "materialized plan".into(),
        needed: plan.total_vertices.clone(),
        budget: vertex_budget,
    };
    if plan.total_vertices > BigUint::from(vertex_budget) {
        return Err(over());
    }
    let mut parts = Vec::with_capacity(plan.components.len());
    for c in &plan.components {
        let params = HkqmParams::new(c.k, plan.q, c.m)?;
        let copies = c.copies.to_usize().ok_or_else(over)?;
        parts.push((build_hkqm_with_budget(params, vertex_budget)?.complement(), copies));
    }
    let refs: Vec<&Graph> = parts
        .iter()
        .flat_map(|(g, copies)| std::iter::repeat_n(g, *copies))
        .collect();
    Graph::join_refs(&refs)
}
