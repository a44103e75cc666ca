//! The graphs `H(k, q; m)`.
//!
//! For `k >= 1` the vertices are pairs `(i, f)` with `i` in `{1, ..., q}` and
//! `f` an assignment of values in `{1, ..., m}` to the `k`-subsets of
//! `{1, ..., q} \ {i}`. Two vertices `(i, f)` and `(j, g)` are adjacent iff
//! `i != j` and `f`, `g` agree on every `k`-subset avoiding both `i` and `j`.
//! For `k = 0` the graph is `m` disjoint copies of `K_q`.
//!
//! Vertex numbering: by `i` ascending, then by the assignment vector read as
//! a base-`m` number whose digit at position `r` (weight `m^r`) is the value
//! on the subset of colex rank `r`. For `k = 0` this is copy-major, matching
//! [`Graph::disjoint_copies`].

use std::io::Write;

use num::{BigUint, One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};
use crate::subsets::{binomial, KSubsetCodec};

/// Default limit on the number of vertices a construction may produce.
pub const DEFAULT_VERTEX_BUDGET: usize = 200_000;

/// A vertex `(i, f)`: `values[r]` is `f` on the `r`-th (colex) `k`-subset of
/// `{1, ..., q} \ {i}`. Both `i` and the values are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FunctionVertex {
    pub i: usize,
    pub values: Vec<u32>,
}

/// An assignment of values in `{1, ..., m}` to all `k`-subsets of
/// `{1, ..., q}`, indexed by colex rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GlobalFunction {
    pub values: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HkqmParams {
    pub k: usize,
    pub q: usize,
    pub m: usize,
}

impl HkqmParams {
    pub fn new(k: usize, q: usize, m: usize) -> Result<Self> {
        if k >= q {
            return Err(Error::InvalidParameters(format!("H(k,q;m) needs 0 <= k < q, got k = {k}, q = {q}")));
        }
        if m == 0 {
            return Err(Error::InvalidParameters("H(k,q;m) needs m >= 1".into()));
        }
        if q > 64 {
            return Err(Error::InvalidParameters(format!("q = {q} is larger than supported (64)")));
        }
        Ok(HkqmParams { k, q, m })
    }

    fn m_pow(&self, e: BigUint) -> BigUint {
        let e = e.to_u32().expect("exponent fits in u32");
        BigUint::from(self.m).pow(e)
    }

    /// `m^C(q-1, k)`, the number of vertices with a given `i`.
    pub fn part_size(&self) -> BigUint {
        self.m_pow(binomial(self.q as u64 - 1, self.k as i64))
    }

    /// `q * m^C(q-1, k)`.
    pub fn vertex_count(&self) -> BigUint {
        self.part_size() * self.q
    }

    /// `m^C(q, k)`, one `q`-clique per global function.
    pub fn maximal_clique_count(&self) -> BigUint {
        self.m_pow(binomial(self.q as u64, self.k as i64))
    }

    fn check_budget(&self, budget: usize) -> Result<usize> {
        let needed = self.vertex_count();
        match needed.to_usize() {
            Some(n) if n <= budget => Ok(n),
            _ => Err(Error::Budget {
                what: format!(
                    "H({},{};{}) = {}*{}^C({},{})",
                    self.k,
                    self.q,
                    self.m,
                    self.q,
                    self.m,
                    self.q - 1,
                    self.k
                ),
                needed,
                budget,
            }),
        }
    }
}

// Per ordered pair (i, j): how a neighbor in part j is assembled from a
// vertex of part i.
#[derive(Clone, Debug)]
struct PairMap {
    // (position in i's vector, weight m^pos in j's vector) for shared subsets
    shared: Vec<(usize, usize)>,
    // offsets of every assignment to j's subsets that contain i
    free_offsets: Vec<usize>,
}

/// Index arithmetic for a specific `H(k, q; m)` that fits a vertex budget.
#[derive(Clone, Debug)]
pub struct HkqmLayout {
    params: HkqmParams,
    n: usize,
    part: usize,
    local_len: usize,
    // local_to_global[i][r]: global rank of the r-th subset of [q]\{i+1}
    local_to_global: Vec<Vec<usize>>,
    global_len: usize,
    pairs: Vec<Vec<PairMap>>,
}

impl HkqmLayout {
    pub fn new(params: HkqmParams, budget: usize) -> Result<Self> {
        let n = params.check_budget(budget)?;
        let HkqmParams { k, q, m } = params;
        let part = n / q;
        let global = KSubsetCodec::of_range(q, k)?;
        let locals = (1..=q)
            .map(|i| KSubsetCodec::of_range_without(q, &[i], k))
            .collect::<Result<Vec<_>>>()?;
        let local_len = locals[0].len();
        let local_to_global = locals
            .iter()
            .map(|codec| codec.iter().map(|s| global.rank(&s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        // m^r < part for r < local_len, so these fit
        let weights: Vec<usize> = std::iter::successors(Some(1usize), |w| w.checked_mul(m))
            .take(local_len)
            .collect();

        let mut pairs = Vec::with_capacity(q);
        if k >= 1 {
            for i in 0..q {
                let mut row = Vec::with_capacity(q);
                for j in 0..q {
                    if i == j {
                        row.push(PairMap {
                            shared: Vec::new(),
                            free_offsets: Vec::new(),
                        });
                        continue;
                    }
                    let mut shared = Vec::new();
                    let mut free_weights = Vec::new();
                    for (pos_j, subset) in locals[j].iter().enumerate() {
                        if subset.contains(&(i + 1)) {
                            free_weights.push(weights[pos_j]);
                        } else {
                            shared.push((locals[i].rank(&subset)?, weights[pos_j]));
                        }
                    }
                    let mut free_offsets = vec![0usize];
                    for w in free_weights {
                        free_offsets = free_offsets
                            .iter()
                            .flat_map(|&base| (0..m).map(move |c| base + c * w))
                            .collect();
                    }
                    row.push(PairMap { shared, free_offsets });
                }
                pairs.push(row);
            }
        }

        Ok(HkqmLayout {
            params,
            n,
            part,
            local_len,
            local_to_global,
            global_len: global.len(),
            pairs,
        })
    }

    pub fn params(&self) -> HkqmParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn digits(&self, mut local: usize) -> Vec<usize> {
        let m = self.params.m;
        (0..self.local_len)
            .map(|_| {
                let d = local % m;
                local /= m;
                d
            })
            .collect()
    }

    fn split(&self, v: usize) -> (usize, usize) {
        if self.params.k == 0 {
            // copy-major: v = copy * q + i
            (v % self.params.q, v / self.params.q)
        } else {
            (v / self.part, v % self.part)
        }
    }

    fn join_index(&self, i: usize, local: usize) -> usize {
        if self.params.k == 0 {
            local * self.params.q + i
        } else {
            i * self.part + local
        }
    }

    /// The label of vertex `v`.
    pub fn vertex(&self, v: usize) -> FunctionVertex {
        assert!(v < self.n, "vertex {v} out of range");
        let (i, local) = self.split(v);
        FunctionVertex {
            i: i + 1,
            values: self.digits(local).into_iter().map(|d| d as u32 + 1).collect(),
        }
    }

    /// The index of a labeled vertex.
    pub fn vertex_index(&self, fv: &FunctionVertex) -> Result<usize> {
        let HkqmParams { q, m, .. } = self.params;
        if fv.i == 0 || fv.i > q {
            return Err(Error::InvalidParameters(format!("part index {} outside 1..={q}", fv.i)));
        }
        if fv.values.len() != self.local_len {
            return Err(Error::InvalidParameters(format!(
                "assignment has {} values, expected {}",
                fv.values.len(),
                self.local_len
            )));
        }
        let mut local = 0usize;
        for &val in fv.values.iter().rev() {
            if val == 0 || val as usize > m {
                return Err(Error::InvalidParameters(format!("value {val} outside 1..={m}")));
            }
            local = local * m + (val as usize - 1);
        }
        Ok(self.join_index(fv.i - 1, local))
    }

    /// All neighbors of `v`, ascending within each part.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let HkqmParams { k, q, .. } = self.params;
        let (i, local) = self.split(v);
        if k == 0 {
            return (0..q).filter(|&j| j != i).map(|j| self.join_index(j, local)).collect();
        }
        let digits = self.digits(local);
        let mut out = Vec::new();
        for (j, map) in self.pairs[i].iter().enumerate() {
            if j == i {
                continue;
            }
            let base = j * self.part + map.shared.iter().map(|&(pos, w)| digits[pos] * w).sum::<usize>();
            let start = out.len();
            out.extend(map.free_offsets.iter().map(|&off| base + off));
            out[start..].sort_unstable();
        }
        out
    }

    /// Materializes the graph with [`FunctionVertex`] labels.
    pub fn build(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| crate::bitset::BitSet::from_indices(self.n, self.neighbors(v)))
            .collect();
        let labels = (0..self.n).map(|v| VertexLabel::Function(self.vertex(v))).collect();
        Graph::from_rows_unchecked(rows, Some(labels))
    }

    /// Number of `k`-subsets of `{1, ..., q}`; the length of a global function.
    pub fn global_len(&self) -> usize {
        self.global_len
    }

    /// The `q`-clique `C_f` of restrictions of `f`, ordered by `i`.
    pub fn clique_of(&self, f: &GlobalFunction) -> Result<Vec<usize>> {
        let m = self.params.m;
        if f.values.len() != self.global_len {
            return Err(Error::InvalidParameters(format!(
                "global function has {} values, expected {}",
                f.values.len(),
                self.global_len
            )));
        }
        if let Some(v) = f.values.iter().find(|&&v| v == 0 || v as usize > m) {
            return Err(Error::InvalidParameters(format!("value {v} outside 1..={m}")));
        }
        self.local_to_global
            .iter()
            .enumerate()
            .map(|(i, map)| {
                let values = map.iter().map(|&g| f.values[g]).collect();
                self.vertex_index(&FunctionVertex { i: i + 1, values })
            })
            .collect()
    }

    /// Every global function, in base-`m` counting order (first value varies
    /// fastest).
    pub fn global_functions(&self) -> impl Iterator<Item = GlobalFunction> + '_ {
        let m = self.params.m as u32;
        let len = self.global_len;
        let mut next = Some(vec![1u32; len]);
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            for d in succ.iter_mut() {
                if *d < m {
                    *d += 1;
                    next = Some(succ);
                    break;
                }
                *d = 1;
            }
            Some(GlobalFunction { values: cur })
        })
    }

    /// Writes the label sidecar: a JSON array of `[i, [values...]]` pairs in
    /// vertex order.
    pub fn write_label_sidecar<W: Write>(&self, out: &mut W) -> Result<()> {
        out.write_all(b"[")?;
        for v in 0..self.n {
            if v > 0 {
                out.write_all(b",")?;
            }
            let fv = self.vertex(v);
            serde_json::to_writer(&mut *out, &(fv.i, &fv.values))?;
        }
        out.write_all(b"]\n")?;
        Ok(())
    }

    /// Streams the graph6 encoding without materializing adjacency rows.
    pub fn write_graph6<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        crate::graph6::write_with(
            self.n,
            |j| self.neighbors(j).into_iter().filter(|&i| i < j).collect(),
            out,
        )
    }
}

/// Builds `H(k, q; m)` under the default vertex budget.
pub fn build_hkqm(k: usize, q: usize, m: usize) -> Result<Graph> {
    build_hkqm_with_budget(HkqmParams::new(k, q, m)?, DEFAULT_VERTEX_BUDGET)
}

pub fn build_hkqm_with_budget(params: HkqmParams, budget: usize) -> Result<Graph> {
    Ok(HkqmLayout::new(params, budget)?.build())
}

/// Number of `j`-cliques of `H(k, q; m)`:
/// `C(q, j) * m^(C(q, k) - C(q - j, k - j))`, with `C(a, b) = 0` for `b < 0`.
///
/// A `j`-clique is fixed by its index set `J` and by the values of a global
/// function on the `k`-subsets not containing `J`; there are
/// `C(q - j, k - j)` subsets containing `J`.
pub fn clique_count_closed_form(k: usize, q: usize, m: usize, j: usize) -> Result<BigUint> {
    let params = HkqmParams::new(k, q, m)?;
    if j > q {
        return Err(Error::InvalidParameters(format!("clique size {j} exceeds q = {q}")));
    }
    if j == 0 {
        return Ok(BigUint::one());
    }
    let total = binomial(q as u64, k as i64);
    let containing = binomial((q - j) as u64, k as i64 - j as i64);
    Ok(binomial(q as u64, j as i64) * params.m_pow(total - containing))
}
