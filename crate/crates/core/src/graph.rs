//! Immutable simple graphs over vertices `0..n` with bit-row adjacency.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hkqm::FunctionVertex;
use crate::subsets::KSubsetCodec;

/// Optional per-vertex tag carried through graph operations for traceability.
/// Labels never take part in graph equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexLabel {
    /// Original index of an otherwise unlabeled vertex.
    Vertex(usize),
    /// A `k`-subset of `{1, ..., n}` (Kneser graphs).
    Subset(Vec<usize>),
    /// A vertex of `H(k, q; m)`.
    Function(FunctionVertex),
    /// Vertex of copy `copy` produced by [`Graph::disjoint_copies`].
    Copy { copy: usize, inner: Box<VertexLabel> },
    /// Vertex of the `part`-th operand of [`Graph::join`].
    Part { part: usize, inner: Box<VertexLabel> },
}

/// A simple undirected graph. Equality compares the vertex count and the edge
/// set only.
#[derive(Clone)]
pub struct Graph {
    rows: Vec<BitSet>,
    labels: Option<Vec<VertexLabel>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![BitSet::new(n); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = vec![BitSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameters(format!("edge ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("self-loop at {u}")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { rows, labels: None })
    }

    /// Builds from adjacency rows; rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<BitSet>) -> Result<Self> {
        let n = rows.len();
        for (v, row) in rows.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvalidParameters(format!("row {v} has width {}", row.universe())));
            }
            if row.contains(v) {
                return Err(Error::InvalidParameters(format!("self-loop at {v}")));
            }
            if let Some(u) = row.iter().find(|&u| !rows[u].contains(v)) {
                return Err(Error::InvalidParameters(format!("asymmetric adjacency {v}-{u}")));
            }
        }
        Ok(Graph { rows, labels: None })
    }

    // Callers guarantee symmetry and no loops.
    pub(crate) fn from_rows_unchecked(rows: Vec<BitSet>, labels: Option<Vec<VertexLabel>>) -> Self {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == rows.len()));
        Graph { rows, labels }
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Neighborhood of `v` as a bit row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    pub fn vertex_set(&self) -> BitSet {
        BitSet::full(self.n())
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.is_adjacent(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !self.is_adjacent(u, v)))
    }

    /// `K_q`.
    pub fn complete(q: usize) -> Self {
        let rows = (0..q)
            .map(|v| {
                let mut row = BitSet::full(q);
                row.remove(v);
                row
            })
            .collect();
        Graph { rows, labels: None }
    }

    /// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameters(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `c` vertex-disjoint copies, copy-major: vertex `v` of copy `i` becomes
    /// `i * n + v`.
    pub fn disjoint_copies(&self, c: usize) -> Self {
        let n = self.n();
        let total = n.checked_mul(c).expect("vertex count overflows usize");
        let mut rows = Vec::with_capacity(total);
        for copy in 0..c {
            let offset = copy * n;
            for row in &self.rows {
                let mut r = BitSet::new(total);
                for u in row.iter() {
                    r.insert(u + offset);
                }
                rows.push(r);
            }
        }
        let labels = self.labels.as_ref().map(|labels| {
            (0..c)
                .flat_map(|copy| {
                    labels.iter().map(move |l| VertexLabel::Copy {
                        copy,
                        inner: Box::new(l.clone()),
                    })
                })
                .collect()
        });
        Graph { rows, labels }
    }

    /// Same vertices, complementary edge set; labels are kept.
    pub fn complement(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = row.complement();
                r.remove(v);
                r
            })
            .collect();
        Graph {
            rows,
            labels: self.labels.clone(),
        }
    }

    /// Disjoint union of `parts` plus every edge between distinct parts.
    /// Vertices are numbered by concatenation order.
    pub fn join(parts: &[Graph]) -> Result<Self> {
        Self::join_refs(&parts.iter().collect::<Vec<_>>())
    }

    /// [`join`](Self::join) over borrowed parts; lets callers repeat a part.
    pub fn join_refs(parts: &[&Graph]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyJoin);
        }
        let total = parts
            .iter()
            .try_fold(0usize, |acc, g| acc.checked_add(g.n()))
            .expect("vertex count overflows usize");
        let mut rows = Vec::with_capacity(total);
        let mut offset = 0;
        for g in parts {
            let end = offset + g.n();
            for row in &g.rows {
                let mut r = BitSet::full(total);
                r.remove_range(offset, end);
                for u in row.iter() {
                    r.insert(u + offset);
                }
                rows.push(r);
            }
            offset = end;
        }
        let labels = parts.iter().any(|g| g.labels.is_some()).then(|| {
            parts
                .iter()
                .enumerate()
                .flat_map(|(part, g)| {
                    (0..g.n()).map(move |v| VertexLabel::Part {
                        part,
                        inner: Box::new(g.label(v).cloned().unwrap_or(VertexLabel::Vertex(v))),
                    })
                })
                .collect()
        });
        Ok(Graph { rows, labels })
    }

    /// Kneser graph `KG(n, k)`: `k`-subsets of `{1, ..., n}` in colex order,
    /// adjacent when disjoint.
    pub fn kneser(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameters(format!("kneser needs 1 <= k <= n, got n = {n}, k = {k}")));
        }
        if n > 64 {
            return Err(Error::InvalidParameters(format!("kneser supports n <= 64, got {n}")));
        }
        let codec = KSubsetCodec::of_range(n, k)?;
        let subsets: Vec<Vec<usize>> = codec.iter().collect();
        let masks: Vec<u64> = subsets
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << (x - 1)))
            .collect();
        let count = masks.len();
        let rows = masks
            .iter()
            .map(|&a| BitSet::from_indices(count, masks.iter().enumerate().filter(|(_, &b)| a & b == 0).map(|(i, _)| i)))
            .collect();
        let labels = subsets.into_iter().map(VertexLabel::Subset).collect();
        Ok(Graph {
            rows,
            labels: Some(labels),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_complement_edges(g: &Graph) -> usize {
        let n = g.n();
        let mut count = 0;
        for u in 0..n {
            for v in u + 1..n {
                if !g.is_adjacent(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(Graph::complete(1).edge_count(), 0);
        assert_eq!(Graph::complete(1).n(), 1);
        assert_eq!(Graph::complete(3).edge_count(), 3);
        assert_eq!(Graph::complete(5).edge_count(), 10);
    }

    #[test]
    fn copies() {
        let two_triangles = Graph::complete(3).disjoint_copies(2);
        assert_eq!((two_triangles.n(), two_triangles.edge_count()), (6, 6));
        assert!(!two_triangles.is_adjacent(2, 3));
        assert!(two_triangles.is_clique(&[3, 4, 5]));
        let g = Graph::path(4);
        assert_eq!(g.disjoint_copies(1), g);
        let k2 = Graph::complete(2).disjoint_copies(3);
        assert_eq!((k2.n(), k2.edge_count()), (6, 3));
    }

    #[test]
    fn copies_replicate_labels() {
        let g = Graph::kneser(3, 1).unwrap().disjoint_copies(2);
        assert_eq!(
            g.label(4),
            Some(&VertexLabel::Copy {
                copy: 1,
                inner: Box::new(VertexLabel::Subset(vec![2]))
            })
        );
    }

    #[test]
    fn complement_cases() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let two_triangles = Graph::complete(3).disjoint_copies(2);
        let c = two_triangles.complement();
        assert_eq!((c.n(), c.edge_count()), (6, brute_complement_edges(&two_triangles)));
        assert_eq!(c.edge_count(), 9);
        // K_{3,3}: the triangles become the two independent sides.
        assert!(c.is_independent(&[0, 1, 2]) && c.is_independent(&[3, 4, 5]));
        assert!((0..3).all(|u| (3..6).all(|v| c.is_adjacent(u, v))));
        assert_eq!(c.complement(), two_triangles);
    }

    #[test]
    fn join_cases() {
        let k1 = Graph::complete(1);
        assert_eq!(Graph::join(&[k1.clone(), k1.clone()]).unwrap(), Graph::complete(2));
        let two_k1 = Graph::empty(2);
        let c4 = Graph::join(&[two_k1.clone(), two_k1]).unwrap();
        // vertex order 0,1 | 2,3; the 4-cycle is 0-2-1-3-0
        assert_eq!(c4, Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap());
        assert!(matches!(Graph::join(&[]), Err(Error::EmptyJoin)));
    }

    #[test]
    fn join_labels_wrap_parts() {
        let a = Graph::kneser(3, 1).unwrap();
        let b = Graph::empty(2);
        let j = Graph::join(&[a, b]).unwrap();
        assert_eq!(
            j.label(4),
            Some(&VertexLabel::Part {
                part: 1,
                inner: Box::new(VertexLabel::Vertex(1))
            })
        );
    }

    #[test]
    fn kneser_cases() {
        assert_eq!(Graph::kneser(3, 1).unwrap(), Graph::complete(3));
        let petersen = Graph::kneser(5, 2).unwrap();
        assert_eq!((petersen.n(), petersen.edge_count()), (10, 15));
        assert!((0..10).all(|v| petersen.degree(v) == 3));
        let kg82 = Graph::kneser(8, 2).unwrap();
        assert_eq!(kg82.n(), 28);
        assert!((0..28).all(|v| kg82.degree(v) == 15));
        assert!(Graph::kneser(2, 3).is_err());
        assert!(Graph::kneser(6, 1).unwrap() == Graph::complete(6));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let mut rows = vec![BitSet::new(2); 2];
        rows[0].insert(1);
        assert!(Graph::from_rows(rows).is_err());
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let a = Graph::kneser(4, 1).unwrap();
        assert_eq!(a, a.clone().without_labels());
        assert!(Graph::empty(2).with_labels(vec![VertexLabel::Vertex(0)]).is_err());
    }
}
