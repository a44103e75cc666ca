use crate::bitset::BitSet;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Clique,
    Independent,
}

struct Frame {
    r: Vec<usize>,
    p: BitSet,
    x: BitSet,
    todo: Vec<usize>,
}

/// Bron–Kerbosch enumeration with Tomita pivoting, driven by an explicit
/// stack so it can be consumed lazily. Each set is yielded once, sorted
/// ascending; the order of sets is deterministic for a fixed graph.
pub struct MaximalSets<'g> {
    g: &'g Graph,
    kind: Kind,
    stack: Vec<Frame>,
    emit_empty: bool,
}

/// Maximal cliques of `g`.
pub fn maximal_cliques(g: &Graph) -> MaximalSets<'_> {
    MaximalSets::new(g, Kind::Clique, g.vertex_set())
}

/// Maximal independent sets of `g`.
pub fn maximal_independent_sets(g: &Graph) -> MaximalSets<'_> {
    MaximalSets::new(g, Kind::Independent, g.vertex_set())
}

impl<'g> MaximalSets<'g> {
    fn new(g: &'g Graph, kind: Kind, within: BitSet) -> Self {
        let mut it = MaximalSets {
            g,
            kind,
            stack: Vec::new(),
            emit_empty: within.is_empty(),
        };
        if !within.is_empty() {
            let x = BitSet::new(g.n());
            let frame = it.frame(Vec::new(), within, x);
            it.stack.push(frame);
        }
        it
    }

    /// Maximal independent sets of the induced subgraph `g[within]`.
    pub fn independent_within(g: &'g Graph, within: BitSet) -> Self {
        Self::new(g, Kind::Independent, within)
    }

    /// Maximal cliques of the induced subgraph `g[within]`.
    pub fn cliques_within(g: &'g Graph, within: BitSet) -> Self {
        Self::new(g, Kind::Clique, within)
    }

    /// `s ∩ N(v)` where `N` is adjacency for cliques and non-adjacency for
    /// independent sets.
    fn restrict(&self, v: usize, s: &BitSet) -> BitSet {
        match self.kind {
            Kind::Clique => s.intersection(self.g.neighbors(v)),
            Kind::Independent => {
                let mut out = s.difference(self.g.neighbors(v));
                out.remove(v);
                out
            }
        }
    }

    fn restricted_count(&self, v: usize, s: &BitSet) -> usize {
        let adjacent = s.intersection_count(self.g.neighbors(v));
        match self.kind {
            Kind::Clique => adjacent,
            Kind::Independent => s.count() - adjacent - s.contains(v) as usize,
        }
    }

    fn frame(&self, r: Vec<usize>, p: BitSet, x: BitSet) -> Frame {
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| (self.restricted_count(u, &p), std::cmp::Reverse(u)))
            .expect("P is non-empty");
        let mut todo: Vec<usize> = p.difference(&self.restrict(pivot, &p)).iter().collect();
        todo.reverse();
        Frame { r, p, x, todo }
    }
}

impl Iterator for MaximalSets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(Vec::new());
        }
        loop {
            let frame = self.stack.last_mut()?;
            let Some(v) = frame.todo.pop() else {
                self.stack.pop();
                continue;
            };
            let (p, x, mut r) = (frame.p.clone(), frame.x.clone(), frame.r.clone());
            frame.p.remove(v);
            frame.x.insert(v);
            let np = self.restrict(v, &p);
            let nx = self.restrict(v, &x);
            r.push(v);
            if np.is_empty() {
                if nx.is_empty() {
                    r.sort_unstable();
                    return Some(r);
                }
                continue;
            }
            let next = self.frame(r, np, nx);
            self.stack.push(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        sets.sort();
        sets
    }

    #[test]
    fn triangle() {
        let k3 = Graph::complete(3);
        assert_eq!(sorted(maximal_independent_sets(&k3).collect()), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(maximal_cliques(&k3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn path_and_cycle() {
        // 1-2-3 as vertices 0-1-2
        let p3 = Graph::path(3);
        assert_eq!(sorted(maximal_independent_sets(&p3).collect()), vec![vec![0, 2], vec![1]]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(sorted(maximal_independent_sets(&c4).collect()), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn empty_graph_has_empty_maximal_set() {
        let g = Graph::empty(0);
        assert_eq!(maximal_independent_sets(&g).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(sorted(maximal_cliques(&Graph::empty(2)).collect()), vec![vec![0], vec![1]]);
    }

    #[test]
    fn within_subset() {
        let c5 = Graph::cycle(5).unwrap();
        let within = BitSet::from_indices(5, [0, 1, 2]);
        let sets = sorted(MaximalSets::independent_within(&c5, within).collect());
        assert_eq!(sets, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn deterministic_order() {
        let g = Graph::kneser(6, 2).unwrap();
        let a: Vec<_> = maximal_cliques(&g).collect();
        let b: Vec<_> = maximal_cliques(&g).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 15); // perfect matchings of K_6
    }
}
