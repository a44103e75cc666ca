use num::BigUint;

use super::{co_components, components};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;

/// Largest vertex count accepted by the subset-enumeration oracle.
pub const BRUTE_FORCE_MAX_N: usize = 24;

/// Independence polynomial by the branching recurrence
/// `I(G) = I(G - v) + x I(G - N[v])`, pivoting on a maximum-degree vertex
/// (lowest index on ties).
///
/// Disconnected subgraphs are handled as products and joins as sums
/// (`I(A v B) = I(A) + I(B) - 1`), which keeps joins of many components
/// linear in the number of parts.
pub fn independence_polynomial(g: &Graph) -> Polynomial {
    count_within(g, g.vertex_set())
}

/// Clique polynomial: `x^t` counts the `t`-cliques of `g`.
pub fn clique_polynomial(g: &Graph) -> Polynomial {
    independence_polynomial(&g.complement())
}

fn count_within(g: &Graph, set: BitSet) -> Polynomial {
    let mut acc = Polynomial::zero();
    let mut rem = set;
    loop {
        let size = rem.count();
        if size == 0 {
            acc += &Polynomial::one();
            return acc;
        }
        let mut pivot = None;
        let mut best = 0;
        for v in rem.iter() {
            let d = g.neighbors(v).intersection_count(&rem);
            if d > best {
                best = d;
                pivot = Some(v);
            }
        }
        let Some(pivot) = pivot else {
            acc += &Polynomial::one_plus_x_pow(size);
            return acc;
        };

        let parts = components(g, &rem);
        if parts.len() > 1 {
            let product = parts
                .into_iter()
                .fold(Polynomial::one(), |p, part| &p * &count_within(g, part));
            acc += &product;
            return acc;
        }
        let parts = co_components(g, &rem);
        if parts.len() > 1 {
            acc += &Polynomial::one();
            for part in parts {
                acc += &count_within(g, part).without_constant();
            }
            return acc;
        }

        let mut outside = rem.difference(g.neighbors(pivot));
        outside.remove(pivot);
        acc += &count_within(g, outside).shift();
        rem.remove(pivot);
    }
}

/// Independence polynomial by testing all `2^n` vertex subsets. Independent
/// of the branching code; meant as an oracle for small graphs.
pub fn independence_polynomial_brute_force(g: &Graph) -> Result<Polynomial> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::InvalidParameters(format!(
            "brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| g.is_adjacent(u, v)).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut counts = vec![0u64; n + 1];
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    counts[0] = 1;
    for mask in 1u32..(1u32 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let ok = independent[rest as usize] && adj[low] & rest == 0;
        independent[mask as usize] = ok;
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(Polynomial::from_coeffs(counts.into_iter().map(BigUint::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hkqm::build_hkqm;

    #[test]
    fn small_cases() {
        assert_eq!(independence_polynomial(&Graph::complete(3)), Polynomial::from_u64s(&[1, 3]));
        assert_eq!(independence_polynomial(&Graph::empty(3)), Polynomial::from_u64s(&[1, 3, 3, 1]));
        assert_eq!(independence_polynomial(&Graph::empty(0)), Polynomial::one());
        assert_eq!(independence_polynomial(&Graph::path(3)), Polynomial::from_u64s(&[1, 3, 1]));
        assert_eq!(independence_polynomial(&Graph::cycle(5).unwrap()), Polynomial::from_u64s(&[1, 5, 5]));
    }

    #[test]
    fn clique_polynomials() {
        assert_eq!(clique_polynomial(&Graph::complete(3)), Polynomial::from_u64s(&[1, 3, 3, 1]));
        let two_triangles = Graph::complete(3).disjoint_copies(2);
        assert_eq!(clique_polynomial(&two_triangles), Polynomial::from_u64s(&[1, 6, 6, 2]));
    }

    #[test]
    fn complement_of_h132() {
        // expected values frozen from the 2^12 subset oracle
        let h = build_hkqm(1, 3, 2).unwrap();
        let oracle = independence_polynomial_brute_force(&h.complement()).unwrap();
        assert_eq!(oracle, Polynomial::from_u64s(&[1, 12, 24, 8]));
        assert_eq!(independence_polynomial(&h.complement()), oracle);
        assert_eq!(clique_polynomial(&h), oracle);
    }

    #[test]
    fn brute_force_limit() {
        assert!(independence_polynomial_brute_force(&Graph::empty(25)).is_err());
    }

    #[test]
    fn large_join_is_fast() {
        let part = Graph::complete(2).disjoint_copies(20).complement();
        let parts = vec![part; 100];
        let g = Graph::join(&parts).unwrap();
        assert_eq!(g.n(), 4000);
        // each part: complete 20-partite graph with parts of size 2
        let expected = Polynomial::from_u64s(&[1, 4000, 2000]);
        assert_eq!(independence_polynomial(&g), expected);
    }
}
