//! Binomial coefficients and the combinatorial number system.

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)` with the convention `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` as a machine integer, `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Ranks `k`-subsets of an ordered ground set in colexicographic order.
///
/// A subset with ground positions `c_0 < c_1 < ... < c_{k-1}` has rank
/// `sum C(c_i, i + 1)`, which is a bijection onto `0..C(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSubsetCodec {
    ground: Vec<usize>,
    k: usize,
    count: usize,
    // table[i][c] = C(c, i + 1)
    table: Vec<Vec<usize>>,
}

impl KSubsetCodec {
    /// Codec for `k`-subsets of `ground`; ground elements must be distinct.
    /// With `k` larger than the ground set the family is empty.
    pub fn new(ground: Vec<usize>, k: usize) -> Result<Self> {
        let n = ground.len();
        let mut sorted = ground.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::InvalidParameters("ground set has repeated elements".into()));
        }
        let count = binomial_u64(n as u64, k as u64)
            .and_then(|c| usize::try_from(c).ok())
            .ok_or_else(|| Error::InvalidParameters(format!("C({n},{k}) overflows")))?;
        let table = (0..k)
            .map(|i| {
                (0..n)
                    .map(|c| binomial_u64(c as u64, i as u64 + 1).unwrap_or(u64::MAX) as usize)
                    .collect()
            })
            .collect();
        Ok(KSubsetCodec {
            ground: sorted,
            k,
            count,
            table,
        })
    }

    /// Codec for `k`-subsets of `{1, ..., q}`.
    pub fn of_range(q: usize, k: usize) -> Result<Self> {
        Self::new((1..=q).collect(), k)
    }

    /// Codec for `k`-subsets of `{1, ..., q} \ omitted`.
    pub fn of_range_without(q: usize, omitted: &[usize], k: usize) -> Result<Self> {
        Self::new((1..=q).filter(|x| !omitted.contains(x)).collect(), k)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    /// Number of subsets, `C(n, k)`.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Rank of a subset given by its elements in any order.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        if subset.len() != self.k {
            return Err(Error::InvalidParameters(format!(
                "subset has {} elements, expected {}",
                subset.len(),
                self.k
            )));
        }
        let mut positions = subset
            .iter()
            .map(|x| {
                self.ground
                    .binary_search(x)
                    .map_err(|_| Error::InvalidParameters(format!("{x} is not in the ground set")))
            })
            .collect::<Result<Vec<_>>>()?;
        positions.sort_unstable();
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameters("subset has repeated elements".into()));
        }
        Ok(positions
            .iter()
            .enumerate()
            .map(|(i, &c)| self.table[i][c])
            .sum())
    }

    /// Inverse of [`rank`](Self::rank); elements are returned ascending.
    pub fn unrank(&self, mut rank: usize) -> Result<Vec<usize>> {
        if rank >= self.count {
            return Err(Error::InvalidParameters(format!("rank {rank} out of range {}", self.count)));
        }
        let mut out = vec![0; self.k];
        let mut hi = self.ground.len();
        for i in (0..self.k).rev() {
            // largest c < hi with C(c, i+1) <= rank
            let mut c = hi - 1;
            while self.table[i][c] > rank {
                c -= 1;
            }
            rank -= self.table[i][c];
            out[i] = self.ground[c];
            hi = c;
        }
        Ok(out)
    }

    /// All subsets in rank order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.count).map(move |r| self.unrank(r).expect("rank in range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
        assert_eq!(binomial_u64(8, 2), Some(28));
        assert_eq!(binomial_u64(200, 100), None);
    }

    #[test]
    fn colex_order_of_pairs() {
        let codec = KSubsetCodec::of_range(4, 2).unwrap();
        let all: Vec<_> = codec.iter().collect();
        assert_eq!(
            all,
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]
        );
    }

    #[test]
    fn omitted_element_is_skipped() {
        let codec = KSubsetCodec::of_range_without(4, &[2], 1).unwrap();
        assert_eq!(codec.len(), 3);
        assert_eq!(codec.rank(&[3]).unwrap(), 1);
        assert!(codec.rank(&[2]).is_err());
    }

    #[test]
    fn empty_subset_codec() {
        let codec = KSubsetCodec::of_range(3, 0).unwrap();
        assert_eq!(codec.len(), 1);
        assert_eq!(codec.rank(&[]).unwrap(), 0);
        assert_eq!(codec.unrank(0).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn rank_rejects_bad_input() {
        let codec = KSubsetCodec::of_range(5, 2).unwrap();
        assert!(codec.rank(&[1]).is_err());
        assert!(codec.rank(&[2, 2]).is_err());
        assert!(codec.unrank(10).is_err());
        let none = KSubsetCodec::of_range(2, 3).unwrap();
        assert!(none.is_empty());
        assert_eq!(none.iter().count(), 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rank_unrank_inverse(n in 0usize..12, k in 0usize..12) {
                prop_assume!(k <= n);
                let codec = KSubsetCodec::of_range(n, k).unwrap();
                let mut prev: Option<Vec<usize>> = None;
                for r in 0..codec.len() {
                    let s = codec.unrank(r).unwrap();
                    prop_assert_eq!(codec.rank(&s).unwrap(), r);
                    if let Some(p) = prev {
                        // colex: compare reversed element lists
                        let a: Vec<_> = p.iter().rev().collect();
                        let b: Vec<_> = s.iter().rev().collect();
                        prop_assert!(a < b);
                    }
                    prev = Some(s);
                }
            }
        }
    }
}
