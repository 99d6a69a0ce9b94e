//! Finite posets: validation, Hasse data, the standard constructions, linear
//! extensions, filters and ideals.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(&'static str),
    #[error("{requested} elements exceed the cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// A finite poset on elements `0..n`, as the full order relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    pub fn new(n: usize, leq: Vec<Vec<bool>>) -> Result<FinitePoset, PosetError> {
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(PosetError::NotAPartialOrder("relation matrix has wrong shape"));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(PosetError::NotAPartialOrder("not reflexive"));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(PosetError::NotAPartialOrder("not antisymmetric"));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(PosetError::NotAPartialOrder("not transitive"));
                    }
                }
            }
        }
        Ok(FinitePoset { n, leq })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// The single-element poset `1`.
    pub fn singleton() -> FinitePoset {
        FinitePoset {
            n: 1,
            leq: vec![vec![true]],
        }
    }

    /// A chain of n elements: the n-fold ordinal sum of the singleton.
    pub fn chain(n: usize) -> FinitePoset {
        let mut p = FinitePoset::singleton();
        for _ in 1..n {
            p = p.ordinal_sum(&FinitePoset::singleton());
        }
        p
    }

    pub fn antichain(n: usize) -> FinitePoset {
        let mut p = FinitePoset::singleton();
        for _ in 1..n {
            p = p.disjoint_union(&FinitePoset::singleton());
        }
        p
    }

    /// Subsets of {1..n} ordered by inclusion.
    pub fn boolean_lattice(n: usize) -> FinitePoset {
        let size = 1usize << n;
        let leq = (0..size)
            .map(|a| (0..size).map(|b| a & b == a).collect())
            .collect();
        FinitePoset { n: size, leq }
    }

    pub fn disjoint_union(&self, other: &FinitePoset) -> FinitePoset {
        let n = self.n + other.n;
        let mut leq = vec![vec![false; n]; n];
        for i in 0..self.n {
            for j in 0..self.n {
                leq[i][j] = self.leq[i][j];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                leq[self.n + i][self.n + j] = other.leq[i][j];
            }
        }
        FinitePoset { n, leq }
    }

    /// Everything in `self` is below everything in `other`.
    pub fn ordinal_sum(&self, other: &FinitePoset) -> FinitePoset {
        let mut p = self.disjoint_union(other);
        for i in 0..self.n {
            for j in 0..other.n {
                p.leq[i][self.n + j] = true;
            }
        }
        p
    }

    /// Componentwise order on pairs.
    pub fn cartesian_product(&self, other: &FinitePoset) -> FinitePoset {
        let n = self.n * other.n;
        let idx = |a: usize, b: usize| a * other.n + b;
        let mut leq = vec![vec![false; n]; n];
        for a1 in 0..self.n {
            for b1 in 0..other.n {
                for a2 in 0..self.n {
                    for b2 in 0..other.n {
                        leq[idx(a1, b1)][idx(a2, b2)] =
                            self.leq[a1][a2] && other.leq[b1][b2];
                    }
                }
            }
        }
        FinitePoset { n, leq }
    }

    /// Hasse edges (a, b) with b covering a.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) && !(0..self.n).any(|z| self.lt(a, z) && self.lt(z, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Number of linear extensions, by dynamic programming over down-closed
    /// subsets. Capped at 20 elements.
    pub fn linear_extension_count(&self) -> Result<u128, PosetError> {
        const CAP: usize = 20;
        if self.n > CAP {
            return Err(PosetError::CapExceeded { requested: self.n, cap: CAP });
        }
        let full = (1u32 << self.n) - 1;
        let mut dp = vec![0u128; (full + 1) as usize];
        dp[0] = 1;
        for mask in 0..=full {
            if dp[mask as usize] == 0 {
                continue;
            }
            for next in 0..self.n {
                if mask >> next & 1 == 1 {
                    continue;
                }
                // next can come after mask iff everything below it is in mask
                let ok = (0..self.n).all(|z| !self.lt(z, next) || mask >> z & 1 == 1);
                if ok {
                    dp[(mask | 1 << next) as usize] += dp[mask as usize];
                }
            }
        }
        Ok(dp[full as usize])
    }

    /// F_P(Y) = { x : x > y for all y in Y } (strict).
    pub fn filter(&self, ys: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| ys.iter().all(|&y| self.lt(y, x)))
            .collect()
    }

    /// I_P(Y) = { x : x < y for all y in Y } (strict).
    pub fn ideal(&self, ys: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| ys.iter().all(|&y| self.lt(x, y)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_hasse_has_12_edges() {
        let b3 = FinitePoset::boolean_lattice(3);
        assert_eq!(b3.covers().len(), 12);
    }

    #[test]
    fn linear_extensions() {
        assert_eq!(FinitePoset::chain(5).linear_extension_count().unwrap(), 1);
        assert_eq!(
            FinitePoset::antichain(5).linear_extension_count().unwrap(),
            120
        );
        // ordinal sum stacks: 1 + 1 over an antichain of 2
        let v = FinitePoset::antichain(2).ordinal_sum(&FinitePoset::singleton());
        assert_eq!(v.linear_extension_count().unwrap(), 2);
    }

    #[test]
    fn chain_is_iterated_ordinal_sum() {
        let c = FinitePoset::chain(4);
        assert!(c.lt(0, 3));
        assert_eq!(c.covers(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn filters_and_ideals_are_strict() {
        let c = FinitePoset::chain(4);
        assert_eq!(c.filter(&[1]), vec![2, 3]);
        assert_eq!(c.ideal(&[2]), vec![0, 1]);
        let b3 = FinitePoset::boolean_lattice(2);
        // F({ {1} , {2} }) = { {1,2} }
        assert_eq!(b3.filter(&[1, 2]), vec![3]);
    }

    #[test]
    fn invalid_relation_rejected() {
        let bad = FinitePoset::new(2, vec![vec![true, true], vec![true, true]]);
        assert_eq!(
            bad,
            Err(PosetError::NotAPartialOrder("not antisymmetric"))
        );
    }

    #[test]
    fn product_of_chains() {
        let c2 = FinitePoset::chain(2);
        let grid = c2.cartesian_product(&c2);
        // the 2x2 grid poset is B_2: 4 covers, 2 linear extensions
        assert_eq!(grid.covers().len(), 4);
        assert_eq!(grid.linear_extension_count().unwrap(), 2);
    }
}
