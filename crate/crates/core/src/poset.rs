//! Finite posets on `{0, .., m-1}`.

use crate::error::{Error, Result};

/// A partial order stored as its full (reflexive, transitive) relation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Validates a relation matrix: `leq[i][j]` means `p_i <= p_j`.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let m = leq.len();
        if leq.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidPoset("relation matrix is not square".into()));
        }
        for i in 0..m {
            if !leq[i][i] {
                return Err(Error::InvalidPoset(format!("not reflexive at {}", i + 1)));
            }
            for j in 0..m {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset(format!("not antisymmetric at ({}, {})", i + 1, j + 1)));
                }
                for k in 0..m {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(Self { leq })
    }

    /// Transitive-reflexive closure of the given 0-based strict relations.
    pub fn from_relations(m: usize, less: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; m]; m];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in less {
            if i >= m || j >= m {
                return Err(Error::InvalidPoset(format!("element out of range in ({}, {})", i + 1, j + 1)));
            }
            leq[i][j] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if leq[i][k] {
                    for j in 0..m {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::new(leq)
    }

    pub fn antichain(m: usize) -> Self {
        Self::from_relations(m, &[]).unwrap()
    }

    pub fn chain(m: usize) -> Self {
        let rel: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
        Self::from_relations(m, &rel).unwrap()
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// `j` covers `i`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j] && (0..self.len()).all(|k| k == i || k == j || !(self.leq[i][k] && self.leq[k][j]))
    }

    /// Element counts of all maximal chains, as a sorted set.
    pub fn maximal_chain_lengths(&self) -> Vec<usize> {
        let m = self.len();
        let minimal: Vec<usize> = (0..m).filter(|&j| (0..m).all(|i| i == j || !self.leq[i][j])).collect();
        let mut out = std::collections::BTreeSet::new();
        let mut stack: Vec<(usize, usize)> = minimal.iter().map(|&x| (x, 1)).collect();
        while let Some((x, len)) = stack.pop() {
            let ups: Vec<usize> = (0..m).filter(|&y| self.covers(x, y)).collect();
            if ups.is_empty() {
                out.insert(len);
            }
            stack.extend(ups.into_iter().map(|y| (y, len + 1)));
        }
        out.into_iter().collect()
    }

    /// Every labelled poset on `m` elements.
    pub fn all_labelled(m: usize) -> Vec<FinitePoset> {
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let mut leq = vec![vec![false; m]; m];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    leq[i][j] = true;
                }
            }
            if let Ok(p) = Self::new(leq) {
                out.push(p);
            }
        }
        out
    }
}
