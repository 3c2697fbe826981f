//! k-covers of a bipartite graph: validity, lopping, basicness and
//! enumeration of all basic k-covers.
//!
//! A basic k-cover is determined by its restriction to `A`: every B-vertex
//! `j` must take `k - min{a_i : i ~ j}`. Enumeration therefore walks the
//! A-side assignments in `{0..k}^A` depth-first and completes the B-side.
//! Under that completion an A-vertex `i` is tight iff it attains the minimum
//! of some neighbour's neighbourhood, which is what the pruning tracks.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::par::{self, Exec};

/// A degree `k` together with one nonnegative value per vertex (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cover {
    pub k: u32,
    pub values: Vec<u32>,
}

impl Cover {
    pub fn new(k: u32, values: Vec<u32>) -> Self {
        Self { k, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    pub fn weight(&self) -> u32 {
        self.values.iter().sum()
    }

    /// Componentwise sum; degrees add. Either summand being the zero vector is
    /// rejected, since covers are nonzero by definition.
    pub fn sum(&self, other: &Cover) -> Result<Cover> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        if self.is_zero() || other.is_zero() {
            return Err(Error::InvalidParameters("covers are nonzero vectors".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(x, y)| x + y).collect();
        Ok(Cover::new(self.k + other.k, values))
    }

    pub fn scale(&self, t: u32) -> Cover {
        Cover::new(self.k * t, self.values.iter().map(|&x| x * t).collect())
    }

    /// Indicator of one side of the bipartition, as a 1-cover (isolated
    /// vertices get 0).
    pub fn side_indicator(g: &BipartiteGraph, side: Side) -> Cover {
        let values = (0..g.n()).map(|v| u32::from(g.side(v) == side && !g.is_isolated(v))).collect();
        Cover::new(1, values)
    }
}

impl fmt::Display for Cover {
    /// `k a_1 a_2 ... a_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k)?;
        for x in &self.values {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

impl FromStr for Cover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums: Vec<u32> = s
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e: std::num::ParseIntError| Error::Parse { line: 1, msg: e.to_string() })?;
        match nums.split_first() {
            Some((&k, rest)) => Ok(Cover::new(k, rest.to_vec())),
            None => Err(Error::Parse { line: 1, msg: "empty cover".into() }),
        }
    }
}

/// All basic k-covers of a graph, sorted lexicographically by value vector.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct CoverSet {
    pub k: u32,
    pub covers: Vec<Cover>,
}

impl CoverSet {
    pub fn count(&self) -> usize {
        self.covers.len()
    }

    pub fn contains(&self, values: &[u32]) -> bool {
        self.covers.binary_search_by(|c| c.values.as_slice().cmp(values)).is_ok()
    }
}

impl Serialize for CoverSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vectors: Vec<&Vec<u32>> = self.covers.iter().map(|c| &c.values).collect();
        let mut st = s.serialize_struct("CoverSet", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("count", &self.covers.len())?;
        st.serialize_field("covers", &vectors)?;
        st.end()
    }
}

fn check_len(g: &BipartiteGraph, c: &Cover) -> Result<()> {
    if c.len() == g.n() {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected: g.n(), found: c.len() })
    }
}

pub fn is_cover(g: &BipartiteGraph, c: &Cover) -> Result<bool> {
    check_len(g, c)?;
    Ok(!c.is_zero() && g.edges().iter().all(|&(u, v)| c.values[u] + c.values[v] >= c.k))
}

/// Vertices at which `c` can be lopped: decrementing there leaves a k-cover.
pub fn lop_positions(g: &BipartiteGraph, c: &Cover) -> Result<Vec<usize>> {
    if !is_cover(g, c)? {
        return Err(Error::NotACover { k: c.k });
    }
    let weight = c.weight();
    Ok((0..g.n())
        .filter(|&i| {
            let x = c.values[i];
            x >= 1 && weight > 1 && g.neighbors(i).iter().all(|&j| x - 1 + c.values[j] >= c.k)
        })
        .collect())
}

/// Basic iff no lopping is possible. Degree 0 is rejected: "basic 0-cover"
/// is not defined.
pub fn is_basic(g: &BipartiteGraph, c: &Cover) -> Result<bool> {
    if c.k == 0 {
        return Err(Error::InvalidParameters("basic 0-covers are not defined".into()));
    }
    Ok(lop_positions(g, c)?.is_empty())
}

/// Outcome of completing an A-side assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Completion {
    Accept(Cover),
    Reject,
}

/// Completes an A-side assignment (aligned with `g.a_vertices()`) by
/// `b_j = k - min{a_i : i ~ j}` and accepts only basic k-covers.
pub fn b_side_completion(g: &BipartiteGraph, a_side: &[u32], k: u32) -> Result<Completion> {
    let a_vertices = g.a_vertices();
    if a_side.len() != a_vertices.len() {
        return Err(Error::LengthMismatch { expected: a_vertices.len(), found: a_side.len() });
    }
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let mut values = vec![0u32; g.n()];
    for (&v, &x) in a_vertices.iter().zip(a_side) {
        values[v] = x;
    }
    for j in g.b_vertices() {
        if let Some(min) = g.neighbors(j).iter().map(|&i| values[i]).min() {
            if min > k {
                return Ok(Completion::Reject);
            }
            values[j] = k - min;
        }
    }
    let c = Cover::new(k, values);
    if is_cover(g, &c)? && is_basic(g, &c)? {
        Ok(Completion::Accept(c))
    } else {
        Ok(Completion::Reject)
    }
}

/// Depth-first walk over A-side assignments with tightness pruning.
struct Walker<'g> {
    g: &'g BipartiteGraph,
    k: u32,
    order: Vec<usize>,
    b_active: Vec<usize>,
    values: Vec<u32>,
    // Current minimum over the assigned part of each vertex's neighbourhood
    // (meaningful for B-vertices); `k + 1` while nothing is assigned.
    nbr_min: Vec<u32>,
    assigned: Vec<bool>,
    trail: Vec<(usize, u32)>,
}

impl<'g> Walker<'g> {
    fn new(g: &'g BipartiteGraph, k: u32) -> Self {
        let mut order: Vec<usize> = g.a_vertices().into_iter().filter(|&v| !g.is_isolated(v)).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let b_active = g.b_vertices().into_iter().filter(|&v| !g.is_isolated(v)).collect();
        Self {
            g,
            k,
            order,
            b_active,
            values: vec![0; g.n()],
            nbr_min: vec![k + 1; g.n()],
            assigned: vec![false; g.n()],
            trail: Vec::new(),
        }
    }

    // Some neighbour's current minimum still equals this vertex's value.
    fn alive(&self, i: usize) -> bool {
        self.g.neighbors(i).iter().any(|&j| self.nbr_min[j] == self.values[i])
    }

    /// Assigns `value` to `order[depth]`; returns false (state already
    /// restored) if the partial assignment is dead.
    fn push(&mut self, depth: usize, value: u32) -> bool {
        let u = self.order[depth];
        let mark = self.trail.len();
        self.values[u] = value;
        self.assigned[u] = true;
        for &j in self.g.neighbors(u) {
            if value < self.nbr_min[j] {
                self.trail.push((j, self.nbr_min[j]));
                self.nbr_min[j] = value;
            }
        }
        let mut ok = self.alive(u);
        if ok {
            'outer: for t in mark..self.trail.len() {
                let j = self.trail[t].0;
                for &i in self.g.neighbors(j) {
                    if i != u && self.assigned[i] && self.values[i] > self.nbr_min[j] && !self.alive(i) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if !ok {
            self.pop(depth, mark);
        }
        ok
    }

    fn pop(&mut self, depth: usize, mark: usize) {
        let u = self.order[depth];
        while self.trail.len() > mark {
            let (j, old) = self.trail.pop().unwrap();
            self.nbr_min[j] = old;
        }
        self.assigned[u] = false;
        self.values[u] = 0;
    }

    fn walk<F: FnMut(&Self)>(&mut self, depth: usize, visit: &mut F) {
        if depth == self.order.len() {
            visit(self);
            return;
        }
        for value in 0..=self.k {
            let mark = self.trail.len();
            if self.push(depth, value) {
                self.walk(depth + 1, visit);
                self.pop(depth, mark);
            }
        }
    }

    /// Runs the subtree where the first vertex in `order` takes `first`.
    fn run_rooted<F: FnMut(&Self)>(&mut self, first: u32, visit: &mut F) {
        if self.order.is_empty() {
            if first == 0 {
                visit(self);
            }
            return;
        }
        let mark = self.trail.len();
        if self.push(0, first) {
            self.walk(1, visit);
            self.pop(0, mark);
        }
    }

    fn full_cover(&self) -> Cover {
        let mut values = self.values.clone();
        for &j in &self.b_active {
            values[j] = self.k - self.nbr_min[j];
        }
        Cover::new(self.k, values)
    }
}

fn check_enumeration_args(g: &BipartiteGraph, k: u32) -> Result<()> {
    g.require_edges()?;
    if k == 0 {
        return Err(Error::InvalidParameters("enumeration requires k >= 1".into()));
    }
    Ok(())
}

pub fn enumerate_basic(g: &BipartiteGraph, k: u32) -> Result<CoverSet> {
    enumerate_basic_with(g, k, Exec::default())
}

/// All basic k-covers. The root branching (value of the first A-vertex) is
/// split across workers; the merged output is sorted, so it does not depend
/// on the execution policy.
pub fn enumerate_basic_with(g: &BipartiteGraph, k: u32, exec: Exec) -> Result<CoverSet> {
    check_enumeration_args(g, k)?;
    let parts = par::map_range(exec, k as usize + 1, |first| {
        let mut walker = Walker::new(g, k);
        let mut out = Vec::new();
        walker.run_rooted(first as u32, &mut |w: &Walker| out.push(w.full_cover()));
        out
    });
    let mut covers: Vec<Cover> = parts.into_iter().flatten().collect();
    covers.sort_unstable_by(|x, y| x.values.cmp(&y.values));
    Ok(CoverSet { k, covers })
}

/// Number of basic k-covers, without materialising them.
pub fn count_basic(g: &BipartiteGraph, k: u32, exec: Exec) -> Result<u64> {
    check_enumeration_args(g, k)?;
    let parts = par::map_range(exec, k as usize + 1, |first| {
        let mut walker = Walker::new(g, k);
        let mut count = 0u64;
        walker.run_rooted(first as u32, &mut |_: &Walker| count += 1);
        count
    });
    Ok(parts.into_iter().sum())
}

/// Splits a basic k-cover into k basic 1-covers by backtracking. Every
/// partial sum of such a decomposition is itself basic, which is used to
/// prune.
pub fn decompose_into_one_covers(g: &BipartiteGraph, c: &Cover) -> Result<Vec<Cover>> {
    if c.k == 0 || !is_cover(g, c)? || !is_basic(g, c)? {
        return Err(Error::NotBasic);
    }
    let ones = enumerate_basic(g, 1)?.covers;
    let mut failed: HashSet<Vec<u32>> = HashSet::new();
    let mut parts = Vec::with_capacity(c.k as usize);

    fn rec(
        g: &BipartiteGraph,
        rest: &Cover,
        ones: &[Cover],
        failed: &mut HashSet<Vec<u32>>,
        parts: &mut Vec<Cover>,
    ) -> bool {
        if rest.k == 1 {
            if ones.iter().any(|o| o.values == rest.values) {
                parts.push(rest.clone());
                return true;
            }
            return false;
        }
        if failed.contains(&rest.values) {
            return false;
        }
        for one in ones {
            if one.values.iter().zip(&rest.values).any(|(x, y)| x > y) {
                continue;
            }
            let values: Vec<u32> = rest.values.iter().zip(&one.values).map(|(y, x)| y - x).collect();
            let next = Cover::new(rest.k - 1, values);
            if is_cover(g, &next).unwrap_or(false) && is_basic(g, &next).unwrap_or(false) {
                parts.push(one.clone());
                if rec(g, &next, ones, failed, parts) {
                    return true;
                }
                parts.pop();
            }
        }
        failed.insert(rest.values.clone());
        false
    }

    if rec(g, c, &ones, &mut failed, &mut parts) {
        Ok(parts)
    } else {
        Err(Error::DecompositionNotFound(format!("cover `{c}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, path, regular};

    fn hex() -> BipartiteGraph {
        cycle(6)
    }

    fn cov(k: u32, v: &[u32]) -> Cover {
        Cover::new(k, v.to_vec())
    }

    #[test]
    fn cover_checks_on_hexagon() {
        let g = hex();
        assert!(is_cover(&g, &cov(1, &[1, 0, 1, 1, 0, 1])).unwrap());
        assert!(!is_cover(&g, &cov(1, &[1, 0, 1, 0, 0, 1])).unwrap());
        assert_eq!(
            is_cover(&g, &cov(1, &[1, 0])).unwrap_err(),
            Error::LengthMismatch { expected: 6, found: 2 }
        );
        let edge = path(2);
        assert!(is_cover(&edge, &cov(5, &[0, 5])).unwrap());
    }

    #[test]
    fn lopping_examples() {
        let g = hex();
        assert!(lop_positions(&g, &cov(2, &[2, 1, 1, 2, 1, 1])).unwrap().contains(&0));
        assert!(lop_positions(&g, &cov(1, &[1, 0, 1, 1, 0, 1])).unwrap().is_empty());
        assert_eq!(lop_positions(&path(2), &cov(1, &[1, 1])).unwrap(), vec![0, 1]);
        assert!(matches!(lop_positions(&g, &cov(1, &[0; 6])), Err(Error::NotACover { .. })));
    }

    #[test]
    fn basic_examples() {
        let g = hex();
        assert!(is_basic(&g, &cov(1, &[1, 1, 0, 1, 1, 0])).unwrap());
        assert!(!is_basic(&g, &cov(2, &[2, 1, 1, 2, 1, 1])).unwrap());
        for k in 1..6 {
            assert!(is_basic(&path(2), &cov(k, &[0, k])).unwrap());
        }
        assert!(is_basic(&g, &cov(0, &[1, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn isolated_positive_entry_is_loppable() {
        let g = BipartiteGraph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(lop_positions(&g, &cov(1, &[1, 0, 1])).unwrap(), vec![2]);
        // Single positive isolated entry on an edgeless graph: lopping would
        // produce the zero vector.
        let h = BipartiteGraph::from_edges(1, &[]).unwrap();
        assert!(lop_positions(&h, &cov(0, &[1])).unwrap().is_empty());
    }

    #[test]
    fn sums() {
        let a = cov(1, &[1, 0, 1, 1, 0, 1]);
        let b = cov(1, &[1, 1, 0, 1, 1, 0]);
        assert_eq!(a.sum(&b).unwrap(), cov(2, &[2, 1, 1, 2, 1, 1]));
        assert_eq!(cov(1, &[1, 0]).sum(&cov(1, &[0, 1])).unwrap(), cov(2, &[1, 1]));
        assert!(a.sum(&cov(0, &[0; 6])).is_err());
        assert!(a.sum(&cov(1, &[1])).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_basic(&hex(), 1).unwrap().count(), 5);
        for (a, b) in [(1, 1), (2, 3), (3, 4)] {
            let set = enumerate_basic(&complete_bipartite(a, b), 1).unwrap();
            assert_eq!(set.count(), 2);
        }
        for a in 2..=5 {
            assert_eq!(enumerate_basic(&regular(a), 1).unwrap().count(), a + 2);
        }
    }

    #[test]
    fn enumeration_rejects_bad_input() {
        assert_eq!(enumerate_basic(&BipartiteGraph::from_edges(2, &[]).unwrap(), 1).unwrap_err(), Error::NoEdges);
        assert!(enumerate_basic(&hex(), 0).is_err());
    }

    #[test]
    fn isolated_vertices_get_zero() {
        let g = BipartiteGraph::from_edges(4, &[(1, 2)]).unwrap();
        let set = enumerate_basic(&g, 2).unwrap();
        assert_eq!(set.count(), 3);
        assert!(set.covers.iter().all(|c| c.values[2] == 0 && c.values[3] == 0));
    }

    #[test]
    fn completion_examples() {
        let g = hex();
        // A = {1,3,5} (0-based 0,2,4).
        let Completion::Accept(c) = b_side_completion(&g, &[1, 0, 1], 1).unwrap() else { panic!() };
        assert_eq!(c.values, vec![1, 1, 0, 1, 1, 0]);
        let Completion::Accept(c) = b_side_completion(&path(2), &[1], 3).unwrap() else { panic!() };
        assert_eq!(c.values, vec![1, 2]);
        let Completion::Accept(c) = b_side_completion(&path(4), &[0, 0], 1).unwrap() else { panic!() };
        assert_eq!(c.values, vec![0, 1, 0, 1]);
        assert_eq!(b_side_completion(&path(2), &[4], 3).unwrap(), Completion::Reject);
    }

    #[test]
    fn completion_matches_enumeration_on_hexagon() {
        let g = hex();
        let mut accepted = Vec::new();
        for mask in 0..8u32 {
            let a_side: Vec<u32> = (0..3).map(|i| mask >> i & 1).collect();
            if let Completion::Accept(c) = b_side_completion(&g, &a_side, 1).unwrap() {
                accepted.push(c);
            }
        }
        accepted.sort();
        assert_eq!(accepted, enumerate_basic(&g, 1).unwrap().covers);
    }

    #[test]
    fn decompositions() {
        let g = hex();
        let one = cov(1, &[1, 0, 1, 1, 0, 1]);
        assert_eq!(decompose_into_one_covers(&g, &one).unwrap(), vec![one.clone()]);
        let alt = cov(1, &[1, 0, 1, 0, 1, 0]);
        assert_eq!(decompose_into_one_covers(&g, &alt.scale(2)).unwrap(), vec![alt.clone(), alt]);
        let p5 = path(5);
        for c in enumerate_basic(&p5, 3).unwrap().covers {
            let parts = decompose_into_one_covers(&p5, &c).unwrap();
            assert_eq!(parts.len(), 3);
            let total = parts[1..].iter().fold(parts[0].clone(), |acc, p| acc.sum(p).unwrap());
            assert_eq!(total, c);
        }
        assert_eq!(decompose_into_one_covers(&g, &cov(2, &[2, 1, 1, 2, 1, 1])).unwrap_err(), Error::NotBasic);
    }

    #[test]
    fn cover_text_and_json() {
        let c: Cover = "2 1 0 1".parse().unwrap();
        assert_eq!(c, cov(2, &[1, 0, 1]));
        assert_eq!(c.to_string(), "2 1 0 1");
        let set = enumerate_basic(&path(2), 1).unwrap();
        let json = serde_json::to_string(&set).unwrap();
        assert_eq!(json, r#"{"k":1,"count":2,"covers":[[0,1],[1,0]]}"#);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = cycle(8);
        for k in 1..=4 {
            let s = enumerate_basic_with(&g, k, Exec::Sequential).unwrap();
            let p = enumerate_basic_with(&g, k, Exec::Parallel).unwrap();
            assert_eq!(s, p);
            assert_eq!(count_basic(&g, k, Exec::Sequential).unwrap(), s.count() as u64);
        }
    }
}
