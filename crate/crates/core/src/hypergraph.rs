//! Weighted hypergraphs: k-covers with face sums at least `k * w(f)`,
//! exhaustive enumeration of basic covers inside a box, and the growth
//! degree of the basic-cover count.
//!
//! An entry above `k * max{w(f) : i in f}` leaves every face through `i`
//! slack, so it can be lopped; basic covers therefore live in the box
//! `0 <= a_i <= k * max w(f)`. Vertices in no face are fixed at 0.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::covers::{Cover, CoverSet};
use crate::error::{Error, Result};
use crate::graph::{strip_comment, BipartiteGraph};
use crate::hilbert::stabilize;
use crate::par::{self, Exec};

/// Default cap on the enumeration box volume.
pub const DEFAULT_BOX_BUDGET: u128 = 100_000_000;
/// Largest quasi-period tried by [`degree_bounds_check`].
pub const MAX_PERIOD: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedHypergraph {
    n: usize,
    /// Sorted, 0-based.
    faces: Vec<Vec<usize>>,
    weights: Vec<u32>,
}

impl WeightedHypergraph {
    /// Faces use 1-based vertex ids.
    pub fn new(n: usize, faces: &[Vec<usize>], weights: &[u32]) -> Result<Self> {
        if faces.len() != weights.len() {
            return Err(Error::LengthMismatch { expected: faces.len(), found: weights.len() });
        }
        let mut fs = Vec::with_capacity(faces.len());
        for (f, &w) in faces.iter().zip(weights) {
            if f.is_empty() {
                return Err(Error::InvalidHypergraph("empty face".into()));
            }
            if w == 0 {
                return Err(Error::InvalidHypergraph(format!("face {f:?} has weight 0")));
            }
            let mut g = Vec::with_capacity(f.len());
            for &v in f {
                if v == 0 || v > n {
                    return Err(Error::InvalidVertexId { vertex: v, n });
                }
                g.push(v - 1);
            }
            g.sort_unstable();
            if g.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::InvalidHypergraph(format!("face {f:?} repeats a vertex")));
            }
            fs.push(g);
        }
        for (x, f) in fs.iter().enumerate() {
            for (y, h) in fs.iter().enumerate() {
                if x != y && f.iter().all(|v| h.binary_search(v).is_ok()) {
                    return Err(Error::InvalidHypergraph(format!(
                        "face {:?} is contained in face {:?}",
                        one_based(f),
                        one_based(h)
                    )));
                }
            }
        }
        Ok(Self { n, faces: fs, weights: weights.to_vec() })
    }

    /// Edges become faces of weight 1.
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        Self { n: g.n(), faces: g.edges().iter().map(|&(i, j)| vec![i, j]).collect(), weights: vec![1; g.num_edges()] }
    }

    /// One face on all `n` vertices, weight 1.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, &[(1..=n).collect()], &[1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based faces.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Largest face cardinality (0 without faces).
    pub fn max_face_size(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.faces.iter().any(|f| f.binary_search(&v).is_ok())
    }

    /// `k * max{w(f) : v in f}`, or 0 for a vertex in no face.
    pub fn entry_bound(&self, v: usize, k: u32) -> u32 {
        self.faces
            .iter()
            .zip(&self.weights)
            .filter(|(f, _)| f.binary_search(&v).is_ok())
            .map(|(_, &w)| k * w)
            .max()
            .unwrap_or(0)
    }

    /// `n <count>` then `f <weight> <v1> <v2> ...`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut faces = Vec::new();
        let mut weights = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let mut tok = line.split_whitespace();
            let head = tok.next().unwrap();
            let nums: Vec<usize> = tok
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e: std::num::ParseIntError| Error::Parse { line: line_no, msg: e.to_string() })?;
            match (head, n) {
                ("n", None) if nums.len() == 1 => n = Some(nums[0]),
                ("f", Some(_)) if nums.len() >= 2 => {
                    weights.push(u32::try_from(nums[0]).map_err(|e| Error::Parse { line: line_no, msg: e.to_string() })?);
                    faces.push(nums[1..].to_vec());
                }
                ("f", None) => return Err(Error::Parse { line: line_no, msg: "`f` before `n`".into() }),
                _ => return Err(Error::Parse { line: line_no, msg: format!("unexpected line `{line}`") }),
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing `n` line".into() })?;
        Self::new(n, &faces, &weights)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (f, w) in self.faces.iter().zip(&self.weights) {
            write!(s, "f {w}").unwrap();
            for v in f {
                write!(s, " {}", v + 1).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

fn one_based(f: &[usize]) -> Vec<usize> {
    f.iter().map(|v| v + 1).collect()
}

fn check_len(h: &WeightedHypergraph, a: &[u32]) -> Result<()> {
    if a.len() == h.n {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected: h.n, found: a.len() })
    }
}

fn face_sum(f: &[usize], a: &[u32]) -> u64 {
    f.iter().map(|&v| a[v] as u64).sum()
}

pub fn is_k_cover(h: &WeightedHypergraph, a: &[u32], k: u32) -> Result<bool> {
    check_len(h, a)?;
    Ok(a.iter().any(|&x| x > 0)
        && h.faces.iter().zip(&h.weights).all(|(f, &w)| face_sum(f, a) >= k as u64 * w as u64))
}

/// Positions whose entry can be decremented with the result still a k-cover.
pub fn lop_positions_h(h: &WeightedHypergraph, a: &[u32], k: u32) -> Result<Vec<usize>> {
    if !is_k_cover(h, a, k)? {
        return Err(Error::NotACover { k });
    }
    let weight: u64 = a.iter().map(|&x| x as u64).sum();
    Ok((0..h.n)
        .filter(|&i| {
            a[i] >= 1
                && weight > 1
                && h.faces
                    .iter()
                    .zip(&h.weights)
                    .filter(|(f, _)| f.binary_search(&i).is_ok())
                    .all(|(f, &w)| face_sum(f, a) > k as u64 * w as u64)
        })
        .collect())
}

pub fn is_basic_h(h: &WeightedHypergraph, a: &[u32], k: u32) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameters("basic 0-covers are not defined".into()));
    }
    Ok(lop_positions_h(h, a, k)?.is_empty())
}

/// Product of `entry_bound + 1` over the covered vertices.
pub fn box_volume(h: &WeightedHypergraph, k: u32) -> u128 {
    (0..h.n).filter(|&v| h.is_covered(v)).map(|v| h.entry_bound(v, k) as u128 + 1).product()
}

pub fn enumerate_basic_h(h: &WeightedHypergraph, k: u32) -> Result<CoverSet> {
    enumerate_basic_h_with(h, k, Exec::default(), DEFAULT_BOX_BUDGET)
}

pub fn enumerate_basic_h_with(h: &WeightedHypergraph, k: u32, exec: Exec, budget: u128) -> Result<CoverSet> {
    if h.faces.is_empty() {
        return Err(Error::NoFaces);
    }
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    let volume = box_volume(h, k);
    if volume > budget {
        return Err(Error::Budget { what: format!("box for k = {k}"), needed: volume, cap: budget });
    }
    let walker = BoxWalker::new(h, k);
    let first = walker.order[0];
    let roots: Vec<u32> = (0..=walker.upper[first]).collect();
    let parts = par::map(exec, &roots, |&x| {
        let mut st = walker.state();
        let mut out = Vec::new();
        walker.assign(0, x, &mut st, &mut out);
        out
    });
    let mut covers: Vec<Cover> = parts.into_iter().flatten().map(|v| Cover::new(k, v)).collect();
    covers.sort_by(|x, y| x.values.cmp(&y.values));
    Ok(CoverSet { k, covers })
}

// Depth-first search over the covered vertices in id order. A face is
// checked when its last vertex is placed; a vertex is checked for a tight
// face once all faces through it are complete.
struct BoxWalker {
    n: usize,
    order: Vec<usize>,
    upper: Vec<u32>,
    need: Vec<u64>,
    faces_of: Vec<Vec<usize>>,
    /// Faces completed at step `t`.
    closing_faces: Vec<Vec<usize>>,
    /// Vertices whose faces are all complete at step `t`.
    closing_vertices: Vec<Vec<usize>>,
    /// Sum of `upper` over the members of face `f` placed after step `t`.
    rest: Vec<Vec<u64>>,
}

struct WalkState {
    values: Vec<u32>,
    sums: Vec<u64>,
}

impl BoxWalker {
    fn new(h: &WeightedHypergraph, k: u32) -> Self {
        let order: Vec<usize> = (0..h.n).filter(|&v| h.is_covered(v)).collect();
        let step_of: Vec<usize> = {
            let mut s = vec![usize::MAX; h.n];
            for (t, &v) in order.iter().enumerate() {
                s[v] = t;
            }
            s
        };
        let upper: Vec<u32> = (0..h.n).map(|v| h.entry_bound(v, k)).collect();
        let mut faces_of = vec![Vec::new(); h.n];
        let mut closing_faces = vec![Vec::new(); order.len()];
        let mut face_end = Vec::with_capacity(h.faces.len());
        let mut rest = Vec::with_capacity(h.faces.len());
        for (fi, f) in h.faces.iter().enumerate() {
            for &v in f {
                faces_of[v].push(fi);
            }
            let end = f.iter().map(|&v| step_of[v]).max().unwrap();
            closing_faces[end].push(fi);
            face_end.push(end);
            rest.push(
                (0..order.len())
                    .map(|t| f.iter().filter(|&&v| step_of[v] > t).map(|&v| upper[v] as u64).sum())
                    .collect(),
            );
        }
        let mut closing_vertices = vec![Vec::new(); order.len()];
        for &v in &order {
            let end = faces_of[v].iter().map(|&fi| face_end[fi]).max().unwrap();
            closing_vertices[end].push(v);
        }
        let need = h.weights.iter().map(|&w| k as u64 * w as u64).collect();
        Self { n: h.n, order, upper, need, faces_of, closing_faces, closing_vertices, rest }
    }

    fn state(&self) -> WalkState {
        WalkState { values: vec![0; self.n], sums: vec![0; self.need.len()] }
    }

    fn assign(&self, t: usize, x: u32, st: &mut WalkState, out: &mut Vec<Vec<u32>>) {
        let v = self.order[t];
        st.values[v] = x;
        for &fi in &self.faces_of[v] {
            st.sums[fi] += x as u64;
        }
        if self.feasible(t, v, st) {
            if t + 1 == self.order.len() {
                out.push(st.values.clone());
            } else {
                let next = self.order[t + 1];
                for y in 0..=self.upper[next] {
                    self.assign(t + 1, y, st, out);
                }
            }
        }
        for &fi in &self.faces_of[v] {
            st.sums[fi] -= x as u64;
        }
        st.values[v] = 0;
    }

    fn feasible(&self, t: usize, v: usize, st: &WalkState) -> bool {
        self.faces_of[v].iter().all(|&fi| st.sums[fi] + self.rest[fi][t] >= self.need[fi])
            && self.closing_faces[t].iter().all(|&fi| st.sums[fi] >= self.need[fi])
            && self.closing_vertices[t]
                .iter()
                .all(|&u| st.values[u] == 0 || self.faces_of[u].iter().any(|&fi| st.sums[fi] == self.need[fi]))
    }
}

/// Growth of the basic-cover count against the bounds
/// `M - 1 <= deg <= (n - 1) - floor((n - 1) / M)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBoundsReport {
    pub n: usize,
    pub max_face_size: usize,
    /// `counts[k-1]` basic k-covers for `k = 1..=kmax`.
    pub counts: Vec<u64>,
    /// Smallest period whose residue classes all stabilise at one degree.
    pub period: usize,
    pub degree: u32,
    /// Estimate only.
    pub dim_estimate: u32,
    pub lower: u32,
    pub upper: u32,
    pub within_bounds: bool,
}

pub fn degree_bounds(h: &WeightedHypergraph) -> (u32, u32) {
    let (n, m) = (h.n as u32, h.max_face_size().max(1) as u32);
    (m - 1, (n - 1) - (n - 1) / m)
}

pub fn hyper_counts(h: &WeightedHypergraph, kmax: u32, exec: Exec, budget: u128) -> Result<Vec<u64>> {
    (1..=kmax).map(|k| Ok(enumerate_basic_h_with(h, k, exec, budget)?.count() as u64)).collect()
}

/// Tries periods `1..=MAX_PERIOD` and takes the first one whose residue
/// classes of the count sequence all stabilise with a common degree.
pub fn estimate_degree(counts: &[u64], window: usize) -> Option<(usize, u32)> {
    let seq: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    for period in 1..=MAX_PERIOD {
        let degrees: Option<Vec<usize>> = (0..period)
            .map(|r| {
                let class: Vec<i128> = seq.iter().skip(r).step_by(period).copied().collect();
                stabilize(&class, window).map(|s| s.degree)
            })
            .collect();
        if let Some(d) = degrees {
            if d.windows(2).all(|w| w[0] == w[1]) {
                return Some((period, d[0] as u32));
            }
        }
    }
    None
}

pub fn degree_bounds_check(h: &WeightedHypergraph, kmax: u32, window: usize) -> Result<DegreeBoundsReport> {
    degree_bounds_check_with(h, kmax, window, Exec::default(), DEFAULT_BOX_BUDGET)
}

pub fn degree_bounds_check_with(
    h: &WeightedHypergraph,
    kmax: u32,
    window: usize,
    exec: Exec,
    budget: u128,
) -> Result<DegreeBoundsReport> {
    if kmax == 0 {
        return Err(Error::InvalidParameters("kmax must be at least 1".into()));
    }
    let counts = hyper_counts(h, kmax, exec, budget)?;
    let (lower, upper) = degree_bounds(h);
    let (period, degree) = estimate_degree(&counts, window).ok_or(Error::Unstable { kmax, lower, upper })?;
    Ok(DegreeBoundsReport {
        n: h.n,
        max_face_size: h.max_face_size(),
        counts,
        period,
        degree,
        dim_estimate: degree + 1,
        lower,
        upper,
        within_bounds: lower <= degree && degree <= upper,
    })
}

/// Random antichain on `n` vertices: up to `tries` candidate faces of size
/// 1..=max_size, each kept only if incomparable with those already kept.
/// Weights are drawn from `1..=max_weight`.
pub fn random_antichain(n: usize, max_size: usize, tries: usize, max_weight: u32, seed: u64) -> Result<WeightedHypergraph> {
    if n == 0 || max_size == 0 || max_weight == 0 {
        return Err(Error::InvalidParameters("n, max_size and max_weight must be positive".into()));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for _ in 0..tries.max(1) {
        let size = rng.random_range(1..=max_size.min(n));
        let mut f: Vec<usize> = rand::seq::index::sample(&mut rng, n, size).into_iter().map(|v| v + 1).collect();
        f.sort_unstable();
        let incomparable = |g: &Vec<usize>| !f.iter().all(|v| g.contains(v)) && !g.iter().all(|v| f.contains(v));
        if faces.iter().all(incomparable) {
            faces.push(f);
        }
    }
    let weights: Vec<u32> = faces.iter().map(|_| rng.random_range(1..=max_weight)).collect();
    WeightedHypergraph::new(n, &faces, &weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{enumerate_basic, is_cover};
    use crate::generate::{complete_bipartite, cycle, path};
    use crate::hilbert::hilbert_counts;

    #[test]
    fn validation() {
        assert!(WeightedHypergraph::new(3, &[vec![1, 2], vec![1, 2, 3]], &[1, 1]).is_err());
        assert!(WeightedHypergraph::new(3, &[vec![1, 2], vec![2, 1]], &[1, 1]).is_err());
        assert!(WeightedHypergraph::new(3, &[vec![1, 2]], &[0]).is_err());
        assert!(WeightedHypergraph::new(3, &[vec![]], &[1]).is_err());
        assert!(WeightedHypergraph::new(3, &[vec![4]], &[1]).is_err());
        assert!(WeightedHypergraph::new(3, &[vec![1, 1]], &[1]).is_err());
        let h = WeightedHypergraph::new(3, &[vec![1, 2], vec![2, 3]], &[1, 2]).unwrap();
        assert_eq!(h.max_face_size(), 2);
        assert_eq!(WeightedHypergraph::parse(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn parse_format() {
        let h = WeightedHypergraph::parse("# tri\nn 3\nf 1 1 2 3 # face\n").unwrap();
        assert_eq!(h.faces(), &[vec![0, 1, 2]]);
        assert!(WeightedHypergraph::parse("f 1 1\n").is_err());
        assert!(WeightedHypergraph::parse("n 2\nf 1\n").is_err());
    }

    #[test]
    fn k_cover_examples() {
        let h = WeightedHypergraph::new(3, &[vec![1, 2, 3]], &[1]).unwrap();
        assert!(is_k_cover(&h, &[2, 0, 0], 2).unwrap());
        assert!(!is_k_cover(&h, &[1, 0, 0], 2).unwrap());
        assert_eq!(is_k_cover(&h, &[1, 0], 1).unwrap_err(), Error::LengthMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn enumeration_examples() {
        let h = WeightedHypergraph::new(2, &[vec![1, 2]], &[3]).unwrap();
        let got: Vec<Vec<u32>> = enumerate_basic_h(&h, 1).unwrap().covers.into_iter().map(|c| c.values).collect();
        assert_eq!(got, vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);
        let h = WeightedHypergraph::new(1, &[vec![1]], &[2]).unwrap();
        let got: Vec<Vec<u32>> = enumerate_basic_h(&h, 2).unwrap().covers.into_iter().map(|c| c.values).collect();
        assert_eq!(got, vec![vec![4]]);
        let empty = WeightedHypergraph::new(2, &[], &[]).unwrap();
        assert_eq!(enumerate_basic_h(&empty, 1).unwrap_err(), Error::NoFaces);
    }

    #[test]
    fn uncovered_vertices_stay_zero() {
        let h = WeightedHypergraph::new(3, &[vec![1, 3]], &[1]).unwrap();
        for c in enumerate_basic_h(&h, 2).unwrap().covers {
            assert_eq!(c.values[1], 0);
        }
    }

    #[test]
    fn graph_specialisation() {
        for g in [cycle(6), path(5), complete_bipartite(2, 3)] {
            let h = WeightedHypergraph::from_graph(&g);
            for k in 1..=4 {
                assert_eq!(enumerate_basic_h(&h, k).unwrap(), enumerate_basic(&g, k).unwrap());
            }
            let counts = hyper_counts(&h, 6, Exec::Sequential, DEFAULT_BOX_BUDGET).unwrap();
            assert_eq!(counts, hilbert_counts(&g, 6, Exec::Sequential).unwrap());
        }
    }

    #[test]
    fn graph_cover_predicates_agree() {
        let g = cycle(8);
        let h = WeightedHypergraph::from_graph(&g);
        let mut rng = SplitMix64::seed_from_u64(11);
        for _ in 0..50 {
            let v: Vec<u32> = (0..8).map(|_| rng.random_range(0..3)).collect();
            let k = rng.random_range(1..3);
            assert_eq!(is_k_cover(&h, &v, k).unwrap(), is_cover(&g, &Cover::new(k, v.clone())).unwrap());
        }
    }

    #[test]
    fn box_is_sound() {
        let h = WeightedHypergraph::new(4, &[vec![1, 2], vec![2, 3, 4], vec![1, 4]], &[2, 1, 1]).unwrap();
        for k in 1..=3 {
            let got = enumerate_basic_h(&h, k).unwrap();
            for c in &got.covers {
                assert!(is_basic_h(&h, &c.values, k).unwrap());
                for v in 0..4 {
                    assert!(c.values[v] <= h.entry_bound(v, k));
                }
            }
            // Brute force over the box widened by one.
            let side = (0..4).map(|v| h.entry_bound(v, k) + 2).collect::<Vec<_>>();
            let mut count = 0;
            let mut a = vec![0u32; 4];
            loop {
                if is_k_cover(&h, &a, k).unwrap() && is_basic_h(&h, &a, k).unwrap() {
                    assert!(got.contains(&a));
                    count += 1;
                }
                let Some(p) = (0..4).find(|&p| a[p] + 1 < side[p]) else { break };
                a[p] += 1;
                a[..p].iter_mut().for_each(|x| *x = 0);
            }
            assert_eq!(count, got.count());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let h = WeightedHypergraph::simplex(4).unwrap();
        let err = enumerate_basic_h_with(&h, 100, Exec::Sequential, 1000).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn simplex_and_point() {
        for n in 1..=4usize {
            let r = degree_bounds_check(&WeightedHypergraph::simplex(n).unwrap(), 10, 3).unwrap();
            assert_eq!((r.degree, r.lower, r.upper), (n as u32 - 1, n as u32 - 1, n as u32 - 1));
            assert!(r.within_bounds);
        }
        let r = degree_bounds_check(&WeightedHypergraph::simplex(1).unwrap(), 6, 3).unwrap();
        assert_eq!(r.counts, vec![1; 6]);
    }

    #[test]
    fn bipartite_graph_bounds() {
        let g = cycle(6);
        let r = degree_bounds_check(&WeightedHypergraph::from_graph(&g), 10, 3).unwrap();
        assert_eq!((r.degree, r.lower, r.upper), (2, 1, 3));
    }

    #[test]
    fn period_scan_detects_alternation() {
        let counts: Vec<u64> = (1..=12).map(|k| if k % 2 == 0 { k } else { k + 1 }).collect();
        assert_eq!(estimate_degree(&counts, 3), Some((2, 1)));
        assert_eq!(estimate_degree(&[1, 5, 2, 9], 3), None);
    }

    #[test]
    fn random_antichains_are_valid() {
        for seed in 0..20 {
            let h = random_antichain(6, 3, 6, 2, seed).unwrap();
            assert!(!h.faces().is_empty());
            assert_eq!(WeightedHypergraph::parse(&h.to_text()).unwrap(), h);
        }
    }
}
