//! Standard drawings and graphical dimension.
//!
//! A standard drawing places `A` on one row (positions via `sigma`) and `B`
//! on another (`tau`). `r` is the length of the longest prefix of positions
//! `t` such that `sigma(t) ~ tau(t)` and `sigma(t)` has no neighbour among
//! `tau(0..t)`. Positions after `r` are unconstrained, so maximising `r`
//! over all drawings is the same as finding a longest sequence of edges
//! `(u_1, v_1), .., (u_r, v_r)` with distinct endpoints where `u_t` has no
//! neighbour among `v_1, .., v_{t-1}`. `gdim = 1 + max r`, taken per edge
//! component and combined as `1 - m + sum gdim_i`.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::covers::Cover;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::matching::{bits, matching_size_masked};
use crate::par::{self, Exec};

/// Largest side of a component the bitmask search accepts.
pub const MAX_SIDE: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Vertical,
    /// A-position greater than B-position.
    Slash,
    /// A-position smaller than B-position.
    Backslash,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardDrawing {
    sigma: Vec<usize>,
    tau: Vec<usize>,
    pos: Vec<usize>,
}

/// JSON form of a drawing, with 1-based vertex ids in position order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingReport {
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    pub r: usize,
}

impl StandardDrawing {
    /// `sigma` lists the A-vertices by position, `tau` the B-vertices.
    pub fn new(g: &BipartiteGraph, sigma: Vec<usize>, tau: Vec<usize>) -> Result<Self> {
        let mut pos = vec![usize::MAX; g.n()];
        for (row, side, name) in [(&sigma, Side::A, "sigma"), (&tau, Side::B, "tau")] {
            let expected = if side == Side::A { g.a() } else { g.b() };
            if row.len() != expected {
                return Err(Error::InvalidDrawing(format!("{name} has {} entries, expected {expected}", row.len())));
            }
            for (p, &v) in row.iter().enumerate() {
                if v >= g.n() || g.side(v) != side || pos[v] != usize::MAX {
                    return Err(Error::InvalidDrawing(format!("{name} is not a bijection onto its side")));
                }
                pos[v] = p;
            }
        }
        Ok(Self { sigma, tau, pos })
    }

    /// Both rows in vertex id order.
    pub fn identity(g: &BipartiteGraph) -> Self {
        Self::new(g, g.a_vertices(), g.b_vertices()).expect("sides form a drawing")
    }

    /// The sequence occupies positions `0..len`; remaining vertices follow in
    /// id order.
    pub fn from_sequence(g: &BipartiteGraph, seq: &[(usize, usize)]) -> Result<Self> {
        let mut sigma: Vec<usize> = seq.iter().map(|e| e.0).collect();
        let mut tau: Vec<usize> = seq.iter().map(|e| e.1).collect();
        sigma.extend(g.a_vertices().into_iter().filter(|v| !seq.iter().any(|e| e.0 == *v)));
        tau.extend(g.b_vertices().into_iter().filter(|v| !seq.iter().any(|e| e.1 == *v)));
        Self::new(g, sigma, tau)
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    /// Position of a vertex within its own row.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn edge_class(&self, g: &BipartiteGraph, u: usize, v: usize) -> Result<EdgeClass> {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u + 1, v + 1));
        }
        let (x, y) = if g.side(u) == Side::A { (u, v) } else { (v, u) };
        Ok(match self.pos[x].cmp(&self.pos[y]) {
            std::cmp::Ordering::Equal => EdgeClass::Vertical,
            std::cmp::Ordering::Greater => EdgeClass::Slash,
            std::cmp::Ordering::Less => EdgeClass::Backslash,
        })
    }

    pub fn report(&self, r: usize) -> DrawingReport {
        DrawingReport {
            sigma: self.sigma.iter().map(|v| v + 1).collect(),
            tau: self.tau.iter().map(|v| v + 1).collect(),
            r,
        }
    }

    /// Two rows of 1-based ids, then every edge as `u|v`, `u\v` or `u/v`
    /// (A-vertex first).
    pub fn render(&self, g: &BipartiteGraph) -> String {
        let width = g.n().to_string().len() + 1;
        let mut out = String::new();
        let row = |out: &mut String, label: &str, ids: &[usize]| {
            out.push_str(label);
            for v in ids {
                let _ = write!(out, "{:>width$}", v + 1);
            }
            out.push('\n');
        };
        row(&mut out, "A:", &self.sigma);
        row(&mut out, "B:", &self.tau);
        let _ = writeln!(out, "r = {}", r_of(g, self));
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| if g.side(u) == Side::A { (u, v) } else { (v, u) })
            .collect();
        edges.sort_by_key(|&(x, y)| (self.pos[x], self.pos[y]));
        let marks: Vec<String> = edges
            .iter()
            .map(|&(x, y)| {
                let mark = match self.edge_class(g, x, y).unwrap() {
                    EdgeClass::Vertical => '|',
                    EdgeClass::Slash => '/',
                    EdgeClass::Backslash => '\\',
                };
                format!("{}{mark}{}", x + 1, y + 1)
            })
            .collect();
        out.push_str(&marks.join(" "));
        out.push('\n');
        out
    }
}

pub fn r_of(g: &BipartiteGraph, d: &StandardDrawing) -> usize {
    let limit = d.sigma.len().min(d.tau.len());
    (0..limit)
        .find(|&t| {
            let u = d.sigma[t];
            !g.has_edge(u, d.tau[t]) || d.tau[..t].iter().any(|&v| g.has_edge(u, v))
        })
        .unwrap_or(limit)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGdim {
    /// 1-based vertex ids.
    pub vertices: Vec<usize>,
    pub gdim: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GdimResult {
    pub gdim: u32,
    /// `gdim - 1`, the length of the witness sequence.
    pub r: usize,
    /// Witness sequence `(u_t, v_t)` with `u_t` in A (0-based).
    pub sequence: Vec<(usize, usize)>,
    pub drawing: StandardDrawing,
    pub components: Vec<ComponentGdim>,
    /// Counters of the final canonical search, which does not depend on
    /// the execution policy.
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GdimReport {
    pub gdim: u32,
    pub sequence: Vec<[usize; 2]>,
    pub drawing: DrawingReport,
    pub components: Vec<ComponentGdim>,
    pub stats: SearchStats,
}

impl GdimResult {
    pub fn report(&self) -> GdimReport {
        GdimReport {
            gdim: self.gdim,
            sequence: self.sequence.iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            drawing: self.drawing.report(self.r),
            components: self.components.clone(),
            stats: self.stats,
        }
    }
}

/// Bitmask view of a vertex subset for the sequence search. Local indices
/// follow global id order, so exploring bits in ascending order explores
/// candidate edges in `(u id, v id)` order.
struct SeqSearch {
    a_ids: Vec<usize>,
    b_ids: Vec<usize>,
    a_nbr: Vec<u128>,
    b_nbr: Vec<u128>,
    a_all: u128,
    b_all: u128,
}

#[derive(Clone, Copy)]
struct Node {
    used_a: u128,
    used_b: u128,
    // A-vertices adjacent to some chosen v; they can no longer be chosen.
    blocked_a: u128,
}

fn full_mask(len: usize) -> u128 {
    if len == 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl SeqSearch {
    fn new(g: &BipartiteGraph, vertices: &[usize]) -> Result<Self> {
        let mut vs: Vec<usize> = vertices.iter().copied().filter(|&v| !g.is_isolated(v)).collect();
        vs.sort_unstable();
        let a_ids: Vec<usize> = vs.iter().copied().filter(|&v| g.side(v) == Side::A).collect();
        let b_ids: Vec<usize> = vs.iter().copied().filter(|&v| g.side(v) == Side::B).collect();
        let needed = a_ids.len().max(b_ids.len());
        if needed > MAX_SIDE {
            return Err(Error::Budget {
                what: "side of a component in the gdim search".into(),
                needed: needed as u128,
                cap: MAX_SIDE as u128,
            });
        }
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in a_ids.iter().enumerate() {
            local[v] = i;
        }
        for (j, &v) in b_ids.iter().enumerate() {
            local[v] = j;
        }
        let mask_of = |v: usize| {
            g.neighbors(v).iter().filter(|&&w| local[w] != usize::MAX).fold(0u128, |m, &w| m | 1u128 << local[w])
        };
        let a_nbr = a_ids.iter().map(|&v| mask_of(v)).collect();
        let b_nbr = b_ids.iter().map(|&v| mask_of(v)).collect();
        Ok(Self { a_all: full_mask(a_ids.len()), b_all: full_mask(b_ids.len()), a_ids, b_ids, a_nbr, b_nbr })
    }

    fn root(&self) -> Node {
        Node { used_a: 0, used_b: 0, blocked_a: 0 }
    }

    fn free_a(&self, n: &Node) -> u128 {
        self.a_all & !n.used_a & !n.blocked_a
    }

    fn bound(&self, n: &Node) -> usize {
        matching_size_masked(&self.a_nbr, self.free_a(n), self.b_all & !n.used_b)
    }

    fn candidates(&self, n: &Node) -> Vec<(usize, usize)> {
        bits(self.free_a(n))
            .flat_map(|u| bits(self.a_nbr[u] & !n.used_b).map(move |v| (u, v)))
            .collect()
    }

    fn child(&self, n: &Node, (u, v): (usize, usize)) -> Node {
        Node { used_a: n.used_a | 1 << u, used_b: n.used_b | 1 << v, blocked_a: n.blocked_a | self.b_nbr[v] }
    }

    fn dfs_max(&self, n: &Node, depth: usize, best: &AtomicUsize, nodes: &AtomicU64, prunes: &AtomicU64) {
        nodes.fetch_add(1, Ordering::Relaxed);
        best.fetch_max(depth, Ordering::Relaxed);
        if depth + self.bound(n) <= best.load(Ordering::Relaxed) {
            prunes.fetch_add(1, Ordering::Relaxed);
            return;
        }
        for c in self.candidates(n) {
            self.dfs_max(&self.child(n, c), depth + 1, best, nodes, prunes);
        }
    }

    /// Longest sequence length. Root branches run as independent tasks that
    /// share the best length found so far.
    fn max_len(&self, exec: Exec) -> usize {
        let best = AtomicUsize::new(0);
        let (nodes, prunes) = (AtomicU64::new(0), AtomicU64::new(0));
        let root = self.root();
        let roots = self.candidates(&root);
        par::map(exec, &roots, |&c| self.dfs_max(&self.child(&root, c), 1, &best, &nodes, &prunes));
        best.into_inner()
    }

    /// Visits sequences of length `target` in lexicographic order until the
    /// visitor returns true. `skip(node, depth)` may cut subtrees.
    fn visit<F, P>(&self, target: usize, skip: &P, visitor: &mut F, stats: &mut SearchStats) -> bool
    where
        F: FnMut(&[(usize, usize)]) -> bool,
        P: Fn(&Node, usize) -> bool,
    {
        let mut seq = Vec::with_capacity(target);
        self.visit_rec(&self.root(), target, &mut seq, skip, visitor, stats)
    }

    fn visit_rec<F, P>(
        &self,
        n: &Node,
        target: usize,
        seq: &mut Vec<(usize, usize)>,
        skip: &P,
        visitor: &mut F,
        stats: &mut SearchStats,
    ) -> bool
    where
        F: FnMut(&[(usize, usize)]) -> bool,
        P: Fn(&Node, usize) -> bool,
    {
        stats.nodes += 1;
        let depth = seq.len();
        if skip(n, depth) || depth + self.bound(n) < target {
            stats.prunes += 1;
            return false;
        }
        if depth == target {
            let global: Vec<(usize, usize)> = seq.iter().map(|&(u, v)| (self.a_ids[u], self.b_ids[v])).collect();
            return visitor(&global);
        }
        for c in self.candidates(n) {
            seq.push(c);
            if self.visit_rec(&self.child(n, c), target, seq, skip, visitor, stats) {
                return true;
            }
            seq.pop();
        }
        false
    }

    /// Lexicographically least sequence of the given length.
    fn first_of_len(&self, target: usize, stats: &mut SearchStats) -> Option<Vec<(usize, usize)>> {
        let mut found = None;
        self.visit(target, &|_, _| false, &mut |s| {
            found = Some(s.to_vec());
            true
        }, stats);
        found
    }
}

/// Vertex sets of the components that carry edges, in order of their
/// smallest vertex.
fn edge_component_vertices(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); g.num_components()];
    for v in 0..g.n() {
        if !g.is_isolated(v) {
            groups[g.component_of(v)].push(v);
        }
    }
    groups.retain(|c| !c.is_empty());
    groups.sort_by_key(|c| c[0]);
    groups
}

pub fn gdim(g: &BipartiteGraph) -> Result<GdimResult> {
    gdim_with(g, Exec::default())
}

/// Exact graphical dimension. The value is independent of `exec`, and the
/// witness is the concatenation, in component order, of each component's
/// lexicographically least longest sequence.
pub fn gdim_with(g: &BipartiteGraph, exec: Exec) -> Result<GdimResult> {
    g.require_edges()?;
    let mut sequence = Vec::new();
    let mut components = Vec::new();
    let mut stats = SearchStats::default();
    for verts in edge_component_vertices(g) {
        let search = SeqSearch::new(g, &verts)?;
        let r = search.max_len(exec);
        let seq = search.first_of_len(r, &mut stats).expect("a longest sequence exists");
        sequence.extend(seq);
        components.push(ComponentGdim { vertices: verts.iter().map(|v| v + 1).collect(), gdim: r as u32 + 1 });
    }
    let r = sequence.len();
    let drawing = StandardDrawing::from_sequence(g, &sequence)?;
    Ok(GdimResult { gdim: r as u32 + 1, r, sequence, drawing, components, stats })
}

/// Longest valid sequence over the whole graph in one search, ignoring the
/// component split. Agrees with `gdim - 1`.
pub fn max_sequence_whole(g: &BipartiteGraph, exec: Exec) -> Result<usize> {
    g.require_edges()?;
    let all: Vec<usize> = (0..g.n()).collect();
    Ok(SeqSearch::new(g, &all)?.max_len(exec))
}

/// Smallest position `j < r` with `sigma(i) ~ tau(j)`, for an A-position `i`.
pub fn first_early_partner(g: &BipartiteGraph, d: &StandardDrawing, r: usize, i: usize) -> Option<usize> {
    (0..r.min(d.tau.len())).find(|&j| g.has_edge(d.sigma[i], d.tau[j]))
}

/// Largest position `i < r` with `sigma(i) ~ tau(j)`, for a B-position `j`.
pub fn last_early_partner(g: &BipartiteGraph, d: &StandardDrawing, r: usize, j: usize) -> Option<usize> {
    (0..r.min(d.sigma.len())).rev().find(|&i| g.has_edge(d.sigma[i], d.tau[j]))
}

/// Every late vertex has an early neighbour on the other row.
pub fn check_eligible(g: &BipartiteGraph, d: &StandardDrawing) -> Result<()> {
    let r = r_of(g, d);
    for i in r..d.sigma.len() {
        if first_early_partner(g, d, r, i).is_none() {
            return Err(Error::DrawingNotEligible(format!(
                "A-vertex {} at position {} has no neighbour among the first {r} B-positions",
                d.sigma[i] + 1,
                i + 1
            )));
        }
    }
    for j in r..d.tau.len() {
        if last_early_partner(g, d, r, j).is_none() {
            return Err(Error::DrawingNotEligible(format!(
                "B-vertex {} at position {} has no neighbour among the first {r} A-positions",
                d.tau[j] + 1,
                j + 1
            )));
        }
    }
    Ok(())
}

/// Builds a basic k-cover from a weakly descending `omega` of length
/// `r(drawing)`: early A-positions take `omega`, their vertical partners
/// `k - omega`, late A-vertices copy `omega` at their first early partner,
/// and late B-vertices are completed by `k - min` over their neighbours.
pub fn descending_sequence_to_cover(g: &BipartiteGraph, d: &StandardDrawing, omega: &[u32], k: u32) -> Result<Cover> {
    let r = r_of(g, d);
    if omega.len() != r {
        return Err(Error::LengthMismatch { expected: r, found: omega.len() });
    }
    if omega.iter().any(|&w| w > k) {
        return Err(Error::InvalidParameters(format!("sequence entries must lie in 0..={k}")));
    }
    if omega.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDescending);
    }
    check_eligible(g, d)?;
    let mut values = vec![0u32; g.n()];
    for t in 0..r {
        values[d.sigma[t]] = omega[t];
        values[d.tau[t]] = k - omega[t];
    }
    for i in r..d.sigma.len() {
        values[d.sigma[i]] = omega[first_early_partner(g, d, r, i).unwrap()];
    }
    for j in r..d.tau.len() {
        let min = g.neighbors(d.tau[j]).iter().map(|&u| values[u]).min().unwrap();
        values[d.tau[j]] = k - min;
    }
    Ok(Cover::new(k, values))
}

/// Positions `i <= j < r` joined by a chain of backslash edges
/// `sigma(i_q) ~ tau(i_{q+1})` with increasing positions.
pub fn saw_connected(g: &BipartiteGraph, d: &StandardDrawing, i: usize, j: usize) -> Result<bool> {
    let r = r_of(g, d);
    for p in [i, j] {
        if p >= r {
            return Err(Error::PositionOutOfRange { position: p + 1, limit: r });
        }
    }
    if i > j {
        return Err(Error::InvalidParameters("saw-connection needs i <= j".into()));
    }
    let mut reach = vec![false; j + 1];
    reach[i] = true;
    for p in i..j {
        if reach[p] {
            for q in p + 1..=j {
                if g.has_edge(d.sigma[p], d.tau[q]) {
                    reach[q] = true;
                }
            }
        }
    }
    Ok(reach[j])
}

/// Every vertex placed after position `r` is a leaf.
pub fn only_leaves_right(g: &BipartiteGraph, d: &StandardDrawing) -> bool {
    let r = r_of(g, d);
    d.sigma[r.min(d.sigma.len())..].iter().chain(&d.tau[r.min(d.tau.len())..]).all(|&v| g.is_leaf(v))
}

/// For a tree drawing with only leaves to the right of `r`: whenever a late
/// A-vertex hangs off B-position `j` and a late B-vertex hangs off A-position
/// `k`, with `j <= k`, positions `j` and `k` are not saw-connected.
pub fn leaves_right_criterion(g: &BipartiteGraph, d: &StandardDrawing) -> bool {
    let r = r_of(g, d);
    let mut js = Vec::new();
    let mut ks = Vec::new();
    for &(x, y) in g.edges() {
        let (u, v) = if g.side(x) == Side::A { (x, y) } else { (y, x) };
        let (pu, pv) = (d.position(u), d.position(v));
        if pu >= r && pv < r {
            js.push(pv);
        }
        if pv >= r && pu < r {
            ks.push(pu);
        }
    }
    js.iter().all(|&j| ks.iter().all(|&k| j > k || !saw_connected(g, d, j, k).unwrap()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDim {
    pub dim: u32,
    pub r: usize,
    pub a: usize,
    /// `(a-r)^r * a!/(a-r)!`; vanishes when `r = a`.
    pub multiplicity_bound: BigUint,
}

/// Dimension of a tree's fiber cone (equal to its gdim) and the
/// multiplicity bound `(a-r)^r * a (a-1) .. (a-r+1)`.
pub fn tree_dim(t: &BipartiteGraph) -> Result<TreeDim> {
    t.require_tree()?;
    let res = gdim(t)?;
    let (a, r) = (t.a(), res.r);
    let falling: BigUint = ((a - r + 1)..=a).map(BigUint::from).product();
    let bound = BigUint::from(a - r).pow(r as u32) * falling;
    Ok(TreeDim { dim: res.gdim, r, a, multiplicity_bound: bound })
}

/// An optimal drawing of a tree with only leaves after position `r`,
/// checked against the saw-connection criterion.
pub fn tree_optimal_leaves_right(t: &BipartiteGraph) -> Result<StandardDrawing> {
    t.require_tree()?;
    let all: Vec<usize> = (0..t.n()).collect();
    let search = SeqSearch::new(t, &all)?;
    let target = search.max_len(Exec::Sequential);
    let inner_a: u128 =
        search.a_ids.iter().enumerate().filter(|(_, &v)| !t.is_leaf(v)).fold(0, |m, (i, _)| m | 1 << i);
    let inner_b: u128 =
        search.b_ids.iter().enumerate().filter(|(_, &v)| !t.is_leaf(v)).fold(0, |m, (i, _)| m | 1 << i);
    // Every non-leaf still unplaced must fit into the remaining slots.
    let skip = |n: &Node, depth: usize| {
        let left = target - depth;
        (inner_a & !n.used_a).count_ones() as usize > left || (inner_b & !n.used_b).count_ones() as usize > left
    };
    let mut found = None;
    search.visit(target, &skip, &mut |s| {
        found = Some(s.to_vec());
        true
    }, &mut SearchStats::default());
    let seq = found.ok_or_else(|| Error::NotFound("optimal drawing with only leaves to the right".into()))?;
    let d = StandardDrawing::from_sequence(t, &seq)?;
    if !leaves_right_criterion(t, &d) {
        return Err(Error::NotFound("leaves-right drawing violating the saw-connection criterion".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::is_basic;
    use crate::generate::{caterpillar, complete_bipartite, cycle, path, whisker};

    /// The ten-cycle drawn as verticals `t - t'`, backslashes `t - (t+1)'`
    /// and one slash from the last top vertex back to `1'`.
    fn c10_drawn() -> (BipartiteGraph, StandardDrawing) {
        let mut edges = Vec::new();
        for t in 1..=5 {
            edges.push((t, 5 + t));
            if t < 5 {
                edges.push((t, 5 + t + 1));
            }
        }
        edges.push((5, 6));
        let g = BipartiteGraph::from_edges(10, &edges).unwrap();
        let d = StandardDrawing::new(&g, (0..5).collect(), (5..10).collect()).unwrap();
        (g, d)
    }

    #[test]
    fn r_examples() {
        let (g, d) = c10_drawn();
        assert_eq!(r_of(&g, &d), 4);
        let k = complete_bipartite(2, 3);
        assert_eq!(r_of(&k, &StandardDrawing::identity(&k)), 1);
        let e = path(2);
        assert_eq!(r_of(&e, &StandardDrawing::identity(&e)), 1);
    }

    #[test]
    fn edge_classes() {
        let (g, d) = c10_drawn();
        assert_eq!(d.edge_class(&g, 0, 5).unwrap(), EdgeClass::Vertical);
        assert_eq!(d.edge_class(&g, 0, 6).unwrap(), EdgeClass::Backslash);
        assert_eq!(d.edge_class(&g, 4, 5).unwrap(), EdgeClass::Slash);
        assert!(d.edge_class(&g, 0, 9).is_err());
    }

    #[test]
    fn invalid_drawings() {
        let g = cycle(6);
        assert!(StandardDrawing::new(&g, vec![0, 2], vec![1, 3, 5]).is_err());
        assert!(StandardDrawing::new(&g, vec![0, 2, 2], vec![1, 3, 5]).is_err());
        assert!(StandardDrawing::new(&g, vec![1, 3, 5], vec![0, 2, 4]).is_err());
    }

    #[test]
    fn gdim_examples() {
        assert_eq!(gdim(&cycle(10)).unwrap().gdim, 5);
        for a in 2..=6 {
            assert_eq!(gdim(&cycle(2 * a)).unwrap().gdim, a as u32);
        }
        for (r, a, b) in [(2, 3, 3), (3, 4, 5), (4, 6, 6)] {
            assert_eq!(gdim(&caterpillar(r, a, b)).unwrap().gdim, r as u32 + 1);
        }
        for n in 2..=9 {
            assert_eq!(gdim(&path(n)).unwrap().gdim, n as u32 / 2 + 1);
        }
        assert_eq!(gdim(&BipartiteGraph::from_edges(2, &[]).unwrap()).unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn witness_is_consistent_and_policy_independent() {
        for g in [cycle(8), caterpillar(3, 4, 5), path(7)] {
            let s = gdim_with(&g, Exec::Sequential).unwrap();
            let p = gdim_with(&g, Exec::Parallel).unwrap();
            assert_eq!(s, p);
            assert_eq!(r_of(&g, &s.drawing), s.r);
        }
    }

    #[test]
    fn disconnected_formula() {
        let g = cycle(6).disjoint_union(&path(4)).disjoint_union(&path(2));
        let res = gdim(&g).unwrap();
        assert_eq!(res.components.iter().map(|c| c.gdim).collect::<Vec<_>>(), vec![3, 3, 2]);
        assert_eq!(res.gdim as i64, 1 - 3 + 3 + 3 + 2);
        assert_eq!(max_sequence_whole(&g, Exec::Parallel).unwrap(), res.r);
    }

    #[test]
    fn descending_covers() {
        let g = cycle(10);
        let res = gdim(&g).unwrap();
        let c = descending_sequence_to_cover(&g, &res.drawing, &[2, 1, 1, 0], 2).unwrap();
        assert!(is_basic(&g, &c).unwrap());
        let top = descending_sequence_to_cover(&g, &res.drawing, &[3, 3, 3, 3], 3).unwrap();
        for t in 0..4 {
            assert_eq!(top.values[res.drawing.sigma()[t]], 3);
            assert_eq!(top.values[res.drawing.tau()[t]], 0);
        }
        assert_eq!(descending_sequence_to_cover(&g, &res.drawing, &[0, 1, 1, 1], 2).unwrap_err(), Error::NotDescending);
        assert!(descending_sequence_to_cover(&g, &res.drawing, &[1, 1], 2).is_err());
    }

    #[test]
    fn ineligible_drawing_rejected() {
        let g = path(6);
        let d = StandardDrawing::new(&g, vec![0, 2, 4], vec![1, 5, 3]).unwrap();
        assert_eq!(r_of(&g, &d), 1);
        // Vertex 5 sits late with both neighbours late as well.
        assert!(matches!(descending_sequence_to_cover(&g, &d, &[1], 1), Err(Error::DrawingNotEligible(_))));
    }

    #[test]
    fn saw_connection() {
        let (g, d) = c10_drawn();
        assert!(saw_connected(&g, &d, 0, 3).unwrap());
        assert!(saw_connected(&g, &d, 2, 2).unwrap());
        assert!(saw_connected(&g, &d, 0, 4).is_err());
        let two = BipartiteGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        let d2 = StandardDrawing::identity(&two);
        assert_eq!(r_of(&two, &d2), 2);
        assert!(!saw_connected(&two, &d2, 0, 1).unwrap());
    }

    #[test]
    fn tree_dims_and_leaves_right() {
        for n in 2..=9 {
            assert_eq!(tree_dim(&path(n)).unwrap().dim, n as u32 / 2 + 1);
        }
        let w = whisker(&path(3)).unwrap();
        let d = tree_optimal_leaves_right(&w).unwrap();
        assert_eq!(r_of(&w, &d), 3);
        let star = complete_bipartite(1, 4);
        let d = tree_optimal_leaves_right(&star).unwrap();
        assert_eq!(r_of(&star, &d), 1);
        assert!(only_leaves_right(&star, &d));
        assert_eq!(tree_dim(&cycle(6)).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn render_marks() {
        let (g, d) = c10_drawn();
        let text = d.render(&g);
        assert!(text.contains("1|6") && text.contains("1\\7") && text.contains("5/6"));
        assert!(text.contains("r = 4"));
    }
}
