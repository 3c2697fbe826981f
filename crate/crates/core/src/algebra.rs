//! Algebra-level invariants computed from basic covers: domain and
//! zero-divisor tests, unmixedness, non-zero-divisor criteria, the depth
//! witness, degree-based dimension bounds and upper bounds for the
//! arithmetical rank of the Alexander dual.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::covers::{enumerate_basic, is_basic, is_cover, Cover, CoverSet};
use crate::drawing::gdim_with;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::hilbert::{hilbert_function_with, HilbertProfile, DEFAULT_WINDOW};
use crate::lattice::build_lattice_from;
use crate::par::Exec;

/// Every neighbour of `i` is adjacent to every neighbour of `j`.
pub fn always_tight_edge(g: &BipartiteGraph, i: usize, j: usize) -> Result<bool> {
    if !g.has_edge(i, j) {
        return Err(Error::NotAnEdge(i + 1, j + 1));
    }
    Ok(g.neighbors(i).iter().all(|&x| g.neighbors(j).iter().all(|&y| g.has_edge(x, y))))
}

/// `c_i + c_j = 1` in every basic 1-cover.
pub fn tight_in_all_one_covers(ones: &CoverSet, i: usize, j: usize) -> bool {
    ones.covers.iter().all(|c| c.values[i] + c.values[j] == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WscResult {
    pub holds: bool,
    /// Per vertex, the first neighbour `j` with `{i, j}` always tight.
    pub witnesses: Vec<Option<usize>>,
    /// First non-isolated vertex without such a neighbour.
    pub violating: Option<usize>,
}

/// Weak square condition: every non-isolated vertex lies on an edge whose
/// endpoint neighbourhoods are completely joined.
pub fn satisfies_wsc(g: &BipartiteGraph) -> WscResult {
    let witnesses: Vec<Option<usize>> = (0..g.n())
        .map(|i| g.neighbors(i).iter().copied().find(|&j| always_tight_edge(g, i, j).unwrap()))
        .collect();
    let violating = (0..g.n()).find(|&i| !g.is_isolated(i) && witnesses[i].is_none());
    WscResult { holds: violating.is_none(), witnesses, violating }
}

/// Same condition read off the basic 1-covers instead of the adjacency.
pub fn domain_criterion_via_covers(g: &BipartiteGraph) -> Result<bool> {
    let ones = enumerate_basic(g, 1)?;
    Ok(domain_criterion_from(g, &ones))
}

pub fn domain_criterion_from(g: &BipartiteGraph, ones: &CoverSet) -> bool {
    (0..g.n()).all(|i| g.is_isolated(i) || g.neighbors(i).iter().any(|&j| tight_in_all_one_covers(ones, i, j)))
}

/// First multiset of `m` basic 1-covers (`m = 2..=m_max`) whose sum is not
/// basic. Covers are indexed in decreasing lexicographic order and multisets
/// are visited as non-decreasing index tuples in lexicographic order.
pub fn zero_divisor_witness(g: &BipartiteGraph, m_max: usize) -> Result<Option<Vec<Cover>>> {
    let ones = enumerate_basic(g, 1)?;
    zero_divisor_witness_from(g, &ones, m_max)
}

pub fn zero_divisor_witness_from(g: &BipartiteGraph, ones: &CoverSet, m_max: usize) -> Result<Option<Vec<Cover>>> {
    let desc: Vec<&Cover> = ones.covers.iter().rev().collect();
    let n = desc.len();
    for m in 2..=m_max {
        let mut idx = vec![0usize; m];
        loop {
            let mut values = vec![0u32; g.n()];
            for &t in &idx {
                for (x, y) in values.iter_mut().zip(&desc[t].values) {
                    *x += y;
                }
            }
            if !is_basic(g, &Cover::new(m as u32, values))? {
                return Ok(Some(idx.iter().map(|&t| desc[t].clone()).collect()));
            }
            // Next non-decreasing index tuple.
            let Some(p) = (0..m).rev().find(|&p| idx[p] + 1 < n) else { break };
            let v = idx[p] + 1;
            for q in p..m {
                idx[q] = v;
            }
        }
    }
    Ok(None)
}

pub fn is_unmixed(g: &BipartiteGraph) -> Result<bool> {
    let ones = enumerate_basic(g, 1)?;
    Ok(is_unmixed_from(&ones))
}

pub fn is_unmixed_from(ones: &CoverSet) -> bool {
    ones.covers.windows(2).all(|w| w[0].weight() == w[1].weight())
}

/// Every vertex of the tree is a leaf or adjacent to a leaf.
pub fn tree_domain_test(t: &BipartiteGraph) -> Result<bool> {
    t.require_tree()?;
    Ok((0..t.n()).all(|v| t.is_leaf(v) || t.neighbors(v).iter().any(|&w| t.is_leaf(w))))
}

/// The tree is a single edge, or its leaves match its other vertices one to
/// one (a base tree with one pendant leaf per vertex).
pub fn tree_unmixed_test(t: &BipartiteGraph) -> Result<bool> {
    t.require_tree()?;
    if t.n() == 2 {
        return Ok(true);
    }
    let leaves = (0..t.n()).filter(|&v| t.is_leaf(v)).count();
    Ok(2 * leaves == t.n()
        && (0..t.n()).filter(|&v| !t.is_leaf(v)).all(|v| t.neighbors(v).iter().filter(|&&w| t.is_leaf(w)).count() == 1))
}

fn require_basic(g: &BipartiteGraph, b: &Cover) -> Result<()> {
    if b.k >= 1 && is_cover(g, b)? && is_basic(g, b)? {
        Ok(())
    } else {
        Err(Error::NotBasic)
    }
}

fn slack_edges<'a>(g: &'a BipartiteGraph, b: &'a Cover) -> impl Iterator<Item = (usize, usize)> + 'a {
    g.edges().iter().copied().filter(move |&(i, j)| b.values[i] + b.values[j] > b.k)
}

/// Non-zero-divisor test on the adjacency: every slack edge `{i, j}` has an
/// always-tight edge at `i` and one at `j`. Covers tight on every edge pass
/// trivially.
pub fn nonzerodivisor_test(g: &BipartiteGraph, b: &Cover) -> Result<bool> {
    require_basic(g, b)?;
    let has_tight = |v: usize| g.neighbors(v).iter().any(|&w| always_tight_edge(g, v, w).unwrap());
    Ok(slack_edges(g, b).all(|(i, j)| has_tight(i) && has_tight(j)))
}

/// The same test phrased through the basic 1-covers: for every slack edge
/// `{i, j}` there are `i' ~ i` and `j' ~ j` with `a_i + a_i' = 1 = a_j + a_j'`
/// in every basic 1-cover `a`.
pub fn nonzerodivisor_via_one_covers(g: &BipartiteGraph, b: &Cover) -> Result<bool> {
    require_basic(g, b)?;
    let ones = enumerate_basic(g, 1)?;
    let has_tight = |v: usize| g.neighbors(v).iter().any(|&w| tight_in_all_one_covers(&ones, v, w));
    Ok(slack_edges(g, b).all(|(i, j)| has_tight(i) && has_tight(j)))
}

/// First basic k'-cover `c` (`k' <= kprime_max`, each degree scanned in
/// decreasing lexicographic order) with `b + c` not basic.
pub fn first_nonbasic_sum(g: &BipartiteGraph, b: &Cover, kprime_max: u32) -> Result<Option<Cover>> {
    require_basic(g, b)?;
    for kp in 1..=kprime_max {
        for c in enumerate_basic(g, kp)?.covers.into_iter().rev() {
            if !is_basic(g, &b.sum(&c)?)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// `b + c` is basic for every basic k'-cover `c` with `k' <= kprime_max`.
/// A necessary condition for `b` to be a non-zero-divisor, not a decision.
pub fn sum_stays_basic_sampled(g: &BipartiteGraph, b: &Cover, kprime_max: u32) -> Result<bool> {
    Ok(first_nonbasic_sum(g, b, kprime_max)?.is_none())
}

/// Indicator 1-covers of `A` and of `B` (0 on isolated vertices).
pub fn depth_witness(g: &BipartiteGraph) -> Result<(Cover, Cover)> {
    g.require_edges()?;
    Ok((Cover::side_indicator(g, Side::A), Cover::side_indicator(g, Side::B)))
}

fn biguint_string<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    /// Smallest degree of a non-isolated B-vertex.
    pub s: usize,
    /// `a - s + 2`.
    pub bound: u32,
    /// `binom(a, s) (a - s)!`, valid only when the dimension attains `bound`.
    #[serde(serialize_with = "biguint_string")]
    pub multiplicity_bound: BigUint,
    /// The same bound with the sides exchanged; not part of the proven
    /// statement.
    pub extension: Option<SwappedDegreeBound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwappedDegreeBound {
    pub label: &'static str,
    pub s: usize,
    pub bound: u32,
}

/// Dimension bound from the minimum B-degree.
pub fn dim_bound_degree(g: &BipartiteGraph, with_extension: bool) -> Result<DegreeBound> {
    g.require_edges()?;
    let min_degree = |side| (0..g.n()).filter(|&v| g.side(v) == side && !g.is_isolated(v)).map(|v| g.degree(v)).min();
    let count = |side| (0..g.n()).filter(|&v| g.side(v) == side && !g.is_isolated(v)).count();
    let (a, b) = (count(Side::A), count(Side::B));
    let s = min_degree(Side::B).unwrap();
    let mult: BigUint = ((s + 1)..=a).map(BigUint::from).product();
    let extension = with_extension.then(|| {
        let s2 = min_degree(Side::A).unwrap();
        SwappedDegreeBound { label: "extension", s: s2, bound: (b - s2 + 2) as u32 }
    });
    Ok(DegreeBound { s, bound: (a - s + 2) as u32, multiplicity_bound: mult, extension })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AraBound {
    pub bound: u32,
    pub provenance: String,
    pub minimal: bool,
}

/// Collects the applicable upper bounds and marks the smallest ones.
pub fn collect_ara_bounds(
    g: &BipartiteGraph,
    gdim: u32,
    degree_bound: u32,
    lattice_rank: Option<usize>,
    stable_dim: Option<u32>,
) -> Vec<AraBound> {
    let mut out = Vec::new();
    let mut push = |bound: u32, tag: &str| out.push(AraBound { bound, provenance: tag.into(), minimal: false });
    if g.is_tree() {
        push(gdim, "gdim");
    }
    push(degree_bound, "min-b-degree");
    if let Some(rank) = lattice_rank {
        push(rank as u32, "rank(L)");
    }
    if let Some(dim) = stable_dim {
        push(dim, "dim");
    }
    let min = out.iter().map(|b| b.bound).min().unwrap();
    for b in &mut out {
        b.minimal = b.bound == min;
    }
    out
}

pub fn ara_upper_bounds(g: &BipartiteGraph, kmax: u32) -> Result<Vec<AraBound>> {
    let report = analyze(g, &AnalyzeOptions { kmax, ..AnalyzeOptions::default() })?;
    Ok(report.ara_upper_bounds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub kmax: u32,
    pub m_max: usize,
    pub window: usize,
    pub degree_extension: bool,
    pub exec: Exec,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self { kmax: 12, m_max: 4, window: DEFAULT_WINDOW, degree_extension: false, exec: Exec::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimUpperBounds {
    pub a_plus_one: u32,
    pub degree: DegreeBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub wsc: bool,
    pub domain: bool,
    pub unmixed: bool,
    pub basic_one_covers: usize,
    pub hilbert: HilbertProfile,
    pub stable: bool,
    pub dim_estimate: Option<u32>,
    pub dim_range: Option<[u32; 2]>,
    pub multiplicity_estimate: Option<u64>,
    pub gdim: u32,
    /// Stable profile with `gdim < dim`.
    pub gdim_below_dim: bool,
    pub dim_upper_bounds: DimUpperBounds,
    pub zero_divisor_witness: Option<Vec<Vec<u32>>>,
    pub depth_witness: [Vec<u32>; 2],
    pub lattice_rank: Option<usize>,
    pub lattice_maximal_chains: Option<String>,
    pub ara_upper_bounds: Vec<AraBound>,
    pub ara_upper_bound: u32,
}

pub fn analyze(g: &BipartiteGraph, opts: &AnalyzeOptions) -> Result<AlgebraReport> {
    g.require_edges()?;
    let ones = enumerate_basic(g, 1)?;
    let wsc = satisfies_wsc(g).holds;
    let domain = domain_criterion_from(g, &ones);
    let unmixed = is_unmixed_from(&ones);
    let hilbert = hilbert_function_with(g, opts.kmax, opts.window, opts.exec)?;
    let gd = gdim_with(g, opts.exec)?;
    let degree = dim_bound_degree(g, opts.degree_extension)?;
    let zdw = zero_divisor_witness_from(g, &ones, opts.m_max)?;
    let (da, db) = depth_witness(g)?;
    let (lattice_rank, lattice_maximal_chains) = if unmixed {
        let (rank, chains) = build_lattice_from(g, &ones)?.rank_and_chains();
        (Some(rank), Some(chains.to_string()))
    } else {
        (None, None)
    };
    let ara = collect_ara_bounds(g, gd.gdim, degree.bound, lattice_rank, hilbert.dim);
    let ara_min = ara.iter().map(|b| b.bound).min().unwrap();
    Ok(AlgebraReport {
        n: g.n(),
        a: g.a(),
        b: g.b(),
        wsc,
        domain,
        unmixed,
        basic_one_covers: ones.count(),
        stable: hilbert.stable,
        dim_estimate: hilbert.dim,
        dim_range: hilbert.dim_range,
        multiplicity_estimate: hilbert.multiplicity,
        gdim: gd.gdim,
        gdim_below_dim: hilbert.dim.is_some_and(|d| gd.gdim < d),
        dim_upper_bounds: DimUpperBounds { a_plus_one: g.a_non_isolated() as u32 + 1, degree },
        zero_divisor_witness: zdw.map(|w| w.into_iter().map(|c| c.values).collect()),
        depth_witness: [da.values, db.values],
        lattice_rank,
        lattice_maximal_chains,
        ara_upper_bounds: ara,
        ara_upper_bound: ara_min,
        hilbert,
    })
}
