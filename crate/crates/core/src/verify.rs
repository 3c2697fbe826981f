//! The acceptance suite: fifteen self-contained checks over generated
//! graphs, posets and hypergraphs. Each returns a pass flag and a one-line
//! detail; nothing here reads files.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;

use crate::algebra::{
    analyze, depth_witness, domain_criterion_via_covers, nonzerodivisor_test, satisfies_wsc, tree_domain_test,
    zero_divisor_witness, AnalyzeOptions,
};
use crate::covers::{count_basic, enumerate_basic_with, is_basic};
use crate::drawing::{descending_sequence_to_cover, gdim_with, r_of, tree_dim, tree_optimal_leaves_right};
use crate::error::Result;
use crate::generate::{
    all_labelled_trees, caterpillar, complete_bipartite, cycle, generate, path, poset_graph, regular, whisker,
    GraphSpec,
};
use crate::graph::BipartiteGraph;
use crate::hilbert::{hilbert_function_with, HilbertProfile, DEFAULT_WINDOW};
use crate::hypergraph::{
    degree_bounds_check_with, enumerate_basic_h_with, random_antichain, WeightedHypergraph, DEFAULT_BOX_BUDGET,
};
use crate::lattice::{build_lattice, gorenstein_test, order_isomorphic, poset_ideals};
use crate::oracle::{brute_basic_covers, brute_hilbert, permutation_gdim, simplex_tight_count, PERMUTATION_LIMIT};
use crate::par::Exec;
use crate::poset::FinitePoset;

pub const CRITERIA: usize = 15;
const KMAX: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{:2}] {}: {}", self.id, self.name, self.detail)
    }
}

const NAMES: [&str; CRITERIA] = [
    "hexagon",
    "even cycles",
    "paths",
    "complete bipartite",
    "regular family",
    "non-CM path",
    "ten-cycle",
    "caterpillars",
    "domain equivalence",
    "sandwich and disjoint unions",
    "injection lower bound",
    "unmixed lattices",
    "oracle equivalence",
    "tree theorem",
    "hypergraph degree bounds",
];

/// Collects failed checks; the first few are kept for the detail line.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        self.check(got == want, || format!("{label}: got {got:?}, want {want:?}"));
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self) -> (bool, String) {
        let mut detail = format!("{}/{} checks", self.checks - self.failures.len(), self.checks);
        for n in &self.notes {
            detail.push_str("; ");
            detail.push_str(n);
        }
        if !self.failures.is_empty() {
            detail.push_str("; failed: ");
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            detail.push_str(&shown.join(" | "));
            if self.failures.len() > 3 {
                detail.push_str(&format!(" | ... ({} more)", self.failures.len() - 3));
            }
        }
        (self.failures.is_empty(), detail)
    }
}

pub fn run_all(exec: Exec) -> Vec<CriterionResult> {
    (1..=CRITERIA).map(|id| run(id, exec)).collect()
}

/// Runs criterion `id` (1-based).
pub fn run(id: usize, exec: Exec) -> CriterionResult {
    assert!((1..=CRITERIA).contains(&id), "criterion ids are 1..={CRITERIA}");
    let body = match id {
        1 => hexagon,
        2 => even_cycles,
        3 => paths,
        4 => complete_bipartite_family,
        5 => regular_family,
        6 => non_cm_path,
        7 => ten_cycle,
        8 => caterpillars,
        9 => domain_equivalence,
        10 => sandwich,
        11 => injection,
        12 => unmixed_lattices,
        13 => oracle_equivalence,
        14 => tree_theorem,
        _ => hypergraph_bounds,
    };
    let (passed, detail) = match body(exec) {
        Ok(t) => t.finish(),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult { id, name: NAMES[id - 1], passed, detail }
}

fn profile(g: &BipartiteGraph, exec: Exec) -> Result<HilbertProfile> {
    hilbert_function_with(g, KMAX, DEFAULT_WINDOW, exec)
}

fn gdim_of(g: &BipartiteGraph, exec: Exec) -> Result<u32> {
    Ok(gdim_with(g, exec)?.gdim)
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn hexagon(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    let g = cycle(6);
    t.eq("basic 1-covers", count_basic(&g, 1, exec)?, 5);
    let p = profile(&g, exec)?;
    t.eq("dim", p.dim, Some(3));
    t.eq("multiplicity", p.multiplicity, Some(3));
    t.eq("wsc", satisfies_wsc(&g).holds, false);
    let mut w: Vec<Vec<u32>> = zero_divisor_witness(&g, 2)?.unwrap_or_default().into_iter().map(|c| c.values).collect();
    w.sort();
    t.eq("zero-divisor pair", w, vec![vec![1, 0, 1, 1, 0, 1], vec![1, 1, 0, 1, 1, 0]]);
    let (da, db) = depth_witness(&g)?;
    t.check(nonzerodivisor_test(&g, &da)? && nonzerodivisor_test(&g, &db)?, || "depth witness".into());
    Ok(t)
}

fn even_cycles(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for a in 2..=6usize {
        let g = cycle(2 * a);
        t.eq(&format!("C{} gdim", 2 * a), gdim_of(&g, exec)?, a as u32);
        let p = profile(&g, exec)?;
        t.eq(&format!("C{} dim", 2 * a), p.dim, Some(a as u32));
        let bound = binom(a as u64, 2) * factorial(a as u64 - 2);
        t.check(p.multiplicity.is_some_and(|e| e <= bound), || {
            format!("C{} multiplicity {:?} > {bound}", 2 * a, p.multiplicity)
        });
        if a == 3 {
            t.eq("C6 multiplicity", p.multiplicity, Some(3));
        }
    }
    Ok(t)
}

fn paths(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 2..=9usize {
        let g = path(n);
        let want = (n / 2 + 1) as u32;
        t.eq(&format!("P{n} gdim"), gdim_of(&g, exec)?, want);
        t.eq(&format!("P{n} dim"), profile(&g, exec)?.dim, Some(want));
    }
    Ok(t)
}

fn complete_bipartite_family(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for (a, b) in [(1, 1), (2, 2), (2, 3), (3, 4)] {
        let g = complete_bipartite(a, b);
        t.eq(&format!("K{a},{b} basic 1-covers"), count_basic(&g, 1, exec)?, 2);
        let p = profile(&g, exec)?;
        t.eq(&format!("K{a},{b} dim"), p.dim, Some(2));
        let want: Vec<u64> = (1..=8).map(|k| k + 1).collect();
        t.eq(&format!("K{a},{b} HF"), p.counts[..8].to_vec(), want);
        t.eq(&format!("K{a},{b} HF brute"), brute_hilbert(&g, 3), p.counts[..3].to_vec());
    }
    Ok(t)
}

fn regular_family(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for a in 2..=5usize {
        let g = regular(a);
        t.eq(&format!("a={a} basic 1-covers"), count_basic(&g, 1, exec)?, a as u64 + 2);
        let p = profile(&g, exec)?;
        t.eq(&format!("a={a} dim"), p.dim, Some(3));
        t.eq(&format!("a={a} multiplicity"), p.multiplicity, Some(a as u64));
    }
    Ok(t)
}

fn non_cm_path(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    let g = path(6);
    t.eq("basic 1-covers", count_basic(&g, 1, exec)?, 5);
    t.eq("gdim", gdim_of(&g, exec)?, 4);
    let p = profile(&g, exec)?;
    t.eq("dim", p.dim, Some(4));
    t.eq("multiplicity", p.multiplicity, Some(1));
    t.eq("tree domain test", tree_domain_test(&g)?, false);
    Ok(t)
}

fn ten_cycle(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    t.eq("gdim", gdim_of(&cycle(10), exec)?, 5);
    Ok(t)
}

fn caterpillars(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for (r, a, b) in [(2, 3, 3), (3, 4, 5), (4, 6, 6)] {
        let g = caterpillar(r, a, b);
        t.eq(&format!("({r},{a},{b}) gdim"), gdim_of(&g, exec)?, r as u32 + 1);
    }
    let opts = AnalyzeOptions { kmax: KMAX, exec, ..AnalyzeOptions::default() };
    t.eq("(4,6,6) ara upper bound", analyze(&caterpillar(4, 6, 6), &opts)?.ara_upper_bound, 5);
    Ok(t)
}

/// Every named family used by the suite.
pub fn paper_families() -> Vec<(String, BipartiteGraph)> {
    let mut out = Vec::new();
    for len in (4..=12).step_by(2) {
        out.push((format!("C{len}"), cycle(len)));
    }
    for n in 2..=9 {
        out.push((format!("P{n}"), path(n)));
    }
    for (a, b) in [(1, 1), (2, 2), (2, 3), (3, 4)] {
        out.push((format!("K{a},{b}"), complete_bipartite(a, b)));
    }
    for a in 2..=5 {
        out.push((format!("regular({a})"), regular(a)));
    }
    for (r, a, b) in [(2, 3, 3), (3, 4, 5), (4, 6, 6)] {
        out.push((format!("caterpillar({r},{a},{b})"), caterpillar(r, a, b)));
    }
    for n in 2..=4 {
        out.push((format!("whisker(P{n})"), whisker(&path(n)).expect("paths are trees")));
    }
    out
}

fn random_bipartite(seed: u64) -> Result<BipartiteGraph> {
    let mut rng = SplitMix64::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let (a, b) = (rng.random_range(1..=5), rng.random_range(1..=5));
    generate(&GraphSpec::RandomBipartite { a, b, p: 0.5, seed })
}

fn domain_equivalence(_exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for (name, g) in paper_families() {
        let wsc = satisfies_wsc(&g).holds;
        t.eq(&format!("{name} wsc vs covers"), wsc, domain_criterion_via_covers(&g)?);
        if wsc {
            t.check(zero_divisor_witness(&g, 4)?.is_none(), || format!("{name}: witness despite wsc"));
        } else {
            t.check(zero_divisor_witness(&g, 4)?.is_some(), || format!("{name}: no witness with m <= 4"));
        }
    }
    let (mut tested, mut edgeless, mut non_domain, mut found) = (0, 0, 0, 0);
    for seed in 0..200u64 {
        let g = random_bipartite(seed)?;
        if !g.has_edges() {
            edgeless += 1;
            continue;
        }
        tested += 1;
        let wsc = satisfies_wsc(&g).holds;
        t.eq(&format!("random seed {seed}"), wsc, domain_criterion_via_covers(&g)?);
        if !wsc {
            non_domain += 1;
            found += usize::from(zero_divisor_witness(&g, 4)?.is_some());
        }
    }
    t.note(format!(
        "random: {tested} tested, {edgeless} edgeless skipped, witness found for {found}/{non_domain} non-domains"
    ));
    Ok(t)
}

fn small_component(rng: &mut SplitMix64) -> BipartiteGraph {
    match rng.random_range(0..3) {
        0 => path(rng.random_range(2..=6)),
        1 => cycle(2 * rng.random_range(2..=3)),
        _ => generate(&GraphSpec::RandomTree { n: rng.random_range(2..=6), seed: rng.random() }).expect("n >= 2"),
    }
}

fn sandwich(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for (name, g) in paper_families() {
        if !g.is_connected() {
            continue;
        }
        let p = profile(&g, exec)?;
        let gd = gdim_of(&g, exec)?;
        let upper = g.a() as u32 + 1;
        t.check(p.dim.is_some_and(|d| gd <= d && d <= upper), || {
            format!("{name}: gdim {gd}, dim {:?}, a+1 {upper}", p.dim)
        });
    }
    let mut rng = SplitMix64::seed_from_u64(10);
    for i in 0..20 {
        let (x, y) = (small_component(&mut rng), small_component(&mut rng));
        let u = x.disjoint_union(&y);
        let (px, py, pu) = (profile(&x, exec)?, profile(&y, exec)?, profile(&u, exec)?);
        let (gx, gy, gu) = (gdim_of(&x, exec)?, gdim_of(&y, exec)?, gdim_of(&u, exec)?);
        t.eq(&format!("union {i} gdim"), gu, gx + gy - 1);
        t.eq(&format!("union {i} dim"), pu.dim, px.dim.zip(py.dim).map(|(a, b)| a + b - 1));
    }
    Ok(t)
}

/// Weakly descending sequences of length `r` with entries in `0..=k`.
fn descending_sequences(r: usize, k: u32) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in descending_sequences(r - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn injection(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    let mut graphs = Vec::new();
    for len in (4..=12).step_by(2) {
        graphs.push((format!("C{len}"), cycle(len)));
    }
    for n in 2..=9 {
        graphs.push((format!("P{n}"), path(n)));
    }
    for (r, a, b) in [(2, 3, 3), (3, 4, 5), (4, 6, 6)] {
        graphs.push((format!("caterpillar({r},{a},{b})"), caterpillar(r, a, b)));
    }
    let mut injected = 0;
    for (name, g) in &graphs {
        let res = gdim_with(g, exec)?;
        let r = res.r as u64;
        let counts = hilbert_function_with(g, 10, DEFAULT_WINDOW, exec)?.counts;
        for (k, &hf) in (1..=10u64).zip(&counts) {
            let lower = binom(k + r, r);
            t.check(lower <= hf, || format!("{name}: binom({}, {r}) = {lower} > HF({k}) = {hf}", k + r));
        }
        if res.r > 4 {
            continue;
        }
        t.eq(&format!("{name} witness r"), r_of(g, &res.drawing), res.r);
        for k in 1..=3 {
            let mut seen = Vec::new();
            for omega in descending_sequences(res.r, k) {
                let c = descending_sequence_to_cover(g, &res.drawing, &omega, k)?;
                t.check(is_basic(g, &c)?, || format!("{name}: omega {omega:?} gives non-basic {c}"));
                seen.push(c.values);
            }
            let total = seen.len();
            seen.sort();
            seen.dedup();
            t.eq(&format!("{name} k={k} distinct images"), seen.len(), total);
            injected += total;
        }
    }
    t.note(format!("{injected} injected covers"));
    Ok(t)
}

fn unmixed_lattices(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    let mut whiskers = 0;
    for n in 1..=5 {
        for base in all_labelled_trees(n) {
            let g = whisker(&base)?;
            let l = build_lattice(&g)?;
            let (rank, chains) = l.rank_and_chains();
            let p = profile(&g, exec)?;
            t.eq("whisker rank vs dim", Some(rank as u32), p.dim);
            t.eq("whisker rank vs n/2+1", rank, g.n() / 2 + 1);
            t.eq("whisker chains vs multiplicity", Some(chains), p.multiplicity.map(BigUint::from));
            whiskers += 1;
        }
    }
    let mut posets = 0;
    for m in 1..=4 {
        for poset in FinitePoset::all_labelled(m) {
            let g = poset_graph(&poset);
            let l = build_lattice(&g)?;
            let (rank, chains) = l.rank_and_chains();
            let p = hilbert_function_with(&g, 10, DEFAULT_WINDOW, exec)?;
            t.eq("G(P) rank vs dim", Some(rank as u32), p.dim);
            t.eq("G(P) chains vs multiplicity", Some(chains), p.multiplicity.map(BigUint::from));
            t.check(order_isomorphic(&l, &poset_ideals(&poset)), || format!("G(P) lattice not J(P) for {poset:?}"));
            t.eq("gorenstein vs purity", gorenstein_test(&poset), is_pure(&poset));
            posets += 1;
        }
    }
    t.note(format!("{whiskers} whisker trees, {posets} labelled posets"));
    Ok(t)
}

/// Purity by listing every maximal chain explicitly.
fn is_pure(p: &FinitePoset) -> bool {
    let m = p.len();
    let below = |x: usize, y: usize| x != y && p.leq(x, y);
    let minimal: Vec<usize> = (0..m).filter(|&y| !(0..m).any(|x| below(x, y))).collect();
    fn extend(p: &FinitePoset, chain: &mut Vec<usize>, lengths: &mut Vec<usize>) {
        let last = *chain.last().unwrap();
        let m = p.len();
        let covers: Vec<usize> = (0..m)
            .filter(|&y| y != last && p.leq(last, y) && !(0..m).any(|z| z != last && z != y && p.leq(last, z) && p.leq(z, y)))
            .collect();
        if covers.is_empty() {
            lengths.push(chain.len());
        }
        for y in covers {
            chain.push(y);
            extend(p, chain, lengths);
            chain.pop();
        }
    }
    let mut lengths = Vec::new();
    for x in minimal {
        extend(p, &mut vec![x], &mut lengths);
    }
    lengths.windows(2).all(|w| w[0] == w[1])
}

fn oracle_equivalence(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    let mut graphs: Vec<(String, BipartiteGraph)> =
        paper_families().into_iter().filter(|(_, g)| g.n() <= 8).collect();
    graphs.push(("G(2-chain)".into(), poset_graph(&FinitePoset::chain(2))));
    graphs.push(("G(antichain 3)".into(), poset_graph(&FinitePoset::antichain(3))));
    let mut compared = 0;
    for (name, g) in &graphs {
        let h = WeightedHypergraph::from_graph(g);
        for k in 1..=3 {
            let fast: Vec<Vec<u32>> = enumerate_basic_with(g, k, exec)?.covers.into_iter().map(|c| c.values).collect();
            t.eq(&format!("{name} k={k} brute"), &fast, &brute_basic_covers(g.n(), g.edges(), k));
            let hyper: Vec<Vec<u32>> =
                enumerate_basic_h_with(&h, k, exec, DEFAULT_BOX_BUDGET)?.covers.into_iter().map(|c| c.values).collect();
            t.eq(&format!("{name} k={k} hypergraph"), &hyper, &fast);
        }
        if g.a() <= PERMUTATION_LIMIT && g.b() <= PERMUTATION_LIMIT {
            t.eq(&format!("{name} gdim permutations"), gdim_of(g, exec)?, permutation_gdim(g)?);
        }
        compared += 1;
    }
    for n in 1..=4 {
        let h = WeightedHypergraph::simplex(n)?;
        for k in 1..=4 {
            t.eq(
                &format!("simplex {n} k={k}"),
                enumerate_basic_h_with(&h, k, exec, DEFAULT_BOX_BUDGET)?.count() as u64,
                simplex_tight_count(n, k),
            );
        }
    }
    t.note(format!("{compared} graphs"));
    Ok(t)
}

fn tree_theorem(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    let mut rng = SplitMix64::seed_from_u64(14);
    for i in 0..50 {
        let n = rng.random_range(2..=12);
        let g = generate(&GraphSpec::RandomTree { n, seed: rng.random() })?;
        let td = tree_dim(&g)?;
        let p = profile(&g, exec)?;
        t.eq(&format!("tree {i} (n={n}) dim"), Some(td.dim), p.dim);
        t.check(p.multiplicity.is_some_and(|e| BigUint::from(e) <= td.multiplicity_bound), || {
            format!(
                "tree {i} (n={n}, a={}, r={}): multiplicity {:?} > bound {}",
                td.a, td.r, p.multiplicity, td.multiplicity_bound
            )
        });
        t.check(tree_optimal_leaves_right(&g).is_ok(), || format!("tree {i}: no leaves-right optimal drawing"));
    }
    Ok(t)
}

fn hypergraph_bounds(exec: Exec) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=4 {
        let r = degree_bounds_check_with(&WeightedHypergraph::simplex(n)?, 10, DEFAULT_WINDOW, exec, DEFAULT_BOX_BUDGET)?;
        t.check(r.within_bounds, || format!("simplex {n}: degree {} outside [{}, {}]", r.degree, r.lower, r.upper));
    }
    let mut rng = SplitMix64::seed_from_u64(15);
    let mut over_budget = 0;
    for i in 0..20 {
        let n = rng.random_range(2..=6);
        let h = random_antichain(n, 3, 5, 2, rng.random())?;
        match degree_bounds_check_with(&h, 10, DEFAULT_WINDOW, exec, DEFAULT_BOX_BUDGET) {
            Ok(r) => t.check(r.within_bounds, || {
                format!("random {i}: degree {} outside [{}, {}] (period {})", r.degree, r.lower, r.upper, r.period)
            }),
            Err(crate::Error::Budget { .. }) => over_budget += 1,
            Err(e) => t.check(false, || format!("random {i}: {e}")),
        }
    }
    t.note(format!("{over_budget} random hypergraphs over the box budget"));
    Ok(t)
}
