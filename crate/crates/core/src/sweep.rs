//! Exhaustive and seeded sweeps that cross-check the constructions against
//! the brute-force oracle.
//!
//! Each instance is an independent pure computation. With the `parallel`
//! feature the instances are spread over the rayon pool; results are always
//! merged in instance order, so reports are identical either way.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::dense::odd_spanning_tree_dense;
use crate::error::Error;
use crate::families::{
    circulant, cycle, gen_c5k, gen_complete, gen_complete_bipartite, gen_random, gen_random_split, path,
};
use crate::graph::{
    complement, edge_connectivity, is_connected, is_triangle_free, tree_bipartition, Bipartition, Graph,
};
use crate::odd_factor::connected_odd_factor;
use crate::oracle::{
    enumerate_spanning_trees, find_connected_odd_factor_bruteforce, find_odd_spanning_tree_bruteforce,
    find_tree_pair_bruteforce, verify_connected_odd_factor, verify_odd_spanning_tree, FACTOR_SEARCH_MAX_EDGES,
};
use crate::packing::{two_edge_disjoint_spanning_trees, verify_packing, PackingOutcome};
use crate::split::{find_split_partition, split_no_tree_condition, split_odd_spanning_tree, SplitPartition};
use crate::trifree::{complement_connected, is_complete_bipartite, trifree_complement_tree, TreeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Executor {
    Sequential,
    Parallel,
}

impl Default for Executor {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Executor::Parallel
        } else {
            Executor::Sequential
        }
    }
}

impl Executor {
    /// `f(0), f(1), ..., f(count - 1)` in index order. Without the
    /// `parallel` feature both variants run sequentially.
    pub fn map<T, F>(self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Executor::Parallel => {
                use rayon::prelude::*;
                (0..count).into_par_iter().map(f).collect()
            }
            _ => (0..count).map(f).collect(),
        }
    }
}

/// Sizes the global worker pool. Returns false if the pool was already
/// built or the crate has no parallel support.
pub fn set_worker_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        false
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub universe: String,
    pub instances: usize,
    pub counts: BTreeMap<String, usize>,
    pub disagreements: Vec<String>,
    pub coverage: BTreeMap<TreeId, usize>,
}

impl SweepReport {
    pub fn new(universe: impl Into<String>) -> Self {
        SweepReport { universe: universe.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn count(&self, verdict: &str) -> usize {
        self.counts.get(verdict).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: SweepReport) {
        if self.universe.is_empty() {
            self.universe = other.universe;
        } else if !other.universe.is_empty() {
            self.universe = format!("{}; {}", self.universe, other.universe);
        }
        self.instances += other.instances;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.disagreements.extend(other.disagreements);
        for (k, v) in other.coverage {
            *self.coverage.entry(k).or_default() += v;
        }
    }

    fn absorb(&mut self, findings: Vec<Finding>) {
        self.instances += findings.len();
        for f in findings {
            *self.counts.entry(f.verdict.to_string()).or_default() += 1;
            if let Some(d) = f.disagreement {
                self.disagreements.push(d);
            }
            if let Some(id) = f.tree {
                *self.coverage.entry(id).or_default() += 1;
            }
        }
    }
}

#[derive(Debug)]
struct Finding {
    verdict: &'static str,
    disagreement: Option<String>,
    tree: Option<TreeId>,
}

impl Finding {
    fn ok(verdict: &'static str) -> Self {
        Finding { verdict, disagreement: None, tree: None }
    }

    fn bad(label: &str, g: &Graph, what: impl std::fmt::Display) -> Self {
        Finding { verdict: "disagreement", disagreement: Some(format!("{label}: {what} on {g:?}")), tree: None }
    }
}

fn run(universe: String, exec: Executor, count: usize, f: impl Fn(usize) -> Finding + Sync + Send) -> SweepReport {
    let mut report = SweepReport::new(universe);
    report.absorb(exec.map(count, f));
    report
}

fn labeled_count(n: usize) -> usize {
    1usize << (n * n.saturating_sub(1) / 2)
}

/// Per-instance seed derived from a base seed and the instance index.
pub fn instance_seed(base: u64, index: u64) -> u64 {
    SplitMix64::seed_from_u64(base ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15)).next_u64()
}

fn dense_finding(label: &str, g: &Graph) -> Finding {
    let n = g.order();
    if n % 2 == 1 || n < 2 || g.min_degree() < n / 2 + 1 || !is_connected(g).unwrap_or(false) {
        return Finding::ok("outside-bound");
    }
    match odd_spanning_tree_dense(g) {
        Ok(t) if verify_odd_spanning_tree(g, &t).ok => Finding::ok("tree"),
        Ok(_) => Finding::bad(label, g, "tree failed verification"),
        Err(e) => Finding::bad(label, g, e),
    }
}

/// Every labeled graph on `n` vertices meeting the degree bound.
pub fn dense_exhaustive(exec: Executor, n: usize) -> SweepReport {
    run(format!("dense: labeled n={n}"), exec, labeled_count(n), |mask| {
        dense_finding("dense", &Graph::from_mask(n, mask as u64))
    })
}

/// `count` seeded random graphs with n in {8, 10, 12}, resampled until the
/// degree bound holds.
pub fn dense_random(exec: Executor, count: usize, seed: u64) -> SweepReport {
    run(format!("dense: {count} seeded, n in 8..=12"), exec, count, |i| {
        let n = [8, 10, 12][i % 3];
        let g = (0u64..)
            .map(|j| gen_random(n, 0.9, instance_seed(seed, (i as u64) << 20 | j)))
            .find(|g| g.min_degree() > n / 2)
            .expect("dense samples eventually meet the bound");
        dense_finding("dense-random", &g)
    })
}

fn split_finding(label: &str, g: &Graph, sp: &SplitPartition) -> Finding {
    let holds = match split_no_tree_condition(g, sp) {
        Ok(h) => h,
        Err(e) => return Finding::bad(label, g, e),
    };
    let oracle = match find_odd_spanning_tree_bruteforce(g) {
        Ok(found) => found.is_some(),
        Err(e) => return Finding::bad(label, g, e),
    };
    if holds == oracle {
        return Finding::bad(label, g, format!("condition {holds} but oracle existence {oracle}"));
    }
    if holds {
        return Finding::ok("no-tree");
    }
    match split_odd_spanning_tree(g, sp) {
        Ok(t) => {
            let degrees = t.degrees(g.order());
            if !verify_odd_spanning_tree(g, &t).ok {
                Finding::bad(label, g, "tree failed verification")
            } else if sp.x.iter().any(|&x| degrees[x] != 1) {
                Finding::bad(label, g, "independent vertex is not a leaf")
            } else {
                Finding::ok("tree")
            }
        }
        Err(e) => Finding::bad(label, g, e),
    }
}

/// Connected split graphs of even order `n` with a clique side of size at
/// least 2.
pub fn split_exhaustive(exec: Executor, n: usize) -> SweepReport {
    run(format!("split: labeled n={n}"), exec, labeled_count(n), |mask| {
        let g = Graph::from_mask(n, mask as u64);
        if n % 2 == 1 || !is_connected(&g).unwrap_or(false) {
            return Finding::ok("skipped");
        }
        match find_split_partition(&g) {
            Some(sp) if sp.y.len() >= 2 => split_finding("split", &g, &sp),
            _ => Finding::ok("skipped"),
        }
    })
}

/// Seeded split instances: `|X| <= 6`, `|Y|` in 2..=5, even order,
/// connected.
pub fn split_random(exec: Executor, count: usize, seed: u64) -> SweepReport {
    run(format!("split: {count} seeded, s<=6, t in 2..=5"), exec, count, |i| {
        let t = 2 + i % 4;
        let s = if t % 2 == 0 { 2 * ((i / 4) % 4) } else { 1 + 2 * ((i / 4) % 3) };
        let p = [0.2, 0.35, 0.5, 0.7][(i / 16) % 4];
        let (g, sp) = (0u64..)
            .map(|j| gen_random_split(s, t, p, instance_seed(seed, (i as u64) << 20 | j)))
            .find(|(g, _)| is_connected(g).unwrap_or(false))
            .expect("split samples are eventually connected");
        split_finding("split-random", &g, &sp)
    })
}

fn trifree_finding(label: &str, g: &Graph) -> Finding {
    let h = complement(g);
    let connected = match complement_connected(g) {
        Ok(c) => c,
        Err(e) => return Finding::bad(label, g, e),
    };
    if connected == is_complete_bipartite(g).is_some() {
        return Finding::bad(label, g, "complement connectivity disagrees with complete-bipartite test");
    }
    let oracle = connected
        && match find_odd_spanning_tree_bruteforce(&h) {
            Ok(found) => found.is_some(),
            Err(e) => return Finding::bad(label, g, e),
        };
    let decision = match trifree_complement_tree(g) {
        Ok(d) => d,
        Err(Error::ExhaustedCases { branch, .. }) => return Finding::bad(label, g, format!("exhausted at {branch}")),
        Err(e) => return Finding::bad(label, g, e),
    };
    if decision.exists != oracle {
        return Finding::bad(label, g, format!("decision {} but oracle {oracle}", decision.exists));
    }
    match decision.tree() {
        Some(t) if !verify_odd_spanning_tree(&h, t).ok => Finding::bad(label, g, "tree failed verification"),
        Some(_) => Finding { verdict: "tree", disagreement: None, tree: decision.tree_id() },
        None => Finding::ok("excluded"),
    }
}

/// Triangle-free labeled graphs of even order `n`.
pub fn trifree_exhaustive(exec: Executor, n: usize) -> SweepReport {
    run(format!("trifree: labeled n={n}"), exec, labeled_count(n), |mask| {
        let g = Graph::from_mask(n, mask as u64);
        if n % 2 == 1 || !is_triangle_free(&g) {
            return Finding::ok("skipped");
        }
        trifree_finding("trifree", &g)
    })
}

/// Random graph thinned to triangle-free by dropping, in canonical order,
/// every edge that would close a triangle with the edges already kept.
pub fn gen_random_triangle_free(n: usize, p: f64, seed: u64) -> Graph {
    let dense = gen_random(n, p, seed);
    let mut g = Graph::new(n);
    for (u, v) in dense.edges() {
        if !g.neighbors(u).any(|w| g.has_edge(w, v)) {
            g.add_edge(u, v);
        }
    }
    g
}

/// `count` seeded triangle-free graphs on `n` vertices.
pub fn trifree_random(exec: Executor, n: usize, count: usize, seed: u64) -> SweepReport {
    run(format!("trifree: {count} seeded, n={n}"), exec, count, |i| {
        let p = [0.2, 0.3, 0.45, 0.6][i % 4];
        let g = gen_random_triangle_free(n, p, instance_seed(seed, i as u64));
        trifree_finding("trifree-random", &g)
    })
}

/// Hand-built triangle-free graphs, one or more per construction shape.
pub fn trifree_families() -> Vec<(&'static str, Graph)> {
    let minus_matching = |a: usize, b: usize, k: usize| {
        let mut g = gen_complete_bipartite(a, b);
        for i in 0..k {
            g.remove_edge(i, a + i);
        }
        g
    };
    vec![
        ("P6", path(6)),
        ("C6", cycle(6)),
        ("C8", cycle(8)),
        ("K1,3+K1,1", Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (4, 5)])),
        ("P4+K2", Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (4, 5)])),
        ("star+isolated", Graph::from_edges(4, [(1, 2), (1, 3)])),
        ("K2,4-2e", minus_matching(2, 4, 2)),
        ("K4,4-2e", minus_matching(4, 4, 2)),
        ("K2,6-2e", minus_matching(2, 6, 2)),
        ("C5(4)", gen_c5k(4)),
        ("C5(6)", gen_c5k(6)),
        ("odd-pair", Graph::from_edges(6, [(0, 5), (1, 3), (1, 4), (1, 5), (2, 5)])),
        ("odd-claw", Graph::from_edges(6, [(0, 1), (0, 3), (0, 4), (2, 5)])),
        ("independent-two-partners", Graph::from_edges(6, [(0, 5), (1, 2), (1, 5), (2, 4), (3, 5)])),
        ("cross-partner", Graph::from_edges(6, [(0, 1), (0, 3), (1, 4), (2, 3), (2, 4), (3, 5)])),
        (
            "singleton-part-even",
            Graph::from_edges(
                8,
                [(0, 1), (0, 3), (0, 4), (0, 5), (0, 7), (1, 2), (2, 3), (2, 5), (2, 6), (4, 6), (6, 7)],
            ),
        ),
        (
            "singleton-part-odd",
            Graph::from_edges(
                8,
                [(0, 2), (0, 3), (0, 4), (0, 5), (0, 7), (1, 2), (1, 6), (1, 7), (3, 6), (4, 6), (5, 6)],
            ),
        ),
        ("C5+K1", {
            let mut g = Graph::new(6);
            for (u, v) in cycle(5).edges() {
                g.add_edge(u, v);
            }
            g
        }),
    ]
}

/// The hand-built families plus anything `extra` supplies.
pub fn trifree_crafted(exec: Executor, extra: Vec<(&'static str, Graph)>) -> SweepReport {
    let mut all = trifree_families();
    all.extend(extra);
    run(format!("trifree: {} crafted", all.len()), exec, all.len(), |i| {
        let (name, g) = &all[i];
        trifree_finding(name, g)
    })
}

fn packing_finding(label: &str, g: &Graph) -> Finding {
    let outcome = match two_edge_disjoint_spanning_trees(g) {
        Ok(o) => o,
        Err(e) => return Finding::bad(label, g, e),
    };
    if !verify_packing(g, &outcome) {
        return Finding::bad(label, g, "outcome failed verification");
    }
    match outcome {
        PackingOutcome::Trees(..) => Finding::ok("trees"),
        PackingOutcome::Certificate(_) => match find_tree_pair_bruteforce(g) {
            Ok(None) => Finding::ok("certificate"),
            Ok(Some(_)) => Finding::bad(label, g, "certificate issued but a tree pair exists"),
            Err(e) => Finding::bad(label, g, e),
        },
    }
}

/// Connected labeled graphs on `n` vertices.
pub fn packing_exhaustive(exec: Executor, n: usize) -> SweepReport {
    run(format!("packing: labeled n={n}"), exec, labeled_count(n), |mask| {
        let g = Graph::from_mask(n, mask as u64);
        if n == 0 || !is_connected(&g).unwrap_or(false) {
            return Finding::ok("skipped");
        }
        packing_finding("packing", &g)
    })
}

fn factor_finding(label: &str, g: &Graph) -> Finding {
    let trace = match connected_odd_factor(g) {
        Ok(t) => t,
        Err(e) => return Finding::bad(label, g, e),
    };
    if !verify_connected_odd_factor(g, &trace.result).ok {
        return Finding::bad(label, g, "factor failed verification");
    }
    if g.edge_count() > FACTOR_SEARCH_MAX_EDGES {
        return Finding::ok("factor");
    }
    match find_connected_odd_factor_bruteforce(g) {
        Ok(Some(_)) => Finding::ok("factor-confirmed"),
        Ok(None) => Finding::bad(label, g, "oracle finds no factor"),
        Err(e) => Finding::bad(label, g, e),
    }
}

/// The named 4-edge-connected graphs.
pub fn factor_families() -> Vec<(&'static str, Graph)> {
    vec![
        ("K6", gen_complete(6)),
        ("K8", gen_complete(8)),
        ("K4,4", gen_complete_bipartite(4, 4)),
        ("C8(1,2)", circulant(8, &[1, 2])),
    ]
}

/// Named families plus `count` seeded graphs of even order at most 12 with
/// edge connectivity at least 4.
pub fn factor_suite(exec: Executor, count: usize, seed: u64) -> SweepReport {
    let mut graphs: Vec<(String, Graph)> =
        factor_families().into_iter().map(|(name, g)| (name.to_string(), g)).collect();
    for i in 0..count {
        let n = [6, 8, 10, 12][i % 4];
        let p = [0.75, 0.6, 0.5, 0.45][i % 4];
        let (j, g) = (0u64..)
            .map(|j| (j, gen_random(n, p, instance_seed(seed, (i as u64) << 20 | j))))
            .find(|(_, g)| edge_connectivity(g) >= 4)
            .expect("samples eventually reach edge connectivity 4");
        graphs.push((format!("random#{i}.{j}"), g));
    }
    run(format!("factor: {} named + {count} seeded", factor_families().len()), exec, graphs.len(), |i| {
        factor_finding(&graphs[i].0, &graphs[i].1)
    })
}

fn same_sides(a: &Bipartition, b: &Bipartition) -> bool {
    a == b
}

fn bipartition_finding(label: &str, g: &Graph) -> Finding {
    let n = g.order();
    let mut first: Option<Bipartition> = None;
    let mut differs = false;
    let bipartite = crate::graph::is_bipartite(g);
    let walked = enumerate_spanning_trees(g, |t| {
        let bp = tree_bipartition(t, n).expect("enumerated trees are spanning");
        match &first {
            None => first = Some(bp),
            Some(f) if !same_sides(f, &bp) => {
                differs = true;
                if !bipartite {
                    return ControlFlow::Break(());
                }
            }
            Some(_) => {}
        }
        ControlFlow::Continue(())
    });
    if let Err(e) = walked {
        return Finding::bad(label, g, e);
    }
    match (bipartite, differs) {
        (true, false) => Finding::ok("bipartite-stable"),
        (false, true) => Finding::ok("nonbipartite-varies"),
        (true, true) => Finding::bad(label, g, "bipartite graph with differing tree bipartitions"),
        (false, false) => Finding::bad(label, g, "non-bipartite graph with a single tree bipartition"),
    }
}

/// Connected labeled graphs on `n >= 2` vertices: tree bipartitions agree
/// exactly when the graph is bipartite.
pub fn bipartition_exhaustive(exec: Executor, n: usize) -> SweepReport {
    run(format!("tree-bipartition: labeled n={n}"), exec, labeled_count(n), |mask| {
        let g = Graph::from_mask(n, mask as u64);
        if n < 2 || !is_connected(&g).unwrap_or(false) {
            return Finding::ok("skipped");
        }
        bipartition_finding("tree-bipartition", &g)
    })
}

/// `count` seeded connected graphs on `n` vertices.
pub fn bipartition_random(exec: Executor, n: usize, count: usize, seed: u64) -> SweepReport {
    run(format!("tree-bipartition: {count} seeded, n={n}"), exec, count, |i| {
        let p = [0.3, 0.45, 0.6][i % 3];
        let g = (0u64..)
            .map(|j| gen_random(n, p, instance_seed(seed, (i as u64) << 20 | j)))
            .find(|g| is_connected(g).unwrap_or(false))
            .expect("samples are eventually connected");
        bipartition_finding("tree-bipartition-random", &g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn executors_agree() {
        let a = Executor::Sequential.map(100, |i| i * i);
        let b = Executor::Parallel.map(100, |i| i * i);
        assert_eq!(a, b);
        assert_eq!(dense_exhaustive(Executor::Sequential, 4), dense_exhaustive(Executor::Parallel, 4));
    }

    #[test]
    fn small_sweeps_pass() {
        for report in [
            dense_exhaustive(Executor::default(), 4),
            split_exhaustive(Executor::default(), 4),
            trifree_exhaustive(Executor::default(), 4),
            packing_exhaustive(Executor::default(), 4),
            bipartition_exhaustive(Executor::default(), 4),
        ] {
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.instances, 64);
        }
    }

    #[test]
    fn seeded_instances_are_reproducible() {
        assert_eq!(instance_seed(1, 2), instance_seed(1, 2));
        assert_ne!(instance_seed(1, 2), instance_seed(1, 3));
        let g = gen_random_triangle_free(8, 0.5, 3);
        assert!(is_triangle_free(&g));
    }
}
