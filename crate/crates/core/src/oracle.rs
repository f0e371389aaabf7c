//! Brute-force ground truth for small graphs, and the verifiers every
//! construction in this crate is checked against.
//!
//! Searches here are exhaustive up to sound pruning and refuse inputs above
//! their size caps instead of truncating.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSet, Graph, UnionFind, Vertex};

/// Largest order accepted by the spanning-tree searches.
pub const TREE_SEARCH_MAX_ORDER: usize = 10;
/// Largest edge count accepted by the odd-factor subset search.
pub const FACTOR_SEARCH_MAX_EDGES: usize = 22;
/// Largest order accepted by the edge-disjoint tree pair search.
pub const PAIR_SEARCH_MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    NotSubgraph,
    WrongEdgeCount,
    NotConnected,
    NotSpanning,
    EvenDegreeVertex(Vertex),
    HasCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub ok: bool,
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    fn pass() -> Self {
        VerifyReport { ok: true, failure: None }
    }

    fn fail(f: VerifyFailure) -> Self {
        VerifyReport { ok: false, failure: Some(f) }
    }
}

fn first_even(degrees: &[usize]) -> Option<Vertex> {
    degrees.iter().position(|d| d % 2 == 0)
}

fn spans_connected(edges: &EdgeSet, n: usize) -> bool {
    let mut uf = UnionFind::new(n);
    let merged = edges.iter().filter(|&(u, v)| uf.union(u, v)).count();
    merged + 1 == n
}

pub fn verify_odd_spanning_tree(g: &Graph, t: &EdgeSet) -> VerifyReport {
    let n = g.order();
    if !t.is_subgraph_of(g) {
        return VerifyReport::fail(VerifyFailure::NotSubgraph);
    }
    if n == 0 || t.len() != n - 1 {
        return VerifyReport::fail(VerifyFailure::WrongEdgeCount);
    }
    let mut uf = UnionFind::new(n);
    if t.iter().any(|(u, v)| !uf.union(u, v)) {
        return VerifyReport::fail(VerifyFailure::HasCycle);
    }
    let degrees = t.degrees(n);
    if n > 1 && degrees.contains(&0) {
        return VerifyReport::fail(VerifyFailure::NotSpanning);
    }
    if !spans_connected(t, n) {
        return VerifyReport::fail(VerifyFailure::NotConnected);
    }
    match first_even(&degrees) {
        Some(v) => VerifyReport::fail(VerifyFailure::EvenDegreeVertex(v)),
        None => VerifyReport::pass(),
    }
}

pub fn verify_connected_odd_factor(g: &Graph, f: &EdgeSet) -> VerifyReport {
    let n = g.order();
    if !f.is_subgraph_of(g) {
        return VerifyReport::fail(VerifyFailure::NotSubgraph);
    }
    let degrees = f.degrees(n);
    if n == 0 || degrees.contains(&0) {
        return VerifyReport::fail(VerifyFailure::NotSpanning);
    }
    if !spans_connected(f, n) {
        return VerifyReport::fail(VerifyFailure::NotConnected);
    }
    match first_even(&degrees) {
        Some(v) => VerifyReport::fail(VerifyFailure::EvenDegreeVertex(v)),
        None => VerifyReport::pass(),
    }
}

/// Include/exclude search over the edges in canonical order. Exclusions
/// that would disconnect `chosen ∪ undecided` are never taken, so every
/// leaf is connected; with `tree` set, edges closing a cycle are skipped and
/// leaves are spanning trees.
struct Search<F> {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    tree: bool,
    parity: bool,
    visit: F,
    visited: usize,
    chosen: Vec<usize>,
    deg: Vec<usize>,
    open: Vec<usize>,
}

impl<F: FnMut(&EdgeSet) -> ControlFlow<()>> Search<F> {
    fn new(g: &Graph, tree: bool, parity: bool, visit: F) -> Self {
        let n = g.order();
        Search {
            n,
            edges: g.edges().collect(),
            tree,
            parity,
            visit,
            visited: 0,
            chosen: Vec::new(),
            deg: vec![0; n],
            open: g.degrees(),
        }
    }

    /// A vertex whose incident edges are all decided must already be odd.
    fn parity_ok(&self, u: Vertex, v: Vertex) -> bool {
        !self.parity || [u, v].iter().all(|&w| self.open[w] > 0 || self.deg[w] % 2 == 1)
    }

    fn emit(&mut self) -> ControlFlow<()> {
        if self.parity && self.deg.iter().any(|d| d % 2 == 0) {
            return ControlFlow::Continue(());
        }
        self.visited += 1;
        let set: EdgeSet = self.chosen.iter().map(|&i| self.edges[i]).collect();
        (self.visit)(&set)
    }

    /// Whether `chosen ∪ edges[from..]` still connects all vertices.
    fn still_connected(&self, uf: &UnionFind, from: usize) -> bool {
        let mut uf = uf.clone();
        let mut parts = self.n - self.chosen_merges();
        for &(a, b) in &self.edges[from..] {
            if uf.union(a, b) {
                parts -= 1;
            }
        }
        parts == 1
    }

    fn chosen_merges(&self) -> usize {
        if self.tree {
            self.chosen.len()
        } else {
            let mut uf = UnionFind::new(self.n);
            self.chosen.iter().filter(|&&i| uf.union(self.edges[i].0, self.edges[i].1)).count()
        }
    }

    fn run(&mut self, i: usize, uf: &mut UnionFind) -> ControlFlow<()> {
        if self.tree && self.chosen.len() + 1 == self.n {
            return self.emit();
        }
        if i == self.edges.len() {
            return if self.tree { ControlFlow::Continue(()) } else { self.emit() };
        }
        let (u, v) = self.edges[i];
        self.open[u] -= 1;
        self.open[v] -= 1;
        let result = self.branch(i, u, v, uf);
        self.open[u] += 1;
        self.open[v] += 1;
        result
    }

    fn branch(&mut self, i: usize, u: Vertex, v: Vertex, uf: &mut UnionFind) -> ControlFlow<()> {
        let closes_cycle = uf.find(u) == uf.find(v);
        if self.tree && closes_cycle {
            if self.parity_ok(u, v) {
                return self.run(i + 1, uf);
            }
            return ControlFlow::Continue(());
        }

        self.deg[u] += 1;
        self.deg[v] += 1;
        self.chosen.push(i);
        if self.parity_ok(u, v) {
            let mut joined = uf.clone();
            joined.union(u, v);
            let r = self.run(i + 1, &mut joined);
            if r.is_break() {
                self.chosen.pop();
                self.deg[u] -= 1;
                self.deg[v] -= 1;
                return r;
            }
        }
        self.chosen.pop();
        self.deg[u] -= 1;
        self.deg[v] -= 1;

        if self.parity_ok(u, v) && self.still_connected(uf, i + 1) {
            return self.run(i + 1, uf);
        }
        ControlFlow::Continue(())
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g)? {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Visits every spanning tree exactly once (deletion/contraction over edges
/// in canonical order, bridges forced in) and returns how many were visited.
///
/// Intended for small graphs; the number of trees grows like `n^(n-2)`.
pub fn enumerate_spanning_trees<F>(g: &Graph, visit: F) -> Result<usize>
where
    F: FnMut(&EdgeSet) -> ControlFlow<()>,
{
    require_connected(g)?;
    let mut search = Search::new(g, true, false, visit);
    let _ = search.run(0, &mut UnionFind::new(g.order()));
    Ok(search.visited)
}

/// Exhaustive odd spanning tree search with parity pruning.
pub fn find_odd_spanning_tree_bruteforce(g: &Graph) -> Result<Option<EdgeSet>> {
    if g.order() > TREE_SEARCH_MAX_ORDER {
        return Err(Error::SizeCap { what: "order", limit: TREE_SEARCH_MAX_ORDER, actual: g.order() });
    }
    require_connected(g)?;
    let mut found = None;
    let mut search = Search::new(g, true, true, |t: &EdgeSet| {
        found = Some(t.clone());
        ControlFlow::Break(())
    });
    let _ = search.run(0, &mut UnionFind::new(g.order()));
    Ok(found)
}

/// Exhaustive connected odd factor search over edge subsets.
pub fn find_connected_odd_factor_bruteforce(g: &Graph) -> Result<Option<EdgeSet>> {
    let m = g.edge_count();
    if m > FACTOR_SEARCH_MAX_EDGES {
        return Err(Error::SizeCap { what: "edge count", limit: FACTOR_SEARCH_MAX_EDGES, actual: m });
    }
    require_connected(g)?;
    let mut found = None;
    let mut search = Search::new(g, false, true, |f: &EdgeSet| {
        found = Some(f.clone());
        ControlFlow::Break(())
    });
    let _ = search.run(0, &mut UnionFind::new(g.order()));
    Ok(found)
}

/// Two edge-disjoint spanning trees found by trying every spanning tree as
/// the first one.
pub fn find_tree_pair_bruteforce(g: &Graph) -> Result<Option<(EdgeSet, EdgeSet)>> {
    let n = g.order();
    if n > PAIR_SEARCH_MAX_ORDER {
        return Err(Error::SizeCap { what: "order", limit: PAIR_SEARCH_MAX_ORDER, actual: n });
    }
    let mut found = None;
    enumerate_spanning_trees(g, |t| {
        let rest = g.edge_set().symmetric_difference(t);
        let mut uf = UnionFind::new(n);
        let second: EdgeSet = rest.iter().filter(|&(u, v)| uf.union(u, v)).collect();
        if second.len() + 1 == n {
            found = Some((t.clone(), second));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, gen_c5k, gen_complete, gen_complete_bipartite, path};
    use crate::graph::{complement, is_spanning_tree};

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().copied().collect()
    }

    fn count_trees(g: &Graph) -> usize {
        enumerate_spanning_trees(g, |_| ControlFlow::Continue(())).unwrap()
    }

    #[test]
    fn verify_tree_examples() {
        assert!(verify_odd_spanning_tree(&gen_complete(2), &es(&[(0, 1)])).ok);
        let star = es(&[(0, 1), (0, 2), (0, 3)]);
        assert!(verify_odd_spanning_tree(&gen_complete(4), &star).ok);
        assert_eq!(star.degrees(4), vec![3, 1, 1, 1]);
        let p = es(&[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(verify_odd_spanning_tree(&gen_complete(4), &p).failure, Some(VerifyFailure::EvenDegreeVertex(1)));
    }

    #[test]
    fn verify_tree_failure_kinds() {
        let k4 = gen_complete(4);
        let c4 = cycle(4);
        assert_eq!(
            verify_odd_spanning_tree(&c4, &es(&[(0, 2), (0, 1), (0, 3)])).failure,
            Some(VerifyFailure::NotSubgraph)
        );
        assert_eq!(verify_odd_spanning_tree(&k4, &es(&[(0, 1), (0, 2)])).failure, Some(VerifyFailure::WrongEdgeCount));
        assert_eq!(
            verify_odd_spanning_tree(&k4, &es(&[(0, 1), (0, 2), (1, 2)])).failure,
            Some(VerifyFailure::HasCycle)
        );
        let report = verify_odd_spanning_tree(&k4, &es(&[(0, 1), (0, 2), (0, 3)]));
        assert_eq!(report, VerifyReport { ok: true, failure: None });
    }

    #[test]
    fn verify_factor_examples() {
        assert!(verify_connected_odd_factor(&gen_complete(2), &es(&[(0, 1)])).ok);
        let k4 = gen_complete(4);
        assert!(verify_connected_odd_factor(&k4, &k4.edge_set()).ok);
        let c4 = cycle(4);
        assert_eq!(verify_connected_odd_factor(&c4, &c4.edge_set()).failure, Some(VerifyFailure::EvenDegreeVertex(0)));
        assert_eq!(verify_connected_odd_factor(&k4, &es(&[(0, 1), (2, 3)])).failure, Some(VerifyFailure::NotConnected));
        assert_eq!(
            verify_connected_odd_factor(&k4, &es(&[(0, 1), (0, 2), (1, 2)])).failure,
            Some(VerifyFailure::NotSpanning)
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count_trees(&cycle(4)), 4);
        assert_eq!(count_trees(&gen_complete(4)), 16);
        assert_eq!(count_trees(&gen_complete(2)), 1);
        assert_eq!(count_trees(&gen_complete(1)), 1);
        for n in 1..=6usize {
            assert_eq!(count_trees(&gen_complete(n)), n.pow(n.saturating_sub(2) as u32), "K{n}");
        }
        // K_{m,n} has m^(n-1) n^(m-1) spanning trees
        assert_eq!(count_trees(&gen_complete_bipartite(3, 3)), 81);
        assert_eq!(count_trees(&gen_complete_bipartite(2, 4)), 32);
    }

    #[test]
    fn enumeration_visits_distinct_trees() {
        let g = gen_complete_bipartite(3, 3);
        let mut seen = std::collections::BTreeSet::new();
        enumerate_spanning_trees(&g, |t| {
            assert!(is_spanning_tree(t, 6) && t.is_subgraph_of(&g));
            assert!(seen.insert(t.clone()));
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(seen.len(), 81);
    }

    #[test]
    fn enumeration_stops_early() {
        let mut calls = 0;
        let n = enumerate_spanning_trees(&gen_complete(5), |_| {
            calls += 1;
            if calls == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(n, 3);
        assert!(matches!(
            enumerate_spanning_trees(&Graph::new(3), |_| ControlFlow::Continue(())),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn odd_tree_search_examples() {
        assert_eq!(find_odd_spanning_tree_bruteforce(&cycle(4)).unwrap(), None);
        let t = find_odd_spanning_tree_bruteforce(&gen_complete(4)).unwrap().unwrap();
        let mut d = t.degrees(4);
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 1, 3]);
        assert_eq!(find_odd_spanning_tree_bruteforce(&complement(&gen_c5k(2))).unwrap(), None);
        assert!(matches!(find_odd_spanning_tree_bruteforce(&gen_complete(11)), Err(Error::SizeCap { limit: 10, .. })));
    }

    #[test]
    fn k4_odd_trees_are_exactly_the_four_stars() {
        let k4 = gen_complete(4);
        let mut odd = 0;
        enumerate_spanning_trees(&k4, |t| {
            if verify_odd_spanning_tree(&k4, t).ok {
                odd += 1;
                assert!(t.degrees(4).contains(&3));
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(odd, 4);
    }

    #[test]
    fn pruned_search_agrees_with_plain_enumeration() {
        for mask in (0..1u64 << 15).step_by(7) {
            let g = Graph::from_mask(6, mask);
            if !is_connected(&g).unwrap() {
                continue;
            }
            let mut any = false;
            enumerate_spanning_trees(&g, |t| {
                if verify_odd_spanning_tree(&g, t).ok {
                    any = true;
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })
            .unwrap();
            let found = find_odd_spanning_tree_bruteforce(&g).unwrap();
            assert_eq!(found.is_some(), any, "{g:?}");
            if let Some(t) = found {
                assert!(verify_odd_spanning_tree(&g, &t).ok);
            }
        }
    }

    /// Plain 2^m subset scan, no pruning.
    fn factor_exists_by_subsets(g: &Graph) -> bool {
        let edges: Vec<_> = g.edges().collect();
        (0..1u64 << edges.len()).any(|mask| {
            let f: EdgeSet = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            verify_connected_odd_factor(g, &f).ok
        })
    }

    #[test]
    fn factor_search_examples() {
        let k4 = gen_complete(4);
        let f = find_connected_odd_factor_bruteforce(&k4).unwrap().unwrap();
        assert!(verify_connected_odd_factor(&k4, &f).ok);
        assert_eq!(find_connected_odd_factor_bruteforce(&cycle(6)).unwrap(), None);
        assert_eq!(find_connected_odd_factor_bruteforce(&path(4)).unwrap(), None);
        assert!(!factor_exists_by_subsets(&path(4)));
        assert!(matches!(
            find_connected_odd_factor_bruteforce(&gen_complete(8)),
            Err(Error::SizeCap { limit: 22, .. })
        ));
    }

    #[test]
    fn pruned_factor_search_agrees_with_subset_scan() {
        for mask in (0..1u64 << 10).step_by(3) {
            let g = Graph::from_mask(5, mask);
            if !is_connected(&g).unwrap() {
                continue;
            }
            assert!(find_connected_odd_factor_bruteforce(&g).unwrap().is_none());
        }
        for mask in (0..1u64 << 15).step_by(211) {
            let g = Graph::from_mask(6, mask);
            if !is_connected(&g).unwrap() {
                continue;
            }
            let found = find_connected_odd_factor_bruteforce(&g).unwrap();
            assert_eq!(found.is_some(), factor_exists_by_subsets(&g), "{g:?}");
        }
    }

    #[test]
    fn odd_order_graphs_have_no_odd_tree() {
        for mask in 0..1u64 << 10 {
            let g = Graph::from_mask(5, mask);
            if is_connected(&g).unwrap() {
                assert_eq!(find_odd_spanning_tree_bruteforce(&g).unwrap(), None);
            }
        }
    }

    #[test]
    fn tree_pair_search() {
        let (a, b) = find_tree_pair_bruteforce(&gen_complete(4)).unwrap().unwrap();
        assert!(is_spanning_tree(&a, 4) && is_spanning_tree(&b, 4) && a.is_disjoint(&b));
        assert_eq!(find_tree_pair_bruteforce(&cycle(4)).unwrap(), None);
    }
}
