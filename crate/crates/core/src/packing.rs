//! Two edge-disjoint spanning trees, or a vertex partition proving there are
//! none.
//!
//! The forests are grown by matroid-union augmentation: an unassigned edge
//! is pushed into one forest, evicting an edge on the cycle it closes, which
//! is pushed into the other forest, and so on along a breadth-first
//! shortest exchange path. When no unassigned edge can be absorbed, the
//! edges labeled by the failed search span both forests; their connected
//! components are the parts of the certificate. Every forest edge that
//! crosses the parts lies outside the labeled set, so the crossing count is
//! `|F1| + |F2| - 2(n - parts) < 2(parts - 1)`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{components, is_connected, is_spanning_tree, EdgeSet, Graph, UnionFind, Vertex};

/// A partition of the vertex set with too few crossing edges for two
/// edge-disjoint spanning trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub parts: Vec<Vec<Vertex>>,
    pub cross_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingOutcome {
    Trees(EdgeSet, EdgeSet),
    Certificate(PartitionCertificate),
}

const NO_PARENT: usize = usize::MAX;

struct Packer {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    owner: Vec<Option<usize>>,
    /// adjacency of each forest: (neighbor, edge index)
    adj: [Vec<Vec<(Vertex, usize)>>; 2],
}

impl Packer {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let edges: Vec<_> = g.edges().collect();
        let owner = vec![None; edges.len()];
        Packer { n, edges, owner, adj: [vec![Vec::new(); n], vec![Vec::new(); n]] }
    }

    fn rebuild(&mut self) {
        for forest in &mut self.adj {
            forest.iter_mut().for_each(Vec::clear);
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if let Some(k) = self.owner[i] {
                self.adj[k][u].push((v, i));
                self.adj[k][v].push((u, i));
            }
        }
    }

    /// Edge indices on the path joining `a` and `b` in forest `k`, ascending.
    fn forest_path(&self, k: usize, a: Vertex, b: Vertex) -> Option<Vec<usize>> {
        let mut via = vec![NO_PARENT; self.n];
        let mut seen = vec![false; self.n];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &(w, e) in &self.adj[k][u] {
                if !seen[w] {
                    seen[w] = true;
                    via[w] = e;
                    queue.push_back(w);
                }
            }
        }
        if !seen[b] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = b;
        while cur != a {
            let e = via[cur];
            path.push(e);
            let (u, v) = self.edges[e];
            cur = if u == cur { v } else { u };
        }
        path.sort_unstable();
        Some(path)
    }

    /// Breadth-first exchange search from `sources`. Applies the first
    /// augmenting path found and returns `Ok(())`; otherwise returns the
    /// labeled edge set.
    fn augment(&mut self, sources: &[usize]) -> std::result::Result<(), Vec<bool>> {
        let m = self.edges.len();
        let mut labeled = vec![false; m];
        let mut parent = vec![NO_PARENT; m];
        let mut queue = VecDeque::new();
        for &s in sources {
            labeled[s] = true;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            let (a, b) = self.edges[x];
            for k in 0..2 {
                if self.owner[x] == Some(k) {
                    continue;
                }
                match self.forest_path(k, a, b) {
                    None => {
                        self.apply(x, k, &parent);
                        return Ok(());
                    }
                    Some(cycle) => {
                        for y in cycle {
                            if !labeled[y] {
                                labeled[y] = true;
                                parent[y] = x;
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        Err(labeled)
    }

    /// `last` enters forest `target`; each edge on the exchange path takes
    /// the slot of the edge it was labeled from.
    fn apply(&mut self, last: usize, target: usize, parent: &[usize]) {
        let (mut cur, mut target) = (last, target);
        loop {
            let previous = self.owner[cur].replace(target);
            if parent[cur] == NO_PARENT {
                break;
            }
            target = previous.expect("non-source edges on an exchange path are owned");
            cur = parent[cur];
        }
        self.rebuild();
        debug_assert!(self.forests_are_acyclic());
    }

    fn forests_are_acyclic(&self) -> bool {
        (0..2).all(|k| {
            let mut uf = UnionFind::new(self.n);
            self.edges.iter().enumerate().filter(|(i, _)| self.owner[*i] == Some(k)).all(|(_, &(u, v))| uf.union(u, v))
        })
    }

    fn forest(&self, k: usize) -> EdgeSet {
        self.edges.iter().enumerate().filter(|(i, _)| self.owner[*i] == Some(k)).map(|(_, &e)| e).collect()
    }

    fn unassigned(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.owner[i].is_none()).collect()
    }
}

fn count_cross_edges(g: &Graph, parts: &[Vec<Vertex>]) -> usize {
    let mut part_of = vec![usize::MAX; g.order()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    g.edges().filter(|&(u, v)| part_of[u] != part_of[v]).count()
}

pub fn two_edge_disjoint_spanning_trees(g: &Graph) -> Result<PackingOutcome> {
    if !is_connected(g)? {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let mut packer = Packer::new(g);
    for e in 0..packer.edges.len() {
        // failures are final: later growth never un-spans an edge
        let _ = packer.augment(&[e]);
    }
    let labeled = loop {
        let pending = packer.unassigned();
        match packer.augment(&pending) {
            Ok(()) => continue,
            Err(labeled) => break labeled,
        }
    };

    let (first, second) = (packer.forest(0), packer.forest(1));
    if first.len() + second.len() == 2 * (n - 1) {
        return Ok(PackingOutcome::Trees(first, second));
    }

    let span: EdgeSet = packer.edges.iter().enumerate().filter(|(i, _)| labeled[*i]).map(|(_, &e)| e).collect();
    let parts = components(&span.to_graph(n));
    let cross_edges = count_cross_edges(g, &parts);
    assert!(
        cross_edges < 2 * (parts.len() - 1),
        "partition extraction broke: {cross_edges} crossing edges over {} parts",
        parts.len()
    );
    Ok(PackingOutcome::Certificate(PartitionCertificate { parts, cross_edges }))
}

/// Re-checks whichever side of the outcome is present against `g`.
pub fn verify_packing(g: &Graph, outcome: &PackingOutcome) -> bool {
    let n = g.order();
    match outcome {
        PackingOutcome::Trees(a, b) => {
            is_spanning_tree(a, n)
                && is_spanning_tree(b, n)
                && a.is_subgraph_of(g)
                && b.is_subgraph_of(g)
                && a.is_disjoint(b)
        }
        PackingOutcome::Certificate(cert) => {
            let mut seen = vec![false; n];
            for part in &cert.parts {
                if part.is_empty() {
                    return false;
                }
                for &v in part {
                    if v >= n || std::mem::replace(&mut seen[v], true) {
                        return false;
                    }
                }
            }
            if seen.contains(&false) || cert.parts.len() < 2 {
                return false;
            }
            let cross = count_cross_edges(g, &cert.parts);
            cross == cert.cross_edges && cross < 2 * (cert.parts.len() - 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, gen_complete, gen_complete_bipartite, path};
    use crate::graph::edge_connectivity;
    use crate::oracle::find_tree_pair_bruteforce;

    #[test]
    fn k4_packs_two_trees() {
        let k4 = gen_complete(4);
        let out = two_edge_disjoint_spanning_trees(&k4).unwrap();
        assert!(matches!(out, PackingOutcome::Trees(..)));
        assert!(verify_packing(&k4, &out));
    }

    #[test]
    fn sparse_graphs_get_singleton_certificates() {
        let c4 = cycle(4);
        let out = two_edge_disjoint_spanning_trees(&c4).unwrap();
        let expected = PartitionCertificate { parts: vec![vec![0], vec![1], vec![2], vec![3]], cross_edges: 4 };
        assert_eq!(out, PackingOutcome::Certificate(expected));
        assert!(verify_packing(&c4, &out));

        let p5 = path(5);
        match two_edge_disjoint_spanning_trees(&p5).unwrap() {
            PackingOutcome::Certificate(c) => {
                assert_eq!(c.parts.len(), 5);
                assert_eq!(c.cross_edges, 4);
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn unconvincing_certificate_is_rejected() {
        let k4 = gen_complete(4);
        let cert = PartitionCertificate { parts: vec![vec![0, 1], vec![2, 3]], cross_edges: 4 };
        assert!(!verify_packing(&k4, &PackingOutcome::Certificate(cert)));
        let miscounted = PartitionCertificate { parts: vec![vec![0], vec![1], vec![2], vec![3]], cross_edges: 3 };
        assert!(!verify_packing(&cycle(4), &PackingOutcome::Certificate(miscounted)));
    }

    #[test]
    fn certificate_with_nontrivial_parts() {
        // two K5's joined by a bridge: each K5 has spare edges, the bridge is alone
        let mut g = Graph::new(10);
        for base in [0, 5] {
            for u in base..base + 5 {
                for v in u + 1..base + 5 {
                    g.add_edge(u, v);
                }
            }
        }
        g.add_edge(4, 5);
        match two_edge_disjoint_spanning_trees(&g).unwrap() {
            PackingOutcome::Certificate(c) => {
                assert_eq!(c.parts, vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]);
                assert_eq!(c.cross_edges, 1);
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn tight_graph_gets_a_fine_certificate() {
        // two K4's joined by a bridge: 13 edges, all absorbed by two forests
        let k4 = gen_complete(4);
        let g = crate::families::gen_bridge_join(&k4, &k4, 3, 0);
        let out = two_edge_disjoint_spanning_trees(&g).unwrap();
        assert!(verify_packing(&g, &out));
        assert!(matches!(out, PackingOutcome::Certificate(ref c) if c.cross_edges == 13));
    }

    #[test]
    fn disconnected_is_an_error() {
        assert!(matches!(two_edge_disjoint_spanning_trees(&Graph::new(3)), Err(Error::Disconnected)));
    }

    #[test]
    fn agrees_with_exhaustive_pair_search() {
        for mask in (0..1u64 << 15).step_by(13) {
            let g = Graph::from_mask(6, mask);
            if !is_connected(&g).unwrap() {
                continue;
            }
            let out = two_edge_disjoint_spanning_trees(&g).unwrap();
            assert!(verify_packing(&g, &out), "{g:?}");
            let exists = find_tree_pair_bruteforce(&g).unwrap().is_some();
            assert_eq!(matches!(out, PackingOutcome::Trees(..)), exists, "{g:?}");
        }
    }

    #[test]
    fn four_edge_connected_graphs_pack() {
        for g in [gen_complete(5), gen_complete(8), gen_complete_bipartite(4, 4)] {
            assert!(edge_connectivity(&g) >= 4);
            let out = two_edge_disjoint_spanning_trees(&g).unwrap();
            assert!(matches!(out, PackingOutcome::Trees(..)) && verify_packing(&g, &out));
        }
    }
}
