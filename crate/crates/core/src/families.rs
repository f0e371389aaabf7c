//! Named graph families, seeded random generators, and the two cheap
//! nonexistence certificates for odd spanning trees: bipartite graphs with
//! both color classes even, and graphs with a bridge whose sides both have
//! even order.
//!
//! # Random generation
//!
//! [`gen_random`] and [`gen_random_split`] draw from a SplitMix64 stream
//! seeded directly with `seed` (state `s`, step `s += 0x9e3779b97f4a7c15`,
//! output mixed with the standard `30/27/31` xor-shift-multiply finalizer).
//! Each candidate pair consumes one 64-bit output `x`, and the pair is
//! present iff `(x >> 11) * 2^-53 < p`. Pairs are visited in lexicographic
//! order, so a given `(n, p, seed)` produces the same graph everywhere.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{
    bipartition, bridges, complement, components, is_connected, is_triangle_free, Bipartition, Graph, Vertex,
};
use crate::split::{split_no_tree_condition, SplitPartition};
use crate::trifree::{recognize_excluded, ExcludedFamily};

pub fn gen_complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn gen_complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::new(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{s2,t2}` minus the edge between vertex 0 and vertex `s2`.
pub fn gen_complete_bipartite_minus_edge(s2: usize, t2: usize) -> Result<Graph> {
    if s2 < 2 || t2 < 2 || s2 % 2 == 1 || t2 % 2 == 1 {
        return Err(Error::ParityArgument(s2, t2));
    }
    let mut g = gen_complete_bipartite(s2, t2);
    g.remove_edge(0, s2);
    Ok(g)
}

/// `C_5` with one vertex replaced by `k` independent twins.
///
/// Vertices 0 and 1 are the two neighbors of the replaced vertex, 3 and 2 the
/// rest of the path (`0-3-2-1`), and `4..k+4` the twins. For `k = 2` this is
/// exactly the labeling `x1, x2, y1, .., y4`.
pub fn gen_c5k(k: usize) -> Graph {
    assert!(k >= 1, "C5(k) needs k >= 1");
    let mut g = Graph::from_edges(k + 4, [(0, 3), (3, 2), (2, 1)]);
    for twin in 4..k + 4 {
        g.add_edge(0, twin);
        g.add_edge(1, twin);
    }
    g
}

/// Disjoint union of `g1` and `g2` plus the edge `u`–`v`; `g2`'s vertices are
/// shifted by the order of `g1`.
pub fn gen_bridge_join(g1: &Graph, g2: &Graph, u: Vertex, v: Vertex) -> Graph {
    let shift = g1.order();
    let mut g = Graph::new(shift + g2.order());
    for (a, b) in g1.edges() {
        g.add_edge(a, b);
    }
    for (a, b) in g2.edges() {
        g.add_edge(a + shift, b + shift);
    }
    g.add_edge(u, v + shift);
    g
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The circulant graph where `v` is adjacent to `v ± d (mod n)` for each
/// offset `d`.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut g = Graph::new(n);
    for v in 0..n {
        for &d in offsets {
            let w = (v + d) % n;
            if w != v {
                g.add_edge(v, w);
            }
        }
    }
    g
}

struct PairSampler {
    rng: SplitMix64,
    p: f64,
}

impl PairSampler {
    fn new(p: f64, seed: u64) -> Self {
        assert!((0.0..=1.0).contains(&p), "probability {p} out of range");
        PairSampler { rng: SplitMix64::seed_from_u64(seed), p }
    }

    fn draw(&mut self) -> bool {
        let unit = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        unit < self.p
    }
}

/// Erdős–Rényi `G(n, p)` under the documented SplitMix64 stream.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Graph {
    let mut sampler = PairSampler::new(p, seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if sampler.draw() {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random split graph: independent set `0..s`, clique `s..s+t`, each
/// independent-to-clique pair present with probability `p`. Connectivity is
/// not guaranteed.
pub fn gen_random_split(s: usize, t: usize, p: f64, seed: u64) -> (Graph, SplitPartition) {
    assert!(t >= 1, "clique side must be nonempty");
    let mut sampler = PairSampler::new(p, seed);
    let mut g = Graph::new(s + t);
    for a in s..s + t {
        for b in a + 1..s + t {
            g.add_edge(a, b);
        }
    }
    for x in 0..s {
        for y in s..s + t {
            if sampler.draw() {
                g.add_edge(x, y);
            }
        }
    }
    let sp = SplitPartition { x: (0..s).collect(), y: (s..s + t).collect() };
    (g, sp)
}

/// A checkable reason why a graph has no odd spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonexistenceReason {
    /// Connected bipartite graph whose color classes both have even size.
    BipartiteBothPartsEven(Bipartition),
    /// A bridge whose removal leaves two components of even order.
    BridgeEvenSides { bridge: (Vertex, Vertex) },
    /// A proper, nonempty vertex set with no edge leaving it.
    Disconnected { component: Vec<Vertex> },
    /// A split partition satisfying the parity-and-disjointness condition.
    SplitCondition(SplitPartition),
    /// The graph is the complement of an excluded triangle-free graph.
    ExcludedFamily(ExcludedFamily),
    /// Handshake parity: no graph of odd order has all degrees odd.
    OddOrder,
}

impl NonexistenceReason {
    pub fn kind(&self) -> &'static str {
        match self {
            NonexistenceReason::BipartiteBothPartsEven(_) => "bipartite-even-parts",
            NonexistenceReason::BridgeEvenSides { .. } => "bridge-even-sides",
            NonexistenceReason::Disconnected { .. } => "disconnected",
            NonexistenceReason::SplitCondition(_) => "split-condition",
            NonexistenceReason::ExcludedFamily(_) => "excluded-family",
            NonexistenceReason::OddOrder => "odd-order",
        }
    }
}

fn check_vertices(n: usize, vs: impl IntoIterator<Item = Vertex>) -> Result<Vec<bool>> {
    let mut seen = vec![false; n];
    for v in vs {
        if v >= n {
            return Err(Error::BadWitness(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::BadWitness(format!("vertex {v} listed twice")));
        }
    }
    Ok(seen)
}

/// Re-verifies a nonexistence witness against `g`.
///
/// `Ok(false)` means the witness is well formed but does not prove anything
/// about `g`; structurally broken witnesses are [`Error::BadWitness`].
pub fn check_nonexistence(g: &Graph, reason: &NonexistenceReason) -> Result<bool> {
    let n = g.order();
    match reason {
        NonexistenceReason::BipartiteBothPartsEven(bp) => {
            let seen = check_vertices(n, bp.left.iter().chain(&bp.right).copied())?;
            if seen.iter().any(|&s| !s) {
                return Err(Error::BadWitness("parts do not cover the vertex set".into()));
            }
            let mut side = vec![false; n];
            for &v in &bp.left {
                side[v] = true;
            }
            let proper = g.edges().all(|(u, v)| side[u] != side[v]);
            Ok(n > 0 && is_connected(g)? && proper && bp.left.len() % 2 == 0 && bp.right.len() % 2 == 0)
        }
        NonexistenceReason::BridgeEvenSides { bridge: (u, v) } => {
            let (u, v) = (*u, *v);
            if !g.has_edge(u, v) {
                return Err(Error::BadWitness(format!("({u}, {v}) is not an edge")));
            }
            if !is_connected(g)? {
                return Ok(false);
            }
            let comps = components(&g.without_edge(u, v));
            Ok(comps.len() == 2 && comps.iter().all(|c| c.len() % 2 == 0))
        }
        NonexistenceReason::Disconnected { component } => {
            let inside = check_vertices(n, component.iter().copied())?;
            let closed = g.edges().all(|(a, b)| inside[a] == inside[b]);
            Ok(!component.is_empty() && component.len() < n && closed)
        }
        NonexistenceReason::SplitCondition(sp) => {
            if n == 0 || !is_connected(g)? {
                return Ok(false);
            }
            match split_no_tree_condition(g, sp) {
                Ok(holds) => Ok(holds),
                Err(Error::InvalidSplitPartition(msg)) => Err(Error::BadWitness(msg)),
                Err(Error::DegenerateClique | Error::OddOrder(_)) => Ok(false),
                Err(e) => Err(e),
            }
        }
        NonexistenceReason::ExcludedFamily(family) => {
            let base = complement(g);
            Ok(n.is_multiple_of(2) && is_triangle_free(&base) && recognize_excluded(&base) == Some(*family))
        }
        NonexistenceReason::OddOrder => Ok(n % 2 == 1),
    }
}

/// Looks for a bipartite-even-classes witness, then for the first bridge
/// (lexicographically) whose sides both have even order.
///
/// `None` does not mean an odd spanning tree exists.
pub fn find_nonexistence(g: &Graph) -> Result<Option<NonexistenceReason>> {
    if !is_connected(g)? {
        return Err(Error::Disconnected);
    }
    if g.order() % 2 == 1 {
        return Err(Error::OddOrder(g.order()));
    }
    if let Some(bp) = bipartition(g)? {
        if bp.left.len() % 2 == 0 && bp.right.len() % 2 == 0 {
            return Ok(Some(NonexistenceReason::BipartiteBothPartsEven(bp)));
        }
    }
    for (u, v) in bridges(g) {
        let comps = components(&g.without_edge(u, v));
        if comps.iter().all(|c| c.len() % 2 == 0) {
            return Ok(Some(NonexistenceReason::BridgeEvenSides { bridge: (u, v) }));
        }
    }
    Ok(None)
}
