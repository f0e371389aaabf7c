//! Odd spanning trees in split graphs, and spanning odd double stars in
//! complements of graphs with diameter at least 4.
//!
//! A connected split graph of even order with clique side of size at
//! least 2 has no odd spanning tree exactly when every clique vertex has
//! odd degree into the independent side and no independent vertex has two
//! clique neighbors. Otherwise a star forest centered on the clique with
//! an even number of even stars is linked through the clique.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, diameter, is_connected, EdgeSet, Graph, Vertex};
use crate::oracle::verify_odd_spanning_tree;

/// `x` independent, `y` a clique, together covering the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

/// Each independent vertex mapped to its clique center.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct YStarForest {
    pub assignment: BTreeMap<Vertex, Vertex>,
}

impl YStarForest {
    /// Number of leaves hanging off `y`.
    pub fn star_size(&self, y: Vertex) -> usize {
        self.assignment.values().filter(|&&c| c == y).count()
    }

    pub fn edges(&self) -> EdgeSet {
        self.assignment.iter().map(|(&x, &y)| (x, y)).collect()
    }
}

pub fn validate_split_partition(g: &Graph, sp: &SplitPartition) -> Result<()> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in sp.x.iter().chain(&sp.y) {
        if v >= n {
            return Err(Error::InvalidSplitPartition(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidSplitPartition(format!("vertex {v} listed twice")));
        }
    }
    if let Some(v) = seen.iter().position(|&b| !b) {
        return Err(Error::InvalidSplitPartition(format!("vertex {v} missing")));
    }
    for (i, &a) in sp.x.iter().enumerate() {
        if let Some(&b) = sp.x[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return Err(Error::InvalidSplitPartition(format!("independent side has edge {a}-{b}")));
        }
    }
    for (i, &a) in sp.y.iter().enumerate() {
        if let Some(&b) = sp.y[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
            return Err(Error::InvalidSplitPartition(format!("clique side misses edge {a}-{b}")));
        }
    }
    Ok(())
}

/// Degree-sequence recognition. The clique side is maximal: a vertex that
/// could sit on either side goes to the clique.
pub fn find_split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut y: Vec<Vertex> = order[..m].to_vec();
    let mut x: Vec<Vertex> = order[m..].to_vec();
    y.sort_unstable();
    x.sort_unstable();
    let sp = SplitPartition { x, y };
    validate_split_partition(g, &sp).ok()?;
    Some(sp)
}

fn x_neighbors(g: &Graph, sp: &SplitPartition, y: Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = sp.x.iter().copied().filter(|&x| g.has_edge(x, y)).collect();
    out.sort_unstable();
    out
}

fn y_neighbors(g: &Graph, sp: &SplitPartition, x: Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = sp.y.iter().copied().filter(|&y| g.has_edge(x, y)).collect();
    out.sort_unstable();
    out
}

/// True when no odd spanning tree exists (clique side of size at least 2).
pub fn split_no_tree_condition(g: &Graph, sp: &SplitPartition) -> Result<bool> {
    validate_split_partition(g, sp)?;
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if sp.y.len() < 2 {
        return Err(Error::DegenerateClique);
    }
    let odd_degrees = sp.y.iter().all(|&y| x_neighbors(g, sp, y).len() % 2 == 1);
    let disjoint = sp.x.iter().all(|&x| y_neighbors(g, sp, x).len() <= 1);
    Ok(odd_degrees && disjoint)
}

fn check_forest_preconditions(g: &Graph, sp: &SplitPartition) -> Result<()> {
    if split_no_tree_condition(g, sp)? {
        return Err(Error::ConditionHolds);
    }
    if !is_connected(g)? {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Assigns every still-unassigned `x` in ascending order to its lowest
/// clique neighbor.
fn assign_greedily(g: &Graph, sp: &SplitPartition, forest: &mut YStarForest, skip: Option<Vertex>) {
    let mut xs = sp.x.clone();
    xs.sort_unstable();
    for x in xs {
        if Some(x) == skip || forest.assignment.contains_key(&x) {
            continue;
        }
        let center = y_neighbors(g, sp, x)[0];
        forest.assignment.insert(x, center);
    }
}

/// A clique-centered star forest with at least one star of even size.
pub fn build_y_star_forest(g: &Graph, sp: &SplitPartition) -> Result<YStarForest> {
    check_forest_preconditions(g, sp)?;
    let mut forest = YStarForest::default();
    let even_center = sp.y.iter().copied().find(|&y| x_neighbors(g, sp, y).len().is_multiple_of(2));
    if let Some(y) = even_center {
        for x in x_neighbors(g, sp, y) {
            forest.assignment.insert(x, y);
        }
        assign_greedily(g, sp, &mut forest, None);
    } else {
        let mut xs = sp.x.clone();
        xs.sort_unstable();
        let shared = xs
            .into_iter()
            .find(|&x| y_neighbors(g, sp, x).len() >= 2)
            .expect("failed condition with all clique degrees odd leaves a shared neighbor");
        let centers = y_neighbors(g, sp, shared);
        let (yj, yk) = (centers[0], centers[1]);
        assign_greedily(g, sp, &mut forest, Some(shared));
        let chosen = if forest.star_size(yj) % 2 == 1 { yj } else { yk };
        forest.assignment.insert(shared, chosen);
    }
    assert!(sp.y.iter().any(|&y| forest.star_size(y) % 2 == 0), "star forest has no even star");
    Ok(forest)
}

fn full_star(g: &Graph, center: Vertex) -> EdgeSet {
    g.neighbors(center).map(|w| (center, w)).collect()
}

/// Star forest linked through the clique into an odd spanning tree.
pub fn split_odd_spanning_tree(g: &Graph, sp: &SplitPartition) -> Result<EdgeSet> {
    validate_split_partition(g, sp)?;
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if sp.y.len() == 1 {
        if !is_connected(g)? {
            return Err(Error::Disconnected);
        }
        let star = full_star(g, sp.y[0]);
        let report = verify_odd_spanning_tree(g, &star);
        assert!(report.ok, "single-clique star failed verification: {:?}", report.failure);
        return Ok(star);
    }
    let forest = build_y_star_forest(g, sp)?;

    let mut ordered = sp.y.clone();
    ordered.sort_by_key(|&y| (forest.star_size(y) % 2, y));
    let evens = ordered.iter().filter(|&&y| forest.star_size(y) % 2 == 0).count();
    assert!(evens >= 2 && evens % 2 == 0, "expected a positive even number of even stars, got {evens}");

    let t = ordered.len();
    let mut tree = forest.edges();
    for i in evens..t {
        tree.insert(ordered[i - 1], ordered[i]);
    }
    for j in 1..evens {
        tree.insert(ordered[j - 1], ordered[t - 1]);
    }
    let report = verify_odd_spanning_tree(g, &tree);
    assert!(report.ok, "assembled tree failed verification: {:?}", report.failure);
    Ok(tree)
}

/// Spanning odd double star in the complement of `g`, centered at the
/// lexicographically least pair at distance 4.
pub fn double_star_in_complement(g: &Graph) -> Result<EdgeSet> {
    let n = g.order();
    if !is_connected(g)? {
        return Err(Error::Disconnected);
    }
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let diam = diameter(g)?;
    if diam < 4 {
        return Err(Error::DiameterTooSmall(diam));
    }
    let (v0, v4) = (0..n)
        .find_map(|u| {
            let dist = bfs_distances(g, u);
            (u + 1..n).find(|&w| dist[w] == Some(4)).map(|w| (u, w))
        })
        .expect("diameter at least 4 gives a pair at distance 4");

    let mut h = Graph::new(n);
    h.add_edge(v0, v4);
    for v in (0..n).filter(|&v| v != v0 && v != v4) {
        let near0 = g.has_edge(v, v0);
        let near4 = g.has_edge(v, v4);
        if !near4 {
            h.add_edge(v, v4);
        }
        if !near0 {
            h.add_edge(v, v0);
        }
    }
    let sp = SplitPartition { x: (0..n).filter(|&v| v != v0 && v != v4).collect(), y: vec![v0, v4] };
    let tree = split_odd_spanning_tree(&h, &sp)?;
    debug_assert!(tree.iter().all(|(u, v)| !g.has_edge(u, v)));
    Ok(tree)
}
