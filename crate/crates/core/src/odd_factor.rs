//! Connected odd factors from a pair of edge-disjoint spanning trees.
//!
//! Take the first tree and pair up its even-degree vertices. Each pair is
//! joined by a unique path in the second tree; flipping the first tree
//! along every such path toggles exactly the paired endpoints' parities.
//! The first tree survives intact, so the result stays connected.

use crate::error::{Error, Result};
use crate::graph::{is_spanning_tree, tree_path, EdgeSet, Graph, Vertex};
use crate::oracle::verify_connected_odd_factor;
use crate::packing::{two_edge_disjoint_spanning_trees, PackingOutcome};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddFactorTrace {
    pub t1: EdgeSet,
    pub t2: EdgeSet,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub paths: Vec<EdgeSet>,
    pub result: EdgeSet,
}

/// Even-degree vertices of the spanning tree `t`, paired in ascending order.
pub fn pair_even_vertices(t: &EdgeSet, n: usize) -> Result<Vec<(Vertex, Vertex)>> {
    if !is_spanning_tree(t, n) {
        return Err(Error::NotATree { n });
    }
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let even: Vec<Vertex> = t.degrees(n).iter().enumerate().filter(|(_, d)| *d % 2 == 0).map(|(v, _)| v).collect();
    assert!(even.len().is_multiple_of(2), "tree on {n} vertices has {} even-degree vertices", even.len());
    Ok(even.chunks(2).map(|p| (p[0], p[1])).collect())
}

pub fn connected_odd_factor(g: &Graph) -> Result<OddFactorTrace> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let (t1, t2) = match two_edge_disjoint_spanning_trees(g)? {
        PackingOutcome::Trees(a, b) => (a, b),
        PackingOutcome::Certificate(cert) => return Err(Error::NoTreePacking(cert)),
    };
    let pairs = pair_even_vertices(&t1, n)?;
    let paths = pairs.iter().map(|&(x, y)| tree_path(&t2, n, x, y)).collect::<Result<Vec<_>>>()?;
    let result = paths.iter().fold(t1.clone(), |acc, p| acc.symmetric_difference(p));

    let base = t1.degrees(n);
    let mut touched = vec![0usize; n];
    for &(x, y) in &pairs {
        touched[x] += 1;
        touched[y] += 1;
    }
    let degrees = result.degrees(n);
    for v in 0..n {
        assert_eq!(degrees[v] % 2, (base[v] + touched[v]) % 2, "parity repair broke at {v}");
    }
    assert!(t1.is_subset(&result), "first tree must survive the flips");
    let report = verify_connected_odd_factor(g, &result);
    assert!(report.ok, "repaired factor failed verification: {:?}", report.failure);

    Ok(OddFactorTrace { t1, t2, pairs, paths, result })
}
