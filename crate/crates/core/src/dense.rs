//! Odd spanning trees in graphs of even order with minimum degree at least
//! `n/2 + 1`, by greedy growth of an odd subtree.
//!
//! The subtree starts as a full star at an anchor. Any inside vertex with
//! two outside neighbors takes both as leaves, which keeps every degree
//! odd and adds two vertices. Under the degree bound this never stalls
//! before the tree spans.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::oracle::verify_odd_spanning_tree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthState {
    pub anchor: Vertex,
    pub removed_edge: Option<(Vertex, Vertex)>,
    pub tree: EdgeSet,
    pub inside: Vec<bool>,
}

impl GrowthState {
    pub fn inside_count(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }

    pub fn order(&self) -> usize {
        self.inside.len()
    }

    pub fn is_spanning(&self) -> bool {
        self.inside.iter().all(|&b| b)
    }

    /// Tree on the inside set, all inside degrees odd.
    pub fn is_odd_subtree(&self) -> bool {
        let n = self.order();
        let degrees = self.tree.degrees(n);
        let inside_ok = (0..n).all(|v| if self.inside[v] { degrees[v] % 2 == 1 } else { degrees[v] == 0 });
        inside_ok && self.tree.len() + 1 == self.inside_count()
    }
}

/// `g` without the removed anchor edge, if any.
pub fn working_graph(g: &Graph, st: &GrowthState) -> Graph {
    match st.removed_edge {
        Some((u, v)) => g.without_edge(u, v),
        None => g.clone(),
    }
}

pub fn init_state(g: &Graph) -> Result<GrowthState> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let bound = n / 2 + 1;
    let min_degree = g.min_degree();
    if min_degree < bound {
        return Err(Error::MinDegreeTooLow { min_degree, bound });
    }

    let odd_anchor = (0..n).find(|&v| g.degree(v) % 2 == 1);
    let (anchor, removed_edge) = match odd_anchor {
        Some(v) => (v, None),
        None => {
            let top = g.max_degree();
            let v = (0..n).find(|&v| g.degree(v) == top).expect("nonempty graph");
            let partner = g.neighbors(v).next().expect("degree bound gives neighbors");
            (v, Some((v, partner)))
        }
    };
    let excluded = removed_edge.map(|(_, w)| w);
    let mut tree = EdgeSet::new();
    let mut inside = vec![false; n];
    inside[anchor] = true;
    for w in g.neighbors(anchor).filter(|&w| Some(w) != excluded) {
        tree.insert(anchor, w);
        inside[w] = true;
    }
    Ok(GrowthState { anchor, removed_edge, tree, inside })
}

/// Attach two outside neighbors to the lowest inside vertex that has them.
pub fn grow_step(working: &Graph, st: &mut GrowthState) -> bool {
    let n = st.order();
    for z in (0..n).filter(|&z| st.inside[z]) {
        let mut outside = working.neighbors(z).filter(|&w| !st.inside[w]);
        if let (Some(x), Some(y)) = (outside.next(), outside.next()) {
            st.tree.insert(z, x);
            st.tree.insert(z, y);
            st.inside[x] = true;
            st.inside[y] = true;
            debug_assert!(st.is_odd_subtree());
            return true;
        }
    }
    false
}

pub fn odd_spanning_tree_dense(g: &Graph) -> Result<EdgeSet> {
    let mut st = init_state(g)?;
    let working = working_graph(g, &st);
    while grow_step(&working, &mut st) {}
    if !st.is_spanning() {
        return Err(Error::GreedyStalled(Box::new(st)));
    }
    let report = verify_odd_spanning_tree(g, &st.tree);
    assert!(report.ok, "greedy tree failed verification: {:?}", report.failure);
    Ok(st.tree)
}
