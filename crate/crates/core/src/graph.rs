//! Simple undirected graphs on dense vertex ids and the structural
//! primitives the rest of the crate is built from.
//!
//! Adjacency is stored as one bitset row per vertex, so neighbor iteration is
//! always in ascending vertex order. Every "lowest index" tie-break in the
//! constructions relies on that.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words] }
    }

    /// Builds a graph from an edge list.
    ///
    /// Panics on self-loops or out-of-range endpoints; duplicate pairs are
    /// merged. Use [`Graph::try_from_edges`] for untrusted input.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn try_from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The labeled graph whose edges are the set bits of `mask`, pairs taken
    /// in lexicographic order `(0,1), (0,2), .., (n-2,n-1)`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::new(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut h = self.clone();
        h.remove_edge(u, v);
        h
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Every vertex has odd degree.
    pub fn is_odd(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) % 2 == 1)
    }

    pub fn is_even(&self) -> bool {
        (0..self.n).all(|v| self.degree(v).is_multiple_of(2))
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: Vertex, set: &[bool]) -> usize {
        self.neighbors(v).filter(|&u| set[u]).count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A set of unordered vertex pairs, stored canonically as `(min, max)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(BTreeSet<(Vertex, Vertex)>);

#[inline]
pub fn canonical(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    /// Inserts the pair; returns false if it was already present.
    pub fn insert(&mut self, u: Vertex, v: Vertex) -> bool {
        assert_ne!(u, v, "self-loop at {u}");
        self.0.insert(canonical(u, v))
    }

    pub fn remove(&mut self, u: Vertex, v: Vertex) -> bool {
        self.0.remove(&canonical(u, v))
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.0.contains(&canonical(u, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().copied()
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        self.iter().all(|(u, v)| g.has_edge(u, v))
    }

    /// Degree of every vertex `0..n` in the edge set. Endpoints `>= n` are
    /// ignored.
    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for (u, v) in self.iter() {
            if v < n {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d
    }

    /// The spanning subgraph on `0..n` with these edges.
    pub fn to_graph(&self, n: usize) -> Graph {
        Graph::from_edges(n, self.iter())
    }
}

impl FromIterator<(Vertex, Vertex)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for (u, v) in iter {
            s.insert(u, v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = (Vertex, Vertex);
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, (Vertex, Vertex)>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (u, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}{v}")?;
        }
        f.write_str("}")
    }
}

/// Two color classes. Normalized so that the lowest vertex is on the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

impl Bipartition {
    fn from_colors(colors: &[u8]) -> Self {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, &c) in colors.iter().enumerate() {
            if c == colors[0] {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Bipartition { left, right }
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut h = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Breadth-first distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> Result<bool> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(bfs_distances(g, 0).iter().all(Option::is_some))
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn two_color(g: &Graph) -> Option<Vec<u8>> {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// The 2-coloring classes of a connected graph, or `None` if it has an odd
/// cycle.
pub fn bipartition(g: &Graph) -> Result<Option<Bipartition>> {
    if !is_connected(g)? {
        return Err(Error::Disconnected);
    }
    Ok(two_color(g).map(|c| Bipartition::from_colors(&c)))
}

/// Whether the graph has no odd cycle. Works on disconnected graphs.
pub fn is_bipartite(g: &Graph) -> bool {
    two_color(g).is_some()
}

/// `n - 1` edges on `0..n` that connect everything.
pub fn is_spanning_tree(t: &EdgeSet, n: usize) -> bool {
    if n == 0 || t.len() != n - 1 || t.iter().any(|(_, v)| v >= n) {
        return false;
    }
    let mut uf = UnionFind::new(n);
    t.iter().all(|(u, v)| uf.union(u, v))
}

fn require_tree(t: &EdgeSet, n: usize) -> Result<()> {
    if is_spanning_tree(t, n) {
        Ok(())
    } else {
        Err(Error::NotATree { n })
    }
}

/// The unique 2-coloring of a spanning tree, vertex 0 on the left.
pub fn tree_bipartition(t: &EdgeSet, n: usize) -> Result<Bipartition> {
    require_tree(t, n)?;
    let colors = two_color(&t.to_graph(n)).expect("trees are bipartite");
    Ok(Bipartition::from_colors(&colors))
}

/// Edges of the unique `u`–`v` path in the spanning tree `t`. Empty when
/// `u == v`.
pub fn tree_path(t: &EdgeSet, n: usize, u: Vertex, v: Vertex) -> Result<EdgeSet> {
    require_tree(t, n)?;
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
    }
    let mut path = EdgeSet::new();
    if u == v {
        return Ok(path);
    }
    let tg = t.to_graph(n);
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        if a == v {
            break;
        }
        for b in tg.neighbors(a) {
            if parent[b] == usize::MAX {
                parent[b] = a;
                queue.push_back(b);
            }
        }
    }
    let mut cur = v;
    while cur != u {
        path.insert(cur, parent[cur]);
        cur = parent[cur];
    }
    Ok(path)
}

pub fn symmetric_difference(a: &EdgeSet, b: &EdgeSet) -> EdgeSet {
    a.symmetric_difference(b)
}

/// Maximum number of edge-disjoint `s`–`t` paths (unit-capacity max-flow).
pub fn local_edge_connectivity(g: &Graph, s: Vertex, t: Vertex) -> usize {
    let n = g.order();
    // residual[u * n + v]: remaining capacity on the arc u -> v
    let mut residual = vec![0i32; n * n];
    for (u, v) in g.edges() {
        residual[u * n + v] = 1;
        residual[v * n + u] = 1;
    }
    let mut flow = 0;
    let mut parent = vec![usize::MAX; n];
    loop {
        parent.fill(usize::MAX);
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            if a == t {
                break;
            }
            for b in 0..n {
                if parent[b] == usize::MAX && residual[a * n + b] > 0 {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut cur = t;
        while cur != s {
            let p = parent[cur];
            residual[p * n + cur] -= 1;
            residual[cur * n + p] += 1;
            cur = p;
        }
        flow += 1;
    }
}

/// Global edge connectivity: the minimum over `t` of the max-flow from
/// vertex 0 to `t`. Zero for disconnected graphs and for `n < 2`.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n < 2 {
        return 0;
    }
    (1..n).map(|t| local_edge_connectivity(g, 0, t)).min().unwrap_or(0)
}

pub fn diameter(g: &Graph) -> Result<usize> {
    if !is_connected(g)? {
        return Err(Error::Disconnected);
    }
    Ok((0..g.order())
        .map(|s| bfs_distances(g, s).into_iter().map(Option::unwrap).max().unwrap_or(0))
        .max()
        .unwrap_or(0))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.row(u).iter().zip(g.row(v)).all(|(a, b)| a & b == 0))
}

/// Bridges of `g` as canonical pairs in lexicographic order.
pub fn bridges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, remaining neighbors)
        let mut stack: Vec<(Vertex, Vertex, Vec<Vertex>)> = Vec::new();
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, g.neighbors(root).collect()));
        while let Some((u, parent, pending)) = stack.last_mut() {
            let (u, parent) = (*u, *parent);
            if let Some(w) = pending.pop() {
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, g.neighbors(w).collect()));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some((p, _, _)) = stack.last() {
                    let p = *p;
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push(canonical(p, u));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, gen_c5k, gen_complete, gen_complete_bipartite, path};

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().copied().collect()
    }

    #[test]
    fn complement_examples() {
        let c4 = cycle(4);
        assert_eq!(complement(&c4).edge_set(), es(&[(0, 2), (1, 3)]));
        assert_eq!(complement(&gen_complete(4)).edge_count(), 0);
        let two_k2 = Graph::from_edges(4, [(0, 2), (1, 3)]);
        assert_eq!(complement(&two_k2), c4);
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&gen_complete(2)).unwrap());
        assert!(!is_connected(&Graph::from_edges(4, [(0, 1), (2, 3)])).unwrap());
        assert!(!is_connected(&complement(&gen_complete_bipartite(2, 2))).unwrap());
        assert!(matches!(is_connected(&Graph::new(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn bipartition_examples() {
        let bp = bipartition(&cycle(4)).unwrap().unwrap();
        assert_eq!(bp.left, vec![0, 2]);
        assert_eq!(bp.right, vec![1, 3]);
        assert_eq!(bipartition(&cycle(5)).unwrap(), None);
        let bp = bipartition(&gen_complete_bipartite(3, 3)).unwrap().unwrap();
        assert_eq!(bp.left, vec![0, 1, 2]);
        assert_eq!(bp.right, vec![3, 4, 5]);
        assert!(matches!(bipartition(&Graph::from_edges(4, [(0, 1), (2, 3)])), Err(Error::Disconnected)));
    }

    #[test]
    fn tree_bipartition_examples() {
        let bp = tree_bipartition(&es(&[(0, 1), (1, 2)]), 3).unwrap();
        assert_eq!((bp.left, bp.right), (vec![0, 2], vec![1]));
        let star = es(&[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let bp = tree_bipartition(&star, 5).unwrap();
        assert_eq!((bp.left, bp.right), (vec![0], vec![1, 2, 3, 4]));
        assert!(matches!(tree_bipartition(&es(&[(0, 1), (1, 2), (0, 2)]), 3), Err(Error::NotATree { .. })));
    }

    #[test]
    fn tree_path_examples() {
        let p = es(&[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(tree_path(&p, 4, 0, 3).unwrap(), p);
        let star = es(&[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(tree_path(&star, 4, 1, 2).unwrap(), es(&[(0, 1), (0, 2)]));
        let t = es(&[(0, 1), (1, 2), (2, 3), (1, 4)]);
        assert_eq!(tree_path(&t, 5, 4, 3).unwrap(), es(&[(1, 4), (1, 2), (2, 3)]));
        assert!(tree_path(&t, 5, 2, 2).unwrap().is_empty());
        assert!(matches!(tree_path(&es(&[(0, 1)]), 3, 0, 1), Err(Error::NotATree { .. })));
    }

    #[test]
    fn symmetric_difference_examples() {
        let a = es(&[(0, 1), (1, 2)]);
        let b = es(&[(1, 2), (2, 3)]);
        assert_eq!(symmetric_difference(&a, &b), es(&[(0, 1), (2, 3)]));
        assert_eq!(symmetric_difference(&a, &EdgeSet::new()), a);
        assert!(symmetric_difference(&es(&[(0, 1)]), &es(&[(1, 0)])).is_empty());
    }

    /// Minimum cut by trying every vertex bipartition.
    fn brute_min_cut(g: &Graph) -> usize {
        let n = g.order();
        (1..(1u64 << (n - 1)))
            .map(|mask| {
                let side = |v: usize| v > 0 && mask >> (v - 1) & 1 == 1;
                g.edges().filter(|&(u, v)| side(u) != side(v)).count()
            })
            .min()
            .unwrap()
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(edge_connectivity(&cycle(4)), 2);
        assert_eq!(brute_min_cut(&gen_complete(4)), 3);
        assert_eq!(edge_connectivity(&gen_complete(4)), 3);
        let k44 = gen_complete_bipartite(4, 4);
        assert_eq!(brute_min_cut(&k44), 4);
        assert_eq!(edge_connectivity(&k44), 4);
        assert_eq!(edge_connectivity(&Graph::from_edges(4, [(0, 1), (2, 3)])), 0);
    }

    #[test]
    fn edge_connectivity_matches_brute_force_on_small_graphs() {
        for mask in (0..1u64 << 15).step_by(97) {
            let g = Graph::from_mask(6, mask);
            assert_eq!(edge_connectivity(&g), brute_min_cut(&g), "{g:?}");
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&gen_complete(4)).unwrap(), 1);
        assert_eq!(diameter(&path(6)).unwrap(), 5);
        assert_eq!(diameter(&cycle(6)).unwrap(), 3);
        assert!(matches!(diameter(&Graph::new(2)), Err(Error::Disconnected)));
    }

    #[test]
    fn triangle_free_examples() {
        assert!(is_triangle_free(&cycle(5)));
        assert!(!is_triangle_free(&gen_complete(4)));
        assert!(is_triangle_free(&gen_c5k(2)));
    }

    #[test]
    fn bridges_of_small_graphs() {
        assert_eq!(bridges(&path(4)), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(bridges(&cycle(5)).is_empty());
        for mask in (0..1u64 << 15).step_by(61) {
            let g = Graph::from_mask(6, mask);
            let expected: Vec<_> =
                g.edges().filter(|&(u, v)| components(&g.without_edge(u, v)).len() > components(&g).len()).collect();
            assert_eq!(bridges(&g), expected, "{g:?}");
        }
    }

    #[test]
    fn large_vertex_ids_use_multiple_words() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65), (3, 100)]);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 129), (3, 100), (64, 65)]);
        assert_eq!(complement(&complement(&g)), g);
    }
}
