//! Odd spanning trees in complements of triangle-free graphs.
//!
//! For a triangle-free `g` of even order, the complement has an odd
//! spanning tree unless `g` is complete bipartite, two disjoint edges,
//! `C5(2)`, or `K_{2s,2t}` with one edge removed. Outside those families
//! the tree is built explicitly; each shape carries an id from `Star` and
//! `T1` to `T11` naming the construction that produced it.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bipartition, complement, is_connected, is_triangle_free, EdgeSet, Graph, Vertex};
use crate::oracle::verify_odd_spanning_tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExcludedFamily {
    CompleteBipartite,
    TwoK2,
    C5of2,
    K2s2t,
    K2s2tMinusE,
}

impl fmt::Display for ExcludedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExcludedFamily::CompleteBipartite => "complete-bipartite",
            ExcludedFamily::TwoK2 => "2K2",
            ExcludedFamily::C5of2 => "C5(2)",
            ExcludedFamily::K2s2t => "K2s2t",
            ExcludedFamily::K2s2tMinusE => "K2s2t-e",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeId {
    Star,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
}

impl TreeId {
    pub const ALL: [TreeId; 12] = [
        TreeId::Star,
        TreeId::T1,
        TreeId::T2,
        TreeId::T3,
        TreeId::T4,
        TreeId::T5,
        TreeId::T6,
        TreeId::T7,
        TreeId::T8,
        TreeId::T9,
        TreeId::T10,
        TreeId::T11,
    ];
}

impl fmt::Display for TreeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrifreeReason {
    Construction { tree: TreeId, branch: &'static str, edges: EdgeSet },
    Excluded(ExcludedFamily),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrifreeDecision {
    pub exists: bool,
    pub reason: TrifreeReason,
}

impl TrifreeDecision {
    pub fn tree(&self) -> Option<&EdgeSet> {
        match &self.reason {
            TrifreeReason::Construction { edges, .. } => Some(edges),
            TrifreeReason::Excluded(_) => None,
        }
    }

    pub fn tree_id(&self) -> Option<TreeId> {
        match &self.reason {
            TrifreeReason::Construction { tree, .. } => Some(*tree),
            TrifreeReason::Excluded(_) => None,
        }
    }
}

/// The anchor, its `g`-neighborhood `x`, the rest `y`, and per `x` the
/// complement neighbors inside `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseFrame {
    pub anchor: Vertex,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub y_parts: Vec<Vec<Vertex>>,
    pub y_prime: Vec<Vertex>,
}

impl CaseFrame {
    fn around(g: &Graph, anchor: Vertex, x: Vec<Vertex>, y: Vec<Vertex>) -> Self {
        let y_parts: Vec<Vec<Vertex>> =
            x.iter().map(|&xi| y.iter().copied().filter(|&w| !g.has_edge(xi, w)).collect()).collect();
        let y_prime = y.iter().copied().filter(|&w| x.iter().all(|&xi| g.has_edge(xi, w))).collect();
        CaseFrame { anchor, x, y, y_parts, y_prime }
    }
}

fn require_triangle_free(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_triangle_free(g) {
        return Err(Error::NotTriangleFree);
    }
    Ok(())
}

/// Whether the complement of `g` is connected.
pub fn complement_connected(g: &Graph) -> Result<bool> {
    require_triangle_free(g)?;
    let connected = is_connected(&complement(g))?;
    debug_assert_eq!(connected, is_complete_bipartite(g).is_none() || g.order() < 2);
    Ok(connected)
}

/// Part sizes, smaller first, if `g` is a connected complete bipartite graph.
pub fn is_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    let (a, b) = bipartite_parts(g)?;
    (g.edge_count() == a * b).then_some((a.min(b), a.max(b)))
}

fn bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    if g.order() < 2 {
        return None;
    }
    let parts = bipartition(g).ok()??;
    Some((parts.left.len(), parts.right.len()))
}

/// A blown-up five-cycle: `twins` replace one cycle vertex, joined to both
/// of its cycle neighbors `p` and `q`; `r ~ p`, `s ~ q` and `r ~ s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C5Blowup {
    pub twins: Vec<Vertex>,
    pub p: Vertex,
    pub q: Vertex,
    pub r: Vertex,
    pub s: Vertex,
}

pub fn c5_blowup(g: &Graph) -> Option<C5Blowup> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    let k = n - 4;
    if g.edge_count() != 2 * k + 3 {
        return None;
    }
    let (p, q) = if k == 1 {
        if (0..n).any(|v| g.degree(v) != 2) || !is_connected(g).ok()? {
            return None;
        }
        let mut nb = g.neighbors(0);
        (nb.next()?, nb.next()?)
    } else {
        let hubs: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) == k + 1).collect();
        if hubs.len() != 2 {
            return None;
        }
        (hubs[0], hubs[1])
    };
    if g.has_edge(p, q) {
        return None;
    }
    let twins: Vec<Vertex> = g.neighbors(p).filter(|&w| g.has_edge(w, q)).collect();
    if twins.len() != k || twins.iter().any(|&b| g.degree(b) != 2) {
        return None;
    }
    let r = g.neighbors(p).find(|w| !twins.contains(w))?;
    let s = g.neighbors(q).find(|w| !twins.contains(w))?;
    let ok = r != s
        && g.has_edge(r, s)
        && g.degree(r) == 2
        && g.degree(s) == 2
        && g.degree(p) == k + 1
        && g.degree(q) == k + 1;
    ok.then_some(C5Blowup { twins, p, q, r, s })
}

pub fn recognize_excluded(g: &Graph) -> Option<ExcludedFamily> {
    let n = g.order();
    if n == 4 && g.edge_count() == 2 && (0..n).all(|v| g.degree(v) == 1) {
        return Some(ExcludedFamily::TwoK2);
    }
    if n == 6 && c5_blowup(g).is_some() {
        return Some(ExcludedFamily::C5of2);
    }
    let (a, b) = bipartite_parts(g)?;
    let both_even = a % 2 == 0 && b % 2 == 0;
    let m = g.edge_count();
    if m == a * b {
        Some(if both_even { ExcludedFamily::K2s2t } else { ExcludedFamily::CompleteBipartite })
    } else if both_even && m + 1 == a * b {
        Some(ExcludedFamily::K2s2tMinusE)
    } else {
        None
    }
}

pub fn build_case_frame(g: &Graph) -> Result<CaseFrame> {
    require_triangle_free(g)?;
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let anchor = (0..n).find(|&v| g.degree(v).is_multiple_of(2)).ok_or(Error::GIsOdd)?;
    let x: Vec<Vertex> = g.neighbors(anchor).collect();
    let y: Vec<Vertex> = (0..n).filter(|&v| !g.has_edge(anchor, v)).collect();
    Ok(CaseFrame::around(g, anchor, x, y))
}

struct Builder {
    edges: EdgeSet,
}

impl Builder {
    fn new() -> Self {
        Builder { edges: EdgeSet::new() }
    }

    fn edge(&mut self, u: Vertex, v: Vertex) -> &mut Self {
        self.edges.insert(u, v);
        self
    }

    fn fan(&mut self, hub: Vertex, leaves: impl IntoIterator<Item = Vertex>) -> &mut Self {
        for w in leaves {
            self.edges.insert(hub, w);
        }
        self
    }

    fn done(&mut self) -> EdgeSet {
        std::mem::take(&mut self.edges)
    }
}

fn without<'a>(list: &'a [Vertex], drop: &'a [Vertex]) -> impl Iterator<Item = Vertex> + 'a {
    list.iter().copied().filter(move |v| !drop.contains(v))
}

type Built = (TreeId, &'static str, EdgeSet);

fn exhausted(branch: &'static str, frame: CaseFrame) -> Error {
    Error::ExhaustedCases { branch, frame: Box::new(frame) }
}

/// Every vertex has odd degree in `g`.
fn odd_case(g: &Graph) -> Result<Built> {
    let n = g.order();
    let v = 0;
    let x: Vec<Vertex> = g.neighbors(v).collect();
    let y: Vec<Vertex> = (0..n).filter(|&w| w != v && !g.has_edge(v, w)).collect();
    let frame = || CaseFrame::around(g, v, x.clone(), y.clone());
    let hit = x.iter().find_map(|&a| y.iter().find(|&&b| !g.has_edge(a, b)).map(|&b| (a, b)));
    let Some((xs, ys)) = hit else {
        return Err(exhausted("odd: no non-adjacent pair across the anchor", frame()));
    };

    let tree_one = |z: Vertex, far: Vertex| -> EdgeSet {
        Builder::new().edge(xs, z).edge(z, far).fan(v, without(&y, &[far])).fan(xs, without(&x, &[xs])).done()
    };

    if let Some(yp) = y.iter().copied().find(|&w| w != ys && !g.has_edge(ys, w)) {
        return Ok((TreeId::T1, "odd: second complement neighbor of y*", tree_one(ys, yp)));
    }
    if x.len() == 1 {
        let Some(ypp) = y.iter().copied().find(|&w| w != ys && !g.has_edge(xs, w)) else {
            return Err(exhausted("odd: single anchor neighbor without a second partner", frame()));
        };
        let Some(yp) = y.iter().copied().find(|&w| w != ys && w != ypp) else {
            return Err(exhausted("odd: remainder too small", frame()));
        };
        return Ok((TreeId::T1, "odd: single anchor neighbor", tree_one(ypp, yp)));
    }
    let Some(yp) = y.iter().copied().find(|&w| w != ys && !g.has_edge(xs, w)) else {
        return Err(exhausted("odd: x* has a single complement neighbor in Y", frame()));
    };
    let xp = x.iter().copied().find(|&w| w != xs).expect("at least three anchor neighbors");
    let (hit, miss, branch) = if !g.has_edge(xp, ys) {
        (ys, yp, "odd: x' sees y*")
    } else if !g.has_edge(xp, yp) {
        (yp, ys, "odd: x' sees y' (mirrored)")
    } else {
        return Err(exhausted("odd: claw step found no partner for x'", frame()));
    };
    let tree = Builder::new()
        .edge(xs, ys)
        .edge(xs, yp)
        .edge(xp, hit)
        .fan(xs, without(&x, &[xs, xp]))
        .fan(v, without(&y, &[miss]))
        .done();
    Ok((TreeId::T2, branch, tree))
}

/// Some vertex has even degree in `g`.
fn even_case(g: &Graph) -> Result<Built> {
    let frame = build_case_frame(g)?;
    let y0 = frame.anchor;
    let (x, y) = (frame.x.clone(), frame.y.clone());
    if x.is_empty() {
        let tree = Builder::new().fan(y0, (0..g.order()).filter(|&w| w != y0)).done();
        return Ok((TreeId::Star, "even: isolated anchor", tree));
    }

    let seen_from_x = |w: Vertex| -> Vec<Vertex> { x.iter().copied().filter(|&a| !g.has_edge(a, w)).collect() };
    if let Some((yp, hits)) = y.iter().map(|&w| (w, seen_from_x(w))).find(|(_, h)| h.len() >= 2) {
        let (x1, x2) = (hits[0], hits[1]);
        let tree =
            Builder::new().fan(y0, without(&y, &[y0])).edge(yp, x1).edge(yp, x2).fan(x1, without(&x, &[x1, x2])).done();
        return Ok((TreeId::T3, "even: remainder vertex with two partners", tree));
    }
    if y.len() == 2 {
        return Err(exhausted("even: two-vertex remainder", frame));
    }

    let independent = y.iter().enumerate().all(|(i, &a)| y[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
    if independent {
        return independent_remainder(&frame);
    }
    if x.len() != 2 {
        return Err(exhausted("even: remainder has an edge but anchor degree is not 2", frame));
    }
    two_anchor_neighbors(g, &frame)
}

fn independent_remainder(frame: &CaseFrame) -> Result<Built> {
    let (x, y) = (&frame.x, &frame.y);
    if let Some(i) = frame.y_parts.iter().position(|p| p.len() >= 2) {
        let (xi, a, b) = (x[i], frame.y_parts[i][0], frame.y_parts[i][1]);
        let tree = Builder::new().edge(xi, a).edge(xi, b).fan(a, without(y, &[a, b])).fan(xi, without(x, &[xi])).done();
        return Ok((TreeId::T4, "even: independent remainder, two partners", tree));
    }
    let matched: Vec<(Vertex, Vertex)> =
        x.iter().zip(&frame.y_parts).filter(|(_, p)| p.len() == 1).map(|(&a, p)| (a, p[0])).collect();
    if matched.len() < 2 {
        return Err(exhausted("even: independent remainder with a near-perfect join", frame.clone()));
    }
    let ((x1, y1), (x2, y2)) = (matched[0], matched[1]);
    if x.len() >= 4 {
        let x3 = without(x, &[x1, x2]).next().expect("at least four anchor neighbors");
        let tree = Builder::new()
            .edge(x1, y1)
            .edge(x2, y2)
            .fan(y1, without(y, &[y1, y2]))
            .edge(x1, x2)
            .edge(x2, x3)
            .fan(x1, without(x, &[x1, x2, x3]))
            .done();
        Ok((TreeId::T5, "even: matching of size two, anchor degree at least 4", tree))
    } else {
        let y3 = without(y, &[y1, y2]).next().expect("remainder has at least four vertices");
        let tree = Builder::new()
            .edge(x1, y1)
            .edge(x2, y2)
            .edge(y1, y2)
            .edge(y1, y3)
            .fan(y2, without(y, &[y1, y2, y3]))
            .done();
        Ok((TreeId::T6, "even: matching of size two, anchor degree 2", tree))
    }
}

fn two_anchor_neighbors(g: &Graph, frame: &CaseFrame) -> Result<Built> {
    let y0 = frame.anchor;
    let y = &frame.y;
    let (x1, x2) = (frame.x[0], frame.x[1]);
    let (p1, p2) = (&frame.y_parts[0], &frame.y_parts[1]);
    let rest = &frame.y_prime;
    if p1.is_empty() || p2.is_empty() {
        return Err(exhausted("even: an anchor neighbor sees the whole remainder", frame.clone()));
    }

    let bridge = p1.iter().find_map(|&a| p2.iter().find(|&&b| !g.has_edge(a, b)).map(|&b| (a, b)));
    if let Some((a, b)) = bridge {
        if p2.len() >= 2 {
            let c = without(p2, &[b]).next().unwrap();
            let tree =
                Builder::new().edge(x1, a).edge(a, b).edge(x2, b).edge(b, c).fan(y0, without(y, &[y0, b, c])).done();
            return Ok((TreeId::T7, "even: cross partner edge, second side larger", tree));
        }
        if p1.len() >= 2 {
            let c = without(p1, &[a]).next().unwrap();
            let tree =
                Builder::new().edge(x2, b).edge(b, a).edge(x1, a).edge(a, c).fan(y0, without(y, &[y0, a, c])).done();
            return Ok((TreeId::T7, "even: cross partner edge, first side larger (mirrored)", tree));
        }
        let Some(&c) = rest.first() else {
            return Err(exhausted("even: cross partner edge with nothing left over", frame.clone()));
        };
        let tree = Builder::new().edge(x1, a).edge(a, b).edge(x2, b).edge(b, c).fan(a, without(rest, &[c])).done();
        return Ok((TreeId::T8, "even: cross partner edge, singleton sides", tree));
    }

    let (a, b, c) = (p1.len(), p2.len(), rest.len());
    let ones = [a, b, c].iter().filter(|&&k| k == 1).count();
    if ones >= 2 {
        return match c5_blowup(g) {
            Some(shape) if shape.twins.len() >= 4 => Ok((TreeId::T11, "even: blown-up five-cycle", c5_tree(&shape))),
            _ => Err(exhausted("even: small blown-up five-cycle", frame.clone())),
        };
    }
    let side_one = (x1, x2, p1, p2);
    let side_two = (x2, x1, p2, p1);
    let (sides, long_leaf, branch) = if ones == 0 {
        if a % 2 == 0 {
            (side_one, true, "even: all parts at least two, first side even")
        } else if b % 2 == 0 {
            (side_two, true, "even: all parts at least two, second side even")
        } else {
            (side_one, false, "even: all parts at least two, both sides odd")
        }
    } else if a > 1 && a % 2 == 1 {
        (side_one, false, "even: one singleton part, first side odd")
    } else if b > 1 && b % 2 == 1 {
        (side_two, false, "even: one singleton part, second side odd")
    } else if a > 1 {
        (side_one, true, "even: one singleton part, first side even")
    } else {
        (side_two, true, "even: one singleton part, second side even")
    };
    let (xs, xo, own, other) = sides;
    let (q1, q2) = (own[0], own[1]);
    let spare = without(rest, &[y0]).next();
    let mut t = Builder::new();
    t.edge(xs, xo)
        .edge(xs, q1)
        .edge(xs, q2)
        .edge(q1, y0)
        .fan(q1, without(own, &[q1, q2]))
        .fan(y0, other.iter().copied());
    let tree_id = match (long_leaf, spare) {
        (true, Some(s)) => {
            t.fan(y0, without(rest, &[y0, s])).edge(q1, s);
            TreeId::T9
        }
        (true, None) => return Err(exhausted("even: even side without a spare vertex", frame.clone())),
        (false, _) => {
            t.fan(y0, without(rest, &[y0]));
            TreeId::T10
        }
    };
    Ok((tree_id, branch, t.done()))
}

fn c5_tree(shape: &C5Blowup) -> EdgeSet {
    let C5Blowup { twins, p, q, r, s } = shape;
    let (b1, b2, b3) = (twins[0], twins[1], twins[2]);
    Builder::new()
        .edge(*p, *s)
        .edge(*s, b1)
        .edge(*s, b3)
        .fan(b3, twins[3..].iter().copied())
        .edge(*r, b3)
        .edge(*r, b2)
        .edge(*q, *r)
        .done()
}

/// Decides whether the complement of `g` has an odd spanning tree and, if
/// so, builds one.
pub fn trifree_complement_tree(g: &Graph) -> Result<TrifreeDecision> {
    require_triangle_free(g)?;
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if let Some(family) = recognize_excluded(g) {
        return Ok(TrifreeDecision { exists: false, reason: TrifreeReason::Excluded(family) });
    }
    let (tree, branch, edges) = if g.is_odd() { odd_case(g)? } else { even_case(g)? };
    let report = verify_odd_spanning_tree(&complement(g), &edges);
    if !report.ok {
        let frame = build_case_frame(g).unwrap_or_else(|_| CaseFrame::around(g, 0, g.neighbors(0).collect(), vec![]));
        return Err(exhausted(branch, frame));
    }
    Ok(TrifreeDecision { exists: true, reason: TrifreeReason::Construction { tree, branch, edges } })
}
