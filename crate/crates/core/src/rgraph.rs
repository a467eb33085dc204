//! Rooted graphs and rooted-minor machinery.
//!
//! A rooted graph is a simple graph with one distinguished vertex that
//! minor operations must preserve: vertices other than the root may be
//! deleted, any edge may be deleted, and contracting an edge incident
//! to the root re-roots the merged vertex. Containment testing uses
//! branch sets (disjoint connected vertex sets, one per pattern vertex,
//! joined by host edges across every pattern edge, with the host root
//! inside the pattern root's branch set).

use crate::ratmat::RationalMatrix;
use num::Zero;
use serde::{Deserialize, Deserializer, Serialize};
use std::collections::BTreeSet;

/// Hosts above this vertex count are rejected by containment search.
pub const MINOR_HOST_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RGraphError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid minor operation: {0}")]
    InvalidOp(String),
    #[error("host has {n} vertices; containment search is capped at {cap}")]
    SizeLimit { n: usize, cap: usize },
    #[error("minimal minors are only known up to target 5, got {0}")]
    OutOfRange(usize),
    #[error("invalid graph6 text: {0}")]
    BadGraph6(String),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(into = "GraphRepr")]
pub struct RootedGraph {
    n: usize,
    root: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    root: usize,
}

impl From<RootedGraph> for GraphRepr {
    fn from(g: RootedGraph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().copied().collect(),
            root: g.root,
        }
    }
}

impl<'de> Deserialize<'de> for RootedGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        RootedGraph::new(repr.n, &repr.edges, repr.root).map_err(serde::de::Error::custom)
    }
}

impl RootedGraph {
    /// Validates and normalizes: endpoints in range, no loops, edges
    /// stored as ordered pairs with duplicates collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)], root: usize) -> Result<Self, RGraphError> {
        if root >= n {
            return Err(RGraphError::InvalidGraph(format!(
                "root {root} out of range for {n} vertices"
            )));
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(RGraphError::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(RGraphError::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(RootedGraph {
            n,
            root,
            edges: set,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized (min, max) pairs in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn with_root(&self, root: usize) -> Result<Self, RGraphError> {
        if root >= self.n {
            return Err(RGraphError::InvalidGraph(format!(
                "root {root} out of range for {} vertices",
                self.n
            )));
        }
        let mut g = self.clone();
        g.root = root;
        Ok(g)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn complement(&self) -> Self {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        RootedGraph {
            n: self.n,
            root: self.root,
            edges,
        }
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components as sorted vertex lists, sorted by minimum.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        assert!(v < self.n, "vertex out of range");
        if self.n <= 1 {
            return false;
        }
        let adj = self.adjacency_lists();
        let before = self.components().len();
        // count components of g - v
        let mut seen = vec![false; self.n];
        seen[v] = true;
        let mut after = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            after += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                for &u in &adj[x] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        after > before
    }

    /// Induced subgraph on a sorted vertex subset that contains the
    /// root; vertices are relabeled to 0.. in sorted order.
    pub(crate) fn induced(&self, keep: &[usize]) -> Self {
        let pos = |v: usize| keep.binary_search(&v).expect("vertex kept");
        let edges: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(u, v)| keep.binary_search(u).is_ok() && keep.binary_search(v).is_ok())
            .map(|&(u, v)| (pos(u), pos(v)))
            .collect();
        RootedGraph {
            n: keep.len(),
            root: pos(self.root),
            edges,
        }
    }

    /// The root's connected component as a rooted graph, along with the
    /// original indices of its vertices in relabeled order.
    pub fn root_component(&self) -> (Self, Vec<usize>) {
        let comp = self
            .components()
            .into_iter()
            .find(|c| c.contains(&self.root))
            .expect("root lies in some component");
        (self.induced(&comp), comp)
    }

    /// Removes a vertex ignoring the root rule; if the root itself is
    /// removed the result is re-rooted at relabeled vertex 0. This is
    /// plain subgraph bookkeeping, not a rooted-minor operation.
    pub fn without_vertex(&self, v: usize) -> Result<Self, RGraphError> {
        if v >= self.n {
            return Err(RGraphError::InvalidGraph(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )));
        }
        if self.n == 1 {
            return Err(RGraphError::InvalidGraph(
                "cannot remove the only vertex".into(),
            ));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        let root = if self.root == v { 0 } else { shift(self.root) };
        RootedGraph::new(self.n - 1, &edges, root)
    }

    pub fn apply_minor_op(&self, op: &MinorOp) -> Result<Self, RGraphError> {
        match *op {
            MinorOp::DeleteEdge(u, v) => {
                if !self.has_edge(u, v) {
                    return Err(RGraphError::InvalidOp(format!("no edge ({u},{v})")));
                }
                let mut g = self.clone();
                g.edges.remove(&(u.min(v), u.max(v)));
                Ok(g)
            }
            MinorOp::DeleteVertex(v) => {
                if v >= self.n {
                    return Err(RGraphError::InvalidOp(format!("no vertex {v}")));
                }
                if v == self.root {
                    return Err(RGraphError::InvalidOp("cannot delete the root".into()));
                }
                self.without_vertex(v)
            }
            MinorOp::ContractEdge(u, v) => {
                if !self.has_edge(u, v) {
                    return Err(RGraphError::InvalidOp(format!("no edge ({u},{v})")));
                }
                let lo = u.min(v);
                let hi = u.max(v);
                let shift = |x: usize| if x > hi { x - 1 } else { x };
                let remap = |x: usize| if x == hi { lo } else { shift(x) };
                let edges: Vec<(usize, usize)> = self
                    .edges
                    .iter()
                    .map(|&(a, b)| (remap(a), remap(b)))
                    .filter(|&(a, b)| a != b)
                    .collect();
                let root = remap(self.root);
                RootedGraph::new(self.n - 1, &edges, root)
            }
        }
    }

    /// All graphs reachable by a single rooted-minor operation.
    pub fn one_step_minors(&self) -> Vec<RootedGraph> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            out.push(self.apply_minor_op(&MinorOp::DeleteEdge(u, v)).unwrap());
            out.push(self.apply_minor_op(&MinorOp::ContractEdge(u, v)).unwrap());
        }
        for v in 0..self.n {
            if v != self.root && self.n > 1 {
                out.push(self.apply_minor_op(&MinorOp::DeleteVertex(v)).unwrap());
            }
        }
        out
    }

    /// Appends a leaf to the root and makes the leaf the new root.
    pub fn extend_root(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.insert((self.root, self.n));
        RootedGraph {
            n: self.n + 1,
            root: self.n,
            edges,
        }
    }

    /// Glues `other` onto `self` by identifying `at_self` with
    /// `at_other`; the junction becomes the root. Vertices of `self`
    /// keep their indices; vertex w of `other` maps to
    /// n1 + |{x < w : x != at_other}|.
    pub fn vertex_sum(
        &self,
        at_self: usize,
        other: &Self,
        at_other: usize,
    ) -> Result<Self, RGraphError> {
        if at_self >= self.n || at_other >= other.n {
            return Err(RGraphError::InvalidGraph(
                "vertex sum point out of range".into(),
            ));
        }
        let map_other = |w: usize| {
            if w == at_other {
                at_self
            } else if w < at_other {
                self.n + w
            } else {
                self.n + w - 1
            }
        };
        let mut edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        for &(a, b) in &other.edges {
            edges.push((map_other(a), map_other(b)));
        }
        RootedGraph::new(self.n + other.n - 1, &edges, at_self)
    }

    /// Rooted-minor containment with the default host size cap.
    pub fn contains_rooted_minor(&self, pattern: &Self) -> Result<bool, RGraphError> {
        self.contains_rooted_minor_capped(pattern, MINOR_HOST_CAP)
    }

    pub fn contains_rooted_minor_capped(
        &self,
        pattern: &Self,
        cap: usize,
    ) -> Result<bool, RGraphError> {
        contains_impl(self, pattern, true, cap)
    }

    /// Plain (unrooted) minor containment; the roots of both graphs are
    /// ignored.
    pub fn contains_minor(&self, pattern: &Self) -> Result<bool, RGraphError> {
        contains_impl(self, pattern, false, MINOR_HOST_CAP)
    }

    /// graph6 encoding of the unrooted structure (n <= 62); the root
    /// travels out of band.
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= 62, "graph6 short form requires n <= 62");
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        let mut bits = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.has_edge(i, j));
            }
        }
        for chunk in bits.chunks(6) {
            let mut value = 0u8;
            for (k, &bit) in chunk.iter().enumerate() {
                if bit {
                    value |= 1 << (5 - k);
                }
            }
            out.push((value + 63) as char);
        }
        out
    }

    pub fn from_graph6(text: &str, root: usize) -> Result<Self, RGraphError> {
        let bytes = text.trim().as_bytes();
        if bytes.is_empty() {
            return Err(RGraphError::BadGraph6("empty input".into()));
        }
        let n = match bytes[0] {
            b @ 63..=125 => (b - 63) as usize,
            b => {
                return Err(RGraphError::BadGraph6(format!(
                    "unsupported size byte {b} (only n <= 62 handled)"
                )))
            }
        };
        let bit_count = n * n.saturating_sub(1) / 2;
        let group_count = bit_count.div_ceil(6);
        if bytes.len() != 1 + group_count {
            return Err(RGraphError::BadGraph6(format!(
                "expected {} data bytes for n = {n}, found {}",
                group_count,
                bytes.len() - 1
            )));
        }
        let mut bits = Vec::with_capacity(group_count * 6);
        for &b in &bytes[1..] {
            if !(63..=126).contains(&b) {
                return Err(RGraphError::BadGraph6(format!("byte {b} out of range")));
            }
            let v = b - 63;
            for k in 0..6 {
                bits.push(v & (1 << (5 - k)) != 0);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        RootedGraph::new(n, &edges, root)
    }
}

/// Off-diagonal support of a symmetric matrix as a rooted graph.
pub fn support_graph(m: &RationalMatrix, root: usize) -> Result<RootedGraph, RGraphError> {
    if !m.is_symmetric() {
        return Err(RGraphError::InvalidGraph(
            "support of a non-symmetric matrix".into(),
        ));
    }
    let n = m.rows();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !m.at(u, v).is_zero() {
                edges.push((u, v));
            }
        }
    }
    RootedGraph::new(n, &edges, root)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
    ContractEdge(usize, usize),
}

// ---------------------------------------------------------------------
// Branch-set containment search
// ---------------------------------------------------------------------

fn contains_impl(
    host: &RootedGraph,
    pattern: &RootedGraph,
    rooted: bool,
    cap: usize,
) -> Result<bool, RGraphError> {
    if host.n > cap || cap > 32 {
        return Err(RGraphError::SizeLimit {
            n: host.n,
            cap: cap.min(32),
        });
    }
    if pattern.n > host.n || pattern.edge_count() > host.edge_count() {
        return Ok(false);
    }

    // Assignment order: the root anchors everything, then high-degree
    // pattern vertices first.
    let mut order: Vec<usize> = (0..pattern.n).collect();
    order.sort_by_key(|&v| {
        let is_root = rooted && v == pattern.root;
        (!is_root, std::cmp::Reverse(pattern.degree(v)), v)
    });
    let position_of = {
        let mut pos = vec![0; pattern.n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        pos
    };
    let anchors: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let mut a: Vec<usize> = pattern
                .neighbors(v)
                .into_iter()
                .map(|u| position_of[u])
                .filter(|&p| p < k)
                .collect();
            a.sort_unstable();
            a
        })
        .collect();

    let mut host_adj = vec![0u32; host.n];
    for (u, v) in host.edges() {
        host_adj[u] |= 1 << v;
        host_adj[v] |= 1 << u;
    }

    let mut search = BranchSearch {
        host_adj: &host_adj,
        host_all: if host.n == 32 {
            u32::MAX
        } else {
            (1u32 << host.n) - 1
        },
        anchors: &anchors,
        sets: vec![0u32; pattern.n],
        used: 0,
        rooted,
        host_root: host.root,
        total: pattern.n,
    };
    Ok(search.place(0))
}

struct BranchSearch<'a> {
    host_adj: &'a [u32],
    host_all: u32,
    anchors: &'a [Vec<usize>],
    sets: Vec<u32>,
    used: u32,
    rooted: bool,
    host_root: usize,
    total: usize,
}

impl BranchSearch<'_> {
    fn place(&mut self, k: usize) -> bool {
        if k == self.total {
            return true;
        }
        let free = self.host_all & !self.used;
        if self.rooted && k == 0 {
            let root_bit = 1u32 << self.host_root;
            return self.grow(k, root_bit, self.host_adj[self.host_root], 0, free);
        }
        // Seeds: the branch set must touch the first already-placed
        // pattern neighbor when one exists; otherwise any free vertex.
        // Banning earlier seeds makes each candidate set appear once.
        let candidates = match self.anchors[k].first() {
            Some(&a) => neighbors_of_set(self.host_adj, self.sets[a]) & free,
            None => free,
        };
        let mut banned = 0u32;
        let mut rest = candidates;
        while rest != 0 {
            let seed = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.grow(k, 1u32 << seed, self.host_adj[seed], banned, free) {
                return true;
            }
            banned |= 1u32 << seed;
        }
        false
    }

    /// Enumerates connected supersets of `set` inside `free \ excluded`,
    /// each exactly once, trying every one as the branch set for
    /// position k.
    fn grow(&mut self, k: usize, set: u32, set_nbrs: u32, excluded: u32, free: u32) -> bool {
        let remaining = (self.total - k - 1) as u32;
        if (free & !set).count_ones() >= remaining && self.accepts(k, set, set_nbrs) {
            self.sets[k] = set;
            self.used |= set;
            let found = self.place(k + 1);
            self.used &= !set;
            if found {
                return true;
            }
        }
        if set.count_ones() + remaining >= free.count_ones() {
            return false; // no room to extend further
        }
        let mut banned = excluded;
        let mut ext = set_nbrs & free & !set & !excluded;
        while ext != 0 {
            let v = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let bit = 1u32 << v;
            if self.grow(k, set | bit, set_nbrs | self.host_adj[v], banned, free) {
                return true;
            }
            banned |= bit;
        }
        false
    }

    fn accepts(&self, k: usize, set: u32, set_nbrs: u32) -> bool {
        let _ = set;
        self.anchors[k].iter().all(|&a| set_nbrs & self.sets[a] != 0)
    }
}

fn neighbors_of_set(adj: &[u32], set: u32) -> u32 {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= adj[v];
    }
    out & !set
}

// ---------------------------------------------------------------------
// Catalog families
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// K_n on vertices 0..n-1.
    Complete(usize),
    /// Star K_{1,k}: center 0, leaves 1..=k.
    Star(usize),
    /// Path 0-1-...-(n-1).
    Path(usize),
    /// Triangle {0,1,2} plus pendant vertex 3 attached to 0.
    Paw,
    /// Spider with legs 2,1,1: center 0, leaves 2,3, leg 0-1-4.
    S211,
    T3(T3Member),
}

/// The six-member family of minimal forbidden minors, in display order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum T3Member {
    K4,
    K23,
    T,
    T1,
    T2,
    T3,
}

impl T3Member {
    pub const ALL: [T3Member; 6] = [
        T3Member::K4,
        T3Member::K23,
        T3Member::T,
        T3Member::T1,
        T3Member::T2,
        T3Member::T3,
    ];
}

/// Fixed labeled graph for each catalog id, rooted at 0; re-root with
/// `with_root` as needed.
pub fn family(id: Family) -> RootedGraph {
    match id {
        Family::Complete(n) => {
            assert!(n >= 1, "complete graph needs a vertex");
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            RootedGraph::new(n, &edges, 0).unwrap()
        }
        Family::Star(k) => {
            let edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
            RootedGraph::new(k + 1, &edges, 0).unwrap()
        }
        Family::Path(n) => {
            assert!(n >= 1, "path needs a vertex");
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            RootedGraph::new(n, &edges, 0).unwrap()
        }
        Family::Paw => RootedGraph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3)], 0).unwrap(),
        Family::S211 => RootedGraph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4)], 0).unwrap(),
        Family::T3(member) => {
            let id = match member {
                T3Member::K4 => crate::constructions::PaperMatrixId::A0,
                T3Member::K23 => crate::constructions::PaperMatrixId::A1,
                T3Member::T => crate::constructions::PaperMatrixId::B0,
                T3Member::T1 => crate::constructions::PaperMatrixId::B1,
                T3Member::T2 => crate::constructions::PaperMatrixId::B2,
                T3Member::T3 => crate::constructions::PaperMatrixId::B3,
            };
            crate::constructions::paper_matrix(id).0
        }
    }
}

/// Minimal rooted minors forcing a lower bound of s on the parameter:
/// the fixed catalog for s <= 3, every non-cut rooting of the
/// six-member family for s = 4, and their root extensions for s = 5.
pub fn minimal_minor_family(s: usize) -> Result<Vec<RootedGraph>, RGraphError> {
    match s {
        0 => Ok(vec![family(Family::Complete(1))]),
        1 => Ok(minimal_minor_family(0)?
            .iter()
            .map(RootedGraph::extend_root)
            .collect()),
        2 => Ok(vec![
            family(Family::Complete(3)),
            family(Family::Star(3)).with_root(1)?,
        ]),
        3 => Ok(minimal_minor_family(2)?
            .iter()
            .map(RootedGraph::extend_root)
            .collect()),
        4 => {
            let mut out = Vec::new();
            for member in T3Member::ALL {
                let g = family(Family::T3(member));
                for v in 0..g.n() {
                    if !g.is_cut_vertex(v) {
                        out.push(g.with_root(v)?);
                    }
                }
            }
            Ok(out)
        }
        5 => Ok(minimal_minor_family(4)?
            .iter()
            .map(RootedGraph::extend_root)
            .collect()),
        other => Err(RGraphError::OutOfRange(other)),
    }
}
