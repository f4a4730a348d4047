//! Simple undirected graphs with stable vertex ids.
//!
//! Vertices are identified by `0..capacity`. Deleting a vertex tombstones its id
//! instead of shifting the others, so reduction traces can keep talking about the
//! ids of the input graph. [`Graph::compact`] produces a dense relabeled copy.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{argument, Error, Result};

/// An unordered vertex pair, always stored with the smaller id first.
pub type Edge = (usize, usize);
pub type VertexSet = BTreeSet<usize>;
pub type EdgeSet = BTreeSet<Edge>;

/// Normalizes a pair so that the smaller id comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    alive: FixedBitSet,
    edges: usize,
}

impl Graph {
    /// Edgeless graph on vertices `0..n`.
    pub fn new(n: usize) -> Self {
        let mut alive = FixedBitSet::with_capacity(n);
        alive.insert_range(..);
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            alive,
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return argument(format!("edge ({u}, {v}) out of range for n = {n}"));
            }
            if u == v {
                return argument(format!("self-loop at {u}"));
            }
            if !g.add_edge(u, v) {
                return argument(format!("duplicate edge ({u}, {v})"));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Size of the id space, including tombstoned ids.
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_live(&self, v: usize) -> bool {
        v < self.adj.len() && self.alive.contains(v)
    }

    /// Live vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive.ones()
    }

    pub fn live_set(&self) -> &FixedBitSet {
        &self.alive
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    /// Adds `uv`; returns false if it was already present.
    ///
    /// Panics on self-loops or dead endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at {u}");
        assert!(self.is_live(u) && self.is_live(v), "edge ({u}, {v}) touches a dead vertex");
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        self.edges -= 1;
        true
    }

    /// Tombstones `v` and drops its incident edges.
    pub fn remove_vertex(&mut self, v: usize) {
        assert!(self.is_live(v), "vertex {v} is not live");
        let nbrs: Vec<usize> = self.adj[v].ones().collect();
        for u in nbrs {
            self.adj[u].set(v, false);
        }
        self.edges -= self.adj[v].count_ones(..);
        self.adj[v].clear();
        self.alive.set(v, false);
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn closed_neighbor_set(&self, v: usize) -> FixedBitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs of distinct live vertices, lexicographically.
    pub fn non_edges(&self) -> Vec<Edge> {
        let verts: Vec<usize> = self.vertices().collect();
        let mut out = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if !self.adj[u].contains(v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether the given vertices are pairwise adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adj[u].contains(v)))
    }

    /// Empty-bitset over this graph's id space.
    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.capacity())
    }

    pub fn set_of(&self, vs: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut s = self.empty_set();
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Relabels live vertices to `0..n` preserving their relative order.
    /// Returns the new graph and the map from new ids to old ids.
    pub fn compact(&self) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = self.vertices().collect();
        let (g, _) = self
            .induced_subgraph(&old)
            .expect("live vertices form a valid subset");
        (g, old)
    }

    /// `G[s]` relabeled so that new vertex `i` is `s[i]`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut index = HashMap::with_capacity(s.len());
        for (i, &v) in s.iter().enumerate() {
            if !self.is_live(v) {
                return Err(Error::DeadVertex(v));
            }
            if index.insert(v, i).is_some() {
                return argument(format!("vertex {v} listed twice"));
            }
        }
        let mut g = Graph::new(s.len());
        for (i, &v) in s.iter().enumerate() {
            for u in self.adj[v].ones() {
                if let Some(&j) = index.get(&u) {
                    if i < j {
                        g.add_edge(i, j);
                    }
                }
            }
        }
        Ok((g, s.to_vec()))
    }

    /// Complement over the live vertices; tombstoned ids stay dead.
    pub fn complement(&self) -> Graph {
        let n = self.capacity();
        let mut adj = Vec::with_capacity(n);
        let mut edges = 0;
        for v in 0..n {
            let mut row = FixedBitSet::with_capacity(n);
            if self.alive.contains(v) {
                row.union_with(&self.alive);
                row.difference_with(&self.adj[v]);
                row.set(v, false);
                edges += row.count_ones(..);
            }
            adj.push(row);
        }
        Graph {
            adj,
            alive: self.alive.clone(),
            edges: edges / 2,
        }
    }

    /// Panics if adjacency is asymmetric, reflexive, or touches dead vertices.
    pub fn check_invariants(&self) {
        let mut count = 0;
        for v in 0..self.capacity() {
            assert!(!self.adj[v].contains(v), "self-loop at {v}");
            if !self.alive.contains(v) {
                assert_eq!(self.adj[v].count_ones(..), 0, "dead vertex {v} has edges");
                continue;
            }
            for u in self.adj[v].ones() {
                assert!(self.alive.contains(u), "edge to dead vertex {u}");
                assert!(self.adj[u].contains(v), "asymmetric edge {v}->{u}");
            }
            count += self.adj[v].count_ones(..);
        }
        assert_eq!(count, 2 * self.edges, "edge counter out of sync");
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_err = |line: usize, message: String| Error::Parse { line, message };

        let (hline, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing header".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (n, m) = match fields.as_slice() {
            [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(n), Ok(m)) => (n, m),
                _ => return Err(parse_err(hline, format!("malformed header '{header}'"))),
            },
            _ => return Err(parse_err(hline, format!("malformed header '{header}'"))),
        };

        let mut g = Graph::new(n);
        let mut seen = 0;
        let mut last_line = hline;
        for (lno, line) in lines {
            last_line = lno;
            if seen == m {
                return Err(parse_err(lno, format!("more than {m} edges")));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (u, v) = match fields.as_slice() {
                [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
                    (Ok(u), Ok(v)) => (u, v),
                    _ => return Err(parse_err(lno, format!("malformed edge '{line}'"))),
                },
                _ => return Err(parse_err(lno, format!("malformed edge '{line}'"))),
            };
            if u >= n || v >= n {
                return Err(parse_err(lno, format!("vertex id out of range (n = {n})")));
            }
            if u == v {
                return Err(parse_err(lno, format!("self-loop at {u}")));
            }
            if !g.add_edge(u, v) {
                return Err(parse_err(lno, format!("duplicate edge {u} {v}")));
            }
            seen += 1;
        }
        if seen < m {
            return Err(parse_err(last_line, format!("expected {m} edges, found {seen}")));
        }
        Ok(g)
    }

    /// Writes the compacted graph in edge-list format.
    pub fn to_edge_list(&self) -> String {
        let (g, _) = self.compact();
        let mut out = String::new();
        writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
        for (u, v) in g.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = g.empty_set();
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if !seen.contains(u) {
                    seen.insert(u);
                    comp.push(u);
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components of `G[allowed]`, same ordering conventions as [`connected_components`].
pub fn components_within(g: &Graph, allowed: &FixedBitSet) -> Vec<Vec<usize>> {
    let mut seen = g.empty_set();
    let mut out = Vec::new();
    for s in allowed.ones() {
        if seen.contains(s) || !g.is_live(s) {
            continue;
        }
        seen.insert(s);
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if allowed.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    comp.push(u);
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub(crate) fn and(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.intersect_with(b);
    s
}

pub(crate) fn minus(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.difference_with(b);
    s
}

pub(crate) fn or(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.union_with(b);
    s
}

/// Maximal classes of vertices with equal closed neighborhoods.
pub fn true_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut by_nbhd: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in g.vertices() {
        let key: Vec<usize> = g.closed_neighbor_set(v).ones().collect();
        match by_nbhd.get(&key) {
            Some(&i) => classes[i].push(v),
            None => {
                by_nbhd.insert(key, classes.len());
                classes.push(vec![v]);
            }
        }
    }
    classes
}

/// Whether `N_Y(x_i) ⊆ N_Y(x_{i+1})` holds along the given order of `x`.
pub fn is_join(g: &Graph, x: &[usize], y: &[usize]) -> Result<bool> {
    let ys = g.set_of(y.iter().copied());
    for &v in x.iter().chain(y) {
        if !g.is_live(v) {
            return Err(Error::DeadVertex(v));
        }
    }
    if x.iter().any(|&v| ys.contains(v)) {
        return argument("join sides overlap");
    }
    let restricted = |v: usize| {
        let mut s = g.neighbor_set(v).clone();
        s.intersect_with(&ys);
        s
    };
    Ok(x.windows(2)
        .all(|w| restricted(w[0]).is_subset(&restricted(w[1]))))
}
