//! Proper interval recognition through umbrella orderings, and bi-clique chain
//! recognition.
//!
//! Orderings are produced on the graph with true-twin classes contracted, using
//! three LexBFS sweeps (the last two breaking ties by the previous sweep), then
//! verified. A connected twin-free proper interval graph has a unique umbrella
//! ordering up to reversal, so the output is canonicalized: each component is
//! oriented so that it starts with the smaller id, twins are expanded in
//! ascending order, and components are sorted by their first vertex.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{argument, Error, Result};
use crate::graph::{connected_components, true_twin_classes, Edge, Graph};

/// A vertex permutation satisfying the umbrella property for its host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UmbrellaOrdering(Vec<usize>);

impl UmbrellaOrdering {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Two cliques `order[..split]` and `order[split..]` linked by a join.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicliqueChainWitness {
    pub order: UmbrellaOrdering,
    pub split: usize,
}

impl BicliqueChainWitness {
    pub fn first_clique(&self) -> &[usize] {
        &self.order.as_slice()[..self.split]
    }

    pub fn second_clique(&self) -> &[usize] {
        &self.order.as_slice()[self.split..]
    }
}

/// An umbrella ordering of `g` if `g` is a proper interval graph.
pub fn umbrella_ordering(g: &Graph) -> Option<UmbrellaOrdering> {
    let mut parts = Vec::new();
    for comp in connected_components(g) {
        let classes = class_sequence(g, &comp)?;
        parts.push(classes.into_iter().flatten().collect::<Vec<_>>());
    }
    parts.sort_by_key(|p| p[0]);
    let order: Vec<usize> = parts.into_iter().flatten().collect();
    debug_assert!(matches!(verify_umbrella(g, &order), Ok(None)));
    Some(UmbrellaOrdering(order))
}

pub fn is_proper_interval(g: &Graph) -> bool {
    connected_components(g)
        .iter()
        .all(|c| class_sequence(g, c).is_some())
}

/// Twin classes of `G[comp]` in umbrella order, for a connected vertex set.
///
/// Classes are computed inside `G[comp]`, members are ascending, and the sequence
/// is oriented so that the first class holds the smaller minimum. Returns `None`
/// when `G[comp]` is not a proper interval graph.
pub(crate) fn class_sequence(g: &Graph, comp: &[usize]) -> Option<Vec<Vec<usize>>> {
    let (sub, map) = g.induced_subgraph(comp).expect("component of live vertices");
    let classes = true_twin_classes(&sub);
    let mut class_of = vec![0; sub.capacity()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let q = classes.len();
    let mut quotient = Graph::new(q);
    for (u, v) in sub.edges() {
        let (a, b) = (class_of[u], class_of[v]);
        if a != b {
            quotient.add_edge(a, b);
        }
    }

    let s1 = lex_bfs(&quotient, None);
    let s2 = lex_bfs(&quotient, Some(&s1));
    let s3 = lex_bfs(&quotient, Some(&s2));
    if !umbrella_holds(&quotient, &s3) {
        return None;
    }

    let mut seq: Vec<Vec<usize>> = s3
        .iter()
        .map(|&c| {
            let mut members: Vec<usize> = classes[c].iter().map(|&v| map[v]).collect();
            members.sort_unstable();
            members
        })
        .collect();
    if seq.len() > 1 && seq.last().unwrap()[0] < seq[0][0] {
        seq.reverse();
    }
    Some(seq)
}

/// LexBFS; with `prev`, ties go to the vertex appearing last in `prev`.
fn lex_bfs(g: &Graph, prev: Option<&[usize]>) -> Vec<usize> {
    let n = g.capacity();
    let rank: Vec<usize> = match prev {
        Some(p) => {
            let mut r = vec![0; n];
            for (i, &v) in p.iter().enumerate() {
                r[v] = i;
            }
            r
        }
        // without a previous sweep, smaller ids win ties
        None => (0..n).map(|v| n - v).collect(),
    };
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(rank[a].cmp(&rank[b])))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Umbrella check of `order` on the subgraph it induces.
pub(crate) fn umbrella_holds(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; g.capacity()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // forward neighbors of each vertex must be the block right after it,
    // and backward neighbors the block right before it
    for (i, &v) in order.iter().enumerate() {
        let mut fwd = 0;
        let mut bwd = 0;
        let mut far = i;
        let mut near = i;
        for u in g.neighbors(v) {
            let p = pos[u];
            if p == usize::MAX {
                continue;
            }
            if p > i {
                fwd += 1;
                far = far.max(p);
            } else {
                bwd += 1;
                near = near.min(p);
            }
        }
        if far - i != fwd || i - near != bwd {
            return false;
        }
    }
    true
}

/// Checks the umbrella property of `order`; on failure reports the
/// lexicographically first violating position triple as vertex ids.
pub fn verify_umbrella(g: &Graph, order: &[usize]) -> Result<Option<(usize, usize, usize)>> {
    check_permutation(g, order)?;
    if umbrella_holds(g, order) {
        return Ok(None);
    }
    let n = order.len();
    for i in 0..n {
        for l in i + 1..n {
            for j in l + 1..n {
                let (a, b, c) = (order[i], order[l], order[j]);
                if g.has_edge(a, c) && !(g.has_edge(a, b) && g.has_edge(b, c)) {
                    return Ok(Some((a, b, c)));
                }
            }
        }
    }
    unreachable!("fast check and triple scan disagree")
}

fn check_permutation(g: &Graph, order: &[usize]) -> Result<()> {
    let mut seen = g.empty_set();
    for &v in order {
        if !g.is_live(v) {
            return Err(Error::DeadVertex(v));
        }
        if seen.put(v) {
            return argument(format!("vertex {v} repeated in ordering"));
        }
    }
    if order.len() != g.vertex_count() {
        return argument("ordering does not cover every vertex");
    }
    Ok(())
}

/// Edges not nested inside the span of any other edge of the ordering.
pub fn extremal_edges(g: &Graph, order: &[usize]) -> Result<Vec<Edge>> {
    if verify_umbrella(g, order)?.is_some() {
        return argument("ordering is not an umbrella ordering");
    }
    let mut pos = vec![0; g.capacity()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = Vec::new();
    let mut reach_so_far: Option<usize> = None;
    for (i, &v) in order.iter().enumerate() {
        let far = g.neighbors(v).map(|u| pos[u]).filter(|&p| p > i).max();
        if let Some(far) = far {
            if reach_so_far.is_none_or(|r| far > r) {
                out.push((v, order[far]));
                reach_so_far = Some(far);
            }
        }
    }
    Ok(out)
}

/// A witness that `g` is two cliques linked by a join, if it is one.
pub fn is_biclique_chain(g: &Graph) -> Option<BicliqueChainWitness> {
    let co = g.complement();
    let mut color: Vec<Option<bool>> = vec![None; g.capacity()];
    for s in co.vertices() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for u in co.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return None,
                    _ => {}
                }
            }
        }
    }
    let mut first: Vec<usize> = g.vertices().filter(|&v| color[v] == Some(false)).collect();
    let mut second: Vec<usize> = g.vertices().filter(|&v| color[v] == Some(true)).collect();
    let second_set = g.set_of(second.iter().copied());
    let first_set = g.set_of(first.iter().copied());
    let seen_in = |v: usize, side: &fixedbitset::FixedBitSet| {
        g.neighbor_set(v).intersection(side).count()
    };
    first.sort_by_key(|&v| (seen_in(v, &second_set), v));
    second.sort_by_key(|&v| (std::cmp::Reverse(seen_in(v, &first_set)), v));
    if !crate::graph::is_join(g, &first, &second).expect("disjoint sides") {
        return None;
    }
    let split = first.len();
    first.extend(second);
    debug_assert!(matches!(verify_umbrella(g, &first), Ok(None)));
    Some(BicliqueChainWitness {
        order: UmbrellaOrdering(first),
        split,
    })
}
