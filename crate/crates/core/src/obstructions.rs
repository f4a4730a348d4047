//! Forbidden induced subgraphs of the two target classes, and sunflowers of
//! obstructions that force a single non-edge.

use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::graph::{and, edge, minus, Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    Claw,
    Hole,
    Net,
    ThreeSun,
    C4,
    C5,
    ThreeK1,
}

/// An induced copy of a forbidden pattern.
///
/// Vertex order carries the roles: a claw lists its center first, cycles are
/// listed in cycle order, a net lists its triangle then the pendants of each
/// triangle vertex, a 3-sun lists its triangle `x, y, z` then the vertices
/// attached to `xy`, `yz` and `xz`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<usize>,
}

impl Obstruction {
    fn new(kind: ObstructionKind, vertices: Vec<usize>) -> Self {
        Obstruction { kind, vertices }
    }

    /// Edges of the pattern, as positions into `vertices`.
    pub fn pattern_edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        match self.kind {
            ObstructionKind::Claw => vec![(0, 1), (0, 2), (0, 3)],
            ObstructionKind::Hole | ObstructionKind::C4 | ObstructionKind::C5 => {
                (0..n).map(|i| (i, (i + 1) % n)).collect()
            }
            ObstructionKind::Net => vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
            ObstructionKind::ThreeSun => vec![
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (1, 3),
                (1, 4),
                (2, 4),
                (0, 5),
                (2, 5),
            ],
            ObstructionKind::ThreeK1 => Vec::new(),
        }
    }

    /// Vertex pairs of the copy that are non-edges of `g`.
    pub fn missing_pairs(&self, g: &Graph) -> Vec<Edge> {
        let vs = &self.vertices;
        let mut out = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !g.has_edge(vs[i], vs[j]) {
                    out.push(edge(vs[i], vs[j]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the listed vertices induce exactly the pattern in `g`.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let expected_len = match self.kind {
            ObstructionKind::Claw => 4,
            ObstructionKind::C4 => 4,
            ObstructionKind::C5 => 5,
            ObstructionKind::Net | ObstructionKind::ThreeSun => 6,
            ObstructionKind::ThreeK1 => 3,
            ObstructionKind::Hole => vs.len().max(4),
        };
        if vs.len() != expected_len || vs.iter().any(|&v| !g.is_live(v)) {
            return false;
        }
        let mut distinct = vs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != vs.len() {
            return false;
        }
        let pattern = self.pattern_edges();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let want = pattern.contains(&(i, j)) || pattern.contains(&(j, i));
                if g.has_edge(vs[i], vs[j]) != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Every claw, once per (center, leaf set), leaves ascending.
pub fn enumerate_claws(g: &Graph) -> impl Iterator<Item = Obstruction> + '_ {
    g.vertices().flat_map(move |c| {
        let nb: Vec<usize> = g.neighbors(c).collect();
        let mut out = Vec::new();
        for (i, &a) in nb.iter().enumerate() {
            let rest = minus(g.neighbor_set(c), g.neighbor_set(a));
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if !rest.contains(b) {
                    continue;
                }
                let third = minus(&rest, g.neighbor_set(b));
                for &d in &nb[j + 1..] {
                    if third.contains(d) {
                        out.push(Obstruction::new(ObstructionKind::Claw, vec![c, a, b, d]));
                    }
                }
            }
        }
        out
    })
}

/// Every induced 4-cycle once, listed from its smallest vertex towards the
/// smaller of its two neighbors on the cycle.
pub fn enumerate_c4s(g: &Graph) -> impl Iterator<Item = Obstruction> + '_ {
    g.vertices().flat_map(move |u| {
        let mut out = Vec::new();
        for v in g.vertices().filter(|&v| v > u && !g.has_edge(u, v)) {
            let common = and(g.neighbor_set(u), g.neighbor_set(v));
            let ws: Vec<usize> = common.ones().filter(|&w| w > u).collect();
            for (i, &a) in ws.iter().enumerate() {
                for &b in &ws[i + 1..] {
                    if !g.has_edge(a, b) {
                        out.push(Obstruction::new(ObstructionKind::C4, vec![u, a, v, b]));
                    }
                }
            }
        }
        out
    })
}

/// Every independent triple once, ascending.
pub fn enumerate_3k1s(g: &Graph) -> impl Iterator<Item = Obstruction> + '_ {
    g.vertices().flat_map(move |a| {
        let mut out = Vec::new();
        let non_a = minus(g.live_set(), &g.closed_neighbor_set(a));
        for b in non_a.ones().filter(|&b| b > a) {
            let non_ab = minus(&non_a, &g.closed_neighbor_set(b));
            for c in non_ab.ones().filter(|&c| c > b) {
                out.push(Obstruction::new(ObstructionKind::ThreeK1, vec![a, b, c]));
            }
        }
        out
    })
}

/// Every induced 5-cycle once, from its smallest vertex towards the smaller
/// of its two cycle neighbors.
pub fn enumerate_c5s(g: &Graph) -> impl Iterator<Item = Obstruction> + '_ {
    g.vertices().flat_map(move |a| {
        let mut out = Vec::new();
        let na = g.closed_neighbor_set(a);
        let nb_a: Vec<usize> = g.neighbors(a).filter(|&x| x > a).collect();
        for (i, &b) in nb_a.iter().enumerate() {
            for &e in &nb_a[i + 1..] {
                if g.has_edge(b, e) {
                    continue;
                }
                let ne = g.closed_neighbor_set(e);
                let nbb = g.closed_neighbor_set(b);
                for c in g.neighbors(b).filter(|&c| c > a && !na.contains(c) && !ne.contains(c)) {
                    for d in g.neighbors(c) {
                        if d > a && ne.contains(d) && d != e && !na.contains(d) && !nbb.contains(d)
                        {
                            out.push(Obstruction::new(ObstructionKind::C5, vec![a, b, c, d, e]));
                        }
                    }
                }
            }
        }
        out
    })
}

/// Whether `g` is chordal, by maximum cardinality search.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.capacity();
    let mut weight = vec![0usize; n];
    let mut numbered = g.empty_set();
    let mut order = Vec::with_capacity(g.vertex_count());
    for _ in 0..g.vertex_count() {
        let v = g
            .vertices()
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered.insert(v);
        order.push(v);
        for u in g.neighbors(v) {
            if !numbered.contains(u) {
                weight[u] += 1;
            }
        }
    }
    // the reverse of an MCS order is a perfect elimination order iff chordal
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order.iter() {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] < pos[v]).collect();
        if let Some(&p) = earlier.iter().max_by_key(|&&u| pos[u]) {
            let np = g.closed_neighbor_set(p);
            if earlier.iter().any(|&u| !np.contains(u)) {
                return false;
            }
        }
    }
    true
}

/// Some induced cycle of length at least 4.
pub fn find_hole(g: &Graph) -> Option<Obstruction> {
    if is_chordal(g) {
        return None;
    }
    for v in g.vertices() {
        let nb: Vec<usize> = g.neighbors(v).collect();
        let closed = g.closed_neighbor_set(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut allowed = minus(g.live_set(), &closed);
                allowed.insert(a);
                allowed.insert(b);
                if let Some(path) = shortest_path(g, a, b, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(Obstruction::new(ObstructionKind::Hole, cycle));
                }
            }
        }
    }
    unreachable!("non-chordal graph without a hole")
}

fn shortest_path(g: &Graph, s: usize, t: usize, allowed: &FixedBitSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.capacity()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            let mut path = vec![t];
            let mut x = t;
            while x != s {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for u in g.neighbors(v) {
            if allowed.contains(u) && parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    None
}

fn triangles(g: &Graph) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    g.vertices().flat_map(move |x| {
        let mut out = Vec::new();
        for y in g.neighbors(x).filter(|&y| y > x) {
            for z in g.neighbors(y).filter(|&z| z > y) {
                if g.has_edge(x, z) {
                    out.push((x, y, z));
                }
            }
        }
        out
    })
}

fn pick_independent(g: &Graph, pools: [&FixedBitSet; 3]) -> Option<[usize; 3]> {
    for a in pools[0].ones() {
        for b in pools[1].ones().filter(|&b| !g.has_edge(a, b)) {
            for c in pools[2].ones() {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// An induced net: a triangle with a private pendant on each corner.
pub fn find_net(g: &Graph) -> Option<Obstruction> {
    for (x, y, z) in triangles(g) {
        let (nx, ny, nz) = (
            g.closed_neighbor_set(x),
            g.closed_neighbor_set(y),
            g.closed_neighbor_set(z),
        );
        let only = |a: &FixedBitSet, b: &FixedBitSet, c: &FixedBitSet| {
            let mut s = minus(a, b);
            s.difference_with(c);
            s
        };
        let px = only(&nx, &ny, &nz);
        let py = only(&ny, &nx, &nz);
        let pz = only(&nz, &nx, &ny);
        if let Some([a, b, c]) = pick_independent(g, [&px, &py, &pz]) {
            return Some(Obstruction::new(ObstructionKind::Net, vec![x, y, z, a, b, c]));
        }
    }
    None
}

/// An induced 3-sun: a triangle with a private common neighbor on each side.
pub fn find_3sun(g: &Graph) -> Option<Obstruction> {
    for (x, y, z) in triangles(g) {
        let (nx, ny, nz) = (
            g.closed_neighbor_set(x),
            g.closed_neighbor_set(y),
            g.closed_neighbor_set(z),
        );
        let side = |a: &FixedBitSet, b: &FixedBitSet, c: &FixedBitSet| minus(&and(a, b), c);
        let sxy = side(&nx, &ny, &nz);
        let syz = side(&ny, &nz, &nx);
        let sxz = side(&nx, &nz, &ny);
        if let Some([a, b, c]) = pick_independent(g, [&sxy, &syz, &sxz]) {
            return Some(Obstruction::new(ObstructionKind::ThreeSun, vec![x, y, z, a, b, c]));
        }
    }
    None
}

/// `None` iff `g` is a proper interval graph; otherwise a claw, hole, net or
/// 3-sun, tried in that order.
pub fn pic_certificate(g: &Graph) -> Option<Obstruction> {
    enumerate_claws(g)
        .next()
        .or_else(|| find_hole(g))
        .or_else(|| find_net(g))
        .or_else(|| find_3sun(g))
}

/// `None` iff `g` is a bi-clique chain graph; otherwise a 3K1, C4 or C5.
pub fn bcc_certificate(g: &Graph) -> Option<Obstruction> {
    enumerate_3k1s(g)
        .next()
        .or_else(|| enumerate_c4s(g).next())
        .or_else(|| enumerate_c5s(g).next())
}

/// Vertices lying on some claw.
pub fn claw_vertices(g: &Graph) -> FixedBitSet {
    let mut s = g.empty_set();
    for c in enumerate_claws(g) {
        s.extend(c.vertices);
    }
    s
}

/// Vertices lying on some induced 4-cycle.
pub fn c4_vertices(g: &Graph) -> FixedBitSet {
    let mut s = g.empty_set();
    for c in enumerate_c4s(g) {
        s.extend(c.vertices);
    }
    s
}

/// Vertices lying in some independent triple.
pub fn three_k1_vertices(g: &Graph) -> FixedBitSet {
    let mut s = g.empty_set();
    for t in enumerate_3k1s(g) {
        s.extend(t.vertices);
    }
    s
}

/// More than `k` obstructions all needing the non-edge `pair` unless each
/// gets its own private edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sunflower {
    pub pair: Edge,
    pub petals: Vec<Obstruction>,
    pub multiplicity: usize,
}

fn best(groups: BTreeMap<Edge, Vec<Obstruction>>, k: usize) -> Option<Sunflower> {
    let mut chosen: Option<(Edge, Vec<Obstruction>)> = None;
    for (pair, petals) in groups {
        if chosen.as_ref().is_none_or(|(_, p)| petals.len() > p.len()) {
            chosen = Some((pair, petals));
        }
    }
    let (pair, petals) = chosen?;
    (petals.len() > k).then_some(Sunflower {
        pair,
        multiplicity: petals.len(),
        petals,
    })
}

/// A non-edge shared as two leaves by claws with more than `k` distinct
/// third leaves.
pub fn find_claw_sunflower(g: &Graph, k: usize) -> Option<Sunflower> {
    let mut by_pair: BTreeMap<Edge, BTreeMap<usize, Obstruction>> = BTreeMap::new();
    for claw in enumerate_claws(g) {
        let l = &claw.vertices[1..];
        for (i, j, t) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            by_pair
                .entry(edge(l[i], l[j]))
                .or_default()
                .entry(l[t])
                .or_insert_with(|| claw.clone());
        }
    }
    let groups = by_pair
        .into_iter()
        .map(|(p, m)| (p, m.into_values().collect()))
        .collect();
    let sf = best(groups, k)?;
    assert!(!g.has_edge(sf.pair.0, sf.pair.1));
    Some(sf)
}

/// A non-edge that is a diagonal of more than `k` induced 4-cycles.
pub fn find_c4_sunflower(g: &Graph, k: usize) -> Option<Sunflower> {
    let mut groups: BTreeMap<Edge, Vec<Obstruction>> = BTreeMap::new();
    for (u, v) in g.non_edges() {
        let common = and(g.neighbor_set(u), g.neighbor_set(v));
        let ws: Vec<usize> = common.ones().collect();
        let mut petals = Vec::new();
        for (i, &a) in ws.iter().enumerate() {
            for &b in &ws[i + 1..] {
                if !g.has_edge(a, b) {
                    petals.push(Obstruction::new(ObstructionKind::C4, vec![u, a, v, b]));
                }
            }
        }
        if !petals.is_empty() {
            groups.insert((u, v), petals);
        }
    }
    best(groups, k)
}

/// A non-edge completed to an independent triple by more than `k` vertices.
pub fn find_3k1_sunflower(g: &Graph, k: usize) -> Option<Sunflower> {
    let mut groups: BTreeMap<Edge, Vec<Obstruction>> = BTreeMap::new();
    for (u, v) in g.non_edges() {
        let mut far = minus(g.live_set(), &g.closed_neighbor_set(u));
        far.difference_with(&g.closed_neighbor_set(v));
        let petals: Vec<Obstruction> = far
            .ones()
            .map(|w| {
                let mut t = vec![u, v, w];
                t.sort_unstable();
                Obstruction::new(ObstructionKind::ThreeK1, t)
            })
            .collect();
        if !petals.is_empty() {
            groups.insert((u, v), petals);
        }
    }
    best(groups, k)
}
