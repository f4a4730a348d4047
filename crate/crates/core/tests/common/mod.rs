//! Brute-force oracles and instance families shared by the integration tests.
//! Nothing in this file calls the library's recognition, obstruction, branch
//! or solver code.
#![allow(dead_code)]

pub mod checks;

use std::collections::HashSet;

use pic_kernel::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency rows of a small graph, bit `j` of row `i` set for edge ij.
pub type Rows = Vec<u16>;

pub fn rows(g: &Graph) -> Rows {
    let (c, _) = g.compact();
    let mut r = vec![0u16; c.capacity()];
    for (u, v) in c.edges() {
        r[u] |= 1 << v;
        r[v] |= 1 << u;
    }
    r
}

pub fn from_rows(r: &Rows) -> Graph {
    let n = r.len();
    let mut g = Graph::new(n);
    for (u, row) in r.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn edge_code(r: &Rows, perm: &[usize]) -> u64 {
    let n = r.len();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if r[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Smallest edge code over relabelings that list vertices by non-increasing
/// degree.
fn canonical(r: &Rows) -> u64 {
    let n = r.len();
    let deg: Vec<u32> = r.iter().map(|x| x.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(gr) if deg[gr[0]] == deg[v] => gr.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    fn rec(groups: &[Vec<usize>], gi: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, r: &Rows, best: &mut u64) {
        if gi == groups.len() {
            *best = (*best).min(edge_code(r, perm));
            return;
        }
        let group = &groups[gi];
        let placed = group.iter().filter(|&&v| used[v]).count();
        if placed == group.len() {
            rec(groups, gi + 1, used, perm, r, best);
            return;
        }
        for &v in group {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                rec(groups, gi, used, perm, r, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    rec(&groups, 0, &mut used, &mut perm, r, &mut best);
    best
}

/// One graph per isomorphism class on `n` vertices.
pub fn nonisomorphic(n: usize) -> Vec<Graph> {
    let mut level: Vec<Rows> = vec![vec![]];
    for k in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for r in &level {
            for mask in 0u16..(1 << k) {
                let mut nr = r.clone();
                for (v, row) in nr.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                nr.push(mask);
                if seen.insert(canonical(&nr)) {
                    next.push(nr);
                }
            }
        }
        level = next;
    }
    level.iter().map(from_rows).collect()
}

/// Every labeled graph on `n` vertices.
pub fn labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// All graphs used by exhaustive checks: labeled up to 6 vertices and one
/// per isomorphism class on 7.
pub fn small_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=6).flat_map(labeled).collect();
    out.extend(nonisomorphic(7));
    out
}

pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn adj(r: &Rows, u: usize, v: usize) -> bool {
    r[u] >> v & 1 == 1
}

pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Whether `s` (in some order) induces a copy of the pattern with edge list
/// `pattern` on positions.
fn induces(r: &Rows, s: &[usize], pattern: &[(usize, usize)]) -> bool {
    let k = s.len();
    permutations(s).iter().any(|p| {
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let want = pattern.contains(&(i, j)) || pattern.contains(&(j, i));
                adj(r, p[i], p[j]) == want
            })
        })
    })
}

const CLAW: &[(usize, usize)] = &[(0, 1), (0, 2), (0, 3)];
const NET: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)];
const SUN: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)];
const C4: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (0, 3)];
const C5: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];

pub fn has_hole(r: &Rows) -> bool {
    let n = r.len();
    (4..=n).any(|k| {
        subsets_of_size(n, k).iter().any(|s| {
            // an induced cycle is a connected 2-regular induced subgraph
            let two_regular = s
                .iter()
                .all(|&u| s.iter().filter(|&&v| v != u && adj(r, u, v)).count() == 2);
            two_regular && connected_on(r, s)
        })
    })
}

fn connected_on(r: &Rows, s: &[usize]) -> bool {
    let mut seen = vec![s[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in s {
            if !seen.contains(&v) && adj(r, u, v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == s.len()
}

/// A proper interval graph has no hole, claw, net or 3-sun.
pub fn brute_is_pic(g: &Graph) -> bool {
    let r = rows(g);
    let n = r.len();
    let any = |k: usize, pat: &[(usize, usize)]| subsets_of_size(n, k).iter().any(|s| induces(&r, s, pat));
    !(has_hole(&r) || any(4, CLAW) || (n >= 6 && (any(6, NET) || any(6, SUN))))
}

/// A bi-clique chain graph has no 3K1, C4 or C5.
pub fn brute_is_bcc(g: &Graph) -> bool {
    let r = rows(g);
    let n = r.len();
    let any = |k: usize, pat: &[(usize, usize)]| subsets_of_size(n, k).iter().any(|s| induces(&r, s, pat));
    !(any(3, &[]) || any(4, C4) || any(5, C5))
}

// Branch definitions, checked literally on explicit orderings of a compact
// graph.

fn umbrella(r: &Rows, o: &[usize]) -> bool {
    let m = o.len();
    for i in 0..m {
        for j in i + 1..m {
            if adj(r, o[i], o[j]) {
                for l in i + 1..j {
                    if !(adj(r, o[i], o[l]) && adj(r, o[l], o[j])) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn nb_positions(r: &Rows, w: usize, o: &[usize]) -> Vec<usize> {
    (0..o.len()).filter(|&i| adj(r, w, o[i])).collect()
}

fn outside_of(r: &Rows, o: &[usize]) -> Vec<usize> {
    (0..r.len()).filter(|v| !o.contains(v)).collect()
}

/// Definition of a 1-branch on the ordering `o`.
pub fn literal_one_branch(r: &Rows, o: &[usize]) -> bool {
    let m = o.len();
    if !umbrella(r, o) || !connected_on(r, o) {
        return false;
    }
    let l = (0..m).find(|&i| adj(r, o[m - 1], o[i])).unwrap_or(m - 1);
    // vertices with a neighbor in B must be in R, the rest in C
    outside_of(r, o).into_iter().all(|w| {
        let p = nb_positions(r, w, o);
        if p.is_empty() {
            return true;
        }
        let no_early = p.iter().all(|&i| i >= l);
        let nested = (l..m - 1).all(|i| !adj(r, w, o[i]) || adj(r, w, o[i + 1]));
        no_early && nested
    })
}

/// Definition of a 2-branch on the ordering `o`. Vertices adjacent to all of
/// `B` are allowed when the body is empty.
pub fn literal_two_branch(r: &Rows, o: &[usize]) -> bool {
    let m = o.len();
    if !umbrella(r, o) || !connected_on(r, o) {
        return false;
    }
    let l = (0..m).find(|&i| adj(r, o[m - 1], o[i])).unwrap_or(m - 1);
    let lp = (0..m).rev().find(|&i| adj(r, o[0], o[i])).unwrap_or(0);
    let body_empty = lp + 1 >= l;
    outside_of(r, o).into_iter().all(|w| {
        let p = nb_positions(r, w, o);
        if p.is_empty() || (body_empty && p.len() == m) {
            return true;
        }
        let in_r = p.iter().all(|&i| i >= l) && (l..m - 1).all(|i| !adj(r, w, o[i]) || adj(r, w, o[i + 1]));
        let in_l = p.iter().all(|&i| i <= lp) && (0..lp).all(|i| !adj(r, w, o[i + 1]) || adj(r, w, o[i]));
        in_r || in_l
    })
}

pub fn body_of_two_branch(r: &Rows, o: &[usize]) -> Vec<usize> {
    let m = o.len();
    let l = (0..m).find(|&i| adj(r, o[m - 1], o[i])).unwrap_or(m - 1);
    let lp = (0..m).rev().find(|&i| adj(r, o[0], o[i])).unwrap_or(0);
    if lp + 1 < l {
        o[lp + 1..l].to_vec()
    } else {
        vec![]
    }
}

pub fn is_clique_on(r: &Rows, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| u == v || adj(r, u, v)))
}

/// Orderings of `s` in which consecutive vertices are adjacent, optionally
/// starting at `first` and ending at `last`.
pub fn walk_orders(r: &Rows, s: &[usize], first: Option<usize>, last: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; r.len()];
    fn rec(
        r: &Rows,
        s: &[usize],
        last: Option<usize>,
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == s.len() {
            if last.is_none_or(|l| *cur.last().unwrap() == l) {
                out.push(cur.clone());
            }
            return;
        }
        for &v in s {
            if used[v] || (!cur.is_empty() && !adj(r, *cur.last().unwrap(), v)) {
                continue;
            }
            if cur.len() + 1 < s.len() && last == Some(v) {
                continue;
            }
            used[v] = true;
            cur.push(v);
            if umbrella(r, cur) {
                rec(r, s, last, cur, used, out);
            }
            cur.pop();
            used[v] = false;
        }
    }
    match first {
        Some(f) => {
            used[f] = true;
            cur.push(f);
            rec(r, s, last, &mut cur, &mut used, &mut out);
        }
        None => rec(r, s, last, &mut cur, &mut used, &mut out),
    }
    out
}

/// Vertex subsets of `0..n` containing every vertex of `must`, as sorted lists.
pub fn supersets(n: usize, must: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|mask| must.iter().all(|&v| mask >> v & 1 == 1))
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect()
}

/// Keeps the larger set, then the lexicographically smaller one.
pub fn prefer(best: &mut Option<Vec<usize>>, cand: Vec<usize>) {
    let better = match best {
        None => true,
        Some(b) => cand.len() > b.len() || (cand.len() == b.len() && cand < *b),
    };
    if better {
        *best = Some(cand);
    }
}

pub fn brute_max_one_branch(r: &Rows, x: usize) -> Vec<usize> {
    let mut best = None;
    for s in supersets(r.len(), &[x]) {
        if walk_orders(r, &s, Some(x), None).iter().any(|o| literal_one_branch(r, o)) {
            prefer(&mut best, s);
        }
    }
    best.unwrap()
}

pub fn brute_max_kjoin(r: &Rows, x: usize, y: usize) -> Vec<usize> {
    let mut best = None;
    for s in supersets(r.len(), &[x, y]) {
        if !is_clique_on(r, &s) {
            continue;
        }
        let ok = permutations(&s)
            .iter()
            .filter(|o| o[0] == x && *o.last().unwrap() == y)
            .any(|o| literal_two_branch(r, o));
        if ok {
            prefer(&mut best, s);
        }
    }
    best.unwrap()
}

/// Maximum 2-branch containing `must` with `x` in its body.
pub fn brute_max_two_branch(r: &Rows, x: usize, must: &[usize]) -> Option<Vec<usize>> {
    let mut best = None;
    let mut need = must.to_vec();
    need.push(x);
    for s in supersets(r.len(), &need) {
        let ok = walk_orders(r, &s, None, None)
            .iter()
            .any(|o| literal_two_branch(r, o) && body_of_two_branch(r, o).contains(&x));
        if ok {
            prefer(&mut best, s);
        }
    }
    best
}

const TWO_K2: &[(usize, usize)] = &[(0, 1), (2, 3)];
const K3: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2)];

/// A bipartite chain graph has no 2K2, C5 or triangle.
pub fn brute_is_bipartite_chain(g: &Graph) -> bool {
    let r = rows(g);
    let n = r.len();
    let any = |k: usize, pat: &[(usize, usize)]| subsets_of_size(n, k).iter().any(|s| induces(&r, s, pat));
    !(any(3, K3) || any(4, TWO_K2) || any(5, C5))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Fewest pairs to toggle (all non-edges when `add`, all edges otherwise) so
/// that `member` holds; `None` beyond `cap`.
pub fn brute_opt(g: &Graph, add: bool, cap: usize, member: impl Fn(&Graph) -> bool) -> Option<usize> {
    let (c, _) = g.compact();
    let cand: Vec<(usize, usize)> = pairs(c.capacity())
        .into_iter()
        .filter(|&(u, v)| c.has_edge(u, v) != add)
        .collect();
    (0..=cap.min(cand.len())).find(|&s| {
        subsets_of_size(cand.len(), s).iter().any(|idx| {
            let mut h = c.clone();
            for &i in idx {
                let (u, v) = cand[i];
                if add {
                    h.add_edge(u, v);
                } else {
                    h.remove_edge(u, v);
                }
            }
            member(&h)
        })
    })
}

/// A small random core with long paths hanging off it or looping back.
pub fn branchy(seed: u64) -> Graph {
    let mut rng = rng(seed);
    let core = rng.gen_range(3..7);
    let p = rng.gen_range(0.3..0.9);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (u, v) in pairs(core) {
        if rng.gen_bool(p) {
            edges.push((u, v));
        }
    }
    let mut n = core;
    for _ in 0..rng.gen_range(1..4) {
        let len = rng.gen_range(3..16);
        let mut prev = rng.gen_range(0..core);
        for _ in 0..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        if rng.gen_bool(0.6) {
            edges.push((prev, rng.gen_range(0..core)));
        }
    }
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    g
}

/// Two small random cores joined by a long path.
pub fn dumbbell(seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 0;
    let mut ends = Vec::new();
    for _ in 0..2 {
        let core = rng.gen_range(4..7);
        let p = rng.gen_range(0.2..0.7);
        for (u, v) in pairs(core) {
            if rng.gen_bool(p) {
                edges.push((u + n, v + n));
            }
        }
        ends.push(n + rng.gen_range(0..core));
        n += core;
    }
    let mut prev = ends[0];
    for _ in 0..rng.gen_range(4..22) {
        edges.push((prev, n));
        prev = n;
        n += 1;
    }
    edges.push((prev, ends[1]));
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    g
}
