//! Exact solvers: an exhaustive oracle over compact bitmask rows, and a
//! search tree branching on obstructions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{argument, Error, Result};
use crate::graph::{edge, Edge, EdgeSet, Graph};
use crate::obstructions::{bcc_certificate, pic_certificate, ObstructionKind};
use crate::recognition::{is_biclique_chain, umbrella_ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    Pic,
    Bcc,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Pic => "pic",
            Problem::Bcc => "bcc",
        })
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pic" => Ok(Problem::Pic),
            "bcc" => Ok(Problem::Bcc),
            _ => argument(format!("unknown problem {s:?}")),
        }
    }
}

/// Whether `g` belongs to the target class of `problem`.
pub fn is_member(g: &Graph, problem: Problem) -> bool {
    match problem {
        Problem::Pic => umbrella_ordering(g).is_some(),
        Problem::Bcc => is_biclique_chain(g).is_some(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub feasible: bool,
    pub completion: EdgeSet,
    pub optimum: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: usize,
    pub hole_prunes: usize,
    pub chord_branches: usize,
}

// ---------------------------------------------------------------------------
// Oracle

struct Rows {
    adj: Vec<u64>,
    all: u64,
}

impl Rows {
    fn new(g: &Graph) -> Rows {
        let (c, _) = g.compact();
        let n = c.vertex_count();
        assert!(n <= 64, "oracle handles at most 64 vertices");
        let mut adj = vec![0u64; n];
        for (u, v) in c.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
        Rows { adj, all }
    }

    fn toggle(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    fn member(&self, problem: Problem) -> bool {
        match problem {
            Problem::Pic => self.chordal() && self.claw_free() && self.no_net_or_sun(),
            Problem::Bcc => self.co_bipartite_chain(),
        }
    }

    fn chordal(&self) -> bool {
        let mut left = self.all;
        while left != 0 {
            let mut found = None;
            let mut it = left;
            while it != 0 {
                let v = it.trailing_zeros() as usize;
                it &= it - 1;
                if self.is_clique(self.adj[v] & left) {
                    found = Some(v);
                    break;
                }
            }
            match found {
                Some(v) => left &= !(1 << v),
                None => return false,
            }
        }
        true
    }

    fn is_clique(&self, s: u64) -> bool {
        let mut it = s;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            if s & !self.adj[v] & !(1 << v) != 0 {
                return false;
            }
        }
        true
    }

    fn claw_free(&self) -> bool {
        self.adj.iter().all(|&nb| !self.independent_triple(nb))
    }

    fn independent_triple(&self, s: u64) -> bool {
        let mut ia = s;
        while ia != 0 {
            let a = ia.trailing_zeros() as usize;
            ia &= ia - 1;
            let mut ib = ia & !self.adj[a];
            while ib != 0 {
                let b = ib.trailing_zeros() as usize;
                ib &= ib - 1;
                if ib & !self.adj[b] != 0 {
                    return true;
                }
            }
        }
        false
    }

    fn no_net_or_sun(&self) -> bool {
        let n = self.adj.len();
        for a in 0..n {
            for b in a + 1..n {
                if self.adj[a] >> b & 1 == 0 {
                    continue;
                }
                let mut ic = self.adj[a] & self.adj[b] & !((2u64 << b) - 1);
                while ic != 0 {
                    let c = ic.trailing_zeros() as usize;
                    ic &= ic - 1;
                    let (na, nb, nc) = (self.adj[a], self.adj[b], self.adj[c]);
                    let tri = 1 << a | 1 << b | 1 << c;
                    let pend = [na & !nb & !nc & !tri, nb & !na & !nc & !tri, nc & !na & !nb & !tri];
                    let side = [na & nb & !nc & !tri, nb & nc & !na & !tri, na & nc & !nb & !tri];
                    if self.pick_three(pend) || self.pick_three(side) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Pairwise non-adjacent representatives of three pools.
    fn pick_three(&self, p: [u64; 3]) -> bool {
        let mut i0 = p[0];
        while i0 != 0 {
            let x = i0.trailing_zeros() as usize;
            i0 &= i0 - 1;
            let mut i1 = p[1] & !self.adj[x] & !(1 << x);
            while i1 != 0 {
                let y = i1.trailing_zeros() as usize;
                i1 &= i1 - 1;
                if p[2] & !self.adj[x] & !self.adj[y] & !(1 << x | 1 << y) != 0 {
                    return true;
                }
            }
        }
        false
    }

    /// The complement is bipartite and has no induced 2K2.
    fn co_bipartite_chain(&self) -> bool {
        let n = self.adj.len();
        let co: Vec<u64> = (0..n).map(|v| !self.adj[v] & self.all & !(1 << v)).collect();
        let mut side = vec![None::<bool>; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let mut it = co[v];
                while it != 0 {
                    let w = it.trailing_zeros() as usize;
                    it &= it - 1;
                    match side[w] {
                        None => {
                            side[w] = Some(!side[v].unwrap());
                            stack.push(w);
                        }
                        Some(c) if c == side[v].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if co[a] >> b & 1 == 0 {
                    continue;
                }
                for c in a + 1..n {
                    if c == b || co[a] >> c & 1 == 1 || co[b] >> c & 1 == 1 {
                        continue;
                    }
                    if co[c] & !co[a] & !co[b] & !(1 << a | 1 << b | 1 << c) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn compact_non_edges(rows: &Rows) -> Vec<(usize, usize)> {
    let n = rows.adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rows.adj[u] >> v & 1 == 0 {
                out.push((u, v));
            }
        }
    }
    out
}

fn combos(rows: &mut Rows, pairs: &[(usize, usize)], start: usize, left: usize, problem: Problem) -> bool {
    if left == 0 {
        return rows.member(problem);
    }
    if pairs.len() < start + left {
        return false;
    }
    for i in start..=pairs.len() - left {
        let (u, v) = pairs[i];
        rows.toggle(u, v);
        let hit = combos(rows, pairs, i + 1, left - 1, problem);
        rows.toggle(u, v);
        if hit {
            return true;
        }
    }
    false
}

/// Smallest number of added edges putting `g` in the target class, trying
/// every non-edge subset of size `0..=cap` in turn; `None` when it exceeds
/// `cap`. Exponential: intended for graphs of about a dozen vertices.
pub fn oracle_opt(g: &Graph, problem: Problem, cap: usize) -> Option<usize> {
    let mut rows = Rows::new(g);
    let pairs = compact_non_edges(&rows);
    (0..=cap.min(pairs.len())).find(|&s| combos(&mut rows, &pairs, 0, s, problem))
}

/// All minimum completions of size at most `cap`, in original ids.
pub fn oracle_optimal_completions(g: &Graph, problem: Problem, cap: usize) -> Vec<EdgeSet> {
    let (_, ids) = g.compact();
    let mut rows = Rows::new(g);
    let pairs = compact_non_edges(&rows);
    for s in 0..=cap.min(pairs.len()) {
        let mut found = Vec::new();
        collect(&mut rows, &pairs, 0, s, problem, &mut Vec::new(), &mut found);
        if !found.is_empty() {
            return found
                .into_iter()
                .map(|f| f.iter().map(|&(u, v)| edge(ids[u], ids[v])).collect())
                .collect();
        }
    }
    Vec::new()
}

fn collect(
    rows: &mut Rows,
    pairs: &[(usize, usize)],
    start: usize,
    left: usize,
    problem: Problem,
    chosen: &mut Vec<(usize, usize)>,
    found: &mut Vec<Vec<(usize, usize)>>,
) {
    if left == 0 {
        if rows.member(problem) {
            found.push(chosen.clone());
        }
        return;
    }
    for i in start..pairs.len() {
        let (u, v) = pairs[i];
        rows.toggle(u, v);
        chosen.push((u, v));
        collect(rows, pairs, i + 1, left - 1, problem, chosen, found);
        chosen.pop();
        rows.toggle(u, v);
    }
}

// ---------------------------------------------------------------------------
// Search tree

struct Search {
    problem: Problem,
    stats: SearchStats,
    added: Vec<Edge>,
    banned: BTreeSet<Edge>,
}

impl Search {
    fn run(&mut self, g: &mut Graph, k: usize) -> bool {
        self.stats.nodes += 1;
        let ob = match self.problem {
            Problem::Pic => pic_certificate(g),
            Problem::Bcc => bcc_certificate(g),
        };
        let Some(ob) = ob else {
            return true;
        };
        let hole = ob.kind == ObstructionKind::Hole;
        if hole && ob.vertices.len() - 3 > k {
            self.stats.hole_prunes += 1;
            return false;
        }
        if k == 0 {
            return false;
        }
        let pairs: Vec<Edge> = ob
            .missing_pairs(g)
            .into_iter()
            .filter(|p| !self.banned.contains(p))
            .collect();
        let mut tried = Vec::new();
        let mut ok = false;
        for p in pairs {
            if hole {
                self.stats.chord_branches += 1;
            }
            g.add_edge(p.0, p.1);
            self.added.push(p);
            if self.run(g, k - 1) {
                ok = true;
                break;
            }
            self.added.pop();
            g.remove_edge(p.0, p.1);
            // Later siblings never add a pair an earlier sibling already tried.
            self.banned.insert(p);
            tried.push(p);
        }
        for p in tried {
            self.banned.remove(&p);
        }
        ok
    }
}

/// Decision search for a completion with at most `k` edges, with counters.
pub fn branch_solve_with_stats(g: &Graph, problem: Problem, k: usize) -> (Solution, SearchStats) {
    let mut work = g.clone();
    let mut s = Search {
        problem,
        stats: SearchStats::default(),
        added: Vec::new(),
        banned: BTreeSet::new(),
    };
    let feasible = s.run(&mut work, k);
    let completion = if feasible { s.added.iter().copied().collect() } else { EdgeSet::new() };
    (
        Solution {
            feasible,
            completion,
            optimum: None,
        },
        s.stats,
    )
}

/// Decision search for a completion with at most `k` edges.
pub fn branch_solve(g: &Graph, problem: Problem, k: usize) -> Solution {
    branch_solve_with_stats(g, problem, k).0
}

/// Minimum completion, raising the budget from 0 up to `max_k`.
pub fn optimize(g: &Graph, problem: Problem, max_k: usize) -> Solution {
    for k in 0..=max_k {
        let mut s = branch_solve(g, problem, k);
        if s.feasible {
            s.optimum = Some(s.completion.len());
            return s;
        }
    }
    Solution::default()
}

/// Whether `g + f` lies in the target class.
pub fn verify_solution(g: &Graph, problem: Problem, f: &EdgeSet) -> Result<bool> {
    let mut h = g.clone();
    for &(u, v) in f {
        if u == v || !g.is_live(u) || !g.is_live(v) {
            return argument(format!("pair ({u}, {v}) is not a pair of live vertices"));
        }
        if g.has_edge(u, v) {
            return argument(format!("pair ({u}, {v}) is already an edge"));
        }
        h.add_edge(u, v);
    }
    Ok(is_member(&h, problem))
}
