//! K-joins, 1-branches and 2-branches.
//!
//! A 1-branch with first vertex `x` and last vertex `y` consists of the
//! component `D` of `x` in `G - N[y]` followed by a chain of `N[y]`; a 2-branch
//! with a nonempty body consists of a component `D` of `G - N[y1] - N[y2]`
//! between chains of `N[y1]` and `N[y2]`. The searches below enumerate the end
//! vertices and pick each chain as a longest path in a transitive digraph whose
//! equivalence classes are twins.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{argument, Error, Result};
use crate::graph::{and, minus, or, Graph};
use crate::obstructions::{c4_vertices, claw_vertices};
use crate::recognition::{class_sequence, umbrella_holds};

/// An ordered clique whose outside neighborhoods are prefixes (`l`),
/// suffixes (`r`) or everything (`n`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KJoin {
    pub order: Vec<usize>,
    pub n: Vec<usize>,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub c: Vec<usize>,
}

impl KJoin {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.order.contains(&v)
    }

    pub fn sorted(&self) -> Vec<usize> {
        sorted(&self.order)
    }
}

/// A K-join none of whose vertices lies on a claw or an induced 4-cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CleanKJoin(pub KJoin);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneBranch {
    pub order: Vec<usize>,
    /// Index of the first attachment vertex.
    pub attach: usize,
    pub r: Vec<usize>,
    pub c: Vec<usize>,
}

impl OneBranch {
    pub fn attachment(&self) -> &[usize] {
        &self.order[self.attach..]
    }

    pub fn body(&self) -> &[usize] {
        &self.order[..self.attach]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoBranch {
    pub order: Vec<usize>,
    /// Index of the last vertex of the first attachment clique.
    pub first_end: usize,
    /// Index of the first vertex of the second attachment clique.
    pub second_start: usize,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub c: Vec<usize>,
    pub n: Vec<usize>,
}

impl TwoBranch {
    pub fn first_attachment(&self) -> &[usize] {
        &self.order[..=self.first_end]
    }

    pub fn second_attachment(&self) -> &[usize] {
        &self.order[self.second_start..]
    }

    pub fn body(&self) -> &[usize] {
        if self.first_end + 1 < self.second_start {
            &self.order[self.first_end + 1..self.second_start]
        } else {
            &[]
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KJoinDecomposition {
    pub blocks: Vec<Vec<usize>>,
}

impl KJoinDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

fn sorted(vs: &[usize]) -> Vec<usize> {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s
}

fn distinct_live(g: &Graph, order: &[usize]) -> bool {
    let mut seen = g.empty_set();
    !order.is_empty() && order.iter().all(|&v| g.is_live(v) && !seen.put(v))
}

/// Positions of `w`'s neighbors in `order`, as a sorted list.
fn touch(g: &Graph, w: usize, order: &[usize]) -> Vec<usize> {
    order
        .iter()
        .enumerate()
        .filter(|&(_, &b)| g.has_edge(w, b))
        .map(|(i, _)| i)
        .collect()
}

fn is_interval(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[1] == w[0] + 1)
}

fn outside(g: &Graph, order: &[usize]) -> Vec<usize> {
    let set = g.set_of(order.iter().copied());
    g.vertices().filter(|&v| !set.contains(v)).collect()
}

/// The K-join structure of `order`, if it is one.
pub fn kjoin_parts(g: &Graph, order: &[usize]) -> Option<KJoin> {
    if !distinct_live(g, order) || !g.is_clique(order) {
        return None;
    }
    let m = order.len();
    let mut kj = KJoin {
        order: order.to_vec(),
        n: vec![],
        l: vec![],
        r: vec![],
        c: vec![],
    };
    for w in outside(g, order) {
        let p = touch(g, w, order);
        if p.is_empty() {
            kj.c.push(w);
        } else if p.len() == m {
            kj.n.push(w);
        } else if !is_interval(&p) {
            return None;
        } else if p[0] == 0 {
            kj.l.push(w);
        } else if *p.last().unwrap() == m - 1 {
            kj.r.push(w);
        } else {
            return None;
        }
    }
    Some(kj)
}

fn connected_umbrella(g: &Graph, order: &[usize]) -> bool {
    distinct_live(g, order)
        && order.windows(2).all(|w| g.has_edge(w[0], w[1]))
        && umbrella_holds(g, order)
}

/// The 1-branch structure of `order`, if it is one.
pub fn validate_one_branch(g: &Graph, order: &[usize]) -> Option<OneBranch> {
    if !connected_umbrella(g, order) {
        return None;
    }
    let m = order.len();
    let attach = touch(g, order[m - 1], order).first().copied().unwrap_or(m - 1);
    let mut ob = OneBranch {
        order: order.to_vec(),
        attach,
        r: vec![],
        c: vec![],
    };
    for w in outside(g, order) {
        let p = touch(g, w, order);
        if p.is_empty() {
            ob.c.push(w);
        } else if is_interval(&p) && p[0] >= attach && *p.last().unwrap() == m - 1 {
            ob.r.push(w);
        } else {
            return None;
        }
    }
    Some(ob)
}

/// The 2-branch structure of `order`, if it is one.
pub fn validate_two_branch(g: &Graph, order: &[usize]) -> Option<TwoBranch> {
    if !connected_umbrella(g, order) {
        return None;
    }
    let m = order.len();
    let first_end = touch(g, order[0], order).last().copied().unwrap_or(0);
    let second_start = touch(g, order[m - 1], order).first().copied().unwrap_or(m - 1);
    let empty_body = first_end + 1 >= second_start;
    let mut tb = TwoBranch {
        order: order.to_vec(),
        first_end,
        second_start,
        l: vec![],
        r: vec![],
        c: vec![],
        n: vec![],
    };
    for w in outside(g, order) {
        let p = touch(g, w, order);
        if p.is_empty() {
            tb.c.push(w);
            continue;
        }
        if !is_interval(&p) {
            return None;
        }
        let (lo, hi) = (p[0], *p.last().unwrap());
        let as_l = lo == 0 && hi <= first_end;
        let as_r = hi == m - 1 && lo >= second_start;
        if empty_body && p.len() == m {
            tb.n.push(w);
        } else if as_l {
            tb.l.push(w);
        } else if as_r {
            tb.r.push(w);
        } else {
            return None;
        }
    }
    Some(tb)
}

fn subset(a: &FixedBitSet, b: &FixedBitSet) -> bool {
    a.is_subset(b)
}

/// Longest chain of the preorder `le` over `cands`, as its classes of
/// equivalent vertices from least to greatest. Among longest chains the one
/// with the lexicographically smallest vertex set wins.
fn longest_chain(cands: &[usize], le: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cands {
        match classes.iter_mut().find(|c| le(c[0], v) && le(v, c[0])) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let below = |a: &Vec<usize>, b: &Vec<usize>| le(a[0], b[0]) && !le(b[0], a[0]);
    let rank: Vec<usize> = classes
        .iter()
        .map(|c| classes.iter().filter(|d| below(d, c)).count())
        .collect();
    let mut idx: Vec<usize> = (0..classes.len()).collect();
    idx.sort_by_key(|&i| (rank[i], classes[i][0]));

    // best chain ending at each class: (vertex set, predecessor)
    let mut best: Vec<Option<(Vec<usize>, Option<usize>)>> = vec![None; classes.len()];
    for (pos, &i) in idx.iter().enumerate() {
        let mut choice: Option<(Vec<usize>, Option<usize>)> = None;
        for &j in &idx[..pos] {
            if !below(&classes[j], &classes[i]) {
                continue;
            }
            let mut set = best[j].as_ref().unwrap().0.clone();
            set.extend(&classes[i]);
            set.sort_unstable();
            if better(&set, choice.as_ref().map(|c| &c.0)) {
                choice = Some((set, Some(j)));
            }
        }
        if choice.is_none() {
            choice = Some((sorted(&classes[i]), None));
        }
        best[i] = choice;
    }
    let mut end: Option<usize> = None;
    for i in 0..classes.len() {
        if better(&best[i].as_ref().unwrap().0, end.map(|e| &best[e].as_ref().unwrap().0)) {
            end = Some(i);
        }
    }
    let mut chain = Vec::new();
    while let Some(i) = end {
        let mut c = classes[i].clone();
        c.sort_unstable();
        chain.push(c);
        end = best[i].as_ref().unwrap().1;
    }
    chain.reverse();
    chain
}

/// Larger sets first, then lexicographically smaller.
fn better(set: &[usize], than: Option<&Vec<usize>>) -> bool {
    match than {
        None => true,
        Some(t) => set.len() > t.len() || (set.len() == t.len() && set < t.as_slice()),
    }
}

fn closed(g: &Graph, v: usize) -> FixedBitSet {
    g.closed_neighbor_set(v)
}

/// A maximum K-join with ends `x` (first) and `y` (last).
pub fn max_kjoin(g: &Graph, x: usize, y: usize) -> Result<KJoin> {
    for v in [x, y] {
        if !g.is_live(v) {
            return Err(Error::DeadVertex(v));
        }
    }
    if !g.has_edge(x, y) {
        return argument(format!("{x} and {y} are not adjacent"));
    }
    Ok(max_kjoin_within(g, x, y, g.live_set()).expect("ends are allowed"))
}

/// [`max_kjoin`] restricted to vertices of `allowed`.
pub(crate) fn max_kjoin_within(
    g: &Graph,
    x: usize,
    y: usize,
    allowed: &FixedBitSet,
) -> Option<KJoin> {
    if !allowed.contains(x) || !allowed.contains(y) {
        return None;
    }
    let (nx, ny) = (closed(g, x), closed(g, y));
    let common = and(&nx, &ny);
    let span = or(&nx, &ny);
    let left = minus(&nx, &ny);
    let right = minus(&ny, &nx);
    let cands: Vec<usize> = common
        .ones()
        .filter(|&u| allowed.contains(u))
        .filter(|&u| {
            let nu = closed(g, u);
            subset(&common, &nu) && subset(&nu, &span)
        })
        .collect();
    let le = |u: usize, v: usize| {
        subset(&and(g.neighbor_set(v), &left), g.neighbor_set(u))
            && subset(&and(g.neighbor_set(u), &right), g.neighbor_set(v))
    };
    let mut chain = longest_chain(&cands, le);
    put_first(&mut chain[0], x);
    let last = chain.len() - 1;
    put_last(&mut chain[last], y);
    let order: Vec<usize> = chain.into_iter().flatten().collect();
    Some(kjoin_parts(g, &order).expect("chain of candidates is a K-join"))
}

/// A maximum simple K-join: a longest clique with nested closed
/// neighborhoods.
pub fn max_simple_kjoin(g: &Graph) -> Option<KJoin> {
    max_simple_kjoin_within(g, g.live_set())
}

/// A longest clique of `allowed` vertices with nested closed neighborhoods,
/// ordered by increasing neighborhood.
pub(crate) fn max_simple_kjoin_within(g: &Graph, allowed: &FixedBitSet) -> Option<KJoin> {
    let cands: Vec<usize> = allowed.ones().filter(|&v| g.is_live(v)).collect();
    if cands.is_empty() {
        return None;
    }
    let rows: Vec<FixedBitSet> = (0..g.capacity()).map(|v| closed(g, v)).collect();
    let chain = longest_chain(&cands, |u, v| subset(&rows[u], &rows[v]));
    let order: Vec<usize> = chain.into_iter().flatten().collect();
    Some(kjoin_parts(g, &order).expect("nested clique is a K-join"))
}

fn put_first(class: &mut Vec<usize>, v: usize) {
    if let Some(i) = class.iter().position(|&u| u == v) {
        let u = class.remove(i);
        class.insert(0, u);
    }
}

fn put_last(class: &mut Vec<usize>, v: usize) {
    if let Some(i) = class.iter().position(|&u| u == v) {
        let u = class.remove(i);
        class.push(u);
    }
}

/// Inclusion-maximal K-joins among the maximum K-joins of edges around `x`
/// that contain `x`.
pub fn maximal_kjoins_through(g: &Graph, x: usize) -> Result<Vec<KJoin>> {
    if !g.is_live(x) {
        return Err(Error::DeadVertex(x));
    }
    let near: Vec<usize> = closed(g, x).ones().collect();
    let mut found: Vec<KJoin> = Vec::new();
    for (i, &u) in near.iter().enumerate() {
        for &v in &near[i + 1..] {
            if !g.has_edge(u, v) {
                continue;
            }
            let kj = max_kjoin(g, u, v)?;
            if kj.contains(x) && !found.iter().any(|f| f.sorted() == kj.sorted()) {
                found.push(kj);
            }
        }
    }
    if found.is_empty() {
        return Ok(vec![kjoin_parts(g, &[x]).expect("single vertex")]);
    }
    let sets: Vec<FixedBitSet> = found.iter().map(|k| g.set_of(k.order.iter().copied())).collect();
    let mut out: Vec<KJoin> = found
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            !sets
                .iter()
                .enumerate()
                .any(|(j, s)| j != i && sets[i].is_subset(s) && sets[i] != *s)
        })
        .map(|(_, k)| k.clone())
        .collect();
    out.sort_by_key(|k| k.sorted());
    Ok(out)
}

/// The sub-K-join of vertices on no claw and no induced 4-cycle.
pub fn clean_subset(g: &Graph, kj: &KJoin) -> CleanKJoin {
    let mut dirty = claw_vertices(g);
    dirty.union_with(&c4_vertices(g));
    CleanKJoin(restrict(g, kj, &dirty))
}

/// The sub-K-join of `kj` avoiding `dirty`, in the same order.
pub(crate) fn restrict(g: &Graph, kj: &KJoin, dirty: &FixedBitSet) -> KJoin {
    let order: Vec<usize> = kj.order.iter().copied().filter(|&v| !dirty.contains(v)).collect();
    if order.is_empty() {
        return KJoin {
            order,
            n: vec![],
            l: vec![],
            r: vec![],
            c: g.vertices().collect(),
        };
    }
    kjoin_parts(g, &order).expect("subset of a K-join")
}

/// Orders the connected set `set` for a branch starting at `start` and, for a
/// 2-branch, ending at `end`. Twins of `G[set]` are sorted so that outside
/// neighborhoods shrink through the first attachment clique and grow through
/// the last one.
fn arrange(g: &Graph, set: &[usize], start: usize, end: Option<usize>) -> Option<Vec<usize>> {
    let mut seq = class_sequence(g, set)?;
    let first = |s: &Vec<Vec<usize>>| s[0].contains(&start);
    if !first(&seq) {
        seq.reverse();
        if !first(&seq) {
            return None;
        }
    }
    if let Some(e) = end {
        if !seq.last().unwrap().contains(&e) {
            return None;
        }
    }
    let members = g.set_of(set.iter().copied());
    let out_deg = |v: usize| minus(g.neighbor_set(v), &members).count_ones(..);
    let touches = |a: &Vec<usize>, b: &Vec<usize>| a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)));
    let c = seq.len();
    let first_end = if end.is_some() {
        (0..c).rev().find(|&i| i == 0 || touches(&seq[0], &seq[i])).unwrap()
    } else {
        0
    };
    let last_start = (0..c).find(|&i| i == c - 1 || touches(&seq[i], &seq[c - 1])).unwrap();
    for (i, class) in seq.iter_mut().enumerate() {
        if i >= last_start {
            class.sort_by_key(|&v| (out_deg(v), v));
        } else if end.is_some() && i <= first_end {
            class.sort_by_key(|&v| (std::cmp::Reverse(out_deg(v)), v));
        }
    }
    put_first(&mut seq[0], start);
    if let Some(e) = end {
        put_last(&mut seq[c - 1], e);
    }
    Some(seq.into_iter().flatten().collect())
}

fn component_of(g: &Graph, x: usize, allowed: &FixedBitSet) -> FixedBitSet {
    let mut seen = g.empty_set();
    seen.insert(x);
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if allowed.contains(u) && !seen.put(u) {
                stack.push(u);
            }
        }
    }
    seen
}

fn boundary(g: &Graph, d: &FixedBitSet) -> FixedBitSet {
    let mut nb = g.empty_set();
    for v in d.ones() {
        nb.union_with(g.neighbor_set(v));
    }
    nb.difference_with(d);
    nb
}

fn keep_better(best: &mut Option<(Vec<usize>, Vec<usize>)>, order: Vec<usize>) {
    let set = sorted(&order);
    if better(&set, best.as_ref().map(|b| &b.0)) {
        *best = Some((set, order));
    }
}

/// Vertices of `cands` comparable under `le` with every vertex of `req`, or
/// `None` when `req` itself is not a chain inside `cands`.
fn comparable_with(
    cands: &[usize],
    req: &FixedBitSet,
    le: &impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let comparable = |u: usize, v: usize| le(u, v) || le(v, u);
    let req: Vec<usize> = req.ones().collect();
    if req.iter().any(|r| !cands.contains(r)) {
        return None;
    }
    for (i, &a) in req.iter().enumerate() {
        if req[i + 1..].iter().any(|&b| !comparable(a, b)) {
            return None;
        }
    }
    Some(
        cands
            .iter()
            .copied()
            .filter(|&u| req.iter().all(|&r| comparable(u, r)))
            .collect(),
    )
}

/// A maximum 1-branch whose umbrella ordering starts with `x`.
pub fn max_one_branch_from(g: &Graph, x: usize) -> Result<OneBranch> {
    if !g.is_live(x) {
        return Err(Error::DeadVertex(x));
    }
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;

    // the whole branch is a clique
    let nx = closed(g, x);
    let cands: Vec<usize> = g.vertices().filter(|&u| subset(&nx, &closed(g, u))).collect();
    let mut chain = longest_chain(&cands, |u, v| subset(&closed(g, u), &closed(g, v)));
    put_first(&mut chain[0], x);
    keep_better(&mut best, chain.into_iter().flatten().collect());

    for y in g.vertices().filter(|&y| !nx.contains(y)) {
        let ny = closed(g, y);
        let d = component_of(g, x, &minus(g.live_set(), &ny));
        let nd = boundary(g, &d);
        if nd.is_clear() {
            continue;
        }
        let span = or(&ny, &d);
        let cands: Vec<usize> = ny.ones().filter(|&u| subset(&closed(g, u), &span)).collect();
        let le = |u: usize, v: usize| {
            subset(&and(g.neighbor_set(v), &d), g.neighbor_set(u))
                && subset(&minus(&closed(g, u), &d), &closed(g, v))
        };
        let mut req = nd.clone();
        req.insert(y);
        let Some(allowed) = comparable_with(&cands, &req, &le) else {
            continue;
        };
        let chain = longest_chain(&allowed, le);
        let mut set: Vec<usize> = d.ones().collect();
        set.extend(chain.into_iter().flatten());
        if let Some(order) = arrange(g, &set, x, None) {
            if validate_one_branch(g, &order).is_some() {
                keep_better(&mut best, order);
            }
        }
    }
    let (_, order) = best.expect("the clique case always yields a branch");
    Ok(validate_one_branch(g, &order).expect("validated candidate"))
}

/// The maximum 2-branch with ends `y1`, `y2` and body `d`, containing `must`.
fn two_branch_for(
    g: &Graph,
    y1: usize,
    y2: usize,
    d: &FixedBitSet,
    must: &FixedBitSet,
) -> Option<Vec<usize>> {
    let (n1, n2) = (closed(g, y1), closed(g, y2));
    let nd = boundary(g, d);
    let mut req1 = and(&nd, &n1);
    let mut req2 = and(&nd, &n2);
    if req1.is_clear() || req2.is_clear() {
        return None;
    }
    let span = or(&or(&n1, &n2), d);
    if !subset(must, &span) {
        return None;
    }
    req1.union_with(&and(must, &n1));
    req2.union_with(&and(must, &n2));
    req1.insert(y1);
    req2.insert(y2);

    let candidates = |own: &FixedBitSet, other: &FixedBitSet| -> Vec<usize> {
        own.ones()
            .filter(|&u| {
                let nu = closed(g, u);
                subset(&nu, &span)
                    && (and(g.neighbor_set(u), other).is_clear() || subset(d, g.neighbor_set(u)))
            })
            .collect()
    };
    let mut u1 = candidates(&n1, &n2);
    let mut u2 = candidates(&n2, &n1);
    let far1 = or(d, &n2);
    let far2 = or(d, &n1);
    let le1 = |u: usize, v: usize| {
        subset(&and(g.neighbor_set(v), &far1), g.neighbor_set(u))
            && subset(&and(&closed(g, u), &n1), &closed(g, v))
    };
    let le2 = |u: usize, v: usize| {
        subset(&and(g.neighbor_set(v), &far2), g.neighbor_set(u))
            && subset(&and(&closed(g, u), &n2), &closed(g, v))
    };

    loop {
        let a1 = comparable_with(&u1, &req1, &le1)?;
        let a2 = comparable_with(&u2, &req2, &le2)?;
        let c1: Vec<usize> = longest_chain(&a1, le1).into_iter().flatten().collect();
        let c2: Vec<usize> = longest_chain(&a2, le2).into_iter().flatten().collect();
        let s1 = g.set_of(c1.iter().copied());
        let s2 = g.set_of(c2.iter().copied());
        let mut changed = settle(g, &c1, &s2, &n2, &req1, &mut u1, &mut req2);
        changed |= settle(g, &c2, &s1, &n1, &req2, &mut u2, &mut req1);
        if !changed {
            let mut set: Vec<usize> = c1;
            set.extend(d.ones());
            set.extend(c2);
            let order = arrange(g, &set, y1, Some(y2))?;
            validate_two_branch(g, &order)?;
            return Some(order);
        }
    }
}

/// Every neighbor of a chosen attachment vertex inside the opposite end's
/// closed neighborhood must be chosen on that side: required vertices push
/// their neighbors into the other side's requirements, optional ones are
/// dropped. Returns whether anything changed.
fn settle(
    g: &Graph,
    chain: &[usize],
    other_set: &FixedBitSet,
    other_n: &FixedBitSet,
    req: &FixedBitSet,
    own_cands: &mut Vec<usize>,
    other_req: &mut FixedBitSet,
) -> bool {
    let mut changed = false;
    for &u in chain {
        let miss = minus(&and(g.neighbor_set(u), other_n), other_set);
        if miss.is_clear() {
            continue;
        }
        changed = true;
        if req.contains(u) {
            other_req.union_with(&miss);
        } else {
            own_cands.retain(|&w| w != u);
        }
    }
    changed
}

fn far_apart(g: &Graph, y1: usize, y2: usize) -> bool {
    and(&closed(g, y1), &closed(g, y2)).is_clear()
}

fn best_two_branch(g: &Graph, x: usize, must: &FixedBitSet) -> Option<TwoBranch> {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let ends: Vec<usize> = g.vertices().filter(|&y| !closed(g, x).contains(y)).collect();
    for (i, &y1) in ends.iter().enumerate() {
        for &y2 in &ends[i + 1..] {
            if !far_apart(g, y1, y2) {
                continue;
            }
            let blocked = or(&closed(g, y1), &closed(g, y2));
            let d = component_of(g, x, &minus(g.live_set(), &blocked));
            if let Some(order) = two_branch_for(g, y1, y2, &d, must) {
                keep_better(&mut best, order);
            }
        }
    }
    best.map(|(_, order)| validate_two_branch(g, &order).expect("validated candidate"))
}

/// A maximum 2-branch containing `b` with `x` in its body.
pub fn max_two_branch(g: &Graph, x: usize, b: &KJoin) -> Result<Option<TwoBranch>> {
    if !g.is_live(x) {
        return Err(Error::DeadVertex(x));
    }
    if !b.contains(x) {
        return argument(format!("vertex {x} is not in the K-join"));
    }
    Ok(best_two_branch(g, x, &g.set_of(b.order.iter().copied())))
}

/// A maximum 2-branch with `x` in its body.
pub fn max_two_branch_through(g: &Graph, x: usize) -> Result<Option<TwoBranch>> {
    if !g.is_live(x) {
        return Err(Error::DeadVertex(x));
    }
    Ok(best_two_branch(g, x, &g.empty_set()))
}

/// For every pair of ends and every admissible body between them, the
/// maximum 2-branch realizing it.
pub fn two_branches(g: &Graph) -> Vec<TwoBranch> {
    let mut out = Vec::new();
    let vs: Vec<usize> = g.vertices().collect();
    let none = g.empty_set();
    for (i, &y1) in vs.iter().enumerate() {
        for &y2 in &vs[i + 1..] {
            if !far_apart(g, y1, y2) {
                continue;
            }
            let blocked = or(&closed(g, y1), &closed(g, y2));
            let free = minus(g.live_set(), &blocked);
            let mut left = free.clone();
            while let Some(x) = left.ones().next() {
                let d = component_of(g, x, &free);
                left.difference_with(&d);
                if let Some(order) = two_branch_for(g, y1, y2, &d, &none) {
                    out.push(validate_two_branch(g, &order).expect("validated candidate"));
                }
            }
        }
    }
    out
}

/// Consecutive K-joins tiling a 2-branch, starting with its first attachment
/// clique.
pub fn kjoin_decomposition(g: &Graph, tb: &TwoBranch) -> KJoinDecomposition {
    let order = &tb.order;
    let m = order.len();
    let mut blocks = vec![order[..=tb.first_end].to_vec()];
    let mut s = tb.first_end + 1;
    while s < m {
        if s >= tb.second_start {
            blocks.push(order[s..].to_vec());
            break;
        }
        let reach = (s..m).rev().find(|&j| j == s || g.has_edge(order[s], order[j])).unwrap();
        blocks.push(order[s..=reach].to_vec());
        s = reach + 1;
    }
    KJoinDecomposition { blocks }
}
