//! Kernel for proper interval completion.

use std::cmp::Reverse;

use rayon::prelude::*;

use crate::branches::{
    kjoin_decomposition, max_kjoin_within, max_one_branch_from, two_branches, validate_two_branch, KJoin, TwoBranch,
};
use crate::graph::{components_within, connected_components, minus, true_twin_classes, Edge, Graph};
use crate::obstructions::{c4_vertices, claw_vertices, find_c4_sunflower, find_claw_sunflower, find_hole, Sunflower};
use crate::recognition::is_proper_interval;

use super::{middle, Reducer, Reduction, Witness};

pub(crate) fn sunflower_witness(s: &Sunflower) -> Witness {
    Witness::Sunflower {
        pair: s.pair,
        petals: s.petals.iter().map(|p| p.vertices.clone()).collect(),
    }
}

/// Removes every connected component that is already a proper interval graph.
pub fn rule_cc(r: &mut Reducer) -> bool {
    let mut changed = false;
    for comp in connected_components(&r.g) {
        let (sub, _) = r.g.induced_subgraph(&comp).expect("live component");
        if is_proper_interval(&sub) {
            r.remove("cc", Witness::Component { vertices: comp.clone() }, comp);
            changed = true;
        }
    }
    changed
}

/// Trims every true-twin class to `k + 1` vertices, keeping the smallest ids.
pub fn rule_twins(r: &mut Reducer) -> bool {
    let mut changed = false;
    for mut class in true_twin_classes(&r.g) {
        if class.len() > r.k + 1 {
            class.sort_unstable();
            let extra = class[r.k + 1..].to_vec();
            r.remove("twins", Witness::TwinClass { vertices: class }, extra);
            changed = true;
        }
    }
    changed
}

/// Forces the shared pair of more than `k` claws or induced 4-cycles.
pub fn rule_sunflower(r: &mut Reducer) -> bool {
    let Some(s) = find_claw_sunflower(&r.g, r.k).or_else(|| find_c4_sunflower(&r.g, r.k)) else {
        return false;
    };
    r.force("sunflower", sunflower_witness(&s), s.pair);
    true
}

/// Shrinks the largest clean K-join to its `k + 1` first and `k + 1` last
/// vertices.
pub fn rule_kjoin(r: &mut Reducer) -> bool {
    let g = &r.g;
    let mut dirty = claw_vertices(g);
    dirty.union_with(&c4_vertices(g));
    let clean = minus(g.live_set(), &dirty);
    let edges: Vec<Edge> = g.edges().collect();
    let best = edges
        .par_iter()
        .filter_map(|&(x, y)| max_kjoin_within(g, x, y, &clean).map(|kj| (kj, (x, y))))
        .max_by_key(|(kj, e)| (kj.len(), Reverse(kj.sorted()), Reverse(*e)));
    let Some((KJoin { order, .. }, _)) = best else {
        return false;
    };
    if order.len() < 2 * r.k + 3 {
        return false;
    }
    let m = middle(&order, r.k + 1, r.k + 1).expect("long enough");
    r.remove("kjoin", Witness::KJoin { order }, m);
    true
}

/// Cuts the body of the longest 1-branch down to its `2k + 1` last vertices.
pub fn rule_one_branch(r: &mut Reducer) -> bool {
    let keep = 2 * r.k + 1;
    let vs: Vec<usize> = r.g.vertices().collect();
    let g = &r.g;
    let best = vs
        .par_iter()
        .map(|&x| (max_one_branch_from(g, x).expect("live vertex"), x))
        .filter(|(ob, _)| ob.body().len() > keep)
        .max_by_key(|(ob, x)| (ob.body().len(), Reverse(*x)));
    let Some((ob, _)) = best else {
        return false;
    };
    let best_body = ob.body().len();
    let order = ob.order;
    let cut = order[..best_body - keep].to_vec();
    r.remove("one_branch", Witness::Branch { order }, cut);
    true
}

/// Rejects when some induced cycle needs more than `k` chords.
pub fn reject_long_hole(r: &mut Reducer) -> bool {
    match find_hole(&r.g) {
        Some(h) if h.vertices.len() - 3 > r.k => {
            r.reject("reject_hole", Witness::Hole { cycle: h.vertices });
            true
        }
        _ => false,
    }
}

fn ends_connected(g: &Graph, tb: &TwoBranch) -> bool {
    let body = g.set_of(tb.body().iter().copied());
    let rest = minus(g.live_set(), &body);
    let (a, b) = (tb.order[0], *tb.order.last().unwrap());
    components_within(g, &rest).iter().any(|c| c.contains(&a) && c.contains(&b))
}

fn reversed(g: &Graph, tb: &TwoBranch) -> TwoBranch {
    let order: Vec<usize> = tb.order.iter().rev().copied().collect();
    validate_two_branch(g, &order).expect("reversal of a 2-branch")
}

/// Number of K-joins in the decomposition of `tb`, read from either end.
pub fn kjoin_count(g: &Graph, tb: &TwoBranch) -> usize {
    let fwd = kjoin_decomposition(g, tb).len();
    let bwd = kjoin_decomposition(g, &reversed(g, tb)).len();
    fwd.max(bwd)
}

/// Rejects on a 2-branch of at least `k + 4` K-joins whose attachment cliques
/// stay connected outside its body.
pub fn reject_long_2branch(r: &mut Reducer) -> bool {
    for tb in two_branches(&r.g) {
        if !tb.body().is_empty() && ends_connected(&r.g, &tb) && kjoin_count(&r.g, &tb) >= r.k + 4 {
            r.reject("reject_two_branch", Witness::Branch { order: tb.order });
            return true;
        }
    }
    false
}

/// Cuts the middle of the longest 2-branch that separates its two
/// attachment cliques, keeping `2k + 1` body vertices next to each.
pub fn rule_two_branch(r: &mut Reducer) -> bool {
    let keep = 2 * r.k + 1;
    let mut best: Option<TwoBranch> = None;
    for tb in two_branches(&r.g) {
        let len = tb.body().len();
        if len >= 4 * r.k + 4
            && best.as_ref().is_none_or(|b| len > b.body().len())
            && !ends_connected(&r.g, &tb)
        {
            best = Some(tb);
        }
    }
    let Some(tb) = best else {
        return false;
    };
    let cut = middle(tb.body(), keep, keep).expect("long enough");
    r.remove("two_branch", Witness::Branch { order: tb.order.clone() }, cut);
    true
}

fn reject_checks(r: &mut Reducer) -> bool {
    reject_long_hole(r) || reject_long_2branch(r)
}

/// Exhaustive application of the rules, in priority order.
pub fn reduce(g: &Graph, k: usize) -> Reduction {
    let mut r = Reducer::new(g, k, "pic");
    r.exhaust(&[
        rule_cc,
        rule_twins,
        rule_sunflower,
        rule_kjoin,
        rule_one_branch,
        reject_checks,
        rule_two_branch,
    ]);
    r.finish()
}

/// Vertex bound on reduced positive instances; 0 at `k = 0`, where only the
/// empty graph survives.
pub fn kernel_bound(k: usize) -> usize {
    if k == 0 {
        return 0;
    }
    let k = k as i128;
    let v = 2 * (k.pow(3) + 4 * k * k + 9 * k + 4) + (2 * k - 1) * ((k + 3) * (k.pow(3) + 4 * k * k + 5 * k + 1));
    v as usize
}

/// Size bound on K-joins of a reduced positive instance.
pub fn kjoin_bound(k: usize) -> usize {
    k.pow(3) + 4 * k * k + 7 * k + 3
}

/// Size bound on 1-branches of a reduced positive instance.
pub fn one_branch_bound(k: usize) -> usize {
    k.pow(3) + 4 * k * k + 9 * k + 4
}
