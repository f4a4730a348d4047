//! Kernels for bi-clique chain completion and, through complementation,
//! bipartite chain deletion.

use crate::branches::max_simple_kjoin_within;
use crate::graph::{minus, Graph};
use crate::obstructions::{c4_vertices, find_3k1_sunflower, find_c4_sunflower, three_k1_vertices};

use super::pic::sunflower_witness;
use super::{middle, Reducer, Reduction, Witness};

/// Forces the shared pair of more than `k` independent triples or induced
/// 4-cycles.
pub fn rule_sunflower_bcc(r: &mut Reducer) -> bool {
    let Some(s) = find_3k1_sunflower(&r.g, r.k).or_else(|| find_c4_sunflower(&r.g, r.k)) else {
        return false;
    };
    r.force("sunflower_bcc", sunflower_witness(&s), s.pair);
    true
}

/// Shrinks the largest clean simple K-join to its `k + 1` first and `k + 1`
/// last vertices.
pub fn rule_simple_kjoin(r: &mut Reducer) -> bool {
    let g = &r.g;
    let mut dirty = three_k1_vertices(g);
    dirty.union_with(&c4_vertices(g));
    let clean = minus(g.live_set(), &dirty);
    let Some(kj) = max_simple_kjoin_within(g, &clean) else {
        return false;
    };
    if kj.len() < 2 * r.k + 3 {
        return false;
    }
    let rest: Vec<usize> = kj.r.iter().chain(&kj.c).copied().collect();
    if !g.is_clique(&rest) {
        return false;
    }
    let m = middle(&kj.order, r.k + 1, r.k + 1).expect("long enough");
    r.remove("simple_kjoin", Witness::KJoin { order: kj.order }, m);
    true
}

pub fn reduce_bcc(g: &Graph, k: usize) -> Reduction {
    reduce_tagged(g, k, "bcc")
}

fn reduce_tagged(g: &Graph, k: usize, tag: &str) -> Reduction {
    let mut r = Reducer::new(g, k, tag);
    r.exhaust(&[rule_sunflower_bcc, rule_simple_kjoin]);
    r.finish()
}

/// Bipartite chain deletion: reduces the complement and complements back.
/// `forced` then lists edges that every small solution deletes, and they are
/// already deleted from the returned graph.
pub fn bcd_reduce(g: &Graph, k: usize) -> Reduction {
    let mut red = reduce_tagged(&g.complement(), k, "bcd");
    red.graph = red.graph.complement();
    red.trace.initial.m = g.edge_count();
    red.trace.outcome.m = red.graph.edge_count();
    red
}

/// Vertex bound on reduced positive instances.
pub fn bcc_kernel_bound(k: usize) -> usize {
    2 * (3 * k * k + 6 * k + 2) + 2 * k
}

/// Size bound on simple K-joins of a reduced positive instance.
pub fn simple_kjoin_bound(k: usize) -> usize {
    3 * k * k + 6 * k + 2
}
