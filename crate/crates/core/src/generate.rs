//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{argument, Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Gnp,
    PlantedPic,
    PlantedBcc,
    Path,
    Cycle,
    Star,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gnp" => Model::Gnp,
            "planted-pic" => Model::PlantedPic,
            "planted-bcc" => Model::PlantedBcc,
            "path" => Model::Path,
            "cycle" => Model::Cycle,
            "star" => Model::Star,
            _ => return argument(format!("unknown model {s:?}")),
        })
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Gnp => "gnp",
            Model::PlantedPic => "planted-pic",
            Model::PlantedBcc => "planted-bcc",
            Model::Path => "path",
            Model::Cycle => "cycle",
            Model::Star => "star",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params {
    pub n: usize,
    /// Edge probability for `gnp`.
    pub p: f64,
    /// Edges removed from a planted instance.
    pub edits: usize,
    pub seed: u64,
}

/// `star` builds a center with `n - 1` leaves.
pub fn generate(model: Model, params: &Params) -> Graph {
    let Params { n, p, edits, seed } = *params;
    match model {
        Model::Gnp => gnp(n, p, seed),
        Model::PlantedPic => planted_pic(n, edits, seed),
        Model::PlantedBcc => planted_bcc(n, edits, seed),
        Model::Path => Graph::path(n),
        Model::Cycle => Graph::cycle(n),
        Model::Star => Graph::star(n.saturating_sub(1)),
    }
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random proper interval graph with `edits` random edges removed, so that
/// adding them back is a completion of that size.
pub fn planted_pic(n: usize, edits: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = rng.gen_range(1..=(n / 4).max(2));
    let mut reach = 0;
    let mut edges = Vec::new();
    for i in 0..n {
        reach = reach.max(i + rng.gen_range(0..=width)).min(n.saturating_sub(1));
        edges.extend((i + 1..=reach).map(|j| (i, j)));
    }
    finish(n, edges, edits, &mut rng)
}

/// A random bi-clique chain graph with `edits` random edges removed.
pub fn planted_bcc(n: usize, edits: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let split = rng.gen_range(0..=n);
    let mut edges = Vec::new();
    for side in [0..split, split..n] {
        for u in side.clone() {
            edges.extend((u + 1..side.end).map(|v| (u, v)));
        }
    }
    let mut reach = n - split;
    for a in 0..split {
        reach = rng.gen_range(0..=reach);
        edges.extend((split..split + reach).map(|b| (a, b)));
    }
    finish(n, edges, edits, &mut rng)
}

fn finish(n: usize, edges: Vec<Edge>, edits: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(label[u], label[v]);
    }
    let mut present: Vec<Edge> = g.edges().collect();
    present.shuffle(rng);
    for &(u, v) in present.iter().take(edits) {
        g.remove_edge(u, v);
    }
    g
}
