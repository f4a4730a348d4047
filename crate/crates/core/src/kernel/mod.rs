//! Kernelization drivers and their reduction traces.

pub mod bcc;
pub mod pic;

use serde::{Deserialize, Serialize};

use crate::graph::{edge, Edge, EdgeSet, Graph};

pub use bcc::{bcc_kernel_bound, bcd_reduce, reduce_bcc};
pub use pic::{kernel_bound, reduce};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Reduced,
    RejectedNoInstance,
    RejectedBudget,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Reduced => "reduced",
            Status::RejectedNoInstance => "rejected_no_instance",
            Status::RejectedBudget => "rejected_budget",
        }
    }

    pub fn is_rejected(&self) -> bool {
        *self != Status::Reduced
    }
}

/// The structure that justified an event.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Component { vertices: Vec<usize> },
    TwinClass { vertices: Vec<usize> },
    Sunflower { pair: Edge, petals: Vec<Vec<usize>> },
    KJoin { order: Vec<usize> },
    Branch { order: Vec<usize> },
    Hole { cycle: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Event {
    pub rule: String,
    pub witness: Witness,
    pub removed: Vec<usize>,
    pub forced: Vec<Edge>,
    pub k_after: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Size {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Final {
    pub status: Status,
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub problem: String,
    pub initial: Size,
    pub events: Vec<Event>,
    #[serde(rename = "final")]
    pub outcome: Final,
}

impl ReductionTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }
}

/// A reduced instance. Vertex ids are those of the input graph; removed
/// vertices are tombstoned.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub k: usize,
    /// Pairs added to the input (deleted from it for deletion problems).
    pub forced: EdgeSet,
    pub status: Status,
    pub trace: ReductionTrace,
}

/// Mutable state shared by the rules: the working graph, the residual budget
/// and the trace so far.
#[derive(Clone, Debug)]
pub struct Reducer {
    pub g: Graph,
    pub k: usize,
    pub forced: EdgeSet,
    pub status: Status,
    pub events: Vec<Event>,
    problem: String,
    initial: Size,
}

impl Reducer {
    pub fn new(g: &Graph, k: usize, problem: &str) -> Reducer {
        Reducer {
            initial: Size {
                n: g.vertex_count(),
                m: g.edge_count(),
                k,
            },
            g: g.clone(),
            k,
            forced: EdgeSet::new(),
            status: Status::Reduced,
            events: Vec::new(),
            problem: problem.to_string(),
        }
    }

    pub(crate) fn remove(&mut self, rule: &str, witness: Witness, mut vs: Vec<usize>) {
        vs.sort_unstable();
        for &v in &vs {
            self.g.remove_vertex(v);
        }
        self.log(rule, witness, vs, vec![]);
    }

    /// Adds `uv` and spends one unit of budget, or rejects when none is left.
    pub(crate) fn force(&mut self, rule: &str, witness: Witness, (u, v): Edge) {
        if self.k == 0 {
            self.status = Status::RejectedBudget;
            self.log(rule, witness, vec![], vec![]);
            return;
        }
        assert!(self.g.add_edge(u, v), "forced pair must be a non-edge");
        self.k -= 1;
        self.forced.insert(edge(u, v));
        self.log(rule, witness, vec![], vec![edge(u, v)]);
    }

    pub(crate) fn reject(&mut self, rule: &str, witness: Witness) {
        self.status = Status::RejectedNoInstance;
        self.log(rule, witness, vec![], vec![]);
    }

    fn log(&mut self, rule: &str, witness: Witness, removed: Vec<usize>, forced: Vec<Edge>) {
        self.events.push(Event {
            rule: rule.to_string(),
            witness,
            removed,
            forced,
            k_after: self.k,
        });
    }

    pub fn finish(self) -> Reduction {
        let trace = ReductionTrace {
            problem: self.problem,
            initial: self.initial,
            events: self.events,
            outcome: Final {
                status: self.status,
                n: self.g.vertex_count(),
                m: self.g.edge_count(),
                k: self.k,
            },
        };
        Reduction {
            graph: self.g,
            k: self.k,
            forced: self.forced,
            status: self.status,
            trace,
        }
    }

    /// Applies `rules` in priority order, restarting from the first after
    /// every change, until none applies or the instance is rejected.
    pub(crate) fn exhaust(&mut self, rules: &[fn(&mut Reducer) -> bool]) {
        'outer: while self.status == Status::Reduced {
            for rule in rules {
                if rule(self) {
                    continue 'outer;
                }
            }
            break;
        }
    }
}

/// Keeps the `head` first and `tail` last entries of `order`, returning the
/// middle, or `None` when nothing lies between them.
pub(crate) fn middle(order: &[usize], head: usize, tail: usize) -> Option<Vec<usize>> {
    if order.len() <= head + tail {
        return None;
    }
    Some(order[head..order.len() - tail].to_vec())
}
