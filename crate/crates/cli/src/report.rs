use std::time::Duration;

use cts_core::dag::Instance;
use cts_core::solvers::SolveResult;
use serde::Serialize;

/// One solver run. Field order is the serialization order.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub instance: String,
    pub spec: String,
    pub decision: bool,
    pub solver: String,
    pub complete: bool,
    /// Vertex ids (1-based, as in instance JSON).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl RunReport {
    pub fn new(instance: String, spec: String, inst: &Instance, r: &SolveResult, witness: bool) -> RunReport {
        let order = r.witness.as_ref().filter(|_| witness);
        RunReport {
            instance,
            spec,
            decision: r.decision,
            solver: r.solver.clone(),
            complete: r.complete,
            witness: order.map(|o| o.iter().map(|v| v + 1).collect()),
            word: order.map(|o| inst.dag().spell(o)),
            wall_ms: None,
        }
    }

    pub fn with_time(mut self, t: Option<Duration>) -> RunReport {
        self.wall_ms = t.map(|d| d.as_secs_f64() * 1000.0);
        self
    }
}
