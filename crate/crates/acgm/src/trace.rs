//! Per-iteration trace records shared by all solvers.

use ndarray::Array1;

/// One row of a solver trace.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    /// Iteration index, 1-based (the state after iteration `k`).
    pub k: usize,
    /// Accepted Lipschitz constant estimate.
    pub accepted_l: f64,
    /// Number of rejected line-search candidates this iteration.
    pub backtracks: usize,
    /// Monotonicity condition failed; the previous iterate was kept.
    pub overshoot: bool,
    /// Objective value `F(x_k)`.
    pub f_value: f64,
    /// Convergence guarantee `A_k`; `NaN` for methods that do not maintain one.
    pub guarantee: f64,
}

/// Points visited in one iteration, kept when point recording is enabled.
#[derive(Debug, Clone)]
pub struct StepPoints {
    /// Auxiliary point the accepted proximal gradient step was taken from.
    pub y: Array1<f64>,
    /// Proximal gradient step `z = T_L(y)`.
    pub z: Array1<f64>,
    /// Main iterate after the monotonicity decision.
    pub x: Array1<f64>,
}

/// Final iterate plus the recorded trace of a solver run.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub x: Array1<f64>,
    /// Objective at the starting point; may be `+∞` for an infeasible start.
    pub f0: f64,
    pub records: Vec<IterationRecord>,
    /// Per-iteration points, present when the config asked for them.
    pub steps: Option<Vec<StepPoints>>,
}

impl SolveResult {
    pub fn final_objective(&self) -> f64 {
        self.records.last().map_or(self.f0, |r| r.f_value)
    }

    pub fn total_backtracks(&self) -> usize {
        self.records.iter().map(|r| r.backtracks).sum()
    }

    /// Average accepted Lipschitz constant estimate over the run.
    pub fn average_lce(&self) -> f64 {
        if self.records.is_empty() {
            return f64::NAN;
        }
        self.records.iter().map(|r| r.accepted_l).sum::<f64>() / self.records.len() as f64
    }
}
