use super::{CostModel, LogicalCircuit};

/// Depth of a circuit in physical timesteps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthReport {
    pub levels: usize,
    pub logical_steps: usize,
    pub correction_steps: usize,
    pub total: usize,
}

impl DepthReport {
    /// Fractional depth saving of `self` relative to `baseline`.
    pub fn reduction_vs(&self, baseline: &DepthReport) -> f64 {
        1.0 - self.total as f64 / baseline.total as f64
    }
}

/// Single-level depth: each step costs its slowest op.
pub fn depth(circuit: &LogicalCircuit, cost: &CostModel) -> DepthReport {
    depth_with(circuit, 1, |op| cost.op_depth(op.kind()))
}

pub(crate) fn depth_with(
    circuit: &LogicalCircuit,
    levels: usize,
    op_depth: impl Fn(&super::LogicalOp) -> usize,
) -> DepthReport {
    let total = circuit
        .steps()
        .iter()
        .map(|ops| ops.iter().map(&op_depth).max().unwrap_or(0))
        .sum();
    let correction_steps = (0..circuit.n_steps())
        .filter(|&s| circuit.is_correction_step(s))
        .count();
    DepthReport {
        levels,
        logical_steps: circuit.n_steps(),
        correction_steps,
        total,
    }
}
