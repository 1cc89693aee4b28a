//! Logical circuits with explicit error-correction blocks.
//!
//! A circuit is a grid of timesteps over logical qubits. Every qubit is
//! occupied by exactly one op in every step; qubits a caller leaves out are
//! filled with [`LogicalOp::Wait`].

mod depth;
mod format;
mod rect;
pub mod templates;

pub(crate) use depth::depth_with;
pub use depth::{depth, DepthReport};
pub use format::{parse_circuit, serialize_circuit};
pub use rect::{
    check_mixing_protection, extract_rectangles, extract_rectangles_unchecked, ExtendedRectangle,
    Segment,
};

use std::fmt;

use crate::error::{AceError, Result};

/// The two independently corrected error types of a CSS code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ErrorType {
    X,
    Z,
}

impl ErrorType {
    pub fn other(self) -> Self {
        match self {
            ErrorType::X => ErrorType::Z,
            ErrorType::Z => ErrorType::X,
        }
    }
}

impl fmt::Display for ErrorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorType::X => "X",
            ErrorType::Z => "Z",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    Wait,
    H,
    S,
    T,
    Cnot,
    Xec,
    Zec,
}

impl OpKind {
    /// Gates that exchange X-type and Z-type errors.
    pub fn is_mixing(self) -> bool {
        matches!(self, OpKind::H | OpKind::S | OpKind::T)
    }

    pub fn is_correction(self) -> bool {
        matches!(self, OpKind::Xec | OpKind::Zec)
    }

    pub fn correction_of(error_type: ErrorType) -> Self {
        match error_type {
            ErrorType::X => OpKind::Xec,
            ErrorType::Z => OpKind::Zec,
        }
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            OpKind::Wait => "WAIT",
            OpKind::H => "H",
            OpKind::S => "S",
            OpKind::T => "T",
            OpKind::Cnot => "CX",
            OpKind::Xec => "XEC",
            OpKind::Zec => "ZEC",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogicalOp {
    Wait(usize),
    H(usize),
    S(usize),
    T(usize),
    Cnot { control: usize, target: usize },
    Xec(usize),
    Zec(usize),
}

impl LogicalOp {
    pub fn kind(&self) -> OpKind {
        match self {
            LogicalOp::Wait(_) => OpKind::Wait,
            LogicalOp::H(_) => OpKind::H,
            LogicalOp::S(_) => OpKind::S,
            LogicalOp::T(_) => OpKind::T,
            LogicalOp::Cnot { .. } => OpKind::Cnot,
            LogicalOp::Xec(_) => OpKind::Xec,
            LogicalOp::Zec(_) => OpKind::Zec,
        }
    }

    /// Builds a single-qubit op of the given kind.
    ///
    /// # Panics
    ///
    /// Panics for [`OpKind::Cnot`].
    pub fn single(kind: OpKind, qubit: usize) -> Self {
        match kind {
            OpKind::Wait => LogicalOp::Wait(qubit),
            OpKind::H => LogicalOp::H(qubit),
            OpKind::S => LogicalOp::S(qubit),
            OpKind::T => LogicalOp::T(qubit),
            OpKind::Xec => LogicalOp::Xec(qubit),
            OpKind::Zec => LogicalOp::Zec(qubit),
            OpKind::Cnot => panic!("CNOT needs two qubits"),
        }
    }

    pub fn correction(error_type: ErrorType, qubit: usize) -> Self {
        Self::single(OpKind::correction_of(error_type), qubit)
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            LogicalOp::Cnot { control, target } => vec![control, target],
            LogicalOp::Wait(q)
            | LogicalOp::H(q)
            | LogicalOp::S(q)
            | LogicalOp::T(q)
            | LogicalOp::Xec(q)
            | LogicalOp::Zec(q) => vec![q],
        }
    }

    /// Lowest qubit index the op touches; identifies the op within its step.
    pub fn anchor(&self) -> usize {
        match *self {
            LogicalOp::Cnot { control, target } => control.min(target),
            LogicalOp::Wait(q)
            | LogicalOp::H(q)
            | LogicalOp::S(q)
            | LogicalOp::T(q)
            | LogicalOp::Xec(q)
            | LogicalOp::Zec(q) => q,
        }
    }

    pub fn is_correction(&self) -> bool {
        self.kind().is_correction()
    }

    pub fn is_mixing(&self) -> bool {
        self.kind().is_mixing()
    }
}

impl fmt::Display for LogicalOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LogicalOp::Cnot { control, target } => write!(f, "CX {control} {target}"),
            op => write!(f, "{} {}", op.kind().mnemonic(), op.anchor()),
        }
    }
}

/// Physical location and depth cost of each logical operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostModel {
    pub n_xec: usize,
    pub n_zec: usize,
    pub n_transversal: usize,
    pub n_cnot: usize,
    pub d_xec: usize,
    pub d_zec: usize,
    pub d_gate: usize,
}

impl Default for CostModel {
    fn default() -> Self {
        Self {
            n_xec: 70,
            n_zec: 70,
            n_transversal: 7,
            n_cnot: 7,
            d_xec: 8,
            d_zec: 8,
            d_gate: 1,
        }
    }
}

impl CostModel {
    /// Default model with `n` locations in each correction block.
    pub fn with_block_locations(n: usize) -> Self {
        Self {
            n_xec: n,
            n_zec: n,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("n_xec", self.n_xec),
            ("n_zec", self.n_zec),
            ("n_transversal", self.n_transversal),
            ("n_cnot", self.n_cnot),
            ("d_xec", self.d_xec),
            ("d_zec", self.d_zec),
            ("d_gate", self.d_gate),
        ];
        for (name, value) in fields {
            if value == 0 {
                return Err(AceError::InvalidParameter(format!(
                    "{name} must be at least 1"
                )));
            }
        }
        Ok(())
    }

    pub fn locations(&self, kind: OpKind) -> usize {
        match kind {
            OpKind::Xec => self.n_xec,
            OpKind::Zec => self.n_zec,
            OpKind::Cnot => self.n_cnot,
            OpKind::Wait | OpKind::H | OpKind::S | OpKind::T => self.n_transversal,
        }
    }

    pub fn op_depth(&self, kind: OpKind) -> usize {
        match kind {
            OpKind::Xec => self.d_xec,
            OpKind::Zec => self.d_zec,
            _ => self.d_gate,
        }
    }
}

/// A validated timestep grid of logical operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalCircuit {
    n_qubits: usize,
    steps: Vec<Vec<LogicalOp>>,
    // index into steps[s] of the op occupying qubit q, at [s][q]
    slots: Vec<Vec<usize>>,
}

impl LogicalCircuit {
    /// Validates the steps, fills unmentioned qubits with waits and sorts each
    /// step by anchor qubit.
    pub fn new(n_qubits: usize, steps: Vec<Vec<LogicalOp>>) -> Result<Self> {
        if n_qubits == 0 {
            return Err(AceError::InvalidParameter(
                "a circuit needs at least one qubit".into(),
            ));
        }
        let mut canonical = Vec::with_capacity(steps.len());
        let mut slots = Vec::with_capacity(steps.len());
        for (s, ops) in steps.into_iter().enumerate() {
            let mut occupied = vec![false; n_qubits];
            let mut full = Vec::with_capacity(n_qubits);
            for op in ops {
                if let LogicalOp::Cnot { control, target } = op {
                    if control == target {
                        return Err(AceError::ControlEqualsTarget(control));
                    }
                }
                for q in op.qubits() {
                    if q >= n_qubits {
                        return Err(AceError::QubitOutOfRange { qubit: q, n_qubits });
                    }
                    if occupied[q] {
                        return Err(AceError::DuplicateQubit { step: s, qubit: q });
                    }
                    occupied[q] = true;
                }
                full.push(op);
            }
            for (q, busy) in occupied.iter().enumerate() {
                if !busy {
                    full.push(LogicalOp::Wait(q));
                }
            }
            full.sort_by_key(|op| op.anchor());
            let mut index = vec![0; n_qubits];
            for (i, op) in full.iter().enumerate() {
                for q in op.qubits() {
                    index[q] = i;
                }
            }
            canonical.push(full);
            slots.push(index);
        }
        Ok(Self {
            n_qubits,
            steps: canonical,
            slots,
        })
    }

    /// Like [`LogicalCircuit::new`] for rows built by an internal transformation.
    pub(crate) fn from_rows(n_qubits: usize, rows: Vec<Vec<LogicalOp>>) -> Self {
        Self::new(n_qubits, rows).expect("transformation produced an invalid circuit")
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_steps(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[Vec<LogicalOp>] {
        &self.steps
    }

    pub fn step(&self, s: usize) -> &[LogicalOp] {
        &self.steps[s]
    }

    /// The op occupying qubit `q` at step `s`.
    pub fn op_at(&self, s: usize, q: usize) -> &LogicalOp {
        &self.steps[s][self.slots[s][q]]
    }

    /// Ops on one qubit, in time order.
    pub fn timeline(&self, q: usize) -> impl Iterator<Item = &LogicalOp> + '_ {
        (0..self.n_steps()).map(move |s| self.op_at(s, q))
    }

    pub fn has_corrections(&self) -> bool {
        self.ops().any(|(_, op)| op.is_correction())
    }

    /// Every op with its step index.
    pub fn ops(&self) -> impl Iterator<Item = (usize, &LogicalOp)> + '_ {
        self.steps
            .iter()
            .enumerate()
            .flat_map(|(s, ops)| ops.iter().map(move |op| (s, op)))
    }

    /// Number of ops of a kind.
    pub fn count(&self, kind: OpKind) -> usize {
        self.ops().filter(|(_, op)| op.kind() == kind).count()
    }

    /// Qubit-slots covered by non-correction ops (a CNOT counts twice).
    pub fn operation_slots(&self) -> usize {
        self.ops()
            .filter(|(_, op)| !op.is_correction())
            .map(|(_, op)| op.qubits().len())
            .sum()
    }

    pub fn total_locations(&self, cost: &CostModel) -> usize {
        self.ops().map(|(_, op)| cost.locations(op.kind())).sum()
    }

    /// Whether step `s` holds correction blocks and nothing but waits besides.
    pub fn is_correction_step(&self, s: usize) -> bool {
        let ops = &self.steps[s];
        ops.iter().any(|op| op.is_correction())
            && ops
                .iter()
                .all(|op| op.is_correction() || op.kind() == OpKind::Wait)
    }

    /// Copy with every correction step removed and stray correction ops
    /// turned into waits.
    pub fn strip_corrections(&self) -> Self {
        let rows = self
            .steps
            .iter()
            .enumerate()
            .filter(|&(s, _)| !self.is_correction_step(s))
            .map(|(_, ops)| ops)
            .map(|ops| {
                ops.iter()
                    .map(|op| {
                        if op.is_correction() {
                            LogicalOp::Wait(op.anchor())
                        } else {
                            *op
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(self.n_qubits, rows)
    }

    fn correction_step(&self, error_type: ErrorType) -> Vec<LogicalOp> {
        (0..self.n_qubits)
            .map(|q| LogicalOp::correction(error_type, q))
            .collect()
    }
}

/// Conventional schedule: an XEC step and then a ZEC step on every qubit
/// after every timestep of the input.
pub fn insert_conventional_ec(circuit: &LogicalCircuit) -> Result<LogicalCircuit> {
    if circuit.has_corrections() {
        return Err(AceError::AlreadyCorrected);
    }
    let mut rows = Vec::with_capacity(3 * circuit.n_steps());
    for ops in circuit.steps() {
        rows.push(ops.clone());
        rows.push(circuit.correction_step(ErrorType::X));
        rows.push(circuit.correction_step(ErrorType::Z));
    }
    Ok(LogicalCircuit::from_rows(circuit.n_qubits(), rows))
}

/// Prepends one XEC step and one ZEC step, closing the first rectangles on a
/// real correction rather than on state preparation.
pub fn with_leading_ec(circuit: &LogicalCircuit) -> LogicalCircuit {
    let mut rows = vec![
        circuit.correction_step(ErrorType::X),
        circuit.correction_step(ErrorType::Z),
    ];
    rows.extend(circuit.steps().iter().cloned());
    LogicalCircuit::from_rows(circuit.n_qubits(), rows)
}

/// Conventional schedule with a leading correction pair; the shape used by
/// the built-in benchmarks.
pub fn conventional_schedule(circuit: &LogicalCircuit) -> Result<LogicalCircuit> {
    Ok(with_leading_ec(&insert_conventional_ec(circuit)?))
}
