//! Analytic failure rates from extended-rectangle location counts.
//!
//! A rectangle fails when two or more of its locations suffer a fault of its
//! type. Rectangles are treated as independent even where they share a
//! correction block, so the circuit failure probability computed here
//! over-counts slightly and the reported fidelity is a lower bound.

mod concat;
mod csv;
mod curves;
mod sweep;

pub use concat::{composed_depth, concatenated_failure, ConcatenationResult, LevelResult, Setup};
pub use csv::format_sig9;
pub use curves::{
    calibrate_block_locations, crossover_alpha, ratio_curve, saturation_alpha, CalibrationPoint,
    CalibrationReport, CalibrationTargets,
};
pub use sweep::{no_x_limit, sweep, NoXComparison, SweepRow, SweepSpec, SWEEP_CSV_HEADER};

use crate::circuit::{
    depth, extract_rectangles, extract_rectangles_unchecked, CostModel, DepthReport, ErrorType,
    ExtendedRectangle, LogicalCircuit,
};
use crate::error::{AceError, Result};
use crate::noise::PauliChannel;

/// Probability of two or more faults among `l` independent locations that
/// each fail with probability `p`.
pub fn rectangle_failure(l: usize, p: f64) -> f64 {
    if l < 2 || p <= 0.0 {
        return 0.0;
    }
    if p >= 1.0 {
        return 1.0;
    }
    let n = l as f64;
    let log_q = (-p).ln_1p();
    if n * p < 0.5 {
        // sum the tail directly; the closed form cancels badly here
        let ratio = p / (1.0 - p);
        let mut term = n * (n - 1.0) / 2.0 * p * p * ((n - 2.0) * log_q).exp();
        let mut sum = 0.0;
        let mut k = 2.0;
        while term > 0.0 && k <= n {
            sum += term;
            if term < sum * 1e-18 {
                break;
            }
            term *= (n - k) / (k + 1.0) * ratio;
            k += 1.0;
        }
        sum.min(1.0)
    } else {
        let none = (n * log_q).exp_m1();
        let one = n * p * ((n - 1.0) * log_q).exp();
        (-none - one).clamp(0.0, 1.0)
    }
}

/// `1 - prod(1 - p_i)`, evaluated through logarithms.
pub(crate) fn any_of(probabilities: impl Iterator<Item = f64>) -> f64 {
    let log_survival: f64 = probabilities.map(|p| (-p).ln_1p()).sum();
    -log_survival.exp_m1()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RectangleFailure {
    pub id: usize,
    pub error_type: ErrorType,
    pub location_count: usize,
    /// Logical qubits the rectangle spans.
    pub qubits: usize,
    pub p_fail: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FailureReport {
    pub per_rectangle: Vec<RectangleFailure>,
    pub p_fail_x: f64,
    pub p_fail_z: f64,
    pub p_fail_total: f64,
    pub depth: DepthReport,
    /// The product over rectangles bounds the fidelity from below.
    pub is_lower_bound: bool,
}

impl FailureReport {
    pub fn rectangles(&self, error_type: ErrorType) -> impl Iterator<Item = &RectangleFailure> {
        self.per_rectangle
            .iter()
            .filter(move |r| r.error_type == error_type)
    }

    /// Expected number of failed logical qubit-locations of one type: each
    /// rectangle's failure probability times the qubits it spans.
    pub fn qubit_weighted_failures(&self, error_type: ErrorType) -> f64 {
        self.rectangles(error_type)
            .map(|r| r.p_fail * r.qubits as f64)
            .sum()
    }
}

/// Failure report of a corrected circuit.
pub fn circuit_failure(
    circuit: &LogicalCircuit,
    channel: &PauliChannel,
    cost: &CostModel,
) -> Result<FailureReport> {
    let x = extract_rectangles(circuit, ErrorType::X, cost)?;
    let z = extract_rectangles(circuit, ErrorType::Z, cost)?;
    Ok(report_from(circuit, channel, cost, x, z))
}

/// [`circuit_failure`] without the mixing-gate check, for schedules that drop
/// X correction everywhere.
pub fn circuit_failure_unchecked(
    circuit: &LogicalCircuit,
    channel: &PauliChannel,
    cost: &CostModel,
) -> FailureReport {
    let x = extract_rectangles_unchecked(circuit, ErrorType::X, cost);
    let z = extract_rectangles_unchecked(circuit, ErrorType::Z, cost);
    report_from(circuit, channel, cost, x, z)
}

fn report_from(
    circuit: &LogicalCircuit,
    channel: &PauliChannel,
    cost: &CostModel,
    x: Vec<ExtendedRectangle>,
    z: Vec<ExtendedRectangle>,
) -> FailureReport {
    let per_rectangle: Vec<RectangleFailure> = x
        .iter()
        .map(|r| (r, channel.p_x_eff()))
        .chain(z.iter().map(|r| (r, channel.p_z_eff())))
        .enumerate()
        .map(|(id, (r, p))| RectangleFailure {
            id,
            error_type: r.error_type,
            location_count: r.location_count,
            qubits: r.qubits().len(),
            p_fail: rectangle_failure(r.location_count, p),
        })
        .collect();
    let of_type = |t: ErrorType| {
        any_of(
            per_rectangle
                .iter()
                .filter(|r| r.error_type == t)
                .map(|r| r.p_fail),
        )
    };
    let p_fail_x = of_type(ErrorType::X);
    let p_fail_z = of_type(ErrorType::Z);
    FailureReport {
        p_fail_total: 1.0 - (1.0 - p_fail_x) * (1.0 - p_fail_z),
        per_rectangle,
        p_fail_x,
        p_fail_z,
        depth: depth(circuit, cost),
        is_lower_bound: true,
    }
}

/// Per-location channel seen by the next level of concatenation.
///
/// Failures are spread evenly over the qubit-slots of the circuit's logical
/// operations (a CNOT fills two). A failed super-extended rectangle counts
/// once for every qubit it spans. Y is zero because the code keeps X and Z
/// failures apart.
pub fn logical_channel(report: &FailureReport, circuit: &LogicalCircuit) -> Result<PauliChannel> {
    let slots = circuit.operation_slots();
    if slots == 0 {
        return Err(AceError::MissingAttribution(
            "circuit has no logical operations to attribute failures to".into(),
        ));
    }
    let p_x = report.qubit_weighted_failures(ErrorType::X) / slots as f64;
    let p_z = report.qubit_weighted_failures(ErrorType::Z) / slots as f64;
    PauliChannel::new(p_x.min(1.0), 0.0, p_z.min(1.0 - p_x.min(1.0)))
}
