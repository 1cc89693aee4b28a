//! Extended rectangles.
//!
//! For one error type, each qubit's timeline is cut at the correction blocks
//! of that type. A segment runs from one cut through the next, both bounding
//! blocks included, so neighbouring segments share one block. The circuit
//! start and end act as virtual cuts. Segments whose interiors meet at a CNOT
//! are merged into one super-extended rectangle.

use std::collections::{BTreeMap, HashSet};

use super::{CostModel, ErrorType, LogicalCircuit, LogicalOp, OpKind};
use crate::error::{AceError, Result};

/// Steps `first..=last` of one qubit's timeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub qubit: usize,
    pub first: usize,
    pub last: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedRectangle {
    pub error_type: ErrorType,
    pub segments: Vec<Segment>,
    pub location_count: usize,
    pub is_super: bool,
    sites: Vec<(usize, usize)>,
}

impl ExtendedRectangle {
    /// Distinct qubits, ascending.
    pub fn qubits(&self) -> Vec<usize> {
        let mut qs: Vec<usize> = self.segments.iter().map(|s| s.qubit).collect();
        qs.dedup();
        qs
    }

    /// Ops inside the rectangle as `(step, anchor qubit)`, each listed once.
    pub fn sites(&self) -> &[(usize, usize)] {
        &self.sites
    }

    fn key(&self) -> (usize, usize) {
        let s = self.segments[0];
        (s.qubit, s.first)
    }
}

/// Checks that every H, S and T has both correction types in the run of
/// correction blocks directly before and directly after it. The circuit
/// boundary counts as both.
pub fn check_mixing_protection(circuit: &LogicalCircuit) -> Result<()> {
    for q in 0..circuit.n_qubits() {
        for s in 0..circuit.n_steps() {
            let op = circuit.op_at(s, q);
            if !op.is_mixing() {
                continue;
            }
            let before = (0..s).rev().map(|t| circuit.op_at(t, q));
            let after = (s + 1..circuit.n_steps()).map(|t| circuit.op_at(t, q));
            for (side, run) in [("before", run_kinds(before)), ("after", run_kinds(after))] {
                if let Some(kinds) = run {
                    if !(kinds.contains(&OpKind::Xec) && kinds.contains(&OpKind::Zec)) {
                        return Err(AceError::UnsupportedCircuit(format!(
                            "{op} at step {s} lacks X and Z correction {side} it"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

// Kinds in the leading run of correction ops; `None` when the run reaches the
// circuit boundary.
fn run_kinds<'a>(mut ops: impl Iterator<Item = &'a LogicalOp>) -> Option<HashSet<OpKind>> {
    let mut kinds = HashSet::new();
    loop {
        match ops.next() {
            None => return None,
            Some(op) if op.is_correction() => {
                kinds.insert(op.kind());
            }
            Some(_) => return Some(kinds),
        }
    }
}

/// Rectangles of `error_type`, ordered by lowest qubit and then start step.
///
/// Fails when a mixing gate is not fenced by both correction types, since the
/// rectangle of such a gate would mix error types.
pub fn extract_rectangles(
    circuit: &LogicalCircuit,
    error_type: ErrorType,
    cost: &CostModel,
) -> Result<Vec<ExtendedRectangle>> {
    check_mixing_protection(circuit)?;
    Ok(extract_rectangles_unchecked(circuit, error_type, cost))
}

/// Like [`extract_rectangles`] without the mixing-gate check. Errors crossing
/// an unfenced mixing gate are treated as if they kept their type, which is
/// the idealized picture of a schedule with no X correction at all.
pub fn extract_rectangles_unchecked(
    circuit: &LogicalCircuit,
    error_type: ErrorType,
    cost: &CostModel,
) -> Vec<ExtendedRectangle> {
    let couplings = cnot_couplings(circuit);
    build(circuit, error_type, cost, couplings.into_iter())
}

fn cnot_couplings(circuit: &LogicalCircuit) -> Vec<(usize, usize, usize)> {
    circuit
        .ops()
        .filter_map(|(s, op)| match *op {
            LogicalOp::Cnot { control, target } => Some((s, control, target)),
            _ => None,
        })
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn build(
    circuit: &LogicalCircuit,
    error_type: ErrorType,
    cost: &CostModel,
    couplings: impl Iterator<Item = (usize, usize, usize)>,
) -> Vec<ExtendedRectangle> {
    let n_steps = circuit.n_steps();
    let cut_kind = OpKind::correction_of(error_type);
    let mut segments: Vec<Segment> = Vec::new();
    // segment owning the interior slot (step, qubit)
    let mut owner = vec![vec![usize::MAX; circuit.n_qubits()]; n_steps];

    #[allow(clippy::needless_range_loop)] // owner is indexed [step][qubit]
    for q in 0..circuit.n_qubits() {
        let mut cuts: Vec<isize> = vec![-1];
        cuts.extend(
            (0..n_steps)
                .filter(|&s| circuit.op_at(s, q).kind() == cut_kind)
                .map(|s| s as isize),
        );
        cuts.push(n_steps as isize);
        for pair in cuts.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let interior = (a + 1) as usize..b as usize;
            let virtual_edge = a < 0 || b == n_steps as isize;
            let has_ops = interior
                .clone()
                .any(|s| !circuit.op_at(s, q).is_correction());
            // a boundary stretch holding only corrections protects nothing
            if virtual_edge && !has_ops {
                continue;
            }
            let first = a.max(0) as usize;
            let last = (b as usize).min(n_steps - 1);
            if first > last {
                continue;
            }
            let id = segments.len();
            segments.push(Segment {
                qubit: q,
                first,
                last,
            });
            for s in interior {
                owner[s][q] = id;
            }
        }
    }

    let mut parent: Vec<usize> = (0..segments.len()).collect();
    for (s, control, target) in couplings {
        let (a, b) = (owner[s][control], owner[s][target]);
        if a != usize::MAX && b != usize::MAX {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for id in 0..segments.len() {
        let root = find(&mut parent, id);
        groups.entry(root).or_default().push(id);
    }

    let mut rects: Vec<ExtendedRectangle> = groups
        .into_values()
        .map(|ids| {
            let mut segs: Vec<Segment> = ids.iter().map(|&i| segments[i]).collect();
            segs.sort();
            let mut seen = HashSet::new();
            let mut sites = Vec::new();
            let mut location_count = 0;
            for seg in &segs {
                for s in seg.first..=seg.last {
                    let op = circuit.op_at(s, seg.qubit);
                    if seen.insert((s, op.anchor())) {
                        sites.push((s, op.anchor()));
                        location_count += cost.locations(op.kind());
                    }
                }
            }
            sites.sort();
            let is_super = segs.iter().any(|s| s.qubit != segs[0].qubit);
            ExtendedRectangle {
                error_type,
                segments: segs,
                location_count,
                is_super,
                sites,
            }
        })
        .collect();
    rects.sort_by_key(ExtendedRectangle::key);
    rects
}
