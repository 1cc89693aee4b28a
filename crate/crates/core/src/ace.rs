//! Asymmetric scheduling of X corrections.
//!
//! A schedule is handled internally as a conventional base circuit together
//! with the set of base XEC blocks that are switched off. Switching blocks
//! off, and back on during rebalancing, never touches anything else, so every
//! intermediate schedule stays comparable with the base.
//!
//! Removed blocks leave a hole in their timestep. A step whose every op is a
//! removed XEC is deleted outright, but only in whole rounds: the base circuit
//! runs gate, X, Z, gate, X, Z, ... so deleted steps are taken three at a
//! time and the remaining `k mod 3` of the `k` vacated steps, the last ones in
//! time, are kept and filled. Holes that are not deleted become ZEC or WAIT
//! according to [`Replacement`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::analysis::circuit_failure;
use crate::circuit::{
    check_mixing_protection, conventional_schedule, extract_rectangles_unchecked, CostModel,
    ErrorType, LogicalCircuit, LogicalOp, OpKind,
};
use crate::error::{AceError, Result};
use crate::noise::PauliChannel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Replacement {
    #[default]
    ReplaceWithZec,
    RemoveToWait,
}

impl Replacement {
    fn fill(self, qubit: usize) -> LogicalOp {
        match self {
            Replacement::ReplaceWithZec => LogicalOp::Zec(qubit),
            Replacement::RemoveToWait => LogicalOp::Wait(qubit),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AcePolicy {
    /// Must stay on: dropping X correction next to H, S or T would create
    /// rectangles that mix error types.
    pub keep_around_mixing: bool,
    pub replacement: Replacement,
    /// Largest X rectangle, in locations, tolerated before XEC blocks are
    /// put back.
    pub max_x_rectangle_locations: Option<usize>,
    /// Put XEC blocks back until X failures no longer exceed Z failures.
    pub rebalance: bool,
}

impl Default for AcePolicy {
    fn default() -> Self {
        Self {
            keep_around_mixing: true,
            replacement: Replacement::ReplaceWithZec,
            max_x_rectangle_locations: None,
            rebalance: false,
        }
    }
}

impl AcePolicy {
    pub fn validate(&self) -> Result<()> {
        if !self.keep_around_mixing {
            return Err(AceError::InvalidPolicy(
                "X correction around H, S and T cannot be disabled".into(),
            ));
        }
        if self.max_x_rectangle_locations == Some(0) {
            return Err(AceError::InvalidPolicy(
                "maximum X rectangle size must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// How each level of a concatenated circuit is corrected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Conventional,
    Ace,
    AceRebalanced,
    NoX,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::Conventional,
        Scheme::Ace,
        Scheme::AceRebalanced,
        Scheme::NoX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Conventional => "conventional",
            Scheme::Ace => "ace",
            Scheme::AceRebalanced => "ace_rebalanced",
            Scheme::NoX => "no_x",
        }
    }

    /// Whether a gate or wait at this level is followed by an XEC block in
    /// the level below, given the kind of the op.
    pub fn keeps_x_after(self, kind: OpKind) -> bool {
        match self {
            Scheme::Conventional => true,
            Scheme::Ace | Scheme::AceRebalanced => kind.is_mixing(),
            Scheme::NoX => false,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = AceError;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|scheme| scheme.name() == s || (s == "no-x" && *scheme == Scheme::NoX))
            .ok_or_else(|| AceError::InvalidParameter(format!("unknown scheme `{s}`")))
    }
}

type Slot = (usize, usize);

/// XEC blocks of `circuit` that ACE may drop: not the first or last
/// correction a qubit sees, and not next to a mixing gate once ZEC blocks
/// are skipped.
fn removable_xec(circuit: &LogicalCircuit) -> BTreeSet<Slot> {
    let mut removable = BTreeSet::new();
    let n = circuit.n_steps();
    for q in 0..circuit.n_qubits() {
        let line: Vec<&LogicalOp> = circuit.timeline(q).collect();
        for s in 0..n {
            if line[s].kind() != OpKind::Xec {
                continue;
            }
            let leading = line[..s].iter().all(|op| op.is_correction());
            let trailing = line[s + 1..].iter().all(|op| op.is_correction());
            if leading || trailing {
                continue;
            }
            let before = line[..s].iter().rev().find(|op| op.kind() != OpKind::Zec);
            let after = line[s + 1..].iter().find(|op| op.kind() != OpKind::Zec);
            if before.is_some_and(|op| op.is_mixing()) || after.is_some_and(|op| op.is_mixing()) {
                continue;
            }
            removable.insert((s, q));
        }
    }
    removable
}

fn all_xec(circuit: &LogicalCircuit) -> BTreeSet<Slot> {
    (0..circuit.n_qubits())
        .flat_map(|q| {
            (0..circuit.n_steps())
                .filter(move |&s| circuit.op_at(s, q).kind() == OpKind::Xec)
                .map(move |s| (s, q))
        })
        .collect()
}

/// `base` with the blocks in `removed` switched off, and the base step index
/// of every output step.
fn materialize(
    base: &LogicalCircuit,
    removed: &BTreeSet<Slot>,
    replacement: Replacement,
    round_fill: bool,
) -> (LogicalCircuit, Vec<usize>) {
    let n_q = base.n_qubits();
    let vacated: Vec<usize> = (0..base.n_steps())
        .filter(|&s| (0..n_q).all(|q| removed.contains(&(s, q))))
        .collect();
    let kept_back = if round_fill { vacated.len() % 3 } else { 0 };
    let deleted: BTreeSet<usize> = vacated[..vacated.len() - kept_back]
        .iter()
        .copied()
        .collect();

    let mut rows = Vec::new();
    let mut map = Vec::new();
    for (s, ops) in base.steps().iter().enumerate() {
        if deleted.contains(&s) {
            continue;
        }
        let row = ops
            .iter()
            .map(|op| {
                if removed.contains(&(s, op.anchor())) {
                    replacement.fill(op.anchor())
                } else {
                    *op
                }
            })
            .collect();
        rows.push(row);
        map.push(s);
    }
    (LogicalCircuit::from_rows(n_q, rows), map)
}

// Puts back one removed block inside the largest X rectangle that still has
// one, nearest the rectangle's location-weighted centre. Returns false once
// nothing is left to restore.
fn restore_one(
    base: &LogicalCircuit,
    removed: &mut BTreeSet<Slot>,
    replacement: Replacement,
    cost: &CostModel,
) -> bool {
    if removed.is_empty() {
        return false;
    }
    let (circuit, map) = materialize(base, removed, replacement, true);
    let mut rects = extract_rectangles_unchecked(&circuit, ErrorType::X, cost);
    // stable sort keeps (lowest qubit, earliest step) order among equals
    rects.sort_by_key(|r| std::cmp::Reverse(r.location_count));
    for rect in &rects {
        let candidates: Vec<Slot> = removed
            .iter()
            .copied()
            .filter(|&(s, q)| {
                rect.segments
                    .iter()
                    .any(|seg| seg.qubit == q && map[seg.first] < s && s < map[seg.last])
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let (mut weighted, mut weight) = (0.0, 0.0);
        for &(s, anchor) in rect.sites() {
            let w = cost.locations(circuit.op_at(s, anchor).kind()) as f64;
            weighted += w * map[s] as f64;
            weight += w;
        }
        let centre = weighted / weight;
        let pick = candidates
            .iter()
            .copied()
            .min_by(|&(sa, qa), &(sb, qb)| {
                let da = (sa as f64 - centre).abs();
                let db = (sb as f64 - centre).abs();
                da.total_cmp(&db).then(qa.cmp(&qb)).then(sa.cmp(&sb))
            })
            .expect("candidates is non-empty");
        removed.remove(&pick);
        return true;
    }
    // every hole lies inside some X rectangle, so this is unreachable in
    // practice; fall back to the conventional schedule
    removed.clear();
    true
}

fn largest_x_rectangle(circuit: &LogicalCircuit, cost: &CostModel) -> usize {
    extract_rectangles_unchecked(circuit, ErrorType::X, cost)
        .iter()
        .map(|r| r.location_count)
        .max()
        .unwrap_or(0)
}

fn ensure_scheduled(circuit: &LogicalCircuit) -> Result<()> {
    if !circuit.has_corrections() {
        return Err(AceError::Unscheduled("no correction blocks present".into()));
    }
    check_mixing_protection(circuit)
}

/// Drops every X correction that is neither at a qubit's boundary nor next to
/// a mixing gate.
pub fn apply_ace(circuit: &LogicalCircuit, policy: &AcePolicy) -> Result<LogicalCircuit> {
    apply_ace_with_cost(circuit, policy, &CostModel::default())
}

/// [`apply_ace`] with the X rectangle cap measured under `cost`.
pub fn apply_ace_with_cost(
    circuit: &LogicalCircuit,
    policy: &AcePolicy,
    cost: &CostModel,
) -> Result<LogicalCircuit> {
    policy.validate()?;
    ensure_scheduled(circuit)?;
    let mut removed = removable_xec(circuit);
    if let Some(cap) = policy.max_x_rectangle_locations {
        cap_rectangles(circuit, &mut removed, policy.replacement, cost, cap);
    }
    Ok(materialize(circuit, &removed, policy.replacement, true).0)
}

fn cap_rectangles(
    base: &LogicalCircuit,
    removed: &mut BTreeSet<Slot>,
    replacement: Replacement,
    cost: &CostModel,
    cap: usize,
) {
    loop {
        let (circuit, _) = materialize(base, removed, replacement, true);
        if largest_x_rectangle(&circuit, cost) <= cap
            || !restore_one(base, removed, replacement, cost)
        {
            return;
        }
    }
}

/// Drops every X correction, boundaries and mixing-gate neighbours included.
///
/// The result deliberately violates the mixing-gate precondition; analyze it
/// with the unchecked rectangle extraction.
pub fn remove_all_x(circuit: &LogicalCircuit, replacement: Replacement) -> Result<LogicalCircuit> {
    if !circuit.has_corrections() {
        return Err(AceError::Unscheduled("no correction blocks present".into()));
    }
    Ok(materialize(circuit, &all_xec(circuit), replacement, false).0)
}

/// Greedily puts X corrections back into an ACE schedule until its X failure
/// probability no longer exceeds its Z failure probability, or until the
/// conventional schedule is reached.
pub fn rebalance(
    circuit: &LogicalCircuit,
    channel: &PauliChannel,
    cost: &CostModel,
) -> Result<LogicalCircuit> {
    ensure_scheduled(circuit)?;
    let stripped = circuit.strip_corrections();
    let mut base = crate::circuit::insert_conventional_ec(&stripped)?;
    if circuit.is_correction_step(0) {
        base = crate::circuit::with_leading_ec(&base);
    }
    let removed = removable_xec(&base);
    let replacement = [Replacement::ReplaceWithZec, Replacement::RemoveToWait]
        .into_iter()
        .find(|&r| materialize(&base, &removed, r, true).0 == *circuit)
        .ok_or_else(|| {
            AceError::Unscheduled("input is not an ACE schedule of a conventional circuit".into())
        })?;
    rebalance_from(&base, removed, replacement, channel, cost)
}

fn rebalance_from(
    base: &LogicalCircuit,
    mut removed: BTreeSet<Slot>,
    replacement: Replacement,
    channel: &PauliChannel,
    cost: &CostModel,
) -> Result<LogicalCircuit> {
    loop {
        let (circuit, _) = materialize(base, &removed, replacement, true);
        let report = circuit_failure(&circuit, channel, cost)?;
        if report.p_fail_x <= report.p_fail_z || !restore_one(base, &mut removed, replacement, cost)
        {
            return Ok(circuit);
        }
    }
}

/// Corrects a bare circuit under `scheme`, starting from the conventional
/// schedule with a leading correction pair. `channel` is required for
/// [`Scheme::AceRebalanced`].
pub fn schedule(
    bare: &LogicalCircuit,
    scheme: Scheme,
    policy: &AcePolicy,
    channel: Option<&PauliChannel>,
    cost: &CostModel,
) -> Result<LogicalCircuit> {
    policy.validate()?;
    let base = conventional_schedule(bare)?;
    match scheme {
        Scheme::Conventional => Ok(base),
        Scheme::Ace => apply_ace_with_cost(&base, policy, cost),
        Scheme::AceRebalanced => {
            let channel = channel.ok_or_else(|| {
                AceError::InvalidParameter("rebalancing needs a noise channel".into())
            })?;
            let mut removed = removable_xec(&base);
            if let Some(cap) = policy.max_x_rectangle_locations {
                cap_rectangles(&base, &mut removed, policy.replacement, cost, cap);
            }
            rebalance_from(&base, removed, policy.replacement, channel, cost)
        }
        Scheme::NoX => remove_all_x(&base, policy.replacement),
    }
}
