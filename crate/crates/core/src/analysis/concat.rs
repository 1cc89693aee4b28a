use super::{circuit_failure, circuit_failure_unchecked, logical_channel, FailureReport};
use crate::ace::{schedule, AcePolicy, Scheme};
use crate::circuit::{
    depth, depth_with, templates, CostModel, DepthReport, LogicalCircuit, LogicalOp,
};
use crate::error::{AceError, Result};
use crate::noise::PauliChannel;

/// Everything besides the circuit and channel that a concatenated analysis
/// depends on.
#[derive(Debug, Clone, PartialEq)]
pub struct Setup {
    pub cost: CostModel,
    pub policy: AcePolicy,
    /// Bare circuit whose schedule implements one correction block one level
    /// down.
    pub gadget: LogicalCircuit,
}

impl Default for Setup {
    fn default() -> Self {
        Self::with_cost(CostModel::default())
    }
}

impl Setup {
    pub fn with_cost(cost: CostModel) -> Self {
        Self {
            cost,
            policy: AcePolicy::default(),
            gadget: templates::steane_ec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LevelResult {
    pub level: usize,
    pub scheme: Scheme,
    /// Channel of one location at this level.
    pub channel: PauliChannel,
    pub circuit: LogicalCircuit,
    pub report: FailureReport,
    /// Channel handed to the next level up.
    pub logical_channel: PauliChannel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcatenationResult {
    pub per_level: Vec<LevelResult>,
    pub levels: usize,
    pub depth: DepthReport,
}

impl ConcatenationResult {
    /// The analysis of the requested circuit itself.
    pub fn top(&self) -> &LevelResult {
        self.per_level.last().expect("at least one level")
    }

    pub fn p_fail_x(&self) -> f64 {
        self.top().report.p_fail_x
    }

    pub fn p_fail_z(&self) -> f64 {
        self.top().report.p_fail_z
    }

    pub fn p_fail_total(&self) -> f64 {
        self.top().report.p_fail_total
    }
}

fn analyze(
    bare: &LogicalCircuit,
    scheme: Scheme,
    channel: &PauliChannel,
    setup: &Setup,
) -> Result<(LogicalCircuit, FailureReport)> {
    let circuit = schedule(bare, scheme, &setup.policy, Some(channel), &setup.cost)?;
    let report = match scheme {
        Scheme::NoX => circuit_failure_unchecked(&circuit, channel, &setup.cost),
        _ => circuit_failure(&circuit, channel, &setup.cost)?,
    };
    Ok((circuit, report))
}

/// Depth of `scheduled` in physical timesteps. With `lower` set, each of
/// its locations is itself built from level-below operations corrected under
/// the given scheme, and the given scheduled gadget implements each
/// correction block.
///
/// A correction block costs the depth of the gadget. A gate or wait costs one
/// gate plus the corrections that follow it one level down.
pub fn composed_depth(
    scheduled: &LogicalCircuit,
    lower: Option<(Scheme, &LogicalCircuit)>,
    cost: &CostModel,
) -> DepthReport {
    let Some((inner, gadget)) = lower else {
        return depth(scheduled, cost);
    };
    let block = depth(gadget, cost).total;
    depth_with(scheduled, 2, |op: &LogicalOp| {
        if op.is_correction() {
            block
        } else {
            let x = if inner.keeps_x_after(op.kind()) {
                cost.d_xec
            } else {
                0
            };
            cost.d_gate + cost.d_zec + x
        }
    })
}

/// Failure analysis of `bare` after `schemes.len()` levels of concatenation.
///
/// Level 1 schedules `bare` with `schemes[0]` under the physical channel.
/// With two levels, the gadget is scheduled with `schemes[0]` and analyzed
/// under the physical channel; its logical channel then drives the analysis
/// of `bare` scheduled with `schemes[1]`.
pub fn concatenated_failure(
    bare: &LogicalCircuit,
    channel: &PauliChannel,
    setup: &Setup,
    schemes: &[Scheme],
) -> Result<ConcatenationResult> {
    setup.cost.validate()?;
    match schemes.len() {
        0 => {
            return Err(AceError::InvalidParameter(
                "at least one level is required".into(),
            ))
        }
        1 | 2 => {}
        n => return Err(AceError::UnsupportedLevels(n)),
    }
    let mut per_level = Vec::with_capacity(schemes.len());
    let mut current = *channel;
    for (i, &scheme) in schemes.iter().enumerate() {
        let target = if i + 1 == schemes.len() {
            bare
        } else {
            &setup.gadget
        };
        let (circuit, report) = analyze(target, scheme, &current, setup)?;
        let out = logical_channel(&report, &circuit)?;
        per_level.push(LevelResult {
            level: i + 1,
            scheme,
            channel: current,
            circuit,
            report,
            logical_channel: out,
        });
        current = out;
    }
    let top = per_level.last().expect("non-empty");
    let lower = (per_level.len() == 2).then(|| (per_level[0].scheme, &per_level[0].circuit));
    let depth = composed_depth(&top.circuit, lower, &setup.cost);
    Ok(ConcatenationResult {
        levels: schemes.len(),
        per_level,
        depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::channel_from_total_and_alpha;

    #[test]
    fn one_level_is_circuit_failure() {
        let setup = Setup::default();
        let ch = channel_from_total_and_alpha(1e-4, 10.0).unwrap();
        let bare = templates::memory5();
        let r = concatenated_failure(&bare, &ch, &setup, &[Scheme::Ace]).unwrap();
        let direct = circuit_failure(
            &schedule(&bare, Scheme::Ace, &setup.policy, None, &setup.cost).unwrap(),
            &ch,
            &setup.cost,
        )
        .unwrap();
        assert_eq!(r.top().report, direct);
        assert_eq!(r.depth.total, 77);
    }

    #[test]
    fn levels_chain_channels() {
        let setup = Setup::default();
        let ch = channel_from_total_and_alpha(1e-5, 100.0).unwrap();
        let r = concatenated_failure(
            &templates::memory5(),
            &ch,
            &setup,
            &[Scheme::Conventional, Scheme::Conventional],
        )
        .unwrap();
        assert_eq!(r.per_level.len(), 2);
        assert_eq!(r.per_level[1].channel, r.per_level[0].logical_channel);
        assert_eq!(r.per_level[1].channel.p_y, 0.0);
        assert_eq!(r.depth.total, 2113);
        assert!(
            concatenated_failure(&templates::memory5(), &ch, &setup, &[Scheme::Ace; 3]).is_err()
        );
        assert!(concatenated_failure(&templates::memory5(), &ch, &setup, &[]).is_err());
    }

    #[test]
    fn gadget_depths() {
        let setup = Setup::default();
        let d = |s| {
            depth(
                &schedule(&setup.gadget, s, &setup.policy, None, &setup.cost).unwrap(),
                &setup.cost,
            )
            .total
        };
        assert_eq!(
            (d(Scheme::Conventional), d(Scheme::Ace), d(Scheme::NoX)),
            (169, 121, 89)
        );
    }
}
