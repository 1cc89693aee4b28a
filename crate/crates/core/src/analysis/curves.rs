//! Failure-ratio curves over the asymmetry and the block-size calibration
//! built on them.

use rayon::prelude::*;

use super::{concatenated_failure, Setup};
use crate::ace::Scheme;
use crate::circuit::{templates, CostModel, LogicalCircuit};
use crate::error::Result;
use crate::noise::channel_from_total_and_alpha;

/// `(alpha, baseline failure / candidate failure)` for each alpha. Every
/// level uses the same scheme.
pub fn ratio_curve(
    bare: &LogicalCircuit,
    p_total: f64,
    alphas: &[f64],
    levels: usize,
    baseline: Scheme,
    candidate: Scheme,
    setup: &Setup,
) -> Result<Vec<(f64, f64)>> {
    alphas
        .par_iter()
        .map(|&alpha| {
            let channel = channel_from_total_and_alpha(p_total, alpha)?;
            let base = concatenated_failure(bare, &channel, setup, &vec![baseline; levels])?;
            let cand = concatenated_failure(bare, &channel, setup, &vec![candidate; levels])?;
            Ok((alpha, base.p_fail_total() / cand.p_fail_total()))
        })
        .collect()
}

/// Smallest alpha from which the candidate wins (ratio above 1) at every
/// larger grid point. `None` if it does not win at the largest alpha.
pub fn crossover_alpha(curve: &[(f64, f64)]) -> Option<f64> {
    let mut found = None;
    for &(alpha, ratio) in curve.iter().rev() {
        if ratio > 1.0 {
            found = Some(alpha);
        } else {
            break;
        }
    }
    found
}

/// Smallest alpha where the ratio reaches `fraction` of its maximum over the
/// curve. On a curve that keeps creeping upward this marks where the benefit
/// levels off.
pub fn saturation_alpha(curve: &[(f64, f64)], fraction: f64) -> Option<f64> {
    let max = curve
        .iter()
        .map(|&(_, r)| r)
        .fold(f64::NEG_INFINITY, f64::max);
    curve
        .iter()
        .find(|&&(_, r)| r >= fraction * max)
        .map(|&(a, _)| a)
}

/// Bands the fidelity curves are expected to fall in.
#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationTargets {
    pub p_total: f64,
    pub alphas: Vec<f64>,
    /// Single-level crossover band.
    pub crossover: (f64, f64),
    /// Single-level ratio band for alpha at or above `plateau_from`.
    pub plateau: (f64, f64),
    pub plateau_from: f64,
    /// Minimum two-level ratio at the largest alpha.
    pub two_level_min: f64,
    /// Band for where the two-level ratio levels off.
    pub peak_window: (f64, f64),
    pub saturation_fraction: f64,
}

impl Default for CalibrationTargets {
    fn default() -> Self {
        // 61 log-spaced points over [1, 1000]
        let alphas = (0..=60).map(|i| 10f64.powf(i as f64 / 20.0)).collect();
        Self {
            p_total: 1e-5,
            alphas,
            crossover: (3.0, 8.0),
            plateau: (1.5, 2.5),
            plateau_from: 15.0,
            two_level_min: 3.0,
            peak_window: (5.0, 20.0),
            saturation_fraction: 0.95,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationPoint {
    pub block_locations: usize,
    pub crossover: Option<f64>,
    pub plateau_min: f64,
    pub plateau_max: f64,
    pub two_level_large: f64,
    pub two_level_saturation: Option<f64>,
    pub crossover_ok: bool,
    pub plateau_ok: bool,
    pub two_level_ok: bool,
}

impl CalibrationPoint {
    pub fn satisfies_all(&self) -> bool {
        self.crossover_ok && self.plateau_ok && self.two_level_ok
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationReport {
    pub points: Vec<CalibrationPoint>,
    /// First block size meeting every band.
    pub chosen: Option<usize>,
}

/// Evaluates the fidelity bands for each correction-block size in
/// `block_sizes`.
///
/// The single-level curves compare conventional and ACE scheduling of one
/// correction gadget; the two-level curve compares them on the five-wait
/// memory.
pub fn calibrate_block_locations(
    block_sizes: &[usize],
    targets: &CalibrationTargets,
) -> Result<CalibrationReport> {
    let gadget = templates::steane_ec();
    let memory = templates::memory5();
    let points = block_sizes
        .iter()
        .map(|&n| {
            let setup = Setup::with_cost(CostModel::with_block_locations(n));
            let one = ratio_curve(
                &gadget,
                targets.p_total,
                &targets.alphas,
                1,
                Scheme::Conventional,
                Scheme::Ace,
                &setup,
            )?;
            let two = ratio_curve(
                &memory,
                targets.p_total,
                &targets.alphas,
                2,
                Scheme::Conventional,
                Scheme::Ace,
                &setup,
            )?;
            let crossover = crossover_alpha(&one);
            let plateau: Vec<f64> = one
                .iter()
                .filter(|&&(a, _)| a >= targets.plateau_from)
                .map(|&(_, r)| r)
                .collect();
            let plateau_min = plateau.iter().copied().fold(f64::INFINITY, f64::min);
            let plateau_max = plateau.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let two_level_large = two.last().map_or(0.0, |&(_, r)| r);
            let two_level_saturation = saturation_alpha(&two, targets.saturation_fraction);
            let within = |x: f64, (lo, hi): (f64, f64)| lo <= x && x <= hi;
            Ok(CalibrationPoint {
                block_locations: n,
                crossover,
                plateau_min,
                plateau_max,
                two_level_large,
                two_level_saturation,
                crossover_ok: crossover.is_some_and(|a| within(a, targets.crossover)),
                plateau_ok: within(plateau_min, targets.plateau)
                    && within(plateau_max, targets.plateau),
                two_level_ok: two_level_large >= targets.two_level_min
                    && two_level_saturation.is_some_and(|a| within(a, targets.peak_window)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let chosen = points
        .iter()
        .find(|p| p.satisfies_all())
        .map(|p| p.block_locations);
    Ok(CalibrationReport { points, chosen })
}
