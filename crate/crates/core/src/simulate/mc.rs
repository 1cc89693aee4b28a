//! Monte Carlo sampling of physical faults against the rectangle rule.
//!
//! Every physical location of the circuit draws an independent I/X/Y/Z fault.
//! A shot fails in type X when some X rectangle holds two or more faults with
//! an X component, and likewise for Z. A fault in a correction block shared
//! by two rectangles is drawn once and counted in both, which is exactly the
//! dependence the analytic product over rectangles ignores.
//!
//! Generator contract: shot `i` draws from ChaCha8 seeded with `seed` on
//! stream `i`. Shots are independent of how they are split across threads.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::format_sig9;
use crate::circuit::{extract_rectangles, CostModel, ErrorType, LogicalCircuit};
use crate::error::{AceError, Result};
use crate::noise::PauliChannel;

const CHUNK: u64 = 1 << 14;

pub const MC_CSV_HEADER: &str =
    "alpha,p_total,scheme,levels,depth,p_fail_x,p_fail_z,p_fail_total,shots,seed,ci_halfwidth";

#[derive(Debug, Clone, PartialEq)]
pub struct MCEstimate {
    pub shots: u64,
    pub seed: u64,
    pub failures_x: u64,
    pub failures_z: u64,
    pub failures_total: u64,
    pub channel: PauliChannel,
}

impl MCEstimate {
    pub fn rate_x(&self) -> f64 {
        self.failures_x as f64 / self.shots as f64
    }

    pub fn rate_z(&self) -> f64 {
        self.failures_z as f64 / self.shots as f64
    }

    pub fn rate_total(&self) -> f64 {
        self.failures_total as f64 / self.shots as f64
    }

    /// Binomial standard error of a rate estimated from these shots.
    pub fn standard_error(&self, rate: f64) -> f64 {
        (rate * (1.0 - rate) / self.shots as f64).sqrt()
    }

    /// Half-width of the normal-approximation 95% interval around `rate`.
    pub fn ci_halfwidth(&self, rate: f64) -> f64 {
        1.96 * self.standard_error(rate)
    }

    /// One CSV row in the sweep dialect plus `shots,seed,ci_halfwidth`; the
    /// half-width refers to the total failure rate.
    pub fn csv_line(&self, scheme: &str, levels: usize, depth: usize) -> String {
        let alpha = self.channel.alpha();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            format_sig9(alpha),
            format_sig9(self.channel.p_total()),
            scheme,
            levels,
            depth,
            format_sig9(self.rate_x()),
            format_sig9(self.rate_z()),
            format_sig9(self.rate_total()),
            self.shots,
            self.seed,
            format_sig9(self.ci_halfwidth(self.rate_total()))
        )
    }
}

/// Flattened location layout of a circuit and each op's rectangles.
struct Layout {
    // cumulative location counts; op i covers [ends[i-1], ends[i])
    ends: Vec<u64>,
    x_rects: Vec<Vec<u32>>,
    z_rects: Vec<Vec<u32>>,
    n_x: usize,
    n_z: usize,
}

impl Layout {
    fn new(circuit: &LogicalCircuit, cost: &CostModel) -> Result<Self> {
        let mut index = HashMap::new();
        let mut ends = Vec::new();
        let mut total = 0u64;
        for (s, op) in circuit.ops() {
            index.insert((s, op.anchor()), ends.len());
            total += cost.locations(op.kind()) as u64;
            ends.push(total);
        }
        let members = |t: ErrorType| -> Result<(Vec<Vec<u32>>, usize)> {
            let rects = extract_rectangles(circuit, t, cost)?;
            let mut per_op = vec![Vec::new(); ends.len()];
            for (r, rect) in rects.iter().enumerate() {
                for site in rect.sites() {
                    per_op[index[site]].push(r as u32);
                }
            }
            Ok((per_op, rects.len()))
        };
        let (x_rects, n_x) = members(ErrorType::X)?;
        let (z_rects, n_z) = members(ErrorType::Z)?;
        Ok(Self {
            ends,
            x_rects,
            z_rects,
            n_x,
            n_z,
        })
    }

    fn total(&self) -> u64 {
        self.ends.last().copied().unwrap_or(0)
    }

    fn op_of(&self, location: u64) -> usize {
        self.ends.partition_point(|&e| e <= location)
    }
}

#[derive(Default, Clone, Copy)]
struct Counts {
    x: u64,
    z: u64,
    total: u64,
}

struct Shooter<'a> {
    layout: &'a Layout,
    channel: PauliChannel,
    log_q: f64,
    hits_x: Vec<u8>,
    hits_z: Vec<u8>,
    touched_x: Vec<u32>,
    touched_z: Vec<u32>,
}

impl<'a> Shooter<'a> {
    fn new(layout: &'a Layout, channel: PauliChannel) -> Self {
        Self {
            layout,
            channel,
            log_q: (-channel.p_total()).ln_1p(),
            hits_x: vec![0; layout.n_x],
            hits_z: vec![0; layout.n_z],
            touched_x: Vec::new(),
            touched_z: Vec::new(),
        }
    }

    fn mark(hits: &mut [u8], touched: &mut Vec<u32>, rects: &[u32]) -> bool {
        let mut failed = false;
        for &r in rects {
            let h = &mut hits[r as usize];
            if *h == 0 {
                touched.push(r);
            }
            *h = h.saturating_add(1);
            failed |= *h >= 2;
        }
        failed
    }

    /// Returns (failed X, failed Z) for one shot.
    fn shot(&mut self, rng: &mut ChaCha8Rng) -> (bool, bool) {
        let p_any = self.channel.p_total();
        let total = self.layout.total();
        let (mut fail_x, mut fail_z) = (false, false);
        if p_any > 0.0 {
            let mut pos = 0u64;
            loop {
                if p_any < 1.0 {
                    let u: f64 = 1.0 - rng.gen::<f64>();
                    let gap = (u.ln() / self.log_q).floor();
                    if gap >= (total - pos) as f64 {
                        break;
                    }
                    pos += gap as u64;
                }
                if pos >= total {
                    break;
                }
                let op = self.layout.op_of(pos);
                let v = rng.gen::<f64>() * p_any;
                let has_x = v < self.channel.p_x + self.channel.p_y;
                let has_z = v >= self.channel.p_x;
                if has_x {
                    fail_x |= Self::mark(
                        &mut self.hits_x,
                        &mut self.touched_x,
                        &self.layout.x_rects[op],
                    );
                }
                if has_z {
                    fail_z |= Self::mark(
                        &mut self.hits_z,
                        &mut self.touched_z,
                        &self.layout.z_rects[op],
                    );
                }
                pos += 1;
            }
        }
        for r in self.touched_x.drain(..) {
            self.hits_x[r as usize] = 0;
        }
        for r in self.touched_z.drain(..) {
            self.hits_z[r as usize] = 0;
        }
        (fail_x, fail_z)
    }
}

fn run_chunk(layout: &Layout, channel: PauliChannel, seed: u64, start: u64, end: u64) -> Counts {
    let mut shooter = Shooter::new(layout, channel);
    let mut counts = Counts::default();
    let base = ChaCha8Rng::seed_from_u64(seed);
    for shot in start..end {
        let mut rng = base.clone();
        rng.set_stream(shot);
        let (x, z) = shooter.shot(&mut rng);
        counts.x += x as u64;
        counts.z += z as u64;
        counts.total += (x || z) as u64;
    }
    counts
}

fn estimate(
    circuit: &LogicalCircuit,
    channel: &PauliChannel,
    cost: &CostModel,
    shots: u64,
    seed: u64,
) -> Result<MCEstimate> {
    if shots == 0 {
        return Err(AceError::InvalidParameter(
            "at least one shot is required".into(),
        ));
    }
    cost.validate()?;
    let layout = Layout::new(circuit, cost)?;
    let n_chunks = shots.div_ceil(CHUNK);
    let counts = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            run_chunk(
                &layout,
                *channel,
                seed,
                c * CHUNK,
                ((c + 1) * CHUNK).min(shots),
            )
        })
        .reduce(Counts::default, |a, b| Counts {
            x: a.x + b.x,
            z: a.z + b.z,
            total: a.total + b.total,
        });
    Ok(MCEstimate {
        shots,
        seed,
        failures_x: counts.x,
        failures_z: counts.z,
        failures_total: counts.total,
        channel: *channel,
    })
}

/// Estimates the failure rates of a corrected circuit from `shots` samples.
pub fn mc_estimate(
    circuit: &LogicalCircuit,
    channel: &PauliChannel,
    cost: &CostModel,
    shots: u64,
    seed: u64,
) -> Result<MCEstimate> {
    estimate(circuit, channel, cost, shots, seed)
}

/// [`mc_estimate`] on a dedicated pool of `workers` threads. The counts do
/// not depend on `workers`.
pub fn mc_estimate_with_workers(
    circuit: &LogicalCircuit,
    channel: &PauliChannel,
    cost: &CostModel,
    shots: u64,
    seed: u64,
    workers: usize,
) -> Result<MCEstimate> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| AceError::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    pool.install(|| estimate(circuit, channel, cost, shots, seed))
}
