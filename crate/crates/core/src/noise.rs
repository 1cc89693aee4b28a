//! Decoherence-derived Pauli channels.
//!
//! Amplitude damping (time scale `T1`) and pure dephasing (time scale `T2`)
//! acting for the duration of one physical location are twirled into a Pauli
//! channel. Only the diagonal coefficients are kept, which gives
//!
//! ```text
//! p_x = p_y = (1 - e^{-t/T1}) / 4
//! p_z       = (1 + e^{-t/T1} - 2 e^{-t/(2 T1) - 2 t/T2}) / 4
//! ```
//!
//! Y faults flip both the bit and the phase, so they count toward both the
//! X-type and the Z-type effective rate. The asymmetry `alpha` is the ratio of
//! the effective Z-type rate to the effective X-type rate; for `t << T2 << T1`
//! it approaches `2 T1 / T2`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{AceError, Result};

const NORMALIZATION_TOLERANCE: f64 = 1e-12;

/// Physical decoherence parameters, all in seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoherenceParams {
    pub t1: f64,
    pub t2: f64,
    pub gate_time: f64,
}

impl DecoherenceParams {
    pub fn new(t1: f64, t2: f64, gate_time: f64) -> Result<Self> {
        let params = Self { t1, t2, gate_time };
        params.validate()?;
        Ok(params)
    }

    /// `t1, t2 > 0`, `gate_time >= 0` (zero means no evolution) and `t2 <= 2 t1`.
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [("t1", self.t1), ("t2", self.t2)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(AceError::InvalidParameter(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        if !(self.gate_time.is_finite() && self.gate_time >= 0.0) {
            return Err(AceError::InvalidParameter(format!(
                "gate time must be non-negative and finite, got {}",
                self.gate_time
            )));
        }
        if self.t2 > 2.0 * self.t1 {
            return Err(AceError::InvalidParameter(format!(
                "t2 = {} exceeds the physical bound 2*t1 = {}",
                self.t2,
                2.0 * self.t1
            )));
        }
        Ok(())
    }
}

/// Single-location Pauli channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliChannel {
    pub p_i: f64,
    pub p_x: f64,
    pub p_y: f64,
    pub p_z: f64,
}

impl PauliChannel {
    /// Builds a channel from its three fault probabilities; `p_i` is the remainder.
    pub fn new(p_x: f64, p_y: f64, p_z: f64) -> Result<Self> {
        for (name, p) in [("p_x", p_x), ("p_y", p_y), ("p_z", p_z)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(AceError::InvalidParameter(format!(
                    "{name} = {p} is not a probability"
                )));
            }
        }
        let total = p_x + p_y + p_z;
        if total > 1.0 + NORMALIZATION_TOLERANCE {
            return Err(AceError::InvalidParameter(format!(
                "fault probabilities sum to {total} > 1"
            )));
        }
        Ok(Self {
            p_i: (1.0 - total).max(0.0),
            p_x,
            p_y,
            p_z,
        })
    }

    /// The noiseless channel.
    pub fn noiseless() -> Self {
        Self {
            p_i: 1.0,
            p_x: 0.0,
            p_y: 0.0,
            p_z: 0.0,
        }
    }

    /// Probability of a fault with an X component (X or Y).
    pub fn p_x_eff(&self) -> f64 {
        self.p_x + self.p_y
    }

    /// Probability of a fault with a Z component (Z or Y).
    pub fn p_z_eff(&self) -> f64 {
        self.p_z + self.p_y
    }

    /// Probability of any fault.
    pub fn p_total(&self) -> f64 {
        self.p_x + self.p_y + self.p_z
    }

    /// `p_z_eff / p_x_eff`, or `f64::INFINITY` when no X-type faults occur.
    pub fn alpha(&self) -> f64 {
        asymmetry(self).unwrap_or(f64::INFINITY)
    }

    pub fn is_normalized(&self) -> bool {
        (self.p_i + self.p_total() - 1.0).abs() <= NORMALIZATION_TOLERANCE
    }
}

impl fmt::Display for PauliChannel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p_i={:.6e} p_x={:.6e} p_y={:.6e} p_z={:.6e} alpha={:.6e}",
            self.p_i,
            self.p_x,
            self.p_y,
            self.p_z,
            self.alpha()
        )
    }
}

/// Twirled T1/T2 channel for one location of duration `gate_time`.
pub fn derive_channel(params: &DecoherenceParams) -> Result<PauliChannel> {
    params.validate()?;
    let t = params.gate_time;
    let relax = t / params.t1;
    let joint = t / (2.0 * params.t1) + 2.0 * t / params.t2;

    // 1 - e^{-a}, computed without cancellation for tiny a
    let p_x = 0.25 * -(-relax).exp_m1();
    // 1 + e^{-a} - 2e^{-b} = (1 - e^{-b}) + e^{-b}(e^{b-a} - 1); both terms are
    // non-negative when t2 <= 4 t1. For long gates e^{b-a} overflows, and the
    // plain difference no longer cancels.
    let gap = joint - relax;
    let tail = if gap < 1.0 {
        (-joint).exp() * gap.exp_m1()
    } else {
        (-relax).exp() - (-joint).exp()
    };
    let p_z = 0.25 * (-(-joint).exp_m1() + tail);
    if p_z < 0.0 {
        return Err(AceError::InvalidParameter(format!(
            "parameters yield negative p_z = {p_z}"
        )));
    }
    PauliChannel::new(p_x, p_x, p_z)
}

/// Ratio of the effective Z-type to the effective X-type fault probability.
pub fn asymmetry(channel: &PauliChannel) -> Result<f64> {
    let x = channel.p_x_eff();
    if x <= 0.0 {
        return Err(AceError::DegenerateChannel);
    }
    Ok(channel.p_z_eff() / x)
}

/// Synthetic channel with total fault rate `p_total` and asymmetry `alpha`.
///
/// Uses the sweep convention `p_x = p_y`, which bounds `alpha >= 1/2`.
pub fn channel_from_total_and_alpha(p_total: f64, alpha: f64) -> Result<PauliChannel> {
    if !(p_total > 0.0 && p_total < 1.0) {
        return Err(AceError::InvalidParameter(format!(
            "p_total = {p_total} must lie in (0, 1)"
        )));
    }
    if !(alpha.is_finite() && alpha >= 0.5) {
        return Err(AceError::InvalidParameter(format!(
            "alpha = {alpha} must be finite and >= 0.5 when p_x = p_y"
        )));
    }
    let p_x = p_total / (2.0 * alpha + 1.0);
    let p_z = (2.0 * alpha - 1.0) * p_x;
    PauliChannel::new(p_x, p_x, p_z)
}

/// A row of the qubit-technology table.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemPreset {
    pub name: String,
    pub t1: f64,
    pub t2: f64,
    /// Decade exponent of the expected asymmetry.
    pub expected_alpha_order: i32,
}

impl SystemPreset {
    /// Decoherence parameters of this system at the given gate time.
    pub fn params(&self, gate_time: f64) -> Result<DecoherenceParams> {
        DecoherenceParams::new(self.t1, self.t2, gate_time)
    }

    /// `2 T1 / T2`, the short-gate asymmetry.
    pub fn short_gate_alpha(&self) -> f64 {
        2.0 * self.t1 / self.t2
    }
}

/// Scientific-notation exponent of `x` (`7.2e6 -> 6`).
pub fn decade_exponent(x: f64) -> i32 {
    let mut e = x.log10().floor() as i32;
    if 10f64.powi(e + 1) <= x {
        e += 1;
    } else if 10f64.powi(e) > x {
        e -= 1;
    }
    e
}

/// Approximate T1/T2 values for five qubit technologies.
pub fn preset_catalog() -> Vec<SystemPreset> {
    let row = |name: &str, t1: f64, t2: f64, order: i32| SystemPreset {
        name: name.to_string(),
        t1,
        t2,
        expected_alpha_order: order,
    };
    vec![
        row("P:Si", 3600.0, 1e-3, 6),
        row("GaAs-quantum-dots", 10e-3, 1e-6, 4),
        row("superconducting-flux", 4e-6, 100e-9, 2),
        row("trapped-ions", 100e-3, 1e-3, 2),
        row("solid-state-NMR", 60.0, 1.0, 2),
    ]
}

pub fn find_preset<'a>(catalog: &'a [SystemPreset], name: &str) -> Result<&'a SystemPreset> {
    catalog
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| AceError::PresetNotFound(name.to_string()))
}

/// Parses a preset table: `name t1_seconds t2_seconds` per line, `#` comments.
///
/// The expected order of each loaded row is the decade of `2 t1 / t2`.
pub fn parse_preset_table(text: &str) -> Result<Vec<SystemPreset>> {
    let mut seen = HashSet::new();
    let mut presets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parse = || -> Result<SystemPreset> {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(AceError::Syntax(format!(
                    "expected `name t1 t2`, found {} fields",
                    fields.len()
                )));
            }
            let number = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| AceError::Syntax(format!("`{s}` is not a number")))
            };
            let (t1, t2) = (number(fields[1])?, number(fields[2])?);
            DecoherenceParams::new(t1, t2, 0.0)?;
            if !seen.insert(fields[0].to_string()) {
                return Err(AceError::InvalidParameter(format!(
                    "duplicate preset name `{}`",
                    fields[0]
                )));
            }
            Ok(SystemPreset {
                name: fields[0].to_string(),
                t1,
                t2,
                expected_alpha_order: decade_exponent(2.0 * t1 / t2),
            })
        };
        presets.push(parse().map_err(|e| e.at_line(idx + 1))?);
    }
    Ok(presets)
}
