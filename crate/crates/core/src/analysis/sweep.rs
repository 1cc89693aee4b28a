use rayon::prelude::*;

use super::{concatenated_failure, format_sig9, Setup};
use crate::ace::Scheme;
use crate::circuit::LogicalCircuit;
use crate::error::{AceError, Result};
use crate::noise::{channel_from_total_and_alpha, PauliChannel};

pub const SWEEP_CSV_HEADER: &str =
    "alpha,p_total,scheme,levels,depth,p_fail_x,p_fail_z,p_fail_total";

/// Grid of sweep points. Rows come out alpha-major, then by total error
/// rate, level count and scheme, each in the order given here.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub alphas: Vec<f64>,
    pub p_totals: Vec<f64>,
    pub schemes: Vec<Scheme>,
    pub levels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub p_total: f64,
    pub scheme: Scheme,
    pub levels: usize,
    pub depth: usize,
    pub p_fail_x: f64,
    pub p_fail_z: f64,
    pub p_fail_total: f64,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            format_sig9(self.alpha),
            format_sig9(self.p_total),
            self.scheme,
            self.levels,
            self.depth,
            format_sig9(self.p_fail_x),
            format_sig9(self.p_fail_z),
            format_sig9(self.p_fail_total)
        )
    }

    /// Header line plus one line per row, each ending in `\n`.
    pub fn to_csv(rows: &[SweepRow]) -> String {
        let mut out = String::from(SWEEP_CSV_HEADER);
        out.push('\n');
        for row in rows {
            out.push_str(&row.csv_line());
            out.push('\n');
        }
        out
    }
}

/// Evaluates every grid point. Points run in parallel; the row order is fixed
/// by the grid alone.
pub fn sweep(spec: &SweepSpec, bare: &LogicalCircuit, setup: &Setup) -> Result<Vec<SweepRow>> {
    if spec.alphas.is_empty()
        || spec.p_totals.is_empty()
        || spec.schemes.is_empty()
        || spec.levels.is_empty()
    {
        return Err(AceError::InvalidParameter(
            "sweep grids must be non-empty".into(),
        ));
    }
    let mut points = Vec::new();
    for &alpha in &spec.alphas {
        for &p_total in &spec.p_totals {
            for &levels in &spec.levels {
                for &scheme in &spec.schemes {
                    points.push((alpha, p_total, levels, scheme));
                }
            }
        }
    }
    points
        .into_par_iter()
        .map(|(alpha, p_total, levels, scheme)| {
            let channel = channel_from_total_and_alpha(p_total, alpha)?;
            let result = concatenated_failure(bare, &channel, setup, &vec![scheme; levels])?;
            Ok(SweepRow {
                alpha,
                p_total,
                scheme,
                levels,
                depth: result.depth.total,
                p_fail_x: result.p_fail_x(),
                p_fail_z: result.p_fail_z(),
                p_fail_total: result.p_fail_total(),
            })
        })
        .collect()
}

/// Conventional correction against dropping X correction altogether.
#[derive(Debug, Clone, PartialEq)]
pub struct NoXComparison {
    pub levels: usize,
    pub depth_conventional: usize,
    pub depth_no_x: usize,
    /// `1 - depth_no_x / depth_conventional`.
    pub depth_reduction: f64,
    pub p_fail_conventional: f64,
    pub p_fail_no_x: f64,
    /// `p_fail_conventional / p_fail_no_x`.
    pub failure_reduction: f64,
    /// X failures of the no-X schedule stay at or below its Z failures.
    pub feasible: bool,
}

pub fn no_x_limit(
    bare: &LogicalCircuit,
    channel: &PauliChannel,
    setup: &Setup,
    levels: usize,
) -> Result<NoXComparison> {
    let conventional =
        concatenated_failure(bare, channel, setup, &vec![Scheme::Conventional; levels])?;
    let no_x = concatenated_failure(bare, channel, setup, &vec![Scheme::NoX; levels])?;
    let top = &no_x.top().report;
    Ok(NoXComparison {
        levels,
        depth_conventional: conventional.depth.total,
        depth_no_x: no_x.depth.total,
        depth_reduction: no_x.depth.reduction_vs(&conventional.depth),
        p_fail_conventional: conventional.p_fail_total(),
        p_fail_no_x: no_x.p_fail_total(),
        failure_reduction: conventional.p_fail_total() / no_x.p_fail_total(),
        feasible: top.p_fail_x <= top.p_fail_z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::templates;

    #[test]
    fn singleton_grid_matches_direct_call() {
        let setup = Setup::default();
        let spec = SweepSpec {
            alphas: vec![10.0],
            p_totals: vec![1e-5],
            schemes: vec![Scheme::Ace],
            levels: vec![2],
        };
        let rows = sweep(&spec, &templates::memory5(), &setup).unwrap();
        let ch = channel_from_total_and_alpha(1e-5, 10.0).unwrap();
        let direct =
            concatenated_failure(&templates::memory5(), &ch, &setup, &[Scheme::Ace; 2]).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].p_fail_total, direct.p_fail_total());
        assert_eq!(rows[0].depth, 1134);
    }

    #[test]
    fn row_order() {
        let spec = SweepSpec {
            alphas: vec![2.0, 1.0],
            p_totals: vec![1e-5],
            schemes: vec![Scheme::NoX, Scheme::Conventional],
            levels: vec![1],
        };
        let rows = sweep(&spec, &templates::memory5(), &Setup::default()).unwrap();
        let order: Vec<(f64, Scheme)> = rows.iter().map(|r| (r.alpha, r.scheme)).collect();
        assert_eq!(
            order,
            vec![
                (2.0, Scheme::NoX),
                (2.0, Scheme::Conventional),
                (1.0, Scheme::NoX),
                (1.0, Scheme::Conventional)
            ]
        );
        assert!(SweepRow::to_csv(&rows).starts_with("alpha,p_total,scheme,levels,depth,"));
        let empty = SweepSpec {
            alphas: vec![],
            ..spec
        };
        assert!(sweep(&empty, &templates::memory5(), &Setup::default()).is_err());
    }

    #[test]
    fn symmetric_noise_rules_out_no_x() {
        let ch = channel_from_total_and_alpha(1e-5, 1.0).unwrap();
        let r = no_x_limit(&templates::memory5(), &ch, &Setup::default(), 2).unwrap();
        assert!(!r.feasible);
        let ch = channel_from_total_and_alpha(1e-5, 1e6).unwrap();
        assert!(
            no_x_limit(&templates::memory5(), &ch, &Setup::default(), 2)
                .unwrap()
                .feasible
        );
    }
}
