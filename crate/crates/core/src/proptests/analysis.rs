use crate::ace::Scheme;
use crate::analysis::{concatenated_failure, Setup};
use crate::circuit::{templates, LogicalCircuit, LogicalOp};
use crate::noise::channel_from_total_and_alpha;

fn p_grid() -> Vec<f64> {
    (0..=40)
        .map(|i| 10f64.powf(-7.0 + 5.0 * i as f64 / 40.0))
        .collect()
}

#[test]
fn failure_grows_with_total_rate() {
    let setup = Setup::default();
    let memory = templates::memory5();
    for alpha in [1.0, 10.0, 1000.0] {
        for scheme in Scheme::ALL {
            for levels in [1, 2] {
                let mut last = 0.0;
                for p in p_grid() {
                    let ch = channel_from_total_and_alpha(p, alpha).unwrap();
                    let f = concatenated_failure(&memory, &ch, &setup, &vec![scheme; levels])
                        .unwrap()
                        .p_fail_total();
                    assert!(
                        f >= last,
                        "{scheme} levels={levels} alpha={alpha} p={p}: {f} < {last}"
                    );
                    last = f;
                }
            }
        }
    }
}

#[test]
fn conventional_wins_without_asymmetry() {
    let setup = Setup::default();
    let memory = templates::memory5();
    for levels in [1, 2] {
        // above ~1e-3 the long ACE rectangles saturate and the order flips
        for p in p_grid().into_iter().filter(|&p| p <= 1e-4) {
            let ch = channel_from_total_and_alpha(p, 1.0).unwrap();
            let f = |s| {
                concatenated_failure(&memory, &ch, &setup, &vec![s; levels])
                    .unwrap()
                    .p_fail_total()
            };
            let (conv, ace) = (f(Scheme::Conventional), f(Scheme::Ace));
            assert!(conv <= ace, "levels={levels} p={p}: {conv} > {ace}");
        }
    }
}

#[test]
fn two_levels_over_one_wait_reduce_to_one_level() {
    let setup = Setup::default();
    let wait = LogicalCircuit::new(1, vec![vec![LogicalOp::Wait(0)]]).unwrap();
    for alpha in [1.0, 10.0, 1e4] {
        let ch = channel_from_total_and_alpha(1e-4, alpha).unwrap();
        for lower in Scheme::ALL {
            for upper in Scheme::ALL {
                let two = concatenated_failure(&wait, &ch, &setup, &[lower, upper]).unwrap();
                let level1 = two.per_level[0].logical_channel;
                let one = concatenated_failure(&wait, &level1, &setup, &[upper]).unwrap();
                assert_eq!(
                    two.top().report.per_rectangle,
                    one.top().report.per_rectangle
                );
                assert_eq!(two.p_fail_total(), one.p_fail_total());
            }
        }
    }
}
