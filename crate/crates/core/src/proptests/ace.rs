use crate::ace::{apply_ace, rebalance, AcePolicy, Replacement};
use crate::analysis::circuit_failure;
use crate::circuit::{check_mixing_protection, conventional_schedule, depth, CostModel, OpKind};
use crate::noise::channel_from_total_and_alpha;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn policy(wait: bool) -> AcePolicy {
    AcePolicy {
        replacement: if wait {
            Replacement::RemoveToWait
        } else {
            Replacement::ReplaceWithZec
        },
        ..AcePolicy::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn idempotent(seed in any::<u64>(), wait in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = conventional_schedule(&crate::circuit::templates::random(&mut rng, 5, 10, false)).unwrap();
        let once = apply_ace(&c, &policy(wait)).unwrap();
        prop_assert_eq!(apply_ace(&once, &policy(wait)).unwrap(), once);
    }

    #[test]
    fn keeps_z_and_guards_mixing_gates(seed in any::<u64>(), wait in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bare = crate::circuit::templates::random(&mut rng, 5, 10, false);
        let c = conventional_schedule(&bare).unwrap();
        let out = apply_ace(&c, &policy(wait)).unwrap();
        prop_assert!(out.count(OpKind::Zec) >= c.count(OpKind::Zec));
        prop_assert!(out.count(OpKind::Xec) <= c.count(OpKind::Xec));
        prop_assert!(check_mixing_protection(&out).is_ok());
        // same logical gates in the same order; WAIT fill only adds idles
        for q in 0..bare.n_qubits() {
            let gates = |c: &crate::circuit::LogicalCircuit| {
                c.timeline(q)
                    .filter(|op| !op.is_correction() && op.kind() != OpKind::Wait)
                    .copied()
                    .collect::<Vec<_>>()
            };
            prop_assert_eq!(gates(&out), gates(&bare));
        }
    }

    #[test]
    fn never_deepens(
        seed in any::<u64>(),
        wait in any::<bool>(),
        d_zec in 1usize..20,
        extra in 0usize..20,
        d_gate in 1usize..5,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = conventional_schedule(&crate::circuit::templates::random(&mut rng, 5, 10, false)).unwrap();
        let cost = CostModel { d_zec, d_xec: d_zec + extra, d_gate, ..CostModel::default() };
        let out = apply_ace(&c, &policy(wait)).unwrap();
        prop_assert!(depth(&out, &cost).total <= depth(&c, &cost).total);
    }

    #[test]
    fn rebalanced_x_never_dominates_unless_fully_restored(
        seed in any::<u64>(),
        log_alpha in 0.0f64..4.0,
        log_p in -6.0f64..-2.0,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let conventional =
            conventional_schedule(&crate::circuit::templates::random(&mut rng, 4, 8, false)).unwrap();
        let ace = apply_ace(&conventional, &AcePolicy::default()).unwrap();
        let ch = channel_from_total_and_alpha(10f64.powf(log_p), 10f64.powf(log_alpha)).unwrap();
        let cost = CostModel::default();
        let out = rebalance(&ace, &ch, &cost).unwrap();
        let r = circuit_failure(&out, &ch, &cost).unwrap();
        prop_assert!(r.p_fail_x <= r.p_fail_z || out == conventional);
    }
}
