use crate::noise::{asymmetry, channel_from_total_and_alpha, derive_channel, DecoherenceParams};
use proptest::prelude::*;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.log10()..hi.log10()).prop_map(|e| 10f64.powf(e))
}

/// (t1, t2) with t2 <= 2 t1, the physical range.
fn times() -> impl Strategy<Value = (f64, f64)> {
    (log_uniform(1e-6, 1e4), 1e-6f64..1.0).prop_map(|(t1, frac)| (t1, 2.0 * t1 * frac))
}

proptest! {
    #[test]
    fn channel_is_normalized((t1, t2) in times(), rel in log_uniform(1e-9, 1e3)) {
        let ch = derive_channel(&DecoherenceParams::new(t1, t2, rel * t2).unwrap()).unwrap();
        prop_assert!((ch.p_i + ch.p_x + ch.p_y + ch.p_z - 1.0).abs() <= 1e-12);
        for p in [ch.p_i, ch.p_x, ch.p_y, ch.p_z] {
            prop_assert!((0.0..=1.0).contains(&p));
        }
    }

    #[test]
    fn rates_grow_with_gate_time((t1, t2) in times()) {
        let at = |t: f64| derive_channel(&DecoherenceParams::new(t1, t2, t).unwrap()).unwrap();
        let lo = (1e-9 * t2).log10();
        let hi = (10.0 * t1).log10();
        let mut last = (0.0, 0.0);
        for i in 0..=200 {
            let t = 10f64.powf(lo + (hi - lo) * i as f64 / 200.0);
            let ch = at(t);
            prop_assert!(ch.p_x >= last.0, "p_x falls at t={t}");
            // p_z rises until dephasing saturates, no earlier than t = T2
            if t <= t2 {
                prop_assert!(ch.p_z >= last.1, "p_z falls at t={t}");
            }
            last = (ch.p_x, ch.p_z);
        }
        // then relaxes towards the fully mixed 1/4
        let peak = (1.0 + 4.0 * t1 / t2).ln() / (2.0 / t2 - 0.5 / t1);
        prop_assert!(peak >= t2);
        prop_assert!(at(peak).p_z >= at(2.0 * peak).p_z);
        prop_assert!((at(1e4 * t1).p_z - 0.25).abs() < 1e-9);
    }

    #[test]
    fn short_gates_give_twice_t1_over_t2(
        t1 in log_uniform(1e-6, 1e4),
        ratio in log_uniform(100.0, 1e8),
        frac in log_uniform(1e-9, 1e-2),
    ) {
        let t2 = t1 / ratio;
        let ch = derive_channel(&DecoherenceParams::new(t1, t2, frac * t2).unwrap()).unwrap();
        let alpha = asymmetry(&ch).unwrap();
        prop_assert!((alpha / (2.0 * t1 / t2) - 1.0).abs() <= 0.02);
    }
}

#[test]
fn synthetic_channel_round_trip() {
    for i in 0..=50 {
        let p = 10f64.powf(-7.0 + 5.0 * i as f64 / 50.0);
        for j in 0..=70 {
            let a = 0.5 * 10f64.powf((2e7f64).log10() * j as f64 / 70.0);
            let ch = channel_from_total_and_alpha(p, a).unwrap();
            let back = asymmetry(&ch).unwrap();
            assert!((back / a - 1.0).abs() <= 1e-12, "alpha {a} -> {back}");
            assert!(
                (ch.p_total() / p - 1.0).abs() <= 1e-12,
                "p {p} -> {}",
                ch.p_total()
            );
            assert!(ch.is_normalized());
        }
    }
}
