use crate::analysis::{circuit_failure, rectangle_failure};
use crate::circuit::{conventional_schedule, parse_circuit, CostModel};
use crate::noise::{channel_from_total_and_alpha, PauliChannel};
use crate::simulate::{mc_estimate, propagate_pauli, PauliFrame, PhysicalGate};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 6;

fn frame() -> impl Strategy<Value = PauliFrame> {
    (
        prop::collection::vec(any::<bool>(), N),
        prop::collection::vec(any::<bool>(), N),
    )
        .prop_map(|(x, z)| PauliFrame::from_bits(x, z))
}

fn clifford() -> impl Strategy<Value = PhysicalGate> {
    prop_oneof![
        (0..N).prop_map(PhysicalGate::Wait),
        (0..N).prop_map(PhysicalGate::H),
        (0..N).prop_map(PhysicalGate::S),
        (0..N, 1..N).prop_map(|(c, d)| PhysicalGate::Cnot {
            control: c,
            target: (c + d) % N
        }),
    ]
}

proptest! {
    #[test]
    fn propagation_is_linear(a in frame(), b in frame(), gates in prop::collection::vec(clifford(), 1..20)) {
        let (mut pa, mut pb, mut pab) = (a.clone(), b.clone(), &a ^ &b);
        for g in gates {
            pa = propagate_pauli(g, &pa).unwrap();
            pb = propagate_pauli(g, &pb).unwrap();
            pab = propagate_pauli(g, &pab).unwrap();
        }
        prop_assert_eq!(&pa ^ &pb, pab);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn analytic_bounds_mc_from_above(seed in any::<u64>(), log_alpha in 0.0f64..3.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = conventional_schedule(&crate::circuit::templates::random(&mut rng, 3, 4, false)).unwrap();
        let ch = channel_from_total_and_alpha(1e-3, 10f64.powf(log_alpha)).unwrap();
        let cost = CostModel::default();
        let analytic = circuit_failure(&c, &ch, &cost).unwrap().p_fail_total;
        let est = mc_estimate(&c, &ch, &cost, 20_000, seed).unwrap();
        let rate = est.rate_total();
        let sigma = est.standard_error(rate).max(1.0 / 20_000.0);
        prop_assert!(analytic >= rate - 3.0 * sigma, "analytic {analytic} mc {rate}");
    }
}

#[test]
fn identical_seeds_identical_estimates() {
    let c = conventional_schedule(&crate::circuit::templates::memory5()).unwrap();
    let ch = channel_from_total_and_alpha(1e-3, 10.0).unwrap();
    let cost = CostModel::default();
    let a = mc_estimate(&c, &ch, &cost, 50_000, 5).unwrap();
    let b = mc_estimate(&c, &ch, &cost, 50_000, 5).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, mc_estimate(&c, &ch, &cost, 50_000, 6).unwrap());
}

#[test]
fn interval_coverage_over_seeds() {
    // one rectangle of ten locations, so the analytic value is exact
    let c = parse_circuit(&format!("qubits 1\n{}", "WAIT 0\n".repeat(10))).unwrap();
    let cost = CostModel {
        n_transversal: 1,
        ..CostModel::default()
    };
    let ch = PauliChannel::new(0.0, 0.0, 0.01).unwrap();
    let exact = rectangle_failure(10, 0.01);
    let covered = (0..50u64)
        .filter(|&seed| {
            let est = mc_estimate(&c, &ch, &cost, 20_000, seed).unwrap();
            (est.rate_z() - exact).abs() <= est.ci_halfwidth(exact)
        })
        .count();
    assert!(covered >= 45, "covered {covered}/50");
}
