use std::collections::HashSet;

use crate::circuit::{
    conventional_schedule, extract_rectangles, parse_circuit, serialize_circuit, CostModel,
    ErrorType, OpKind,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = crate::circuit::templates::random(&mut rng, 8, 20, true);
        let text = serialize_circuit(&c);
        let back = parse_circuit(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(serialize_circuit(&back), text);
    }

    #[test]
    fn rectangles_cover_every_gate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bare = crate::circuit::templates::random(&mut rng, 5, 10, false);
        let c = conventional_schedule(&bare).unwrap();
        let cost = CostModel::default();
        for ty in [ErrorType::X, ErrorType::Z] {
            let covered: HashSet<(usize, usize)> = extract_rectangles(&c, ty, &cost)
                .unwrap()
                .iter()
                .flat_map(|r| r.sites().to_vec())
                .collect();
            for (s, op) in c.ops() {
                if !op.is_correction() {
                    prop_assert!(covered.contains(&(s, op.anchor())), "{ty:?} misses {op} at {s}");
                }
            }
        }
    }

    #[test]
    fn conventional_rectangles_are_minimal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bare = crate::circuit::templates::random(&mut rng, 5, 10, false);
        // no CNOTs: a CNOT merges its operands by design
        let rows = bare
            .steps()
            .iter()
            .map(|step| step.iter().filter(|op| op.kind() != OpKind::Cnot).copied().collect())
            .collect();
        let bare = crate::circuit::LogicalCircuit::new(bare.n_qubits(), rows).unwrap();
        let c = conventional_schedule(&bare).unwrap();
        for ty in [ErrorType::X, ErrorType::Z] {
            let rects = extract_rectangles(&c, ty, &CostModel::default()).unwrap();
            for (i, r) in rects.iter().enumerate() {
                prop_assert!(!r.is_super);
                let kinds: Vec<OpKind> =
                    r.sites().iter().map(|&(s, q)| c.op_at(s, q).kind()).collect();
                let own = kinds.iter().filter(|&&k| k == OpKind::correction_of(ty)).count();
                let gates = kinds.iter().filter(|k| !k.is_correction()).count();
                prop_assert_eq!((own, gates), (2, 1));
                // neighbours on a qubit share exactly their common block
                if let Some(next) = rects.get(i + 1).filter(|n| n.qubits() == r.qubits()) {
                    let a: HashSet<_> = r.sites().iter().collect();
                    let shared: Vec<_> = next.sites().iter().filter(|s| a.contains(s)).collect();
                    prop_assert_eq!(shared.len(), 1);
                    let (s, q) = *shared[0];
                    prop_assert_eq!(c.op_at(s, q).kind(), OpKind::correction_of(ty));
                }
            }
        }
    }
}
