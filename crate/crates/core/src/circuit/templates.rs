//! Built-in benchmark circuits.
//!
//! `memory`, `bell` and `steane_ec` return bare circuits with no correction
//! blocks; schedule them with [`crate::ace::schedule`]. `three-qubit` is already
//! corrected.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{LogicalCircuit, LogicalOp, OpKind};
use crate::error::{AceError, Result};

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 4] = ["memory5", "bell", "three-qubit", "steane-ec"];

/// `k` consecutive waits on one qubit.
pub fn memory(k: usize) -> LogicalCircuit {
    LogicalCircuit::from_rows(1, vec![vec![LogicalOp::Wait(0)]; k])
}

/// The five-location memory string.
pub fn memory5() -> LogicalCircuit {
    memory(5)
}

/// Bell-pair preparation: H on qubit 0, then CNOT 0 -> 1.
pub fn bell() -> LogicalCircuit {
    LogicalCircuit::from_rows(
        2,
        vec![
            vec![LogicalOp::H(0)],
            vec![LogicalOp::Cnot {
                control: 0,
                target: 1,
            }],
        ],
    )
}

/// Three qubits, two CNOTs between X corrections, Z corrections around each
/// CNOT. All three qubits end up in one X-type super-extended rectangle.
pub fn three_qubit() -> LogicalCircuit {
    let all = |f: fn(usize) -> LogicalOp| (0..3).map(f).collect::<Vec<_>>();
    LogicalCircuit::from_rows(
        3,
        vec![
            all(LogicalOp::Xec),
            all(LogicalOp::Zec),
            vec![LogicalOp::Cnot {
                control: 2,
                target: 1,
            }],
            all(LogicalOp::Zec),
            vec![LogicalOp::Cnot {
                control: 0,
                target: 1,
            }],
            all(LogicalOp::Zec),
            all(LogicalOp::Xec),
        ],
    )
}

/// Logical-level outline of one Steane-code syndrome extraction.
///
/// Qubits 0..7 are data, 7..14 the ancilla block. The ancilla is encoded by
/// three Hadamards and three rounds of CNOTs, coupled to the data by a
/// transversal CNOT, then decoded by the mirror image. Scheduling this circuit
/// gives the level-1 implementation of a level-2 correction block.
pub fn steane_ec() -> LogicalCircuit {
    let anc = |i: usize| 7 + i;
    let hadamards: Vec<LogicalOp> = [0, 1, 3].iter().map(|&i| LogicalOp::H(anc(i))).collect();
    let rounds: [[(usize, usize); 3]; 3] = [
        [(3, 4), (1, 5), (0, 6)],
        [(3, 5), (1, 6), (0, 2)],
        [(3, 6), (1, 2), (0, 4)],
    ];
    let round = |r: &[(usize, usize); 3]| -> Vec<LogicalOp> {
        r.iter()
            .map(|&(c, t)| LogicalOp::Cnot {
                control: anc(c),
                target: anc(t),
            })
            .collect()
    };
    let mut rows = vec![hadamards.clone()];
    rows.extend(rounds.iter().map(round));
    rows.push(
        (0..7)
            .map(|i| LogicalOp::Cnot {
                control: i,
                target: anc(i),
            })
            .collect(),
    );
    rows.extend(rounds.iter().rev().map(round));
    rows.push(hadamards);
    LogicalCircuit::from_rows(14, rows)
}

/// Random circuit on up to `max_qubits` qubits and `max_steps` steps for
/// fuzzing. Each step pairs some qubits into CNOTs and gives others a random
/// single-qubit op; correction blocks appear only with `with_ec`.
pub fn random<R: Rng>(
    rng: &mut R,
    max_qubits: usize,
    max_steps: usize,
    with_ec: bool,
) -> LogicalCircuit {
    let n = rng.gen_range(1..=max_qubits.max(1));
    let steps = rng.gen_range(0..=max_steps);
    let mut singles = vec![OpKind::Wait, OpKind::H, OpKind::S, OpKind::T];
    if with_ec {
        singles.extend([OpKind::Xec, OpKind::Zec]);
    }
    let rows = (0..steps)
        .map(|_| {
            let mut qubits: Vec<usize> = (0..n).collect();
            qubits.shuffle(rng);
            let mut ops = Vec::new();
            while let Some(q) = qubits.pop() {
                if !qubits.is_empty() && rng.gen_bool(0.3) {
                    let target = qubits.pop().expect("non-empty");
                    ops.push(LogicalOp::Cnot { control: q, target });
                } else if rng.gen_bool(0.8) {
                    ops.push(LogicalOp::single(
                        *singles.choose(rng).expect("non-empty"),
                        q,
                    ));
                }
            }
            ops
        })
        .collect();
    LogicalCircuit::from_rows(n, rows)
}

pub fn by_name(name: &str) -> Result<LogicalCircuit> {
    match name {
        "memory5" => Ok(memory5()),
        "bell" => Ok(bell()),
        "three-qubit" => Ok(three_qubit()),
        "steane-ec" => Ok(steane_ec()),
        _ => Err(AceError::InvalidParameter(format!(
            "unknown template `{name}` (known: {})",
            NAMES.join(", ")
        ))),
    }
}
