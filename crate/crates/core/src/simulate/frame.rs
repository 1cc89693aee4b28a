use std::ops::BitXor;

use crate::error::{AceError, Result};

/// Physical-level gates that a Pauli frame can be pushed through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhysicalGate {
    Wait(usize),
    H(usize),
    S(usize),
    T(usize),
    Cnot { control: usize, target: usize },
}

/// X and Z components of a Pauli error, one bit per physical qubit. A qubit
/// with both bits set carries a Y.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliFrame {
    pub x_bits: Vec<bool>,
    pub z_bits: Vec<bool>,
}

impl PauliFrame {
    pub fn identity(n: usize) -> Self {
        Self {
            x_bits: vec![false; n],
            z_bits: vec![false; n],
        }
    }

    pub fn from_bits(x_bits: Vec<bool>, z_bits: Vec<bool>) -> Self {
        assert_eq!(x_bits.len(), z_bits.len(), "frame halves differ in length");
        Self { x_bits, z_bits }
    }

    pub fn n_qubits(&self) -> usize {
        self.x_bits.len()
    }

    pub fn has_x_component(&self) -> bool {
        self.x_bits.iter().any(|&b| b)
    }

    pub fn has_z_component(&self) -> bool {
        self.z_bits.iter().any(|&b| b)
    }
}

impl BitXor for &PauliFrame {
    type Output = PauliFrame;

    fn bitxor(self, rhs: &PauliFrame) -> PauliFrame {
        let xor = |a: &[bool], b: &[bool]| a.iter().zip(b).map(|(p, q)| p ^ q).collect();
        PauliFrame {
            x_bits: xor(&self.x_bits, &rhs.x_bits),
            z_bits: xor(&self.z_bits, &rhs.z_bits),
        }
    }
}

/// Conjugates the frame by `gate`, dropping phases.
pub fn propagate_pauli(gate: PhysicalGate, frame: &PauliFrame) -> Result<PauliFrame> {
    let n = frame.n_qubits();
    let check = |q: usize| {
        if q < n {
            Ok(())
        } else {
            Err(AceError::QubitOutOfRange {
                qubit: q,
                n_qubits: n,
            })
        }
    };
    let mut out = frame.clone();
    match gate {
        PhysicalGate::Wait(q) => check(q)?,
        PhysicalGate::H(q) => {
            check(q)?;
            std::mem::swap(&mut out.x_bits[q], &mut out.z_bits[q]);
        }
        PhysicalGate::S(q) => {
            check(q)?;
            out.z_bits[q] ^= out.x_bits[q];
        }
        PhysicalGate::T(_) => return Err(AceError::NonClifford("T".into())),
        PhysicalGate::Cnot { control, target } => {
            check(control)?;
            check(target)?;
            if control == target {
                return Err(AceError::ControlEqualsTarget(control));
            }
            out.x_bits[target] ^= out.x_bits[control];
            out.z_bits[control] ^= out.z_bits[target];
        }
    }
    Ok(out)
}
