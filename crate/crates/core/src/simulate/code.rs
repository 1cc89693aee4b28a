//! The Steane [[7,1,3]] code with ideal syndrome extraction.
//!
//! Both stabilizer types use the parity checks of the [7,4] Hamming code, so
//! a single flipped qubit `j` (counting from 1) produces syndrome `j`.
//! Errors are 7-bit masks, qubit `i` in bit `i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::frame::{propagate_pauli, PauliFrame, PhysicalGate};

/// Logical effect of an error after decoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogicalClass {
    I,
    X,
    Y,
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerCode {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub x_stabilizers: Vec<u8>,
    pub z_stabilizers: Vec<u8>,
    pub logical_x: u8,
    pub logical_z: u8,
    /// Correction mask for each syndrome value.
    pub lookup: [u8; 8],
}

fn parity(mask: u8) -> bool {
    mask.count_ones() % 2 == 1
}

impl StabilizerCode {
    pub fn steane() -> Self {
        let rows: Vec<u8> = (0..3)
            .map(|bit| {
                (1..=7u8)
                    .filter(|col| col >> bit & 1 == 1)
                    .fold(0, |m, col| m | 1 << (col - 1))
            })
            .collect();
        let mut lookup = [0u8; 8];
        for (s, entry) in lookup.iter_mut().enumerate().skip(1) {
            *entry = 1 << (s - 1);
        }
        let code = Self {
            n: 7,
            k: 1,
            d: 3,
            x_stabilizers: rows.clone(),
            z_stabilizers: rows,
            logical_x: 0x7f,
            logical_z: 0x7f,
            lookup,
        };
        assert!(code.commutation_holds(), "Steane generators must commute");
        code
    }

    /// Generators commute pairwise, logicals commute with every generator and
    /// anticommute with each other. Same-type Paulis always commute, so only
    /// the X/Z overlaps need checking.
    pub fn commutation_holds(&self) -> bool {
        let commute = |x: u8, z: u8| !parity(x & z);
        let gens_ok = self
            .x_stabilizers
            .iter()
            .all(|&x| self.z_stabilizers.iter().all(|&z| commute(x, z)));
        let logicals_ok = self
            .z_stabilizers
            .iter()
            .all(|&z| commute(self.logical_x, z))
            && self
                .x_stabilizers
                .iter()
                .all(|&x| commute(x, self.logical_z))
            && !commute(self.logical_x, self.logical_z);
        let lookup_ok = self.lookup.iter().all(|c| c.count_ones() <= 1);
        gens_ok && logicals_ok && lookup_ok
    }

    fn syndrome(checks: &[u8], error: u8) -> usize {
        checks
            .iter()
            .enumerate()
            .map(|(i, &c)| (parity(c & error) as usize) << i)
            .sum()
    }

    /// Syndrome of an X-type error mask, read by the Z stabilizers.
    pub fn x_syndrome(&self, error: u8) -> usize {
        Self::syndrome(&self.z_stabilizers, error)
    }

    /// Syndrome of a Z-type error mask, read by the X stabilizers.
    pub fn z_syndrome(&self, error: u8) -> usize {
        Self::syndrome(&self.x_stabilizers, error)
    }

    /// Whether an X-type error decodes to a logical X.
    fn x_part_fails(&self, error: u8) -> bool {
        let residual = error ^ self.lookup[self.x_syndrome(error)];
        parity(residual & self.logical_z)
    }

    fn z_part_fails(&self, error: u8) -> bool {
        let residual = error ^ self.lookup[self.z_syndrome(error)];
        parity(residual & self.logical_x)
    }

    /// Decodes the error `(x_mask, z_mask)` and returns its logical effect.
    pub fn decode(&self, x_mask: u8, z_mask: u8) -> LogicalClass {
        match (self.x_part_fails(x_mask), self.z_part_fails(z_mask)) {
            (false, false) => LogicalClass::I,
            (true, false) => LogicalClass::X,
            (false, true) => LogicalClass::Z,
            (true, true) => LogicalClass::Y,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub identity_trivial: bool,
    pub weight1_total: usize,
    pub weight1_corrected: usize,
    pub weight2_x_total: usize,
    pub weight2_x_logical: usize,
    pub weight2_z_total: usize,
    pub weight2_z_logical: usize,
}

impl DistanceReport {
    /// Every single-qubit error corrected and some two-qubit error not.
    pub fn passed(&self) -> bool {
        self.identity_trivial
            && self.weight1_corrected == self.weight1_total
            && self.weight2_x_logical > 0
            && self.weight2_z_logical > 0
    }
}

/// Injects every weight-1 Pauli error and every weight-2 same-type error.
pub fn verify_distance3(code: &StabilizerCode) -> DistanceReport {
    let identity_trivial =
        code.x_syndrome(0) == 0 && code.z_syndrome(0) == 0 && code.decode(0, 0) == LogicalClass::I;
    let mut weight1_total = 0;
    let mut weight1_corrected = 0;
    for q in 0..code.n {
        let m = 1u8 << q;
        for (x, z) in [(m, 0), (0, m), (m, m)] {
            weight1_total += 1;
            if code.decode(x, z) == LogicalClass::I {
                weight1_corrected += 1;
            }
        }
    }
    let pairs: Vec<u8> = (0..code.n)
        .flat_map(|a| (a + 1..code.n).map(move |b| (1u8 << a) | (1u8 << b)))
        .collect();
    let weight2_x_logical = pairs
        .iter()
        .filter(|&&m| code.decode(m, 0) != LogicalClass::I)
        .count();
    let weight2_z_logical = pairs
        .iter()
        .filter(|&&m| code.decode(0, m) != LogicalClass::I)
        .count();
    DistanceReport {
        identity_trivial,
        weight1_total,
        weight1_corrected,
        weight2_x_total: pairs.len(),
        weight2_x_logical,
        weight2_z_total: pairs.len(),
        weight2_z_logical,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypePreservationReport {
    pub z_subsets: usize,
    pub z_preserved: usize,
    pub x_subsets: usize,
    pub x_preserved: usize,
    pub propagation_trials: usize,
    pub propagation_preserved: usize,
}

impl TypePreservationReport {
    pub fn passed(&self) -> bool {
        self.z_preserved == self.z_subsets
            && self.x_preserved == self.x_subsets
            && self.propagation_preserved == self.propagation_trials
    }
}

/// Checks that pure-Z errors decode to I or logical Z only, pure-X errors to
/// I or logical X only, and that pure-Z frames on a data block plus ancilla
/// block stay X-free through random CNOT/WAIT circuits.
pub fn verify_type_preservation(code: &StabilizerCode) -> TypePreservationReport {
    verify_type_preservation_with(code, 1000, 20, 0x5eed)
}

/// [`verify_type_preservation`] with an explicit number of random circuits,
/// their depth and the generator seed.
pub fn verify_type_preservation_with(
    code: &StabilizerCode,
    trials: usize,
    depth: usize,
    seed: u64,
) -> TypePreservationReport {
    let subsets = 1usize << code.n;
    let z_preserved = (0..subsets)
        .filter(|&m| matches!(code.decode(0, m as u8), LogicalClass::I | LogicalClass::Z))
        .count();
    let x_preserved = (0..subsets)
        .filter(|&m| matches!(code.decode(m as u8, 0), LogicalClass::I | LogicalClass::X))
        .count();

    let n_phys = 2 * code.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut propagation_preserved = 0;
    for _ in 0..trials {
        let z_bits = (0..n_phys).map(|_| rng.gen_bool(0.5)).collect();
        let mut frame = PauliFrame::from_bits(vec![false; n_phys], z_bits);
        for _ in 0..depth {
            let gate = if rng.gen_bool(0.5) {
                PhysicalGate::Wait(rng.gen_range(0..n_phys))
            } else {
                let control = rng.gen_range(0..n_phys);
                let target = (control + rng.gen_range(1..n_phys)) % n_phys;
                PhysicalGate::Cnot { control, target }
            };
            frame = propagate_pauli(gate, &frame).expect("valid Clifford gate");
        }
        if !frame.has_x_component() {
            propagation_preserved += 1;
        }
    }
    TypePreservationReport {
        z_subsets: subsets,
        z_preserved,
        x_subsets: subsets,
        x_preserved,
        propagation_trials: trials,
        propagation_preserved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_rows() {
        let code = StabilizerCode::steane();
        // columns {1,3,5,7}, {2,3,6,7}, {4,5,6,7}
        assert_eq!(code.x_stabilizers, vec![0b1010101, 0b1100110, 0b1111000]);
        for q in 0..7 {
            assert_eq!(code.x_syndrome(1 << q), q + 1);
        }
    }

    #[test]
    fn distance_three() {
        let report = verify_distance3(&StabilizerCode::steane());
        assert!(report.passed());
        assert_eq!((report.weight1_total, report.weight1_corrected), (21, 21));
        // every same-type pair is miscorrected into a logical error
        assert_eq!(
            (report.weight2_x_logical, report.weight2_z_logical),
            (21, 21)
        );
    }

    #[test]
    fn types_preserved() {
        let report = verify_type_preservation(&StabilizerCode::steane());
        assert!(report.passed());
        assert_eq!(report.z_subsets, 128);
    }

    #[test]
    fn broken_code_is_flagged() {
        let mut code = StabilizerCode::steane();
        code.logical_z = 0b0000011;
        assert!(!code.commutation_holds());
    }
}
