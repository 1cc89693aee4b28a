//! Stochastic and exhaustive cross-checks of the analytic model.

mod code;
mod frame;
mod mc;

pub use code::{
    verify_distance3, verify_type_preservation, verify_type_preservation_with, DistanceReport,
    LogicalClass, StabilizerCode, TypePreservationReport,
};
pub use frame::{propagate_pauli, PauliFrame, PhysicalGate};
pub use mc::{mc_estimate, mc_estimate_with_workers, MCEstimate, MC_CSV_HEADER};
