//! Two atoms interacting with a single cavity mode, and the measurement-based
//! protocol that realizes the rational map on a pair of atomic qubits.

pub mod atoms;
pub mod blocks;
pub mod evolution;
pub mod field;
pub mod postselect;
pub mod protocol;

pub use atoms::{gate_U, protocol_gate, step_amplitudes, AtomPairState, Mat2, Mat4};
pub use blocks::{block_eigensystem, block_propagator, BlockEigensystem};
pub use evolution::{
    coherent_approx_fields, evolve_by_blocks, evolve_exact, ApproxChannel, ApproxFields,
    ApproxWarning, FState, JointState,
};
pub use field::{coherent_overlap, poisson_amplitudes, CoherentFieldSpec};
pub use postselect::{
    homodyne_density, homodyne_density_f_state, ideal_postselection_operator, HomodyneSpec,
    Rotation,
};
pub use protocol::{
    default_gt, exact_step_operator, ideal_success_probability, protocol_step_exact,
    protocol_step_ideal, ExactStepOperator, StepOutcome,
};
