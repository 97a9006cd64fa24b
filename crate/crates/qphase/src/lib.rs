//! Simulation of N-qubit registers acted on by global phase functions.
//!
//! The library builds the states a diagonal phase layer produces on a uniform
//! superposition, quantifies the two-qubit entanglement those phases generate
//! (Wootters concurrence and entanglement of formation), decides separability
//! through an affine-phase criterion, and runs an exact Deutsch-Jozsa
//! pipeline together with its classical query-count counterparts.
//!
//! Conventions used throughout:
//!
//! * qubit 1 is the most significant bit of a basis index;
//! * phases are canonicalized into [0, 2π), differences compared in (−π, π];
//! * density matrices are dense, complex, row-major, at most 1024×1024.

pub mod analytic;
pub mod angle;
pub mod dj;
pub mod entangle;
pub mod linalg;
pub mod separability;
pub mod states;

pub use analytic::TwoParamPoint;
pub use dj::{OracleKind, OracleSpec, QueryLog, Verdict};
pub use entangle::{EntangleError, EntanglementReport};
pub use linalg::{ComplexMatrix, Eigensystem, LinalgError};
pub use separability::{Constraint, LinearPhaseForm};
pub use states::{DensityMatrix, PhaseTable, PureState, StateError};
