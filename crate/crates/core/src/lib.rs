//! Linear algebra over a finite Boolean algebra.
//!
//! Vectors in `L_n(B)` and matrices over `B = P(atoms)` with join as
//! addition and meet as multiplication: orthonormal bases and their
//! extension, stochastic and unitary matrices, invariant vectors and
//! reduction of unitaries, powers of stochastic matrices and the induced
//! reachability relation, plus a brute-force oracle for small cases.

pub mod algebra;
pub mod bmatrix;
pub mod bvec;
pub mod chains;
pub mod cli;
pub mod error;
pub mod model;
pub mod oracle;
pub mod random;
mod words;

pub use algebra::{Algebra, Elem};
pub use bmatrix::{
    find_invariant_stochastic, joint_trace, reduce_by_orthogonal_set, reduce_fully, reduce_unitary,
    reflection_from, BMatrix, Reduction,
};
pub use chains::{
    lcm_upto, matrix_atoms, power_profile, reachable, relation_report, verify_power_theorem,
    MatrixAtoms, PowerProfile, RelationReport,
};
pub use bvec::{cyclic_basis, descent, lift, BVec, VecSet};
pub use error::{Error, Result};
pub use model::ModelFile;
