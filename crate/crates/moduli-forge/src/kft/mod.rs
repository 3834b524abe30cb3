//! The one-parameter family of plane quartics with a symmetric-group S4
//! action:
//!
//! `C_lambda = { x^4 + y^4 + z^4 + lambda (x^2 y^2 + y^2 z^2 + z^2 x^2) = 0 }`
//!
//! for `lambda` outside {-2, -1, 2}. This module certifies the group
//! action and the invariant degree-24 map, computes the branch data of the
//! quotient, the five genus-one quotient invariants, the companion
//! parameters sharing a fiber of `G`, decides conformal and anticonformal
//! equivalence, reports fields of moduli, and handles the exceptional
//! Fermat and Klein members.

pub mod branch;
pub mod companions;
pub mod curve;
pub mod invariants;
pub mod points;

pub use branch::{branch_sign_flip_record, kft_branch_data, BranchSign, KftBranchData};
pub use companions::{kft_companions, kft_separation_record, Companions};
pub use curve::{
    kft_curve, kft_group_check, kft_map_a, kft_map_b, q_invariance_check, singular_witness,
    smooth_candidate_record, KftCurve,
};
pub use invariants::{kft_invariants, KftInvariants};
pub use points::{
    fermat_check, hyperelliptic_boundary, kft_equivalent, kft_moduli_field, klein_automorphism_check,
    klein_point, AlgValue, EquivalenceDecision, ExceptionalMember, HyperellipticBoundary,
    ModuliField,
};
