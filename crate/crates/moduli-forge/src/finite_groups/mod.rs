//! Permutation groups at desk scale: exact word arithmetic in small
//! symmetric groups, exhaustive generating-vector censuses and the
//! braid-type moves connecting them.

pub mod census;
pub mod perm;

pub use census::{
    classes_connected, enumerate_smooth_epis, hurwitz_move, presentation_pair_count, CensusMode,
    GenVector, HurwitzMove,
};
pub use perm::{s4_standard_generators, word_eval, Perm};
