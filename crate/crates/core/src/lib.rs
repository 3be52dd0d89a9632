//! Finite-group toolkit for counting real forms through nonabelian Galois
//! cohomology of the order-2 group.
//!
//! A finite group `H` stands in for the automorphism group of a complex
//! variety, and an involutive automorphism `φ` of `H` for the action of
//! complex conjugation. The crate computes cocycles, first cohomology sets
//! with stabilizers, mass identities, the stable Sylow-2 reduction, and the
//! invariant `m(H)`.

pub mod aut;
pub mod builders;
pub mod cohomology;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod invariants;
pub mod perm;
pub mod search;
pub mod sylow;

pub use aut::{automorphism_group, involution_class_reps, AutGroup, InvolutionClass, InvolutiveAction};
pub use error::{Error, Result};
pub use group::{close_generators, FiniteGroup, GroupHom, Subgroup};
pub use perm::Perm;
pub use search::is_isomorphic_small;
