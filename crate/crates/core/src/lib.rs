//! Census engine for semi-equivelar maps: maps on closed surfaces in which
//! every vertex sees the same cyclic sequence of face sizes.
//!
//! The crate enumerates such maps up to isomorphism, computes their
//! automorphism groups, orbits and orientability, and ships a catalog of
//! known 12-vertex maps with Euler characteristic -2.

pub mod catalog;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod facetype;
pub mod group;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod map;
pub mod perm;
pub mod poly;
pub mod symmetry;

pub use enumerate::{enumerate_sems, enumerate_with, sweep, CensusResult, EnumOptions, Seed};
pub use facetype::{admissible_types, euler_of_type, face_counts, FaceSequence};
pub use group::{identify_group, GroupId, PermGroup};
pub use invariants::{char_poly, common_neighbor_graph, edge_graph, invariant_fingerprint, Fingerprint, SimpleGraph};
pub use iso::{are_isomorphic, canonical_form, check_witness, CanonicalForm};
pub use map::{euler_characteristic, face_sequence_at, is_sem, validate, vertex_link, PolyhedralMap, ValidationReport};
pub use perm::Permutation;
pub use poly::IntPolynomial;
pub use symmetry::{automorphism_group, isohedral_number, orientability, vertex_transitive, Orientability};
