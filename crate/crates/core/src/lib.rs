//! Finite group actions on compact Riemann surfaces.
//!
//! The crate enumerates Fuchsian signatures admissible for a given genus and
//! group order, surface-kernel generating vectors for a group and signature,
//! their orbits under braid/mapping-class moves and `Aut(G)` (the topological
//! classes of actions), and the dimension data of the group-algebra
//! decomposition of the associated Jacobians.

pub mod error;
pub mod exec;
pub mod genvec;
pub mod group;
pub mod mcg;
pub mod numtheory;
pub mod repr;
pub mod scanner;
pub mod signature;

pub use error::{Error, Result};
pub use exec::Threads;
pub use genvec::{
    enumerate_vectors, find_vector, is_surface_kernel, GeneratingVector, VectorTable,
};
pub use group::{Automorphism, Elem, Group, GroupKind, GroupSpec, Subgroup};
pub use signature::{enumerate_signatures, Signature};
