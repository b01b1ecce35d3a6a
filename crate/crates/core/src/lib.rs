//! Exact character theory for finite permutation groups: character tables,
//! p-blocks, Galois actions on characters and a verifier for statements
//! about Galois-fixed characters in principal and general blocks.

pub mod blocks;
pub mod chartab;
pub mod constructions;
pub mod cyclotomic;
pub mod error;
pub mod galois_action;
pub mod group;
pub mod numtheory;
pub mod perm;
pub(crate) mod polyfp;
pub mod verify;

pub use error::{Error, Result};
pub use group::{conjugacy_classes, ConjClassData, PermGroup};
pub use perm::Perm;
