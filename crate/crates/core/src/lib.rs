//! Exact evaluation of generalized matrix functions
//! `d(A) = sum_{s in G} chi(s) prod_i A[i][s(i)]` on sums of two permutation
//! matrices, their block generalizations and the symmetric matrices `S_theta`.
//!
//! The fast routes sum over the `2^r` permutations that agree pointwise with
//! either `theta` or `tau` instead of the whole group; independent oracles
//! (the naive group sum, Cauchy-Binet expansion, tensor symmetrizers) are
//! provided alongside for cross-checking.

pub mod characters;
pub mod engine;
pub mod error;
pub mod groups;
pub mod json;
pub mod matrix;
pub mod perm;
pub mod scalar;

pub use characters::{CharacterSpec, Partition, TableCharacter};
pub use engine::{GmfResult, Method};
pub use error::{Error, Result};
pub use groups::{FiniteSubgroup, GroupSpec, GroupVariant, DEFAULT_ENUMERATION_CAP};
pub use matrix::{BlockSpec, Matrix, PsdClassification};
pub use perm::{CycleDecomposition, CycleStructure, PartialMap, Permutation, XSetElement};
pub use scalar::GaussianRational;
