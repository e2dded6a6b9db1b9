//! Combinatorics of `(e, s)`-cores of multipartitions.
//!
//! The crate covers the objects needed to study blocks of Ariki-Koike
//! algebras combinatorially:
//!
//! - [`partitions`]: partitions, multipartitions, residues, rim hooks and
//!   exhaustive enumeration.
//! - [`abacus`]: charged bead sets, runner decomposition, bead sliding and
//!   `(e, s)`-completeness.
//! - [`uglov`]: charge normalization, core predicates and the Uglov map with
//!   its inverse.
//! - [`weights`]: block weights, the affine weight of a multipartition and the
//!   invariant bilinear form.
//! - [`blocks`]: elementary bead moves, cores of multipartitions and block
//!   decomposition tables.
//!
//! All arithmetic is exact. Every value is immutable once built and every
//! operation is a pure function.

pub mod abacus;
pub mod blocks;
pub mod cli;
mod error;
pub mod partitions;
pub mod table;
pub mod uglov;
pub mod weights;

pub use abacus::{Abacus, MultiAbacus};
pub use blocks::{Block, BlockKey, CoreDescriptor, ElementaryMove};
pub use error::{Error, Result};
pub use partitions::{Modulus, Multicharge, Multipartition, Node, Partition, ResidueVector};
pub use uglov::NormalizedCharge;
pub use weights::AffineWeightVector;
