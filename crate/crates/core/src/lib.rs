//! Exact computations with restricted Lie algebras in characteristic `p`:
//! p-maps and the index, PBW arithmetic in enveloping algebras, degree
//! bounded centers and their rank over the p-center, and an independent
//! estimate of the maximal dimension of irreducible modules.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, reports and
//! the command line live in the `kw1` crate.
#![no_std]

extern crate alloc;

pub mod builtin;
pub mod center;
pub mod field;
pub mod gf;
pub mod lie;
pub mod linalg;
pub mod pbw;
pub mod poly;
pub mod redenv;
pub mod verdict;
pub mod rng;
