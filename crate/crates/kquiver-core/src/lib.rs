//! Exact combinatorics of permutations, pipe dreams, Demazure products,
//! Grothendieck polynomials and quiver K-polynomials.
//!
//! Everything here is exact integer arithmetic over sparse Laurent
//! polynomials; there are no floating point code paths. The crate is
//! `no_std` + `alloc` so the algorithmic core stays free of IO concerns;
//! the companion CLI crate carries file formats and the command line.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod config;
pub mod error;
pub mod groth;
pub mod hecke;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod quiver;

pub use config::Limits;
pub use error::{Error, Result};
