//! Exact combinatorics for Verlinde categories of simple algebraic groups.
//!
//! Everything in this crate is pure and allocation-only: root data for the
//! nine Cartan types, Freudenthal characters of alcove simples, restriction
//! along a principal `SL2` with negligible-pair cancellation, the `Ver_p`
//! fusion ring with symmetric and exterior powers, the affine-Weyl fusion
//! rule for `Ver_p(G)`, bracket support and subalgebras of `sl(L_{n-1})`,
//! and the mod-`p` dimension series of symmetric and exterior algebras.
//!
//! IO, persistence, the command line and the verification reports live in
//! the companion `verlinde` crate.
#![no_std]

extern crate alloc;

mod error;
mod util;

pub mod charmod;
pub mod dims;
pub mod liealg;
pub mod principal;
pub mod rootsys;
pub mod verlinde_g;
pub mod verp;

pub use error::{Error, Result};
pub use util::is_prime;
