//! Exact matrix models of BiHom monoids, comonoids and bimonoids.
//!
//! Objects are finite-dimensional spaces carrying commuting endomorphisms,
//! morphisms are [`exactlin::DenseMap`]s over `Q` or `F_p`, and every axiom
//! is checked by composing both sides of its diagram and comparing entries.
#![no_std]

extern crate alloc;

pub mod combinat;
pub mod coherence;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod structures;
pub mod twist;

pub use error::{Error, Result};
