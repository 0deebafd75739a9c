//! Simulation and analysis of forward search attacks on deterministic
//! quantum-public-key bit-encryption, and of the parity-encoded randomized
//! scheme that resists them.
//!
//! Modules, bottom up:
//! - [`linalg`]: dense state vectors, operators, register permutations,
//!   the symmetric projector and a Hermitian eigensolver.
//! - [`keys`]: key-state families `k ↦ |Ψ_k⟩`.
//! - [`symtest`]: the (1, N−1)-copy symmetry test.
//! - [`scheme`]: deterministic and parity-encoded encryption.
//! - [`adversary`]: forward search, compound attack, Helstrom bound.
//! - [`analysis`]: closed-form success probabilities and codeword lengths.
//! - [`experiment`]: reproducible Monte Carlo runs and reports.

pub mod adversary;
pub mod analysis;
pub mod error;
pub mod experiment;
pub mod keys;
pub mod linalg;
pub mod rng;
pub mod scheme;
pub mod symtest;

pub use error::{Error, Result};
