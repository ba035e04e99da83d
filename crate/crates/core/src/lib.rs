//! Ergodic averages along good sequences and mean Li-Yorke chaos on
//! explicitly computable dynamical systems.
//!
//! The crate is organized bottom-up:
//!
//! - [`seqgen`] generates the sequence families (primes, integer parts of
//!   polynomials and fractional powers, Thue-Morse return times, lacunary
//!   sequences) and counts close pairs exactly.
//! - [`systems`] provides symbolic points with O(1) coordinate access,
//!   exact 128-bit circle rotations, products and the natural extension.
//! - [`averaging`] computes `A_N f(x) = (1/N) sum f(T^{a_k} x)` with
//!   compensated summation, checkpoint traces and empirical measures.
//! - [`chaos`] measures the averaged max/min pairwise distances of tuples
//!   and builds scrambled families with exact certificates.
//! - [`pinsker`] runs the fiber-constancy, Kolmogorov and lacunary
//!   experiments on `FullShift x Rotation`.
//! - [`experiment`] is the config-driven runner behind the `meanchaos` binary.

pub mod averaging;
pub mod chaos;
pub mod error;
pub mod experiment;
pub mod export;
pub mod pinsker;
pub mod prf;
pub mod rational;
pub mod seqgen;
pub mod sum;
pub mod systems;

pub use error::{Error, Result};
