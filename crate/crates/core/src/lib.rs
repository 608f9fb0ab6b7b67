//! Exact computational engine for program games with renegotiation.
//!
//! Everything in this crate is computed over exact rationals: base games and
//! their feasible hulls, Pareto-meet geometry (the meet minimum and the
//! per-player meet projections), deterministic strategy programs that can read
//! each other's canonical serialization, renegotiation rules (point-valued,
//! set-valued, and iterated), and subjective-equilibrium verification over
//! finite program spaces and finite-support beliefs.
//!
//! The 2-player engine is fully exact; games with three or more players are
//! supported through a finite point-set region mode at a configurable mixture
//! resolution, which is documented as approximate.

pub mod equilibrium;
pub mod error;
pub mod game;
pub mod geometry;
pub mod outcome;
pub mod programs;
pub mod rational;
pub mod renegotiation;
pub mod sampling;
pub mod scenario;

pub use error::{Error, Result};
pub use rational::Rat;
