//! The dual (Birman–Ko–Lee) Garside structure on the four-strand braid group.
//!
//! [`simple`] holds the fourteen divisors of δ and their lattice tables;
//! [`braid`] does arithmetic on left normal forms; [`sliding`] implements
//! cycling, decycling and cyclic sliding; [`circuits`] computes sets of
//! sliding circuits as graphs together with their orbit quotient; and
//! [`solver`] decides conjugacy and produces checkable conjugators.
//! [`classical`] is an independent word-problem referee built on permutation
//! braids, used to cross-validate the dual engine.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bootstrap;
pub mod braid;
pub mod circuits;
pub mod classical;
pub mod error;
pub mod families;
pub mod simple;
pub mod sliding;
pub mod solver;

pub use braid::{normalize, BraidWord, GarsideBraid, Invariants, Letter};
pub use circuits::{compute_sc, minimal_arrows, orbit_partition, quotient_graph, Orbit, QuotientGraph, SCGraph};
pub use error::{BraidError, ParseSimpleError};
pub use simple::DualSimple;
pub use sliding::{SlidingStep, SlidingTrajectory};
pub use solver::{solve_conjugacy, verify_certificate, ConjugacyCertificate, NotConjugateReason, SolverDecision};
