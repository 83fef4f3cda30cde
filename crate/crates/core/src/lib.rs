//! Preferential attachment with choice: exact and Monte Carlo analysis of the
//! limiting degree census.
//!
//! A growing random tree attaches each new vertex to the rank-`s` vertex (by
//! degree) among `r` preferential samples. The library computes the limiting
//! census sequence `p_k` from the defining recurrence, decides exactly whether
//! the limit `p_*` equals one (doubly-exponential tail) or is a root in `(0,1)`
//! (condensation), and cross-checks the theory against a deterministic tree
//! simulator.
//!
//! The crate is `no_std` + `alloc`; everything here is deterministic and, apart
//! from the simulator's explicit generator state, purely functional.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod binomial;
pub mod error;
pub mod params;
pub mod poly;
pub mod pstar;
pub mod sim;
pub mod solver;
pub mod sturm;
pub mod verify;

pub use binomial::{binomial, Brs};
pub use error::Error;
pub use params::{ModelParams, Sampling, MAX_R};
pub use poly::IntPoly;
pub use pstar::{classify_tail, pstar, threshold_r, PStarResult, SturmCertificate, TailClass};
pub use sim::{run_sim, DegreeCensus, SimCensus, StepRecord, TreeState};
pub use solver::{
    cutoff_k0, f_k_eval, greedy_pk_step, next_pk, next_qk, pk_iter, pk_sequence, CutoffResult,
    PkEntry, PkTable, QkStep, Repr, DEFAULT_TOL,
};
