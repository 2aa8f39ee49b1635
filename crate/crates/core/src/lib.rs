//! Nonlinear (multi-criteria) matroid optimization.
//!
//! Minimizes `f(W(B))` over the bases `B` of a matroid, where `W` is a
//! `d x n` integer weight matrix and `f` is accessed only through a
//! comparison oracle. Two solver pipelines are provided:
//!
//! - a combinatorial pipeline driven by repeated matroid intersection,
//!   applicable to any independence oracle whose weight entries take few
//!   distinct values ([`combinatorial`]);
//! - an algebraic pipeline for vectorial matroids that interpolates the
//!   coefficients of the base generating polynomial from exact
//!   determinant evaluations ([`algebraic`]).
//!
//! On top of these sits a minimum-aberration model-fitting layer for
//! experimental design ([`expdesign`]), plus brute-force reference
//! implementations and instance generators ([`testkit`]) and the JSON
//! interchange formats used by the command-line front end ([`format`]).

pub mod algebraic;
pub mod budget;
pub mod combinatorial;
pub mod error;
pub mod exact;
pub mod expdesign;
pub mod format;
pub mod instrument;
pub mod intersection;
pub mod matrix;
pub mod matroid;
pub mod objective;
mod parallel;
pub mod testkit;
pub mod weights;

pub use budget::Budget;
pub use error::{Error, Result};
pub use exact::{Int, Rat};
pub use instrument::{Counters, Instrumentation};
pub use matroid::{Matroid, MatroidKind};
pub use objective::Objective;
pub use weights::{Profile, WeightMatrix};
