//! Exact arithmetic for positive definite ternary quadratic forms over the
//! integers: reduction, isometry groups, local invariants, Watson
//! transformations, and class-number computation by descent to a stable
//! lattice followed by formula-driven ascent, cross-checked against an
//! exhaustive genus oracle.
//!
//! Everything is integer or rational arithmetic; there is no floating point
//! in any code path that feeds a result.

pub mod error;
pub mod rat;

pub mod gram;
pub mod linalg;
pub mod reduce;
pub mod shortvec;
pub mod isom;

pub mod group;

pub mod symbols;
pub mod jordan;
pub mod twoadic;
pub mod genus;
pub mod represent;

pub mod watson;

pub mod tables;
pub mod classcounts;
pub mod propagate;

pub mod imquad;
pub mod stable;

pub mod oracle;
pub mod pipeline;

pub use error::{Error, Result};
pub use gram::{GramMatrix, ScaledLattice, Vector3};
pub use group::{Isometry, Label, OrthogonalSystem, Symmetry};
pub use jordan::JordanOdd;
pub use propagate::LabelMultiset;
pub use rat::Rat;
pub use watson::DescentChain;
