//! Exact solving of multi-homogeneous polynomial systems.
//!
//! A square system is solved over a prime field by a symbolic homotopy
//! from a product start system, the result is lifted p-adically and
//! reconstructed over the rationals, and the output is described by a
//! zero-dimensional parametrization. The [`minimize`] module uses this to
//! find the critical points of a coordinate function on a real variety.

pub mod bounds;
pub mod error;
pub mod homotopy;
pub mod liftz;
pub mod minimize;
pub mod ring;
pub mod slp;
pub mod zdp;

pub use bounds::{bezout_number, homotopy_bezout_number, lifting_ledger, LiftingLedger};
pub use error::{Error, Result};
pub use homotopy::{nonsingular_solutions, nonsingular_solutions_repeated, System};
pub use liftz::{solve_over_z, Outcome, OverZReport, SolveOptions};
pub use minimize::{critical_points, isolate_minimum, Interval, MinimizationProblem};
pub use ring::{MPoly, Poly, PrimeField, RationalField};
pub use slp::{BlockStructure, MultiDegree, Slp};
pub use zdp::ZeroDimParam;

#[cfg(test)]
mod testing;
