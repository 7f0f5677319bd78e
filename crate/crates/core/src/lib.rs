//! Nonlinear-electrodynamics field engine: exact polynomial algebra,
//! closed-form vortex solutions with first quantum corrections, electromagnetic
//! vortex-line extraction on grids, and a finite-difference evolution oracle.

pub mod field;
pub mod oracle;
pub mod poly;
pub mod solutions;
pub mod vortex;

pub use field::{Coupling, FieldSample, Invariants};
pub use poly::{MPoly, PolyError, VecPoly};
pub use solutions::{AnalyticSolution, SolutionCase, SolutionParams};
