//! Solver library for the inverse angle-bisector-feet problem.
//!
//! Given a triangle `ABC`, find the triangle(s) `A'B'C'` whose angle
//! bisectors have feet `A`, `B`, `C`, and decide — exactly, when the squared
//! side lengths are rational — whether the solution is compass-and-
//! straightedge constructible.
//!
//! The pipeline is split into:
//!
//! * [`exact`] — arbitrary-precision rationals, dense univariate polynomials,
//!   Sylvester resultants and rational-root extraction;
//! * [`system`] — the trivariate polynomial systems describing the problem
//!   (two interchangeable encodings behind [`system::SystemEncoding`]) and
//!   the elimination down to a univariate characteristic polynomial;
//! * [`realroots`] — certified real-root isolation and refinement;
//! * [`geometry`] — triangle recovery, the forward bisector-feet oracle and
//!   incenter/excenter classification;
//! * [`constructibility`] — exact ruler-and-compass verdicts for roots of
//!   rational polynomials up to degree 4;
//! * [`pipeline`] — orchestration of a full solve;
//! * [`report`] — serializable solve reports (JSON schema v1).

pub mod constructibility;
pub mod exact;
pub mod geometry;
pub mod pipeline;
pub mod realroots;
pub mod report;
pub mod system;

pub use exact::{Rat, UPoly, XPoly};
pub use system::{CharacteristicPolynomial, InstanceSquaredSides, SystemEncoding, SystemId};
