//! Exact computation of orders of vanishing of Artin and Dirichlet
//! L-functions at non-positive integers, along two independent routes:
//! a representation-theoretic model built from Galois actions on embeddings
//! (graded characters standing in for rationalized K-theory data) and a
//! classical analytic route through generalized Bernoulli numbers. The two
//! routes are compared exactly, with zero tolerance, by the verification
//! sweeps.
//!
//! All arithmetic is exact: rationals of arbitrary precision and cyclotomic
//! field elements in canonical power-basis form. Floating point appears only
//! in explicitly-labeled smoke diagnostics.

pub mod cache;
pub mod dirichlet;
pub mod error;
pub mod exact;
pub mod groups;
pub mod kmodel;
pub mod places;
pub mod report;
pub mod runner;

pub use dirichlet::DirichletCharacter;
pub use error::{Error, Result};
pub use exact::{Cyclotomic, CycloMatrix, CycloPoly, Rational};
pub use groups::{unit_group, Character, FiniteGroup, MatrixRep, Subgroup};
pub use kmodel::GradedRep;
pub use places::EmbeddingSet;
pub use report::Report;
pub use runner::{run_job, JobSpec, RunContext};
