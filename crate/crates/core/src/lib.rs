//! Exact computations with finite-dimensional cocommutative Hopf algebras:
//! kernels, commutators and abelianization, crossed products and cleft
//! extensions, the Galois groupoid, the fundamental group, `H₂` through the
//! Hopf formula, and the five-term homology sequence.
//!
//! All arithmetic is exact, over ℚ or a prime field.

pub mod cleft;
pub mod error;
pub mod exact_seq;
pub mod exactla;
pub mod galois;
pub mod groups;
pub mod hopf_core;
pub mod morphism;
pub mod subquot;
pub mod zoo;

pub use error::{Error, Result};
pub use exactla::{Field, IntMatrix, Matrix, Scalar, Subspace, Vector};
pub use groups::{group_algebra, AbelianGroupSNF, FinGroup, GroupHom};
pub use hopf_core::{AxiomReport, FinHopfAlgebra, HopfData};
pub use morphism::{CoalgebraMap, HopfMorphism};
pub use subquot::{HopfSubalgebra, Quotient};
