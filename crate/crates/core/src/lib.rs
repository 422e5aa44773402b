//! Non-crossing partition lattices of finite reflection groups, the complex
//! `X(c)`, and the embedding of its homology basis into the homology of the
//! intersection lattice, all over exact arithmetic.

pub mod algebra;
pub mod arrangement;
pub mod complexes;
pub mod coxeter;
pub mod embed;
pub mod error;
pub mod pipeline;
pub mod rootorder;

pub use error::{Error, Result};

use algebra::FieldElement;
use num_rational::BigRational;

/// Exact system over the number field `Q(2cos(π/L))`.
pub type ExactSystem = coxeter::CoxeterSystem<FieldElement>;
/// Exact system over the rationals; simply-laced types only.
pub type RationalSystem = coxeter::CoxeterSystem<BigRational>;
/// Floating-point system with a fixed sign tolerance.
pub type FloatSystem = coxeter::CoxeterSystem<f64>;
pub type ExactRoots = rootorder::OrderedRoots<FieldElement>;
pub type ExactChamber = arrangement::Chamber<FieldElement>;
pub type ExactGenericVector = arrangement::GenericVector<FieldElement>;
pub type ExactMuComplex = embed::MuComplex<FieldElement>;
pub type ExactPipeline = pipeline::Pipeline<FieldElement>;
