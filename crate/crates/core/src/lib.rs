//! Exact computations around nilpotent adjoint orbits in the complex simple
//! Lie algebras.
//!
//! The crate has three layers:
//!
//! * exact arithmetic: [`scalar`] (rationals and Gaussian rationals),
//!   [`poly`] (univariate polynomials, Sturm chains, spectral tests) and
//!   [`matrix`] (dense matrices over Q(i), kernels, characteristic
//!   polynomials);
//! * the classification: [`partitions`] (the partition sets P(n), P1(n),
//!   P-1(2n)), [`catalog`] (orbit labels and Springer-Steinberg centralizer
//!   structure) and [`cohomology`] (dim H^2 of every nilpotent orbit);
//! * explicit matrix models: [`lie`] (classical algebras, sl2-triples, ad
//!   operators, Killing form), [`oracle`] (brute-force centralizer/center
//!   computations and component-group flip witnesses) and [`jordan`]
//!   (complete Jordan decomposition and exactness of the real and imaginary
//!   parts of the Kostant-Kirillov form).
//!
//! Everything in this crate is exact; floating point never appears outside
//! test oracles. The crate is `no_std` (with `alloc`): all IO, file formats
//! and the command line live in the companion `orbit-cli` crate.
//!
//! Dimensions reported for H^2 are real dimensions of `H^2(O, R)`, which
//! coincide with the complex dimensions of the invariant centers they are
//! computed from.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod cohomology;
pub mod jordan;
pub mod lie;
pub mod matrix;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod scalar;

pub use catalog::{AlgebraType, CentralizerStructure, ClassicalFamily, ExceptionalFamily, OrbitLabel};
pub use cohomology::{h2, H2Result};
pub use jordan::{kk_verdict, real_form_verdict, ExactnessVerdict};
pub use lie::{LieAlgebraSpec, Sl2Triple};
pub use matrix::ExactMatrix;
pub use partitions::Partition;
pub use poly::Poly;
pub use scalar::{GaussianRational, Rational};
