//! Exact computational engine for monomial ideals of matroid configurations.
//!
//! The crate computes with Stanley-Reisner ideals of matroid complexes and
//! their flat monomial specializations: symbolic powers, containment
//! certificates, Hilbert functions and h-vectors, graded Betti numbers,
//! Waldschmidt constants and resurgence searches. All arithmetic is exact;
//! every invariant has an independently checkable oracle in the `verify`
//! module and the test suite.

pub mod complex;
pub mod config;
pub mod hilbert;
pub mod ideal;
pub mod resolution;
pub mod symbolic;
pub mod verify;

mod rank;

pub use complex::{ComplexError, MatroidComplex, SimplicialComplex};
pub use config::{ConfigError, HypergraphSpec, MonomialSubstitution, TetrahedralExponents};
pub use hilbert::{HVector, HilbertError, HilbertNumerator, LambdaConfig};
pub use ideal::{IdealError, Monomial, MonomialIdeal, VariableContext};
pub use resolution::{BettiTable, ResolutionError};
pub use symbolic::{
    ContainmentCertificate, OpBudget, ResurgenceReport, SymbolicError, WaldschmidtReport,
};
