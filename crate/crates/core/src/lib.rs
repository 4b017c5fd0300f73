//! Exact invariant Kähler geometry of complex flag varieties `G/P`.
//!
//! Everything is driven by a single arithmetic primitive, the coroot pairing
//! `<λ, β∨>`, evaluated in exact rational arithmetic. On top of it sit the
//! invariant second-cohomology calculus of a flag variety (anticanonical
//! class, Fano index, Lefschetz contraction, volume, degree), the degree-zero
//! Picard lattice, and the construction of t-Gauduchon Ricci-flat and
//! balanced Hermitian data on principal torus bundles over `G/P`.
//!
//! [`potential_lab`] is a floating-point cross-check of the exact eigenvalue
//! formula for type A, using explicit big-cell Kähler potentials.

pub mod bundle;
pub mod error;
pub mod flag;
pub mod picard;
pub mod potential_lab;
pub mod rational;
pub mod root_system;

pub use bundle::{BalancedDatum, GauduchonDatum};
pub use error::{Error, Result};
pub use flag::{InvariantClass, ParabolicFlag, TwoPiMultiple};
pub use picard::{LineBundleClass, PrimitiveBasis};
pub use rational::Rational;
pub use root_system::{Family, LieType, PositiveRoot, RootDatum, Weight};
