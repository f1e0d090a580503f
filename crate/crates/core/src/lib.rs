//! Exact symbolic engine for the Yangian of gl_n.
//!
//! The crate provides:
//!
//! * [`algebra`] — the Yangian as a rewriting system: canonical normal forms
//!   and decidable equality for rational combinations of generator words;
//! * [`series`] — truncation-windowed formal series in `u^-1` (and
//!   `u^-1, v^-1`) over any coefficient ring implementing [`CoeffRing`];
//! * [`minors`] — Yangian determinants `t^I_J(u)` and mechanical checks for
//!   the identity families they satisfy;
//! * [`quasidet`] — quasideterminants, left quasi-Plücker coordinates,
//!   noncommutative Gaussian elimination and LDU factorization over a ring
//!   with partial inverses;
//! * [`skewfield`] — verification of division-ring identities by exact
//!   evaluation on random invertible rational matrices;
//! * [`coalgebra`] / [`flag`] — the bialgebra structure, flag algebras,
//!   comodule maps, and the module action;
//! * [`suite`] — the identity-suite registry and parallel runner behind the
//!   command-line harness.

pub mod algebra;
pub mod error;
pub mod minors;
pub mod quasidet;
pub mod rat;
pub mod series;

pub use algebra::{defining_relation_residual, Element, GeneratorId, Word};
pub use error::{Error, Result};
pub use minors::{inversion_sign, minor, quasi_plucker_minor, IndexTuple, MinorKey};
pub use quasidet::{Composition, LDUResult, NCMatrix};
pub use rat::{Rat, RatMat};
pub use series::{gen_series, BiSeries, CoeffRing, Series, Window, Window2};
