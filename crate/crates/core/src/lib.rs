//! Symbolic powers and symbolic defects of cover ideals of graphs.
//!
//! The crate is layered bottom-up:
//!
//! - [`monomial`] and [`ideal`]: exact monomial-ideal arithmetic on
//!   canonical minimal generating sets.
//! - [`graph`]: simple graphs, structural predicates, named families and
//!   exhaustive small-graph enumeration.
//! - [`cover`]: cover ideals, symbolic powers, vertex `m`-covers and the
//!   classification of indecomposable 2-covers.
//! - [`sdefect`]: symbolic defects by brute force and by recursion, and the
//!   indecomposability checks that gate the recursions.
//! - [`asymptotics`]: Waldschmidt constants, resurgence lower bounds,
//!   quasi-polynomial fitting and generator-growth estimates.
//! - [`verify`]: parameter sweeps that check the recursions and identities
//!   against brute force.

pub mod asymptotics;
pub mod cover;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod monomial;
pub mod sdefect;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
