//! Schur polynomials, lattice path weights and the Lindström–Gessel–Viennot
//! lemma over exact integer polynomials.

pub mod combinat;
pub mod error;
pub mod identities;
pub mod lgv;
pub mod ring;
pub mod schur;
pub mod svg;
pub mod symfun;

pub use combinat::{Partition, Tableau};
pub use error::{Error, Result};
pub use identities::{run_suite, CheckReport, Status, SuiteConfig};
pub use ring::{Family, Monomial, Polynomial, Variable};
pub use schur::{compute_schur, SchurMethod};
