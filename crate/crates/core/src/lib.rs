//! Schur algebras `S_q(2,d)`, Temperley-Lieb algebras and the tensor space
//! that links them, with emphasis on (quantum) characteristic 2.
//!
//! The crate has two layers:
//!
//! * closed-form combinatorics: decomposition numbers, tilting
//!   multiplicities, and relative dominant / Hemmer-Nakano dimensions
//!   ([`combinatorics`], [`domdim`]);
//! * an exact linear-algebra oracle that builds the algebras as explicit
//!   matrices and measures relative dominant dimension straight from its
//!   definition ([`tensor`], [`oracle`]).
//!
//! [`verify`] ties the two together.

pub mod combinatorics;
pub mod domdim;
pub mod error;
pub mod hecke;
pub mod hook;
pub mod linalg;
pub mod oracle;
pub mod perm;
pub mod tensor;
pub mod tl;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{Field, FieldScalar, FieldTag, Matrix, PrimeField, Rationals, GF2, GF5};
