//! Linear codes over `F_p` whose error values are confined to a unit
//! subgroup `E` of order 4 (Gaussian integers, Mannheim metric) or 6
//! (Eisenstein integers, hexagonal metric).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing,
//! parallel search and the command-line tool live in the `rescodes` crate.
//!
//! ```
//! use rescodes_core::code::construct_gauss2;
//!
//! let code = construct_gauss2(13, None).unwrap();
//! assert_eq!(code.len(), 9);
//! assert_eq!(code.guaranteed_distance(), 5);
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod code;
pub mod decode;
pub mod error;
pub mod field;
pub mod lattice;
pub mod verify;
pub mod weight;

pub use code::{Family, LinearCode, Syndrome};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField, UnitSubgroup};
pub use lattice::{EisenInt, GaussInt, LatticeKind, QuotientContext};
pub use weight::{ErrorPattern, WeightTable};
