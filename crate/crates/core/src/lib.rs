#![no_std]

//! Linear-programming upper bounds for quantum codes.
//!
//! Everything that is meant to be a proof (Krawtchouk values, dual
//! certificates, the enumerator LP, mixed-code bounds) is computed in exact
//! rational arithmetic. The [`asymptotics`] module works in `f64` and only
//! produces curves.
//!
//! ```
//! use qbound_core::certificates::singleton_certificate;
//! use qbound_core::ExactScalar;
//!
//! let cert = singleton_certificate(5, 3).unwrap();
//! assert_eq!(cert.bound, ExactScalar::from_integer(2.into()));
//! ```

extern crate alloc;

pub mod asymptotics;
pub mod certificates;
pub mod enum_lp;
mod error;
pub mod kraw;
pub mod mixed;
pub mod scalar;
pub mod simplex;

pub use error::{Error, Result, SignCondition};
pub use kraw::Alphabet;
pub use scalar::ExactScalar;
