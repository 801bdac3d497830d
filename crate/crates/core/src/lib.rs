//! Braid matrices, Yang-Baxter solutions and the chain models built from them.
//!
//! Pure numerics on small dense complex matrices. The crate is `no_std` and
//! needs only `alloc`; IO, reports and the command line live in the `ybx`
//! crate.

#![no_std]

extern crate alloc;

pub mod constructors;
pub mod densela;
pub mod dynamics;
pub mod entangle;
pub mod error;
pub mod majorana;
pub mod mixedspin;
pub mod parafermion;
pub mod topo2d;
pub mod ybe;

pub use densela::{c64, Operator, StateVector, C64};
pub use error::{Error, Result};

/// Default Frobenius tolerance for relation checks.
pub const DEFAULT_TOL: f64 = 1e-10;
