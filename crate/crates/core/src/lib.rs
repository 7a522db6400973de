//! How many distinct nonzero Hamming weights can a linear code have, and how
//! many distinct pairwise distances can an unrestricted code have? This crate
//! is a workbench around those two counting questions: exact field
//! arithmetic, compact code representations, the constructions that meet the
//! known extremes, the closed-form bounds they are measured against, and
//! seeded random/exhaustive searches for everything in between.
//!
//! Quick tour:
//!
//! ```
//! use wspectra::constructions::binary_full_spectrum;
//! use wspectra::bounds::weight_count_upper;
//!
//! let code = binary_full_spectrum(4).unwrap();
//! let spectrum = code.weight_spectrum().unwrap();
//! assert_eq!(spectrum.weights(), (1..=15).collect::<Vec<_>>());
//! assert_eq!(weight_count_upper(4, 2).unwrap(), 15u32.into());
//! ```
//!
//! Built with the `parallel` feature (default), spectrum enumeration and the
//! searches fan out over rayon; without it every path is single-threaded
//! with identical results.

pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod field;
pub mod nonlinear;
pub mod search;

pub use error::{Error, Result};
