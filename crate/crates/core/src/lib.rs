//! Spectra of q-distance matrices of distance-regular graphs.
//!
//! The crate works from an [`IntersectionArray`] alone wherever possible and
//! keeps a brute-force route over concrete graphs ([`atlas`]) as an oracle.

pub mod antipodal;
pub mod array;
pub mod atlas;
pub mod diameter3;
pub mod error;
pub mod feasibility;
pub mod poly;
pub mod qdistance;
pub mod report;
pub mod scalar;
pub mod spectrum;

pub use array::{derive, parse_array, DerivedParams, IntersectionArray};
pub use error::{Error, Result};
pub use qdistance::{dq_spectrum_formula, dq_spectrum_oracle, QEigen, QSpectrum, QValue, RationalQ};
