//! Discrete spectra and eigenstates of PT-symmetric potentials whose
//! imaginary part saturates at ±iV₁ far from the origin.
//!
//! Units throughout: ħ = 1, 2m = 1, so the Schrödinger equation reads
//! ψ'' = (V(x) - E) ψ.

pub mod eigenfunctions;
pub mod error;
pub mod models;
pub mod oracle;
pub mod rootfinder;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
