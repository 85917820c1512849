//! Special functions of complex argument used by the characteristic
//! equations: log-gamma, Bessel J/I of complex order, Airy Ai/Bi, Jacobi
//! polynomials with complex parameters.

mod airy;
mod bessel;
pub mod dd;
mod gamma;
mod jacobi;

pub use airy::{airy, airy_all, AiryAll, AiryKind};
pub use bessel::{bessel_i, bessel_j, bessel_series_sums};
pub use gamma::ln_gamma;
pub use jacobi::jacobi_poly;

pub use num_complex::Complex64 as Complex;
