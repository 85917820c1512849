//! Bessel J and modified Bessel I of complex order and argument.
//!
//! Ascending series summed in double-double up to |z| = 40, Hankel
//! asymptotics beyond. The series is written as
//!
//!   J_ν(z) = (z/2)^ν / Γ(ν+1) · S,   z J'_ν(z) = (z/2)^ν / Γ(ν+1) · T,
//!
//! with S = Σ t_k, T = Σ (ν+2k) t_k, t_k = t_{k-1} w / (k (ν+k)) and
//! w = -z²/4 for J, +z²/4 for I. The normalized sums are exposed on their
//! own because the exponential-step characteristic function only needs
//! them up to a common nonzero factor.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::dd::Cdd;
use super::gamma::ln_gamma;
use crate::error::{Error, Result};

pub const SERIES_RADIUS: f64 = 40.0;

// 2^-104, unit roundoff of double-double
const DD_EPS: f64 = 4.930_380_657_631_324e-32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    J,
    I,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::J => "bessel_j",
            Kind::I => "bessel_i",
        }
    }
}

/// Normalized ascending sums (S, T) for order `nu` and series variable `w`.
///
/// w = -z²/4 gives the J series, w = z²/4 the I series. Fails when
/// cancellation eats all double-double headroom.
pub fn bessel_series_sums(nu: Complex64, w: Complex64) -> Result<(Complex64, Complex64)> {
    series_sums(nu, Cdd::from(w), "bessel_series")
}

fn series_sums(nu: Complex64, w: Cdd, func: &'static str) -> Result<(Complex64, Complex64)> {
    let wn = w.norm_f64();
    let nu_dd = Cdd::from(nu);
    let mut t = Cdd::ONE;
    let mut s = Cdd::ONE;
    let mut tt = nu_dd;
    let mut max_term = 1f64.max(nu.norm());
    let kmax = 600 + (8.0 * wn.sqrt()) as usize;
    let mut k = 1usize;
    loop {
        let kf = k as f64;
        let den = (nu_dd + Cdd::from(kf)).scale(kf);
        if den.norm_f64() == 0.0 {
            return Err(Error::NonConvergence { func, z: w.to_c64() });
        }
        t = t * w / den;
        s = s + t;
        let weighted = t * (nu_dd + Cdd::from(2.0 * kf));
        tt = tt + weighted;
        let tn = t.norm_f64();
        let wtn = weighted.norm_f64();
        max_term = max_term.max(tn).max(wtn);
        let scale = s.norm_f64().max(tt.norm_f64());
        // past the hump the terms fall off at least geometrically
        let past_peak = kf * (nu + kf).norm() > 2.0 * wn;
        if past_peak && tn.max(wtn) <= 1e-34 * scale {
            break;
        }
        k += 1;
        if k > kmax || !tn.is_finite() {
            return Err(Error::NonConvergence { func, z: w.to_c64() });
        }
    }
    let scale = s.norm_f64().max(tt.norm_f64());
    if max_term * DD_EPS > 1e-15 * scale {
        return Err(Error::NonConvergence { func, z: w.to_c64() });
    }
    Ok((s.to_c64(), tt.to_c64()))
}

fn is_negative_integer(nu: Complex64) -> Option<i64> {
    if nu.im == 0.0 && nu.re < 0.0 && nu.re == nu.re.floor() {
        Some(nu.re as i64)
    } else {
        None
    }
}

fn at_origin(nu: Complex64, derivative: bool, kind: Kind) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    if nu == zero {
        return Ok(if derivative { zero } else { one });
    }
    if nu == one {
        return Ok(if derivative { Complex64::new(0.5, 0.0) } else { zero });
    }
    if nu.re > 1.0 || (nu.re > 0.0 && !derivative) {
        return Ok(zero);
    }
    Err(Error::Overflow(kind.name()))
}

fn series_value(nu: Complex64, z: Complex64, derivative: bool, kind: Kind) -> Result<Complex64> {
    let zz = Cdd::from(z);
    let w = (zz * zz).scale(if kind == Kind::J { -0.25 } else { 0.25 });
    let (s, t) = series_sums(nu, w, kind.name())?;
    let pre = (nu * (z * 0.5).ln() - ln_gamma(nu + 1.0)?).exp();
    let out = if derivative { pre * t / z } else { pre * s };
    finite(out, kind)
}

fn finite(v: Complex64, kind: Kind) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(kind.name()))
    }
}

// Σ_k (±1)^k a_k(ν) / z^k, the common sum of the large-argument expansions.
// `None` if it starts to diverge before reaching double precision.
fn hankel_sum(nu: Complex64, z: Complex64, sign: Complex64) -> Option<Complex64> {
    let mu = 4.0 * nu * nu;
    let zinv = z.inv();
    let mut a = Complex64::new(1.0, 0.0);
    let mut sum = a;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a = a * (mu - odd * odd) * zinv * sign / (8.0 * k as f64);
        let mag = a.norm();
        if mag > last {
            return None;
        }
        sum += a;
        last = mag;
        if mag <= 1e-17 * sum.norm() {
            return Some(sum);
        }
    }
    None
}

/// J_ν(z) for Re z ≥ 0 from the two Hankel expansions.
fn hankel_j(nu: Complex64, z: Complex64) -> Option<Complex64> {
    let i = Complex64::i();
    let sp = hankel_sum(nu, z, i)?;
    let sm = hankel_sum(nu, z, -i)?;
    let omega = z - nu * (PI / 2.0) - PI / 4.0;
    let amp = (2.0 / (PI * z)).sqrt();
    Some(amp * ((i * omega).exp() * sp + (-i * omega).exp() * sm) * 0.5)
}

/// I_ν(z) for Re z ≥ 0, keeping the recessive e^{-z} term so the result
/// stays right up to the imaginary axis.
fn hankel_i(nu: Complex64, z: Complex64) -> Option<Complex64> {
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let grow = hankel_sum(nu, z, -one)?;
    let decay = hankel_sum(nu, z, one)?;
    let s = if z.im >= 0.0 { 1.0 } else { -1.0 };
    let amp = (2.0 * PI * z).sqrt().inv();
    Some(amp * (z.exp() * grow + s * i * (s * i * nu * PI).exp() * (-z).exp() * decay))
}

fn asymptotic(nu: Complex64, z: Complex64, derivative: bool, kind: Kind) -> Option<Complex64> {
    // reflect into the right half plane: F_ν(z e^{±iπ}) = e^{±iνπ} F_ν(z)
    let (zr, phase) = if z.re >= 0.0 {
        (z, Complex64::new(1.0, 0.0))
    } else {
        let s = if z.im >= 0.0 { 1.0 } else { -1.0 };
        (-z, Complex64::new(0.0, s * PI))
    };
    let f = |n: Complex64| {
        let v = match kind {
            Kind::J => hankel_j(n, zr),
            Kind::I => hankel_i(n, zr),
        }?;
        Some(if z.re >= 0.0 { v } else { (phase * n).exp() * v })
    };
    if !derivative {
        return f(nu);
    }
    let lo = f(nu - 1.0)?;
    let hi = f(nu + 1.0)?;
    Some(match kind {
        Kind::J => (lo - hi) * 0.5,
        Kind::I => (lo + hi) * 0.5,
    })
}

fn eval(nu: Complex64, z: Complex64, derivative: bool, kind: Kind) -> Result<Complex64> {
    if let Some(n) = is_negative_integer(nu) {
        let v = eval(-nu, z, derivative, kind)?;
        return Ok(if kind == Kind::J && n % 2 != 0 { -v } else { v });
    }
    if z.norm() == 0.0 {
        return at_origin(nu, derivative, kind);
    }
    if z.norm() > SERIES_RADIUS {
        if let Some(v) = asymptotic(nu, z, derivative, kind) {
            return finite(v, kind);
        }
    }
    series_value(nu, z, derivative, kind)
}

/// J_ν(z), or dJ_ν/dz when `derivative` is set.
pub fn bessel_j(nu: Complex64, z: Complex64, derivative: bool) -> Result<Complex64> {
    eval(nu, z, derivative, Kind::J)
}

/// I_ν(z), or dI_ν/dz when `derivative` is set.
pub fn bessel_i(nu: Complex64, z: Complex64, derivative: bool) -> Result<Complex64> {
    eval(nu, z, derivative, Kind::I)
}
