//! Airy functions Ai, Bi and their derivatives for complex argument.
//!
//! |z| ≤ 9: Maclaurin series in double-double, Ai = c1 f - c2 g and
//! Bi = √3 (c1 f + c2 g). Beyond that the exponentially scaled asymptotic
//! expansion of Ai is used on |arg z| ≤ 2π/3 and everything else (Ai on
//! the remaining sector, Bi everywhere) comes from the rotation formulas
//! in terms of Ai(ω^{±1} z).

use num_complex::Complex64;
use std::f64::consts::PI;

use super::dd::{Cdd, Dd};
use crate::error::{Error, Result};

pub const SERIES_RADIUS: f64 = 9.0;

// Ai(0), -Ai'(0), √3 Ai(0), -√3 Ai'(0) as double-doubles
const C1: Dd = Dd::new(0.3550280538878172, 2.05233632436212e-17);
const C2: Dd = Dd::new(0.2588194037928068, -2.522243111610832e-17);
const C1_SQRT3: Dd = Dd::new(0.6149266274460007, 5.0899207794891416e-17);
const C2_SQRT3: Dd = Dd::new(0.4482883573538264, -2.5363237774417305e-17);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiryKind {
    Ai,
    Bi,
}

/// Ai(z), Ai'(z), Bi(z), Bi'(z) in one go.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryAll {
    pub ai: Complex64,
    pub dai: Complex64,
    pub bi: Complex64,
    pub dbi: Complex64,
}

struct Series {
    f: Cdd,
    g: Cdd,
    df: Cdd,
    dg: Cdd,
}

fn maclaurin(z: Complex64) -> Result<Series> {
    let zd = Cdd::from(z);
    let z3 = zd * zd * zd;
    let z3n = z.norm().powi(3);
    let mut a = Cdd::ONE;
    let mut b = zd;
    let mut d = (zd * zd).scale(0.5);
    let mut c = Cdd::ONE;
    let (mut f, mut g, mut df, mut dg) = (a, b, d, c);
    let mut peak = 1f64.max(z.norm());
    for k in 1..400 {
        let k3 = 3.0 * k as f64;
        a = a * z3 / Cdd::from((k3 - 1.0) * k3);
        b = b * z3 / Cdd::from(k3 * (k3 + 1.0));
        c = c * z3 / Cdd::from((k3 - 2.0) * k3);
        f = f + a;
        g = g + b;
        dg = dg + c;
        if k >= 2 {
            d = d * z3 / Cdd::from((k3 - 3.0) * (k3 - 1.0));
            df = df + d;
        }
        let big = a.norm_f64().max(b.norm_f64()).max(c.norm_f64()).max(d.norm_f64());
        peak = peak.max(big);
        if k3 * k3 > 2.0 * z3n && big < 1e-34 * peak.max(1.0) {
            return Ok(Series { f, g, df, dg });
        }
    }
    Err(Error::NonConvergence { func: "airy", z })
}

fn from_series(z: Complex64) -> Result<AiryAll> {
    let s = maclaurin(z)?;
    let c1 = Cdd::new(C1, Dd::ZERO);
    let c2 = Cdd::new(C2, Dd::ZERO);
    let s1 = Cdd::new(C1_SQRT3, Dd::ZERO);
    let s2 = Cdd::new(C2_SQRT3, Dd::ZERO);
    Ok(AiryAll {
        ai: (c1 * s.f - c2 * s.g).to_c64(),
        dai: (c1 * s.df - c2 * s.dg).to_c64(),
        bi: (s1 * s.f + s2 * s.g).to_c64(),
        dbi: (s1 * s.df + s2 * s.dg).to_c64(),
    })
}

/// Ai and Ai' from the large-|z| expansion, valid for |arg z| ≤ 2π/3.
fn ai_asymptotic(z: Complex64) -> Result<(Complex64, Complex64)> {
    let (r, th) = z.to_polar();
    let z14 = Complex64::from_polar(r.powf(0.25), th / 4.0);
    let zeta = Complex64::from_polar(2.0 / 3.0 * r.powf(1.5), 1.5 * th);
    let zinv = zeta.inv();
    let mut u = 1.0f64;
    let mut pw = Complex64::new(1.0, 0.0);
    let mut su = pw;
    let mut sv = pw;
    let mut last = f64::INFINITY;
    let mut ok = false;
    for k in 1..200 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        pw *= -zinv;
        let tu = pw * u;
        let tv = pw * v;
        let mag = tu.norm().max(tv.norm());
        if mag > last {
            // smallest term reached; near |z| = 9 it sits around 1e-16
            ok = last < 2e-15;
            break;
        }
        su += tu;
        sv += tv;
        last = mag;
        if mag < 1e-17 {
            ok = true;
            break;
        }
    }
    if !ok {
        return Err(Error::NonConvergence { func: "airy", z });
    }
    let e = (-zeta).exp();
    let norm = 0.5 / PI.sqrt();
    Ok((e * norm / z14 * su, -e * norm * z14 * sv))
}

fn omega(k: f64) -> Complex64 {
    Complex64::from_polar(1.0, k * 2.0 * PI / 3.0)
}

fn ai_large(z: Complex64) -> Result<(Complex64, Complex64)> {
    if z.arg().abs() <= 2.0 * PI / 3.0 {
        return ai_asymptotic(z);
    }
    let w = omega(1.0);
    let wb = omega(-1.0);
    let (a1, d1) = ai_asymptotic(w * z)?;
    let (a2, d2) = ai_asymptotic(wb * z)?;
    Ok((-w * a1 - wb * a2, -(w * w) * d1 - (wb * wb) * d2))
}

fn from_asymptotic(z: Complex64) -> Result<AiryAll> {
    let (ai, dai) = ai_large(z)?;
    let (a1, d1) = ai_large(omega(1.0) * z)?;
    let (a2, d2) = ai_large(omega(-1.0) * z)?;
    let p6 = Complex64::from_polar(1.0, PI / 6.0);
    let p56 = Complex64::from_polar(1.0, 5.0 * PI / 6.0);
    Ok(AiryAll {
        ai,
        dai,
        bi: p6 * a1 + p6.conj() * a2,
        dbi: p56 * d1 + p56.conj() * d2,
    })
}

/// All four Airy values at z.
pub fn airy_all(z: Complex64) -> Result<AiryAll> {
    let out = if z.norm() <= SERIES_RADIUS {
        from_series(z)?
    } else {
        from_asymptotic(z)?
    };
    let finite = [out.ai, out.dai, out.bi, out.dbi]
        .iter()
        .all(|v| v.re.is_finite() && v.im.is_finite());
    if finite {
        Ok(out)
    } else {
        Err(Error::Overflow("airy"))
    }
}

/// Ai or Bi (or the derivative) at z.
pub fn airy(z: Complex64, kind: AiryKind, derivative: bool) -> Result<Complex64> {
    let all = airy_all(z)?;
    Ok(match (kind, derivative) {
        (AiryKind::Ai, false) => all.ai,
        (AiryKind::Ai, true) => all.dai,
        (AiryKind::Bi, false) => all.bi,
        (AiryKind::Bi, true) => all.dbi,
    })
}
