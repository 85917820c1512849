//! Newton iteration with a central-difference derivative, handing over to
//! Muller's method when Newton stalls (multiple roots, flat f').

use num_complex::Complex64;

use super::grid::SearchRect;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refined {
    pub energy: Complex64,
    pub residual: f64,
    pub iterations: usize,
}

fn fail(start: Complex64, reason: impl Into<String>) -> Error {
    Error::Refine { start, reason: reason.into() }
}

fn step_tol(z: Complex64) -> f64 {
    1e-10 * z.norm().max(1.0)
}

fn muller_step(z: [Complex64; 3], f: [Complex64; 3]) -> Option<Complex64> {
    let h1 = z[1] - z[0];
    let h2 = z[2] - z[1];
    if h1.norm() == 0.0 || h2.norm() == 0.0 {
        return None;
    }
    let d1 = (f[1] - f[0]) / h1;
    let d2 = (f[2] - f[1]) / h2;
    let a = (d2 - d1) / (h2 + h1);
    let b = a * h2 + d2;
    let disc = (b * b - 4.0 * f[2] * a).sqrt();
    let den = if (b + disc).norm() >= (b - disc).norm() { b + disc } else { b - disc };
    if den.norm() == 0.0 {
        return None;
    }
    Some(-2.0 * f[2] / den)
}

/// Refine a root of `f` from `z0`.
///
/// Converged once |f| < `tol_f` and the last step is below
/// 1e-10·max(1, |z|). Leaving `bounds` (when given) counts as divergence.
pub fn refine_root<F>(f: &F, z0: Complex64, tol_f: f64, max_iter: usize, bounds: Option<&SearchRect>) -> Result<Refined>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let mut z = z0;
    let mut fz = f(z)?;
    if fz.norm() == 0.0 {
        return Ok(Refined { energy: z, residual: 0.0, iterations: 0 });
    }
    let mut hist: Vec<(Complex64, Complex64)> = vec![(z, fz)];
    let mut last_step = f64::INFINITY;
    let mut slow = 0;
    let mut muller = false;
    for it in 1..=max_iter {
        let mut dz = None;
        if muller && hist.len() >= 3 {
            let n = hist.len();
            let zs = [hist[n - 3].0, hist[n - 2].0, hist[n - 1].0];
            let fs = [hist[n - 3].1, hist[n - 2].1, hist[n - 1].1];
            dz = muller_step(zs, fs);
        }
        if dz.is_none() {
            let h = 1e-6 * z.norm().max(1.0);
            let df = (f(z + h)? - f(z - h)?) / (2.0 * h);
            if df.norm() <= 1e-300 || !(df.re.is_finite() && df.im.is_finite()) {
                muller = true;
                if hist.len() < 3 {
                    // nudge to seed the Muller history
                    dz = Some(Complex64::new(h, h) * 1e3);
                }
            } else {
                dz = Some(-fz / df);
            }
        }
        let Some(mut dz) = dz else {
            return Err(fail(z0, "no usable step"));
        };
        // halve the step while it makes things worse
        let mut znew = z + dz;
        let mut fnew = f(znew)?;
        for _ in 0..8 {
            if fnew.norm() <= fz.norm() || dz.norm() < step_tol(z) {
                break;
            }
            dz *= 0.5;
            znew = z + dz;
            fnew = f(znew)?;
        }
        if !(znew.re.is_finite() && znew.im.is_finite()) {
            return Err(fail(z0, "non-finite iterate"));
        }
        if let Some(b) = bounds {
            if !b.contains(znew) {
                return Err(fail(z0, format!("left the search region at {znew}")));
            }
        }
        let step = dz.norm();
        if step > 0.4 * last_step {
            slow += 1;
            if slow >= 2 {
                muller = true;
            }
        } else {
            slow = 0;
        }
        last_step = step;
        z = znew;
        fz = fnew;
        hist.push((z, fz));
        if fz.norm() == 0.0 || (fz.norm() < tol_f && step < step_tol(z)) {
            return Ok(Refined { energy: z, residual: fz.norm(), iterations: it });
        }
    }
    Err(fail(z0, format!("no convergence in {max_iter} iterations, |f| = {:.3e}", fz.norm())))
}
