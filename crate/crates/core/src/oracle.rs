//! Shooting oracle: RK4 integration of ψ'' = (V(x) - E) ψ inward from
//! both ends with decaying initial data, compared at a matching point.
//! Uses only the potential itself, no special functions.

use log::debug;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{kinematics, potential_value, ComplexEnergy, ModelSpec};
use crate::rootfinder::{find_spectrum_with, SearchRect, Spectrum, SpectrumOptions};

/// Oracle scan grid; each node costs two full integrations.
pub const DEFAULT_ORACLE_GRID: (usize, usize) = (60, 60);

const RESCALE_EVERY: usize = 500;
pub const DEFAULT_STEPS: usize = 20000;

// 1e-8 leaves the truncation error of the exponential step near 1e-7
// relative in E; a 25% longer L must move roots by less than 1e-8
const SATURATION: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShootingConfig {
    /// Truncation half-width.
    #[serde(rename = "L")]
    pub l: f64,
    /// Steps per half-line.
    pub n_steps: usize,
    pub matcher_x: f64,
}

impl ShootingConfig {
    /// L is chosen so the potential is saturated to 1e-11 at ±L (exactly,
    /// for piecewise models); 20000 steps per side.
    pub fn for_model(model: &ModelSpec) -> ShootingConfig {
        let l = match *model {
            ModelSpec::RosenMorse { .. } => 20.0,
            ModelSpec::ExpStep { v1, a } => (5.0 * a).max(25.0).max(0.5 * a * (v1.abs() / SATURATION).ln()),
            _ => (5.0 * model.width()).max(25.0),
        };
        ShootingConfig { l, n_steps: DEFAULT_STEPS, matcher_x: 0.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.l.is_finite() && self.l > self.matcher_x.abs()) {
            return Err(Error::InvalidModel(format!("shooting half-width L = {} must exceed |matcher_x|", self.l)));
        }
        if self.n_steps == 0 {
            return Err(Error::StepSize(f64::INFINITY));
        }
        Ok(())
    }

    pub fn with_steps(self, n_steps: usize) -> ShootingConfig {
        ShootingConfig { n_steps, ..self }
    }
}

/// One straight run of equal RK4 steps with the potential sampled at
/// every node and midpoint.
#[derive(Debug, Clone)]
struct Segment {
    h: f64,
    v: Vec<Complex64>,
}

/// Potential samples along both half-lines, reusable for any energy.
#[derive(Debug, Clone)]
pub struct Shooter {
    model: ModelSpec,
    cfg: ShootingConfig,
    left: Vec<Segment>,
    right: Vec<Segment>,
    v_max: f64,
}

fn segments(model: &ModelSpec, from: f64, to: f64, n_steps: usize) -> Vec<Segment> {
    let (lo, hi) = (from.min(to), from.max(to));
    let mut cuts: Vec<f64> = model.breakpoints().into_iter().filter(|&b| b > lo && b < hi).collect();
    cuts.sort_by(f64::total_cmp);
    if from > to {
        cuts.reverse();
    }
    let mut nodes = vec![from];
    nodes.extend(cuts);
    nodes.push(to);
    let total = (to - from).abs();
    nodes
        .windows(2)
        .map(|w| {
            let (x0, x1) = (w[0], w[1]);
            let m = (((x1 - x0).abs() / total * n_steps as f64).round() as usize).max(1);
            let h = (x1 - x0) / m as f64;
            // samples on segment ends are taken just inside, so a jump in
            // V at a breakpoint is seen from the correct side
            let nudge = 1e-9 * x0.abs().max(x1.abs()).max(1.0) * (x1 - x0).signum();
            let v = (0..=2 * m)
                .map(|k| {
                    let x = if k == 0 {
                        x0 + nudge
                    } else if k == 2 * m {
                        x1 - nudge
                    } else {
                        x0 + 0.5 * h * k as f64
                    };
                    potential_value(model, x)
                })
                .collect();
            Segment { h, v }
        })
        .collect()
}

impl Shooter {
    pub fn new(model: &ModelSpec, cfg: &ShootingConfig) -> Result<Shooter> {
        model.validate()?;
        cfg.validate()?;
        let left = segments(model, -cfg.l, cfg.matcher_x, cfg.n_steps);
        let right = segments(model, cfg.l, cfg.matcher_x, cfg.n_steps);
        let v_max = left.iter().chain(&right).flat_map(|s| s.v.iter()).map(|v| v.norm()).fold(0.0, f64::max);
        Ok(Shooter { model: *model, cfg: *cfg, left, right, v_max })
    }

    pub fn config(&self) -> &ShootingConfig {
        &self.cfg
    }

    /// (ψ, ψ') at the matching point, up to an overall factor.
    pub fn integrate(&self, e: ComplexEnergy, side: Side) -> Result<(Complex64, Complex64)> {
        let k = kinematics(&self.model, e);
        // start from e^{K₁x} (e^{-K₂x}) at the far end with its modulus
        // dropped; keeping the phase keeps M smooth in E
        let (segs, mut y) = match side {
            Side::Left => {
                let p = Complex64::from_polar(1.0, -k.k1.im * (self.cfg.l + self.cfg.matcher_x));
                (&self.left, [p, k.k1 * p])
            }
            Side::Right => {
                let p = Complex64::from_polar(1.0, -k.k2.im * (self.cfg.l - self.cfg.matcher_x));
                (&self.right, [p, -k.k2 * p])
            }
        };
        // RK4 needs |h|·sqrt|V - E| well below its stability limit
        let stiff = (self.v_max + e.norm()).sqrt();
        let mut count = 0usize;
        for s in segs {
            if s.h.abs() * stiff > 1.0 {
                return Err(Error::StepSize(s.h.abs()));
            }
            let h = s.h;
            for n in 0..(s.v.len() - 1) / 2 {
                let (w0, wm, w1) = (s.v[2 * n] - e, s.v[2 * n + 1] - e, s.v[2 * n + 2] - e);
                let (p, d) = (y[0], y[1]);
                let (k1p, k1d) = (d, w0 * p);
                let (k2p, k2d) = (d + 0.5 * h * k1d, wm * (p + 0.5 * h * k1p));
                let (k3p, k3d) = (d + 0.5 * h * k2d, wm * (p + 0.5 * h * k2p));
                let (k4p, k4d) = (d + h * k3d, w1 * (p + h * k3p));
                y[0] = p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
                y[1] = d + h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
                count += 1;
                if count.is_multiple_of(RESCALE_EVERY) {
                    rescale(&mut y)?;
                }
            }
        }
        rescale(&mut y)?;
        Ok((y[0], y[1]))
    }

    /// Scale-free Wronskian mismatch
    /// M = (ψ_L ψ'_R - ψ_R ψ'_L) / (k ‖u_L‖ ‖u_R‖), u = (ψ, ψ'/k),
    /// k = max(1, |K₁|, |K₂|). Bounded by 1 in modulus and free of the
    /// poles a log-derivative difference would have where ψ(matcher_x) = 0.
    pub fn mismatch(&self, e: ComplexEnergy) -> Result<Complex64> {
        let kin = kinematics(&self.model, e);
        let k = 1f64.max(kin.k1.norm()).max(kin.k2.norm());
        let (pl, dl) = self.integrate(e, Side::Left)?;
        let (pr, dr) = self.integrate(e, Side::Right)?;
        let nl = (pl.norm_sqr() + dl.norm_sqr() / (k * k)).sqrt();
        let nr = (pr.norm_sqr() + dr.norm_sqr() / (k * k)).sqrt();
        Ok((pl * dr - pr * dl) / (k * nl * nr))
    }
}

fn rescale(y: &mut [Complex64; 2]) -> Result<()> {
    let s = y[0].norm().max(y[1].norm());
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Overflow("shooting integration"));
    }
    y[0] /= s;
    y[1] /= s;
    Ok(())
}

pub fn integrate_halfline(model: &ModelSpec, e: ComplexEnergy, side: Side, cfg: &ShootingConfig) -> Result<(Complex64, Complex64)> {
    Shooter::new(model, cfg)?.integrate(e, side)
}

pub fn wronskian_mismatch(model: &ModelSpec, e: ComplexEnergy, cfg: &ShootingConfig) -> Result<Complex64> {
    Shooter::new(model, cfg)?.mismatch(e)
}

/// Rootfinder pipeline applied to the Wronskian mismatch.
pub fn oracle_spectrum(model: &ModelSpec, rect: &SearchRect, cfg: &ShootingConfig, opts: &SpectrumOptions) -> Result<Spectrum> {
    let shooter = Shooter::new(model, cfg)?;
    debug!("oracle L = {}, {} steps per side", cfg.l, cfg.n_steps);
    let f = |e: Complex64| shooter.mismatch(e);
    find_spectrum_with(&f, model, rect, opts)
}
