//! Locating zeros of a characteristic function in a rectangle of the
//! complex energy plane: grid scan for cells where Re f and Im f both
//! change sign, Newton/Muller refinement, then deduplication, the decay
//! filter Re K₁, Re K₂ > 0, and pairing of complex conjugate roots.

mod contour;
mod grid;
mod refine;

pub use contour::{contour_polylines, contour_polylines_masked, contours_from_grid, ContourSet, Polyline};
pub use grid::{scan_candidates, Grid, SearchRect};
pub use refine::{refine_root, Refined};

use log::{debug, info, warn};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::{kinematics, reduced_characteristic, ComplexEnergy, ModelSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    Real,
    CcpePlus,
    CcpeMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub energy: ComplexEnergy,
    /// |f| at `energy`, in the units of f.
    pub residual: f64,
    pub kind: RootKind,
    pub pair_id: Option<usize>,
    pub iterations: usize,
}

/// A refined zero dropped by the decay filter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rejected {
    pub energy: ComplexEnergy,
    pub k1: Complex64,
    pub k2: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// Residual tolerance relative to the median |f| over the grid.
    pub tol_f: f64,
    /// A root is real when |Im E| < tol_real·max(1, |Re E|).
    pub tol_real: f64,
    pub max_iter: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions { tol_f: 1e-9, tol_real: 1e-6, max_iter: 60 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub roots: Vec<Root>,
    pub rejected: Vec<Rejected>,
    /// Complex roots whose conjugate could not be located.
    pub unpaired: Vec<ComplexEnergy>,
    /// Median |f| over the scan grid.
    pub f_scale: f64,
    /// Absolute residual tolerance actually applied.
    pub tol_f_abs: f64,
}

/// Default scan grid.
pub const DEFAULT_GRID: (usize, usize) = (400, 200);

// more than this fraction of failed nodes means the scan is meaningless
const MAX_FAILED_FRACTION: f64 = 0.25;

fn same_root(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-6 * a.norm().max(b.norm()).max(1.0)
}

fn dedup(mut found: Vec<Root>) -> Vec<Root> {
    found.sort_by(|a, b| a.energy.re.total_cmp(&b.energy.re).then(a.energy.im.total_cmp(&b.energy.im)));
    let mut out: Vec<Root> = Vec::with_capacity(found.len());
    for r in found {
        match out.iter_mut().find(|o| same_root(o.energy, r.energy)) {
            Some(o) if r.residual < o.residual => *o = r,
            Some(_) => {}
            None => out.push(r),
        }
    }
    out
}

/// Full pipeline for an arbitrary characteristic function `f` of `model`.
///
/// `model` supplies the branch cuts that are masked during the scan and
/// the decay filter applied to refined roots.
pub fn find_spectrum_with<F>(f: &F, model: &ModelSpec, rect: &SearchRect, opts: &SpectrumOptions) -> Result<Spectrum>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    rect.validate()?;
    let grid = Grid::evaluate(f, rect, &model.branch_cuts());
    let failed = grid.failed_fraction();
    if failed > MAX_FAILED_FRACTION {
        return Err(Error::Solver(format!("{:.0}% of grid nodes could not be evaluated", failed * 100.0)));
    }
    let f_scale = grid.median_abs();
    let tol = opts.tol_f * f_scale;
    let candidates = grid.candidates();
    debug!("{} candidate cells, |f| median {:.3e}", candidates.len(), f_scale);
    let bounds = rect.inflated(0.5);
    let refined: Vec<Root> = candidates
        .par_iter()
        .filter_map(|&z0| match refine_root(f, z0, tol, opts.max_iter, Some(&bounds)) {
            Ok(r) => Some(Root {
                energy: r.energy,
                residual: r.residual,
                kind: RootKind::Real,
                pair_id: None,
                iterations: r.iterations,
            }),
            Err(e) => {
                debug!("{e}");
                None
            }
        })
        .collect();
    let inside: Vec<Root> = dedup(refined).into_iter().filter(|r| rect.contains(r.energy)).collect();

    let mut rejected = Vec::new();
    let mut kept = Vec::new();
    for r in inside {
        let k = kinematics(model, r.energy);
        if k.k1.re > 0.0 && k.k2.re > 0.0 {
            kept.push(r);
        } else {
            info!("rejecting {} (Re K1 = {:.3e}, Re K2 = {:.3e})", r.energy, k.k1.re, k.k2.re);
            rejected.push(Rejected { energy: r.energy, k1: k.k1, k2: k.k2 });
        }
    }

    let eval_root = |z: Complex64, iterations: usize| -> Result<Root> {
        Ok(Root { energy: z, residual: f(z)?.norm(), kind: RootKind::Real, pair_id: None, iterations })
    };

    // classify; real roots are snapped onto the axis
    let mut reals = Vec::new();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for r in kept {
        let e = r.energy;
        if e.im.abs() < opts.tol_real * e.re.abs().max(1.0) {
            let snapped = eval_root(Complex64::new(e.re, 0.0), r.iterations)?;
            reals.push(if snapped.residual <= r.residual.max(tol) { snapped } else { r });
        } else if e.im > 0.0 {
            plus.push(r);
        } else {
            minus.push(r);
        }
    }

    // pair each upper root with its mirror image
    let mut unpaired = Vec::new();
    let mut pairs: Vec<(Root, Root)> = Vec::new();
    let mut used_minus = vec![false; minus.len()];
    for p in &plus {
        let target = p.energy.conj();
        let partner = minus.iter().enumerate().find(|(k, m)| !used_minus[*k] && same_root(m.energy, target));
        let m = match partner {
            Some((k, m)) => {
                used_minus[k] = true;
                Some(*m)
            }
            None => match refine_root(f, target, tol, opts.max_iter, None) {
                Ok(r) if same_root(r.energy, target) => {
                    Some(Root { energy: r.energy, residual: r.residual, kind: RootKind::CcpeMinus, pair_id: None, iterations: r.iterations })
                }
                _ => None,
            },
        };
        match m {
            Some(m) => pairs.push((*p, m)),
            None => {
                warn!("no conjugate partner for {}", p.energy);
                unpaired.push(p.energy);
            }
        }
    }
    for (k, m) in minus.iter().enumerate() {
        if used_minus[k] {
            continue;
        }
        match refine_root(f, m.energy.conj(), tol, opts.max_iter, None) {
            Ok(r) if same_root(r.energy, m.energy.conj()) => pairs.push((
                Root { energy: r.energy, residual: r.residual, kind: RootKind::CcpePlus, pair_id: None, iterations: r.iterations },
                *m,
            )),
            _ => {
                warn!("no conjugate partner for {}", m.energy);
                unpaired.push(m.energy);
            }
        }
    }

    // both members are placed exactly on conjugate positions; the better
    // refined one fixes the location
    pairs.sort_by(|a, b| a.0.energy.re.total_cmp(&b.0.energy.re).then(a.0.energy.im.total_cmp(&b.0.energy.im)));
    let mut roots = reals;
    for (id, (p, m)) in pairs.into_iter().enumerate() {
        let up = if p.residual <= m.residual { p.energy } else { m.energy.conj() };
        let mut rp = eval_root(up, p.iterations)?;
        let mut rm = eval_root(up.conj(), m.iterations)?;
        rp.kind = RootKind::CcpePlus;
        rm.kind = RootKind::CcpeMinus;
        rp.pair_id = Some(id);
        rm.pair_id = Some(id);
        roots.push(rp);
        roots.push(rm);
    }
    for &e in &unpaired {
        if let Some(r) = plus.iter().chain(minus.iter()).find(|r| r.energy == e) {
            let mut r = *r;
            r.kind = if e.im > 0.0 { RootKind::CcpePlus } else { RootKind::CcpeMinus };
            roots.push(r);
        }
    }
    roots.sort_by(|a, b| a.energy.re.total_cmp(&b.energy.re).then(a.energy.im.total_cmp(&b.energy.im)));
    Ok(Spectrum { roots, rejected, unpaired, f_scale, tol_f_abs: tol })
}

/// Spectrum of `model` from its characteristic function.
pub fn find_spectrum(model: &ModelSpec, rect: &SearchRect, opts: &SpectrumOptions) -> Result<Spectrum> {
    model.validate()?;
    if !model.has_characteristic() {
        return Err(Error::NoCharacteristic(model.name()));
    }
    let f = |e: Complex64| reduced_characteristic(model, e);
    find_spectrum_with(&f, model, rect, opts)
}

/// Contours of the reduced characteristic function of `model`.
pub fn model_contours(model: &ModelSpec, rect: &SearchRect) -> Result<ContourSet> {
    model.validate()?;
    if !model.has_characteristic() {
        return Err(Error::NoCharacteristic(model.name()));
    }
    let f = |e: Complex64| reduced_characteristic(model, e);
    contour_polylines_masked(&f, rect, &model.branch_cuts())
}
