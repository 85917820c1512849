use log::debug;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::BranchCut;

/// Search rectangle in the complex E plane and its scan resolution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchRect {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl SearchRect {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64, nx: usize, ny: usize) -> Result<Self> {
        let r = SearchRect { re_min, re_max, im_min, im_max, nx, ny };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.re_min, self.re_max, self.im_min, self.im_max].iter().all(|v| v.is_finite());
        if !finite || self.re_min >= self.re_max || self.im_min >= self.im_max {
            return Err(Error::InvalidRect(format!(
                "need re_min < re_max and im_min < im_max, got [{}, {}] x [{}, {}]",
                self.re_min, self.re_max, self.im_min, self.im_max
            )));
        }
        if self.nx < 8 || self.ny < 8 {
            return Err(Error::InvalidRect(format!("grid {}x{} below 8x8", self.nx, self.ny)));
        }
        Ok(())
    }

    pub fn dx(&self) -> f64 {
        (self.re_max - self.re_min) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        (self.im_max - self.im_min) / self.ny as f64
    }

    pub fn node(&self, i: usize, j: usize) -> Complex64 {
        Complex64::new(
            self.re_min + i as f64 * self.dx(),
            self.im_min + j as f64 * self.dy(),
        )
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    /// Same rectangle grown by `frac` of its size on every side.
    pub fn inflated(&self, frac: f64) -> SearchRect {
        let wx = (self.re_max - self.re_min) * frac;
        let wy = (self.im_max - self.im_min) * frac;
        SearchRect {
            re_min: self.re_min - wx,
            re_max: self.re_max + wx,
            im_min: self.im_min - wy,
            im_max: self.im_max + wy,
            ..*self
        }
    }

    pub fn with_grid(&self, nx: usize, ny: usize) -> SearchRect {
        SearchRect { nx, ny, ..*self }
    }

    /// The rectangle mirrored through the real axis.
    pub fn conjugate(&self) -> SearchRect {
        SearchRect { im_min: -self.im_max, im_max: -self.im_min, ..*self }
    }
}

/// f sampled on the (nx+1)×(ny+1) nodes of a rectangle.
#[derive(Debug, Clone)]
pub struct Grid {
    pub rect: SearchRect,
    /// Row-major in i (real direction), `None` where f failed.
    pub values: Vec<Option<Complex64>>,
    /// Per cell, true where a branch cut runs through it.
    pub cut_cells: Vec<bool>,
}

impl Grid {
    pub fn evaluate<F>(f: &F, rect: &SearchRect, cuts: &[BranchCut]) -> Grid
    where
        F: Fn(Complex64) -> Result<Complex64> + Sync,
    {
        let (nx, ny) = (rect.nx, rect.ny);
        let values: Vec<Option<Complex64>> = (0..(nx + 1) * (ny + 1))
            .into_par_iter()
            .map(|k| {
                let z = rect.node(k % (nx + 1), k / (nx + 1));
                match f(z) {
                    Ok(v) if v.re.is_finite() && v.im.is_finite() => Some(v),
                    Ok(_) => {
                        debug!("non-finite f at {z}");
                        None
                    }
                    Err(e) => {
                        debug!("f failed at {z}: {e}");
                        None
                    }
                }
            })
            .collect();
        let mut cut_cells = vec![false; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                let (lo, hi) = (rect.node(i, j), rect.node(i + 1, j + 1));
                cut_cells[j * nx + i] = cuts.iter().any(|c| c.hits_box(lo.re, hi.re, lo.im, hi.im));
            }
        }
        Grid { rect: *rect, values, cut_cells }
    }

    pub fn at(&self, i: usize, j: usize) -> Option<Complex64> {
        self.values[j * (self.rect.nx + 1) + i]
    }

    pub fn failed_fraction(&self) -> f64 {
        self.values.iter().filter(|v| v.is_none()).count() as f64 / self.values.len() as f64
    }

    /// Median of |f| over the finite nodes.
    pub fn median_abs(&self) -> f64 {
        let mut m: Vec<f64> = self.values.iter().flatten().map(|v| v.norm()).collect();
        if m.is_empty() {
            return 1.0;
        }
        m.sort_by(f64::total_cmp);
        let mid = m[m.len() / 2];
        if mid > 0.0 {
            mid
        } else {
            1.0
        }
    }

    /// Corner values of cell (i, j) counter-clockwise from the lower left,
    /// or `None` if any corner failed or a cut runs through it.
    pub fn cell(&self, i: usize, j: usize) -> Option<[Complex64; 4]> {
        if self.cut_cells[j * self.rect.nx + i] {
            return None;
        }
        Some([self.at(i, j)?, self.at(i + 1, j)?, self.at(i + 1, j + 1)?, self.at(i, j + 1)?])
    }

    /// Centres of the cells where both Re f and Im f change sign.
    pub fn candidates(&self) -> Vec<Complex64> {
        let mut out = Vec::new();
        for j in 0..self.rect.ny {
            for i in 0..self.rect.nx {
                let Some(c) = self.cell(i, j) else { continue };
                let straddles = |g: fn(&Complex64) -> f64| {
                    let lo = c.iter().map(g).fold(f64::INFINITY, f64::min);
                    let hi = c.iter().map(g).fold(f64::NEG_INFINITY, f64::max);
                    lo <= 0.0 && hi >= 0.0
                };
                if straddles(|v| v.re) && straddles(|v| v.im) {
                    let (a, b) = (self.rect.node(i, j), self.rect.node(i + 1, j + 1));
                    out.push((a + b) * 0.5);
                }
            }
        }
        out
    }
}

/// One candidate per cell where Re f and Im f both change sign.
pub fn scan_candidates<F>(f: &F, rect: &SearchRect) -> Vec<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    Grid::evaluate(f, rect, &[]).candidates()
}
