//! The five potential models, their asymptotic kinematics and the
//! characteristic functions whose zeros are the discrete eigenvalues.
//!
//! Two flavours of characteristic function exist. The `char_*` functions
//! are the textbook matching determinants. [`reduced_characteristic`]
//! divides out zero-free factors so that f(conj E) = conj f(E) holds
//! exactly, which is what the root finder works with.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{airy_all, bessel_i, bessel_j, bessel_series_sums};

/// A point E = ℰ + iγ of the complex energy plane.
pub type ComplexEnergy = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModelSpec {
    Step { v1: f64 },
    #[serde(rename = "expstep")]
    ExpStep { v1: f64, a: f64 },
    #[serde(rename = "linear")]
    LinearStep { v1: f64, a: f64 },
    #[serde(rename = "sqwell")]
    SquareWell { v0: f64, v1: f64, a: f64 },
    RosenMorse { s: f64, c: f64 },
}

/// Ray Im E = `im`, Re E ≥ 0, where K₁ or K₂ jumps sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchCut {
    pub im: f64,
}

impl BranchCut {
    /// Does the cut meet [re0, re1] × [im0, im1) ?
    ///
    /// Nodes on the cut take the principal-branch value, which is the limit
    /// from below for both cuts. A box with the cut on its top edge is
    /// therefore continuous and stays in; one with the cut on its bottom
    /// edge does not.
    pub fn hits_box(&self, re0: f64, re1: f64, im0: f64, im1: f64) -> bool {
        im0 <= self.im && self.im < im1 && re1.max(re0) >= 0.0
    }
}

impl ModelSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::Step { .. } => "step",
            ModelSpec::ExpStep { .. } => "expstep",
            ModelSpec::LinearStep { .. } => "linear",
            ModelSpec::SquareWell { .. } => "sqwell",
            ModelSpec::RosenMorse { .. } => "rosen-morse",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidModel(m.to_string()));
        let finite = |xs: &[f64]| xs.iter().all(|x| x.is_finite());
        match *self {
            ModelSpec::Step { v1 } => {
                if !finite(&[v1]) || v1 == 0.0 {
                    return bad("step needs a finite, nonzero V1");
                }
            }
            ModelSpec::ExpStep { v1, a } | ModelSpec::LinearStep { v1, a } => {
                if !finite(&[v1, a]) || v1 == 0.0 {
                    return bad("V1 must be finite and nonzero");
                }
                if a <= 0.0 {
                    return bad("a must be positive");
                }
            }
            ModelSpec::SquareWell { v0, v1, a } => {
                if !finite(&[v0, v1, a]) {
                    return bad("parameters must be finite");
                }
                if a <= 0.0 {
                    return bad("a must be positive");
                }
            }
            ModelSpec::RosenMorse { s, c } => {
                if !finite(&[s, c]) {
                    return bad("parameters must be finite");
                }
                if s <= 0.0 {
                    return bad("s must be positive");
                }
            }
        }
        Ok(())
    }

    /// V₁ with V(±∞) = ±iV₁; for Rosen-Morse this is 2c.
    pub fn saturation(&self) -> f64 {
        match *self {
            ModelSpec::Step { v1 }
            | ModelSpec::ExpStep { v1, .. }
            | ModelSpec::LinearStep { v1, .. }
            | ModelSpec::SquareWell { v1, .. } => v1,
            ModelSpec::RosenMorse { c, .. } => 2.0 * c,
        }
    }

    /// Points where V or one of its derivatives jumps.
    pub fn breakpoints(&self) -> Vec<f64> {
        match *self {
            ModelSpec::Step { .. } | ModelSpec::ExpStep { .. } => vec![0.0],
            ModelSpec::LinearStep { a, .. } | ModelSpec::SquareWell { a, .. } => vec![-a, a],
            ModelSpec::RosenMorse { .. } => vec![],
        }
    }

    /// Mirror image V(-x); for these models that is V₁ → -V₁ (c → -c).
    pub fn reflected(&self) -> ModelSpec {
        match *self {
            ModelSpec::Step { v1 } => ModelSpec::Step { v1: -v1 },
            ModelSpec::ExpStep { v1, a } => ModelSpec::ExpStep { v1: -v1, a },
            ModelSpec::LinearStep { v1, a } => ModelSpec::LinearStep { v1: -v1, a },
            ModelSpec::SquareWell { v0, v1, a } => ModelSpec::SquareWell { v0, v1: -v1, a },
            ModelSpec::RosenMorse { s, c } => ModelSpec::RosenMorse { s, c: -c },
        }
    }

    pub fn has_characteristic(&self) -> bool {
        !matches!(self, ModelSpec::RosenMorse { .. })
    }

    /// Cuts of the principal roots K₁ and K₂ in the E plane.
    pub fn branch_cuts(&self) -> Vec<BranchCut> {
        let v1 = self.saturation();
        vec![BranchCut { im: -v1 }, BranchCut { im: v1 }]
    }

    /// Length scale of the structure: a, or 1 for the step and Rosen-Morse.
    pub fn width(&self) -> f64 {
        match *self {
            ModelSpec::ExpStep { a, .. }
            | ModelSpec::LinearStep { a, .. }
            | ModelSpec::SquareWell { a, .. } => a,
            _ => 1.0,
        }
    }
}

/// Asymptotic wavenumbers and the model-specific auxiliary quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Kinematics {
    pub k1: Complex64,
    pub k2: Complex64,
    pub q: Option<Complex64>,
    pub g: Option<f64>,
    pub h1: Option<Complex64>,
    pub h2: Option<Complex64>,
    pub p: Option<Complex64>,
}

fn k_pair(e: Complex64, v1: f64) -> (Complex64, Complex64) {
    let iv = Complex64::new(0.0, v1);
    ((-(e + iv)).sqrt(), (-(e - iv)).sqrt())
}

/// a·√(iV₁) on the principal branch.
fn q_of(v1: f64, a: f64) -> Complex64 {
    let r = (v1.abs() / 2.0).sqrt();
    Complex64::new(a * r, a * r * v1.signum())
}

fn g_of(v1: f64, a: f64) -> f64 {
    (v1.abs() / a).powf(2.0 / 3.0)
}

pub fn kinematics(model: &ModelSpec, e: ComplexEnergy) -> Kinematics {
    let (k1, k2) = k_pair(e, model.saturation());
    let mut out = Kinematics { k1, k2, q: None, g: None, h1: None, h2: None, p: None };
    match *model {
        ModelSpec::ExpStep { v1, a } => out.q = Some(q_of(v1, a)),
        ModelSpec::LinearStep { v1, a } => {
            let g = g_of(v1, a);
            let iv = Complex64::new(0.0, v1);
            out.g = Some(g);
            out.h1 = Some((e + iv) / g);
            out.h2 = Some((e - iv) / g);
        }
        ModelSpec::SquareWell { v0, .. } => out.p = Some((e + v0).sqrt()),
        _ => {}
    }
    out
}

/// Matching condition of the plain step. It is K₁ + K₂, which for real E
/// equals 2k₁ and never vanishes while V₁ ≠ 0.
pub fn char_step(e: ComplexEnergy, v1: f64) -> Complex64 {
    let (k1, k2) = k_pair(e, v1);
    k1 + k2
}

/// J_{K₂a}(q) I'_{K₁a}(q) + I_{K₁a}(q) J'_{K₂a}(q).
pub fn char_expstep(e: ComplexEnergy, v1: f64, a: f64) -> Result<Complex64> {
    let (k1, k2) = k_pair(e, v1);
    let q = q_of(v1, a);
    let (n1, n2) = (k1 * a, k2 * a);
    Ok(bessel_j(n2, q, false)? * bessel_i(n1, q, true)? + bessel_i(n1, q, false)? * bessel_j(n2, q, true)?)
}

/// The 2×2 matching determinant of the linear step in Airy functions.
pub fn char_linear(e: ComplexEnergy, v1: f64, a: f64) -> Result<Complex64> {
    let (k1, k2) = k_pair(e, v1);
    let g = g_of(v1, a);
    let iv = Complex64::new(0.0, v1);
    let s1 = airy_all((e + iv) / g)?;
    let s2 = airy_all((e - iv) / g)?;
    // h' = dh/dx = -i sgn(V1) √g
    let i_sg = Complex64::new(0.0, v1.signum() * g.sqrt());
    Ok(k1 * k2 * (s2.ai * s1.bi - s1.ai * s2.bi)
        - i_sg * k1 * (s2.dai * s1.bi - s1.ai * s2.dbi)
        - i_sg * k2 * (s1.dai * s2.bi - s2.ai * s1.dbi)
        - g * (s1.dai * s2.dbi - s2.dai * s1.dbi))
}

/// (K₁+K₂) p cos 2pa + (K₁K₂ - p²) sin 2pa with principal p.
pub fn char_sqwell(e: ComplexEnergy, v0: f64, v1: f64, a: f64) -> Complex64 {
    char_sqwell_with_p(e, v1, a, (e + v0).sqrt())
}

/// Same as [`char_sqwell`] with the branch of p supplied by the caller.
pub fn char_sqwell_with_p(e: ComplexEnergy, v1: f64, a: f64, p: Complex64) -> Complex64 {
    let (k1, k2) = k_pair(e, v1);
    let u = p * (2.0 * a);
    (k1 + k2) * p * u.cos() + (k1 * k2 - p * p) * u.sin()
}

/// Characteristic function in its textbook form.
pub fn characteristic(model: &ModelSpec, e: ComplexEnergy) -> Result<Complex64> {
    match *model {
        ModelSpec::Step { v1 } => Ok(char_step(e, v1)),
        ModelSpec::ExpStep { v1, a } => char_expstep(e, v1, a),
        ModelSpec::LinearStep { v1, a } => char_linear(e, v1, a),
        ModelSpec::SquareWell { v0, v1, a } => Ok(char_sqwell(e, v0, v1, a)),
        ModelSpec::RosenMorse { .. } => Err(Error::NoCharacteristic("rosen-morse")),
    }
}

fn sinc(u: Complex64) -> Complex64 {
    if u.norm() < 1e-4 {
        1.0 - u * u / 6.0
    } else {
        u.sin() / u
    }
}

/// Characteristic function with zero-free factors removed.
///
/// Same zeros as [`characteristic`], but real on the real axis up to the
/// physical cuts and free of the p-cut for the square well:
///
/// * exponential step: S_J(K₂a) T_I(K₁a) + S_I(K₁a) T_J(K₂a), the Bessel
///   pair with the (q/2)^ν / Γ(ν+1) prefactors stripped,
/// * linear step: i times the Airy determinant,
/// * square well: the textbook form divided by p, which is even in p.
pub fn reduced_characteristic(model: &ModelSpec, e: ComplexEnergy) -> Result<Complex64> {
    match *model {
        ModelSpec::Step { v1 } => Ok(char_step(e, v1)),
        ModelSpec::ExpStep { v1, a } => {
            let (k1, k2) = k_pair(e, v1);
            let w = Complex64::new(0.0, a * a * v1 / 4.0);
            let (si, ti) = bessel_series_sums(k1 * a, w)?;
            let (sj, tj) = bessel_series_sums(k2 * a, -w)?;
            Ok(sj * ti + si * tj)
        }
        ModelSpec::LinearStep { v1, a } => Ok(Complex64::i() * char_linear(e, v1, a)?),
        ModelSpec::SquareWell { v0, v1, a } => {
            let (k1, k2) = k_pair(e, v1);
            let p2 = e + v0;
            let p = p2.sqrt();
            let u = p * (2.0 * a);
            Ok((k1 + k2) * u.cos() + (k1 * k2 - p2) * sinc(u) * (2.0 * a))
        }
        ModelSpec::RosenMorse { .. } => Err(Error::NoCharacteristic("rosen-morse")),
    }
}

/// Bound states of the Hermitian well of depth V₀ and half-width a, from
/// tan Pa = K/P (even) and tan Pa = -P/K (odd). Each branch of tan holds at
/// most one root and is searched by bisection in θ = Pa.
pub fn hermitian_sqwell_levels(v0: f64, a: f64, count: usize) -> Vec<f64> {
    if v0 <= 0.0 || a <= 0.0 {
        return Vec::new();
    }
    let theta_max = a * v0.sqrt();
    let energy = |th: f64| (th / a).powi(2) - v0;
    // sign-adjusted cross-multiplied forms, increasing on their branch
    let even = |th: f64, n: i64| {
        let (p, k) = (th / a, (-energy(th)).max(0.0).sqrt());
        (p * th.sin() - k * th.cos()) * if n % 2 == 0 { 1.0 } else { -1.0 }
    };
    let odd = |th: f64, n: i64| {
        let (p, k) = (th / a, (-energy(th)).max(0.0).sqrt());
        -(p * th.cos() + k * th.sin()) * if n % 2 == 0 { 1.0 } else { -1.0 }
    };
    let mut out = Vec::new();
    let mut n = 0i64;
    loop {
        let base = n as f64 * PI;
        if base >= theta_max {
            break;
        }
        let branches: [(f64, f64, bool); 2] = [(base, base + PI / 2.0, true), (base + PI / 2.0, base + PI, false)];
        for (lo, hi, is_even) in branches {
            if lo >= theta_max {
                continue;
            }
            let hi = hi.min(theta_max);
            let f = |th: f64| if is_even { even(th, n) } else { odd(th, n) };
            let (mut l, mut h) = (lo, hi);
            if f(l) > 0.0 || f(h) < 0.0 {
                continue;
            }
            for _ in 0..200 {
                let m = 0.5 * (l + h);
                if f(m) < 0.0 {
                    l = m;
                } else {
                    h = m;
                }
            }
            let e = energy(0.5 * (l + h));
            if e < 0.0 && e > -v0 {
                out.push(e);
            }
        }
        n += 1;
    }
    out.sort_by(f64::total_cmp);
    out.truncate(count);
    out
}

/// E_n = -(n-s)² + c²/(n-s)² for the integers 0 ≤ n < s.
pub fn rosen_morse_levels(s: f64, c: f64) -> Vec<f64> {
    if s <= 0.0 {
        return Vec::new();
    }
    (0..)
        .map(|n| n as f64)
        .take_while(|&n| n < s)
        .map(|n| {
            let d = (n - s).powi(2);
            -d + c * c / d
        })
        .collect()
}

pub fn potential_value(model: &ModelSpec, x: f64) -> Complex64 {
    let i = Complex64::i();
    match *model {
        ModelSpec::Step { v1 } => {
            if x <= 0.0 {
                -i * v1
            } else {
                i * v1
            }
        }
        ModelSpec::ExpStep { v1, a } => {
            if x <= 0.0 {
                -i * v1 * (1.0 - (2.0 * x / a).exp())
            } else {
                i * v1 * (1.0 - (-2.0 * x / a).exp())
            }
        }
        ModelSpec::LinearStep { v1, a } => i * v1 * (x / a).clamp(-1.0, 1.0),
        ModelSpec::SquareWell { v0, v1, a } => {
            if x < -a {
                -i * v1
            } else if x > a {
                i * v1
            } else {
                Complex64::new(-v0, 0.0)
            }
        }
        ModelSpec::RosenMorse { s, c } => {
            let sech = 1.0 / x.cosh();
            Complex64::new(-s * (s + 1.0) * sech * sech, 2.0 * c * x.tanh())
        }
    }
}
