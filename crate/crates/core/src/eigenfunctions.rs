//! Piecewise eigenfunctions at a given energy, matching diagnostics,
//! current density, the |ψ₊(x)| = N |ψ₋(-x)| check for conjugate pairs,
//! and Milne-form utilities.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{kinematics, rosen_morse_levels, ComplexEnergy, ModelSpec};
use crate::specfun::{airy_all, bessel_series_sums, jacobi_poly};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WavefunctionSample {
    pub x: Vec<f64>,
    pub psi: Vec<Complex64>,
    pub re_psi: Vec<f64>,
    pub im_psi: Vec<f64>,
    pub abs_psi: Vec<f64>,
    pub current: Vec<f64>,
}

impl WavefunctionSample {
    /// Build from raw samples; derived columns and J are filled in.
    pub fn new(x: Vec<f64>, psi: Vec<Complex64>) -> Self {
        let current = current_density_of(&x, &psi);
        WavefunctionSample {
            re_psi: psi.iter().map(|p| p.re).collect(),
            im_psi: psi.iter().map(|p| p.im).collect(),
            abs_psi: psi.iter().map(|p| p.norm()).collect(),
            x,
            psi,
            current,
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Position of the largest |ψ|.
    pub fn peak_position(&self) -> f64 {
        let k = argmax(&self.abs_psi);
        self.x[k]
    }

    /// |ψ(x)| interpolated linearly; zero outside the grid.
    pub fn abs_at(&self, x: f64) -> f64 {
        interp(&self.x, &self.abs_psi, x)
    }

    /// max over the grid of ||ψ(x)| - |ψ(-x)|| relative to max |ψ|.
    pub fn mirror_defect(&self) -> f64 {
        let peak = self.abs_psi.iter().cloned().fold(0.0, f64::max);
        self.x
            .iter()
            .zip(&self.abs_psi)
            .map(|(&x, &a)| (a - self.abs_at(-x)).abs())
            .fold(0.0, f64::max)
            / peak
    }

    /// Sign changes of Re ψ, ignoring values below 1e-8 of the maximum.
    pub fn oscillations(&self) -> usize {
        sign_changes(&self.re_psi)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchReport {
    pub joints: Vec<f64>,
    /// |ψ₋ - ψ₊| / max(|ψ₋|, |ψ₊|) per joint.
    pub value_jump: Vec<f64>,
    /// |ψ'₋ - ψ'₊| / max(|ψ'₋|, |ψ'₊|) per joint.
    pub derivative_jump: Vec<f64>,
}

impl MatchReport {
    pub fn max_jump(&self) -> f64 {
        self.value_jump.iter().chain(&self.derivative_jump).cloned().fold(0.0, f64::max)
    }
}

fn argmax(v: &[f64]) -> usize {
    let mut k = 0;
    for (i, &a) in v.iter().enumerate() {
        if a > v[k] {
            k = i;
        }
    }
    k
}

fn interp(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    if n == 0 || x < xs[0] || x > xs[n - 1] {
        return 0.0;
    }
    let k = xs.partition_point(|&v| v < x);
    if k == 0 {
        return ys[0];
    }
    if k >= n {
        return ys[n - 1];
    }
    let t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
    ys[k - 1] + t * (ys[k] - ys[k - 1])
}

fn sign_changes(v: &[f64]) -> usize {
    let peak = v.iter().map(|a| a.abs()).fold(0.0, f64::max);
    let mut last = 0.0f64;
    let mut count = 0;
    for &a in v {
        if a.abs() <= 1e-8 * peak {
            continue;
        }
        if last != 0.0 && (a > 0.0) != (last > 0.0) {
            count += 1;
        }
        last = a;
    }
    count
}

/// Second-order derivative estimate on a possibly non-uniform grid.
fn gradient<T>(x: &[f64], y: &[T]) -> Vec<T>
where
    T: Copy + std::ops::Sub<Output = T> + std::ops::Mul<f64, Output = T> + std::ops::Add<Output = T>,
{
    let n = x.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let d = if k == 0 {
            let (h1, h2) = (x[1] - x[0], x[2] - x[1]);
            y[0] * (-(2.0 * h1 + h2) / (h1 * (h1 + h2))) + y[1] * ((h1 + h2) / (h1 * h2)) + y[2] * (-h1 / (h2 * (h1 + h2)))
        } else if k == n - 1 {
            let (h1, h2) = (x[n - 2] - x[n - 3], x[n - 1] - x[n - 2]);
            y[n - 3] * (h2 / (h1 * (h1 + h2))) + y[n - 2] * (-(h1 + h2) / (h1 * h2)) + y[n - 1] * ((h1 + 2.0 * h2) / (h2 * (h1 + h2)))
        } else {
            let (h1, h2) = (x[k] - x[k - 1], x[k + 1] - x[k]);
            y[k - 1] * (-h2 / (h1 * (h1 + h2))) + y[k] * ((h2 - h1) / (h1 * h2)) + y[k + 1] * (h1 / (h2 * (h1 + h2)))
        };
        out.push(d);
    }
    out
}

/// J = Re ψ · (Im ψ)' - Im ψ · (Re ψ)', derivatives by central differences.
pub fn current_density_of(x: &[f64], psi: &[Complex64]) -> Vec<f64> {
    if x.len() < 3 {
        return vec![0.0; x.len()];
    }
    let d = gradient(x, psi);
    psi.iter().zip(&d).map(|(p, dp)| p.re * dp.im - p.im * dp.re).collect()
}

pub fn current_density(sample: &WavefunctionSample) -> Vec<f64> {
    current_density_of(&sample.x, &sample.psi)
}

/// N = median of |ψ₊(x)| / |ψ₋(-x)| and the largest relative deviation of
/// the ratio from N, over points with |ψ₋(-x)| > 1e-6 max |ψ₋|.
pub fn reflection_property(plus: &WavefunctionSample, minus: &WavefunctionSample) -> Result<(f64, f64)> {
    let peak = minus.abs_psi.iter().cloned().fold(0.0, f64::max);
    let mut ratios: Vec<f64> = plus
        .x
        .iter()
        .zip(&plus.abs_psi)
        .filter_map(|(&x, &a)| {
            if -x < minus.x[0] || -x > minus.x[minus.len() - 1] {
                return None;
            }
            let b = minus.abs_at(-x);
            (b > 1e-6 * peak).then(|| a / b)
        })
        .collect();
    if ratios.len() < 10 {
        return Err(Error::InsufficientSupport(ratios.len()));
    }
    let mut sorted = ratios.clone();
    sorted.sort_by(f64::total_cmp);
    let n = sorted[sorted.len() / 2];
    ratios.iter_mut().for_each(|r| *r = (*r / n - 1.0).abs());
    Ok((n, ratios.into_iter().fold(0.0, f64::max)))
}

/// V(x) = E + A''/A - C²/A⁴ from a sampled Milne amplitude A(x) > 0.
pub fn milne_reconstruct(x: &[f64], amplitude: &[f64], c: f64, e: f64) -> Result<Vec<Complex64>> {
    if x.len() < 4 || x.len() != amplitude.len() {
        return Err(Error::InsufficientSupport(x.len().min(amplitude.len())));
    }
    if let Some(k) = amplitude.iter().position(|&a| a.is_nan() || a <= 1e-150) {
        return Err(Error::Underflow(k));
    }
    let d1 = gradient(x, amplitude);
    let d2 = gradient(x, &d1);
    // interior points get the compact three-point stencil
    let mut dd = d2;
    for k in 1..x.len() - 1 {
        let (h1, h2) = (x[k] - x[k - 1], x[k + 1] - x[k]);
        dd[k] = 2.0 * (amplitude[k - 1] * h2 - amplitude[k] * (h1 + h2) + amplitude[k + 1] * h1) / (h1 * h2 * (h1 + h2));
    }
    Ok(amplitude
        .iter()
        .zip(&dd)
        .map(|(&a, &d)| Complex64::new(e + d / a - c * c / a.powi(4), 0.0))
        .collect())
}

/// The three reflectionless states ψ = A e^{iS} with S' = C/A², which carry
/// a constant current J = C.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilneState {
    /// e^{i(x + x³/3)} / √(1+x²)
    CubicPhase,
    /// e^{i sinh x} / √(cosh x)
    SinhPhase,
    /// e^{(i/2) sinh x} / √(cosh x)
    HalfSinhPhase,
}

impl MilneState {
    pub const ALL: [MilneState; 3] = [MilneState::CubicPhase, MilneState::SinhPhase, MilneState::HalfSinhPhase];

    pub fn amplitude(&self, x: f64) -> f64 {
        match self {
            MilneState::CubicPhase => 1.0 / (1.0 + x * x).sqrt(),
            _ => 1.0 / x.cosh().sqrt(),
        }
    }

    pub fn phase(&self, x: f64) -> f64 {
        match self {
            MilneState::CubicPhase => x + x.powi(3) / 3.0,
            MilneState::SinhPhase => x.sinh(),
            MilneState::HalfSinhPhase => 0.5 * x.sinh(),
        }
    }

    pub fn flux(&self) -> f64 {
        match self {
            MilneState::HalfSinhPhase => 0.5,
            _ => 1.0,
        }
    }

    pub fn psi(&self, x: f64) -> Complex64 {
        Complex64::from_polar(self.amplitude(x), self.phase(x))
    }

    pub fn sample(&self, x: &[f64]) -> WavefunctionSample {
        WavefunctionSample::new(x.to_vec(), x.iter().map(|&v| self.psi(v)).collect())
    }
}

/// Uniform grid of `n` points on [lo, hi].
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

/// Default half-width L = max(5a, 12 / min Re K) and point count 2001.
pub fn default_grid(model: &ModelSpec, e: ComplexEnergy) -> (f64, usize) {
    let k = kinematics(model, e);
    let decay = k.k1.re.min(k.k2.re).max(1e-2);
    ((5.0 * model.width()).max(12.0 / decay), 2001)
}

type Eval<'a> = Box<dyn Fn(f64) -> Result<(Complex64, Complex64)> + 'a>;

struct Pieces<'a> {
    joints: Vec<f64>,
    /// pieces[k] lives left of joints[k] (or right of the last joint)
    pieces: Vec<Eval<'a>>,
}

impl Pieces<'_> {
    fn eval(&self, x: f64) -> Result<Complex64> {
        let k = self.joints.partition_point(|&j| j < x);
        Ok((self.pieces[k])(x)?.0)
    }

    fn report(&self) -> Result<MatchReport> {
        let mut rep = MatchReport { joints: self.joints.clone(), value_jump: vec![], derivative_jump: vec![] };
        for (k, &xj) in self.joints.iter().enumerate() {
            let (pl, dl) = (self.pieces[k])(xj)?;
            let (pr, dr) = (self.pieces[k + 1])(xj)?;
            let vs = pl.norm().max(pr.norm());
            rep.value_jump.push(if vs > 0.0 { (pl - pr).norm() / vs } else { 0.0 });
            let ds = dl.norm().max(dr.norm());
            rep.derivative_jump.push(if ds > 0.0 { (dl - dr).norm() / ds } else { 0.0 });
        }
        Ok(rep)
    }
}

fn sinc(u: Complex64) -> Complex64 {
    if u.norm() < 1e-4 {
        1.0 - u * u / 6.0
    } else {
        u.sin() / u
    }
}

fn build(model: &ModelSpec, e: ComplexEnergy) -> Result<Pieces<'static>> {
    let kin = kinematics(model, e);
    let (k1, k2) = (kin.k1, kin.k2);
    let left_exp = move |x0: f64| -> Eval<'static> { Box::new(move |x: f64| Ok(((k1 * (x - x0)).exp(), k1 * (k1 * (x - x0)).exp()))) };
    let right_exp = move |x0: f64, b: Complex64| -> Eval<'static> {
        Box::new(move |x: f64| {
            let v = b * (-k2 * (x - x0)).exp();
            Ok((v, -k2 * v))
        })
    };
    match *model {
        ModelSpec::Step { .. } => Ok(Pieces { joints: vec![0.0], pieces: vec![left_exp(0.0), right_exp(0.0, 1.0.into())] }),
        ModelSpec::ExpStep { v1, a } => {
            let w = Complex64::new(0.0, a * a * v1 / 4.0);
            let (n1, n2) = (k1 * a, k2 * a);
            let (si0, _) = bessel_series_sums(n1, w)?;
            let (sj0, _) = bessel_series_sums(n2, -w)?;
            if si0.norm() == 0.0 || sj0.norm() == 0.0 {
                return Err(Error::Degenerate(e));
            }
            let left: Eval = Box::new(move |x: f64| {
                let (s, t) = bessel_series_sums(n1, w * (2.0 * x / a).exp())?;
                let g = (k1 * x).exp() / si0;
                Ok((g * s, g * t / a))
            });
            let right: Eval = Box::new(move |x: f64| {
                let (s, t) = bessel_series_sums(n2, -w * (-2.0 * x / a).exp())?;
                let g = (-k2 * x).exp() / sj0;
                Ok((g * s, -g * t / a))
            });
            Ok(Pieces { joints: vec![0.0], pieces: vec![left, right] })
        }
        ModelSpec::LinearStep { v1, a } => {
            let g = kin.g.expect("linear step kinematics");
            let h0 = Complex64::new(0.0, -v1 / (a * g));
            let h = move |x: f64| (e - Complex64::new(0.0, v1 * x / a)) / g;
            let s1 = airy_all(h(-a))?;
            let det = h0 * (s1.ai * s1.dbi - s1.bi * s1.dai);
            if det.norm() < 1e-300 {
                return Err(Error::Degenerate(e));
            }
            let c = (h0 * s1.dbi - s1.bi * k1) / det;
            let d = (s1.ai * k1 - h0 * s1.dai) / det;
            let middle = move |x: f64| -> Result<(Complex64, Complex64)> {
                let s = airy_all(h(x))?;
                Ok((c * s.ai + d * s.bi, h0 * (c * s.dai + d * s.dbi)))
            };
            let (pa, _) = middle(a)?;
            Ok(Pieces { joints: vec![-a, a], pieces: vec![left_exp(-a), Box::new(middle), right_exp(a, pa)] })
        }
        ModelSpec::SquareWell { v0, a, .. } => {
            let p2 = e + v0;
            let p = p2.sqrt();
            let middle = move |x: f64| -> Result<(Complex64, Complex64)> {
                let t = x + a;
                let u = p * t;
                Ok((u.cos() + k1 * t * sinc(u), -p2 * t * sinc(u) + k1 * u.cos()))
            };
            let (pa, _) = middle(a)?;
            Ok(Pieces { joints: vec![-a, a], pieces: vec![left_exp(-a), Box::new(middle), right_exp(a, pa)] })
        }
        ModelSpec::RosenMorse { s, c } => {
            let levels = rosen_morse_levels(s, c);
            let n = levels
                .iter()
                .enumerate()
                .min_by(|x, y| (*x.1 - e).norm().total_cmp(&(*y.1 - e).norm()))
                .map(|(n, _)| n)
                .ok_or(Error::Degenerate(e))?;
            if (levels[n] - e).norm() > 1e-3 * e.norm().max(1.0) {
                return Err(Error::Degenerate(e));
            }
            let m = s - n as f64;
            let alpha = Complex64::new(m, c / m);
            let beta = alpha.conj();
            let closed: Eval = Box::new(move |x: f64| {
                let v = rosen_morse_state(n as u32, m, c, alpha, beta, x)?;
                Ok((v, Complex64::new(0.0, 0.0)))
            });
            Ok(Pieces { joints: vec![], pieces: vec![closed] })
        }
    }
}

fn rosen_morse_state(n: u32, m: f64, c: f64, alpha: Complex64, beta: Complex64, x: f64) -> Result<Complex64> {
    // sech^m x computed as exp(-m log cosh x) to stay finite for large |x|
    let log_cosh = x.abs() + (-2.0 * x.abs()).exp().ln_1p() - std::f64::consts::LN_2;
    let amp = (-m * log_cosh).exp();
    let phase = Complex64::from_polar(1.0, -c * x / m);
    Ok(amp * phase * jacobi_poly(n, alpha, beta, Complex64::new(x.tanh(), 0.0))?)
}

/// Closed-form Rosen-Morse eigenstate of index n (unnormalized).
pub fn rosen_morse_eigenstate(s: f64, c: f64, n: u32, x: f64) -> Result<Complex64> {
    let m = s - n as f64;
    if m <= 0.0 {
        return Err(Error::InvalidModel(format!("level {n} does not exist for s = {s}")));
    }
    let alpha = Complex64::new(m, c / m);
    rosen_morse_state(n, m, c, alpha, alpha.conj(), x)
}

/// Eigenfunction of `model` at `e` on the points `x`, scaled so that its
/// largest sample is exactly 1, together with the matching residuals.
pub fn assemble_on(model: &ModelSpec, e: ComplexEnergy, x: &[f64]) -> Result<(WavefunctionSample, MatchReport)> {
    model.validate()?;
    let pieces = build(model, e)?;
    let report = pieces.report()?;
    let raw: Vec<Complex64> = x.iter().map(|&v| pieces.eval(v)).collect::<Result<_>>()?;
    let peak = raw
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .ok_or(Error::InsufficientSupport(0))?;
    if !peak.norm().is_finite() || peak.norm() <= 0.0 {
        return Err(Error::Degenerate(e));
    }
    let psi = raw.into_iter().map(|p| p / peak).collect();
    Ok((WavefunctionSample::new(x.to_vec(), psi), report))
}

/// [`assemble_on`] for `n` uniform points on `x_range`.
pub fn assemble(model: &ModelSpec, e: ComplexEnergy, x_range: (f64, f64), n: usize) -> Result<(WavefunctionSample, MatchReport)> {
    assemble_on(model, e, &linspace(x_range.0, x_range.1, n))
}

/// [`assemble`] on the default symmetric grid.
pub fn assemble_default(model: &ModelSpec, e: ComplexEnergy) -> Result<(WavefunctionSample, MatchReport)> {
    let (l, n) = default_grid(model, e);
    assemble(model, e, (-l, l), n)
}
