//! JSON documents and CSV tables written by the subcommands.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ptsat::eigenfunctions::{MatchReport, WavefunctionSample};
use ptsat::models::ModelSpec;
use ptsat::oracle::ShootingConfig;
use ptsat::rootfinder::{ContourSet, RootKind, SearchRect};
use ptsat::Complex64;
use serde::Serialize;

pub const UNITS: &str = "hbar=1, 2m=1";
pub const TOOL_VERSION: &str = concat!("ptsat ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct C {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for C {
    fn from(z: Complex64) -> Self {
        C { re: z.re, im: z.im }
    }
}

pub fn params(model: &ModelSpec) -> BTreeMap<&'static str, f64> {
    let v: Vec<(&str, f64)> = match *model {
        ModelSpec::Step { v1 } => vec![("V1", v1)],
        ModelSpec::ExpStep { v1, a } | ModelSpec::LinearStep { v1, a } => vec![("V1", v1), ("a", a)],
        ModelSpec::SquareWell { v0, v1, a } => vec![("V0", v0), ("V1", v1), ("a", a)],
        ModelSpec::RosenMorse { s, c } => vec![("s", s), ("c", c)],
    };
    v.into_iter().collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RootOut {
    pub re: f64,
    pub im: f64,
    pub kind: RootKind,
    pub pair_id: Option<usize>,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumDoc {
    pub model: &'static str,
    pub params: BTreeMap<&'static str, f64>,
    pub units: &'static str,
    pub rect: Option<SearchRect>,
    /// characteristic | oracle | analytic
    pub source: &'static str,
    pub roots: Vec<RootOut>,
    /// Zeros dropped because a side fails to decay.
    pub rejected: Vec<C>,
    pub tool_version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReflectionOut {
    pub partner: C,
    #[serde(rename = "N")]
    pub n: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct WavefunctionMeta {
    pub model: &'static str,
    pub params: BTreeMap<&'static str, f64>,
    pub units: &'static str,
    pub energy: C,
    pub points: usize,
    pub x_range: [f64; 2],
    pub match_report: MatchReport,
    pub residual_checked: bool,
    /// max ||ψ(x)| - |ψ(-x)|| relative to max |ψ|
    pub mirror_defect: f64,
    pub peak_x: f64,
    pub reflection: Option<ReflectionOut>,
    pub tool_version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct WavefunctionDoc<'a> {
    pub meta: &'a WavefunctionMeta,
    pub x: &'a [f64],
    pub re_psi: &'a [f64],
    pub im_psi: &'a [f64],
    pub abs_psi: &'a [f64],
    pub current: &'a [f64],
}

#[derive(Debug, Clone, Serialize)]
pub struct ContourDoc {
    pub model: &'static str,
    pub params: BTreeMap<&'static str, f64>,
    pub units: &'static str,
    pub rect: SearchRect,
    pub re_zero: Vec<Vec<C>>,
    pub im_zero: Vec<Vec<C>>,
    pub tool_version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub reference: Option<C>,
    pub oracle: Option<C>,
    pub delta: Option<f64>,
    pub tolerance: Option<f64>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyDoc {
    pub model: &'static str,
    pub params: BTreeMap<&'static str, f64>,
    pub units: &'static str,
    pub rect: SearchRect,
    pub reference_source: &'static str,
    pub shooting: ShootingConfig,
    pub oracle_grid: [usize; 2],
    pub rows: Vec<VerifyRow>,
    pub pass: bool,
    pub tool_version: &'static str,
}

/// 12 significant digits.
pub fn num(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn spectrum_csv(doc: &SpectrumDoc) -> String {
    let mut s = String::from("re,im,kind,pair_id,residual\n");
    for r in &doc.roots {
        let kind = match r.kind {
            RootKind::Real => "real",
            RootKind::CcpePlus => "ccpe_plus",
            RootKind::CcpeMinus => "ccpe_minus",
        };
        let pair = r.pair_id.map(|p| p.to_string()).unwrap_or_default();
        let _ = writeln!(s, "{},{},{kind},{pair},{}", num(r.re), num(r.im), num(r.residual));
    }
    s
}

pub fn wavefunction_csv(w: &WavefunctionSample) -> String {
    let mut s = String::from("x,re_psi,im_psi,abs_psi,current\n");
    for k in 0..w.len() {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            num(w.x[k]),
            num(w.re_psi[k]),
            num(w.im_psi[k]),
            num(w.abs_psi[k]),
            num(w.current[k])
        );
    }
    s
}

pub fn contour_doc(model: &ModelSpec, rect: SearchRect, set: &ContourSet) -> ContourDoc {
    let conv = |ls: &[Vec<Complex64>]| ls.iter().map(|l| l.iter().map(|&z| C::from(z)).collect()).collect();
    ContourDoc {
        model: model.name(),
        params: params(model),
        units: UNITS,
        rect,
        re_zero: conv(&set.re_zero),
        im_zero: conv(&set.im_zero),
        tool_version: TOOL_VERSION,
    }
}

pub fn contour_csv(doc: &ContourDoc) -> String {
    let mut s = String::from("curve,line,re,im\n");
    for (name, lines) in [("re_zero", &doc.re_zero), ("im_zero", &doc.im_zero)] {
        for (k, l) in lines.iter().enumerate() {
            for p in l {
                let _ = writeln!(s, "{name},{k},{},{}", num(p.re), num(p.im));
            }
        }
    }
    s
}

pub fn verify_csv(doc: &VerifyDoc) -> String {
    let mut s = String::from("ref_re,ref_im,oracle_re,oracle_im,delta,tolerance,ok\n");
    let opt = |v: Option<f64>| v.map(num).unwrap_or_default();
    for r in &doc.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            opt(r.reference.map(|c| c.re)),
            opt(r.reference.map(|c| c.im)),
            opt(r.oracle.map(|c| c.re)),
            opt(r.oracle.map(|c| c.im)),
            opt(r.delta),
            opt(r.tolerance),
            r.ok
        );
    }
    s
}
