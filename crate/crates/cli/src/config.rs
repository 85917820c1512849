//! Run configuration: a flat TOML file whose keys match the long flags,
//! with flags taking precedence.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use ptsat::models::ModelSpec;
use ptsat::oracle::{ShootingConfig, DEFAULT_ORACLE_GRID};
use ptsat::rootfinder::{SearchRect, SpectrumOptions, DEFAULT_GRID};
use ptsat::Complex64;
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Every setting, from the config file or the command line.
#[derive(Debug, Clone, Default, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// step | expstep | linear | sqwell | rosen-morse
    #[arg(long)]
    pub model: Option<String>,
    #[arg(long = "V0", allow_hyphen_values = true)]
    #[serde(rename = "V0")]
    pub v0: Option<f64>,
    #[arg(long = "V1", allow_hyphen_values = true)]
    #[serde(rename = "V1")]
    pub v1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,

    /// re_min,re_max,im_min,im_max
    #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<f64, 4>)]
    pub rect: Option<[f64; 4]>,
    /// NX,NY cells of the characteristic-function scan
    #[arg(long, value_parser = parse_list::<usize, 2>)]
    pub grid: Option<[usize; 2]>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_f: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub tol_real: Option<f64>,

    /// Use the shooting oracle instead of the characteristic function
    #[arg(long, default_missing_value = "true", num_args = 0..=1)]
    pub oracle: Option<bool>,
    /// NX,NY cells of the oracle scan
    #[arg(long, value_parser = parse_list::<usize, 2>)]
    pub oracle_grid: Option<[usize; 2]>,
    /// RK4 steps per half-line
    #[arg(long)]
    pub n_steps: Option<usize>,
    /// Oracle truncation half-width
    #[arg(long = "L")]
    #[serde(rename = "L")]
    pub l: Option<f64>,

    /// Closed-form levels (rosen-morse only)
    #[arg(long, default_missing_value = "true", num_args = 0..=1)]
    pub analytic: Option<bool>,

    /// re,im
    #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<f64, 2>)]
    pub energy: Option<[f64; 2]>,
    /// lo,hi
    #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<f64, 2>)]
    pub x_range: Option<[f64; 2]>,
    #[arg(long)]
    pub x_points: Option<usize>,
    /// Skip the eigenvalue residual check
    #[arg(long, default_missing_value = "true", num_args = 0..=1)]
    pub force: Option<bool>,

    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Comma separated list of exactly N values, e.g. `0,45,-4,4`.
fn parse_list<T: FromStr + Copy + Default, const N: usize>(s: &str) -> Result<[T; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated values, got {}", parts.len()));
    }
    let mut out = [T::default(); N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("cannot parse '{p}'"))?;
    }
    Ok(out)
}

macro_rules! overlay {
    ($base:ident, $top:ident, $($f:ident),*) => {
        $( if $top.$f.is_some() { $base.$f = $top.$f.clone(); } )*
    };
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<RunConfig, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// `self` with every setting present in `flags` replaced.
    pub fn overridden_by(mut self, flags: &RunConfig) -> RunConfig {
        overlay!(
            self, flags, model, v0, v1, a, s, c, rect, grid, tol_f, tol_real, oracle, oracle_grid, n_steps, l, analytic, energy,
            x_range, x_points, force, out, format
        );
        self
    }

    pub fn model(&self) -> Result<ModelSpec, CliError> {
        let name = self.model.as_deref().ok_or_else(|| CliError::Config("no --model given".into()))?;
        let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| CliError::Config(format!("model {name} needs --{flag}")));
        let given: Vec<&str> = [("V0", self.v0), ("V1", self.v1), ("a", self.a), ("s", self.s), ("c", self.c)]
            .iter()
            .filter(|(_, v)| v.is_some())
            .map(|(k, _)| *k)
            .collect();
        let (spec, allowed): (ModelSpec, &[&str]) = match name {
            "step" => (ModelSpec::Step { v1: need(self.v1, "V1")? }, &["V1"]),
            "expstep" => (ModelSpec::ExpStep { v1: need(self.v1, "V1")?, a: need(self.a, "a")? }, &["V1", "a"]),
            "linear" => (ModelSpec::LinearStep { v1: need(self.v1, "V1")?, a: need(self.a, "a")? }, &["V1", "a"]),
            "sqwell" => (
                ModelSpec::SquareWell { v0: self.v0.unwrap_or(0.0), v1: need(self.v1, "V1")?, a: need(self.a, "a")? },
                &["V0", "V1", "a"],
            ),
            "rosen-morse" => (ModelSpec::RosenMorse { s: need(self.s, "s")?, c: need(self.c, "c")? }, &["s", "c"]),
            other => return Err(CliError::Config(format!("unknown model '{other}'"))),
        };
        if let Some(extra) = given.iter().find(|k| !allowed.contains(k)) {
            return Err(CliError::Config(format!("--{extra} does not apply to model {name}")));
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn rect(&self, grid: (usize, usize)) -> Result<SearchRect, CliError> {
        let [a, b, c, d] = self.rect.ok_or_else(|| CliError::Config("no --rect given".into()))?;
        Ok(SearchRect::new(a, b, c, d, grid.0, grid.1)?)
    }

    pub fn scan_rect(&self) -> Result<SearchRect, CliError> {
        self.rect(self.grid.map_or(DEFAULT_GRID, |[x, y]| (x, y)))
    }

    pub fn oracle_rect(&self) -> Result<SearchRect, CliError> {
        self.rect(self.oracle_grid.map_or(DEFAULT_ORACLE_GRID, |[x, y]| (x, y)))
    }

    pub fn options(&self) -> SpectrumOptions {
        let d = SpectrumOptions::default();
        SpectrumOptions { tol_f: self.tol_f.unwrap_or(d.tol_f), tol_real: self.tol_real.unwrap_or(d.tol_real), ..d }
    }

    pub fn shooting(&self, model: &ModelSpec) -> ShootingConfig {
        let d = ShootingConfig::for_model(model);
        ShootingConfig { l: self.l.unwrap_or(d.l), n_steps: self.n_steps.unwrap_or(d.n_steps), ..d }
    }

    pub fn energy(&self) -> Result<Complex64, CliError> {
        let [re, im] = self.energy.ok_or_else(|| CliError::Config("no --energy given".into()))?;
        Ok(Complex64::new(re, im))
    }

    pub fn flag(v: Option<bool>) -> bool {
        v.unwrap_or(false)
    }
}
