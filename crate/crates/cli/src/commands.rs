use log::info;
use ptsat::eigenfunctions::{assemble, default_grid, reflection_property};
use ptsat::models::{rosen_morse_levels, ModelSpec};
use ptsat::oracle::{oracle_spectrum, Shooter};
use ptsat::rootfinder::{find_spectrum, model_contours, Root, RootKind, SearchRect, Spectrum};
use ptsat::Complex64;

use crate::config::{Format, RunConfig};
use crate::error::CliError;
use crate::output::*;

/// Jumps above this mean the energy is not an eigenvalue.
const MATCH_TOL: f64 = 1e-6;

/// A finished command: the main document and an optional sidecar.
pub struct Output {
    pub body: String,
    pub sidecar: Option<String>,
    pub failure: Option<CliError>,
}

impl Output {
    fn plain(body: String) -> Output {
        Output { body, sidecar: None, failure: None }
    }
}

fn root_out(r: &Root) -> RootOut {
    RootOut { re: r.energy.re, im: r.energy.im, kind: r.kind, pair_id: r.pair_id, residual: r.residual }
}

fn analytic_roots(model: &ModelSpec, cfg: &RunConfig) -> Result<Vec<RootOut>, CliError> {
    let ModelSpec::RosenMorse { s, c } = *model else {
        return Err(CliError::Config(format!("closed-form levels exist only for rosen-morse, not {}", model.name())));
    };
    let shooter = Shooter::new(model, &cfg.shooting(model))?;
    let rect = cfg.rect.map(|_| cfg.scan_rect()).transpose()?;
    rosen_morse_levels(s, c)
        .into_iter()
        .map(|e| Complex64::new(e, 0.0))
        .filter(|&e| rect.is_none_or(|r| r.contains(e)))
        .map(|e| Ok(RootOut { re: e.re, im: 0.0, kind: RootKind::Real, pair_id: None, residual: shooter.mismatch(e)?.norm() }))
        .collect()
}

fn solve(model: &ModelSpec, cfg: &RunConfig, use_oracle: bool) -> Result<(Spectrum, SearchRect), CliError> {
    if use_oracle {
        let rect = cfg.oracle_rect()?;
        Ok((oracle_spectrum(model, &rect, &cfg.shooting(model), &cfg.options())?, rect))
    } else {
        let rect = cfg.scan_rect()?;
        Ok((find_spectrum(model, &rect, &cfg.options())?, rect))
    }
}

pub fn spectrum(cfg: &RunConfig) -> Result<Output, CliError> {
    let model = cfg.model()?;
    let (source, rect, roots, rejected) = if RunConfig::flag(cfg.analytic) {
        let rect = cfg.rect.map(|_| cfg.scan_rect()).transpose()?;
        ("analytic", rect, analytic_roots(&model, cfg)?, vec![])
    } else {
        // without a characteristic function the oracle is the only route
        let use_oracle = RunConfig::flag(cfg.oracle) || !model.has_characteristic();
        let (s, rect) = solve(&model, cfg, use_oracle)?;
        let source = if use_oracle { "oracle" } else { "characteristic" };
        (source, Some(rect), s.roots.iter().map(root_out).collect(), s.rejected.iter().map(|r| C::from(r.energy)).collect())
    };
    info!("{} roots from {source}", roots.len());
    let doc = SpectrumDoc {
        model: model.name(),
        params: params(&model),
        units: UNITS,
        rect,
        source,
        roots,
        rejected,
        tool_version: TOOL_VERSION,
    };
    Ok(Output::plain(match cfg.format.unwrap_or(Format::Json) {
        Format::Json => json(&doc),
        Format::Csv => spectrum_csv(&doc),
    }))
}

pub fn wavefunction(cfg: &RunConfig) -> Result<Output, CliError> {
    let model = cfg.model()?;
    let e = cfg.energy()?;
    let (lo, hi) = match cfg.x_range {
        Some([lo, hi]) if lo < hi => (lo, hi),
        Some(_) => return Err(CliError::Config("--x-range needs lo < hi".into())),
        None => {
            let (l, _) = default_grid(&model, e);
            (-l, l)
        }
    };
    let n = cfg.x_points.unwrap_or(default_grid(&model, e).1);
    if n < 3 {
        return Err(CliError::Config("--x-points must be at least 3".into()));
    }
    let force = RunConfig::flag(cfg.force);
    let (w, report) = assemble(&model, e, (lo, hi), n)?;
    if !force {
        if let ModelSpec::RosenMorse { s, c } = model {
            let gap = rosen_morse_levels(s, c).iter().map(|&l| (e - l).norm()).fold(f64::INFINITY, f64::min);
            if gap > MATCH_TOL * e.norm().max(1.0) {
                return Err(CliError::Residual(format!("E = {e} is {gap:.3e} away from the nearest level")));
            }
        } else if report.max_jump() > MATCH_TOL {
            return Err(CliError::Residual(format!(
                "matching jump {:.3e} at E = {e} exceeds {MATCH_TOL:e}; pass --force to write it anyway",
                report.max_jump()
            )));
        }
    }
    let reflection = if e.im != 0.0 {
        let (partner, _) = assemble(&model, e.conj(), (lo, hi), n)?;
        let (plus, minus) = if e.im > 0.0 { (&w, &partner) } else { (&partner, &w) };
        let (n_ratio, deviation) = reflection_property(plus, minus)?;
        Some(ReflectionOut { partner: e.conj().into(), n: n_ratio, deviation })
    } else {
        None
    };
    let meta = WavefunctionMeta {
        model: model.name(),
        params: params(&model),
        units: UNITS,
        energy: e.into(),
        points: n,
        x_range: [lo, hi],
        mirror_defect: w.mirror_defect(),
        peak_x: w.peak_position(),
        match_report: report,
        residual_checked: !force,
        reflection,
        tool_version: TOOL_VERSION,
    };
    let body = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => wavefunction_csv(&w),
        Format::Json => json(&WavefunctionDoc {
            meta: &meta,
            x: &w.x,
            re_psi: &w.re_psi,
            im_psi: &w.im_psi,
            abs_psi: &w.abs_psi,
            current: &w.current,
        }),
    };
    Ok(Output { body, sidecar: Some(json(&meta)), failure: None })
}

pub fn contours(cfg: &RunConfig) -> Result<Output, CliError> {
    let model = cfg.model()?;
    let rect = cfg.scan_rect()?;
    let doc = contour_doc(&model, rect, &model_contours(&model, &rect)?);
    Ok(Output::plain(match cfg.format.unwrap_or(Format::Json) {
        Format::Json => json(&doc),
        Format::Csv => contour_csv(&doc),
    }))
}

/// Oracle roots must land within max(1e-3, 1e-3 |E|) of the reference
/// roots, one to one.
pub fn verify(cfg: &RunConfig) -> Result<Output, CliError> {
    let model = cfg.model()?;
    let (reference_source, reference): (&str, Vec<Complex64>) = if model.has_characteristic() {
        ("characteristic", find_spectrum(&model, &cfg.scan_rect()?, &cfg.options())?.roots.iter().map(|r| r.energy).collect())
    } else {
        let rect = cfg.scan_rect()?;
        let ModelSpec::RosenMorse { s, c } = model else { unreachable!("only rosen-morse lacks a characteristic function") };
        let levels = rosen_morse_levels(s, c).into_iter().map(|e| Complex64::new(e, 0.0)).filter(|&e| rect.contains(e)).collect();
        ("analytic", levels)
    };
    let shooting = cfg.shooting(&model);
    let (oracle, rect) = solve(&model, cfg, true)?;
    let found: Vec<Complex64> = oracle.roots.iter().map(|r| r.energy).collect();

    let mut used = vec![false; found.len()];
    let mut rows = Vec::new();
    for &r in &reference {
        let tol = 1e-3f64.max(1e-3 * r.norm());
        let best = (0..found.len()).filter(|&k| !used[k]).min_by(|&a, &b| (found[a] - r).norm().total_cmp(&(found[b] - r).norm()));
        match best {
            Some(k) if (found[k] - r).norm() <= tol => {
                used[k] = true;
                let d = (found[k] - r).norm();
                rows.push(VerifyRow { reference: Some(r.into()), oracle: Some(found[k].into()), delta: Some(d), tolerance: Some(tol), ok: true });
            }
            Some(k) => rows.push(VerifyRow {
                reference: Some(r.into()),
                oracle: Some(found[k].into()),
                delta: Some((found[k] - r).norm()),
                tolerance: Some(tol),
                ok: false,
            }),
            None => rows.push(VerifyRow { reference: Some(r.into()), oracle: None, delta: None, tolerance: Some(tol), ok: false }),
        }
    }
    for (k, &z) in found.iter().enumerate() {
        if !used[k] && !rows.iter().any(|r| r.oracle == Some(z.into())) {
            rows.push(VerifyRow { reference: None, oracle: Some(z.into()), delta: None, tolerance: None, ok: false });
        }
    }
    let pass = rows.iter().all(|r| r.ok);
    let doc = VerifyDoc {
        model: model.name(),
        params: params(&model),
        units: UNITS,
        rect,
        reference_source,
        shooting,
        oracle_grid: [rect.nx, rect.ny],
        rows,
        pass,
        tool_version: TOOL_VERSION,
    };
    let body = match cfg.format.unwrap_or(Format::Json) {
        Format::Json => json(&doc),
        Format::Csv => verify_csv(&doc),
    };
    let failure = (!pass).then(|| {
        let bad = doc.rows.iter().filter(|r| !r.ok).count();
        CliError::Mismatch(format!("{bad} of {} rows disagree", doc.rows.len()))
    });
    Ok(Output { body, sidecar: None, failure })
}
