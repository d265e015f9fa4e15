//! Parameter sweeps and figure-reproduction pipelines: Cartesian grids over
//! config keys, analytic and/or Monte Carlo evaluation per point, CSV
//! emission, and the qualitative summary checks behind each shipped figure.

use crate::config::{OverrideValue, RawConfig, ScenarioConfig};
use crate::coverage::coverage_total;
use crate::error::{Error, Result};
use crate::montecarlo::{simulate_coverage, simulate_service, NearestSampler, SimConfig};
use rayon::prelude::*;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

/// Engine selection for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum Engine {
    #[serde(rename = "analytic")]
    Analytic,
    #[serde(rename = "monte-carlo")]
    MonteCarlo,
    #[serde(rename = "both")]
    Both,
}

/// Sweep specification document.
///
/// `axis1_key`/`axis1_values` drive the outer loop; the optional second axis
/// is the inner loop. `overrides` are applied to the base document before
/// the axes. `base_config` (a path relative to the spec file) can name the
/// base document so a spec is self-contained.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub axis1_key: String,
    pub axis1_values: Vec<f64>,
    pub axis2_key: Option<String>,
    pub axis2_values: Option<Vec<f64>>,
    #[serde(default)]
    pub overrides: BTreeMap<String, OverrideValue>,
    pub engine: Engine,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    /// Which estimator columns to emit; defaults to all of
    /// p_e, p_los, p_cov_s, p_cov.
    pub outputs: Option<Vec<String>>,
    pub base_config: Option<String>,
}

impl SweepSpec {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let spec: SweepSpec = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate_shape()?;
        Ok(spec)
    }

    pub fn from_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::from_toml_str(&text)
    }

    fn validate_shape(&self) -> Result<()> {
        if self.axis1_values.is_empty() {
            return Err(Error::Sweep("axis1_values must be non-empty".into()));
        }
        if !self.axis1_values.iter().all(|v| v.is_finite()) {
            return Err(Error::Sweep("axis1_values must be finite".into()));
        }
        match (&self.axis2_key, &self.axis2_values) {
            (None, None) => {}
            (Some(_), Some(vals)) if !vals.is_empty() && vals.iter().all(|v| v.is_finite()) => {}
            _ => {
                return Err(Error::Sweep(
                    "axis2_key and non-empty finite axis2_values must be given together".into(),
                ))
            }
        }
        Ok(())
    }

    fn output_names(&self) -> Vec<String> {
        self.outputs.clone().unwrap_or_else(|| {
            ["p_e", "p_los", "p_cov_s", "p_cov"]
                .iter()
                .map(|s| s.to_string())
                .collect()
        })
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub axis1: f64,
    pub axis2: Option<f64>,
    pub status: String,
    /// Column name -> value; missing entries render as empty cells.
    pub values: BTreeMap<String, f64>,
}

/// Completed sweep: ordered column names plus one row per grid point in
/// axis1-major order.
#[derive(Debug, Clone)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// Renders the table as CSV. The banner line carries the invocation
    /// timestamp and is suppressed for byte-reproducible output.
    pub fn to_csv(&self, banner: bool) -> String {
        let mut out = String::new();
        if banner {
            let now = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            let _ = writeln!(out, "# generated at unix {now}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let mut cells: Vec<String> = Vec::with_capacity(self.columns.len());
            for col in &self.columns {
                let cell = match col.as_str() {
                    "axis1" => row.axis1.to_string(),
                    "axis2" => row.axis2.map(|v| v.to_string()).unwrap_or_default(),
                    "status" => row.status.clone(),
                    name => row.values.get(name).map(|v| v.to_string()).unwrap_or_default(),
                };
                cells.push(cell);
            }
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

fn analytic_values(cfg: &ScenarioConfig) -> Result<BTreeMap<String, f64>> {
    let total = coverage_total(cfg)?;
    let mut m = BTreeMap::new();
    m.insert("p_e".into(), total.p_e);
    m.insert("p_los".into(), total.sensor.p_los);
    m.insert("p_cov_s".into(), total.sensor.p_cov_s);
    m.insert("p_cov".into(), total.p_cov);
    Ok(m)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Runs the Cartesian product of the axes with the chosen engine(s).
/// Per-point failures are recorded in the row's status column; the sweep
/// always completes.
pub fn run_sweep(base: &RawConfig, spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate_shape()?;
    let mut base = base.clone();
    for (key, value) in &spec.overrides {
        base.set_key(key, value)?;
    }

    let axis2_vals = spec.axis2_values.clone().unwrap_or_else(|| vec![f64::NAN]);
    let has_axis2 = spec.axis2_key.is_some();
    let outputs = spec.output_names();
    let engine = spec.engine;
    let trials = spec.trials.unwrap_or(100_000);
    let seed = spec.seed.unwrap_or(0);

    let mut grid: Vec<(usize, f64, Option<f64>)> = Vec::new();
    for &a1 in &spec.axis1_values {
        for &a2 in &axis2_vals {
            let idx = grid.len();
            grid.push((idx, a1, has_axis2.then_some(a2)));
        }
    }

    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&(idx, a1, a2)| {
            let mut raw = base.clone();
            let mut status = "ok".to_string();
            let mut values = BTreeMap::new();
            let built = raw
                .set_key(&spec.axis1_key, &OverrideValue::Number(a1))
                .and_then(|_| {
                    if let (Some(key), Some(v)) = (&spec.axis2_key, a2) {
                        raw.set_key(key, &OverrideValue::Number(v))?;
                    }
                    raw.validate()
                });
            match built {
                Ok(cfg) => match point_values(&cfg, engine, trials, seed, idx) {
                    Ok(v) => values = v,
                    Err(e) => status = format!("error: {e}"),
                },
                Err(e) => status = format!("error: {e}"),
            }
            SweepRow { axis1: a1, axis2: a2, status, values }
        })
        .collect();

    let mut columns = vec!["axis1".to_string()];
    if has_axis2 {
        columns.push("axis2".into());
    }
    columns.push("status".into());
    for name in &outputs {
        match engine {
            Engine::Analytic => columns.push(name.clone()),
            Engine::MonteCarlo => {
                if name == "p_e" || name == "p_cov" {
                    columns.push(format!("{name}_mc"));
                    columns.push(format!("{name}_se"));
                }
            }
            Engine::Both => {
                columns.push(name.clone());
                if name == "p_e" || name == "p_cov" {
                    columns.push(format!("{name}_mc"));
                    columns.push(format!("{name}_se"));
                    columns.push(format!("{name}_z"));
                }
            }
        }
    }
    Ok(SweepTable { columns, rows })
}

fn point_values(
    cfg: &ScenarioConfig,
    engine: Engine,
    trials: u64,
    seed: u64,
    point_idx: usize,
) -> Result<BTreeMap<String, f64>> {
    let mut values = BTreeMap::new();
    let analytic = analytic_values(cfg)?;
    if matches!(engine, Engine::Analytic | Engine::Both) {
        values.extend(analytic.clone());
    }
    if matches!(engine, Engine::MonteCarlo | Engine::Both) {
        let point_seed = splitmix64(seed ^ (point_idx as u64).wrapping_mul(0xA076_1D64_78BD_642F));
        let sim = SimConfig::new(trials, point_seed).with_sampler(NearestSampler::RayleighInverse);
        let service = simulate_service(cfg, &sim)?;
        let coverage = simulate_coverage(cfg, &sim)?;
        values.insert("p_e_mc".into(), service.mean);
        values.insert("p_e_se".into(), service.std_error);
        values.insert("p_cov_mc".into(), coverage.mean);
        values.insert("p_cov_se".into(), coverage.std_error);
        if matches!(engine, Engine::Both) {
            values.insert("p_e_z".into(), service.z_score(analytic["p_e"]));
            values.insert("p_cov_z".into(), coverage.z_score(analytic["p_cov"]));
        }
    }
    Ok(values)
}

// ---------------------------------------------------------------------------
// Figure reproduction
// ---------------------------------------------------------------------------

/// Identifiers for the shipped figure pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig3a,
    Fig3b,
    Fig3c,
    Fig4a,
    Fig4b,
    Fig5,
}

impl FigureId {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "fig3a" => Ok(FigureId::Fig3a),
            "fig3b" => Ok(FigureId::Fig3b),
            "fig3c" => Ok(FigureId::Fig3c),
            "fig4a" => Ok(FigureId::Fig4a),
            "fig4b" => Ok(FigureId::Fig4b),
            "fig5" => Ok(FigureId::Fig5),
            other => Err(Error::Sweep(format!(
                "unknown figure `{other}` (expected fig3a|fig3b|fig3c|fig4a|fig4b|fig5)"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig3c => "fig3c",
            FigureId::Fig4a => "fig4a",
            FigureId::Fig4b => "fig4b",
            FigureId::Fig5 => "fig5",
        }
    }
}

/// One qualitative assertion checked while reproducing a figure.
#[derive(Debug, Clone)]
pub struct SummaryCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Figure data grid plus its summary checks.
#[derive(Debug, Clone)]
pub struct FigureReport {
    pub figure: FigureId,
    pub csv: String,
    pub summary: Vec<SummaryCheck>,
}

/// Default location of the shipped calibration document, searched relative
/// to the working directory.
pub const CALIBRATION_CANDIDATES: [&str; 2] =
    ["calibration.paper-figs", "configs/calibration.paper-figs"];

/// Loads the figure calibration document, refusing to proceed without it.
pub fn load_calibration(explicit: Option<&Path>) -> Result<RawConfig> {
    if let Some(path) = explicit {
        if !path.exists() {
            return Err(Error::MissingCalibration(path.display().to_string()));
        }
        return RawConfig::from_path(path);
    }
    for candidate in CALIBRATION_CANDIDATES {
        let p = Path::new(candidate);
        if p.exists() {
            return RawConfig::from_path(p);
        }
    }
    Err(Error::MissingCalibration(CALIBRATION_CANDIDATES.join(" or ")))
}

fn log_grid(lo: f64, hi: f64, per_decade: usize) -> Vec<f64> {
    let decades = (hi / lo).log10();
    let n = (decades * per_decade as f64).round() as usize;
    (0..=n)
        .map(|i| lo * 10f64.powf(decades * i as f64 / n as f64))
        .collect()
}

/// Density grid (per km²) shared by the station-density figures.
fn density_axis_per_km2() -> Vec<f64> {
    // 1e-9 .. 1e-4 per m² in per-km² units
    log_grid(1e-3, 1e2, 8)
}

fn eval_grid(
    base: &RawConfig,
    axis1_key: &str,
    axis1: &[f64],
    axis2_key: &str,
    axis2: &[f64],
) -> Result<Vec<Vec<f64>>> {
    // rows indexed by axis1, columns by axis2; each cell is p_cov
    let cells: Vec<(usize, usize)> = (0..axis1.len())
        .flat_map(|i| (0..axis2.len()).map(move |j| (i, j)))
        .collect();
    let flat: Vec<f64> = cells
        .par_iter()
        .map(|&(i, j)| {
            let mut raw = base.clone();
            raw.set_key(axis1_key, &OverrideValue::Number(axis1[i]))?;
            raw.set_key(axis2_key, &OverrideValue::Number(axis2[j]))?;
            let cfg = raw.validate()?;
            Ok(coverage_total(&cfg)?.p_cov)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok((0..axis1.len())
        .map(|i| flat[i * axis2.len()..(i + 1) * axis2.len()].to_vec())
        .collect())
}

fn grid_csv(axis1_name: &str, axis1: &[f64], col_prefix: &str, axis2: &[f64], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    let cols: Vec<String> = axis2.iter().map(|v| format!("{col_prefix}{v}")).collect();
    let _ = writeln!(out, "{axis1_name},{}", cols.join(","));
    for (i, &a1) in axis1.iter().enumerate() {
        let cells: Vec<String> = rows[i].iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{a1},{}", cells.join(","));
    }
    out
}

/// Locates a sign change of `f(axis) = lhs - rhs` across a sampled axis and
/// refines it by bisection. Returns the crossing abscissa when found.
fn find_crossing<F: Fn(f64) -> Result<f64>>(xs: &[f64], diff: F) -> Result<Option<f64>> {
    let mut prev: Option<(f64, f64)> = None;
    for &x in xs {
        let d = diff(x)?;
        if let Some((px, pd)) = prev {
            if pd.signum() != d.signum() && pd != 0.0 && d != 0.0 {
                let (mut lo, mut hi, mut flo) = (px, x, pd);
                for _ in 0..80 {
                    let mid = (lo * hi).sqrt(); // log-scale bisection
                    let fm = diff(mid)?;
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                    if (hi / lo - 1.0).abs() < 1e-10 {
                        break;
                    }
                }
                return Ok(Some((lo * hi).sqrt()));
            }
        }
        prev = Some((x, d));
    }
    Ok(None)
}

/// Reproduces one figure from the calibration document.
pub fn reproduce_figure(id: FigureId, calibration: &RawConfig) -> Result<FigureReport> {
    match id {
        FigureId::Fig3a => fig3(id, calibration, &[600.0, 1200.0, 1800.0]),
        FigureId::Fig3b => fig3(id, calibration, &[2400.0, 3000.0, 3600.0]),
        FigureId::Fig3c => fig3(id, calibration, &[600.0, 1800.0, 2850.0, 3600.0, 4350.0]),
        FigureId::Fig4a => fig4(id, calibration, 1e-3),
        FigureId::Fig4b => fig4(id, calibration, 1.0),
        FigureId::Fig5 => fig5(id, calibration),
    }
}

fn fig3(id: FigureId, calib: &RawConfig, t_ch_set: &[f64]) -> Result<FigureReport> {
    let lambdas = density_axis_per_km2();
    let rows = eval_grid(calib, "lambda_ch_per_km2", &lambdas, "t_ch_s", t_ch_set)?;
    let csv = grid_csv("lambda_ch_per_km2", &lambdas, "p_cov_tch_", t_ch_set, &rows);

    let mut summary = Vec::new();
    // every t_ch curve must be monotone non-decreasing in density
    for (j, &t) in t_ch_set.iter().enumerate() {
        let mut ok = true;
        for i in 1..lambdas.len() {
            if rows[i][j] < rows[i - 1][j] - 1e-9 {
                ok = false;
                break;
            }
        }
        summary.push(SummaryCheck {
            name: format!("p_cov monotone in density at t_ch = {t} s"),
            pass: ok,
            detail: String::new(),
        });
    }

    if id == FigureId::Fig3c {
        // overflow crossing: the shortest dwell overtakes the overflowed one
        let short = t_ch_set[0];
        let long = *t_ch_set.last().unwrap();
        let diff = |lam_km2: f64| -> Result<f64> {
            let p = |t: f64| -> Result<f64> {
                let mut raw = calib.clone();
                raw.set_key("lambda_ch_per_km2", &OverrideValue::Number(lam_km2))?;
                raw.set_key("t_ch_s", &OverrideValue::Number(t))?;
                Ok(coverage_total(&raw.validate()?)?.p_cov)
            };
            Ok(p(short)? - p(long)?)
        };
        let crossing = find_crossing(&lambdas, diff)?;
        match crossing {
            Some(lam_km2) => {
                let lam_m2 = lam_km2 * 1e-6;
                let after = diff(lam_km2 * 4.0)?;
                summary.push(SummaryCheck {
                    name: format!("t_ch = {short} s overtakes t_ch = {long} s"),
                    pass: after > 0.0,
                    detail: format!("crossing density {lam_m2:.4e} per m²"),
                });
            }
            None => summary.push(SummaryCheck {
                name: format!("t_ch = {short} s overtakes t_ch = {long} s"),
                pass: false,
                detail: "no crossing found on the density grid".into(),
            }),
        }
    }

    Ok(FigureReport { figure: id, csv, summary })
}

fn fig4(id: FigureId, calib: &RawConfig, lambda_per_km2: f64) -> Result<FigureReport> {
    let batteries = [308.0, 462.0, 616.0, 770.0];
    let mut t_axis: Vec<f64> = (1..=50).map(|i| 100.0 * i as f64).collect();
    for sat in [1440.0, 2160.0, 2880.0, 3600.0] {
        if !t_axis.contains(&sat) {
            t_axis.push(sat);
        }
    }
    t_axis.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut base = calib.clone();
    base.set_key("lambda_ch_per_km2", &OverrideValue::Number(lambda_per_km2))?;
    let rows = eval_grid(&base, "t_ch_s", &t_axis, "b_max_wh", &batteries)?;
    let csv = grid_csv("t_ch_s", &t_axis, "p_cov_bmax_", &batteries, &rows);

    let mut summary = Vec::new();
    // all batteries behave identically until the smallest one saturates
    let mut coincide = true;
    for (i, &t) in t_axis.iter().enumerate() {
        if t > 1440.0 {
            break;
        }
        for j in 1..batteries.len() {
            if (rows[i][j] - rows[i][0]).abs() > 1e-9 {
                coincide = false;
            }
        }
    }
    summary.push(SummaryCheck {
        name: "curves coincide up to the smallest battery's saturation (1440 s)".into(),
        pass: coincide,
        detail: String::new(),
    });
    // and diverge after it
    let mut diverged = false;
    for (i, &t) in t_axis.iter().enumerate() {
        if t >= 1600.0 {
            let spread = rows[i]
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |acc, &v| {
                    (acc.0.min(v), acc.1.max(v))
                });
            if spread.1 - spread.0 > 1e-6 {
                diverged = true;
                break;
            }
        }
    }
    summary.push(SummaryCheck {
        name: "curves diverge beyond the first saturation".into(),
        pass: diverged,
        detail: String::new(),
    });
    // each battery's own peak sits at its saturation dwell
    for (j, &b) in batteries.iter().enumerate() {
        let t_sat = b * 3600.0 / 770.0;
        let best = t_axis
            .iter()
            .enumerate()
            .max_by(|a, b_| rows[a.0][j].partial_cmp(&rows[b_.0][j]).unwrap())
            .map(|(i, _)| t_axis[i])
            .unwrap();
        summary.push(SummaryCheck {
            name: format!("kink of the {b} Wh curve at its saturation"),
            pass: (best - t_sat).abs() < 1e-9,
            detail: format!("argmax dwell {best} s, saturation {t_sat} s"),
        });
    }

    Ok(FigureReport { figure: id, csv, summary })
}

fn fig5(id: FigureId, calib: &RawConfig) -> Result<FigureReport> {
    let velocities: Vec<f64> = (0..=116).map(|i| 1.0 + 0.25 * i as f64).collect();
    let lambdas = [1e-3, 1e-2, 1e-1, 1.0]; // per km² = 1e-9..1e-6 per m²

    let mut base = calib.clone();
    base.set_key("b_max_wh", &OverrideValue::Number(192.5))?;
    base.set_key("t_ch_s", &OverrideValue::Number(450.0))?; // half charge at 770 W
    let rows = eval_grid(&base, "v_mps", &velocities, "lambda_ch_per_km2", &lambdas)?;
    let csv = grid_csv("v_mps", &velocities, "p_cov_lam_km2_", &lambdas, &rows);

    let mut summary = Vec::new();
    let mut argmaxes = Vec::new();
    for (j, &lam) in lambdas.iter().enumerate() {
        let (i_best, _) = velocities
            .iter()
            .enumerate()
            .max_by(|a, b| rows[a.0][j].partial_cmp(&rows[b.0][j]).unwrap())
            .unwrap();
        argmaxes.push(velocities[i_best]);
        summary.push(SummaryCheck {
            name: format!("optimal velocity at {lam} per km²"),
            pass: true,
            detail: format!("argmax v = {} m/s, p_cov = {}", velocities[i_best], rows[i_best][j]),
        });
    }
    let interior = argmaxes[0] > velocities[0] && argmaxes[0] < *velocities.last().unwrap();
    summary.push(SummaryCheck {
        name: "interior optimal velocity at the sparsest density".into(),
        pass: interior,
        detail: format!("locus {argmaxes:?}"),
    });

    Ok(FigureReport { figure: id, csv, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::load_config_str;

    const BASE: &str = r#"
schema_version = 1
p_t_dbm = 21.0
g_t_dbi = 15.0
f_c_mhz = 868.0
g_r_dbi = 9.0
gamma_th_uw = 1.0
eta_los_db = 1.6034
eta_nlos_db = 29.6462
env_gamma = 27.1157
env_delta = 0.1232
b_max_wh = 770.0
v_mps = 10.36
h_ch_m = 100.0
h_l_m = 80.0
lambda_ch_per_km2 = 1.0
e_pt_wh = 0.05
"#;

    #[test]
    fn sweep_ordering_and_row_count() {
        let base = RawConfig::from_toml_str(BASE).unwrap();
        let spec = SweepSpec::from_toml_str(
            r#"
axis1_key = "lambda_ch_per_km2"
axis1_values = [0.1, 1.0, 10.0]
axis2_key = "t_ch_s"
axis2_values = [600.0, 3600.0]
engine = "analytic"
"#,
        )
        .unwrap();
        let table = run_sweep(&base, &spec).unwrap();
        assert_eq!(table.rows.len(), 6);
        // axis1-major ordering
        let a1: Vec<f64> = table.rows.iter().map(|r| r.axis1).collect();
        assert_eq!(a1, vec![0.1, 0.1, 1.0, 1.0, 10.0, 10.0]);
        assert!(table.rows.iter().all(|r| r.status == "ok"));
    }

    #[test]
    fn degenerate_single_point_sweep_matches_direct_evaluation() {
        let base = RawConfig::from_toml_str(BASE).unwrap();
        let spec = SweepSpec::from_toml_str(
            r#"
axis1_key = "lambda_ch_per_km2"
axis1_values = [1.0]
engine = "analytic"
"#,
        )
        .unwrap();
        let table = run_sweep(&base, &spec).unwrap();
        assert_eq!(table.rows.len(), 1);
        let cfg = load_config_str(BASE).unwrap();
        let direct = coverage_total(&cfg).unwrap();
        assert_eq!(table.rows[0].values["p_cov"], direct.p_cov);
        assert_eq!(table.rows[0].values["p_e"], direct.p_e);
    }

    #[test]
    fn per_point_errors_do_not_abort_the_sweep() {
        let base = RawConfig::from_toml_str(BASE).unwrap();
        let spec = SweepSpec::from_toml_str(
            r#"
axis1_key = "lambda_ch_per_km2"
axis1_values = [-1.0, 1.0]
engine = "analytic"
"#,
        )
        .unwrap();
        let table = run_sweep(&base, &spec).unwrap();
        assert!(table.rows[0].status.starts_with("error:"));
        assert_eq!(table.rows[1].status, "ok");
    }

    #[test]
    fn csv_is_reproducible_without_banner() {
        let base = RawConfig::from_toml_str(BASE).unwrap();
        let spec = SweepSpec::from_toml_str(
            r#"
axis1_key = "t_ch_s"
axis1_values = [600.0, 1800.0]
engine = "both"
trials = 2000
seed = 11
"#,
        )
        .unwrap();
        let a = run_sweep(&base, &spec).unwrap().to_csv(false);
        let b = run_sweep(&base, &spec).unwrap().to_csv(false);
        assert_eq!(a, b);
        assert!(a.starts_with("axis1,status,"));
    }

    #[test]
    fn bad_axis_key_is_reported() {
        let spec = SweepSpec::from_toml_str(
            r#"
axis1_key = "no_such_key"
axis1_values = [1.0]
engine = "analytic"
"#,
        )
        .unwrap();
        let base = RawConfig::from_toml_str(BASE).unwrap();
        let table = run_sweep(&base, &spec).unwrap();
        assert!(table.rows[0].status.contains("no_such_key"));
    }

    #[test]
    fn empty_axis_rejected() {
        assert!(SweepSpec::from_toml_str(
            r#"
axis1_key = "t_ch_s"
axis1_values = []
engine = "analytic"
"#,
        )
        .is_err());
    }

    #[test]
    fn missing_calibration_is_a_clear_error() {
        let err = load_calibration(Some(Path::new("/nonexistent/calibration.paper-figs")))
            .unwrap_err();
        assert!(matches!(err, Error::MissingCalibration(_)));
    }
}
