//! Nonlinear RF-to-DC conversion: sensitivity cliff, polynomial efficiency
//! region, saturation clamp, threshold inversion, and least-squares fitting
//! of the efficiency polynomial from measured (power, efficiency) data.

use crate::error::{Error, Result};
use crate::units::dbm_to_watts;
use serde::{Deserialize, Serialize};
use std::path::Path;

const VALIDATION_GRID: usize = 1000;

/// Rectenna model: DC output is zero below `p_th`, `psi(p) * p` on
/// `[p_th, p_sat]`, and clamps at the saturation output above `p_sat`.
///
/// `coeffs` are the efficiency polynomial coefficients ordered from the
/// highest power to the constant term, so a length-w vector gives
/// `psi(p) = coeffs[0] p^(w-1) + ... + coeffs[w-1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RectennaModel {
    /// Sensitivity: minimum input power with non-zero output, W.
    pub p_th: f64,
    /// Saturation input power, W.
    pub p_sat: f64,
    /// Efficiency polynomial coefficients, highest power first.
    pub coeffs: Vec<f64>,
    /// Fixed efficiency used only by the closed-form coverage mode.
    pub eta_fixed: f64,
}

impl RectennaModel {
    /// Builds and validates a model: thresholds ordered, efficiency within
    /// [0, 1) and output non-decreasing on a 1000-point grid over
    /// `[p_th, p_sat]`.
    pub fn new(p_th: f64, p_sat: f64, coeffs: Vec<f64>, eta_fixed: f64) -> Result<Self> {
        if !(p_th >= 0.0 && p_sat > p_th) {
            return Err(Error::InvalidValue {
                key: "rectenna_p_th_dbm/rectenna_p_sat_dbm".into(),
                reason: format!("need 0 <= p_th < p_sat, got p_th={p_th}, p_sat={p_sat}"),
            });
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidValue {
                key: "rectenna_coeffs".into(),
                reason: "at least one coefficient required".into(),
            });
        }
        if !(0.0..1.0).contains(&eta_fixed) {
            return Err(Error::InvalidValue {
                key: "rectenna_eta_fixed".into(),
                reason: format!("must be in [0, 1), got {eta_fixed}"),
            });
        }
        let model = RectennaModel { p_th, p_sat, coeffs, eta_fixed };
        model.validate_shape()?;
        Ok(model)
    }

    /// Constant-efficiency model with no cliff and an effectively unbounded
    /// ideal region. In the nonlinear coverage mode it reproduces the
    /// closed-form mode exactly.
    pub fn constant(eta: f64) -> Self {
        RectennaModel {
            p_th: 0.0,
            p_sat: 1e9,
            coeffs: vec![eta],
            eta_fixed: eta,
        }
    }

    fn validate_shape(&self) -> Result<()> {
        let step = (self.p_sat - self.p_th) / VALIDATION_GRID as f64;
        let mut prev_out = f64::NEG_INFINITY;
        for i in 0..=VALIDATION_GRID {
            let p = self.p_th + step * i as f64;
            let eff = self.psi(p);
            if !(0.0..1.0).contains(&eff) {
                return Err(Error::EfficiencyRange { at_watts: p, value: eff });
            }
            let out = eff * p;
            if out < prev_out - 1e-15 * prev_out.abs().max(1e-300) {
                return Err(Error::NonMonotone {
                    at_watts: p,
                    drop: prev_out - out,
                });
            }
            prev_out = prev_out.max(out);
        }
        Ok(())
    }

    /// Efficiency polynomial evaluated by Horner's rule.
    pub fn psi(&self, p_in: f64) -> f64 {
        let mut acc = 0.0;
        for &c in &self.coeffs {
            acc = acc * p_in + c;
        }
        acc
    }

    /// DC output power for the given RF input power.
    pub fn rectify(&self, p_in: f64) -> f64 {
        debug_assert!(p_in >= 0.0);
        if p_in < self.p_th {
            return 0.0;
        }
        let p = p_in.min(self.p_sat);
        self.psi(p) * p
    }

    /// Maximum deliverable DC output (at saturation).
    pub fn max_output(&self) -> f64 {
        self.rectify(self.p_sat)
    }

    /// Smallest input power whose rectified output reaches `p_out_target`.
    ///
    /// Bisection on `[p_th, p_sat]` (valid because the output is
    /// non-decreasing), run to well below 1e-9 relative tolerance.
    pub fn invert_rectify(&self, p_out_target: f64) -> Result<f64> {
        if !(p_out_target > 0.0) {
            return Err(Error::Domain(format!(
                "target output must be > 0, got {p_out_target}"
            )));
        }
        let max = self.max_output();
        if p_out_target > max {
            return Err(Error::Unreachable { target: p_out_target, max });
        }
        if self.rectify(self.p_th) >= p_out_target {
            return Ok(self.p_th);
        }
        let (mut lo, mut hi) = (self.p_th, self.p_sat);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.rectify(mid) >= p_out_target {
                hi = mid;
            } else {
                lo = mid;
            }
            if (hi - lo) <= 1e-13 * hi.abs() {
                break;
            }
        }
        Ok(hi)
    }

    /// Config-file lines for this model, mergeable into a scenario document.
    pub fn to_config_block(&self) -> String {
        use crate::units::watts_to_dbm;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| format!("{c:e}"))
            .collect::<Vec<_>>()
            .join(", ");
        format!(
            "rectenna_p_th_dbm = {}\nrectenna_p_sat_dbm = {}\nrectenna_coeffs = [{}]\nrectenna_eta_fixed = {}\n",
            if self.p_th > 0.0 { watts_to_dbm(self.p_th).to_string() } else { "-inf".into() },
            watts_to_dbm(self.p_sat),
            coeffs,
            self.eta_fixed
        )
    }
}

/// Least-squares fit of the efficiency polynomial from `(power_watts,
/// efficiency)` samples. `degree` is the number of coefficients; the sample
/// power range defines `[p_th, p_sat]`; the fixed efficiency is set to the
/// mean sampled efficiency.
///
/// The fit is rejected if the resulting model violates the monotone-output
/// or efficiency-range invariants.
pub fn fit_rectenna(samples: &[(f64, f64)], degree: usize) -> Result<RectennaModel> {
    if degree == 0 {
        return Err(Error::Domain("polynomial degree must be >= 1".into()));
    }
    if samples.len() < degree + 1 {
        return Err(Error::Underdetermined {
            samples: samples.len(),
            needed: degree + 1,
        });
    }
    let mut p_min = f64::INFINITY;
    let mut p_max = f64::NEG_INFINITY;
    for &(p, eff) in samples {
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::Domain(format!("sample power must be > 0, got {p}")));
        }
        if !(0.0..1.0).contains(&eff) {
            return Err(Error::Domain(format!(
                "sample efficiency must be in [0, 1), got {eff}"
            )));
        }
        p_min = p_min.min(p);
        p_max = p_max.max(p);
    }
    if !(p_max > p_min) {
        return Err(Error::Domain("samples must span a non-empty power range".into()));
    }

    // Fit in the scaled variable u = p / p_max for numerical stability, then
    // map the coefficients back to the raw-watt basis.
    let rows = samples.len();
    let cols = degree;
    let mut a = vec![0.0; rows * cols];
    let mut b = vec![0.0; rows];
    for (i, &(p, eff)) in samples.iter().enumerate() {
        let u = p / p_max;
        let mut pw = 1.0;
        for j in (0..cols).rev() {
            a[i * cols + j] = pw;
            pw *= u;
        }
        b[i] = eff;
    }
    let scaled = lstsq_qr(&mut a, &mut b, rows, cols)?;
    let coeffs: Vec<f64> = scaled
        .iter()
        .enumerate()
        .map(|(j, &c)| c / p_max.powi((cols - 1 - j) as i32))
        .collect();

    let mean_eff = samples.iter().map(|&(_, e)| e).sum::<f64>() / rows as f64;
    RectennaModel::new(p_min, p_max, coeffs, mean_eff)
}

/// Dense least squares via Householder QR; `a` is row-major `rows x cols`.
fn lstsq_qr(a: &mut [f64], b: &mut [f64], rows: usize, cols: usize) -> Result<Vec<f64>> {
    assert!(rows >= cols && cols > 0);
    for k in 0..cols {
        let mut norm = 0.0;
        for i in k..rows {
            norm += a[i * cols + k] * a[i * cols + k];
        }
        let norm = norm.sqrt();
        if norm < 1e-300 {
            return Err(Error::Underdetermined { samples: rows, needed: cols + 1 });
        }
        let alpha = if a[k * cols + k] > 0.0 { -norm } else { norm };
        let mut v = vec![0.0; rows - k];
        v[0] = a[k * cols + k] - alpha;
        for i in k + 1..rows {
            v[i - k] = a[i * cols + k];
        }
        let vtv: f64 = v.iter().map(|x| x * x).sum();
        if vtv < 1e-300 {
            continue;
        }
        a[k * cols + k] = alpha;
        for i in k + 1..rows {
            a[i * cols + k] = 0.0;
        }
        for j in k + 1..cols {
            let mut dot = 0.0;
            for i in k..rows {
                let av = if i == k { v[0] } else { v[i - k] };
                dot += av * a[i * cols + j];
            }
            let scale = 2.0 * dot / vtv;
            for i in k..rows {
                let av = if i == k { v[0] } else { v[i - k] };
                a[i * cols + j] -= scale * av;
            }
        }
        let mut dot = 0.0;
        for i in k..rows {
            dot += v[i - k] * b[i];
        }
        let scale = 2.0 * dot / vtv;
        for i in k..rows {
            b[i] -= scale * v[i - k];
        }
    }
    // Back-substitution on the upper-triangular factor.
    let mut x = vec![0.0; cols];
    for j in (0..cols).rev() {
        let mut acc = b[j];
        for l in j + 1..cols {
            acc -= a[j * cols + l] * x[l];
        }
        let piv = a[j * cols + j];
        if piv.abs() < 1e-300 {
            return Err(Error::Underdetermined { samples: rows, needed: cols + 1 });
        }
        x[j] = acc / piv;
    }
    Ok(x)
}

/// Reads a two-column `power_dbm,efficiency` CSV (header row required,
/// `#` comment lines allowed) and converts powers to watts.
pub fn read_efficiency_csv<P: AsRef<Path>>(path: P) -> Result<Vec<(f64, f64)>> {
    let path = path.as_ref();
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    {
        let headers = reader
            .headers()
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        if headers.len() < 2 || &headers[0] != "power_dbm" || &headers[1] != "efficiency" {
            return Err(Error::Parse(format!(
                "{}: expected header `power_dbm,efficiency`, got `{}`",
                path.display(),
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
    }
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let dbm: f64 = record[0]
            .parse()
            .map_err(|e| Error::Parse(format!("{}: bad power_dbm `{}`: {e}", path.display(), &record[0])))?;
        let eff: f64 = record[1]
            .parse()
            .map_err(|e| Error::Parse(format!("{}: bad efficiency `{}`: {e}", path.display(), &record[1])))?;
        out.push((dbm_to_watts(dbm), eff));
    }
    Ok(out)
}
