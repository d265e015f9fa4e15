//! Scenario configuration: the flat key-value document schema, unit
//! conversion to SI, validation of every model invariant, and the
//! beamwidth/gain and EIRP-compliance helpers.
//!
//! Documents are TOML with all scenario keys at the top level. Units in the
//! schema are the human-friendly ones (dBm, dBi, Wh, MHz, per-km²); they are
//! converted to SI on load and SI is used everywhere else.

use crate::error::{Error, Result};
use crate::propulsion::PropulsionModel;
use crate::rectenna::RectennaModel;
use crate::units::*;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Supported schema version.
pub const SCHEMA_VERSION: i64 = 1;

/// How sensor coverage is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverageMode {
    /// Closed form: exponential fade tail with a fixed rectifier efficiency.
    PaperClosedForm,
    /// Threshold inversion through the full nonlinear rectenna curve.
    NonlinearRectenna,
}

impl CoverageMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(CoverageMode::PaperClosedForm),
            "nonlinear" => Ok(CoverageMode::NonlinearRectenna),
            other => Err(Error::InvalidValue {
                key: "coverage_mode".into(),
                reason: format!("expected `paper` or `nonlinear`, got `{other}`"),
            }),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CoverageMode::PaperClosedForm => "paper",
            CoverageMode::NonlinearRectenna => "nonlinear",
        }
    }
}

/// Raw document: every key optional so that sweep overrides can be applied
/// before validation. Field names are exactly the published schema keys.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub schema_version: Option<i64>,

    // transmitter / link
    pub p_t_dbm: Option<f64>,
    pub g_t_dbi: Option<f64>,
    pub theta_b_deg: Option<f64>,
    pub f_c_mhz: Option<f64>,
    pub g_r_dbi: Option<f64>,
    pub gamma_th_uw: Option<f64>,

    // environment
    pub eta_los_db: Option<f64>,
    pub eta_nlos_db: Option<f64>,
    pub env_gamma: Option<f64>,
    pub env_delta: Option<f64>,

    // UAV, battery, stations
    pub b_max_wh: Option<f64>,
    pub xi_ch_w: Option<f64>,
    pub t_ch_s: Option<f64>,
    pub v_mps: Option<f64>,
    pub h_ch_m: Option<f64>,
    pub h_l_m: Option<f64>,
    pub h_ut_m: Option<f64>,
    pub lambda_ch_per_km2: Option<f64>,
    pub e_pt_wh: Option<f64>,
    pub event_radius_m: Option<f64>,

    // modes
    pub coverage_mode: Option<String>,
    pub strict_paper_mode: Option<bool>,

    // rectenna
    pub rectenna_p_th_dbm: Option<f64>,
    pub rectenna_p_sat_dbm: Option<f64>,
    pub rectenna_coeffs: Option<Vec<f64>>,
    pub rectenna_eta_fixed: Option<f64>,

    // propulsion
    pub prop_p0_w: Option<f64>,
    pub prop_pi_w: Option<f64>,
    pub prop_u_tip_mps: Option<f64>,
    pub prop_v0_mps: Option<f64>,
    pub prop_d0: Option<f64>,
    pub prop_rho_kgm3: Option<f64>,
    pub prop_s: Option<f64>,
    pub prop_a_m2: Option<f64>,
}

impl RawConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::from_toml_str(&text)
    }

    /// Sets a schema key from a sweep axis or override. Numeric keys accept
    /// numbers; `strict_paper_mode` accepts a bool; `coverage_mode` a string.
    pub fn set_key(&mut self, key: &str, value: &OverrideValue) -> Result<()> {
        use OverrideValue::*;
        let num = |v: &OverrideValue| -> Result<f64> {
            match v {
                Number(x) => Ok(*x),
                _ => Err(Error::Sweep(format!("key `{key}` expects a number"))),
            }
        };
        match key {
            "p_t_dbm" => self.p_t_dbm = Some(num(value)?),
            "g_t_dbi" => {
                self.g_t_dbi = Some(num(value)?);
                self.theta_b_deg = None;
            }
            "theta_b_deg" => {
                self.theta_b_deg = Some(num(value)?);
                self.g_t_dbi = None;
            }
            "f_c_mhz" => self.f_c_mhz = Some(num(value)?),
            "g_r_dbi" => self.g_r_dbi = Some(num(value)?),
            "gamma_th_uw" => self.gamma_th_uw = Some(num(value)?),
            "eta_los_db" => self.eta_los_db = Some(num(value)?),
            "eta_nlos_db" => self.eta_nlos_db = Some(num(value)?),
            "env_gamma" => self.env_gamma = Some(num(value)?),
            "env_delta" => self.env_delta = Some(num(value)?),
            "b_max_wh" => self.b_max_wh = Some(num(value)?),
            "xi_ch_w" => self.xi_ch_w = Some(num(value)?),
            "t_ch_s" => self.t_ch_s = Some(num(value)?),
            "v_mps" => self.v_mps = Some(num(value)?),
            "h_ch_m" => self.h_ch_m = Some(num(value)?),
            "h_l_m" => self.h_l_m = Some(num(value)?),
            "h_ut_m" => self.h_ut_m = Some(num(value)?),
            "lambda_ch_per_km2" => self.lambda_ch_per_km2 = Some(num(value)?),
            "e_pt_wh" => self.e_pt_wh = Some(num(value)?),
            "event_radius_m" => self.event_radius_m = Some(num(value)?),
            "rectenna_eta_fixed" => self.rectenna_eta_fixed = Some(num(value)?),
            "coverage_mode" => match value {
                Text(s) => self.coverage_mode = Some(s.clone()),
                _ => return Err(Error::Sweep("coverage_mode expects a string".into())),
            },
            "strict_paper_mode" => match value {
                Bool(b) => self.strict_paper_mode = Some(*b),
                _ => return Err(Error::Sweep("strict_paper_mode expects a bool".into())),
            },
            other => {
                return Err(Error::Sweep(format!(
                    "key `{other}` is not a sweepable config key"
                )))
            }
        }
        Ok(())
    }

    /// Validates the document and converts it to SI.
    pub fn validate(&self) -> Result<ScenarioConfig> {
        ScenarioConfig::from_raw(self)
    }
}

/// Override/axis value in a sweep specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OverrideValue {
    Number(f64),
    Bool(bool),
    Text(String),
}

/// Validated scenario in SI units. Immutable after construction; all
/// evaluation entry points take it by shared reference.
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    /// UAV transmit (conducted) power, W.
    pub p_t: f64,
    /// Transmit antenna gain, linear.
    pub g_t: f64,
    /// Half-power beamwidth, degrees.
    pub theta_b_deg: f64,
    /// Carrier frequency, Hz.
    pub f_c: f64,
    /// Sensor antenna gain, linear.
    pub g_r: f64,
    /// Sensor activation threshold on rectified power, W.
    pub gamma_th: f64,
    /// Excess LoS / NLoS path loss, dB.
    pub eta_los_db: f64,
    pub eta_nlos_db: f64,
    /// LoS-probability environment constants.
    pub env_gamma: f64,
    pub env_delta: f64,
    /// Battery capacity, J.
    pub b_max: f64,
    /// Recharge rate, W.
    pub xi_ch: f64,
    /// Recharge dwell, s.
    pub t_ch: f64,
    /// Trip velocity, m/s.
    pub v: f64,
    /// Cruise / station altitude, m.
    pub h_ch: f64,
    /// Descent distance when arriving over the event area, m.
    pub h_l: f64,
    /// Hover altitude above the sensors, m (default `h_ch - h_l`).
    pub h_ut: f64,
    /// Recharging-station density, per m².
    pub lambda_ch: f64,
    /// Energy budget for wireless power transfer per sortie, J.
    pub e_pt: f64,
    /// Event-area radius, m (informational only).
    pub event_radius: f64,
    pub coverage_mode: CoverageMode,
    pub strict_paper_mode: bool,
    pub rectenna: RectennaModel,
    pub propulsion: PropulsionModel,
    /// The raw document this scenario was derived from (for sweeps).
    pub raw: RawConfig,
}

fn require(v: Option<f64>, key: &'static str) -> Result<f64> {
    v.ok_or(Error::MissingKey(key))
}

fn check_nonneg(v: f64, key: &str) -> Result<f64> {
    if v < 0.0 || !v.is_finite() {
        return Err(Error::InvalidValue {
            key: key.into(),
            reason: format!("must be finite and >= 0, got {v}"),
        });
    }
    Ok(v)
}

fn check_pos(v: f64, key: &str) -> Result<f64> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::InvalidValue {
            key: key.into(),
            reason: format!("must be finite and > 0, got {v}"),
        });
    }
    Ok(v)
}

impl ScenarioConfig {
    pub fn from_raw(raw: &RawConfig) -> Result<Self> {
        match raw.schema_version {
            Some(SCHEMA_VERSION) => {}
            Some(found) => {
                return Err(Error::SchemaVersion { found, expected: SCHEMA_VERSION })
            }
            None => return Err(Error::MissingKey("schema_version")),
        }

        let p_t = check_nonneg(
            dbm_to_watts(require(raw.p_t_dbm, "p_t_dbm")?),
            "p_t_dbm",
        )?;

        let (g_t, theta_b_deg) = match (raw.g_t_dbi, raw.theta_b_deg) {
            (Some(g_dbi), None) => {
                let g = db_to_linear(g_dbi);
                (g, beamwidth_from_gain(g)?)
            }
            (None, Some(theta)) => (gain_from_beamwidth(theta)?, theta),
            (a, b) => {
                return Err(Error::ExactlyOneOf {
                    a: "g_t_dbi",
                    b: "theta_b_deg",
                    got: a.is_some() as usize + b.is_some() as usize,
                })
            }
        };

        let f_c = check_pos(mhz_to_hz(require(raw.f_c_mhz, "f_c_mhz")?), "f_c_mhz")?;
        let g_r = db_to_linear(require(raw.g_r_dbi, "g_r_dbi")?);
        let gamma_th = check_nonneg(
            uw_to_watts(require(raw.gamma_th_uw, "gamma_th_uw")?),
            "gamma_th_uw",
        )?;

        let eta_los_db = require(raw.eta_los_db, "eta_los_db")?;
        let eta_nlos_db = require(raw.eta_nlos_db, "eta_nlos_db")?;
        let env_gamma = check_nonneg(require(raw.env_gamma, "env_gamma")?, "env_gamma")?;
        let env_delta = check_nonneg(require(raw.env_delta, "env_delta")?, "env_delta")?;

        let b_max = check_nonneg(wh_to_joules(require(raw.b_max_wh, "b_max_wh")?), "b_max_wh")?;
        let xi_ch = check_nonneg(raw.xi_ch_w.unwrap_or(770.0), "xi_ch_w")?;
        let t_ch = check_nonneg(raw.t_ch_s.unwrap_or(3600.0), "t_ch_s")?;
        let v = check_pos(require(raw.v_mps, "v_mps")?, "v_mps")?;
        let h_ch = check_nonneg(require(raw.h_ch_m, "h_ch_m")?, "h_ch_m")?;
        let h_l = check_nonneg(require(raw.h_l_m, "h_l_m")?, "h_l_m")?;
        if h_l > h_ch {
            return Err(Error::InvalidValue {
                key: "h_l_m".into(),
                reason: format!("descent {h_l} m exceeds cruise altitude {h_ch} m"),
            });
        }
        let h_ut = match raw.h_ut_m {
            Some(h) => check_pos(h, "h_ut_m")?,
            None => check_pos(h_ch - h_l, "h_ut_m (derived h_ch_m - h_l_m)")?,
        };

        let lambda_ch = per_km2_to_per_m2(require(raw.lambda_ch_per_km2, "lambda_ch_per_km2")?);
        if !(lambda_ch > 0.0) || !lambda_ch.is_finite() {
            return Err(Error::InvalidValue {
                key: "lambda_ch_per_km2".into(),
                reason: format!("station density must be > 0, got {lambda_ch} per m²"),
            });
        }

        let e_pt = check_nonneg(wh_to_joules(require(raw.e_pt_wh, "e_pt_wh")?), "e_pt_wh")?;
        if e_pt > b_max {
            return Err(Error::InvalidValue {
                key: "e_pt_wh".into(),
                reason: format!("transfer budget {e_pt} J exceeds battery capacity {b_max} J"),
            });
        }
        if e_pt > 0.0 && p_t == 0.0 {
            return Err(Error::InvalidValue {
                key: "e_pt_wh".into(),
                reason: "non-zero transfer budget requires p_t_dbm > -inf".into(),
            });
        }
        let event_radius = check_nonneg(raw.event_radius_m.unwrap_or(0.0), "event_radius_m")?;

        let coverage_mode = match &raw.coverage_mode {
            Some(s) => CoverageMode::parse(s)?,
            None => CoverageMode::PaperClosedForm,
        };
        let strict_paper_mode = raw.strict_paper_mode.unwrap_or(false);

        let eta_fixed = raw.rectenna_eta_fixed.unwrap_or(0.5);
        let rectenna = match (raw.rectenna_p_th_dbm, raw.rectenna_p_sat_dbm, &raw.rectenna_coeffs) {
            (None, None, None) => RectennaModel::constant(eta_fixed),
            (Some(th), Some(sat), Some(coeffs)) => RectennaModel::new(
                dbm_to_watts(th),
                dbm_to_watts(sat),
                coeffs.clone(),
                eta_fixed,
            )?,
            _ => {
                return Err(Error::InvalidValue {
                    key: "rectenna_p_th_dbm/rectenna_p_sat_dbm/rectenna_coeffs".into(),
                    reason: "supply all three rectenna keys or none".into(),
                })
            }
        };

        let defaults = PropulsionModel::default();
        let propulsion = PropulsionModel {
            p0: raw.prop_p0_w.unwrap_or(defaults.p0),
            p_i: raw.prop_pi_w.unwrap_or(defaults.p_i),
            u_tip: raw.prop_u_tip_mps.unwrap_or(defaults.u_tip),
            v0: raw.prop_v0_mps.unwrap_or(defaults.v0),
            d0: raw.prop_d0.unwrap_or(defaults.d0),
            rho: raw.prop_rho_kgm3.unwrap_or(defaults.rho),
            s: raw.prop_s.unwrap_or(defaults.s),
            a: raw.prop_a_m2.unwrap_or(defaults.a),
        };
        propulsion.validate()?;

        Ok(ScenarioConfig {
            p_t,
            g_t,
            theta_b_deg,
            f_c,
            g_r,
            gamma_th,
            eta_los_db,
            eta_nlos_db,
            env_gamma,
            env_delta,
            b_max,
            xi_ch,
            t_ch,
            v,
            h_ch,
            h_l,
            h_ut,
            lambda_ch,
            e_pt,
            event_radius,
            coverage_mode,
            strict_paper_mode,
            rectenna,
            propulsion,
            raw: raw.clone(),
        })
    }

    /// Effective isotropic radiated power, W.
    pub fn eirp(&self) -> f64 {
        self.p_t * self.g_t
    }

    /// Returns a copy with one key overridden and re-validated.
    pub fn with_override(&self, key: &str, value: &OverrideValue) -> Result<Self> {
        let mut raw = self.raw.clone();
        raw.set_key(key, value)?;
        raw.validate()
    }
}

/// Loads and validates a scenario document from a file.
pub fn load_config<P: AsRef<Path>>(path: P) -> Result<ScenarioConfig> {
    RawConfig::from_path(path)?.validate()
}

/// Loads and validates a scenario document from a string.
pub fn load_config_str(text: &str) -> Result<ScenarioConfig> {
    RawConfig::from_toml_str(text)?.validate()
}

/// Pencil-beam gain approximation: G = 30000 / θ_B² (θ_B in degrees,
/// gain linear).
pub fn gain_from_beamwidth(theta_b_deg: f64) -> Result<f64> {
    if !(theta_b_deg > 0.0 && theta_b_deg <= 180.0) {
        return Err(Error::Domain(format!(
            "beamwidth must be in (0, 180] degrees, got {theta_b_deg}"
        )));
    }
    Ok(30_000.0 / (theta_b_deg * theta_b_deg))
}

/// Inverse of the pencil-beam approximation: θ_B = sqrt(30000 / G).
pub fn beamwidth_from_gain(g_t_linear: f64) -> Result<f64> {
    if !(g_t_linear > 0.0) {
        return Err(Error::Domain(format!(
            "gain must be > 0, got {g_t_linear}"
        )));
    }
    let theta = (30_000.0 / g_t_linear).sqrt();
    if theta > 180.0 {
        return Err(Error::Domain(format!(
            "gain {g_t_linear} corresponds to beamwidth {theta:.2} degrees (> 180)"
        )));
    }
    Ok(theta)
}

/// ISM-band radiated-power compliance snapshot.
///
/// Conducted power is capped at 1 W and EIRP at 4 W. The report never
/// mutates anything; the CLI downgrades violations to warnings unless
/// `--strict-fcc` is given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplianceReport {
    pub eirp_watts: f64,
    pub eirp_dbm: f64,
    pub conducted_power_ok: bool,
    pub eirp_ok: bool,
}

impl ComplianceReport {
    pub fn ok(&self) -> bool {
        self.conducted_power_ok && self.eirp_ok
    }
}

/// Checks the transmit chain against the ISM-band caps (1 W conducted,
/// 4 W EIRP).
pub fn check_eirp_compliance(p_t: f64, g_t: f64) -> Result<ComplianceReport> {
    if p_t < 0.0 {
        return Err(Error::Domain(format!("conducted power must be >= 0, got {p_t}")));
    }
    if !(g_t > 0.0) {
        return Err(Error::Domain(format!("gain must be > 0, got {g_t}")));
    }
    let eirp = p_t * g_t;
    Ok(ComplianceReport {
        eirp_watts: eirp,
        eirp_dbm: watts_to_dbm(eirp),
        conducted_power_ok: p_t <= 1.0,
        eirp_ok: eirp <= 4.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TABLE_ONE: &str = r#"
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
    fn table_one_loads_with_expected_si_values() {
        let cfg = load_config_str(TABLE_ONE).unwrap();
        assert!((cfg.p_t - 0.1259).abs() < 1e-4);
        assert_eq!(cfg.b_max, 2_772_000.0);
        assert_eq!(cfg.lambda_ch, 1e-6);
        assert_eq!(cfg.f_c, 868e6);
        assert_eq!(cfg.h_ut, 20.0);
        assert_eq!(cfg.xi_ch, 770.0);
        assert_eq!(cfg.t_ch, 3600.0);
        let report = check_eirp_compliance(cfg.p_t, cfg.g_t).unwrap();
        assert!(report.ok());
        assert!((report.eirp_dbm - 36.0).abs() < 0.05);
    }

    #[test]
    fn zero_density_is_rejected_naming_the_key() {
        let text = TABLE_ONE.replace("lambda_ch_per_km2 = 1.0", "lambda_ch_per_km2 = 0.0");
        match load_config_str(&text) {
            Err(Error::InvalidValue { key, .. }) => assert_eq!(key, "lambda_ch_per_km2"),
            other => panic!("expected InvalidValue, got {other:?}"),
        }
    }

    #[test]
    fn missing_key_is_named() {
        let text = TABLE_ONE.replace("v_mps = 10.36\n", "");
        match load_config_str(&text) {
            Err(Error::MissingKey(key)) => assert_eq!(key, "v_mps"),
            other => panic!("expected MissingKey, got {other:?}"),
        }
    }

    #[test]
    fn unknown_key_is_a_schema_violation() {
        let text = format!("{TABLE_ONE}\nnot_a_key = 3.0\n");
        match load_config_str(&text) {
            Err(Error::Parse(msg)) => assert!(msg.contains("not_a_key"), "{msg}"),
            other => panic!("expected Parse, got {other:?}"),
        }
    }

    #[test]
    fn both_gain_and_beamwidth_is_rejected() {
        let text = format!("{TABLE_ONE}\ntheta_b_deg = 30.8\n");
        assert!(matches!(
            load_config_str(&text),
            Err(Error::ExactlyOneOf { got: 2, .. })
        ));
        let text = TABLE_ONE.replace("g_t_dbi = 15.0\n", "");
        assert!(matches!(
            load_config_str(&text),
            Err(Error::ExactlyOneOf { got: 0, .. })
        ));
    }

    #[test]
    fn schema_version_is_enforced() {
        let text = TABLE_ONE.replace("schema_version = 1", "schema_version = 2");
        assert!(matches!(
            load_config_str(&text),
            Err(Error::SchemaVersion { found: 2, .. })
        ));
    }

    #[test]
    fn descent_below_ground_is_rejected() {
        let text = TABLE_ONE.replace("h_l_m = 80.0", "h_l_m = 130.0");
        assert!(load_config_str(&text).is_err());
    }

    #[test]
    fn gain_beamwidth_table_pairing() {
        // 30.8 degrees pairs with 15.0 dBi
        let g = gain_from_beamwidth(30.8).unwrap();
        assert!((linear_to_db(g) - 15.0).abs() < 0.05);
        // unity gain at theta = sqrt(30000)
        let g1 = gain_from_beamwidth(173.205_080_756_887_72).unwrap();
        assert!((g1 - 1.0).abs() < 1e-9);
        // closed-form inversion at 10 dBi
        let theta = beamwidth_from_gain(db_to_linear(10.0)).unwrap();
        assert!((theta - 54.772_255_750_516_6).abs() < 1e-9);
        assert!(gain_from_beamwidth(0.0).is_err());
        assert!(gain_from_beamwidth(181.0).is_err());
        assert!(beamwidth_from_gain(0.5).is_err());
    }

    #[test]
    fn beamwidth_gain_round_trip() {
        for i in 1..=180 {
            let theta = i as f64;
            let back = beamwidth_from_gain(gain_from_beamwidth(theta).unwrap()).unwrap();
            assert!((back - theta).abs() <= 1e-9 * theta);
        }
    }

    #[test]
    fn derived_pair_is_consistent_within_a_tenth_percent() {
        let cfg = load_config_str(TABLE_ONE).unwrap();
        let implied = 30_000.0 / (cfg.theta_b_deg * cfg.theta_b_deg);
        assert!((implied / cfg.g_t - 1.0).abs() < 1e-3);
    }

    #[test]
    fn eirp_caps() {
        // Table pairing sits at the 4 W cap
        let r = check_eirp_compliance(dbm_to_watts(21.0), gain_from_beamwidth(30.8).unwrap()).unwrap();
        assert!(r.ok());
        assert!((r.eirp_watts - 3.981).abs() < 0.01);
        // EIRP cap exceeded
        let r = check_eirp_compliance(1.0, 31.62).unwrap();
        assert!(r.conducted_power_ok && !r.eirp_ok);
        // conducted cap exceeded while EIRP is fine
        let r = check_eirp_compliance(1.5, 1.0).unwrap();
        assert!(!r.conducted_power_ok && r.eirp_ok);
    }

    #[test]
    fn override_roundtrip() {
        let cfg = load_config_str(TABLE_ONE).unwrap();
        let swapped = cfg
            .with_override("t_ch_s", &OverrideValue::Number(600.0))
            .unwrap();
        assert_eq!(swapped.t_ch, 600.0);
        assert_eq!(cfg.t_ch, 3600.0);
        assert!(cfg
            .with_override("no_such_key", &OverrideValue::Number(1.0))
            .is_err());
    }

    #[test]
    fn transfer_budget_cannot_exceed_battery() {
        let text = TABLE_ONE.replace("e_pt_wh = 0.05", "e_pt_wh = 771.0");
        assert!(load_config_str(&text).is_err());
    }
}
