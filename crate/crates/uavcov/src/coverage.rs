//! Sensor-side coverage probability (LoS/NLoS decomposition through the
//! fading tail) and its composition with the service probability.

use crate::config::{CoverageMode, ScenarioConfig};
use crate::error::Result;
use crate::link::{los_probability, path_loss, LinkKind};
use crate::service::service_probability;

/// Per-link-state coverage detail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkCoverage {
    /// Fade threshold g*: the sensor is covered iff the fading draw is at
    /// least this value. Infinite when the activation threshold cannot be
    /// reached through this link state at all.
    pub threshold_fade: f64,
    /// P(G_h >= g*) under the unit-mean exponential fade.
    pub coverage: f64,
}

/// Sensor coverage, before composition with availability.
#[derive(Debug, Clone, PartialEq)]
pub struct SensorCoverage {
    pub p_los: f64,
    pub los: LinkCoverage,
    pub nlos: LinkCoverage,
    /// P_LoS · cov_LoS + (1 − P_LoS) · cov_NLoS.
    pub p_cov_s: f64,
    pub mode: CoverageMode,
    /// Set when the activation threshold exceeds the rectenna's saturated
    /// output, which forces zero coverage.
    pub note: Option<String>,
}

/// Full coverage result.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageResult {
    /// Unconditional service probability.
    pub p_e: f64,
    pub sensor: SensorCoverage,
    /// p_e · p_cov_s, exactly.
    pub p_cov: f64,
}

fn link_coverage(cfg: &ScenarioConfig, kind: LinkKind, p_in_needed: f64) -> Result<LinkCoverage> {
    let pl = path_loss(cfg.f_c, cfg.h_ut, kind, cfg.eta_los_db, cfg.eta_nlos_db)?;
    let g_star = p_in_needed * pl / (cfg.eirp() * cfg.g_r);
    Ok(LinkCoverage {
        threshold_fade: g_star,
        coverage: (-g_star).exp(),
    })
}

/// Probability that a serviced sensor rectifies at least its activation
/// threshold, split by link state.
///
/// In the closed-form mode the rectifier is a fixed efficiency, so the
/// required intercepted power is `gamma_th / eta_fixed`. In the nonlinear
/// mode the threshold is pushed through the inverse rectenna curve; a
/// threshold above the saturated output yields zero coverage.
pub fn coverage_sensor(cfg: &ScenarioConfig) -> Result<SensorCoverage> {
    let p_los = los_probability(cfg.theta_b_deg, cfg.env_gamma, cfg.env_delta)?;
    let mut note = None;

    let (los, nlos) = if cfg.gamma_th == 0.0 {
        let full = LinkCoverage { threshold_fade: 0.0, coverage: 1.0 };
        (full, full)
    } else {
        match cfg.coverage_mode {
            CoverageMode::PaperClosedForm => {
                let eta = cfg.rectenna.eta_fixed;
                if eta <= 0.0 {
                    note = Some("fixed efficiency is zero; no rectified power".into());
                    let none = LinkCoverage { threshold_fade: f64::INFINITY, coverage: 0.0 };
                    (none, none)
                } else {
                    (
                        link_coverage(cfg, LinkKind::LoS, cfg.gamma_th / eta)?,
                        link_coverage(cfg, LinkKind::NLoS, cfg.gamma_th / eta)?,
                    )
                }
            }
            CoverageMode::NonlinearRectenna => match cfg.rectenna.invert_rectify(cfg.gamma_th) {
                Ok(p_in) => (
                    link_coverage(cfg, LinkKind::LoS, p_in)?,
                    link_coverage(cfg, LinkKind::NLoS, p_in)?,
                ),
                Err(crate::error::Error::Unreachable { target, max }) => {
                    note = Some(format!(
                        "activation threshold {target:.3e} W exceeds saturated output {max:.3e} W"
                    ));
                    let none = LinkCoverage { threshold_fade: f64::INFINITY, coverage: 0.0 };
                    (none, none)
                }
                Err(e) => return Err(e),
            },
        }
    };

    Ok(SensorCoverage {
        p_los,
        los,
        nlos,
        p_cov_s: p_los * los.coverage + (1.0 - p_los) * nlos.coverage,
        mode: cfg.coverage_mode,
        note,
    })
}

/// Composes availability and sensor coverage: P_cov = P_e · P_cov,s.
pub fn coverage_total(cfg: &ScenarioConfig) -> Result<CoverageResult> {
    let p_e = service_probability(cfg)?;
    let sensor = coverage_sensor(cfg)?;
    let p_cov = p_e * sensor.p_cov_s;
    Ok(CoverageResult { p_e, sensor, p_cov })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{load_config_str, OverrideValue};
    use crate::link::path_loss_db;
    use crate::units::db_to_linear;

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
rectenna_eta_fixed = 0.5
"#;

    fn base() -> crate::config::ScenarioConfig {
        load_config_str(BASE).unwrap()
    }

    #[test]
    fn closed_form_scalar_oracle() {
        // cov_LoS = exp(-gamma_th PL_LoS / (0.5 EIRP G_R)), evaluated in dB
        // arithmetic independently of the implementation path.
        let cfg = base();
        let s = coverage_sensor(&cfg).unwrap();
        let pl_db = path_loss_db(868e6, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
        let received_dbm = crate::units::watts_to_dbm(cfg.eirp()) + 9.0 - pl_db;
        let ratio_db = crate::units::watts_to_dbm(cfg.gamma_th) - received_dbm;
        let expected = (-db_to_linear(ratio_db) / 0.5).exp();
        assert!(
            (s.los.coverage - expected).abs() < 1e-12,
            "{} vs {}",
            s.los.coverage,
            expected
        );
        // frozen value from the independent evaluation
        assert!((s.los.coverage - 0.952_699).abs() < 1e-4);
        assert!((s.p_cov_s - 0.883_695).abs() < 2e-4);
    }

    #[test]
    fn zero_threshold_gives_full_coverage_in_both_modes() {
        for mode in ["paper", "nonlinear"] {
            let cfg = load_config_str(&format!(
                "{}coverage_mode = \"{mode}\"\n",
                BASE.replace("gamma_th_uw = 1.0", "gamma_th_uw = 0.0")
            ))
            .unwrap();
            let s = coverage_sensor(&cfg).unwrap();
            assert_eq!(s.p_cov_s, 1.0);
        }
    }

    #[test]
    fn modes_agree_for_constant_efficiency_rectenna() {
        // default config carries the constant-efficiency model, so the
        // nonlinear route must reproduce the closed form to 1e-9
        let paper = base();
        let nonlinear = paper
            .with_override("coverage_mode", &OverrideValue::Text("nonlinear".into()))
            .unwrap();
        let a = coverage_sensor(&paper).unwrap();
        let b = coverage_sensor(&nonlinear).unwrap();
        assert!((a.p_cov_s - b.p_cov_s).abs() < 1e-9);
        assert!((a.los.threshold_fade - b.los.threshold_fade).abs() < 1e-9);
    }

    #[test]
    fn unreachable_threshold_yields_zero_with_note() {
        let cfg = load_config_str(&format!(
            "{}coverage_mode = \"nonlinear\"\nrectenna_p_th_dbm = -20.0\nrectenna_p_sat_dbm = -10.0\nrectenna_coeffs = [0.3]\n",
            BASE.replace("gamma_th_uw = 1.0", "gamma_th_uw = 1000.0")
        ))
        .unwrap();
        let s = coverage_sensor(&cfg).unwrap();
        assert_eq!(s.p_cov_s, 0.0);
        assert!(s.note.is_some());
        assert_eq!(s.los.coverage, 0.0);
    }

    #[test]
    fn factorization_is_exact() {
        let cfg = base();
        let total = coverage_total(&cfg).unwrap();
        assert_eq!(total.p_cov, total.p_e * total.sensor.p_cov_s);
        assert!(total.p_cov <= total.p_e.min(total.sensor.p_cov_s));
        let recomputed = total.p_e * total.sensor.p_cov_s;
        assert_eq!(total.p_cov.to_bits(), recomputed.to_bits());
    }

    #[test]
    fn density_sweep_keeps_sensor_side_constant() {
        let cfg = base();
        let reference = coverage_sensor(&cfg).unwrap().p_cov_s;
        for lam in [1e-3, 1e-1, 1.0, 10.0, 100.0] {
            let c = cfg
                .with_override("lambda_ch_per_km2", &OverrideValue::Number(lam))
                .unwrap();
            let r = coverage_total(&c).unwrap();
            assert_eq!(r.sensor.p_cov_s, reference);
        }
    }

    #[test]
    fn monotone_in_threshold_distance_eirp_and_gain() {
        let cfg = base();
        // threshold up, coverage down
        let mut prev = f64::INFINITY;
        for i in 1..=10 {
            let c = cfg
                .with_override("gamma_th_uw", &OverrideValue::Number(i as f64))
                .unwrap();
            let s = coverage_sensor(&c).unwrap();
            assert!(s.p_cov_s <= prev);
            prev = s.p_cov_s;
        }
        // distance up, coverage down
        let mut prev = f64::INFINITY;
        for i in 1..=10 {
            let c = cfg
                .with_override("h_ut_m", &OverrideValue::Number(10.0 * i as f64))
                .unwrap();
            let s = coverage_sensor(&c).unwrap();
            assert!(s.p_cov_s <= prev);
            prev = s.p_cov_s;
        }
        // transmit power up (EIRP up), coverage up
        let mut prev = 0.0;
        for i in 1..=10 {
            let c = cfg
                .with_override("p_t_dbm", &OverrideValue::Number(i as f64 * 2.0))
                .unwrap();
            let s = coverage_sensor(&c).unwrap();
            assert!(s.p_cov_s >= prev);
            prev = s.p_cov_s;
        }
        // receive gain up, coverage up
        let mut prev = 0.0;
        for i in 0..10 {
            let c = cfg
                .with_override("g_r_dbi", &OverrideValue::Number(i as f64))
                .unwrap();
            let s = coverage_sensor(&c).unwrap();
            assert!(s.p_cov_s >= prev);
            prev = s.p_cov_s;
        }
    }
}
