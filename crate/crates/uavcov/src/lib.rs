//! # uavcov
//!
//! Coverage probability of UAV-powered battery-less sensors in an
//! energy-neutral network whose recharging stations form a Poisson point
//! process.
//!
//! A rotary-wing UAV recharges at the nearest station, flies to an event
//! area, hovers while transferring RF power to ground sensors and collecting
//! their data, and flies back. Sensors are covered when the UAV is actually
//! serving (not travelling or recharging) *and* their rectennas harvest at
//! least the activation threshold through the fading air-to-ground link.
//!
//! The crate provides both sides of that computation and keeps them
//! independent so they can cross-check each other:
//!
//! - closed-form analysis: conditional service probability given the
//!   nearest-station distance, its CDF under the Poisson process, the
//!   quadrature-evaluated unconditional service probability
//!   ([`service`]), and the LoS/NLoS fading tail of the sensor-side
//!   coverage ([`coverage`]);
//! - a seeded, deterministic Monte Carlo simulator of the same system
//!   ([`montecarlo`]);
//! - the building blocks: unit conversions ([`units`]), rotary-wing
//!   propulsion power ([`propulsion`]), the air-to-ground link budget
//!   ([`link`]), and the nonlinear rectenna model with polynomial
//!   efficiency fitting ([`rectenna`]);
//! - a sweep/figure harness emitting CSV ([`sweep`]).
//!
//! Start with the runnable examples (`cargo run --example service_probability`
//! and friends); each one demonstrates a single capability end to end. The
//! `uavcov` binary exposes the same entry points as subcommands.
//!
//! ```
//! use uavcov::config::load_config_str;
//! use uavcov::coverage::coverage_total;
//!
//! let cfg = load_config_str(r#"
//! schema_version = 1
//! p_t_dbm = 21.0
//! theta_b_deg = 30.8
//! f_c_mhz = 868.0
//! g_r_dbi = 9.0
//! gamma_th_uw = 1.0
//! eta_los_db = 1.6034
//! eta_nlos_db = 29.6462
//! env_gamma = 27.1157
//! env_delta = 0.1232
//! b_max_wh = 770.0
//! v_mps = 10.36
//! h_ch_m = 100.0
//! h_l_m = 80.0
//! lambda_ch_per_km2 = 1.0
//! e_pt_wh = 0.05
//! "#).unwrap();
//! let result = coverage_total(&cfg).unwrap();
//! assert!(result.p_cov > 0.0 && result.p_cov < 1.0);
//! assert_eq!(result.p_cov, result.p_e * result.sensor.p_cov_s);
//! ```

// Negated comparisons like `!(v > 0.0)` are used on purpose in validation:
// unlike `v <= 0.0` they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod coverage;
pub mod error;
pub mod link;
pub mod montecarlo;
pub mod propulsion;
pub mod quad;
pub mod rectenna;
pub mod service;
pub mod sweep;
pub mod units;

pub use config::{
    check_eirp_compliance, gain_from_beamwidth, load_config, load_config_str,
    beamwidth_from_gain, ComplianceReport, CoverageMode, RawConfig, ScenarioConfig,
};
pub use coverage::{coverage_sensor, coverage_total, CoverageResult, SensorCoverage};
pub use error::{Error, Result};
pub use montecarlo::{
    sample_nearest_rayleigh, sample_nearest_station, simulate_coverage, simulate_service,
    NearestSampler, SimConfig, SimEstimate,
};
pub use propulsion::{hover_power, optimal_trip_velocity, trip_energy, trip_power, PropulsionModel};
pub use rectenna::{fit_rectenna, RectennaModel};
pub use service::{
    battery_level, mission_timing, service_prob_conditional, service_probability,
    MissionTiming, ServiceAnalytics,
};
