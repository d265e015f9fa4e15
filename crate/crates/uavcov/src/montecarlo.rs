//! Independent stochastic oracle: samples the station point process,
//! replays the mission time/energy bookkeeping and the fading link, and
//! estimates the service and coverage probabilities empirically.
//!
//! Determinism contract: for a fixed (seed, config) pair the estimates are
//! bit-identical across runs and across worker counts. Every trial draws
//! from its own counter-mode RNG stream, per-trial values are collected in
//! trial order, and the reduction is a sequential sum over that order.

use crate::config::{CoverageMode, ScenarioConfig};
use crate::coverage::coverage_sensor;
use crate::error::{Error, Result};
use crate::link::{intercepted_power, path_loss, LinkKind};
use crate::service::{mission_timing, ServiceAnalytics};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Poisson};
use rayon::prelude::*;

/// Which nearest-station sampler the simulators draw from.
///
/// The disc sampler realizes the point process inside a finite window and
/// costs O(lambda * window²) per trial; the inverse-CDF sampler draws the
/// nearest distance directly from its closed-form law in O(1). The two are
/// distributionally identical (cross-validated in the test suite).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NearestSampler {
    #[default]
    DiscUniform,
    RayleighInverse,
}

/// Simulation controls.
#[derive(Debug, Clone, Copy)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
    /// Simulation disc radius, m. `None` derives the default
    /// max(6 / sqrt(lambda pi), 2 r_max), which keeps the probability of a
    /// station mattering outside the window below 1e-9.
    pub window_radius: Option<f64>,
    pub sampler: NearestSampler,
}

impl SimConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        SimConfig {
            trials,
            seed,
            window_radius: None,
            sampler: NearestSampler::default(),
        }
    }

    pub fn with_sampler(mut self, sampler: NearestSampler) -> Self {
        self.sampler = sampler;
        self
    }

    pub fn with_window(mut self, radius: f64) -> Self {
        self.window_radius = Some(radius);
        self
    }
}

/// Default simulation window: max(6 / sqrt(lambda pi), 2 r_max).
pub fn default_window(lambda_ch: f64, r_max: f64) -> f64 {
    (6.0 / (lambda_ch * std::f64::consts::PI).sqrt()).max(2.0 * r_max)
}

/// Empirical estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: u64,
}

impl SimEstimate {
    /// |analytic − mean| in units of the standard error.
    pub fn z_score(&self, analytic: f64) -> f64 {
        if self.std_error == 0.0 {
            if (analytic - self.mean).abs() == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (analytic - self.mean).abs() / self.std_error
        }
    }
}

/// Nearest-station distance from an explicit window realization: draws
/// N ~ Poisson(lambda pi window²), places N points uniformly in the disc,
/// and returns the minimum distance to the center (+inf when N = 0).
pub fn sample_nearest_station<R: Rng>(lambda_ch: f64, window_radius: f64, rng: &mut R) -> f64 {
    debug_assert!(lambda_ch > 0.0 && window_radius > 0.0);
    let mean = lambda_ch * std::f64::consts::PI * window_radius * window_radius;
    let n = Poisson::new(mean).expect("positive mean").sample(rng) as u64;
    if n == 0 {
        return f64::INFINITY;
    }
    let mut min_u: f64 = 1.0;
    for _ in 0..n {
        // uniform point in the disc has radius W sqrt(u); the minimum
        // radius corresponds to the minimum u
        min_u = min_u.min(rng.random::<f64>());
    }
    window_radius * min_u.sqrt()
}

/// Nearest-station distance by inverting the closed-form law
/// P(R > r) = exp(-lambda pi r²).
pub fn sample_nearest_rayleigh<R: Rng>(lambda_ch: f64, rng: &mut R) -> f64 {
    debug_assert!(lambda_ch > 0.0);
    let u: f64 = rng.random();
    (-(1.0 - u).ln() / (lambda_ch * std::f64::consts::PI)).sqrt()
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn draw_nearest(cfg: &ScenarioConfig, sim: &SimConfig, window: f64, rng: &mut ChaCha8Rng) -> f64 {
    match sim.sampler {
        NearestSampler::DiscUniform => sample_nearest_station(cfg.lambda_ch, window, rng),
        NearestSampler::RayleighInverse => sample_nearest_rayleigh(cfg.lambda_ch, rng),
    }
}

/// Empirical service probability: per trial, draws the nearest-station
/// distance, rebuilds the mission time decomposition, and accumulates the
/// availability fraction (t_PT + t_AP) / (t_PT + t_AP + t_Ch + t_J), with
/// zero for infeasible missions. Mean and standard error of the mean use
/// the sample standard deviation (the estimator is not Bernoulli).
pub fn simulate_service(cfg: &ScenarioConfig, sim: &SimConfig) -> Result<SimEstimate> {
    let analytics = ServiceAnalytics::from_config(cfg)?;
    let window = resolve_window(cfg, sim, &analytics)?;
    let strict = cfg.strict_paper_mode;

    let values: Vec<f64> = (0..sim.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(sim.seed, trial);
            let r = draw_nearest(cfg, sim, window, &mut rng);
            service_fraction(cfg, &analytics, r, strict)
        })
        .collect();

    Ok(mean_and_sem(&values))
}

fn service_fraction(
    cfg: &ScenarioConfig,
    analytics: &ServiceAnalytics,
    r: f64,
    strict: bool,
) -> f64 {
    if !r.is_finite() {
        return 0.0;
    }
    if strict && r > analytics.r_max {
        return 0.0;
    }
    let t = mission_timing(cfg, r).expect("validated config");
    let service_time = t.t_pt + t.t_ap_raw;
    if strict {
        if service_time < 0.0 {
            return 0.0;
        }
    } else if !t.feasible {
        return 0.0;
    }
    service_time / (service_time + t.t_ch + t.t_j)
}

/// Empirical coverage probability: per trial, a Bernoulli service event at
/// the conditional availability for the drawn distance, a Bernoulli LoS
/// state, a unit-mean exponential fade through the link budget, and the
/// rectifier (fixed-efficiency in the closed-form mode, the full curve in
/// the nonlinear mode). Success means serviced and rectified power at or
/// above the activation threshold.
pub fn simulate_coverage(cfg: &ScenarioConfig, sim: &SimConfig) -> Result<SimEstimate> {
    let analytics = ServiceAnalytics::from_config(cfg)?;
    let window = resolve_window(cfg, sim, &analytics)?;
    let sensor = coverage_sensor(cfg)?; // reuse p_los only
    let p_los = sensor.p_los;
    let pl_los = path_loss(cfg.f_c, cfg.h_ut, LinkKind::LoS, cfg.eta_los_db, cfg.eta_nlos_db)?;
    let pl_nlos = path_loss(cfg.f_c, cfg.h_ut, LinkKind::NLoS, cfg.eta_los_db, cfg.eta_nlos_db)?;
    let eirp = cfg.eirp();

    let hits: Vec<f64> = (0..sim.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(sim.seed, trial);
            let r = draw_nearest(cfg, sim, window, &mut rng);
            let p_service = analytics.conditional(if r.is_finite() { r } else { f64::MAX });
            let serviced = rng.random::<f64>() < p_service;
            let los = rng.random::<f64>() < p_los;
            let fade: f64 = Exp1.sample(&mut rng);
            if !serviced {
                return 0.0;
            }
            let pl = if los { pl_los } else { pl_nlos };
            let p_in = intercepted_power(eirp, cfg.g_r, fade, pl).expect("positive path loss");
            let p_dc = match cfg.coverage_mode {
                CoverageMode::PaperClosedForm => cfg.rectenna.eta_fixed * p_in,
                CoverageMode::NonlinearRectenna => cfg.rectenna.rectify(p_in),
            };
            if p_dc >= cfg.gamma_th {
                1.0
            } else {
                0.0
            }
        })
        .collect();

    let n = hits.len() as f64;
    let mean = hits.iter().sum::<f64>() / n;
    Ok(SimEstimate {
        mean,
        std_error: (mean * (1.0 - mean) / n).sqrt(),
        trials: sim.trials,
    })
}

fn resolve_window(
    cfg: &ScenarioConfig,
    sim: &SimConfig,
    analytics: &ServiceAnalytics,
) -> Result<f64> {
    if sim.trials == 0 {
        return Err(Error::Domain("trials must be >= 1".into()));
    }
    let window = sim
        .window_radius
        .unwrap_or_else(|| default_window(cfg.lambda_ch, analytics.r_max));
    if matches!(sim.sampler, NearestSampler::DiscUniform) && window <= analytics.r_max {
        return Err(Error::Domain(format!(
            "window radius {window} m does not exceed the service radius {} m",
            analytics.r_max
        )));
    }
    Ok(window)
}

fn mean_and_sem(values: &[f64]) -> SimEstimate {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0).max(1.0);
    SimEstimate {
        mean,
        std_error: (var / n).sqrt(),
        trials: values.len() as u64,
    }
}

/// Two-sided Kolmogorov-Smirnov statistic of `samples` against `cdf`.
/// Non-finite samples (the empty-window sentinel) count as mass beyond any
/// finite quantile.
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &mut [f64], cdf: F) -> f64 {
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        if !x.is_finite() {
            break;
        }
        let f = cdf(x);
        d = d.max((((i + 1) as f64) / n - f).abs());
        d = d.max((f - (i as f64) / n).abs());
    }
    d
}

/// Asymptotic two-sided KS p-value (Kolmogorov distribution tail with the
/// small-sample correction t = d (sqrt(n) + 0.12 + 0.11/sqrt(n))).
pub fn ks_pvalue(d: f64, n: usize) -> f64 {
    let sn = (n as f64).sqrt();
    let t = d * (sn + 0.12 + 0.11 / sn);
    let mut sum = 0.0;
    for k in 1..=100 {
        let kf = k as f64;
        let term = (-2.0 * kf * kf * t * t).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
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
    fn disc_sampler_is_deterministic() {
        let mut rng1 = trial_rng(7, 3);
        let mut rng2 = trial_rng(7, 3);
        for _ in 0..32 {
            let a = sample_nearest_station(1e-6, 4000.0, &mut rng1);
            let b = sample_nearest_station(1e-6, 4000.0, &mut rng2);
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn empty_window_returns_infinity() {
        // mean point count 1e-12: essentially always empty
        let mut rng = trial_rng(1, 0);
        let lambda = 1e-12 / (std::f64::consts::PI);
        let mut infs = 0;
        for _ in 0..1000 {
            if !sample_nearest_station(lambda, 1.0, &mut rng).is_finite() {
                infs += 1;
            }
        }
        assert_eq!(infs, 1000);
    }

    #[test]
    fn disc_and_rayleigh_samplers_agree_distributionally() {
        let lambda = 1e-4;
        let window = 6.0 / (lambda * std::f64::consts::PI).sqrt();
        let n = 20_000;
        let mut disc: Vec<f64> = (0..n)
            .map(|i| sample_nearest_station(lambda, window, &mut trial_rng(11, i)))
            .collect();
        let mut inv: Vec<f64> = (0..n)
            .map(|i| sample_nearest_rayleigh(lambda, &mut trial_rng(12, i)))
            .collect();
        let cdf = |r: f64| 1.0 - (-lambda * std::f64::consts::PI * r * r).exp();
        let d1 = ks_statistic(&mut disc, cdf);
        let d2 = ks_statistic(&mut inv, cdf);
        assert!(ks_pvalue(d1, n as usize) > 0.01, "disc sampler KS p too small");
        assert!(ks_pvalue(d2, n as usize) > 0.01, "inverse sampler KS p too small");
    }

    #[test]
    fn estimates_are_bit_identical_across_worker_counts() {
        let cfg = load_config_str(BASE).unwrap();
        let sim = SimConfig::new(4000, 99).with_sampler(NearestSampler::RayleighInverse);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| simulate_service(&cfg, &sim).unwrap());
        let multi = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| simulate_service(&cfg, &sim).unwrap());
        assert_eq!(single.mean.to_bits(), multi.mean.to_bits());
        assert_eq!(single.std_error.to_bits(), multi.std_error.to_bits());
    }

    #[test]
    fn service_estimate_matches_quadrature() {
        let cfg = load_config_str(BASE).unwrap();
        let sim = SimConfig::new(50_000, 5).with_sampler(NearestSampler::RayleighInverse);
        let est = simulate_service(&cfg, &sim).unwrap();
        let analytic = crate::service::service_probability(&cfg).unwrap();
        assert!(
            est.z_score(analytic) < 4.0,
            "z = {} (mc {} vs analytic {})",
            est.z_score(analytic),
            est.mean,
            analytic
        );
    }

    #[test]
    fn zero_threshold_coverage_equals_service() {
        let text = BASE.replace("gamma_th_uw = 1.0", "gamma_th_uw = 0.0");
        let cfg = load_config_str(&text).unwrap();
        let sim = SimConfig::new(40_000, 21).with_sampler(NearestSampler::RayleighInverse);
        let service = simulate_service(&cfg, &sim).unwrap();
        let coverage = simulate_coverage(&cfg, &sim).unwrap();
        let se = (service.std_error.powi(2) + coverage.std_error.powi(2)).sqrt();
        assert!(
            (service.mean - coverage.mean).abs() <= 3.0 * se.max(1e-12),
            "coverage {} vs service {}",
            coverage.mean,
            service.mean
        );
    }

    #[test]
    fn infeasible_everywhere_estimates_zero() {
        // battery cannot fund even the shortest mission
        let text = BASE
            .replace("b_max_wh = 770.0", "b_max_wh = 0.05")
            .replace("e_pt_wh = 0.05", "e_pt_wh = 0.01");
        let cfg = load_config_str(&text).unwrap();
        let sim = SimConfig::new(2000, 3).with_sampler(NearestSampler::RayleighInverse);
        let est = simulate_service(&cfg, &sim).unwrap();
        assert_eq!(est.mean, 0.0);
    }

    #[test]
    fn std_error_shrinks_like_inverse_sqrt_trials() {
        let cfg = load_config_str(BASE).unwrap();
        let small = simulate_service(
            &cfg,
            &SimConfig::new(1000, 17).with_sampler(NearestSampler::RayleighInverse),
        )
        .unwrap();
        let large = simulate_service(
            &cfg,
            &SimConfig::new(100_000, 17).with_sampler(NearestSampler::RayleighInverse),
        )
        .unwrap();
        let ratio = small.std_error / large.std_error;
        assert!(
            (ratio - 10.0).abs() < 2.0,
            "se ratio {ratio} should be near sqrt(100)"
        );
    }

    #[test]
    fn ks_pvalue_sanity() {
        // tiny statistic: p near 1; huge statistic: p near 0
        assert!(ks_pvalue(0.001, 100_000) > 0.9);
        assert!(ks_pvalue(0.5, 100_000) < 1e-10);
    }
}
