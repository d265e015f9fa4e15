//! Shared helpers for the integration suites: repo-relative input paths,
//! a pass/fail reporter, and the direct-expectation service-probability
//! oracle used to cross-check the CDF-based quadrature.

use uavcov::config::{RawConfig, ScenarioConfig};
use uavcov::quad::{self, Tolerance};
use uavcov::service::ServiceAnalytics;

pub fn repo_path(rel: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

pub fn table_one() -> ScenarioConfig {
    uavcov::config::load_config(repo_path("configs/table_one.toml")).expect("shipped base config")
}

pub fn table_one_raw() -> RawConfig {
    RawConfig::from_path(repo_path("configs/table_one.toml")).expect("shipped base config")
}

/// Prints one verdict line; returns `pass` so callers can fold results.
pub fn report(criterion: &str, pass: bool, detail: &str) -> bool {
    let mark = if pass { "PASS" } else { "FAIL" };
    println!("[{mark}] {criterion}: {detail}");
    pass
}

/// Independent analytic route for the service probability: the expectation
/// of the conditional service probability against the nearest-distance
/// density 2 pi lambda r exp(-lambda pi r²), integrated over radius.
///
/// This never touches the CDF/preimage machinery, so agreement with
/// `ServiceAnalytics::service_probability` checks both derivations.
pub fn rayleigh_route_pe(cfg: &ScenarioConfig) -> f64 {
    let analytics = ServiceAnalytics::from_config(cfg).expect("valid config");
    let lam_pi = cfg.lambda_ch * std::f64::consts::PI;
    let upper = analytics.r_max;
    if upper <= 0.0 {
        return 0.0;
    }
    let integrand = |r: f64| {
        analytics.conditional(r) * 2.0 * lam_pi * r * (-lam_pi * r * r).exp()
    };
    // split at the law's quantiles and at the service cutoffs
    let mut points = vec![0.0];
    for q in [0.5f64, 0.9, 0.99, 0.9999] {
        points.push((-(1.0 - q).ln() / lam_pi).sqrt());
    }
    points.push(analytics.r_feas);
    points.push(analytics.r_zero);
    points.push(upper);
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let points: Vec<f64> = points.into_iter().filter(|&p| p <= upper).collect();
    quad::integrate_split(integrand, &points, Tolerance { abs: 1e-10, rel: 1e-9 })
        .expect("oracle quadrature")
}
