//! Cross-validation of the closed forms against the seeded Monte Carlo
//! simulator, including the determinism guarantee across worker counts.
//!
//! Run with: cargo run --release -p uavcov --example monte_carlo_check

use uavcov::config::{load_config, OverrideValue};
use uavcov::coverage::coverage_total;
use uavcov::montecarlo::{simulate_coverage, simulate_service, NearestSampler, SimConfig};

fn config_path() -> std::path::PathBuf {
    let local = std::path::Path::new("configs/table_one.toml");
    if local.exists() {
        return local.into();
    }
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/table_one.toml")
}

fn main() {
    let base = load_config(config_path()).expect("shipped base config");
    let sim = SimConfig::new(100_000, 42).with_sampler(NearestSampler::RayleighInverse);

    println!("scenario        estimator   analytic    mc mean     std err    |z|");
    for (name, t_ch) in [("base", 3600.0), ("half-charge", 1800.0), ("overflow", 4350.0)] {
        let cfg = base
            .with_override("t_ch_s", &OverrideValue::Number(t_ch))
            .unwrap();
        let analytic = coverage_total(&cfg).unwrap();
        let service = simulate_service(&cfg, &sim).unwrap();
        let coverage = simulate_coverage(&cfg, &sim).unwrap();
        println!(
            "{name:14}  p_e         {:.6}   {:.6}   {:.2e}   {:.2}",
            analytic.p_e,
            service.mean,
            service.std_error,
            service.z_score(analytic.p_e)
        );
        println!(
            "{:14}  p_cov       {:.6}   {:.6}   {:.2e}   {:.2}",
            "",
            analytic.p_cov,
            coverage.mean,
            coverage.std_error,
            coverage.z_score(analytic.p_cov)
        );
    }

    // Same seed, different thread counts: bit-identical estimates.
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| simulate_service(&base, &sim).unwrap());
    let eight = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .unwrap()
        .install(|| simulate_service(&base, &sim).unwrap());
    println!();
    println!(
        "determinism: 1 worker -> {:.17}, 8 workers -> {:.17}, bit-identical: {}",
        one.mean,
        eight.mean,
        one.mean.to_bits() == eight.mean.to_bits()
    );
}
