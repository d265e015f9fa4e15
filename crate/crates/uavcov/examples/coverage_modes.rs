//! The two sensor-coverage evaluations side by side: the fixed-efficiency
//! closed form and the nonlinear-rectenna threshold inversion, composed with
//! the service probability into the total coverage probability.
//!
//! Run with: cargo run -p uavcov --example coverage_modes

use uavcov::config::{load_config, OverrideValue};
use uavcov::coverage::coverage_total;

fn config_path() -> std::path::PathBuf {
    let local = std::path::Path::new("configs/table_one.toml");
    if local.exists() {
        return local.into();
    }
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/table_one.toml")
}

fn main() {
    let base = load_config(config_path()).expect("shipped base config");

    for mode in ["paper", "nonlinear"] {
        let cfg = base
            .with_override("coverage_mode", &OverrideValue::Text(mode.into()))
            .unwrap();
        let r = coverage_total(&cfg).expect("evaluation");
        println!("mode = {mode}");
        println!("  p_e      = {:.6}", r.p_e);
        println!("  p_los    = {:.6}", r.sensor.p_los);
        println!(
            "  LoS:  threshold fade {:.4}, coverage {:.6}",
            r.sensor.los.threshold_fade, r.sensor.los.coverage
        );
        println!(
            "  NLoS: threshold fade {:.4}, coverage {:.3e}",
            r.sensor.nlos.threshold_fade, r.sensor.nlos.coverage
        );
        println!("  p_cov_s  = {:.6}", r.sensor.p_cov_s);
        println!("  p_cov    = {:.6}  (= p_e * p_cov_s exactly)", r.p_cov);
        println!();
    }

    // Sensitivity of the closed form to the assumed fixed efficiency.
    println!("fixed efficiency sweep (closed form):");
    println!("  eta    p_cov_s");
    for eta in [0.2, 0.3762082592592593, 0.5, 0.7] {
        let cfg = base
            .with_override("rectenna_eta_fixed", &OverrideValue::Number(eta))
            .unwrap();
        let r = coverage_total(&cfg).unwrap();
        println!("  {eta:.3}  {:.6}", r.sensor.p_cov_s);
    }
}
