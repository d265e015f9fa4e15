//! Programmatic parameter sweep: coverage probability against station
//! density for three recharge dwells, with both the analytic engine and the
//! Monte Carlo engine per grid point. Emits CSV on stdout.
//!
//! Run with: cargo run --release -p uavcov --example density_sweep

use uavcov::config::RawConfig;
use uavcov::sweep::{run_sweep, SweepSpec};

fn config_path() -> std::path::PathBuf {
    let local = std::path::Path::new("configs/table_one.toml");
    if local.exists() {
        return local.into();
    }
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/table_one.toml")
}

fn main() {
    let base = RawConfig::from_path(config_path()).expect("shipped base config");
    let spec = SweepSpec::from_toml_str(
        r#"
axis1_key = "lambda_ch_per_km2"
axis1_values = [0.001, 0.01, 0.1, 1.0, 10.0, 100.0]
axis2_key = "t_ch_s"
axis2_values = [600.0, 1800.0, 3600.0]
engine = "both"
trials = 20000
seed = 7
outputs = ["p_e", "p_cov"]
"#,
    )
    .expect("valid sweep spec");

    let table = run_sweep(&base, &spec).expect("sweep");
    print!("{}", table.to_csv(false));
}
