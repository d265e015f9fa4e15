//! Reproduce the overflow figure (coverage vs station density for dwells
//! from partial charge to overstaying) from the shipped calibration file and
//! print its qualitative summary, including the crossing density where the
//! short dwell overtakes the overflowed one.
//!
//! Run with: cargo run --release -p uavcov --example figure_reproduction

use uavcov::config::RawConfig;
use uavcov::sweep::{reproduce_figure, FigureId};

fn calibration_path() -> std::path::PathBuf {
    let local = std::path::Path::new("configs/calibration.paper-figs");
    if local.exists() {
        return local.into();
    }
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/calibration.paper-figs")
}

fn main() {
    let calib = RawConfig::from_path(calibration_path()).expect("shipped calibration");
    let report = reproduce_figure(FigureId::Fig3c, &calib).expect("figure pipeline");

    // First rows of the data grid
    for line in report.csv.lines().take(8) {
        println!("{line}");
    }
    let total = report.csv.lines().count();
    println!("... ({total} lines total; full grid written by `uavcov reproduce --figure fig3c`)");
    println!();

    for check in &report.summary {
        let mark = if check.pass { "PASS" } else { "FAIL" };
        if check.detail.is_empty() {
            println!("[{mark}] {}", check.name);
        } else {
            println!("[{mark}] {}: {}", check.name, check.detail);
        }
    }
}
