//! Fit the rectenna efficiency polynomial from the shipped measurement CSV,
//! then exercise the fitted model: the sensitivity cliff, the saturation
//! clamp, and threshold inversion for a 1 uW activation requirement.
//!
//! Run with: cargo run -p uavcov --example rectenna_fit

use uavcov::rectenna::{fit_rectenna, read_efficiency_csv};
use uavcov::units::watts_to_dbm;

fn data_path() -> std::path::PathBuf {
    let local = std::path::Path::new("data/rectenna_868mhz.csv");
    if local.exists() {
        return local.into();
    }
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/rectenna_868mhz.csv")
}

fn main() {
    let samples = read_efficiency_csv(data_path()).expect("shipped CSV");
    let model = fit_rectenna(&samples, 4).expect("monotone fit");

    println!("fitted model (mergeable into a scenario document):");
    print!("{}", model.to_config_block());

    let worst = samples
        .iter()
        .map(|&(p, e)| (model.psi(p) - e).abs())
        .fold(0.0f64, f64::max);
    println!("max efficiency residual over the samples: {worst:.4}");
    println!();

    println!("  P_in [dBm]   efficiency   P_out [uW]");
    for dbm in [-25.0, -20.0, -15.0, -10.0, -5.0, 0.0, 6.0, 10.0] {
        let p = uavcov::units::dbm_to_watts(dbm);
        let out = model.rectify(p);
        let eff = if p > 0.0 { out / p.min(model.p_sat) } else { 0.0 };
        println!("  {dbm:10.1}   {eff:10.4}   {:10.3}", out * 1e6);
    }
    println!("(below {:.0} dBm the cliff gives exactly zero; above {:.0} dBm the output clamps)",
        watts_to_dbm(model.p_th), watts_to_dbm(model.p_sat));

    let target = 1e-6;
    let p_in = model.invert_rectify(target).expect("reachable");
    println!();
    println!(
        "smallest input delivering {} uW: {:.3} uW = {:.2} dBm",
        target * 1e6,
        p_in * 1e6,
        watts_to_dbm(p_in)
    );
}
