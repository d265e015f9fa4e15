//! Service availability for the baseline scenario: the derived analytics
//! (zeta, reach radii, probability bounds), the conditional service
//! probability as the nearest station moves away, its CDF, and the
//! quadrature-evaluated unconditional service probability.
//!
//! Run with: cargo run -p uavcov --example service_probability

use uavcov::config::load_config;
use uavcov::service::ServiceAnalytics;

fn config_path() -> std::path::PathBuf {
    let local = std::path::Path::new("configs/table_one.toml");
    if local.exists() {
        return local.into();
    }
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/table_one.toml")
}

fn main() {
    let cfg = load_config(config_path()).expect("shipped base config");
    let a = ServiceAnalytics::from_config(&cfg).expect("valid scenario");

    println!("zeta   = {:.4e} m*W", a.zeta);
    println!("r_max  = {:.1} m   (trip-energy reach)", a.r_max);
    println!("r_feas = {:.1} m   (trip + transfer + hover feasible)", a.r_feas);
    println!("x0     = {:.6}  (sup of the conditional over r > 0)", a.x0);
    println!("x_max  = {:.6}  (value at r = 0, descent suppressed)", a.x_max);

    println!();
    println!("  r [km]   P(service | r)");
    for i in 0..=8 {
        let r = a.r_max * i as f64 / 8.0;
        println!("  {:6.1}   {:.6}", r / 1e3, a.conditional(r));
    }

    println!();
    println!("  x        F(x) = P(conditional <= x)");
    for i in 0..=6 {
        let x = a.x_max * i as f64 / 6.0;
        println!("  {x:.4}   {:.6}", a.cdf(x).unwrap());
    }

    let p_e = a.service_probability().expect("quadrature");
    println!();
    println!("unconditional service probability P_e = {p_e:.6}");
}
