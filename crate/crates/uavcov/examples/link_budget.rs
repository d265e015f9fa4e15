//! Air-to-ground link budget: path loss in both link states, the LoS
//! probability as the beam widens, the intercepted power at the sensor, and
//! the radiated-power compliance check.
//!
//! Run with: cargo run -p uavcov --example link_budget

use uavcov::config::{check_eirp_compliance, gain_from_beamwidth};
use uavcov::link::{intercepted_power, los_probability, path_loss, path_loss_db, LinkKind};
use uavcov::units::{db_to_linear, dbm_to_watts, watts_to_dbm};

fn main() {
    let f_c = 868e6;
    let (eta_los, eta_nlos) = (1.6034, 29.6462); // high-rise urban

    println!("  d [m]   PL_LoS [dB]   PL_NLoS [dB]");
    for d in [5.0, 10.0, 20.0, 50.0, 100.0] {
        let los = path_loss_db(f_c, d, LinkKind::LoS, eta_los, eta_nlos).unwrap();
        let nlos = path_loss_db(f_c, d, LinkKind::NLoS, eta_los, eta_nlos).unwrap();
        println!("  {d:5.0}   {los:11.3}   {nlos:12.3}");
    }

    println!();
    println!("  theta_B [deg]   gain [dBi]   P_LoS");
    for theta in [10.0, 20.0, 30.8, 60.0, 90.0] {
        let g = gain_from_beamwidth(theta).unwrap();
        let p = los_probability(theta, 27.1157, 0.1232).unwrap();
        println!("  {theta:13.1}   {:10.2}   {p:.4}", 10.0 * g.log10());
    }

    // The reference transmit chain: 21 dBm into a 30.8 degree pencil beam.
    let p_t = dbm_to_watts(21.0);
    let g_t = gain_from_beamwidth(30.8).unwrap();
    let report = check_eirp_compliance(p_t, g_t).unwrap();
    println!();
    println!(
        "EIRP = {:.3} W = {:.2} dBm (conducted ok: {}, EIRP ok: {})",
        report.eirp_watts, report.eirp_dbm, report.conducted_power_ok, report.eirp_ok
    );

    // Power intercepted 20 m under the hovering UAV at unit fade.
    let pl = path_loss(f_c, 20.0, LinkKind::LoS, eta_los, eta_nlos).unwrap();
    let p_i = intercepted_power(report.eirp_watts, db_to_linear(9.0), 1.0, pl).unwrap();
    println!(
        "intercepted at 20 m (LoS, g_h = 1): {:.2} uW = {:.2} dBm",
        p_i * 1e6,
        watts_to_dbm(p_i)
    );
}
