//! Trip power vs velocity for the default rotary-wing platform, the hover
//! power, the power-minimizing trip velocity, and a round-trip energy split.
//!
//! Run with: cargo run -p uavcov --example propulsion_curve

use uavcov::propulsion::{
    hover_power, optimal_trip_velocity, trip_energy, trip_power, PropulsionModel,
};

fn main() {
    let model = PropulsionModel::default();

    println!("hover power P_h = {:.3} W", hover_power(&model));
    println!();
    println!("  v [m/s]   P_J [W]");
    for i in 0..=14 {
        let v = 2.0 + 2.0 * i as f64;
        println!("  {v:7.1}   {:8.3}", trip_power(&model, v).unwrap());
    }

    let v_star = optimal_trip_velocity(&model, 1.0, 30.0).unwrap();
    println!();
    println!(
        "power-minimizing velocity on [1, 30]: {v_star:.3} m/s ({:.3} W)",
        trip_power(&model, v_star).unwrap()
    );

    // Round trip to an event area 1 km out with an 80 m descent: each leg
    // costs exactly half.
    let (r, h_l, v) = (1000.0, 80.0, 10.36);
    let e_j = trip_energy(&model, r, h_l, v).unwrap();
    println!();
    println!(
        "round trip r = {r} m, descent {h_l} m at {v} m/s: E_J = {:.1} J ({:.1} J per leg)",
        e_j,
        e_j / 2.0
    );
}
