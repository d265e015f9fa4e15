//! Rotary-wing UAV power consumption: trip power as a function of velocity,
//! hover power, round-trip energy, and the power-minimizing trip velocity.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Rotary-wing propulsion coefficients.
///
/// `p0` and `p_i` are the blade-profile and induced power in hover; the
/// remaining fields feed the velocity-dependent terms of the trip-power
/// curve. Hover power is always `p0 + p_i` and is never stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropulsionModel {
    /// Blade profile power in hover, W.
    pub p0: f64,
    /// Induced power in hover, W.
    pub p_i: f64,
    /// Rotor blade tip speed, m/s.
    pub u_tip: f64,
    /// Mean rotor-induced velocity in hover, m/s.
    pub v0: f64,
    /// Fuselage drag ratio (dimensionless).
    pub d0: f64,
    /// Air density, kg/m³.
    pub rho: f64,
    /// Rotor solidity (dimensionless).
    pub s: f64,
    /// Rotor disc area, m².
    pub a: f64,
}

impl Default for PropulsionModel {
    /// Calibrated so hover power is 168.49 W and trip power at 10.36 m/s is
    /// 126.400 W, matching the reference rotary-wing platform.
    fn default() -> Self {
        PropulsionModel {
            p0: 79.86,
            p_i: 88.63,
            u_tip: 120.0,
            v0: 4.03,
            d0: 0.6,
            rho: 1.225,
            s: 0.05,
            a: 0.503,
        }
    }
}

impl PropulsionModel {
    /// Checks that every coefficient is strictly positive.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("prop_p0_w", self.p0),
            ("prop_pi_w", self.p_i),
            ("prop_u_tip_mps", self.u_tip),
            ("prop_v0_mps", self.v0),
            ("prop_d0", self.d0),
            ("prop_rho_kgm3", self.rho),
            ("prop_s", self.s),
            ("prop_a_m2", self.a),
        ];
        for (key, v) in fields {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidValue {
                    key: key.into(),
                    reason: format!("must be finite and > 0, got {v}"),
                });
            }
        }
        Ok(())
    }
}

/// Power drawn while cruising at velocity `v` (m/s).
///
/// P(v) = P0 (1 + 3v²/U_tip²) + P_i v0 / v + ½ d0 ρ s A v³.
/// Diverges as v → 0⁺ (induced term) and as v → ∞ (parasite term).
pub fn trip_power(model: &PropulsionModel, v: f64) -> Result<f64> {
    if !(v > 0.0) {
        return Err(Error::Domain(format!("trip velocity must be > 0, got {v}")));
    }
    let profile = model.p0 * (1.0 + 3.0 * v * v / (model.u_tip * model.u_tip));
    let induced = model.p_i * model.v0 / v;
    let parasite = 0.5 * model.d0 * model.rho * model.s * model.a * v * v * v;
    Ok(profile + induced + parasite)
}

/// Power drawn while hovering: P0 + P_i, independent of velocity.
pub fn hover_power(model: &PropulsionModel) -> f64 {
    model.p0 + model.p_i
}

/// Energy for a round trip of one-way ground distance `r` plus descent `h_l`,
/// flown at `v`: 2 (r + h_l) / v · P(v). Each leg costs exactly half.
pub fn trip_energy(model: &PropulsionModel, r: f64, h_l: f64, v: f64) -> Result<f64> {
    if r < 0.0 || h_l < 0.0 {
        return Err(Error::Domain("trip distances must be >= 0".into()));
    }
    Ok(2.0 * (r + h_l) / v * trip_power(model, v)?)
}

/// Velocity minimizing trip power over `[v_lo, v_hi]`.
///
/// The curve is unimodal on any practical interval; that is checked by
/// counting sign changes of the discrete derivative on a 10⁴-point grid.
/// If unimodal, golden-section search refines to 1e-3 m/s; otherwise the
/// grid argmin is returned.
pub fn optimal_trip_velocity(model: &PropulsionModel, v_lo: f64, v_hi: f64) -> Result<f64> {
    if !(v_lo > 0.0) || !(v_hi > v_lo) {
        return Err(Error::Domain(format!(
            "invalid velocity interval [{v_lo}, {v_hi}]"
        )));
    }
    const GRID: usize = 10_000;
    let step = (v_hi - v_lo) / GRID as f64;
    let power = |v: f64| trip_power(model, v).expect("v > 0 on the grid");

    let mut sign_changes = 0;
    let mut prev_delta = power(v_lo + step) - power(v_lo);
    let mut grid_best = (v_lo, power(v_lo));
    for i in 1..=GRID {
        let v = v_lo + step * i as f64;
        let p = power(v);
        if p < grid_best.1 {
            grid_best = (v, p);
        }
        if i < GRID {
            let delta = power(v + step) - p;
            if delta.signum() != prev_delta.signum() && delta != 0.0 && prev_delta != 0.0 {
                sign_changes += 1;
            }
            prev_delta = delta;
        }
    }
    if sign_changes > 1 {
        return Ok(grid_best.0);
    }

    // Golden-section refinement to 1e-3 m/s.
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (v_lo, v_hi);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut fc, mut fd) = (power(c), power(d));
    while (b - a) > 1e-3 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = power(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = power(d);
        }
    }
    Ok(0.5 * (a + b))
}
