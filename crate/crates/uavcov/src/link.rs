//! Air-to-ground link: free-space path loss with environment-dependent excess
//! loss, LoS probability from the antenna beamwidth, and the power intercepted
//! by a sensor under the hovering UAV.

use crate::error::{Error, Result};
use crate::units::{db_to_linear, SPEED_OF_LIGHT};
use serde::{Deserialize, Serialize};

/// Line-of-sight state of the air-to-ground link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkKind {
    LoS,
    NLoS,
}

/// UAV-to-sensor geometry while serving.
///
/// The pencil-beam directivity makes the slant range equal to the hover
/// altitude above the sensors, so `d_3d == h_ut` by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGeometry {
    /// Hover altitude above the sensor plane, m.
    pub h_ut: f64,
    /// UAV-sensor distance, m (equals `h_ut`).
    pub d_3d: f64,
}

impl LinkGeometry {
    pub fn new(h_ut: f64) -> Result<Self> {
        if !(h_ut > 0.0) {
            return Err(Error::Domain(format!("h_ut must be > 0, got {h_ut}")));
        }
        Ok(LinkGeometry { h_ut, d_3d: h_ut })
    }
}

/// Path loss in dB: 20 log10(4π f d / c) + η, with η the excess loss of the
/// chosen link state.
pub fn path_loss_db(
    f_c: f64,
    d: f64,
    link: LinkKind,
    eta_los_db: f64,
    eta_nlos_db: f64,
) -> Result<f64> {
    if !(f_c > 0.0) {
        return Err(Error::Domain(format!("carrier frequency must be > 0, got {f_c}")));
    }
    if !(d > 0.0) {
        return Err(Error::Domain(format!("distance must be > 0, got {d}")));
    }
    let eta = match link {
        LinkKind::LoS => eta_los_db,
        LinkKind::NLoS => eta_nlos_db,
    };
    Ok(20.0 * (4.0 * std::f64::consts::PI * f_c * d / SPEED_OF_LIGHT).log10() + eta)
}

/// Path loss as a linear ratio. Values below 1 are returned as computed
/// (short-range corner cases are not clamped).
pub fn path_loss(
    f_c: f64,
    d: f64,
    link: LinkKind,
    eta_los_db: f64,
    eta_nlos_db: f64,
) -> Result<f64> {
    Ok(db_to_linear(path_loss_db(f_c, d, link, eta_los_db, eta_nlos_db)?))
}

/// Probability of a line-of-sight link given the half-power beamwidth.
///
/// P_LoS = 1 / (1 + γ exp(-δ (90 - θ_B/2 - γ))), with 90 - θ_B/2 the
/// elevation angle in degrees. P_NLoS = 1 - P_LoS.
pub fn los_probability(theta_b_deg: f64, gamma: f64, delta: f64) -> Result<f64> {
    if !(theta_b_deg > 0.0 && theta_b_deg <= 180.0) {
        return Err(Error::Domain(format!(
            "beamwidth must be in (0, 180] degrees, got {theta_b_deg}"
        )));
    }
    if gamma < 0.0 || delta < 0.0 {
        return Err(Error::Domain("environment constants must be >= 0".into()));
    }
    let elevation = 90.0 - theta_b_deg / 2.0;
    Ok(1.0 / (1.0 + gamma * (-delta * (elevation - gamma)).exp()))
}

/// RF power intercepted by the sensor: EIRP · G_R · G_h / PL (all linear).
pub fn intercepted_power(eirp: f64, g_r: f64, g_h: f64, pl: f64) -> Result<f64> {
    if eirp < 0.0 || g_r < 0.0 || g_h < 0.0 {
        return Err(Error::Domain("link-budget inputs must be >= 0".into()));
    }
    if !(pl > 0.0) {
        return Err(Error::Domain(format!("path loss must be > 0, got {pl}")));
    }
    Ok(eirp * g_r * g_h / pl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{dbm_to_watts, linear_to_db, watts_to_dbm};

    #[test]
    fn path_loss_oracle_at_20m_868mhz() {
        // Independent dB-arithmetic evaluation:
        //   FSPL = 20 log10(4π · 868e6 · 20 / c) = 57.2386 dB, plus 1.6034 dB.
        let fspl = 20.0 * (4.0 * std::f64::consts::PI * 868e6 * 20.0 / SPEED_OF_LIGHT).log10();
        assert!((fspl - 57.238_7).abs() < 1e-3);
        let pl = path_loss_db(868e6, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
        assert!((pl - 58.842_1).abs() < 1e-3);
    }

    #[test]
    fn nlos_minus_los_is_exactly_the_eta_difference() {
        let los = path_loss_db(868e6, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
        let nlos = path_loss_db(868e6, 20.0, LinkKind::NLoS, 1.6034, 29.6462).unwrap();
        assert!((nlos - los - 28.0428).abs() < 1e-12);
    }

    #[test]
    fn unit_loss_at_the_log_argument_of_one() {
        let d = SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI * 868e6);
        let pl = path_loss(868e6, d, LinkKind::LoS, 0.0, 0.0).unwrap();
        assert!((pl - 1.0).abs() < 1e-12);
    }

    #[test]
    fn path_loss_rejects_bad_inputs() {
        assert!(path_loss_db(0.0, 20.0, LinkKind::LoS, 0.0, 0.0).is_err());
        assert!(path_loss_db(868e6, 0.0, LinkKind::LoS, 0.0, 0.0).is_err());
    }

    #[test]
    fn path_loss_scales_as_frequency_squared() {
        let base = path_loss(868e6, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
        let double = path_loss(2.0 * 868e6, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
        assert!((double / base - 4.0).abs() < 1e-9);
    }

    #[test]
    fn path_loss_increasing_in_distance_and_frequency() {
        let mut prev = 0.0;
        for i in 1..=50 {
            let d = 5.0 * i as f64;
            let pl = path_loss(868e6, d, LinkKind::NLoS, 1.6034, 29.6462).unwrap();
            assert!(pl > prev);
            prev = pl;
        }
        let mut prev = 0.0;
        for i in 1..=50 {
            let f = 100e6 * i as f64;
            let pl = path_loss(f, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
            assert!(pl > prev);
            prev = pl;
        }
    }

    #[test]
    fn los_probability_high_rise_urban() {
        // Direct scalar evaluation, cross-checked against high-precision
        // arithmetic: 1/(1 + 27.1157 exp(-0.1232 (74.6 - 27.1157))).
        let p = los_probability(30.8, 27.1157, 0.1232).unwrap();
        assert!((p - 0.9276).abs() < 1e-3);
        assert!((p - 0.927_570_347_941).abs() < 1e-9);
    }

    #[test]
    fn los_probability_degenerate_cases() {
        // gamma = 0 collapses the denominator to 1
        assert_eq!(los_probability(100.0, 0.0, 0.5).unwrap(), 1.0);
        // elevation angle equal to gamma zeroes the exponent
        let gamma = 40.0;
        let theta = 2.0 * (90.0 - gamma);
        let p = los_probability(theta, gamma, 0.7).unwrap();
        assert!((p - 1.0 / (1.0 + gamma)).abs() < 1e-14);
    }

    #[test]
    fn los_probability_decreasing_in_beamwidth() {
        let mut prev = 1.1;
        for i in 1..=36 {
            let theta = 5.0 * i as f64;
            let p = los_probability(theta, 27.1157, 0.1232).unwrap();
            assert!(p < prev);
            prev = p;
        }
    }

    #[test]
    fn intercepted_power_db_oracle() {
        // 36 dBm EIRP + 9 dBi - 58.842 dB = -13.842 dBm
        let eirp = dbm_to_watts(36.0);
        let g_r = db_to_linear(9.0);
        let pl = path_loss(868e6, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
        let p_i = intercepted_power(eirp, g_r, 1.0, pl).unwrap();
        let expected_dbm = 36.0 + 9.0 - path_loss_db(868e6, 20.0, LinkKind::LoS, 1.6034, 29.6462).unwrap();
        assert!((watts_to_dbm(p_i) - expected_dbm).abs() < 1e-9);
        // about 41.4 microwatts
        assert!((p_i - 41.4e-6).abs() < 0.2e-6);
    }

    #[test]
    fn intercepted_power_fade_and_linearity() {
        let pl = 1e6;
        assert_eq!(intercepted_power(4.0, 8.0, 0.0, pl).unwrap(), 0.0);
        let one = intercepted_power(4.0, 8.0, 1.0, pl).unwrap();
        let two = intercepted_power(8.0, 8.0, 1.0, pl).unwrap();
        assert!((two - 2.0 * one).abs() < 1e-18);
        assert!(intercepted_power(4.0, 8.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn intercepted_power_db_identity_with_fade() {
        let eirp = dbm_to_watts(36.0);
        let g_r = db_to_linear(9.0);
        let pl_db = path_loss_db(868e6, 20.0, LinkKind::NLoS, 1.6034, 29.6462).unwrap();
        let g_h = 0.37;
        let p_i = intercepted_power(eirp, g_r, g_h, db_to_linear(pl_db)).unwrap();
        let lhs = watts_to_dbm(p_i);
        let rhs = 36.0 + 9.0 - pl_db + linear_to_db(g_h);
        assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn geometry_ties_distance_to_altitude() {
        let g = LinkGeometry::new(20.0).unwrap();
        assert_eq!(g.d_3d, g.h_ut);
        assert!(LinkGeometry::new(0.0).is_err());
    }
}
