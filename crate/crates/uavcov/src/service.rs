//! Service availability: battery charging, mission time decomposition, the
//! conditional service probability given the distance to the nearest
//! recharging station, its CDF under the Poisson station process, and the
//! quadrature-evaluated unconditional service probability.
//!
//! Two evaluation modes exist. The default ("physical") mode zeroes service
//! whenever the battery cannot fund the round trip plus the transfer-and-
//! hover phase (data-collection time would go negative). The strict mode
//! keeps the literal closed form, whose feasibility test covers only the
//! trip energy; it is clamped into [0, 1] so the result is a probability.

use crate::config::ScenarioConfig;
use crate::error::Result;
use crate::propulsion::{hover_power, trip_power};
use crate::quad::{self, Tolerance};

/// Battery energy after dwelling `t_ch` seconds on a pad charging at
/// `xi_ch` watts: min(xi_ch · t_ch, b_max).
pub fn battery_level(xi_ch: f64, t_ch: f64, b_max: f64) -> f64 {
    debug_assert!(xi_ch >= 0.0 && t_ch >= 0.0 && b_max >= 0.0);
    (xi_ch * t_ch).min(b_max)
}

/// Dwell time at which the battery saturates: b_max / xi_ch.
pub fn saturation_time(xi_ch: f64, b_max: f64) -> f64 {
    b_max / xi_ch
}

/// Per-sortie time decomposition for a mission serving an event area at
/// ground distance `r_delta` from the nearest station.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MissionTiming {
    /// Round-trip travel time, s.
    pub t_j: f64,
    /// Power-transfer time, s.
    pub t_pt: f64,
    /// Data-collection time, s (clamped at 0 when the budget runs out).
    pub t_ap: f64,
    /// Unclamped data-collection time, s; negative means infeasible.
    pub t_ap_raw: f64,
    /// Recharge dwell, s.
    pub t_ch: f64,
    /// Battery level funding the sortie, J.
    pub b_uav: f64,
    /// Round-trip energy, J.
    pub e_j: f64,
    /// True when the battery covers trip + transfer + hover, which is
    /// exactly the condition that the energy left after service covers the
    /// return leg.
    pub feasible: bool,
}

/// Computes the mission time decomposition.
///
/// The descent distance is charged at cruise power inside the round trip;
/// when `r_delta` is zero the UAV never leaves the pad, so the descent is
/// zero as well.
pub fn mission_timing(cfg: &ScenarioConfig, r_delta: f64) -> Result<MissionTiming> {
    let p_j = trip_power(&cfg.propulsion, cfg.v)?;
    let p_h = hover_power(&cfg.propulsion);
    let b_uav = battery_level(cfg.xi_ch, cfg.t_ch, cfg.b_max);
    let h_l = if r_delta == 0.0 { 0.0 } else { cfg.h_l };
    let t_j = 2.0 * (r_delta + h_l) / cfg.v;
    let t_pt = if cfg.e_pt == 0.0 { 0.0 } else { cfg.e_pt / cfg.p_t };
    let t_ap_raw = (b_uav - t_pt * (p_h + cfg.p_t) - t_j * p_j) / p_h;
    Ok(MissionTiming {
        t_j,
        t_pt,
        t_ap: t_ap_raw.max(0.0),
        t_ap_raw,
        t_ch: cfg.t_ch,
        b_uav,
        e_j: t_j * p_j,
        feasible: t_ap_raw >= 0.0,
    })
}

/// Precomputed quantities for the service-probability closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ServiceAnalytics {
    /// zeta = V·B_UAV − V·t_PT·P_T (m·W composite).
    pub zeta: f64,
    /// Largest station distance with non-zero service under the trip-energy
    /// test: (V·B_UAV − 2 h_l P_J) / (2 P_J), clamped at 0.
    pub r_max: f64,
    /// Radius where the closed-form numerator crosses zero:
    /// (zeta − 2 h_l P_J) / (2 P_J), clamped at 0.
    pub r_zero: f64,
    /// Radius beyond which the data-collection time goes negative
    /// (the physical-mode cutoff), clamped at 0.
    pub r_feas: f64,
    /// Supremum of the conditional service probability over r > 0.
    pub x0: f64,
    /// Conditional service probability at r = 0 (descent suppressed).
    pub x_max: f64,
    p_j: f64,
    p_h: f64,
    v: f64,
    t_ch: f64,
    h_l: f64,
    lambda_ch: f64,
    strict: bool,
    feasible_at_origin: bool,
}

impl ServiceAnalytics {
    pub fn from_config(cfg: &ScenarioConfig) -> Result<Self> {
        let p_j = trip_power(&cfg.propulsion, cfg.v)?;
        let p_h = hover_power(&cfg.propulsion);
        let b_uav = battery_level(cfg.xi_ch, cfg.t_ch, cfg.b_max);
        let t_pt = if cfg.e_pt == 0.0 { 0.0 } else { cfg.e_pt / cfg.p_t };
        let zeta = cfg.v * b_uav - cfg.v * t_pt * cfg.p_t;

        let r_max = ((cfg.v * b_uav - 2.0 * cfg.h_l * p_j) / (2.0 * p_j)).max(0.0);
        let r_zero = ((zeta - 2.0 * cfg.h_l * p_j) / (2.0 * p_j)).max(0.0);
        let r_feas =
            ((zeta - cfg.v * t_pt * p_h - 2.0 * cfg.h_l * p_j) / (2.0 * p_j)).max(0.0);

        let (x0, x_max) = if zeta > 0.0 {
            let x0 = (zeta - 2.0 * cfg.h_l * p_j)
                / (zeta - 2.0 * cfg.h_l * (p_j - p_h) + cfg.v * cfg.t_ch * p_h);
            let x_max = zeta / (zeta + cfg.v * cfg.t_ch * p_h);
            (x0.clamp(0.0, 1.0), x_max.clamp(0.0, 1.0))
        } else {
            (0.0, 0.0)
        };

        // Feasibility of the r = 0 mission (no descent): the battery must
        // cover the transfer-and-hover phase alone.
        let feasible_at_origin = b_uav - t_pt * (p_h + cfg.p_t) >= 0.0;

        Ok(ServiceAnalytics {
            zeta,
            r_max,
            r_zero,
            r_feas,
            x0,
            x_max,
            p_j,
            p_h,
            v: cfg.v,
            t_ch: cfg.t_ch,
            h_l: cfg.h_l,
            lambda_ch: cfg.lambda_ch,
            strict: cfg.strict_paper_mode,
            feasible_at_origin,
        })
    }

    /// Trip power at the configured velocity, W.
    pub fn p_j(&self) -> f64 {
        self.p_j
    }

    /// Hover power, W.
    pub fn p_h(&self) -> f64 {
        self.p_h
    }

    /// Raw closed-form value at radius `r` (descent included), before any
    /// feasibility rule; may be negative past `r_zero`.
    fn closed_form(&self, r: f64) -> f64 {
        let num = self.zeta - 2.0 * (r + self.h_l) * self.p_j;
        let den = self.zeta - 2.0 * (r + self.h_l) * (self.p_j - self.p_h)
            + self.v * self.t_ch * self.p_h;
        num / den
    }

    /// Conditional service probability given the nearest-station distance.
    pub fn conditional(&self, r_delta: f64) -> f64 {
        debug_assert!(r_delta >= 0.0);
        if self.zeta <= 0.0 {
            return 0.0;
        }
        if r_delta == 0.0 {
            if self.strict || self.feasible_at_origin {
                return self.x_max;
            }
            return 0.0;
        }
        if self.strict {
            if r_delta > self.r_max {
                return 0.0;
            }
            return self.closed_form(r_delta).clamp(0.0, 1.0);
        }
        if r_delta > self.r_feas {
            return 0.0;
        }
        self.closed_form(r_delta).clamp(0.0, 1.0)
    }

    /// Preimage radius of the CDF: the station distance at which the
    /// conditional service probability drops to `x`, clamped at 0.
    pub fn preimage_radius(&self, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        Ok(self.preimage_raw(x).max(0.0))
    }

    fn preimage_raw(&self, x: f64) -> f64 {
        let kappa = 2.0 * (self.p_j * (1.0 - x) + x * self.p_h);
        (self.zeta * (1.0 - x) - self.h_l * kappa - x * self.v * self.t_ch * self.p_h) / kappa
    }

    /// Radius cap applied to the preimage: none in strict mode, the
    /// physical feasibility radius otherwise.
    fn radius_cap(&self) -> f64 {
        if self.strict {
            f64::INFINITY
        } else {
            self.r_feas
        }
    }

    /// CDF of the conditional service probability over the station process:
    /// F(x) = exp(−λ π q(x)²) with q the (capped, clamped) preimage radius.
    /// Equals 1 on [x0, x_max].
    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        if self.zeta <= 0.0 {
            return Ok(1.0);
        }
        let q = self.preimage_raw(x).max(0.0).min(self.radius_cap());
        Ok((-self.lambda_ch * std::f64::consts::PI * q * q).exp())
    }

    fn check_domain(&self, x: f64) -> Result<()> {
        if !(0.0..=self.x_max + 1e-12).contains(&x) {
            return Err(crate::error::Error::Domain(format!(
                "x = {x} outside the CDF domain [0, {}]",
                self.x_max
            )));
        }
        Ok(())
    }

    /// Unconditional service probability: the expectation of the conditional
    /// service probability over the nearest-station distance, evaluated as
    /// the integral of (1 − F) with the quadrature tolerance contract
    /// (1e-9 absolute, 1e-8 relative).
    pub fn service_probability(&self) -> Result<f64> {
        if self.zeta <= 0.0 || self.x0 <= 0.0 {
            return Ok(0.0);
        }
        if !self.strict && self.r_feas <= 0.0 {
            return Ok(0.0);
        }
        let cap = self.radius_cap();
        let lam_pi = self.lambda_ch * std::f64::consts::PI;
        let integrand = |x: f64| {
            let q = self.preimage_raw(x).max(0.0).min(cap);
            1.0 - (-lam_pi * q * q).exp()
        };

        // Split at the radii the station-distance law concentrates on, and
        // at the feasibility cap; the integrand is smooth between them.
        let mut points = vec![0.0];
        for q in [0.5f64, 0.9, 0.99] {
            let r_q = (-(1.0 - q).ln() / lam_pi).sqrt();
            let x_q = self.closed_form(r_q);
            if x_q.is_finite() {
                points.push(x_q.clamp(0.0, self.x0));
            }
        }
        if !self.strict {
            points.push(self.closed_form(self.r_feas).clamp(0.0, self.x0));
        }
        points.push(self.x0);
        points.sort_by(|a, b| a.partial_cmp(b).unwrap());
        quad::integrate_split(integrand, &points, Tolerance::default())
    }
}

/// Conditional service probability for a scenario, given the nearest-station
/// distance. Convenience wrapper over [`ServiceAnalytics`].
pub fn service_prob_conditional(cfg: &ScenarioConfig, r_delta: f64) -> Result<f64> {
    Ok(ServiceAnalytics::from_config(cfg)?.conditional(r_delta))
}

/// Unconditional service probability for a scenario.
pub fn service_probability(cfg: &ScenarioConfig) -> Result<f64> {
    ServiceAnalytics::from_config(cfg)?.service_probability()
}
