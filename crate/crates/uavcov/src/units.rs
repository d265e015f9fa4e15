//! Unit conversions between the human-friendly config units and SI.
//!
//! All internal math runs in SI (W, J, s, m, Hz, linear gains). dB, dBm,
//! Wh, MHz and per-km² exist only at the config and report boundary.

/// Speed of light in m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// dBm to watts: 10^((x - 30) / 10).
pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// Watts to dBm.
pub fn watts_to_dbm(watts: f64) -> f64 {
    10.0 * watts.log10() + 30.0
}

/// dB to linear power ratio.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Linear power ratio to dB.
pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Watt-hours to joules (exact: x3600).
pub fn wh_to_joules(wh: f64) -> f64 {
    wh * 3600.0
}

/// Joules to watt-hours.
pub fn joules_to_wh(j: f64) -> f64 {
    j / 3600.0
}

/// Stations per km² to stations per m² (exact: x1e-6).
pub fn per_km2_to_per_m2(per_km2: f64) -> f64 {
    per_km2 * 1e-6
}

/// MHz to Hz.
pub fn mhz_to_hz(mhz: f64) -> f64 {
    mhz * 1e6
}

/// Microwatts to watts.
pub fn uw_to_watts(uw: f64) -> f64 {
    uw * 1e-6
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn table_values_convert_exactly() {
        // 21 dBm -> 0.1259 W
        assert!((dbm_to_watts(21.0) - 0.125_892_541_179_416_73).abs() < 1e-15);
        // 770 Wh -> 2 772 000 J
        assert_eq!(wh_to_joules(770.0), 2_772_000.0);
        // 1 per km² -> 1e-6 per m²
        assert_eq!(per_km2_to_per_m2(1.0), 1e-6);
    }

    proptest! {
        #[test]
        fn dbm_round_trip(dbm in -80.0..80.0f64) {
            let back = watts_to_dbm(dbm_to_watts(dbm));
            prop_assert!((back - dbm).abs() <= 1e-12 * dbm.abs().max(1.0));
        }

        #[test]
        fn db_round_trip(db in -120.0..120.0f64) {
            let back = linear_to_db(db_to_linear(db));
            prop_assert!((back - db).abs() <= 1e-12 * db.abs().max(1.0));
        }
    }
}
