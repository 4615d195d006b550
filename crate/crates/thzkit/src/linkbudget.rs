//! THz path loss: Friis spreading plus table-driven molecular absorption,
//! and simple received-power accounting.
//!
//! Total loss in dB is the sum of the spreading term
//! A_s = 20·log₁₀(4πfd/c₀) and the Beer–Lambert absorption term
//! A_ma = 10·log₁₀(e)·K(f)·d, with K(f) linearly interpolated from a
//! measured (or synthetic) coefficient table. No extrapolation: absorption
//! lines swing over orders of magnitude, so frequencies outside the table
//! are a hard error.

use std::path::Path;

use crate::error::{Error, Result};
use crate::quantities::constants::C_0;

/// 10·log₁₀(e): dB per unit of K·d.
const DB_PER_NEPER_POWER: f64 = 4.342_944_819_032_518;

/// Molecular absorption coefficients K (m⁻¹) on a strictly increasing
/// frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct AbsorptionTable {
    rows: Vec<(f64, f64)>,
}

impl AbsorptionTable {
    pub fn new(rows: Vec<(f64, f64)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::domain(
                "absorption table needs at least one row".to_string(),
            ));
        }
        for pair in rows.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::domain(format!(
                    "table frequencies must be strictly increasing ({} then {})",
                    pair[0].0, pair[1].0
                )));
            }
        }
        if let Some(&(f, k)) = rows.iter().find(|&&(_, k)| k < 0.0) {
            return Err(Error::domain(format!(
                "absorption coefficient must be >= 0, got {k} at {f} Hz"
            )));
        }
        Ok(AbsorptionTable { rows })
    }

    /// Parse CSV text with a required `f_hz,k_per_m` header. Leading `#`
    /// comment lines are skipped.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::domain("empty absorption CSV".to_string()))?;
        let cols: Vec<&str> = header.split(',').map(str::trim).collect();
        if cols != ["f_hz", "k_per_m"] {
            return Err(Error::domain(format!(
                "absorption CSV header must be `f_hz,k_per_m`, got {header:?}"
            )));
        }
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let mut parts = line.split(',').map(str::trim);
            let (Some(f), Some(k), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::domain(format!(
                    "row {}: expected two columns",
                    i + 1
                )));
            };
            let f: f64 = f
                .parse()
                .map_err(|_| Error::domain(format!("row {}: bad frequency {f:?}", i + 1)))?;
            let k: f64 = k
                .parse()
                .map_err(|_| Error::domain(format!("row {}: bad coefficient {k:?}", i + 1)))?;
            rows.push((f, k));
        }
        AbsorptionTable::new(rows)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        AbsorptionTable::from_csv_str(&std::fs::read_to_string(path.as_ref())?)
    }

    pub fn f_min(&self) -> f64 {
        self.rows[0].0
    }

    pub fn f_max(&self) -> f64 {
        self.rows[self.rows.len() - 1].0
    }

    /// K(f) by linear interpolation; error outside the grid.
    pub fn k_at(&self, f: f64) -> Result<f64> {
        if f < self.f_min() || f > self.f_max() {
            return Err(Error::OutOfRange {
                f_hz: f,
                lo_hz: self.f_min(),
                hi_hz: self.f_max(),
            });
        }
        let idx = self.rows.partition_point(|&(fi, _)| fi <= f);
        if idx == 0 {
            return Ok(self.rows[0].1);
        }
        if idx == self.rows.len() {
            return Ok(self.rows[idx - 1].1);
        }
        let (f0, k0) = self.rows[idx - 1];
        let (f1, k1) = self.rows[idx];
        Ok(k0 + (k1 - k0) * (f - f0) / (f1 - f0))
    }
}

/// One end-to-end link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkParams {
    /// Carrier frequency (Hz).
    pub f: f64,
    /// Distance (m).
    pub d: f64,
    /// Transmit power (dBm).
    pub p_tx_dbm: f64,
    /// Transmit antenna gain (dBi).
    pub g_tx_dbi: f64,
    /// Receive antenna gain (dBi).
    pub g_rx_dbi: f64,
}

impl LinkParams {
    pub fn new(f: f64, d: f64, p_tx_dbm: f64, g_tx_dbi: f64, g_rx_dbi: f64) -> Result<Self> {
        if !(f > 0.0) || !(d > 0.0) {
            return Err(Error::domain(format!(
                "frequency and distance must be > 0 (got {f} Hz, {d} m)"
            )));
        }
        Ok(LinkParams {
            f,
            d,
            p_tx_dbm,
            g_tx_dbi,
            g_rx_dbi,
        })
    }
}

/// Friis spreading loss A_s = 20·log₁₀(4πfd/c₀) (dB).
pub fn spreading_loss_db(f: f64, d: f64) -> Result<f64> {
    if !(f > 0.0) || !(d > 0.0) {
        return Err(Error::domain(format!(
            "frequency and distance must be > 0 (got {f} Hz, {d} m)"
        )));
    }
    Ok(20.0 * (4.0 * std::f64::consts::PI * f * d / C_0).log10())
}

/// Beer–Lambert molecular absorption in dB: 10·log₁₀(e)·K(f)·d.
pub fn absorption_loss_db(f: f64, d: f64, table: &AbsorptionTable) -> Result<f64> {
    if !(d > 0.0) {
        return Err(Error::domain(format!("distance must be > 0, got {d} m")));
    }
    Ok(DB_PER_NEPER_POWER * table.k_at(f)? * d)
}

/// Total path loss A = A_ma + A_s (dB).
pub fn total_path_loss_db(f: f64, d: f64, table: &AbsorptionTable) -> Result<f64> {
    Ok(spreading_loss_db(f, d)? + absorption_loss_db(f, d, table)?)
}

/// Friis accounting: P_rx = P_tx + G_tx + G_rx − A(f, d) (dBm).
pub fn received_power_dbm(link: &LinkParams, table: &AbsorptionTable) -> Result<f64> {
    Ok(link.p_tx_dbm + link.g_tx_dbi + link.g_rx_dbi - total_path_loss_db(link.f, link.d, table)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn flat(k: f64) -> AbsorptionTable {
        AbsorptionTable::new(vec![(1e9, k), (10e12, k)]).unwrap()
    }

    #[test]
    fn spreading_loss_reference_points() {
        assert_relative_eq!(
            spreading_loss_db(1e12, 1.0).unwrap(),
            92.44778322,
            epsilon = 1e-7
        );
        // doubling distance adds 20 log10 2
        let d1 = spreading_loss_db(1e12, 5.0).unwrap();
        let d2 = spreading_loss_db(1e12, 10.0).unwrap();
        assert_relative_eq!(d2 - d1, 6.020599913, epsilon = 1e-9);
        // THz vs GHz: exactly 60 dB
        for d in [1.0, 10.0, 100.0] {
            let delta = spreading_loss_db(1e12, d).unwrap() - spreading_loss_db(1e9, d).unwrap();
            assert!((delta - 60.0).abs() < 1e-9, "delta {delta}");
        }
    }

    #[test]
    fn absorption_loss_basics() {
        assert_eq!(absorption_loss_db(1e12, 10.0, &flat(0.0)).unwrap(), 0.0);
        // K = 0.1 /m over 10 m is one neper: 4.3429 dB
        assert_relative_eq!(
            absorption_loss_db(1e12, 10.0, &flat(0.1)).unwrap(),
            4.342944819,
            epsilon = 1e-8
        );
        // midpoint interpolation
        let t = AbsorptionTable::new(vec![(1e12, 0.1), (2e12, 0.3)]).unwrap();
        assert_relative_eq!(t.k_at(1.5e12).unwrap(), 0.2, epsilon = 1e-12);
    }

    #[test]
    fn no_extrapolation() {
        let t = AbsorptionTable::new(vec![(1e12, 0.1), (2e12, 0.3)]).unwrap();
        assert!(matches!(t.k_at(0.5e12), Err(Error::OutOfRange { .. })));
        assert!(matches!(t.k_at(2.5e12), Err(Error::OutOfRange { .. })));
        assert!(t.k_at(1e12).is_ok());
        assert!(t.k_at(2e12).is_ok());
    }

    #[test]
    fn table_validation() {
        assert!(AbsorptionTable::new(vec![]).is_err());
        assert!(AbsorptionTable::new(vec![(2e12, 0.1), (1e12, 0.2)]).is_err());
        assert!(AbsorptionTable::new(vec![(1e12, -0.1)]).is_err());
        assert!(AbsorptionTable::new(vec![(1e12, 0.0)]).is_ok());
    }

    #[test]
    fn csv_parsing() {
        let t = AbsorptionTable::from_csv_str(
            "# synthetic, illustrative only\nf_hz,k_per_m\n1e12,0.1\n2e12,0.3\n",
        )
        .unwrap();
        assert_eq!(t.k_at(2e12).unwrap(), 0.3);
        assert!(AbsorptionTable::from_csv_str("freq,k\n1,2\n").is_err());
        assert!(AbsorptionTable::from_csv_str("f_hz,k_per_m\n1e12\n").is_err());
        assert!(AbsorptionTable::from_csv_str("f_hz,k_per_m\n1e12,abc\n").is_err());
    }

    #[test]
    fn totals_and_received_power() {
        let t = flat(0.1);
        let total = total_path_loss_db(1e12, 10.0, &t).unwrap();
        assert_relative_eq!(
            total,
            spreading_loss_db(1e12, 10.0).unwrap() + absorption_loss_db(1e12, 10.0, &t).unwrap(),
            epsilon = 1e-12
        );
        assert_relative_eq!(total, 112.44778322 + 4.342944819, epsilon = 1e-6);

        // transparent medium, zero-gain, 0 dBm at 1 m / 1 THz
        let link = LinkParams::new(1e12, 1.0, 0.0, 0.0, 0.0).unwrap();
        let p = received_power_dbm(&link, &flat(0.0)).unwrap();
        assert_relative_eq!(p, -92.44778322, epsilon = 1e-7);
        // +3 dB gain lifts the result by exactly 3 dB
        let link3 = LinkParams::new(1e12, 1.0, 0.0, 3.0, 0.0).unwrap();
        assert_relative_eq!(
            received_power_dbm(&link3, &flat(0.0)).unwrap(),
            p + 3.0,
            epsilon = 1e-12
        );
    }

    proptest! {
        #[test]
        fn loss_increases_with_distance(
            f_thz in 0.1f64..10.0,
            d in 0.1f64..100.0,
            factor in 1.01f64..10.0,
            k in 0.0f64..1.0,
        ) {
            let t = flat(k);
            let f = f_thz * 1e12;
            let near = total_path_loss_db(f, d, &t).unwrap();
            let far = total_path_loss_db(f, d * factor, &t).unwrap();
            prop_assert!(far > near);
        }

        #[test]
        fn frequency_decade_is_20db(f in 1e9f64..1e12, d in 0.1f64..100.0) {
            let delta = spreading_loss_db(10.0 * f, d).unwrap() - spreading_loss_db(f, d).unwrap();
            prop_assert!((delta - 20.0).abs() < 1e-9);
        }

        #[test]
        fn interpolation_stays_in_bounds(
            k0 in 0.0f64..2.0,
            k1 in 0.0f64..2.0,
            frac in 0.0f64..1.0,
        ) {
            let t = AbsorptionTable::new(vec![(1e12, k0), (2e12, k1)]).unwrap();
            let k = t.k_at(1e12 + frac * 1e12).unwrap();
            prop_assert!(k >= k0.min(k1) - 1e-15 && k <= k0.max(k1) + 1e-15);
        }
    }
}
