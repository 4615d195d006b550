//! Physical constants, unit handling and decibel helpers.
//!
//! Everything downstream computes in SI; the units here exist only at the
//! I/O boundary (flag parsing, CSV columns). The complex time convention is
//! e^{+jωt} throughout the crate: inductive reactances have positive
//! imaginary part and decaying forward waves written e^{−jkx} carry
//! non-positive imaginary wavenumbers.

use std::fmt;

use crate::error::{Error, Result};

/// CODATA 2018 values, SI.
pub mod constants {
    /// Elementary charge (C), exact.
    pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
    /// Reduced Planck constant ħ (J·s), from the exact h = 6.62607015e-34.
    pub const HBAR: f64 = 1.054_571_817_646_156e-34;
    /// Boltzmann constant (J/K), exact.
    pub const BOLTZMANN: f64 = 1.380_649e-23;
    /// Vacuum permittivity ε₀ (F/m).
    pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
    /// Vacuum permeability μ₀ (H/m).
    pub const MU_0: f64 = 1.256_637_062_12e-6;
    /// Speed of light in vacuum (m/s), exact.
    pub const C_0: f64 = 299_792_458.0;
    /// Free-space impedance η₀ = sqrt(μ₀/ε₀) (Ω).
    pub const ETA_0: f64 = 376.730_313_667;
}

/// Units accepted at the I/O boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Hertz,
    Gigahertz,
    Terahertz,
    Meter,
    Micrometer,
    Nanometer,
    ElectronVolt,
    Joule,
    Volt,
    Kelvin,
    Second,
    Picosecond,
    Siemens,
    Ohm,
    FaradPerSquareMeter,
    PerSquareCentimeter,
    PerSquareMeter,
    Decibel,
    DecibelIsotropic,
    DecibelMilliwatt,
    MegavoltPerCentimeter,
}

/// Dimension of a unit, used by the CLI to reject e.g. `--tau 3eV`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Frequency,
    Length,
    Energy,
    Voltage,
    Temperature,
    Time,
    Conductance,
    Resistance,
    CapacitancePerArea,
    ArealDensity,
    LogRatio,
    Field,
}

impl Unit {
    /// Canonical display symbol.
    pub fn symbol(self) -> &'static str {
        match self {
            Unit::Hertz => "Hz",
            Unit::Gigahertz => "GHz",
            Unit::Terahertz => "THz",
            Unit::Meter => "m",
            Unit::Micrometer => "μm",
            Unit::Nanometer => "nm",
            Unit::ElectronVolt => "eV",
            Unit::Joule => "J",
            Unit::Volt => "V",
            Unit::Kelvin => "K",
            Unit::Second => "s",
            Unit::Picosecond => "ps",
            Unit::Siemens => "S",
            Unit::Ohm => "Ω",
            Unit::FaradPerSquareMeter => "F/m²",
            Unit::PerSquareCentimeter => "cm⁻²",
            Unit::PerSquareMeter => "m⁻²",
            Unit::Decibel => "dB",
            Unit::DecibelIsotropic => "dBi",
            Unit::DecibelMilliwatt => "dBm",
            Unit::MegavoltPerCentimeter => "MV/cm",
        }
    }

    /// Multiplier taking a value in this unit to SI base.
    pub fn si_factor(self) -> f64 {
        match self {
            Unit::Hertz | Unit::Meter | Unit::Joule | Unit::Volt | Unit::Kelvin => 1.0,
            Unit::Second | Unit::Siemens | Unit::Ohm | Unit::FaradPerSquareMeter => 1.0,
            Unit::PerSquareMeter => 1.0,
            Unit::Decibel | Unit::DecibelIsotropic | Unit::DecibelMilliwatt => 1.0,
            Unit::Gigahertz => 1.0e9,
            Unit::Terahertz => 1.0e12,
            Unit::Micrometer => 1.0e-6,
            Unit::Nanometer => 1.0e-9,
            Unit::ElectronVolt => constants::ELEMENTARY_CHARGE,
            Unit::Picosecond => 1.0e-12,
            Unit::PerSquareCentimeter => 1.0e4,
            Unit::MegavoltPerCentimeter => 1.0e8,
        }
    }

    pub fn dimension(self) -> Dimension {
        match self {
            Unit::Hertz | Unit::Gigahertz | Unit::Terahertz => Dimension::Frequency,
            Unit::Meter | Unit::Micrometer | Unit::Nanometer => Dimension::Length,
            Unit::ElectronVolt | Unit::Joule => Dimension::Energy,
            Unit::Volt => Dimension::Voltage,
            Unit::Kelvin => Dimension::Temperature,
            Unit::Second | Unit::Picosecond => Dimension::Time,
            Unit::Siemens => Dimension::Conductance,
            Unit::Ohm => Dimension::Resistance,
            Unit::FaradPerSquareMeter => Dimension::CapacitancePerArea,
            Unit::PerSquareCentimeter | Unit::PerSquareMeter => Dimension::ArealDensity,
            Unit::Decibel | Unit::DecibelIsotropic | Unit::DecibelMilliwatt => Dimension::LogRatio,
            Unit::MegavoltPerCentimeter => Dimension::Field,
        }
    }

    /// All recognized spellings, longest first so the suffix match is greedy.
    pub(crate) fn spellings() -> &'static [(&'static str, Unit)] {
        &[
            ("MV/cm", Unit::MegavoltPerCentimeter),
            ("F/m²", Unit::FaradPerSquareMeter),
            ("F/m^2", Unit::FaradPerSquareMeter),
            ("cm⁻²", Unit::PerSquareCentimeter),
            ("cm^-2", Unit::PerSquareCentimeter),
            ("m⁻²", Unit::PerSquareMeter),
            ("m^-2", Unit::PerSquareMeter),
            ("GHz", Unit::Gigahertz),
            ("THz", Unit::Terahertz),
            ("dBm", Unit::DecibelMilliwatt),
            ("dBi", Unit::DecibelIsotropic),
            ("Ohm", Unit::Ohm),
            ("ohm", Unit::Ohm),
            ("Hz", Unit::Hertz),
            ("μm", Unit::Micrometer),
            ("um", Unit::Micrometer),
            ("nm", Unit::Nanometer),
            ("eV", Unit::ElectronVolt),
            ("ps", Unit::Picosecond),
            ("dB", Unit::Decibel),
            ("Ω", Unit::Ohm),
            ("m", Unit::Meter),
            ("J", Unit::Joule),
            ("V", Unit::Volt),
            ("K", Unit::Kelvin),
            ("s", Unit::Second),
            ("S", Unit::Siemens),
        ]
    }

    /// Parse a bare unit token.
    pub fn parse(text: &str) -> Result<Unit> {
        let t = text.trim();
        Unit::spellings()
            .iter()
            .find(|(sym, _)| *sym == t)
            .map(|&(_, u)| u)
            .ok_or_else(|| Error::Unit(text.to_string()))
    }
}

/// A number tagged with one of the supported units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub unit: Unit,
}

impl Quantity {
    pub fn new(value: f64, unit: Unit) -> Self {
        Quantity { value, unit }
    }

    /// SI base value (Hz, m, J, V, K, s, S, Ω, F/m², m⁻², V/m; dB flavors pass through).
    pub fn to_si(&self) -> f64 {
        self.value * self.unit.si_factor()
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.unit.symbol())
    }
}

/// Parse `<number><unit>` with optional whitespace, e.g. `1THz`, `0.3 eV`.
pub fn parse_quantity(text: &str) -> Result<Quantity> {
    let t = text.trim();
    for (sym, unit) in Unit::spellings() {
        if let Some(num) = t.strip_suffix(sym) {
            let num = num.trim_end();
            if num.is_empty() {
                return Err(Error::Parse(text.to_string()));
            }
            // Reject "1e" + "V" style splits: the numeric part must parse on its own.
            let value: f64 = num.parse().map_err(|_| Error::Parse(text.to_string()))?;
            return Ok(Quantity::new(value, *unit));
        }
    }
    Err(Error::Unit(text.to_string()))
}

/// 10·log₁₀(ratio) for a power ratio.
pub fn db_from_power_ratio(ratio: f64) -> Result<f64> {
    if !(ratio > 0.0) {
        return Err(Error::domain(format!(
            "power ratio must be > 0, got {ratio}"
        )));
    }
    Ok(10.0 * ratio.log10())
}

/// Inverse of [`db_from_power_ratio`].
pub fn power_ratio_from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn constants_are_self_consistent() {
        use constants::*;
        const { assert!(ELEMENTARY_CHARGE > 0.0 && HBAR > 0.0 && BOLTZMANN > 0.0) };
        const { assert!(EPSILON_0 > 0.0 && MU_0 > 0.0 && C_0 > 0.0 && ETA_0 > 0.0) };
        assert_relative_eq!(ETA_0, (MU_0 / EPSILON_0).sqrt(), max_relative = 1e-9);
        assert_relative_eq!(C_0, 1.0 / (MU_0 * EPSILON_0).sqrt(), max_relative = 1e-9);
        // hbar = h/2pi with h exact
        assert_relative_eq!(
            HBAR,
            6.626_070_15e-34 / std::f64::consts::TAU,
            max_relative = 1e-15
        );
    }

    #[test]
    fn parse_basic_quantities() {
        assert_eq!(parse_quantity("1THz").unwrap().to_si(), 1e12);
        // 0.3 eV via the CODATA elementary charge
        assert_relative_eq!(
            parse_quantity("0.3eV").unwrap().to_si(),
            4.806_529_902e-20,
            max_relative = 1e-9
        );
        assert_relative_eq!(
            parse_quantity("24.4nm").unwrap().to_si(),
            2.44e-8,
            max_relative = 1e-12
        );
        assert_eq!(parse_quantity(" 300 K ").unwrap().to_si(), 300.0);
        assert_eq!(parse_quantity("1GHz").unwrap().to_si(), 1e9);
        assert_eq!(parse_quantity("68um").unwrap().to_si(), 68e-6);
        assert_eq!(parse_quantity("6.7cm^-2").unwrap().to_si(), 6.7e4);
        assert_eq!(parse_quantity("0dBm").unwrap().to_si(), 0.0);
        assert_eq!(parse_quantity("3.06MV/cm").unwrap().to_si(), 3.06e8);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse_quantity("1XYZ"), Err(Error::Unit(_))));
        assert!(matches!(parse_quantity("THz"), Err(Error::Parse(_))));
        assert!(matches!(parse_quantity("1..2THz"), Err(Error::Parse(_))));
        assert!(matches!(parse_quantity(""), Err(Error::Unit(_))));
    }

    #[test]
    fn ev_beats_volt_in_suffix_match() {
        let q = parse_quantity("3eV").unwrap();
        assert_eq!(q.unit, Unit::ElectronVolt);
        assert_eq!(q.value, 3.0);
        let q = parse_quantity("3V").unwrap();
        assert_eq!(q.unit, Unit::Volt);
    }

    #[test]
    fn db_helpers() {
        assert_eq!(db_from_power_ratio(1.0).unwrap(), 0.0);
        assert_relative_eq!(db_from_power_ratio(100.0).unwrap(), 20.0, epsilon = 1e-12);
        assert_relative_eq!(
            db_from_power_ratio(std::f64::consts::E).unwrap(),
            4.342_944_819_032_5,
            epsilon = 1e-10
        );
        assert!(db_from_power_ratio(0.0).is_err());
        assert!(db_from_power_ratio(-2.0).is_err());
    }

    fn any_unit() -> impl Strategy<Value = Unit> {
        prop_oneof![
            Just(Unit::Hertz),
            Just(Unit::Gigahertz),
            Just(Unit::Terahertz),
            Just(Unit::Meter),
            Just(Unit::Micrometer),
            Just(Unit::Nanometer),
            Just(Unit::ElectronVolt),
            Just(Unit::Joule),
            Just(Unit::Volt),
            Just(Unit::Kelvin),
            Just(Unit::Second),
            Just(Unit::Picosecond),
            Just(Unit::Siemens),
            Just(Unit::Ohm),
            Just(Unit::FaradPerSquareMeter),
            Just(Unit::PerSquareCentimeter),
            Just(Unit::PerSquareMeter),
            Just(Unit::Decibel),
            Just(Unit::DecibelIsotropic),
            Just(Unit::DecibelMilliwatt),
            Just(Unit::MegavoltPerCentimeter),
        ]
    }

    proptest! {
        #[test]
        fn quantity_roundtrip(value in -1e15f64..1e15, unit in any_unit()) {
            let q = Quantity::new(value, unit);
            let back = parse_quantity(&q.to_string()).unwrap();
            // Display uses shortest-roundtrip f64 formatting, so this is exact.
            prop_assert_eq!(back.to_si().to_bits(), q.to_si().to_bits());
        }

        #[test]
        fn db_is_additive(a in 1e-6f64..1e6, b in 1e-6f64..1e6) {
            let lhs = db_from_power_ratio(a * b).unwrap();
            let rhs = db_from_power_ratio(a).unwrap() + db_from_power_ratio(b).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }
    }
}
