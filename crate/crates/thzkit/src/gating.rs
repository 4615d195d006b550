//! Electrostatic gate tuning chain: oxide stack → gate capacitance →
//! carrier density → chemical potential, and the inverse.
//!
//! n = C_ox·V_g/e and μ_c = ħ·v_f·sqrt(π·n). Electron doping only
//! (V_g ≥ 0); hole doping is out of scope.

use crate::error::{Error, Result};
use crate::quantities::constants::{ELEMENTARY_CHARGE, EPSILON_0, HBAR};

/// Gate oxide description. Either built from geometry (thickness +
/// relative permittivity) or from the capacitance directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateStack {
    cox: f64,
    thickness: Option<f64>,
    eps_r: Option<f64>,
    /// Fermi velocity used in the μ_c conversion (m/s).
    pub vf: f64,
}

impl GateStack {
    /// C_ox = ε₀·ε_r/t.
    pub fn from_geometry(thickness: f64, eps_r: f64, vf: f64) -> Result<Self> {
        if thickness <= 0.0 || eps_r < 1.0 || vf <= 0.0 {
            return Err(Error::domain(format!(
                "gate stack needs thickness > 0, eps_r >= 1, vf > 0 (got {thickness}, {eps_r}, {vf})"
            )));
        }
        Ok(GateStack {
            cox: EPSILON_0 * eps_r / thickness,
            thickness: Some(thickness),
            eps_r: Some(eps_r),
            vf,
        })
    }

    /// Capacitance-only stack; the oxide field is then unavailable.
    pub fn from_cox(cox: f64, vf: f64) -> Result<Self> {
        if cox <= 0.0 || vf <= 0.0 {
            return Err(Error::domain(format!(
                "gate stack needs cox > 0 and vf > 0 (got {cox}, {vf})"
            )));
        }
        Ok(GateStack {
            cox,
            thickness: None,
            eps_r: None,
            vf,
        })
    }

    /// Bias-chain reference stack: 24.4 nm of SiO₂ (ε_r = 3.9) with
    /// v_f = 1e6 m/s, i.e. C_ox ≈ 1.415e-3 F/m². Back-derived so that a
    /// single capacitance reproduces the published four-point bias dataset.
    pub fn table2() -> Self {
        GateStack::from_geometry(24.4e-9, 3.9, 1.0e6).unwrap()
    }

    pub fn cox(&self) -> f64 {
        self.cox
    }

    pub fn thickness(&self) -> Option<f64> {
        self.thickness
    }

    pub fn eps_r(&self) -> Option<f64> {
        self.eps_r
    }
}

/// One point of the bias chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateOperatingPoint {
    /// Gate voltage (V).
    pub vg: f64,
    /// Induced carrier density (m⁻²).
    pub n: f64,
    /// Field across the oxide (V/m); requires known thickness.
    pub e_field: f64,
    /// Chemical potential (J).
    pub mu_c: f64,
}

fn require_nonnegative_bias(vg: f64) -> Result<()> {
    if vg < 0.0 {
        return Err(Error::domain(format!(
            "hole doping (vg = {vg} V < 0) is out of scope"
        )));
    }
    Ok(())
}

/// Induced carrier density n = C_ox·V_g/e (m⁻²).
pub fn carrier_density(vg: f64, stack: &GateStack) -> Result<f64> {
    require_nonnegative_bias(vg)?;
    Ok(stack.cox * vg / ELEMENTARY_CHARGE)
}

/// Chemical potential μ_c = ħ·v_f·sqrt(π·C_ox·V_g/e) (J).
pub fn chemical_potential_from_gate(vg: f64, stack: &GateStack) -> Result<f64> {
    let n = carrier_density(vg, stack)?;
    Ok(HBAR * stack.vf * (std::f64::consts::PI * n).sqrt())
}

/// Inverse of [`chemical_potential_from_gate`]: V_g = e·μ_c²/(π·C_ox·ħ²·v_f²).
pub fn gate_voltage_for_mu(mu_c: f64, stack: &GateStack) -> Result<f64> {
    if mu_c < 0.0 {
        return Err(Error::domain(format!("mu_c must be >= 0, got {mu_c} J")));
    }
    let hv = HBAR * stack.vf;
    Ok(ELEMENTARY_CHARGE * mu_c * mu_c / (std::f64::consts::PI * stack.cox * hv * hv))
}

/// Field across the oxide E = V_g/t (V/m).
pub fn oxide_field(vg: f64, stack: &GateStack) -> Result<f64> {
    require_nonnegative_bias(vg)?;
    let t = stack.thickness.ok_or_else(|| {
        Error::MissingGeometry(
            "stack built from capacitance only; oxide field needs a thickness".to_string(),
        )
    })?;
    Ok(vg / t)
}

/// Full chain at one bias point.
pub fn operating_point(vg: f64, stack: &GateStack) -> Result<GateOperatingPoint> {
    Ok(GateOperatingPoint {
        vg,
        n: carrier_density(vg, stack)?,
        e_field: oxide_field(vg, stack)?,
        mu_c: chemical_potential_from_gate(vg, stack)?,
    })
}
