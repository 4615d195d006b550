//! Frequency-dependent complex conductivity and impedance of graphene,
//! carbon nanotubes and copper in the THz band.
//!
//! Graphene uses the intraband Kubo term (the dominant contribution below
//! ~10 THz), CNTs the armchair-tube intraband form with its R/L
//! transmission-line equivalents, and copper the Drude model. Sign
//! convention is e^{+jωt}: all three conductivities have re(σ) > 0 and
//! im(σ) < 0 (inductive) at finite frequency.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quantities::constants::{BOLTZMANN, ELEMENTARY_CHARGE, EPSILON_0, HBAR, MU_0};

/// Intraband dominance cap; callers evaluating graphene above this should
/// surface a validity warning (interband transitions are neglected).
pub const GRAPHENE_INTRABAND_MAX_HZ: f64 = 10e12;

/// Conventional Fermi velocity for graphene (m/s), overridable.
pub const DEFAULT_GRAPHENE_VF: f64 = 1.0e6;
/// Conventional Fermi velocity for metallic CNTs (m/s), overridable.
pub const DEFAULT_CNT_VF: f64 = 8.0e5;

/// Graphene sheet parameters for the intraband Kubo term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrapheneParams {
    /// Chemical potential (J).
    pub mu_c: f64,
    /// Carrier relaxation time (s).
    pub tau: f64,
    /// Temperature (K).
    pub temp: f64,
}

impl GrapheneParams {
    pub fn new(mu_c: f64, tau: f64, temp: f64) -> Result<Self> {
        if mu_c < 0.0 {
            return Err(Error::domain(format!("mu_c must be >= 0, got {mu_c} J")));
        }
        if tau <= 0.0 {
            return Err(Error::domain(format!("tau must be > 0, got {tau} s")));
        }
        if temp <= 0.0 {
            return Err(Error::domain(format!("temp must be > 0, got {temp} K")));
        }
        Ok(GrapheneParams { mu_c, tau, temp })
    }

    /// Convenience constructor with the chemical potential in eV.
    pub fn with_mu_c_ev(mu_c_ev: f64, tau: f64, temp: f64) -> Result<Self> {
        GrapheneParams::new(mu_c_ev * ELEMENTARY_CHARGE, tau, temp)
    }

    pub fn mu_c_ev(&self) -> f64 {
        self.mu_c / ELEMENTARY_CHARGE
    }
}

impl Default for GrapheneParams {
    /// 0.3 eV, 1 ps, 300 K.
    fn default() -> Self {
        GrapheneParams::with_mu_c_ev(0.3, 1e-12, 300.0).unwrap()
    }
}

/// Metallic armchair single-wall CNT parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CntParams {
    /// Tube radius (m).
    pub radius: f64,
    /// Fermi velocity (m/s).
    pub vf: f64,
    /// Electron relaxation time (s).
    pub tau: f64,
    /// The intraband form below holds for metallic armchair tubes only.
    pub armchair: bool,
}

impl CntParams {
    pub fn new(radius: f64, vf: f64, tau: f64) -> Result<Self> {
        if radius <= 0.0 || vf <= 0.0 || tau <= 0.0 {
            return Err(Error::domain(format!(
                "CNT parameters must be positive (radius {radius}, vf {vf}, tau {tau})"
            )));
        }
        Ok(CntParams {
            radius,
            vf,
            tau,
            armchair: true,
        })
    }
}

impl Default for CntParams {
    /// r = 2.712 nm, v_f = 8e5 m/s, τ = 3 ps.
    fn default() -> Self {
        CntParams::new(2.712e-9, DEFAULT_CNT_VF, 3e-12).unwrap()
    }
}

/// Drude parameters for copper.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CopperParams {
    /// DC conductivity σ₀ (S/m).
    pub sigma0: f64,
    /// Drude relaxation time (s).
    pub tau: f64,
}

impl CopperParams {
    pub fn new(sigma0: f64, tau: f64) -> Result<Self> {
        if sigma0 <= 0.0 || tau <= 0.0 {
            return Err(Error::domain(format!(
                "copper parameters must be positive (sigma0 {sigma0}, tau {tau})"
            )));
        }
        Ok(CopperParams { sigma0, tau })
    }

    /// Construct from the carrier picture: σ₀ = n·e²·τ/m.
    pub fn from_carrier_density(n: f64, tau: f64, electron_mass: f64) -> Result<Self> {
        if n <= 0.0 || electron_mass <= 0.0 {
            return Err(Error::domain(
                "carrier density and mass must be positive".to_string(),
            ));
        }
        CopperParams::new(
            n * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * tau / electron_mass,
            tau,
        )
    }

    /// Validating constructor when σ₀ and n are both supplied; they must
    /// agree through σ₀ = n·e²·τ/m to 1e-6 relative.
    pub fn with_carrier_density(sigma0: f64, tau: f64, n: f64, electron_mass: f64) -> Result<Self> {
        let derived = n * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * tau / electron_mass;
        if ((sigma0 - derived) / sigma0).abs() > 1e-6 {
            return Err(Error::domain(format!(
                "sigma0 {sigma0} inconsistent with n e^2 tau/m = {derived}"
            )));
        }
        CopperParams::new(sigma0, tau)
    }

    /// Conduction electron density implied by σ₀ and τ for a given mass.
    pub fn carrier_density(&self, electron_mass: f64) -> f64 {
        self.sigma0 * electron_mass / (ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * self.tau)
    }
}

impl Default for CopperParams {
    /// Room-temperature literature values: σ₀ = 5.96e7 S/m, τ = 25 fs.
    fn default() -> Self {
        CopperParams::new(5.96e7, 2.5e-14).unwrap()
    }
}

/// Tagged union of the three material parameter sets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Material {
    Graphene(GrapheneParams),
    Cnt(CntParams),
    Copper(CopperParams),
}

impl Material {
    pub fn name(&self) -> &'static str {
        match self {
            Material::Graphene(_) => "graphene",
            Material::Cnt(_) => "cnt",
            Material::Copper(_) => "copper",
        }
    }
}

/// What an impedance value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpedanceKind {
    /// Ω per square (sheet).
    Sheet,
    /// Ω per meter (transmission line).
    PerLength,
    /// Ω (plane-wave impedance inside the medium).
    Wave,
}

/// Complex impedance with its interpretation tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceImpedance {
    pub z: Complex64,
    pub kind: ImpedanceKind,
}

fn require_positive_frequency(f: f64) -> Result<()> {
    if !(f > 0.0) {
        return Err(Error::domain(format!("frequency must be > 0, got {f} Hz")));
    }
    Ok(())
}

/// Intraband sheet conductivity of graphene (S).
///
/// σ(ω) = −j e² k_B T / (π ħ² (ω − j/τ)) · [μ_c/(k_B T) + 2 ln(e^{−μ_c/(k_B T)} + 1)]
pub fn graphene_sigma_intra(f: f64, p: &GrapheneParams) -> Result<Complex64> {
    require_positive_frequency(f)?;
    let w = std::f64::consts::TAU * f;
    let kt = BOLTZMANN * p.temp;
    let x = p.mu_c / kt;
    let bracket = x + 2.0 * (-x).exp().ln_1p();
    let scale =
        ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * kt * bracket / (std::f64::consts::PI * HBAR * HBAR);
    let denom = Complex64::new(w, -1.0 / p.tau);
    Ok(Complex64::new(0.0, -scale) / denom)
}

/// Sheet impedance Z = 1/σ (Ω per square); inductive (im > 0) in the THz band.
pub fn graphene_surface_impedance(f: f64, p: &GrapheneParams) -> Result<SurfaceImpedance> {
    let sigma = graphene_sigma_intra(f, p)?;
    if sigma.norm() < 1e-12 {
        return Err(Error::Singularity(format!(
            "graphene sheet conductivity |σ| = {:.3e} S too small to invert",
            sigma.norm()
        )));
    }
    Ok(SurfaceImpedance {
        z: sigma.inv(),
        kind: ImpedanceKind::Sheet,
    })
}

fn require_armchair(p: &CntParams) -> Result<()> {
    if !p.armchair {
        return Err(Error::domain(
            "the intraband CNT model holds for metallic armchair tubes only".to_string(),
        ));
    }
    Ok(())
}

/// Intraband surface conductivity of the tube wall (S).
///
/// σ(ω) = −j 2 e² v_f / (π² ħ r (ω − j/τ))
pub fn cnt_sigma_intra(f: f64, p: &CntParams) -> Result<Complex64> {
    require_positive_frequency(f)?;
    require_armchair(p)?;
    let w = std::f64::consts::TAU * f;
    let scale = 2.0 * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * p.vf
        / (std::f64::consts::PI * std::f64::consts::PI * HBAR * p.radius);
    let denom = Complex64::new(w, -1.0 / p.tau);
    Ok(Complex64::new(0.0, -scale) / denom)
}

/// Scattering resistance and kinetic inductance per unit length:
/// R = πħ/(4e²v_f τ) (Ω/m), L = τR = πħ/(4e²v_f) (H/m).
pub fn cnt_rl(p: &CntParams) -> (f64, f64) {
    let l = std::f64::consts::PI * HBAR / (4.0 * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * p.vf);
    (l / p.tau, l)
}

/// Per-unit-length line impedance Z = 1/(2πr·σ) = R + jωL (Ω/m).
///
/// The tube radius cancels analytically, so this is computed from the
/// R/L closed form; the reciprocal route is exercised in tests.
pub fn cnt_impedance_per_length(f: f64, p: &CntParams) -> Result<SurfaceImpedance> {
    require_positive_frequency(f)?;
    require_armchair(p)?;
    let (r, l) = cnt_rl(p);
    let w = std::f64::consts::TAU * f;
    Ok(SurfaceImpedance {
        z: Complex64::new(r, w * l),
        kind: ImpedanceKind::PerLength,
    })
}

/// Drude conductivity σ₀/(1 + jωτ) (S/m). Exact σ₀ at f = 0.
pub fn copper_drude_sigma(f: f64, p: &CopperParams) -> Result<Complex64> {
    if f < 0.0 {
        return Err(Error::domain(format!("frequency must be >= 0, got {f} Hz")));
    }
    let w = std::f64::consts::TAU * f;
    Ok(Complex64::new(p.sigma0, 0.0) / Complex64::new(1.0, w * p.tau))
}

/// Wave impedance Z = sqrt(jωμ₀/(σ_D + jωε₀)) (Ω), principal branch re ≥ 0.
pub fn copper_wave_impedance(f: f64, p: &CopperParams) -> Result<SurfaceImpedance> {
    require_positive_frequency(f)?;
    let w = std::f64::consts::TAU * f;
    let sigma = copper_drude_sigma(f, p)?;
    let z = (Complex64::new(0.0, w * MU_0) / (sigma + Complex64::new(0.0, w * EPSILON_0))).sqrt();
    let z = if z.re < 0.0 { -z } else { z };
    Ok(SurfaceImpedance {
        z,
        kind: ImpedanceKind::Wave,
    })
}

/// Skin depth δ = sqrt(2/(ω μ₀ re(σ_D))) (m).
pub fn copper_skin_depth(f: f64, p: &CopperParams) -> Result<f64> {
    require_positive_frequency(f)?;
    let sigma_re = copper_drude_sigma(f, p)?.re;
    if sigma_re <= 0.0 {
        return Err(Error::domain(format!(
            "re(σ_D) = {sigma_re} not positive; skin depth undefined"
        )));
    }
    let w = std::f64::consts::TAU * f;
    Ok((2.0 / (w * MU_0 * sigma_re)).sqrt())
}

/// Relaxation time from carrier mobility: τ = μ·μ_c/(e·v_f²).
pub fn tau_from_mobility(mobility: f64, mu_c: f64, vf: f64) -> Result<f64> {
    if !(mobility > 0.0 && mu_c > 0.0 && vf > 0.0) {
        return Err(Error::domain(format!(
            "mobility, mu_c and vf must all be > 0 (got {mobility}, {mu_c}, {vf})"
        )));
    }
    Ok(mobility * mu_c / (ELEMENTARY_CHARGE * vf * vf))
}
