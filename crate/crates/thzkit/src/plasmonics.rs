//! TM surface-plasmon dispersion on a conductive sheet between two
//! lossless dielectric half-spaces.
//!
//! The bound TM mode of a sheet with conductivity σ between relative
//! permittivities ε₁, ε₂ satisfies
//!
//! ```text
//! ε₁/κ₁ + ε₂/κ₂ + σ/(jωε₀) = 0,   κᵢ = sqrt(k² − εᵢk₀²),  re(κᵢ) > 0
//! ```
//!
//! under e^{+jωt}. [`spp_quasistatic`] is the thin-sheet closed form
//! k = −jωε₀(ε₁+ε₂)/σ, valid when the mode is much slower than light;
//! [`spp_exact`] solves the full relation by damped Newton iteration and
//! is the authority whenever confinement is moderate. TE sheet modes are
//! only weakly bound on inductive sheets and are not modeled.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::materials::{graphene_sigma_intra, GrapheneParams};
use crate::quantities::constants::{C_0, EPSILON_0};

/// Lossless dielectric half-spaces above (`eps1`) and below (`eps2`) the sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DielectricEnvironment {
    pub eps1: f64,
    pub eps2: f64,
}

impl DielectricEnvironment {
    pub fn new(eps1: f64, eps2: f64) -> Result<Self> {
        if eps1 < 1.0 || eps2 < 1.0 {
            return Err(Error::domain(format!(
                "relative permittivities must be >= 1 (got {eps1}, {eps2})"
            )));
        }
        Ok(DielectricEnvironment { eps1, eps2 })
    }

    /// Air over a SiO₂-like substrate (ε = 4).
    pub fn air_over_silica() -> Self {
        DielectricEnvironment {
            eps1: 1.0,
            eps2: 4.0,
        }
    }

    pub fn max_eps(&self) -> f64 {
        self.eps1.max(self.eps2)
    }
}

/// A bound TM sheet mode at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SppMode {
    /// Complex wavenumber (rad/m); im ≤ 0 for the decaying forward wave.
    pub k_spp: Complex64,
    /// Frequency (Hz).
    pub f: f64,
    /// Guided wavelength 2π/re(k) (m).
    pub lambda_spp: f64,
    /// λ₀/λ_spp = re(k)/k₀ (> 1 for a bound mode).
    pub confinement: f64,
    /// 1/e power decay length 1/(2·|im(k)|) (m).
    pub prop_length: f64,
}

/// Relative tolerance for the sign checks on returned roots.
const SIGN_TOL: f64 = 1e-9;

impl SppMode {
    /// Build a mode from a wavenumber, enforcing the bound-mode invariants.
    fn from_wavenumber(k: Complex64, f: f64, env: &DielectricEnvironment) -> Result<Self> {
        let k0 = std::f64::consts::TAU * f / C_0;
        let bound_floor = k0 * env.max_eps().sqrt();
        if !(k.re > bound_floor) {
            return Err(Error::ModeNotBound(format!(
                "re(k) = {:.6e} rad/m does not exceed k0*sqrt(eps_max) = {:.6e}",
                k.re, bound_floor
            )));
        }
        if k.im > SIGN_TOL * k.norm() {
            return Err(Error::ModeNotBound(format!(
                "im(k) = {:.6e} > 0: growing wave under e^{{-jkx}}",
                k.im
            )));
        }
        let im = k.im.min(0.0);
        Ok(SppMode {
            k_spp: Complex64::new(k.re, im),
            f,
            lambda_spp: std::f64::consts::TAU / k.re,
            confinement: k.re / k0,
            prop_length: 1.0 / (2.0 * im.abs()),
        })
    }
}

fn check_sigma(sigma: Complex64) -> Result<()> {
    if sigma.re < 0.0 {
        return Err(Error::domain(format!(
            "active sheet (re(σ) = {:.3e} < 0) not supported",
            sigma.re
        )));
    }
    if sigma.norm() < 1e-12 {
        return Err(Error::Singularity(format!(
            "|σ| = {:.3e} S below 1e-12; sheet is effectively absent",
            sigma.norm()
        )));
    }
    Ok(())
}

/// Raw quasi-static wavenumber, branch with re > 0. No bound-mode check.
fn quasistatic_k(f: f64, sigma: Complex64, env: &DielectricEnvironment) -> Complex64 {
    let w = std::f64::consts::TAU * f;
    let k = Complex64::new(0.0, -w * EPSILON_0 * (env.eps1 + env.eps2)) / sigma;
    if k.re < 0.0 {
        -k
    } else {
        k
    }
}

/// Quasi-static (non-retarded) mode: k = −jωε₀(ε₁+ε₂)/σ.
pub fn spp_quasistatic(f: f64, sigma: Complex64, env: &DielectricEnvironment) -> Result<SppMode> {
    if !(f > 0.0) {
        return Err(Error::domain(format!("frequency must be > 0, got {f} Hz")));
    }
    check_sigma(sigma)?;
    SppMode::from_wavenumber(quasistatic_k(f, sigma, env), f, env)
}

/// Dispersion residual F(k) = ε₁/κ₁ + ε₂/κ₂ + σ/(jωε₀) on the proper sheet.
fn residual(k: Complex64, k0: f64, rhs: Complex64, env: &DielectricEnvironment) -> Complex64 {
    let kappa = |eps: f64| -> Complex64 {
        let kap = (k * k - Complex64::new(eps * k0 * k0, 0.0)).sqrt();
        if kap.re < 0.0 {
            -kap
        } else {
            kap
        }
    };
    env.eps1 / kappa(env.eps1) + env.eps2 / kappa(env.eps2) + rhs
}

const MAX_ITERATIONS: usize = 200;
// Tighter than the 1e-9 contract so downstream consumers (resonance
// bisection, oracle comparisons) see solver noise well below their own
// tolerances.
const RESIDUAL_REL_TARGET: f64 = 1e-11;

/// Retarded TM sheet mode by damped Newton iteration.
///
/// Seeded from the quasi-static estimate mapped through the retarded
/// symmetric-case closed form, sqrt(k_qs² + ε_max·k₀²), which stays within
/// a few percent of the root from deep confinement down to the light line.
pub fn spp_exact(f: f64, sigma: Complex64, env: &DielectricEnvironment) -> Result<SppMode> {
    if !(f > 0.0) {
        return Err(Error::domain(format!("frequency must be > 0, got {f} Hz")));
    }
    check_sigma(sigma)?;
    let w = std::f64::consts::TAU * f;
    let k0 = w / C_0;
    let rhs = sigma / Complex64::new(0.0, w * EPSILON_0);

    let k_qs = quasistatic_k(f, sigma, env);
    let mut k = (k_qs * k_qs + Complex64::new(env.max_eps() * k0 * k0, 0.0)).sqrt();
    if k.re < 0.0 {
        k = -k;
    }

    let target = RESIDUAL_REL_TARGET * rhs.norm();
    let mut f_k = residual(k, k0, rhs, env);
    for iteration in 0..MAX_ITERATIONS {
        if f_k.norm() < target {
            return SppMode::from_wavenumber(k, f, env);
        }
        let h = k.norm() * 1e-7;
        let df = (residual(k + h, k0, rhs, env) - f_k) / h;
        if !df.is_finite() || df.norm() == 0.0 {
            return Err(Error::Convergence {
                iterations: iteration,
                residual: f_k.norm() / rhs.norm(),
            });
        }
        let mut step = -f_k / df;
        let clamp = 0.5 * k.norm();
        if step.norm() > clamp {
            step *= clamp / step.norm();
        }
        // backtrack until the residual actually shrinks
        let mut scale = 1.0;
        let (mut k_next, mut f_next) = (k + step, residual(k + step, k0, rhs, env));
        while f_next.norm() >= f_k.norm() && scale > 1.0 / 1024.0 {
            scale *= 0.5;
            k_next = k + step * scale;
            f_next = residual(k_next, k0, rhs, env);
        }
        if f_next.norm() >= f_k.norm() {
            return Err(Error::Convergence {
                iterations: iteration,
                residual: f_k.norm() / rhs.norm(),
            });
        }
        k = k_next;
        f_k = f_next;
    }
    if f_k.norm() < target {
        return SppMode::from_wavenumber(k, f, env);
    }
    Err(Error::Convergence {
        iterations: MAX_ITERATIONS,
        residual: f_k.norm() / rhs.norm(),
    })
}

/// Exact modes for a set of frequencies with a fixed graphene sheet.
pub fn confinement_curve(
    freqs: &[f64],
    p: &GrapheneParams,
    env: &DielectricEnvironment,
) -> Result<Vec<SppMode>> {
    freqs
        .iter()
        .map(|&f| {
            let sigma = graphene_sigma_intra(f, p)?;
            spp_exact(f, sigma, env)
        })
        .collect()
}
