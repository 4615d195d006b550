//! thzkit — THz-band material, antenna and channel modeling toolkit.
//!
//! Reduced-order models for terahertz hardware studies:
//!
//! * [`materials`] — complex surface conductivity and impedance of
//!   graphene (intraband Kubo), metallic carbon nanotubes, and copper
//!   (Drude), plus skin depth and mobility conversions;
//! * [`gating`] — the electrostatic bias chain from gate voltage to
//!   carrier density, oxide field and graphene chemical potential;
//! * [`plasmonics`] — TM surface-plasmon dispersion on a conductive
//!   sheet: quasi-static closed form and an exact complex root solver;
//! * [`antenna`] — dipole resonance/miniaturization estimates for the
//!   three materials, bias tuning curves, and a classical directivity
//!   integrator;
//! * [`linkbudget`] — spreading loss plus table-driven molecular
//!   absorption and received-power accounting;
//! * [`hypersurface`] — homogenized reflection model of a tunable
//!   graphene cell on a grounded slab (amplitude, phase, bias coverage);
//! * [`quantities`], [`sweep`], [`config`], [`cli`] — constants, unit
//!   parsing, sweep grammar and the `thzkit` command-line front end.
//!
//! All numerics are SI internally with an e^{+jωt} time convention;
//! convenience units (THz, eV, μm, ps) appear only at the I/O boundary.
//! Every model here is closed-form or 1-D numeric — nothing requires a
//! field solver — and each operation documents the regime where the
//! reduction is trustworthy.
//!
//! See the crate examples for one runnable walkthrough per capability:
//! `cargo run --example antenna_comparison`, etc.
//!
//! # Example
//!
//! Sheet impedance of gated graphene at 1 THz:
//!
//! ```
//! use thzkit::materials::{graphene_surface_impedance, GrapheneParams};
//!
//! let sheet = GrapheneParams::with_mu_c_ev(0.3, 0.1e-12, 300.0)?;
//! let z = graphene_surface_impedance(1e12, &sheet)?.z;
//! assert!((z.re - 283.2).abs() < 0.1);
//! assert!(z.im > 0.0); // inductive under e^{+jwt}
//! # Ok::<(), thzkit::Error>(())
//! ```

// `!(x > 0.0)` guards are NaN-rejecting on purpose; `x <= 0.0` would wave
// NaN inputs through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod antenna;
pub mod cli;
pub mod config;
pub mod error;
pub mod gating;
pub mod hypersurface;
pub mod linkbudget;
pub mod materials;
pub mod plasmonics;
pub mod quantities;
pub mod sweep;

pub use error::{Error, Result};
pub use num_complex::Complex64;

#[cfg(test)]
mod concurrency_contract {
    // Every parameter record is an immutable value type and every
    // operation is a pure function, so sweep evaluation may be spread
    // across threads freely.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn parameter_types_are_send_sync() {
        assert_send_sync::<crate::materials::GrapheneParams>();
        assert_send_sync::<crate::materials::CntParams>();
        assert_send_sync::<crate::materials::CopperParams>();
        assert_send_sync::<crate::materials::Material>();
        assert_send_sync::<crate::gating::GateStack>();
        assert_send_sync::<crate::plasmonics::DielectricEnvironment>();
        assert_send_sync::<crate::plasmonics::SppMode>();
        assert_send_sync::<crate::antenna::AntennaSpec>();
        assert_send_sync::<crate::linkbudget::AbsorptionTable>();
        assert_send_sync::<crate::hypersurface::HsfCell>();
        assert_send_sync::<crate::sweep::SweepSpec>();
        assert_send_sync::<crate::error::Error>();
    }
}
