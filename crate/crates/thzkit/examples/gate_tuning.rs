//! Electrostatic bias chain of the reference gate stack: voltage to
//! carrier density, oxide field, and graphene chemical potential, shown
//! beside the published full-wave reference rows.
//!
//! Run with `cargo run --example gate_tuning`.

use thzkit::antenna::fem_reference;
use thzkit::gating::{gate_voltage_for_mu, operating_point, GateStack};
use thzkit::quantities::constants::ELEMENTARY_CHARGE;

fn main() -> thzkit::Result<()> {
    let stack = GateStack::table2();
    println!(
        "gate stack: t = {:.1} nm, eps_r = {:.1}, C_ox = {:.4e} F/m^2, v_f = {:.1e} m/s\n",
        stack.thickness().unwrap() * 1e9,
        stack.eps_r().unwrap(),
        stack.cox(),
        stack.vf
    );

    println!(
        "{:>6}  {:>12} {:>10}  {:>12} {:>8}  {:>10} {:>8}",
        "V_g/V", "n/cm^-2", "(ref)", "E (MV/cm)", "(ref)", "mu_c/eV", "(ref)"
    );
    for &(vg, n_ref, e_ref, mu_ref, _, _) in &fem_reference::BIAS_STUDY {
        let op = operating_point(vg, &stack)?;
        println!(
            "{:>6.1}  {:>12.3e} {:>10.1e}  {:>12.3} {:>8.2}  {:>10.4} {:>8.2}",
            vg,
            op.n * 1e-4,
            n_ref,
            op.e_field * 1e-8,
            e_ref,
            op.mu_c / ELEMENTARY_CHARGE,
            mu_ref
        );
    }

    let target_ev = 0.45;
    let vg = gate_voltage_for_mu(target_ev * ELEMENTARY_CHARGE, &stack)?;
    println!("\ninverse chain: mu_c = {target_ev} eV needs V_g = {vg:.2} V on this stack");
    Ok(())
}
