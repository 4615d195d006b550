//! Survey the three material models across the THz band: complex
//! conductivity, impedance, and (for copper) skin depth.
//!
//! Run with `cargo run --example material_survey`.

use num_complex::Complex64;
use thzkit::materials::{
    cnt_impedance_per_length, cnt_rl, cnt_sigma_intra, copper_drude_sigma, copper_skin_depth,
    copper_wave_impedance, graphene_sigma_intra, graphene_surface_impedance, CntParams,
    CopperParams, GrapheneParams,
};

fn c(z: Complex64) -> String {
    format!("{:.4e} {:+.4e}j", z.re, z.im)
}

fn main() -> thzkit::Result<()> {
    let graphene = GrapheneParams::default(); // 0.3 eV, 1 ps, 300 K
    let cnt = CntParams::default(); // r = 2.712 nm, vf = 8e5 m/s, 3 ps
    let copper = CopperParams::default(); // 5.96e7 S/m, 25 fs
    let band = [0.5e12, 1e12, 2e12, 5e12, 10e12];

    println!(
        "graphene sheet: mu_c = {:.2} eV, tau = 1 ps, 300 K",
        graphene.mu_c_ev()
    );
    println!("{:>7}  {:>28}  {:>28}", "f/THz", "sigma (S)", "Z (Ohm/sq)");
    for &f in &band {
        let s = graphene_sigma_intra(f, &graphene)?;
        let z = graphene_surface_impedance(f, &graphene)?.z;
        println!("{:>7.1}  {:>28}  {:>28}", f / 1e12, c(s), c(z));
    }

    let (r_cnt, l_cnt) = cnt_rl(&cnt);
    println!(
        "\nCNT line: R = {:.3e} Ohm/m, L_kinetic = {:.3} nH/um (radius cancels)",
        r_cnt,
        l_cnt * 1e3
    );
    println!(
        "{:>7}  {:>28}  {:>28}",
        "f/THz", "wall sigma (S)", "Z' (Ohm/m)"
    );
    for &f in &band {
        let s = cnt_sigma_intra(f, &cnt)?;
        let z = cnt_impedance_per_length(f, &cnt)?.z;
        println!("{:>7.1}  {:>28}  {:>28}", f / 1e12, c(s), c(z));
    }

    println!(
        "\ncopper Drude: sigma0 = {:.2e} S/m, tau = {:.1e} s",
        copper.sigma0, copper.tau
    );
    println!(
        "{:>7}  {:>28}  {:>24}  {:>10}",
        "f/THz", "sigma (S/m)", "Z_wave (Ohm)", "delta/nm"
    );
    for &f in &band {
        let s = copper_drude_sigma(f, &copper)?;
        let z = copper_wave_impedance(f, &copper)?.z;
        let d = copper_skin_depth(f, &copper)?;
        println!(
            "{:>7.1}  {:>28}  {:>24}  {:>10.2}",
            f / 1e12,
            c(s),
            c(z),
            d * 1e9
        );
    }
    println!(
        "\nnote: the classical skin depth turns around at omega*tau = 1 ({:.2} THz for this\n\
         copper) where the Drude re(sigma) collapses; below that it shrinks like 1/sqrt(f).",
        1.0 / (std::f64::consts::TAU * copper.tau) / 1e12
    );
    Ok(())
}
