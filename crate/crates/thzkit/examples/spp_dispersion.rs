//! Graphene surface-plasmon dispersion on an air/SiO2 interface:
//! exact retarded solution versus the quasi-static closed form.
//!
//! Run with `cargo run --example spp_dispersion`.

use thzkit::materials::{graphene_sigma_intra, GrapheneParams};
use thzkit::plasmonics::{spp_exact, spp_quasistatic, DielectricEnvironment};

fn main() -> thzkit::Result<()> {
    let sheet = GrapheneParams::default(); // 0.3 eV, 1 ps, 300 K
    let env = DielectricEnvironment::air_over_silica();

    println!("TM SPP on graphene, eps = ({}, {})", env.eps1, env.eps2);
    println!(
        "{:>6}  {:>12} {:>12}  {:>12}  {:>11}  {:>11}  {:>9}",
        "f/THz", "re k (rad/m)", "im k", "lambda/um", "conf exact", "conf q-s", "L_prop/um"
    );
    let mut f = 0.5e12;
    while f <= 5.0001e12 {
        let sigma = graphene_sigma_intra(f, &sheet)?;
        let exact = spp_exact(f, sigma, &env)?;
        // near the light line the non-retarded closed form can fall below
        // the bound-mode floor even though the true mode is still bound
        let qs_confinement = match spp_quasistatic(f, sigma, &env) {
            Ok(m) => format!("{:.3}", m.confinement),
            Err(_) => "unbound".to_string(),
        };
        println!(
            "{:>6.2}  {:>12.4e} {:>12.4e}  {:>12.3}  {:>11.3}  {:>11}  {:>9.1}",
            f / 1e12,
            exact.k_spp.re,
            exact.k_spp.im,
            exact.lambda_spp * 1e6,
            exact.confinement,
            qs_confinement,
            exact.prop_length * 1e6
        );
        f += 0.5e12;
    }
    println!(
        "\nat low confinement the retarded root runs well above the quasi-static estimate\n\
         (which can even fall below the light line); the two converge once the mode is much\n\
         slower than light (confinement >> 1)."
    );
    Ok(())
}
