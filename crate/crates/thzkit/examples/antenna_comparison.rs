//! Dipole miniaturization comparison across graphene, CNT-bundle and
//! copper: resonant lengths at a fixed 1 THz, and resonant frequencies at
//! a fixed 71 um length, each beside the published full-wave values.
//!
//! Run with `cargo run --example antenna_comparison`.

use thzkit::antenna::{
    default_environment, fem_reference, resonant_frequency, resonant_length, AntennaSpec,
};
use thzkit::materials::{CntParams, CopperParams, GrapheneParams, Material};
use thzkit::quantities::constants::C_0;

fn main() -> thzkit::Result<()> {
    let materials = [
        Material::Graphene(GrapheneParams::default()),
        Material::Cnt(CntParams::default()),
        Material::Copper(CopperParams::default()),
    ];

    println!("resonant length at 1 THz (lambda0 = 300 um)");
    println!(
        "{:>9}  {:>10}  {:>14}  {:>13}  {:>13}",
        "material", "L/um", "lambda0/L", "published L", "published D"
    );
    for (m, &(name, ratio, d_dbi)) in materials.iter().zip(&fem_reference::AT_1THZ) {
        let env = default_environment(m);
        let length = resonant_length(1e12, m, &env, 1)?;
        println!(
            "{:>9}  {:>10.1}  {:>14.2}  {:>10.0} um  {:>9.1} dBi",
            name,
            length * 1e6,
            C_0 / 1e12 / length,
            C_0 / 1e12 / ratio * 1e6,
            d_dbi
        );
    }

    println!("\nresonant frequency of 71 um dipoles");
    println!(
        "{:>9}  {:>10}  {:>15}  {:>13}",
        "material", "f_r/THz", "miniaturization", "published f_r"
    );
    for (m, &(name, f_ref, _)) in materials.iter().zip(&fem_reference::AT_71UM) {
        let env = default_environment(m);
        let spec = AntennaSpec::new(*m, 71e-6, env, 1)?;
        let r = resonant_frequency(&spec)?;
        println!(
            "{:>9}  {:>10.3}  {:>15.2}  {:>9.2} THz",
            name,
            r.f_r / 1e12,
            r.miniaturization,
            f_ref
        );
    }
    println!(
        "\nboth orderings (graphene < cnt < copper) follow from the wave mechanisms: plasmonic\n\
         slow waves on graphene, kinetic-inductance loading on the CNT bundle, and a nearly\n\
         free-space wave on copper. Published values are full-wave FEM results shipped in\n\
         data/fem_reference.csv; the reduced models here land within a few percent of them."
    );
    Ok(())
}
