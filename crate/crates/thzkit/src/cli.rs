//! Command-line front end: subcommand parsing, preset/config resolution,
//! sweep evaluation, CSV/JSON output.
//!
//! Exit codes: 0 success, 1 domain/runtime errors (message on stderr),
//! 2 usage errors. Output is deterministic: identical argv + config +
//! input files produce byte-identical bytes on stdout, and every CSV
//! opens with a `#` comment recording the tool version and the full
//! argument list. Data rows are computed before the header is printed,
//! so errors never truncate a table.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::antenna::{
    self, default_environment, dipole_directivity, resonant_frequency_with, AntennaSpec, CntBundle,
};
use crate::config::Config;
use crate::error::Error;
use crate::gating::{self, GateStack};
use crate::hypersurface::{phase_coverage, reflection, HsfCell, Polarization};
use crate::linkbudget::{
    absorption_loss_db, received_power_dbm, spreading_loss_db, AbsorptionTable, LinkParams,
};
use crate::materials::{
    cnt_impedance_per_length, cnt_sigma_intra, copper_drude_sigma, copper_skin_depth,
    copper_wave_impedance, graphene_sigma_intra, graphene_surface_impedance, CntParams,
    CopperParams, GrapheneParams, Material, GRAPHENE_INTRABAND_MAX_HZ,
};
use crate::plasmonics::{spp_exact, spp_quasistatic, DielectricEnvironment, SppMode};
use crate::quantities::constants::ELEMENTARY_CHARGE;
use crate::quantities::{parse_quantity, Dimension};
use crate::sweep::SweepSpec;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Entry point used by both the binary and the integration tests.
/// `argv` includes the program name.
pub fn run<I, S, O, E>(argv: I, stdout: &mut O, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
    O: Write,
    E: Write,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    let header = comment_header(&argv);
    match execute(cli, &header, stdout, stderr) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "usage error: {msg}");
            2
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn comment_header(argv: &[String]) -> String {
    let args = argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    format!("# thzkit {VERSION} | {args}")
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

type CliResult<T> = Result<T, Failure>;

// ---- flag value parsers (unit-aware, usage errors on failure) ----------

fn parse_si(text: &str, dim: Dimension, what: &str) -> Result<f64, String> {
    if let Ok(v) = text.parse::<f64>() {
        return Ok(v);
    }
    match parse_quantity(text) {
        Ok(q) if q.unit.dimension() == dim => Ok(q.to_si()),
        Ok(q) => Err(format!("unit {} is not a {what}", q.unit.symbol())),
        Err(e) => Err(e.to_string()),
    }
}

fn freq_value(s: &str) -> Result<f64, String> {
    parse_si(s, Dimension::Frequency, "frequency")
}

fn length_value(s: &str) -> Result<f64, String> {
    parse_si(s, Dimension::Length, "length")
}

fn energy_value(s: &str) -> Result<f64, String> {
    parse_si(s, Dimension::Energy, "energy")
}

fn time_value(s: &str) -> Result<f64, String> {
    parse_si(s, Dimension::Time, "time")
}

fn temperature_value(s: &str) -> Result<f64, String> {
    parse_si(s, Dimension::Temperature, "temperature")
}

fn voltage_value(s: &str) -> Result<f64, String> {
    parse_si(s, Dimension::Voltage, "voltage")
}

fn db_value(s: &str) -> Result<f64, String> {
    parse_si(s, Dimension::LogRatio, "level in dB/dBi/dBm")
}

/// Angles: degrees by default, `deg`/`rad` suffixes accepted. Returns radians.
fn angle_value(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Some(num) = t.strip_suffix("deg") {
        let v: f64 = num.trim().parse().map_err(|_| format!("bad angle {s:?}"))?;
        return Ok(v.to_radians());
    }
    if let Some(num) = t.strip_suffix("rad") {
        let v: f64 = num.trim().parse().map_err(|_| format!("bad angle {s:?}"))?;
        return Ok(v);
    }
    let v: f64 = t.parse().map_err(|_| format!("bad angle {s:?}"))?;
    Ok(v.to_radians())
}

fn sweep(text: &str, dim: Dimension) -> CliResult<SweepSpec> {
    SweepSpec::parse(text, dim).map_err(|e| Failure::Usage(e.to_string()))
}

// ---- clap surface -------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "thzkit",
    version,
    about = "THz material, plasmonic antenna, link-budget and metasurface modeling toolkit",
    propagate_version = true
)]
struct Cli {
    /// key=value config file overriding material defaults
    /// (falls back to $THZKIT_CONFIG)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output format (default: csv for tables, json for a single link record)
    #[arg(long, global = true, value_enum)]
    out: Option<OutFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum MaterialName {
    Graphene,
    Cnt,
    Copper,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum PolFlag {
    #[value(name = "TE", alias = "te")]
    Te,
    #[value(name = "TM", alias = "tm")]
    Tm,
}

impl From<PolFlag> for Polarization {
    fn from(p: PolFlag) -> Self {
        match p {
            PolFlag::Te => Polarization::Te,
            PolFlag::Tm => Polarization::Tm,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Surface conductivity, impedance and skin depth models
    Material {
        #[command(subcommand)]
        which: MaterialCmd,
    },
    /// Graphene surface-plasmon dispersion
    Spp(SppArgs),
    /// Gate bias chain: V_g -> carrier density, oxide field, mu_c
    Tune(TuneArgs),
    /// Dipole nanoantenna resonance, bias tuning and directivity
    Antenna {
        #[command(subcommand)]
        which: AntennaCmd,
    },
    /// THz path loss and received power
    Link(LinkArgs),
    /// Graphene hypersurface reflection
    Hsf(HsfArgs),
}

/// Material parameter overrides; defaults come from the config file or the
/// built-in presets.
#[derive(Args, Clone, Default)]
struct MaterialFlags {
    /// Graphene chemical potential (e.g. 0.3eV)
    #[arg(long = "mu-c", value_parser = energy_value)]
    mu_c: Option<f64>,
    /// Relaxation time (e.g. 1ps)
    #[arg(long, value_parser = time_value)]
    tau: Option<f64>,
    /// Temperature (e.g. 300K)
    #[arg(long, value_parser = temperature_value)]
    temp: Option<f64>,
    /// CNT radius (e.g. 2.712nm)
    #[arg(long, value_parser = length_value)]
    radius: Option<f64>,
    /// Fermi velocity (m/s)
    #[arg(long)]
    vf: Option<f64>,
    /// Copper DC conductivity (S/m)
    #[arg(long)]
    sigma0: Option<f64>,
}

#[derive(Args, Clone)]
#[command(group(ArgGroup::new("freq").required(true).args(["f", "f_sweep"])))]
struct FrequencyFlags {
    /// Single frequency (e.g. 1THz)
    #[arg(long, value_parser = freq_value)]
    f: Option<f64>,
    /// Frequency sweep start:stop:step[unit] or start:stop/count[log][unit]
    #[arg(long = "f-sweep", value_name = "SWEEP")]
    f_sweep: Option<String>,
}

impl FrequencyFlags {
    fn samples(&self) -> CliResult<Vec<f64>> {
        match (&self.f, &self.f_sweep) {
            (Some(f), None) => Ok(vec![*f]),
            (None, Some(s)) => Ok(sweep(s, Dimension::Frequency)?.samples()),
            _ => unreachable!("clap group enforces exactly one"),
        }
    }
}

#[derive(Subcommand)]
enum MaterialCmd {
    /// Complex conductivity (sheet S for graphene/CNT, S/m for copper)
    Sigma(MaterialQueryArgs),
    /// Complex impedance (Ohm/sq, Ohm/m or wave Ohm by material)
    Impedance(MaterialQueryArgs),
    /// Copper skin depth
    SkinDepth(SkinDepthArgs),
}

#[derive(Args)]
struct MaterialQueryArgs {
    /// Which material model to evaluate
    #[arg(long, value_enum)]
    material: MaterialName,
    #[command(flatten)]
    freq: FrequencyFlags,
    #[command(flatten)]
    params: MaterialFlags,
}

#[derive(Args)]
struct SkinDepthArgs {
    #[command(flatten)]
    freq: FrequencyFlags,
    #[command(flatten)]
    params: MaterialFlags,
}

#[derive(Args)]
struct SppArgs {
    #[command(flatten)]
    freq: FrequencyFlags,
    #[command(flatten)]
    params: MaterialFlags,
    /// Relative permittivity above the sheet
    #[arg(long, default_value_t = 1.0)]
    eps1: f64,
    /// Relative permittivity below the sheet
    #[arg(long, default_value_t = 4.0)]
    eps2: f64,
    /// Use the quasi-static closed form instead of the exact solver
    #[arg(long)]
    quasistatic: bool,
}

#[derive(Args, Clone)]
struct StackFlags {
    /// Named gate stack preset
    #[arg(long, alias = "preset", default_value = "table2")]
    stack: String,
    /// Oxide thickness override (e.g. 24.4nm)
    #[arg(long, value_parser = length_value)]
    thickness: Option<f64>,
    /// Oxide relative permittivity override
    #[arg(long = "eps-r")]
    eps_r: Option<f64>,
    /// Gate capacitance per area (F/m^2); excludes thickness-based fields
    #[arg(long, conflicts_with_all = ["thickness", "eps_r"])]
    cox: Option<f64>,
    /// Fermi velocity for the mu_c conversion (m/s)
    #[arg(long = "stack-vf")]
    stack_vf: Option<f64>,
}

impl StackFlags {
    fn resolve(&self, cfg: &Config) -> CliResult<GateStack> {
        if self.stack != "table2" {
            return Err(Failure::Usage(format!(
                "unknown gate stack preset {:?} (available: table2)",
                self.stack
            )));
        }
        let base = GateStack::table2();
        // gate.vf wins over the material-level graphene.vf override
        let vf = self
            .stack_vf
            .unwrap_or_else(|| cfg.get_or("gate.vf", cfg.get_or("graphene.vf", base.vf)));
        if let Some(cox) = self.cox {
            return Ok(GateStack::from_cox(cox, vf)?);
        }
        let thickness = self
            .thickness
            .unwrap_or_else(|| cfg.get_or("gate.thickness", base.thickness().unwrap()));
        let eps_r = self
            .eps_r
            .unwrap_or_else(|| cfg.get_or("gate.eps_r", base.eps_r().unwrap()));
        Ok(GateStack::from_geometry(thickness, eps_r, vf)?)
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("bias").required(true).args(["vg", "vg_sweep"])))]
struct TuneArgs {
    #[command(flatten)]
    stack: StackFlags,
    /// One or more gate voltages, comma separated (e.g. 7.6,13.6)
    #[arg(long, value_parser = voltage_value, value_delimiter = ',')]
    vg: Option<Vec<f64>>,
    /// Gate voltage sweep start:stop:step (volts)
    #[arg(long = "vg-sweep", value_name = "SWEEP")]
    vg_sweep: Option<String>,
}

#[derive(Subcommand)]
enum AntennaCmd {
    /// Resonant frequency of a fixed-length dipole
    Resonance(ResonanceArgs),
    /// Resonant frequency versus gate bias for a graphene dipole
    Tune(AntennaTuneArgs),
    /// Classical dipole directivity from the pattern integral
    Directivity(DirectivityArgs),
}

#[derive(Args)]
struct ResonanceArgs {
    /// Which material model to use
    #[arg(long, value_enum)]
    material: MaterialName,
    /// Dipole length (e.g. 68um)
    #[arg(long, value_parser = length_value)]
    length: f64,
    #[command(flatten)]
    params: MaterialFlags,
    /// Relative permittivity above the dipole
    #[arg(long)]
    eps1: Option<f64>,
    /// Relative permittivity below the dipole (defaults per material)
    #[arg(long)]
    eps2: Option<f64>,
    /// Half-wavelength multiple (1 = fundamental)
    #[arg(long = "mode-order", default_value_t = 1)]
    mode_order: u32,
    /// Parallel tubes in the CNT line model
    #[arg(long = "bundle-tubes")]
    bundle_tubes: Option<f64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("bias").required(true).args(["vg", "vg_sweep"])))]
struct AntennaTuneArgs {
    /// Dipole length (e.g. 0.8um)
    #[arg(long, value_parser = length_value)]
    length: f64,
    #[command(flatten)]
    stack: StackFlags,
    /// One or more gate voltages, comma separated
    #[arg(long, value_parser = voltage_value, value_delimiter = ',')]
    vg: Option<Vec<f64>>,
    /// Gate voltage sweep start:stop:step (volts)
    #[arg(long = "vg-sweep", value_name = "SWEEP")]
    vg_sweep: Option<String>,
    /// Relative permittivity above the dipole
    #[arg(long, default_value_t = 1.0)]
    eps1: f64,
    /// Relative permittivity below the dipole (gated stack sits on Si)
    #[arg(long, default_value_t = 11.9)]
    eps2: f64,
    /// Graphene relaxation time
    #[arg(long, value_parser = time_value)]
    tau: Option<f64>,
    /// Temperature
    #[arg(long, value_parser = temperature_value)]
    temp: Option<f64>,
}

#[derive(Args)]
struct DirectivityArgs {
    /// Electrical length k_eff * L in radians (pi = half-wave)
    #[arg(long = "keff-l")]
    keff_l: f64,
}

#[derive(Args)]
#[command(group(ArgGroup::new("dist").required(true).args(["d", "d_sweep"])))]
struct LinkArgs {
    /// Carrier frequency (e.g. 1THz)
    #[arg(long, value_parser = freq_value)]
    f: f64,
    /// Distance (e.g. 10m)
    #[arg(long, value_parser = length_value)]
    d: Option<f64>,
    /// Distance sweep start:stop:step[unit]
    #[arg(long = "d-sweep", value_name = "SWEEP")]
    d_sweep: Option<String>,
    /// Molecular absorption table CSV (f_hz,k_per_m); omitted = transparent
    #[arg(long = "absorption-file", value_name = "PATH")]
    absorption_file: Option<PathBuf>,
    /// Transmit power (e.g. 0dBm)
    #[arg(long, value_parser = db_value, default_value = "0")]
    ptx: f64,
    /// Transmit antenna gain (e.g. 20dBi)
    #[arg(long, value_parser = db_value, default_value = "0")]
    gt: f64,
    /// Receive antenna gain (e.g. 20dBi)
    #[arg(long, value_parser = db_value, default_value = "0")]
    gr: f64,
}

#[derive(Args, Clone, Default)]
struct CellFlags {
    /// Cell preset
    #[arg(long, default_value = "fig4")]
    preset: String,
    /// Slab thickness (e.g. 33.4um)
    #[arg(long, value_parser = length_value)]
    thickness: Option<f64>,
    /// Slab relative permittivity
    #[arg(long = "eps-r")]
    eps_r: Option<f64>,
    /// Graphene fill factor in (0, 1]
    #[arg(long)]
    fill: Option<f64>,
    /// Graphene chemical potential (e.g. 0.3eV)
    #[arg(long = "mu-c", value_parser = energy_value)]
    mu_c: Option<f64>,
    /// Graphene relaxation time
    #[arg(long, value_parser = time_value)]
    tau: Option<f64>,
    /// Temperature
    #[arg(long, value_parser = temperature_value)]
    temp: Option<f64>,
}

impl CellFlags {
    fn resolve(&self, cfg: &Config) -> CliResult<HsfCell> {
        if self.preset != "fig4" {
            return Err(Failure::Usage(format!(
                "unknown hypersurface preset {:?} (available: fig4)",
                self.preset
            )));
        }
        let base = HsfCell::fig4();
        // the preset owns its graphene operating point; hsf.* config keys
        // and flags adjust the cell, material-level keys do not
        let graphene = GrapheneParams::new(
            self.mu_c.unwrap_or(base.graphene.mu_c),
            self.tau.unwrap_or(base.graphene.tau),
            self.temp.unwrap_or(base.graphene.temp),
        )?;
        Ok(HsfCell::new(
            self.thickness
                .unwrap_or_else(|| cfg.get_or("hsf.thickness", base.slab_thickness)),
            self.eps_r
                .unwrap_or_else(|| cfg.get_or("hsf.eps_r", base.slab_rel_permittivity)),
            self.fill
                .unwrap_or_else(|| cfg.get_or("hsf.fill", base.fill_factor)),
            graphene,
        )?)
    }
}

#[derive(Args)]
struct HsfArgs {
    #[command(subcommand)]
    sub: Option<HsfCmd>,
    #[command(flatten)]
    cell: CellFlags,
    /// Single frequency (e.g. 1THz)
    #[arg(long, value_parser = freq_value)]
    f: Option<f64>,
    /// Frequency sweep (e.g. 0.5:1.5:0.005THz)
    #[arg(long = "f-sweep", value_name = "SWEEP")]
    f_sweep: Option<String>,
    /// Incidence angle (degrees; `deg`/`rad` suffixes accepted)
    #[arg(long, value_parser = angle_value, default_value = "0deg")]
    theta: f64,
    /// Polarization
    #[arg(long, value_enum, default_value = "TM")]
    pol: PolFlag,
}

#[derive(Subcommand)]
enum HsfCmd {
    /// Unwrapped reflection-phase span over a chemical-potential sweep
    Coverage(HsfCoverageArgs),
}

#[derive(Args)]
struct HsfCoverageArgs {
    #[command(flatten)]
    cell: CellFlags,
    /// Chemical potential sweep (e.g. 0.1:1.0:0.02eV)
    #[arg(long = "mu-c-sweep", value_name = "SWEEP")]
    mu_c_sweep: String,
    /// Evaluation frequency
    #[arg(long, value_parser = freq_value, default_value = "1THz")]
    f: f64,
    /// Incidence angle
    #[arg(long, value_parser = angle_value, default_value = "0deg")]
    theta: f64,
    /// Polarization
    #[arg(long, value_enum, default_value = "TM")]
    pol: PolFlag,
}

// ---- presets ------------------------------------------------------------

struct Presets {
    cfg: Config,
}

impl Presets {
    fn graphene(&self, flags: &MaterialFlags) -> CliResult<GrapheneParams> {
        Ok(GrapheneParams::new(
            flags
                .mu_c
                .unwrap_or_else(|| self.cfg.get_or("graphene.mu_c", 0.3 * ELEMENTARY_CHARGE)),
            flags
                .tau
                .unwrap_or_else(|| self.cfg.get_or("graphene.tau", 1e-12)),
            flags
                .temp
                .unwrap_or_else(|| self.cfg.get_or("graphene.temp", 300.0)),
        )?)
    }

    fn cnt(&self, flags: &MaterialFlags) -> CliResult<CntParams> {
        Ok(CntParams::new(
            flags
                .radius
                .unwrap_or_else(|| self.cfg.get_or("cnt.radius", 2.712e-9)),
            flags
                .vf
                .unwrap_or_else(|| self.cfg.get_or("cnt.vf", crate::materials::DEFAULT_CNT_VF)),
            flags
                .tau
                .unwrap_or_else(|| self.cfg.get_or("cnt.tau", 3e-12)),
        )?)
    }

    fn copper(&self, flags: &MaterialFlags) -> CliResult<CopperParams> {
        Ok(CopperParams::new(
            flags
                .sigma0
                .unwrap_or_else(|| self.cfg.get_or("copper.sigma0", 5.96e7)),
            flags
                .tau
                .unwrap_or_else(|| self.cfg.get_or("copper.tau", 2.5e-14)),
        )?)
    }

    fn material(&self, name: MaterialName, flags: &MaterialFlags) -> CliResult<Material> {
        Ok(match name {
            MaterialName::Graphene => Material::Graphene(self.graphene(flags)?),
            MaterialName::Cnt => Material::Cnt(self.cnt(flags)?),
            MaterialName::Copper => Material::Copper(self.copper(flags)?),
        })
    }

    fn bundle(&self, tubes_flag: Option<f64>) -> CliResult<CntBundle> {
        let base = CntBundle::default();
        Ok(CntBundle::new(
            tubes_flag.unwrap_or_else(|| self.cfg.get_or("cnt.bundle_tubes", base.tubes)),
            self.cfg.get_or("cnt.height_ratio", base.height_ratio),
        )?)
    }
}

// ---- output -------------------------------------------------------------

/// One tabular result: fixed column names plus numeric rows.
struct Table {
    note: Option<String>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<f64>>,
}

fn fmt_number(x: f64) -> String {
    // 10 significant digits, deterministic
    format!("{x:.9e}")
}

fn write_table<W: Write>(
    w: &mut W,
    header: &str,
    format: OutFormat,
    table: &Table,
) -> CliResult<()> {
    let io = |e: std::io::Error| Failure::Run(Error::Io(e));
    match format {
        OutFormat::Csv => {
            writeln!(w, "{header}").map_err(io)?;
            if let Some(note) = &table.note {
                writeln!(w, "# {note}").map_err(io)?;
            }
            writeln!(w, "{}", table.columns.join(",")).map_err(io)?;
            for row in &table.rows {
                debug_assert_eq!(row.len(), table.columns.len());
                let cells: Vec<String> = row.iter().map(|&x| fmt_number(x)).collect();
                writeln!(w, "{}", cells.join(",")).map_err(io)?;
            }
        }
        OutFormat::Json => {
            writeln!(w, "[").map_err(io)?;
            for (i, row) in table.rows.iter().enumerate() {
                let fields: Vec<String> = table
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, &x)| format!("\"{c}\": {}", fmt_number(x)))
                    .collect();
                let comma = if i + 1 < table.rows.len() { "," } else { "" };
                writeln!(w, "  {{{}}}{comma}", fields.join(", ")).map_err(io)?;
            }
            writeln!(w, "]").map_err(io)?;
        }
    }
    Ok(())
}

/// Single flat JSON record (used by `link` without a sweep).
fn write_record<W: Write>(w: &mut W, fields: &[(&str, f64)]) -> CliResult<()> {
    let io = |e: std::io::Error| Failure::Run(Error::Io(e));
    let body: Vec<String> = fields
        .iter()
        .map(|(k, v)| format!("  \"{k}\": {}", fmt_number(*v)))
        .collect();
    writeln!(w, "{{\n{}\n}}", body.join(",\n")).map_err(io)?;
    Ok(())
}

fn warn_graphene_band<E: Write>(stderr: &mut E, freqs: &[f64]) {
    if freqs.iter().any(|&f| f > GRAPHENE_INTRABAND_MAX_HZ) {
        let _ = writeln!(
            stderr,
            "warning: graphene intraband model evaluated above 10 THz; interband \
             transitions are neglected there"
        );
    }
}

// ---- execution ----------------------------------------------------------

fn execute<O: Write, E: Write>(
    cli: Cli,
    header: &str,
    stdout: &mut O,
    stderr: &mut E,
) -> CliResult<()> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => match std::env::var_os("THZKIT_CONFIG") {
            Some(path) => Config::load(PathBuf::from(path))?,
            None => Config::default(),
        },
    };
    let presets = Presets { cfg };

    let out = cli.out.unwrap_or(OutFormat::Csv);
    match cli.command {
        Command::Material { which } => material_cmd(which, &presets, out, header, stdout, stderr),
        Command::Spp(args) => spp_cmd(args, &presets, out, header, stdout, stderr),
        Command::Tune(args) => tune_cmd(args, &presets, out, header, stdout),
        Command::Antenna { which } => antenna_cmd(which, &presets, out, header, stdout),
        Command::Link(args) => link_cmd(args, cli.out, header, stdout),
        Command::Hsf(args) => hsf_cmd(args, &presets, out, header, stdout, stderr),
    }
}

fn material_cmd<O: Write, E: Write>(
    which: MaterialCmd,
    presets: &Presets,
    out: OutFormat,
    header: &str,
    stdout: &mut O,
    stderr: &mut E,
) -> CliResult<()> {
    match which {
        MaterialCmd::Sigma(args) => {
            let freqs = args.freq.samples()?;
            let material = presets.material(args.material, &args.params)?;
            if matches!(material, Material::Graphene(_)) {
                warn_graphene_band(stderr, &freqs);
            }
            let (note, rows) = match material {
                Material::Graphene(p) => (
                    "graphene intraband sheet conductivity, sigma in S",
                    freqs
                        .iter()
                        .map(|&f| graphene_sigma_intra(f, &p).map(|s| vec![f / 1e12, s.re, s.im]))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                Material::Cnt(p) => (
                    "CNT wall conductivity, sigma in S",
                    freqs
                        .iter()
                        .map(|&f| cnt_sigma_intra(f, &p).map(|s| vec![f / 1e12, s.re, s.im]))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                Material::Copper(p) => (
                    "copper Drude conductivity, sigma in S/m",
                    freqs
                        .iter()
                        .map(|&f| copper_drude_sigma(f, &p).map(|s| vec![f / 1e12, s.re, s.im]))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            let table = Table {
                note: Some(note.to_string()),
                columns: vec!["f_THz", "re_sigma", "im_sigma"],
                rows,
            };
            write_table(stdout, header, out, &table)
        }
        MaterialCmd::Impedance(args) => {
            let freqs = args.freq.samples()?;
            let material = presets.material(args.material, &args.params)?;
            if matches!(material, Material::Graphene(_)) {
                warn_graphene_band(stderr, &freqs);
            }
            let (note, rows) = match material {
                Material::Graphene(p) => (
                    "graphene sheet impedance, z in Ohm per square",
                    freqs
                        .iter()
                        .map(|&f| {
                            graphene_surface_impedance(f, &p)
                                .map(|z| vec![f / 1e12, z.z.re, z.z.im])
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                Material::Cnt(p) => (
                    "CNT line impedance, z in Ohm per meter",
                    freqs
                        .iter()
                        .map(|&f| {
                            cnt_impedance_per_length(f, &p).map(|z| vec![f / 1e12, z.z.re, z.z.im])
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                Material::Copper(p) => (
                    "copper wave impedance, z in Ohm",
                    freqs
                        .iter()
                        .map(|&f| {
                            copper_wave_impedance(f, &p).map(|z| vec![f / 1e12, z.z.re, z.z.im])
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            let table = Table {
                note: Some(note.to_string()),
                columns: vec!["f_THz", "re_z", "im_z"],
                rows,
            };
            write_table(stdout, header, out, &table)
        }
        MaterialCmd::SkinDepth(args) => {
            let freqs = args.freq.samples()?;
            let p = presets.copper(&args.params)?;
            let rows = freqs
                .iter()
                .map(|&f| copper_skin_depth(f, &p).map(|d| vec![f / 1e12, d * 1e9]))
                .collect::<Result<Vec<_>, _>>()?;
            let table = Table {
                note: Some("copper Drude skin depth".to_string()),
                columns: vec!["f_THz", "skin_depth_nm"],
                rows,
            };
            write_table(stdout, header, out, &table)
        }
    }
}

fn spp_row(f: f64, mode: &SppMode) -> Vec<f64> {
    vec![
        f / 1e12,
        mode.k_spp.re,
        mode.k_spp.im,
        mode.lambda_spp * 1e6,
        mode.confinement,
        mode.prop_length * 1e6,
    ]
}

fn spp_cmd<O: Write, E: Write>(
    args: SppArgs,
    presets: &Presets,
    out: OutFormat,
    header: &str,
    stdout: &mut O,
    stderr: &mut E,
) -> CliResult<()> {
    let freqs = args.freq.samples()?;
    warn_graphene_band(stderr, &freqs);
    let p = presets.graphene(&args.params)?;
    let env = DielectricEnvironment::new(args.eps1, args.eps2)?;
    let rows = freqs
        .iter()
        .map(|&f| {
            let sigma = graphene_sigma_intra(f, &p)?;
            let mode = if args.quasistatic {
                spp_quasistatic(f, sigma, &env)?
            } else {
                spp_exact(f, sigma, &env)?
            };
            Ok(spp_row(f, &mode))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let table = Table {
        note: None,
        columns: vec![
            "f_THz",
            "re_kspp",
            "im_kspp",
            "lambda_spp_um",
            "confinement",
            "prop_length_um",
        ],
        rows,
    };
    write_table(stdout, header, out, &table)
}

fn bias_values(vg: Option<Vec<f64>>, vg_sweep: Option<String>) -> CliResult<Vec<f64>> {
    match (vg, vg_sweep) {
        (Some(v), None) => Ok(v),
        (None, Some(s)) => Ok(sweep(&s, Dimension::Voltage)?.samples()),
        _ => unreachable!("clap group enforces exactly one"),
    }
}

fn tune_cmd<O: Write>(
    args: TuneArgs,
    presets: &Presets,
    out: OutFormat,
    header: &str,
    stdout: &mut O,
) -> CliResult<()> {
    let stack = args.stack.resolve(&presets.cfg)?;
    let biases = bias_values(args.vg, args.vg_sweep)?;
    let rows = biases
        .iter()
        .map(|&vg| {
            let op = gating::operating_point(vg, &stack)?;
            Ok(vec![
                vg,
                op.n * 1e-4,
                op.e_field * 1e-8,
                op.mu_c / ELEMENTARY_CHARGE,
            ])
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let table = Table {
        note: None,
        columns: vec!["vg_V", "n_per_cm2", "E_MV_per_cm", "mu_c_eV"],
        rows,
    };
    write_table(stdout, header, out, &table)
}

fn antenna_cmd<O: Write>(
    which: AntennaCmd,
    presets: &Presets,
    out: OutFormat,
    header: &str,
    stdout: &mut O,
) -> CliResult<()> {
    match which {
        AntennaCmd::Resonance(args) => {
            let material = presets.material(args.material, &args.params)?;
            let defaults = default_environment(&material);
            let env = DielectricEnvironment::new(
                args.eps1
                    .unwrap_or_else(|| presets.cfg.get_or("antenna.eps1", defaults.eps1)),
                args.eps2
                    .unwrap_or_else(|| presets.cfg.get_or("antenna.eps2", defaults.eps2)),
            )?;
            let spec = AntennaSpec::new(material, args.length, env, args.mode_order)?;
            let bundle = presets.bundle(args.bundle_tubes)?;
            let point = resonant_frequency_with(&spec, &bundle)?;
            let table = Table {
                note: Some(format!("material {}", material.name())),
                columns: vec!["length_um", "f_r_THz", "lambda_eff_um", "miniaturization"],
                rows: vec![vec![
                    args.length * 1e6,
                    point.f_r / 1e12,
                    point.lambda_eff * 1e6,
                    point.miniaturization,
                ]],
            };
            write_table(stdout, header, out, &table)
        }
        AntennaCmd::Tune(args) => {
            let stack = args.stack.resolve(&presets.cfg)?;
            let biases = bias_values(args.vg, args.vg_sweep)?;
            let env = DielectricEnvironment::new(args.eps1, args.eps2)?;
            let tau = args
                .tau
                .unwrap_or_else(|| presets.cfg.get_or("graphene.tau", 1e-12));
            let temp = args
                .temp
                .unwrap_or_else(|| presets.cfg.get_or("graphene.temp", 300.0));
            let curve = antenna::tuning_curve(args.length, &stack, &biases, &env, tau, temp)?;
            let rows = curve
                .iter()
                .map(|&(vg, mu_c, f_r)| vec![vg, mu_c / ELEMENTARY_CHARGE, f_r / 1e12])
                .collect();
            let table = Table {
                note: None,
                columns: vec!["vg_V", "mu_c_eV", "f_r_THz"],
                rows,
            };
            write_table(stdout, header, out, &table)
        }
        AntennaCmd::Directivity(args) => {
            let d = dipole_directivity(1.0, args.keff_l)?;
            let table = Table {
                note: None,
                columns: vec!["keff_l", "directivity_dbi"],
                rows: vec![vec![args.keff_l, d]],
            };
            write_table(stdout, header, out, &table)
        }
    }
}

fn link_cmd<O: Write>(
    args: LinkArgs,
    out: Option<OutFormat>,
    header: &str,
    stdout: &mut O,
) -> CliResult<()> {
    // Without an absorption file the medium is treated as transparent.
    let table = match &args.absorption_file {
        Some(path) => Some(AbsorptionTable::from_csv_path(path)?),
        None => None,
    };
    let losses = |d: f64| -> Result<(f64, f64), Error> {
        let spread = spreading_loss_db(args.f, d)?;
        let a_ma = match &table {
            Some(t) => absorption_loss_db(args.f, d, t)?,
            None => 0.0,
        };
        Ok((spread, a_ma))
    };

    match (args.d, args.d_sweep) {
        (Some(d), None) => {
            let link = LinkParams::new(args.f, d, args.ptx, args.gt, args.gr)?;
            let (spread, a_ma) = losses(d)?;
            let p_rx = match &table {
                Some(t) => received_power_dbm(&link, t)?,
                None => link.p_tx_dbm + link.g_tx_dbi + link.g_rx_dbi - spread,
            };
            let fields = [
                ("f_hz", args.f),
                ("d_m", d),
                ("spreading_loss_db", spread),
                ("absorption_loss_db", a_ma),
                ("total_path_loss_db", spread + a_ma),
                ("p_tx_dbm", args.ptx),
                ("g_tx_dbi", args.gt),
                ("g_rx_dbi", args.gr),
                ("received_power_dbm", p_rx),
            ];
            // a single link evaluation is a JSON record unless csv is forced
            match out.unwrap_or(OutFormat::Json) {
                OutFormat::Json => write_record(stdout, &fields),
                OutFormat::Csv => {
                    let table = Table {
                        note: None,
                        columns: fields.iter().map(|(k, _)| *k).collect(),
                        rows: vec![fields.iter().map(|(_, v)| *v).collect()],
                    };
                    write_table(stdout, header, OutFormat::Csv, &table)
                }
            }
        }
        (None, Some(s)) => {
            let distances = sweep(&s, Dimension::Length)?.samples();
            let rows = distances
                .iter()
                .map(|&d| {
                    let (spread, a_ma) = losses(d)?;
                    Ok(vec![
                        d,
                        spread,
                        a_ma,
                        spread + a_ma,
                        args.ptx + args.gt + args.gr - spread - a_ma,
                    ])
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let table = Table {
                note: None,
                columns: vec![
                    "d_m",
                    "spreading_loss_db",
                    "absorption_loss_db",
                    "total_path_loss_db",
                    "received_power_dbm",
                ],
                rows,
            };
            write_table(stdout, header, out.unwrap_or(OutFormat::Csv), &table)
        }
        _ => unreachable!("clap group enforces exactly one"),
    }
}

fn hsf_cmd<O: Write, E: Write>(
    args: HsfArgs,
    presets: &Presets,
    out: OutFormat,
    header: &str,
    stdout: &mut O,
    stderr: &mut E,
) -> CliResult<()> {
    match args.sub {
        Some(HsfCmd::Coverage(cov)) => {
            let cell = cov.cell.resolve(&presets.cfg)?;
            let sweep_spec = sweep(&cov.mu_c_sweep, Dimension::Energy)?;
            let mu_values = sweep_spec.samples();
            let deg = phase_coverage(cov.f, &cell, &mu_values, cov.theta, cov.pol.into())?;
            let table = Table {
                note: None,
                columns: vec!["f_THz", "theta_deg", "n_bias", "coverage_deg"],
                rows: vec![vec![
                    cov.f / 1e12,
                    cov.theta.to_degrees(),
                    mu_values.len() as f64,
                    deg,
                ]],
            };
            write_table(stdout, header, out, &table)
        }
        None => {
            let cell = args.cell.resolve(&presets.cfg)?;
            let freqs = match (&args.f, &args.f_sweep) {
                (Some(f), None) => vec![*f],
                (None, Some(s)) => sweep(s, Dimension::Frequency)?.samples(),
                (None, None) => {
                    return Err(Failure::Usage("hsf needs --f or --f-sweep".to_string()))
                }
                (Some(_), Some(_)) => {
                    return Err(Failure::Usage("--f conflicts with --f-sweep".to_string()))
                }
            };
            warn_graphene_band(stderr, &freqs);
            let pol: Polarization = args.pol.into();
            let rows = freqs
                .iter()
                .map(|&f| {
                    let s = reflection(f, &cell, args.theta, pol)?;
                    Ok(vec![
                        f / 1e12,
                        s.gamma.re,
                        s.gamma.im,
                        s.efficiency,
                        s.phase_deg,
                    ])
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let table = Table {
                note: None,
                columns: vec!["f_THz", "re_gamma", "im_gamma", "efficiency", "phase_deg"],
                rows,
            };
            write_table(stdout, header, out, &table)
        }
    }
}
