use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nco::run::{deliver, execute, EXIT_USAGE};
use nco::{parse_config, Command};

/// Non-commutative charged oscillator: symbolic expansion, spectra,
/// perturbative corrections and cross-checks.
#[derive(Parser, Debug)]
#[command(name = "nco", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Sub {
    /// Print the shifted Hamiltonian grouped by powers of theta and eta
    Expand,
    /// Diagonalise the full shifted Hamiltonian
    Spectrum,
    /// First-order corrections for the label window
    Pt,
    /// Identity checks and the correction cross-check table
    Verify,
    /// Spectra and corrections along one parameter axis
    Sweep,
}

/// Every flag mirrors a config key and is applied after the file.
#[derive(Args, Debug)]
struct Flags {
    /// Config file (default: $NCO_CONFIG, if set)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    hbar: Option<String>,
    #[arg(long, global = true)]
    mass: Option<String>,
    #[arg(long, global = true)]
    omega: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    omega_c: Option<String>,
    #[arg(long, global = true)]
    alpha: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    theta: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    eta: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    charge: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    field: Option<String>,
    #[arg(long, global = true)]
    light_speed: Option<String>,
    #[arg(long, global = true)]
    cutoff_xy: Option<String>,
    #[arg(long, global = true)]
    cutoff_z: Option<String>,
    #[arg(long, global = true)]
    deg_tol: Option<String>,
    #[arg(long, global = true)]
    fd_step: Option<String>,
    #[arg(long, global = true)]
    fd_levels: Option<String>,
    #[arg(long, global = true)]
    rows_xy: Option<String>,
    #[arg(long, global = true)]
    rows_z: Option<String>,
    #[arg(long, global = true)]
    sweep_levels: Option<String>,
    /// Output file, written atomically (default: stdout)
    #[arg(long, global = true)]
    out: Option<String>,
    /// csv or json
    #[arg(long, global = true)]
    format: Option<String>,
    /// param:start:stop:count
    #[arg(long, global = true, allow_hyphen_values = true)]
    sweep: Option<String>,
    #[arg(long, global = true)]
    workers: Option<String>,
}

impl Flags {
    fn overrides(&self) -> Vec<(String, String)> {
        let pairs: [(&str, &Option<String>); 22] = [
            ("hbar", &self.hbar),
            ("mass", &self.mass),
            ("omega", &self.omega),
            ("omega_c", &self.omega_c),
            ("alpha", &self.alpha),
            ("theta", &self.theta),
            ("eta", &self.eta),
            ("charge", &self.charge),
            ("field", &self.field),
            ("light_speed", &self.light_speed),
            ("cutoff_xy", &self.cutoff_xy),
            ("cutoff_z", &self.cutoff_z),
            ("deg_tol", &self.deg_tol),
            ("fd_step", &self.fd_step),
            ("fd_levels", &self.fd_levels),
            ("rows_xy", &self.rows_xy),
            ("rows_z", &self.rows_z),
            ("sweep_levels", &self.sweep_levels),
            ("out", &self.out),
            ("format", &self.format),
            ("sweep", &self.sweep),
            ("workers", &self.workers),
        ];
        pairs.iter().filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone()))).collect()
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE as u8) } else { ExitCode::SUCCESS };
        }
    };

    let path = cli.flags.config.clone().or_else(|| std::env::var_os("NCO_CONFIG").filter(|v| !v.is_empty()).map(PathBuf::from));
    let text = match &path {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("nco: cannot read config {}: {e}", p.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        },
        None => String::new(),
    };
    let cfg = match parse_config(&text, &cli.flags.overrides()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("nco: config error: {e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };

    let cmd = match cli.command {
        Sub::Expand => Command::Expand,
        Sub::Spectrum => Command::Spectrum,
        Sub::Pt => Command::Pt,
        Sub::Verify => Command::Verify,
        Sub::Sweep => Command::Sweep,
    };
    let out = match execute(cmd, &cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("nco: {e:#}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    for line in &out.diagnostics {
        eprintln!("{line}");
    }
    if let Err(e) = deliver(&cfg, &out.body) {
        eprintln!("nco: writing output: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(out.exit_code as u8)
}
