//! The `gdm` command-line front end.
//!
//! Field elements are printed in power-index notation (`0`, `1`, `a^k`),
//! user frames as comma-separated GF(p) digits, and probabilities with
//! Rust's shortest round-trip float formatting, so identical invocations
//! produce byte-identical output.
//!
//! Relative `--out` and `--plot` paths are resolved against `$GDM_OUT_DIR`
//! when it is set.

mod svg;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::carriers::{CarrierError, CarrierSet};
use crate::ffft::{parse_elements, Spectrum};
use crate::finite_field::{default_params, BasePoly, FieldElement, FieldError, FieldParams, GaloisField};
use crate::gdm_mux::{CompressedSpectrum, CyclotomicStructure, Gdm, GdmConfig, GdmError, UserFrame};
use crate::modem::{
    eb_to_es_db, monte_carlo_ser, ser_curve, snr_range, substream, ChannelModel, McConfig, ModemError, ModulationKind,
};

pub use svg::{line_chart, Series};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "GDM_OUT_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Gdm(#[from] GdmError),
    #[error(transparent)]
    Modem(#[from] ModemError),
    #[error(transparent)]
    Carrier(#[from] CarrierError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
    #[error("roundtrip identity failed: {0}")]
    Mismatch(String),
}

#[derive(Parser, Debug)]
#[command(name = "gdm", version, about = "Galois-field division multiplexing toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field characteristic.
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    /// Extension degree.
    #[arg(long, default_value_t = 4)]
    pub m: u32,
    /// Reduction polynomial, high degree first (`10011` = x^4 + x + 1).
    /// Defaults to the built-in primitive polynomial for (p, m).
    #[arg(long)]
    pub poly: Option<String>,
    /// Accept an irreducible but non-primitive polynomial and search for a
    /// primitive generator instead.
    #[arg(long)]
    pub allow_non_primitive: bool,
}

impl FieldArgs {
    pub fn params(&self) -> Result<FieldParams, CliError> {
        if !crate::finite_field::is_prime(self.p) {
            return Err(FieldError::NotPrime(self.p).into());
        }
        match &self.poly {
            Some(text) => {
                let poly = BasePoly::from_digit_str(self.p, text)
                    .ok_or_else(|| CliError::Usage(format!("invalid polynomial {text:?} over GF({})", self.p)))?;
                Ok(FieldParams::new(self.p, self.m, poly))
            }
            None => default_params(self.p, self.m).ok_or_else(|| {
                CliError::Usage(format!(
                    "no built-in polynomial for GF({}^{}); pass --poly",
                    self.p, self.m
                ))
            }),
        }
    }

    pub fn field(&self) -> Result<GaloisField, CliError> {
        let params = self.params()?;
        Ok(if self.allow_non_primitive {
            GaloisField::with_any_generator(params)?
        } else {
            GaloisField::new(params)?
        })
    }
}

#[derive(Args, Debug, Clone)]
pub struct SerArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Comma-separated constellations: bpsk, qpsk, 8psk, 16qam.
    #[arg(long = "mod", default_value = "16qam")]
    pub modulation: String,
    /// Number of users N.
    #[arg(long, default_value_t = 15)]
    pub n: usize,
    /// Transmit only coset leaders.
    #[arg(long)]
    pub compressed: bool,
    /// SNR grid in dB: `start:stop:step` or a comma list.
    #[arg(long, default_value = "0:12:1")]
    pub snr: String,
    /// Interpret the grid as Eb/N0 instead of Es/N0.
    #[arg(long)]
    pub eb_n0: bool,
    /// Output CSV path (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write an SVG chart to this path.
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the field table: i, power, coeff_vector, order, minimal_poly.
    Field(FieldArgs),
    /// Print the carrier matrix and its correlation matrix.
    Carriers {
        #[command(flatten)]
        field: FieldArgs,
        /// Number of carriers; defaults to p^m - 1.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Spread a user frame into its spectrum.
    Mux {
        #[command(flatten)]
        field: FieldArgs,
        /// Comma-separated GF(p) digits, one per user.
        #[arg(long)]
        frame: String,
        /// Output only the coset-leader values.
        #[arg(long)]
        compress: bool,
    },
    /// Recover a user frame from a spectrum.
    Demux {
        #[command(flatten)]
        field: FieldArgs,
        /// Spectrum (or coset-leader values with --compress) in power notation.
        #[arg(long)]
        spectrum: String,
        /// The input holds coset-leader values only.
        #[arg(long)]
        compress: bool,
        /// Number of users; required with --compress unless it is p^m - 1.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run mux → compress → decompress → demux and check the identity.
    Roundtrip {
        #[command(flatten)]
        field: FieldArgs,
        /// Number of users; defaults to the frame length or p^m - 1.
        #[arg(long)]
        n: Option<usize>,
        /// Frame to send; random when absent.
        #[arg(long)]
        frame: Option<String>,
        /// Seed for the random frame.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Replace the first coset-leader value with the field generator
        /// before decompressing.
        #[arg(long, hide = true)]
        corrupt_leader: bool,
    },
    /// Analytical symbol and frame error curves.
    SerAnalytic(SerArgs),
    /// Monte Carlo error rates through the full GDM chain.
    SerMc {
        #[command(flatten)]
        ser: SerArgs,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Frames per SNR point.
        #[arg(long, default_value_t = 10_000)]
        frames: u64,
        /// Worker threads (results do not depend on this).
        #[arg(long)]
        threads: Option<usize>,
    },
}

/// Parse and run, returning the process exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Output(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Field(args) => cmd_field(&args, out),
        Command::Carriers { field, n } => cmd_carriers(&field, n, out),
        Command::Mux { field, frame, compress } => cmd_mux(&field, &frame, compress, out),
        Command::Demux {
            field,
            spectrum,
            compress,
            n,
        } => cmd_demux(&field, &spectrum, compress, n, out),
        Command::Roundtrip {
            field,
            n,
            frame,
            seed,
            corrupt_leader,
        } => cmd_roundtrip(&field, n, frame.as_deref(), seed, corrupt_leader, out),
        Command::SerAnalytic(args) => cmd_ser_analytic(&args, out),
        Command::SerMc {
            ser,
            seed,
            frames,
            threads,
        } => cmd_ser_mc(&ser, seed, frames, threads, out),
    }
}

pub fn cmd_field(args: &FieldArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let f = args.field()?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let row = |w: &mut csv::Writer<Vec<u8>>, cols: [String; 5]| w.write_record(&cols).map_err(io::Error::from);
    row(
        &mut w,
        ["i", "power", "coeff_vector", "order", "minimal_poly"].map(String::from),
    )?;
    row(
        &mut w,
        [
            "-".into(),
            "0".into(),
            f.format_coefficients(FieldElement::Zero),
            "-".into(),
            f.minimal_polynomial(FieldElement::Zero).to_string(),
        ],
    )?;
    for e in f.elements().skip(1) {
        row(
            &mut w,
            [
                e.log().unwrap_or_default().to_string(),
                e.to_string(),
                f.format_coefficients(e),
                f.element_order(e)?.to_string(),
                f.minimal_polynomial(e).to_string(),
            ],
        )?;
    }
    out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
    Ok(())
}

fn matrix_csv(rows: &[Vec<FieldElement>], out: &mut dyn Write) -> io::Result<()> {
    let header: Vec<String> = (0..rows.len()).map(|k| k.to_string()).collect();
    writeln!(out, "i,{}", header.join(","))?;
    for (i, row) in rows.iter().enumerate() {
        writeln!(out, "{i},{}", Spectrum(row.clone()))?;
    }
    Ok(())
}

pub fn cmd_carriers(args: &FieldArgs, n: Option<usize>, out: &mut dyn Write) -> Result<(), CliError> {
    let f = args.field()?;
    let n = n.unwrap_or(f.group_order() as usize);
    let plan = crate::ffft::TransformPlan::new(&f, n).map_err(GdmError::from)?;
    let set = CarrierSet::new(plan);
    let rows = (0..n).map(|i| set.carrier(i)).collect::<Result<Vec<_>, _>>()?;
    matrix_csv(&rows, out)?;
    writeln!(out)?;
    matrix_csv(&set.correlation_matrix(), out)?;
    Ok(())
}

fn build_gdm(args: &FieldArgs, n: usize) -> Result<Gdm, CliError> {
    let field = args.field()?;
    Ok(Gdm::with_field(GdmConfig::new(field.params().clone(), n), field)?)
}

fn parse_frame(text: &str) -> Result<UserFrame, CliError> {
    let frame: UserFrame = text.parse()?;
    if frame.is_empty() {
        return Err(CliError::Usage("empty frame".into()));
    }
    Ok(frame)
}

pub fn cmd_mux(args: &FieldArgs, frame: &str, compress: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let frame = parse_frame(frame)?;
    let gdm = build_gdm(args, frame.len())?;
    let spectrum = gdm.multiplex(&frame)?;
    if compress {
        writeln!(out, "{}", gdm.compress(&spectrum)?)?;
    } else {
        writeln!(out, "{spectrum}")?;
    }
    Ok(())
}

pub fn cmd_demux(
    args: &FieldArgs,
    spectrum: &str,
    compress: bool,
    n: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let values = parse_elements(spectrum)?;
    let frame = if compress {
        let n = match n {
            Some(n) => n,
            None => args.field()?.group_order() as usize,
        };
        let gdm = build_gdm(args, n)?;
        let c = CompressedSpectrum::new(gdm.structure_arc(), values)?;
        gdm.demultiplex(&gdm.decompress(&c)?)?
    } else {
        if n.is_some_and(|n| n != values.len()) {
            return Err(GdmError::LengthMismatch {
                expected: n.unwrap_or_default(),
                got: values.len(),
            }
            .into());
        }
        let gdm = build_gdm(args, values.len())?;
        gdm.demultiplex(&Spectrum(values))?
    };
    writeln!(out, "{frame}")?;
    Ok(())
}

pub fn cmd_roundtrip(
    args: &FieldArgs,
    n: Option<usize>,
    frame: Option<&str>,
    seed: u64,
    corrupt_leader: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    use rand::Rng;

    let field = args.field()?;
    let frame = match frame {
        Some(text) => parse_frame(text)?,
        None => {
            let n = n.unwrap_or(field.group_order() as usize);
            let mut rng = substream(seed, 0);
            let p = field.characteristic();
            UserFrame((0..n).map(|_| rng.random_range(0..p)).collect())
        }
    };
    let n = n.unwrap_or(frame.len());
    let gdm = Gdm::with_field(GdmConfig::new(field.params().clone(), n), field.clone())?;

    let spectrum = gdm.multiplex(&frame)?;
    let mut compressed = gdm.compress(&spectrum)?;
    writeln!(out, "frame:      {frame}")?;
    writeln!(out, "spectrum:   {spectrum}")?;
    let leaders: Vec<String> = gdm.structure().leaders().iter().map(|l| l.to_string()).collect();
    writeln!(out, "leaders:    {}", leaders.join(","))?;
    writeln!(out, "compressed: {compressed}")?;
    writeln!(out, "gamma_cc:   {}", gdm.compactness_factor())?;
    if corrupt_leader {
        if field.degree() == 1 {
            return Err(CliError::Usage("every value is consistent over a prime field".into()));
        }
        compressed.leader_values_mut()[0] = field.generator();
        writeln!(out, "corrupted:  {compressed}")?;
    }
    let restored = gdm.decompress(&compressed)?;
    writeln!(out, "restored:   {restored}")?;
    let recovered = gdm.demultiplex(&restored)?;
    writeln!(out, "recovered:  {recovered}")?;
    if restored != spectrum {
        return Err(CliError::Mismatch("restored spectrum differs".into()));
    }
    if recovered != frame {
        return Err(CliError::Mismatch("recovered frame differs".into()));
    }
    writeln!(out, "identity:   ok")?;
    Ok(())
}

/// Parse `start:stop:step` or a comma-separated list of dB values.
pub fn parse_snr_grid(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("invalid SNR grid {text:?}"));
    let text = text.trim();
    if text.is_empty() {
        return Err(CliError::Usage("empty SNR grid".into()));
    }
    if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|t| t.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let [start, stop, step] = parts[..] else {
            return Err(bad());
        };
        return snr_range(start, stop, step).map_err(|_| CliError::Usage("empty SNR grid".into()));
    }
    text.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| bad()))
        .collect()
}

fn parse_modulations(text: &str) -> Result<Vec<ModulationKind>, CliError> {
    let kinds = text
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<ModulationKind>, _>>()?;
    if kinds.is_empty() {
        return Err(CliError::Usage("no modulation given".into()));
    }
    Ok(kinds)
}

fn resolve_path(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// `dir/stem_<suffix>.ext` for multi-curve output.
fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let name = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_{suffix}.{ext}"),
        None => format!("{stem}_{suffix}"),
    };
    path.with_file_name(name)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| CliError::Io {
            path: parent.to_path_buf(),
            source,
        })?;
    }
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Write one CSV per constellation; blocks on stdout are introduced by a
/// `# mod=… exponent=…` line when there is more than one.
fn emit_csvs(args: &SerArgs, blocks: &[(ModulationKind, u32, String)], out: &mut dyn Write) -> Result<(), CliError> {
    let multi = blocks.len() > 1;
    for (kind, exponent, csv) in blocks {
        match &args.out {
            Some(path) => {
                let path = resolve_path(path);
                let path = if multi { suffixed(&path, kind.name()) } else { path };
                write_file(&path, csv)?;
            }
            None => {
                if multi {
                    writeln!(out, "# mod={kind} exponent={exponent}")?;
                }
                out.write_all(csv.as_bytes())?;
            }
        }
    }
    Ok(())
}

fn frame_exponent(args: &SerArgs, field: &GaloisField) -> Result<u32, CliError> {
    if args.compressed {
        Ok(CyclotomicStructure::new(args.n, field.characteristic())?.count() as u32)
    } else {
        Ok(args.n as u32)
    }
}

fn es_grid(args: &SerArgs, kind: ModulationKind, grid: &[f64]) -> Vec<f64> {
    if args.eb_n0 {
        grid.iter().map(|&eb| eb_to_es_db(eb, kind.bits_per_symbol())).collect()
    } else {
        grid.to_vec()
    }
}

pub fn cmd_ser_analytic(args: &SerArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let grid = parse_snr_grid(&args.snr)?;
    let kinds = parse_modulations(&args.modulation)?;
    let field = args.field.field()?;
    if !(field.group_order() as usize).is_multiple_of(args.n) {
        return Err(FieldError::OrderNotAvailable {
            n: args.n as u64,
            group_order: field.group_order() as u64,
        }
        .into());
    }
    let exponent = frame_exponent(args, &field)?;
    let mut blocks = Vec::new();
    let mut series = Vec::new();
    for kind in kinds {
        let mut curve = ser_curve(kind, exponent, &es_grid(args, kind, &grid))?;
        // Report the grid in the units it was given.
        for (pt, &g) in curve.points.iter_mut().zip(&grid) {
            pt.es_n0_db = g;
        }
        series.push(Series {
            label: format!("{kind} P_E (exp {exponent})"),
            points: curve.points.iter().map(|p| (p.es_n0_db, p.p_e)).collect(),
        });
        series.push(Series {
            label: format!("{kind} P_M"),
            points: curve.points.iter().map(|p| (p.es_n0_db, p.p_m)).collect(),
        });
        blocks.push((kind, exponent, curve.to_csv()));
    }
    emit_csvs(args, &blocks, out)?;
    if let Some(plot) = &args.plot {
        let x_label = if args.eb_n0 { "Eb/N0 (dB)" } else { "Es/N0 (dB)" };
        let title = format!("Analytical SER, N = {}", args.n);
        write_file(
            &resolve_path(plot),
            &line_chart(&title, x_label, "probability", &series),
        )?;
    }
    Ok(())
}

pub fn cmd_ser_mc(
    args: &SerArgs,
    seed: u64,
    frames: u64,
    threads: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let grid = parse_snr_grid(&args.snr)?;
    let kinds = parse_modulations(&args.modulation)?;
    if frames == 0 {
        return Err(CliError::Usage("--frames must be at least 1".into()));
    }
    if threads == Some(0) {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let gdm = build_gdm(&args.field, args.n)?;
    let exponent = frame_exponent(args, gdm.field())?;
    let mut blocks = Vec::new();
    let mut series = Vec::new();
    for kind in kinds {
        let cfg = McConfig {
            gdm: gdm.clone(),
            kind,
            compressed: args.compressed,
            threads,
        };
        let mut csv = String::from("snr_db,p_m,p_e,ci_radius\n");
        let mut pts = Vec::new();
        for (&g, es) in grid.iter().zip(es_grid(args, kind, &grid)) {
            let r = monte_carlo_ser(&cfg, frames, &ChannelModel::new(es, seed))?;
            csv.push_str(&format!("{},{},{},{}\n", g, r.p_m(), r.p_e(), r.ci_radius()));
            pts.push((g, r.p_e()));
        }
        series.push(Series {
            label: format!("{kind} P_E (measured)"),
            points: pts,
        });
        blocks.push((kind, exponent, csv));
    }
    emit_csvs(args, &blocks, out)?;
    if let Some(plot) = &args.plot {
        let x_label = if args.eb_n0 { "Eb/N0 (dB)" } else { "Es/N0 (dB)" };
        let title = format!("Monte Carlo frame error rate, N = {}", args.n);
        write_file(
            &resolve_path(plot),
            &line_chart(&title, x_label, "probability", &series),
        )?;
    }
    Ok(())
}
