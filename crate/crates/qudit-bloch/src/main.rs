//! Command-line interface for basis generation, Bloch encoding/decoding and
//! witness evaluation.
//!
//! Exit codes are a stable contract:
//!   0 success
//!   1 usage error (bad flags, family, dimension or parameter range)
//!   2 validation failure (input files that parse or validate badly)
//!   3 numeric failure (non-convergence, non-finite values)

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qudit_bloch::bloch::{
    decompose, decompose_bipartite, radius_bound, reconstruct, Reconstruction,
};
use qudit_bloch::io::{BasisFile, BipartiteFile, BlochFile, MatrixFile};
use qudit_bloch::linalg::hs_inner;
use qudit_bloch::spin1::witness_expectation_terms;
use qudit_bloch::states::isotropic_state;
use qudit_bloch::witness::{
    eval_witness, guess_witness, hs_measure_iso, max_violation_iso, nearest_separable_iso,
    optimal_witness_iso, verify_witness,
};
use qudit_bloch::{BasisFamily, DensityMatrix, Error, OperatorBasis, DEFAULT_TOL};

/// Largest dimension the CLI accepts; library code itself has no hard cap.
const MAX_CLI_DIM: usize = 32;

#[derive(Parser)]
#[command(
    name = "qudit-bloch",
    version,
    about = "Operator bases, Bloch vectors and entanglement witnesses for qudits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    /// Human-readable text.
    Text,
    /// One JSON object per line.
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ggm,
    Pob,
    Wob,
}

impl From<FamilyArg> for BasisFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Ggm => BasisFamily::Ggm,
            FamilyArg::Pob => BasisFamily::Pob,
            FamilyArg::Wob => BasisFamily::Wob,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate an operator basis and report its orthogonality constant.
    Basis {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Dimension d (2..=32).
        #[arg(long)]
        dim: usize,
        /// Write the basis archive (JSON) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a density matrix file into a Bloch vector.
    Decompose {
        /// Input matrix file (JSON).
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Treat the state as two-qudit and emit n/m/c coefficient grids.
        #[arg(long)]
        bipartite: bool,
        /// Write the Bloch vector (or bipartite coefficients) here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Validation tolerance.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Rebuild a matrix from a Bloch vector file.
    Reconstruct {
        /// Input Bloch vector file (JSON).
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the reconstructed matrix here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Entanglement witness construction and verification.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Spin-1 measurement report for a two-qutrit state.
    Spin1Report {
        /// Input 9x9 matrix file (JSON).
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Closed-form treatment of the isotropic two-qudit state.
    Iso(IsoArgs),
    /// Guess-method test of a candidate nearest separable state.
    Guess(GuessArgs),
}

#[derive(Args)]
struct IsoArgs {
    /// Local dimension d (2..=32).
    #[arg(long)]
    dim: usize,
    /// Mixing parameter; must lie in the entangled range (1/(d+1), 1].
    #[arg(long)]
    alpha: f64,
    /// Basis used to assemble the witness operator.
    #[arg(long, value_enum, default_value_t = FamilyArg::Ggm)]
    family: FamilyArg,
    /// Product-state samples for the verification sweep.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct GuessArgs {
    /// Candidate nearest separable state (matrix file).
    #[arg(long)]
    guess: PathBuf,
    /// Entangled target state (matrix file).
    #[arg(long)]
    target: PathBuf,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(err: impl std::fmt::Display) -> Self {
        Failure {
            code: 1,
            message: err.to_string(),
        }
    }

    /// Input files that fail to parse or validate; numeric breakdowns keep
    /// their own code.
    fn validation(err: Error) -> Self {
        let code = match err {
            Error::NoConvergence { .. } | Error::NotReal { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }

    fn numeric(err: Error) -> Self {
        Failure {
            code: 3,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not errors.
            if err.use_stderr() {
                eprintln!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    let format = cli.format;
    let result = match cli.command {
        Command::Basis { family, dim, out } => cmd_basis(family.into(), dim, out, format),
        Command::Decompose {
            input,
            family,
            bipartite,
            out,
            tol,
        } => cmd_decompose(&input, family.into(), bipartite, out, tol, format),
        Command::Reconstruct { input, out, tol } => cmd_reconstruct(&input, out, tol, format),
        Command::Witness(WitnessCommand::Iso(args)) => cmd_witness_iso(&args, format),
        Command::Witness(WitnessCommand::Guess(args)) => cmd_witness_guess(&args, format),
        Command::Spin1Report { input, tol } => cmd_spin1_report(&input, tol, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn check_cli_dim(d: usize) -> Result<(), Failure> {
    if !(2..=MAX_CLI_DIM).contains(&d) {
        return Err(Failure::usage(format!(
            "dimension {d} out of supported range 2..={MAX_CLI_DIM}"
        )));
    }
    Ok(())
}

fn emit(format: Format, record: serde_json::Value, text: String) {
    match format {
        Format::Text => println!("{text}"),
        Format::JsonLines => println!("{record}"),
    }
}

fn cmd_basis(
    family: BasisFamily,
    dim: usize,
    out: Option<PathBuf>,
    format: Format,
) -> Result<(), Failure> {
    check_cli_dim(dim)?;
    let basis = OperatorBasis::generate(family, dim).map_err(Failure::usage)?;

    // Verify the Gram matrix really is N·1 before reporting N.
    let n = basis.norm_constant();
    let mut max_dev: f64 = 0.0;
    for (i, (_, a)) in basis.elements().iter().enumerate() {
        for (j, (_, b)) in basis.elements().iter().enumerate() {
            let want = if i == j { n } else { 0.0 };
            let got = hs_inner(a, b).map_err(Failure::numeric)?;
            max_dev = max_dev.max((got.re - want).abs()).max(got.im.abs());
        }
    }
    if max_dev > 1e-9 {
        return Err(Failure {
            code: 3,
            message: format!("basis failed its orthogonality self-check (deviation {max_dev:e})"),
        });
    }

    if let Some(path) = &out {
        BasisFile::from_basis(&basis)
            .write(path)
            .map_err(Failure::validation)?;
    }
    emit(
        format,
        serde_json::json!({
            "family": family.tag(),
            "dim": dim,
            "elements": basis.len(),
            "norm_constant": n,
            "gram_deviation": max_dev,
            "out": out.as_ref().map(|p| p.display().to_string()),
        }),
        format!(
            "{} basis for d={}: {} elements, Tr(Ai†Aj) = N δij with N = {} (verified, max deviation {:.1e})",
            family.tag(),
            dim,
            basis.len(),
            n,
            max_dev
        ),
    );
    Ok(())
}

fn load_density(path: &std::path::Path, tol: f64) -> Result<DensityMatrix, Failure> {
    let matrix = MatrixFile::read(path)
        .and_then(|f| f.to_matrix())
        .map_err(Failure::validation)?;
    DensityMatrix::new(matrix, tol).map_err(Failure::validation)
}

fn cmd_decompose(
    input: &std::path::Path,
    family: BasisFamily,
    bipartite: bool,
    out: Option<PathBuf>,
    tol: f64,
    format: Format,
) -> Result<(), Failure> {
    let rho = load_density(input, tol)?;
    if bipartite {
        let dec = decompose_bipartite(&rho, family).map_err(Failure::validation)?;
        let file = BipartiteFile::from_decomposition(&dec).map_err(Failure::numeric)?;
        if let Some(path) = &out {
            file.write(path).map_err(Failure::validation)?;
        }
        let max_c = dec.c_matrix.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let labels = dec.labels().map_err(Failure::numeric)?;
        emit(
            format,
            serde_json::to_value(&file).map_err(|e| Failure::numeric(e.into()))?,
            {
                let mut text = format!(
                    "bipartite {} decomposition, local d={}: max |c| = {:.6}",
                    family.tag(),
                    dec.dim,
                    max_c
                );
                for (i, li) in labels.iter().enumerate() {
                    for (j, lj) in labels.iter().enumerate() {
                        let c = dec.c(i, j);
                        if c.norm() > 1e-9 {
                            text.push_str(&format!(
                                "\n  c[{li}][{lj}] = {:+.6}{:+.6}i",
                                c.re, c.im
                            ));
                        }
                    }
                }
                text
            },
        );
        return Ok(());
    }

    let b = decompose(&rho, family).map_err(Failure::validation)?;
    let file = BlochFile::from_bloch_vector(&b).map_err(Failure::numeric)?;
    if let Some(path) = &out {
        file.write(path).map_err(Failure::validation)?;
    }
    let bound = radius_bound(family, rho.dim());
    emit(
        format,
        serde_json::json!({
            "family": family.tag(),
            "dim": rho.dim(),
            "radius": b.radius(),
            "radius_bound": bound,
            "out": out.as_ref().map(|p| p.display().to_string()),
        }),
        format!(
            "{} Bloch vector, d={}: radius {:.9} (family bound {:.9})",
            family.tag(),
            rho.dim(),
            b.radius(),
            bound
        ),
    );
    Ok(())
}

fn cmd_reconstruct(
    input: &std::path::Path,
    out: Option<PathBuf>,
    tol: f64,
    format: Format,
) -> Result<(), Failure> {
    let bloch = BlochFile::read(input)
        .and_then(|f| f.to_bloch_vector())
        .map_err(Failure::validation)?;
    let rec = reconstruct(&bloch, tol).map_err(Failure::validation)?;
    if let Some(path) = &out {
        MatrixFile::from_matrix(rec.matrix())
            .write(path)
            .map_err(Failure::validation)?;
    }
    match &rec {
        Reconstruction::State(rho) => emit(
            format,
            serde_json::json!({
                "state": true,
                "dim": rho.dim(),
                "purity": rho.purity(),
            }),
            format!(
                "reconstructed a valid state, d={}, purity {:.9}",
                rho.dim(),
                rho.purity()
            ),
        ),
        Reconstruction::NonState {
            min_eigenvalue, ..
        } => emit(
            format,
            serde_json::json!({
                "state": false,
                "min_eigenvalue": min_eigenvalue,
            }),
            format!(
                "vector lies outside the state space: min eigenvalue {min_eigenvalue:.6e} < 0 \
                 (matrix written anyway)"
            ),
        ),
    }
    Ok(())
}

fn print_verdict_table(
    format: Format,
    verdict: &qudit_bloch::WitnessVerdict,
    extra: serde_json::Value,
    header: &str,
) {
    emit(
        format,
        serde_json::json!({
            "record": "verdict",
            "min_sep_expectation": verdict.min_sep_expectation,
            "value_on_target": verdict.value_on_target,
            "n_samples": verdict.n_samples,
            "detected": verdict.detected,
            "extra": extra,
        }),
        format!(
            "{header}\n  samples            {}\n  min ⟨A⟩ separable  {:+.9}\n  ⟨A⟩ on target      {:+.9}\n  detected           {}",
            verdict.n_samples, verdict.min_sep_expectation, verdict.value_on_target, verdict.detected
        ),
    );
}

fn cmd_witness_iso(args: &IsoArgs, format: Format) -> Result<(), Failure> {
    check_cli_dim(args.dim)?;
    let d = args.dim;
    let family: BasisFamily = args.family.into();
    let measure = hs_measure_iso(d, args.alpha).map_err(Failure::usage)?;
    let violation = max_violation_iso(d, args.alpha).map_err(Failure::usage)?;
    let witness = optimal_witness_iso(d, family).map_err(Failure::numeric)?;
    let rho = isotropic_state(d, args.alpha).map_err(Failure::usage)?;
    let value = eval_witness(&witness, &rho).map_err(Failure::numeric)?;
    let rho0 = nearest_separable_iso(d).map_err(Failure::numeric)?;
    let tangent = eval_witness(&witness, &rho0).map_err(Failure::numeric)?;
    let verdict = verify_witness(&witness, d, args.samples, args.seed).map_err(Failure::numeric)?;

    emit(
        format,
        serde_json::json!({
            "record": "iso",
            "dim": d,
            "alpha": args.alpha,
            "family": family.tag(),
            "hs_measure": measure,
            "max_violation": violation,
            "witness_on_state": value,
            "witness_on_nearest_separable": tangent,
        }),
        format!(
            "isotropic state d={d}, alpha={}\n  D  (HS measure)     {measure:.7}\n  B  (max violation)  {violation:.7}\n  ⟨A⟩ on state        {value:+.7}\n  ⟨A⟩ on ρ₀           {tangent:+.2e}",
            args.alpha
        ),
    );
    print_verdict_table(format, &verdict, serde_json::json!({}), "verification sweep");

    if d == 3 {
        let report = witness_expectation_terms(&rho).map_err(Failure::numeric)?;
        print_spin1_report(format, &report);
    }
    Ok(())
}

fn cmd_witness_guess(args: &GuessArgs, format: Format) -> Result<(), Failure> {
    let guess = load_density(&args.guess, args.tol)?;
    let target = load_density(&args.target, args.tol)?;
    let witness = guess_witness(&guess, &target).map_err(Failure::validation)?;
    let verdict =
        verify_witness(&witness, witness.dim(), args.samples, args.seed).map_err(Failure::numeric)?;

    let accepted = verdict.detected;
    let headline = if accepted {
        "guess accepted: candidate operator is a witness on every sample \
         (guess is consistent with the nearest separable state)"
    } else {
        "guess rejected: candidate operator fails the witness test"
    };
    print_verdict_table(
        format,
        &verdict,
        serde_json::json!({
            "accepted": accepted,
            "direction_norm": witness.direction_norm(),
        }),
        headline,
    );
    if format == Format::Text {
        println!("  ‖ρ̃ − ρ_ent‖        {:.9}", witness.direction_norm());
    }
    Ok(())
}

fn print_spin1_report(format: Format, report: &qudit_bloch::spin1::ExpectationReport) {
    match format {
        Format::Text => {
            println!("spin-1 measurement report (ħ = 1)");
            println!("  {:<22} {:>12} {:>8}", "observable", "value", "weight");
            for term in &report.terms {
                println!(
                    "  {:<22} {:>12.7} {:>8.3}",
                    term.observable, term.value, term.lambda_coefficient
                );
            }
            println!("  assembled ⟨Λ⟩      {:+.9}", report.lambda_expectation);
            println!("  assembled ⟨A_iso⟩  {:+.9}", report.witness_expectation);
        }
        Format::JsonLines => {
            for term in &report.terms {
                println!(
                    "{}",
                    serde_json::json!({
                        "record": "spin1-term",
                        "observable": term.observable,
                        "value": term.value,
                        "lambda_coefficient": term.lambda_coefficient,
                    })
                );
            }
            println!(
                "{}",
                serde_json::json!({
                    "record": "spin1-summary",
                    "lambda_expectation": report.lambda_expectation,
                    "witness_expectation": report.witness_expectation,
                })
            );
        }
    }
}

fn cmd_spin1_report(
    input: &std::path::Path,
    tol: f64,
    format: Format,
) -> Result<(), Failure> {
    let rho = load_density(input, tol)?;
    let report = witness_expectation_terms(&rho).map_err(Failure::validation)?;
    print_spin1_report(format, &report);
    Ok(())
}
