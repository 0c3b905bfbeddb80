//! `dcmx` — decompositions of dual complex matrices from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 data/computation error,
//! 3 verification failure.

use clap::{Args, Parser, Subcommand};
use dcmx_cli::dcmx_file::{load_dcmx, save_dcmx};
use dcmx_cli::pgm::load_pgm;
use dcmx_cli::pipeline::run_image;
use dcmx_cli::report::{format_dual, sigma_report};
use dcmx_cli::verify::verify_all;
use dcmx_cli::{CliError, CliResult};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dcmx",
    version,
    about = "Dual complex matrix decompositions: SVD, truncation, image compression"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Singular value decomposition of a .dcmx matrix file.
    Svd(SvdArgs),
    /// Re-run the built-in reference examples and report pass/fail.
    VerifyExamples(VerifyArgs),
    /// Compress a grayscale image pair via truncated decompositions.
    Image(ImageArgs),
}

#[derive(Args)]
struct SvdArgs {
    /// Input matrix (.dcmx format).
    input: PathBuf,
    /// Eigenvalue clustering tolerance for the standard spectrum of A*A.
    /// Raise it (e.g. to 1e-2) for matrices with repeated singular values
    /// stored at low precision.
    #[arg(long)]
    cluster_tol: Option<f64>,
    /// Threshold below which a standard singular value counts as zero.
    #[arg(long)]
    zero_tol: Option<f64>,
    /// Digits after the decimal point in the report.
    #[arg(long, default_value_t = 4)]
    precision: usize,
    /// Also write the factors (v.dcmx, sigma.dcmx, u.dcmx) to a directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Override every example's comparison tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct ImageArgs {
    /// Image providing the standard part (PGM, P2 or P5).
    std_image: PathBuf,
    /// Image providing the infinitesimal part; defaults to the first image.
    inf_image: Option<PathBuf>,
    /// Comma-separated truncation ranks, e.g. 5,15,25,35,45.
    #[arg(long, required = true, value_delimiter = ',')]
    k: Vec<usize>,
    /// Output directory for errors.csv and reconstructed images.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Digits after the decimal point in the on-screen error table.
    #[arg(long, default_value_t = 4)]
    precision: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Clap handles --help/--version as "errors" with success status.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(verified) => {
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns `Ok(false)` only for verification failures (exit code 3).
fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Svd(args) => {
            cmd_svd(args)?;
            Ok(true)
        }
        Command::VerifyExamples(args) => cmd_verify(args),
        Command::Image(args) => {
            cmd_image(args)?;
            Ok(true)
        }
    }
}

fn cmd_svd(args: SvdArgs) -> CliResult<()> {
    let a = load_dcmx(&args.input)?;
    let options = dcmx::SvdOptions {
        cluster_tol: args.cluster_tol,
        zero_tol: args.zero_tol,
    };
    let s = dcmx::svd_with(&a, &options).map_err(CliError::Core)?;
    print!("{}", sigma_report(&s, args.precision));
    for w in &s.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(dir) = args.out {
        std::fs::create_dir_all(&dir)
            .map_err(|e| CliError::io(&dir.display().to_string(), e))?;
        save_dcmx(&s.v, &dir.join("v.dcmx"))?;
        save_dcmx(&s.sigma_matrix(), &dir.join("sigma.dcmx"))?;
        save_dcmx(&s.u, &dir.join("u.dcmx"))?;
        println!("factors written to {}", dir.display());
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> CliResult<bool> {
    let outcomes = verify_all(args.tol)?;
    let mut all_ok = true;
    for o in &outcomes {
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!("[{verdict}] {}: {}", o.name, o.lines[0]);
        if !o.passed {
            all_ok = false;
            for line in &o.lines[1..] {
                println!("       {line}");
            }
        }
    }
    println!(
        "{} of {} examples passed",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    );
    Ok(all_ok)
}

fn cmd_image(args: ImageArgs) -> CliResult<()> {
    let std_img = load_pgm(&args.std_image)?;
    let inf_img = match &args.inf_image {
        Some(path) => load_pgm(path)?,
        None => std_img.clone(),
    };
    let summary = run_image(&std_img, &inf_img, &args.k, args.out.as_deref())?;
    println!(
        "decomposed {}x{} spectrum (arank {}, rank {})",
        std_img.height(),
        std_img.width(),
        summary.svd.arank,
        summary.svd.rank
    );
    println!("k    relative error");
    for (k, err) in &summary.errors {
        println!("{k:<4} {}", format_dual(*err, args.precision));
    }
    for path in &summary.written {
        println!("wrote {}", path.display());
    }
    Ok(())
}
