//! `spin7` — exact verification and decomposition on the command line.
//!
//! Subcommands:
//! - `verify`: run the identity suites, exit nonzero on any exact failure;
//! - `decompose`: split a form document into its invariant components;
//! - `rigidity`: evaluate the rigidity predicate from a catalog example,
//!   an explicit scalar curvature, or the geometric constants;
//! - `catalog`: print the built-in homogeneous examples (plus user records).
//!
//! All output is byte-deterministic for a fixed invocation.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spin7::cayley::{project2, project3, ThreeFormPart, TwoFormPart};
use spin7::form::KForm;
use spin7::rational::{format_rational, int, parse_rational, rat, Rational};
use spin7::report::{run, Suite};
use spin7::rigidity::{
    catalog, catalog_lookup, parse_catalog, rigidity_verdict, scalar_curvature, GeometryRecord,
    RigidityVerdict,
};

#[derive(Parser)]
#[command(name = "spin7", version, about = "Exact Spin(7) structure verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Clifford,
    Cayley,
    Spinor,
    Torsion,
    Rigidity,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a deterministic report
    Verify {
        /// Which suite to run
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Report format
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Treat normalization-conformance mismatches as failures
        #[arg(long)]
        strict_paper: bool,
    },
    /// Decompose a form document into invariant components
    Decompose {
        /// Form document (`grade k` header, then `i1 ... ik  p/q` lines)
        file: PathBuf,
        /// Components to print: 7,21 for grade 2; 8,48 for grade 3
        #[arg(long, value_delimiter = ',')]
        components: Vec<u8>,
    },
    /// Evaluate the rigidity predicate
    Rigidity(RigidityArgs),
    /// Print the homogeneous example catalog
    Catalog {
        /// Extra records: `name theta2 t2 dtheta [expected_scal]` per line
        file: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RigidityArgs {
    /// Built-in example name (su3, sp2t2)
    #[arg(long)]
    example: Option<String>,
    /// Scalar curvature, given directly as p/q
    #[arg(long)]
    scal: Option<String>,
    /// Squared norm of the Lee form
    #[arg(long)]
    theta2: Option<String>,
    /// Squared norm of the torsion
    #[arg(long)]
    t2: Option<String>,
    /// Codifferential of the Lee form
    #[arg(long)]
    dtheta: Option<String>,
    /// Smallest eigenvalue of the curvature operator (0 = flat instanton)
    #[arg(long, default_value = "0")]
    lambda: String,
}

enum CliError {
    /// Bad flags or flag combinations: exit 2.
    Usage(String),
    /// Runtime failure (unreadable or malformed input): exit 1.
    Runtime(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            suite,
            format,
            strict_paper,
        } => cmd_verify(suite, format, strict_paper),
        Command::Decompose { file, components } => cmd_decompose(&file, &components),
        Command::Rigidity(args) => cmd_rigidity(&args),
        Command::Catalog { file } => cmd_catalog(file.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn cmd_verify(
    suite: SuiteArg,
    format: FormatArg,
    strict: bool,
) -> Result<ExitCode, CliError> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::all().to_vec(),
        SuiteArg::Clifford => vec![Suite::Clifford],
        SuiteArg::Cayley => vec![Suite::Cayley],
        SuiteArg::Spinor => vec![Suite::Spinor],
        SuiteArg::Torsion => vec![Suite::Torsion],
        SuiteArg::Rigidity => vec![Suite::Rigidity],
    };
    let report = run(&suites, strict);
    match format {
        FormatArg::Text => print!("{}", report.render_text()),
        FormatArg::Structured => print!("{}", report.render_json()),
    }
    Ok(if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_decompose(file: &PathBuf, components: &[u8]) -> Result<ExitCode, CliError> {
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", file.display())))?;
    let form = KForm::parse_document(&text)
        .map_err(|e| CliError::Runtime(format!("{}: {e}", file.display())))?;
    let valid: &[u8] = match form.grade() {
        2 => &[7, 21],
        3 => &[8, 48],
        other => {
            return Err(CliError::Runtime(format!(
                "unsupported grade {other}: decompose handles grades 2 and 3"
            )))
        }
    };
    let requested: Vec<u8> = if components.is_empty() {
        valid.to_vec()
    } else {
        for c in components {
            if !valid.contains(c) {
                return Err(CliError::Usage(format!(
                    "component {c} does not exist for grade {} (valid: {valid:?})",
                    form.grade()
                )));
            }
        }
        components.to_vec()
    };
    let projectors = if form.grade() == 3 {
        Some(spin7::cayley::lambda3_projectors())
    } else {
        None
    };
    let mut out = String::new();
    for (i, c) in requested.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let part = match c {
            7 => project2(&form, TwoFormPart::Seven),
            21 => project2(&form, TwoFormPart::TwentyOne),
            8 => project3(
                &form,
                ThreeFormPart::Eight,
                projectors.as_ref().expect("built for grade 3"),
            ),
            48 => project3(
                &form,
                ThreeFormPart::FortyEight,
                projectors.as_ref().expect("built for grade 3"),
            ),
            _ => unreachable!("validated above"),
        }
        .map_err(|e| CliError::Runtime(e.to_string()))?;
        out.push_str(&format!("# component {c}\n"));
        out.push_str(&part.document());
        out.push_str(&format!("# norm_sq {}\n", format_rational(&part.norm_sq())));
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn parse_flag_rational(name: &str, value: &str) -> Result<Rational, CliError> {
    parse_rational(value)
        .ok_or_else(|| CliError::Usage(format!("--{name} expects a rational p/q, got `{value}`")))
}

fn cmd_rigidity(args: &RigidityArgs) -> Result<ExitCode, CliError> {
    let lambda = parse_flag_rational("lambda", &args.lambda)?;
    let norms_given = [&args.theta2, &args.t2, &args.dtheta];
    let any_norm = norms_given.iter().any(|o| o.is_some());
    let modes = usize::from(args.example.is_some())
        + usize::from(args.scal.is_some())
        + usize::from(any_norm);
    if modes != 1 {
        return Err(CliError::Usage(
            "select exactly one input mode: --example NAME, --scal P/Q, \
             or --theta2 P/Q --t2 P/Q --dtheta P/Q"
                .into(),
        ));
    }

    let mut lines = Vec::new();
    let verdict: RigidityVerdict = if let Some(name) = &args.example {
        let record = catalog_lookup(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown example `{name}` (built-ins: su3, sp2t2)"
            ))
        })?;
        lines.push(format!("input: catalog example {}", record.name));
        lines.push(format!(
            "theta2 = {}",
            format_rational(&record.theta_norm_sq)
        ));
        lines.push(format!("t2 = {}", format_rational(&record.torsion_norm_sq)));
        lines.push(format!("dtheta = {}", format_rational(&record.delta_theta)));
        let scal = scalar_curvature(
            &record.theta_norm_sq,
            &record.torsion_norm_sq,
            &record.delta_theta,
        )
        .map_err(|e| CliError::Runtime(e.to_string()))?;
        rigidity_verdict(&lambda, &scal)
    } else if let Some(scal_text) = &args.scal {
        let scal = parse_flag_rational("scal", scal_text)?;
        lines.push("input: explicit scalar curvature".into());
        rigidity_verdict(&lambda, &scal)
    } else {
        let theta2 = parse_flag_rational(
            "theta2",
            args.theta2.as_deref().ok_or_else(|| {
                CliError::Usage("norm mode requires --theta2, --t2 and --dtheta".into())
            })?,
        )?;
        let t2 = parse_flag_rational(
            "t2",
            args.t2.as_deref().ok_or_else(|| {
                CliError::Usage("norm mode requires --theta2, --t2 and --dtheta".into())
            })?,
        )?;
        let dtheta = parse_flag_rational(
            "dtheta",
            args.dtheta.as_deref().ok_or_else(|| {
                CliError::Usage("norm mode requires --theta2, --t2 and --dtheta".into())
            })?,
        )?;
        lines.push("input: geometric constants".into());
        lines.push(format!("theta2 = {}", format_rational(&theta2)));
        lines.push(format!("t2 = {}", format_rational(&t2)));
        lines.push(format!("dtheta = {}", format_rational(&dtheta)));
        let scal = scalar_curvature(&theta2, &t2, &dtheta)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        rigidity_verdict(&lambda, &scal)
    };

    lines.push(format!("Scal = {}", format_rational(&verdict.scal)));
    lines.push(format!("lambda = {}", format_rational(&verdict.lambda_l)));
    lines.push(format!(
        "threshold = {}",
        format_rational(&verdict.threshold)
    ));
    lines.push(format!("margin = {}", format_rational(&verdict.margin)));
    lines.push(format!(
        "verdict: {}",
        if verdict.rigid { "RIGID" } else { "NOT RIGID" }
    ));
    println!("{}", lines.join("\n"));
    Ok(ExitCode::SUCCESS)
}

fn catalog_line(record: &GeometryRecord) -> Result<String, CliError> {
    let scal = scalar_curvature(
        &record.theta_norm_sq,
        &record.torsion_norm_sq,
        &record.delta_theta,
    )
    .map_err(|e| CliError::Runtime(format!("{}: {e}", record.name)))?;
    let verdict = rigidity_verdict(&int(0), &scal);
    let expected = match &record.expected_scal {
        Some(e) if e == &scal => format!(", expected {} (match)", format_rational(e)),
        Some(e) => format!(", expected {} (MISMATCH)", format_rational(e)),
        None => String::new(),
    };
    Ok(format!(
        "  {}: theta2 = {}, t2 = {}, dtheta = {}, Scal = {}{}, threshold = {}, margin = {}, verdict: {}",
        record.name,
        format_rational(&record.theta_norm_sq),
        format_rational(&record.torsion_norm_sq),
        format_rational(&record.delta_theta),
        format_rational(&scal),
        expected,
        format_rational(&verdict.threshold),
        format_rational(&verdict.margin),
        if verdict.rigid { "RIGID" } else { "NOT RIGID" },
    ))
}

fn cmd_catalog(file: Option<&std::path::Path>) -> Result<ExitCode, CliError> {
    let mut lines = vec!["catalog (flat instanton, lambda = 0)".to_string()];
    for record in catalog() {
        lines.push(catalog_line(&record)?);
    }
    if let Some(path) = file {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
        let records = parse_catalog(&text)
            .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;
        lines.push(format!("user records ({})", records.len()));
        for record in &records {
            lines.push(catalog_line(record)?);
        }
    }
    lines.push(format!(
        "pointwise flat-model ratio t2/theta2 = {} (catalog values use their own normalization)",
        format_rational(&rat(343, 36))
    ));
    println!("{}", lines.join("\n"));
    Ok(ExitCode::SUCCESS)
}
