mod render;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use eqres::eqmod::{lattice, splice, ModuleModel, Placed};
use eqres::koszul_oracle::{BRUTE_MAX_L, BRUTE_MAX_N, BRUTE_MAX_SIZE};
use eqres::partitions::Partition;
use eqres::rep_ring::DimContext;
use eqres::report::CheckReport;
use eqres::resolutions::{betti_table, ext_simples};
use eqres::suites::{instances, GridBounds, Suite};
use eqres::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_GUARDRAIL: u8 = 3;

#[derive(Parser)]
#[command(name = "eqres", version, about = "Resolutions of equivariant modules over Sym V")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti table of M_λ, of M_λ/V^l M_λ with --l, or of P_λ with --proj
    Tor(TorArgs),
    /// Lattice diagram of a module
    Lattice(LatticeArgs),
    /// Run a property grid
    Verify(VerifyArgs),
    /// Degrees i with Ext^i(S_λ, S_η) ≠ 0
    Ext(ExtArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct TorArgs {
    #[arg(long)]
    lambda: Partition,
    /// Truncation level
    #[arg(long, conflicts_with = "proj")]
    l: Option<usize>,
    /// Use the free module P_λ = R ⊗ S_λ instead
    #[arg(long)]
    proj: bool,
    #[arg(long)]
    n: usize,
    /// Largest homological index shown
    #[arg(long)]
    imax: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("module").required(true).args(["proj", "elem", "trunc", "splice"])))]
struct LatticeArgs {
    /// P_λ = R ⊗ S_λ
    #[arg(long, value_name = "LAMBDA")]
    proj: Option<Partition>,
    /// M_λ
    #[arg(long, value_name = "LAMBDA")]
    elem: Option<Partition>,
    /// M_λ/V^l M_λ, with --l
    #[arg(long, value_name = "LAMBDA", requires = "l")]
    trunc: Option<Partition>,
    #[arg(long)]
    l: Option<usize>,
    /// Branches such as "2,1@3;3,1@4", with --glue
    #[arg(long, requires = "glue")]
    splice: Option<String>,
    /// Generator identified across the branches, such as "5,1@6"
    #[arg(long)]
    glue: Option<Placed>,
    /// Required for --proj and --trunc
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    dmax: usize,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long, visible_alias = "n")]
    max_n: Option<usize>,
    /// Truncation levels, Pieri k and Sam strip sizes
    #[arg(long)]
    max_l: Option<usize>,
    /// Degrees past |λ| to compare characters in
    #[arg(long)]
    extra_degrees: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ExtArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    eta: Partition,
    #[arg(long)]
    n: usize,
    /// Largest i considered; defaults to n
    #[arg(long)]
    imax: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Failure {
    Usage(String),
    Guardrail(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Guardrail(_) => Failure::Guardrail(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn ctx(n: usize) -> Result<DimContext, Failure> {
    Ok(DimContext::new(n)?)
}

fn only_formats(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(
            format!("format {format:?} is not available for this command").to_lowercase(),
        ))
    }
}

fn tor(args: TorArgs) -> Result<String, Failure> {
    only_formats(args.format, &[Format::Text, Format::Json])?;
    let c = ctx(args.n)?;
    let m = match args.l {
        Some(l) => ModuleModel::truncation(args.lambda, l, c)?,
        None if args.proj => ModuleModel::projective(args.lambda, c),
        None => ModuleModel::elementary(args.lambda, c),
    };
    let mut table = betti_table(&m);
    if let Some(imax) = args.imax {
        table.entries.retain(|e| e.i <= imax);
    }
    Ok(match args.format {
        Format::Json => render::tor_json(&m, &table),
        _ => render::tor_text(&m, &table),
    })
}

fn lattice_cmd(args: LatticeArgs) -> Result<String, Failure> {
    only_formats(args.format, &[Format::Dot, Format::Json, Format::Text])?;
    let need_n = || {
        args.n
            .ok_or_else(|| Failure::Usage("--n is required for this module".into()))
            .and_then(ctx)
    };
    let (title, model) = if let Some(lambda) = &args.proj {
        let m = ModuleModel::projective(lambda.clone(), need_n()?);
        (m.to_string(), lattice(&m, args.dmax)?)
    } else if let Some(lambda) = &args.trunc {
        let l = args.l.expect("clap enforces --l");
        let m = ModuleModel::truncation(lambda.clone(), l, need_n()?)?;
        (m.to_string(), lattice(&m, args.dmax)?)
    } else if let Some(lambda) = &args.elem {
        // the first-row chain does not depend on n once S_λ ≠ 0
        let n = args.n.unwrap_or(lambda.len().max(1));
        let m = ModuleModel::elementary(lambda.clone(), ctx(n)?);
        (m.to_string(), lattice(&m, args.dmax)?)
    } else {
        let list = args.splice.as_deref().expect("clap enforces one module");
        let branches = list.split(';').map(str::parse).collect::<Result<Vec<Placed>, _>>()?;
        let glue = args.glue.clone().expect("clap enforces --glue");
        let names: Vec<String> = branches.iter().map(ToString::to_string).collect();
        (
            format!("splice {} at {glue}", names.join(" + ")),
            splice(&branches, &glue, args.dmax)?,
        )
    };
    Ok(match args.format {
        Format::Dot => render::lattice_dot(&title, &model),
        Format::Json => render::lattice_json(&title, args.dmax, &model),
        Format::Text => render::lattice_text(&title, &model),
    })
}

fn verify(args: VerifyArgs) -> Result<String, Failure> {
    only_formats(args.format, &[Format::Text, Format::Json])?;
    let mut bounds: GridBounds = args.suite.default_bounds();
    bounds.max_size = args.max_size.unwrap_or(bounds.max_size);
    bounds.max_n = args.max_n.unwrap_or(bounds.max_n);
    bounds.max_l = args.max_l.unwrap_or(bounds.max_l);
    bounds.extra_degrees = args.extra_degrees.unwrap_or(bounds.extra_degrees);
    if args.suite == Suite::Brute
        && (bounds.max_size > BRUTE_MAX_SIZE || bounds.max_n > BRUTE_MAX_N || bounds.max_l > BRUTE_MAX_L)
    {
        return Err(Failure::Guardrail(format!(
            "brute-force homology is limited to --max-size {BRUTE_MAX_SIZE}, --max-n {BRUTE_MAX_N}, --max-l {BRUTE_MAX_L}"
        )));
    }
    let grid = instances(args.suite, bounds);
    let outcomes: Vec<Result<CheckReport, Error>> = grid.par_iter().map(|x| x.run()).collect();
    let mut reports = Vec::with_capacity(outcomes.len());
    for (x, outcome) in grid.iter().zip(outcomes) {
        match outcome {
            Ok(r) => reports.push(r),
            Err(e @ Error::Guardrail(_)) => return Err(Failure::Guardrail(format!("{x}: {e}"))),
            Err(e) => reports.push(CheckReport::new(x.to_string(), vec![e.to_string()])),
        }
    }
    let doc = match args.format {
        Format::Json => render::verify_json(args.suite, bounds, &reports),
        _ => render::verify_text(args.suite, &reports),
    };
    if reports.iter().all(|r| r.passed) {
        Ok(doc)
    } else {
        Err(Failure::Verify(doc))
    }
}

fn ext(args: ExtArgs) -> Result<String, Failure> {
    only_formats(args.format, &[Format::Text, Format::Json])?;
    let c = ctx(args.n)?;
    let degrees: Vec<usize> = (0..=args.imax.unwrap_or(args.n))
        .filter(|&i| ext_simples(&args.lambda, &args.eta, i, c) == 1)
        .collect();
    Ok(match args.format {
        Format::Json => render::ext_json(&args.lambda, &args.eta, args.n, &degrees),
        _ => render::ext_text(&args.lambda, &args.eta, &degrees),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Tor(a) => tor(a),
        Command::Lattice(a) => lattice_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Ext(a) => ext(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(out)) => {
            print!("{out}");
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Guardrail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_GUARDRAIL)
        }
    }
}
