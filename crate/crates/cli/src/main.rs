use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kaplansky_core::{
    check_f_system, check_reduction_chain, family_f_table, family_unit, search, verify_unit,
    Builtin, ExpRange, FamilyParams, GroupRingElem, PrimeChar, SearchBox, SearchConfig,
    SearchError, Strategy, DEFAULT_MAX_CANDIDATES,
};

const EXIT_NOT_VERIFIED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

const THREADS_ENV: &str = "KAPLANSKY_THREADS";

/// Construct, verify and search for units of F_d[P].
#[derive(Parser, Debug)]
#[command(name = "kaplansky", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that an element is a unit via the adjoint; exit 0 iff verified.
    Verify(Selector),
    /// Print an element.
    Construct {
        #[command(flatten)]
        selector: Selector,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a meet-in-the-middle unit search and write the result file.
    Search(SearchArgs),
    /// Evaluate every identity of the derivation for one family member.
    CheckIdentities(FamilyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// gardam, char3-base, char3-flipped or family
    #[arg(long, value_parser = parse_builtin_name)]
    builtin: Option<String>,
    /// Family member selected by --char, --t and --w.
    #[arg(long)]
    family: bool,
    /// Element JSON file.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Selector {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    params: OptionalFamilyArgs,
}

#[derive(Args, Debug)]
struct OptionalFamilyArgs {
    #[arg(long = "char", value_name = "D", value_parser = parse_prime)]
    characteristic: Option<PrimeChar>,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    w: Option<i32>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long = "char", value_name = "D", value_parser = parse_prime)]
    characteristic: PrimeChar,
    #[arg(long, allow_negative_numbers = true)]
    t: i32,
    #[arg(long, allow_negative_numbers = true)]
    w: i32,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long = "char", value_name = "D", value_parser = parse_prime)]
    characteristic: PrimeChar,
    #[arg(long, value_enum, default_value_t = StrategyArg::Full)]
    strategy: StrategyArg,
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    zmin: i32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    zmax: i32,
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    xmin: i32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    xmax: i32,
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    ymin: i32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    ymax: i32,
    /// Result file; omitted means only the hit count is printed.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Refuse boxes whose two join halves hold more candidates than this.
    #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
    max_candidates: u128,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Full,
    Ansatz,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Full => Strategy::Full,
            StrategyArg::Ansatz => Strategy::Ansatz,
        }
    }
}

fn parse_prime(s: &str) -> Result<PrimeChar, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    PrimeChar::new(n).map_err(|e| e.to_string())
}

fn parse_builtin_name(s: &str) -> Result<String, String> {
    if s == "family" || s.parse::<Builtin>().is_ok() {
        Ok(s.to_owned())
    } else {
        Err("expected gardam, char3-base, char3-flipped or family".into())
    }
}

/// Failure after argument parsing, mapped onto the exit-code table.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

fn load(sel: &Selector) -> Result<GroupRingElem, Failure> {
    let src = &sel.source;
    if let Some(path) = &src.input {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        return GroupRingElem::from_json(&text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())));
    }
    match src.builtin.as_deref() {
        Some("family") | None => {
            let p = &sel.params;
            match (p.characteristic, p.t, p.w) {
                (Some(d), Some(t), Some(w)) => FamilyParams::new(d, t, w)
                    .map(family_unit)
                    .map_err(|e| Failure::usage(e.to_string())),
                _ => Err(Failure::usage("a family member needs --char, --t and --w")),
            }
        }
        Some(name) => Ok(name.parse::<Builtin>().expect("validated by clap").build()),
    }
}

fn aligned_text(u: &GroupRingElem) -> String {
    let rows = [
        ("characteristic", u.characteristic().to_string()),
        ("p", u.p().to_string()),
        ("q", u.q().to_string()),
        ("r", u.r().to_string()),
        ("s", u.s().to_string()),
    ];
    rows.iter()
        .map(|(k, v)| format!("{:>14}: {v}\n", k))
        .collect()
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn run_verify(sel: &Selector) -> Result<(), Failure> {
    let u = load(sel)?;
    let verdict = verify_unit(&u);
    if verdict.is_verified() {
        println!("verified");
        Ok(())
    } else {
        println!("not_verified_by_adjoint");
        let len = |r: &Option<GroupRingElem>| r.as_ref().map_or(0, GroupRingElem::support_size);
        eprintln!(
            "left residual has {} terms, right residual has {} terms",
            len(&verdict.left_residual),
            len(&verdict.right_residual)
        );
        Err(Failure {
            code: EXIT_NOT_VERIFIED,
            message: String::new(),
        })
    }
}

fn run_construct(sel: &Selector, format: Format) -> Result<(), Failure> {
    let u = load(sel)?;
    match format {
        Format::Json => println!("{}", u.to_json()),
        Format::Text => print!("{}", aligned_text(&u)),
    }
    Ok(())
}

fn run_search(args: &SearchArgs) -> Result<(), Failure> {
    let bx = SearchBox::new(
        args.characteristic,
        ExpRange::new(args.xmin, args.xmax),
        ExpRange::new(args.ymin, args.ymax),
        ExpRange::new(args.zmin, args.zmax),
        args.strategy.into(),
    )
    .map_err(|e| Failure::usage(e.to_string()))?;
    let config = SearchConfig {
        threads: threads_from_env()?,
        max_candidates: args.max_candidates,
    };

    let start = Instant::now();
    let report = search(&bx, &config).map_err(|e| match e {
        SearchError::Infeasible { estimate, ceiling } => Failure {
            code: EXIT_INFEASIBLE,
            message: format!("infeasible box: {estimate} candidates exceeds ceiling {ceiling}"),
        },
        other => Failure::usage(other.to_string()),
    })?;
    eprintln!("wall time {:.3}s", start.elapsed().as_secs_f64());

    if let Some(path) = &args.out {
        fs::write(path, report.to_json()).map_err(|e| Failure {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        })?;
    }
    println!("{} hits", report.hits.len());
    Ok(())
}

fn run_check_identities(args: &FamilyArgs) -> Result<(), Failure> {
    let params = FamilyParams::new(args.characteristic, args.t, args.w)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let system = check_f_system(&family_f_table(params));
    let chain = check_reduction_chain(params);
    let mut all = true;
    for rep in [&system, &chain] {
        for c in &rep.residuals {
            all &= c.holds();
            println!("{} {}", if c.holds() { "PASS" } else { "FAIL" }, c.label);
        }
        for &(label, ok) in &rep.monomials {
            all &= ok;
            println!("{} {label}", if ok { "PASS" } else { "FAIL" });
        }
    }
    if all {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_NOT_VERIFIED,
            message: format!("identities fail for {params}"),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(sel) => run_verify(sel),
        Command::Construct { selector, format } => run_construct(selector, *format),
        Command::Search(args) => run_search(args),
        Command::CheckIdentities(args) => run_check_identities(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
