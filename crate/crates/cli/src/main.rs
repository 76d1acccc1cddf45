use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use separative::findim::{builtin, check_identity, is_solvable, DerivedSeries, LowerFiltration, StructAlgebra};
use separative::identities::{builtin_presentation, is_congruent, verify_witness, Rewriter, VarietyPresentation, BUILTIN_NAMES};
use separative::monomial::Monomial;
use separative::tower::{tower_report, Family, ReportOptions, TruncatedTower};
use separative::{Field, Limits, Polynomial};

type CliResult = Result<ExitCode, Box<dyn Error>>;

/// Separation rewriting, nilpotent filtrations and counterexample towers.
#[derive(Debug, Parser)]
#[command(name = "separative", version)]
struct Cli {
    /// Total degree cap for congruence checks.
    #[arg(long, global = true, env = "SEPARATIVE_MAX_DEGREE", default_value_t = 8)]
    max_degree: usize,
    /// Highest tower level that will be built.
    #[arg(long, global = true, default_value_t = 10)]
    max_level: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monomial structure and the separating predicates.
    #[command(subcommand)]
    Mono(MonoCmd),
    /// Separation rewriting.
    #[command(subcommand)]
    Sep(SepCmd),
    /// Variety presentations and their witnesses.
    #[command(subcommand)]
    Variety(VarietyCmd),
    /// Congruence modulo a variety's identities.
    #[command(subcommand)]
    Tideal(TidealCmd),
    /// Finite-dimensional algebras given by structure constants.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// The pqr counterexample towers and the free nilpotent reference tower.
    #[command(subcommand)]
    Tower(TowerCmd),
}

#[derive(Debug, Subcommand)]
enum MonoCmd {
    /// Length, submonomial lengths and every m for which the monomial is m-separating.
    Info { monomial: String },
    /// Whether the monomial is m-separating for some m in [n, N].
    Separating {
        monomial: String,
        #[arg(long, num_args = 2, value_names = ["n", "N"], required = true)]
        range: Vec<usize>,
    },
}

#[derive(Debug, Args)]
struct VarietyArgs {
    /// A builtin presentation.
    #[arg(long, conflicts_with = "variety_file")]
    variety: Option<String>,
    /// A presentation file.
    #[arg(long)]
    variety_file: Option<PathBuf>,
    /// Field for builtin presentations.
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Debug, Subcommand)]
enum SepCmd {
    /// A combination of [n, n+d]-separating monomials congruent to the monomial.
    Rewrite {
        monomial: String,
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum VarietyCmd {
    /// Checks every certificate of the variety's witness.
    Verify {
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        file: Option<PathBuf>,
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Prints a builtin presentation in the file format.
    Show {
        name: String,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Lists the builtin presentations.
    List,
}

#[derive(Debug, Subcommand)]
enum TidealCmd {
    /// Whether a polynomial lies in the T-ideal, i.e. is congruent to zero.
    Member {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long)]
        poly: String,
    },
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// An algebra file.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    file: Option<PathBuf>,
    /// A builtin algebra: upper-triangular, matrix, lie-upper-triangular, jordan-symmetric or zero.
    #[arg(long)]
    builtin: Option<String>,
    /// Size parameter for builtin algebras.
    #[arg(long, default_value_t = 3)]
    size: usize,
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Debug, Subcommand)]
enum AlgCmd {
    /// Lower filtration, nilpotency, derived series and solvability.
    Analyze {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Whether the algebra satisfies an identity.
    CheckIdentity {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        poly: String,
    },
}

#[derive(Debug, Subcommand)]
enum TowerCmd {
    /// Per-level table: dimension, nilpotency index, separation defect, diagonal rank, codimensions.
    Report {
        /// pqr, pqr-comm, pqr-alt, free-assoc or free-assoc:<generators>.
        #[arg(long)]
        family: String,
        /// Top level.
        #[arg(long)]
        levels: usize,
        /// Bottom level (defaults to the family's first level).
        #[arg(long)]
        from: Option<usize>,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Filtration index for the separation defect.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Largest d tried for the separation defect.
        #[arg(long)]
        d_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Rank of the diagonal element and the product-count lower bound at one level.
    Diag {
        #[arg(long, default_value = "pqr")]
        family: String,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Random products sampled to illustrate the rank law.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(clap::error::ErrorKind::InvalidValue, msg).exit()
}

fn field(s: &str) -> Field {
    Field::parse(s).unwrap_or_else(|e| usage_error(e))
}

fn read(path: &Path) -> Result<String, Box<dyn Error>> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn presentation(args: &VarietyArgs) -> Result<VarietyPresentation, Box<dyn Error>> {
    match (&args.variety, &args.variety_file) {
        (Some(name), None) => Ok(builtin_presentation(name, field(&args.field))?),
        (None, Some(path)) => Ok(VarietyPresentation::parse(&read(path)?)?),
        _ => usage_error("give exactly one of --variety NAME or --variety-file PATH"),
    }
}

fn algebra(args: &AlgebraArgs) -> Result<StructAlgebra, Box<dyn Error>> {
    match (&args.file, &args.builtin) {
        (Some(path), None) => Ok(StructAlgebra::parse(&read(path)?)?),
        (None, Some(name)) => Ok(builtin::by_name(name, args.size, field(&args.field))?),
        _ => usage_error("give exactly one of --file PATH or --builtin NAME"),
    }
}

fn monomial(s: &str) -> Result<Monomial, Box<dyn Error>> {
    Ok(s.parse::<Monomial>()?)
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn run(cli: Cli) -> CliResult {
    let limits = Limits { max_degree: cli.max_degree, max_level: cli.max_level, ..Limits::default() };
    match cli.command {
        Command::Mono(MonoCmd::Info { monomial: m }) => {
            let w = monomial(&m)?;
            println!("monomial: {w}");
            println!("length: {}", w.len());
            println!("submonomial lengths: {{{}}}", join(&w.submonomial_lengths(), ","));
            println!("separating profile: {{{}}}", join(&w.separating_profile(), ","));
        }
        Command::Mono(MonoCmd::Separating { monomial: m, range }) => {
            let w = monomial(&m)?;
            println!("{}", w.is_range_separating(range[0], range[1])?);
        }
        Command::Sep(SepCmd::Rewrite { monomial: m, variety, n }) => {
            let p = presentation(&variety)?;
            let w = monomial(&m)?;
            println!("{}", Rewriter::new(&p)?.separate_n(&w, n)?);
        }
        Command::Variety(VarietyCmd::Verify { file, builtin, field: f }) => {
            let p = match (file, builtin) {
                (Some(path), _) => VarietyPresentation::parse(&read(&path)?)?,
                (None, Some(name)) => builtin_presentation(&name, field(&f))?,
                (None, None) => usage_error("give --file PATH or --builtin NAME"),
            };
            let report = verify_witness(&p, &limits)?;
            println!("{report}");
            if !report.ok() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Variety(VarietyCmd::Show { name, field: f }) => print!("{}", builtin_presentation(&name, field(&f))?),
        Command::Variety(VarietyCmd::List) => {
            for name in BUILTIN_NAMES {
                println!("{name}");
            }
        }
        Command::Tideal(TidealCmd::Member { variety, poly }) => {
            let p = presentation(&variety)?;
            let f = Polynomial::parse(p.field(), &poly)?;
            let zero = Polynomial::zero(p.field());
            println!("{}", is_congruent(&f, &zero, &p, &limits)?);
        }
        Command::Alg(AlgCmd::Analyze { algebra: a }) => analyze(&algebra(&a)?),
        Command::Alg(AlgCmd::CheckIdentity { algebra: a, poly }) => {
            let alg = algebra(&a)?;
            let f = Polynomial::parse(alg.field(), &poly)?;
            let check = check_identity(&alg, &f, &limits)?;
            println!("{} (strategy: {:?})", check.holds, check.strategy);
        }
        Command::Tower(TowerCmd::Report { family, levels, from, field: f, n, d_max, json }) => {
            let family: Family = family.parse()?;
            let first = from.unwrap_or(family.min_level());
            let tower = TruncatedTower::new(family, field(&f), first, levels, &limits)?;
            let mut opts = ReportOptions::new(&limits);
            opts.defect_n = n;
            opts.d_max = d_max.unwrap_or(limits.max_enumeration_length.saturating_sub(n));
            let report = tower_report(&tower, &opts, &limits)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{report}");
            }
        }
        Command::Tower(TowerCmd::Diag { family, level, field: f, samples, seed }) => {
            diag(&family, level, field(&f), samples, seed, &limits)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn analyze(alg: &StructAlgebra) {
    println!("dimension: {}", alg.dim());
    println!("field: {}", alg.field());
    println!("commutative: {}", alg.is_commutative());
    // the same stopping rule as is_nilpotent: a zero term or A_(k) = A_(2k)
    let mut filt = LowerFiltration::new(alg);
    let mut n = 1;
    while !filt.get(n).is_zero() && !(n % 2 == 0 && filt.get(n / 2).dim() == filt.get(n).dim()) {
        n += 1;
    }
    println!("lower filtration dims A_(1..{n}): {}", join(&filt.dims(n), " "));
    match filt.get(n).is_zero() {
        true => println!("nilpotent: yes, A_({n}) = 0 (index {n})"),
        false => println!("nilpotent: no, A_(n) stabilizes at dimension {}", filt.get(n).dim()),
    }
    let (solvable, length) = is_solvable(alg);
    let mut derived = DerivedSeries::new(alg);
    let last = length.unwrap_or_else(|| (0..).find(|&k| derived.get(k).dim() == derived.get(k + 1).dim()).unwrap());
    let dims: Vec<usize> = (0..=last).map(|k| derived.get(k).dim()).collect();
    println!("derived series dims A^(0..{last}): {}", join(&dims, " "));
    match solvable {
        true => println!("solvable: yes, derived length {last}"),
        false => println!("solvable: no"),
    }
}

fn diag(family: &str, level: usize, field: Field, samples: usize, seed: u64, limits: &Limits) -> Result<(), Box<dyn Error>> {
    let family: Family = family.parse()?;
    let tower = TruncatedTower::new(family, field, level, level, limits)?;
    let lvl = tower.level(level)?;
    let alg = lvl.algebra();
    let d = lvl.diagonal()?;
    let terms = d.coords().len();
    println!("family {family}, level {level}, dimension {}, field {field}", alg.dim());
    println!("diag = {}", element_string(alg, &d));
    println!("diag rank: {}", lvl.r_rank(&d)?);
    println!("min products: >= {}", lvl.min_products_lower_bound(&d)?);
    println!("explicit sum of {terms} products (q_m q_m, or q_(2j-1) q_(2j) for pqr-alt)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_rank = 0;
    for _ in 0..samples {
        let a = alg.random_element(&mut rng, 5, true);
        let b = alg.random_element(&mut rng, 5, true);
        max_rank = max_rank.max(lvl.r_rank(&alg.multiply(&a, &b)?)?);
    }
    let bound = if family == Family::Pqr { 1 } else { 2 };
    println!("random products: {samples} samples (seed {seed}), max rank {max_rank}, law bound {bound}");
    Ok(())
}

fn element_string(alg: &StructAlgebra, e: &separative::findim::Element) -> String {
    let f = alg.field();
    let parts: Vec<String> = e
        .coords()
        .iter()
        .map(|(k, c)| if *c == f.one() { alg.label(*k).to_string() } else { format!("{}*{}", f.format_scalar(c), alg.label(*k)) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
