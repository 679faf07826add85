mod output;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gcut_core::edgelist::write_edge_list_with_comments;
use gcut_core::theorems::{verify, Method, TheoremVerdict, Which};
use gcut_core::{
    classify, direct_product, generate, lambda_k, lambda_k_bruteforce, parse_edge_list, xi, xi3,
    CutResult, Family, FamilySpec, Graph, DEFAULT_CEILING,
};

use output::{ConnRecord, Format};

#[derive(Parser)]
#[command(name = "gcut", version, about = "Restricted edge-connectivity of graphs and direct products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph family as an edge list
    Gen(GenArgs),
    /// Build the direct product of two graphs
    Product(ProductArgs),
    /// Compute lambda_k with a witness cut
    Conn(ConnArgs),
    /// Minimum edge-degree (order 1) or minimum 3-set boundary (order 3)
    Xi(XiArgs),
    /// Report maximal and super restricted connectivity flags
    Classify(ClassifyArgs),
    /// Compare a computed product connectivity with its closed form
    Verify(VerifyArgs),
    /// Time the built-in verification suite
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Tag {
    Path,
    Cycle,
    Complete,
    Total,
    Biclique,
    Star,
    Petersen,
    RandomRegular,
}

#[derive(Args)]
struct CeilingArg {
    /// Largest vertex count for the brute-force oracle
    #[arg(long, env = "GCUT_CEILING", default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Tag,
    /// Order (leaves for star)
    #[arg(long)]
    n: Option<usize>,
    /// First part size of a complete bipartite graph
    #[arg(long)]
    s: Option<usize>,
    /// Second part size of a complete bipartite graph
    #[arg(long)]
    t: Option<usize>,
    /// Degree of a random regular graph
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout if omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ProductArgs {
    /// Left factor G (must be simple)
    g: PathBuf,
    /// Right factor H; alternatively give --family and --n
    #[arg(conflicts_with = "family")]
    h: Option<PathBuf>,
    #[arg(long, requires = "n")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ConnArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    k: u8,
    #[arg(long, default_value_t = Method::Flow)]
    method: Method,
    #[command(flatten)]
    ceiling: CeilingArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include the witness side and cut edges (DOT: highlight them)
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct XiArgs {
    file: PathBuf,
    #[arg(long, default_value = "1", value_parser = ["1", "3"])]
    order: String,
}

#[derive(Args)]
struct ClassifyArgs {
    file: PathBuf,
    #[command(flatten)]
    ceiling: CeilingArg,
    /// text or json
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    family: Family,
    /// Family parameter; a comma-separated list runs a batch
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, default_value_t = Which::Lambda3)]
    which: Which,
    #[arg(long, default_value_t = Method::Flow)]
    method: Method,
    #[command(flatten)]
    ceiling: CeilingArg,
    /// text, json (one object per line) or csv
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value = "acceptance", value_parser = ["acceptance"])]
    suite: String,
    /// Also run the Petersen products (about a minute)
    #[arg(long)]
    extended: bool,
    #[command(flatten)]
    ceiling: CeilingArg,
}

enum Status {
    Done,
    Inapplicable,
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("cannot write to stdout"),
    }
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.with_context(|| format!("--{flag} is required for family {family}"))
}

fn gen(args: GenArgs) -> Result<Status> {
    let name = args.family.to_possible_value().unwrap().get_name().to_string();
    let spec = match args.family {
        Tag::Path => FamilySpec::Path { n: require(args.n, "n", &name)? },
        Tag::Cycle => FamilySpec::Cycle { n: require(args.n, "n", &name)? },
        Tag::Complete => FamilySpec::Complete { n: require(args.n, "n", &name)? },
        Tag::Total => FamilySpec::Total { n: require(args.n, "n", &name)? },
        Tag::Star => FamilySpec::Star { leaves: require(args.n, "n", &name)? },
        Tag::Biclique => FamilySpec::CompleteBipartite {
            s: require(args.s, "s", &name)?,
            t: require(args.t, "t", &name)?,
        },
        Tag::Petersen => FamilySpec::Petersen,
        Tag::RandomRegular => FamilySpec::RandomRegular {
            n: require(args.n, "n", &name)?,
            k: require(args.k, "k", &name)?,
            seed: args.seed,
        },
    };
    let graph = generate(spec)?;
    let mut header = vec![spec.to_string()];
    if let FamilySpec::RandomRegular { seed, .. } = spec {
        header.push(format!("seed {seed}"));
    }
    emit(args.output.as_deref(), &write_edge_list_with_comments(&graph, &header))?;
    Ok(Status::Done)
}

fn product(args: ProductArgs) -> Result<Status> {
    let g = read_graph(&args.g)?;
    let (h, h_name) = match (&args.h, args.family, args.n) {
        (Some(path), _, _) => (read_graph(path)?, path.display().to_string()),
        (None, Some(family), Some(n)) => {
            let spec = family.spec(n);
            (generate(spec)?, spec.to_string())
        }
        _ => bail!("give a second edge-list file or --family with --n"),
    };
    let p = direct_product(&g, &h)?;
    let header = vec![format!("{} x {}", args.g.display(), h_name), p.describe()];
    emit(args.output.as_deref(), &write_edge_list_with_comments(p.graph(), &header))?;
    Ok(Status::Done)
}

fn conn(args: ConnArgs) -> Result<Status> {
    let graph = read_graph(&args.file)?;
    let k = usize::from(args.k);
    let ceiling = args.ceiling.ceiling;
    let started = Instant::now();
    let (cut, flow_value, brute_value): (CutResult, _, _) = match args.method {
        Method::Flow => (lambda_k(&graph, k)?, None, None),
        Method::Brute => (lambda_k_bruteforce(&graph, k, ceiling)?, None, None),
        Method::Both => {
            let brute = lambda_k_bruteforce(&graph, k, ceiling)?;
            let flow = lambda_k(&graph, k)?;
            let (f, b) = (flow.value, brute.value);
            (brute, Some(f), Some(b))
        }
    };
    let record = ConnRecord {
        graph: args.file.display().to_string(),
        k,
        method: args.method,
        value: cut.value,
        flow_value,
        brute_value,
        witness_side: cut.witness_side.as_slice().to_vec(),
        cut_edges: cut.crossing_edges.clone(),
        runtime_ms: started.elapsed().as_millis() as u64,
    };
    let text = output::conn(&record, &graph, args.format, args.witness)?;
    emit(None, &text)?;
    if flow_value != brute_value {
        bail!("flow method ({}) and brute force ({}) disagree", flow_value.unwrap(), brute_value.unwrap());
    }
    Ok(Status::Done)
}

fn xi_cmd(args: XiArgs) -> Result<Status> {
    let graph = read_graph(&args.file)?;
    let value = if args.order == "1" { xi(&graph) } else { xi3(&graph) };
    println!("{value}");
    Ok(Status::Done)
}

fn classify_cmd(args: ClassifyArgs) -> Result<Status> {
    let graph = read_graph(&args.file)?;
    let report = classify(&graph, args.ceiling.ceiling);
    let text = match args.format {
        Format::Json => serde_json::to_string(&report)? + "\n",
        Format::Text => output::classification_text(&report),
        other => bail!("classify does not support --format {}", other.name()),
    };
    emit(None, &text)?;
    Ok(Status::Done)
}

fn verify_cmd(args: VerifyArgs) -> Result<Status> {
    let graph = read_graph(&args.graph)?;
    let id = args.graph.display().to_string();
    let mut verdicts = Vec::new();
    for &n in &args.n {
        let mut v = verify(&graph, args.family, n, args.which, args.method, args.ceiling.ceiling)?;
        v.graph = id.clone();
        verdicts.push(v);
    }
    emit(None, &output::verdicts(&verdicts, args.format)?)?;
    Ok(if verdicts.iter().any(TheoremVerdict::inapplicable) { Status::Inapplicable } else { Status::Done })
}

fn bench(args: BenchArgs) -> Result<Status> {
    use Family::*;
    let k4 = FamilySpec::Complete { n: 4 };
    let c4 = FamilySpec::Cycle { n: 4 };
    let c5 = FamilySpec::Cycle { n: 5 };
    let mut cases = vec![
        (k4, Cycle, 3, Which::Lambda3),
        (c4, Cycle, 3, Which::Lambda3),
        (c5, Cycle, 3, Which::Lambda3),
        (k4, Cycle, 5, Which::Lambda3),
        (k4, Complete, 5, Which::Lambda3),
        (c4, Complete, 5, Which::Lambda3),
        (k4, Total, 3, Which::Lambda3),
        (c4, Total, 3, Which::Lambda3),
        (c5, Total, 3, Which::Lambda3),
        (k4, Complete, 3, Which::Lambda2),
        (c4, Total, 3, Which::Lambda2),
        (k4, Cycle, 5, Which::Lambda2),
    ];
    if args.extended {
        let p = FamilySpec::Petersen;
        cases.extend([(p, Cycle, 3, Which::Lambda3), (p, Total, 3, Which::Lambda3), (p, Complete, 5, Which::Lambda3)]);
    }
    let ceiling = args.ceiling.ceiling;
    println!("{:<22} {:<8} {:>6} {:>9} {:>9} {:>6} {:>10}", "product", "which", "method", "predicted", "computed", "match", "ms");
    for (g, family, n, which) in cases {
        let graph = generate(g)?;
        let order = graph.n() * generate(family.spec(n))?.n();
        let method = if order <= ceiling { Method::Both } else { Method::Flow };
        let v = verify(&graph, family, n, which, method, ceiling)?;
        let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        println!(
            "{:<22} {:<8} {:>6} {:>9} {:>9} {:>6} {:>10}",
            format!("{g} x {family}{n}"),
            which.to_string(),
            method.to_string(),
            show(v.predicted.map(|p| p.to_string())),
            v.computed.to_string(),
            show(v.matches.map(|m| m.to_string())),
            v.runtime_ms
        );
    }
    Ok(Status::Done)
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Product(a) => product(a),
        Command::Conn(a) => conn(a),
        Command::Xi(a) => xi_cmd(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Bench(a) => bench(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Status::Done) => ExitCode::SUCCESS,
        Ok(Status::Inapplicable) => ExitCode::from(2),
        Err(e) => {
            eprintln!("gcut: {e:#}");
            ExitCode::from(1)
        }
    }
}
