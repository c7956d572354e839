use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use maxdeg::bench::{run_suite, Suite};
use maxdeg::bounds::{
    asymptotic_report, build_extremal_forest, corollary1_check, corollary2_entry, theorem1_entry, theorem2_entry,
    theorem3_entry, Claim, ClaimEntry, Status,
};
use maxdeg::constructive::{equalize3_forest, girth5_equalize, peel_removal};
use maxdeg::dp::{compute_fk_forest_with, SolveOptions};
use maxdeg::generate::{star_union, GeneratorConfig, GraphKind};
use maxdeg::io::read_graph_file;
use maxdeg::oracle::{brute_force_fk, DEFAULT_LIMIT};
use maxdeg::verify::{claim_entries, dp_size_guard, exact_fk, run_verification, to_csv, to_text, Corpus, VerifyOptions};
use maxdeg::{Graph, RemovalCertificate};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "maxdeg", version, about = "Vertex deletions that leave k vertices of maximum degree")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Dp,
    Brute,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "extremal-ft")]
    ExtremalFt,
    Star,
    Path,
    StarUnion,
}

#[derive(Clone, Copy, ValueEnum)]
enum Procedure {
    Peel,
    Girth5,
    Equalize3,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    RandomForest,
    RandomGirth5,
}

#[derive(Subcommand)]
enum Command {
    /// Exact f_k of a graph file.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        method: SolveMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// DP worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Run the DP above its size guard.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Exhaustive f_k for small graphs.
    Brute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a named family, or run a deletion procedure on a graph file.
    Construct {
        #[arg(long, value_enum, conflicts_with = "procedure")]
        family: Option<Family>,
        #[arg(long)]
        t: Option<usize>,
        /// Order for path, leaf count for star.
        #[arg(long)]
        n: Option<usize>,
        /// Leaf counts for star-union, comma separated.
        #[arg(long, value_delimiter = ',')]
        leaves: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, requires = "input")]
        procedure: Option<Procedure>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write seeded random instances to a directory.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Every applicable bound for a graph file.
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        force: bool,
    },
    /// Check claims over a corpus file.
    Verify {
        /// Comma-separated claim tags.
        #[arg(long, value_delimiter = ',', required = true)]
        claims: Vec<Claim>,
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Seconds allowed per instance and k.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Time a fixed suite.
    Bench {
        #[arg(long)]
        suite: Suite,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// Failure of a subcommand with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure { code: EXIT_INPUT, message: message.to_string() }
}

fn read(path: &Path) -> Result<Graph, Failure> {
    read_graph_file(path).map_err(input_error)
}

fn result_json(g: &Graph, k: usize, cert: &RemovalCertificate, elapsed: Duration) -> serde_json::Value {
    json!({
        "n": g.order(),
        "m": g.size(),
        "k": k,
        "f_k": cert.size(),
        "method": cert.method,
        "X": cert.removed,
        "residual_max_degree": cert.residual_max_degree,
        "witnesses": cert.witnesses,
        "order_below_k": cert.order_below_k,
        "elapsed_ms": elapsed.as_secs_f64() * 1e3,
    })
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn print_result(g: &Graph, k: usize, cert: &RemovalCertificate, elapsed: Duration, format: Format) {
    match format {
        Format::Json => println!("{}", result_json(g, k, cert, elapsed)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            w.write_record(["n", "m", "k", "f_k", "method", "X", "residual_max_degree", "witnesses", "order_below_k", "elapsed_ms"])
                .and_then(|_| {
                    w.write_record([
                        g.order().to_string(),
                        g.size().to_string(),
                        k.to_string(),
                        cert.size().to_string(),
                        cert.method.to_string(),
                        join(&cert.removed, " "),
                        cert.residual_max_degree.map(|d| d.to_string()).unwrap_or_default(),
                        join(&cert.witnesses, " "),
                        cert.order_below_k.to_string(),
                        format!("{:.3}", elapsed.as_secs_f64() * 1e3),
                    ])
                })
                .and_then(|_| w.flush().map_err(Into::into))
                .expect("stdout");
        }
        Format::Text => {
            println!("n={} m={} k={} f_k={} method={}", g.order(), g.size(), k, cert.size(), cert.method);
            println!("X: [{}]", join(&cert.removed, ", "));
            if cert.order_below_k {
                println!("G - X has fewer than {k} vertices");
            } else {
                println!(
                    "max degree {} at [{}]",
                    cert.residual_max_degree.map_or("-".into(), |d| d.to_string()),
                    join(&cert.witnesses, ", ")
                );
            }
            println!("elapsed: {:.3} ms", elapsed.as_secs_f64() * 1e3);
        }
    }
}

fn compute(
    input: &Path,
    k: usize,
    method: SolveMethod,
    format: Format,
    jobs: usize,
    force: bool,
    limit: usize,
) -> Result<(), Failure> {
    let g = read(input)?;
    let start = Instant::now();
    let use_dp = match method {
        SolveMethod::Dp => true,
        SolveMethod::Brute => false,
        SolveMethod::Auto => g.is_forest(),
    };
    let cert = if use_dp {
        if g.order() > dp_size_guard(k) && !force {
            return Err(input_error(format!(
                "order {} is above the DP size guard {} for k={k}; pass --force to run anyway",
                g.order(),
                dp_size_guard(k)
            )));
        }
        compute_fk_forest_with(&g, k, &SolveOptions { jobs, ..SolveOptions::default() })
            .map_err(input_error)?
            .certificate
    } else {
        brute_force_fk(&g, k, limit).map_err(input_error)?.1
    };
    print_result(&g, k, &cert, start.elapsed(), format);
    Ok(())
}

fn write_or_print(graph: &Graph, out: Option<&Path>) -> Result<(), Failure> {
    let text = maxdeg::write_edge_list(graph);
    match out {
        Some(path) => fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn construct(
    family: Option<Family>,
    t: Option<usize>,
    n: Option<usize>,
    leaves: &[usize],
    out: Option<&Path>,
    procedure: Option<Procedure>,
    input: Option<&Path>,
    k: usize,
    format: Format,
) -> Result<(), Failure> {
    let usage = |m: &str| Failure { code: 2, message: m.to_string() };
    if let Some(procedure) = procedure {
        let g = read(input.expect("clap requires --input"))?;
        let start = Instant::now();
        let cert = match procedure {
            Procedure::Peel => peel_removal(&g, k),
            Procedure::Girth5 => girth5_equalize(&g, k, t.ok_or_else(|| usage("--procedure girth5 needs --t"))?),
            Procedure::Equalize3 => equalize3_forest(&g, t.ok_or_else(|| usage("--procedure equalize3 needs --t"))?),
        }
        .map_err(input_error)?;
        let k = if matches!(procedure, Procedure::Equalize3) { 3 } else { k };
        print_result(&g, k, &cert, start.elapsed(), format);
        return Ok(());
    }
    let graph = match family.ok_or_else(|| usage("pass --family or --procedure"))? {
        Family::ExtremalFt => {
            let t = t.ok_or_else(|| usage("--family extremal-ft needs --t"))?;
            if t == 0 {
                return Err(usage("--t must be at least 1"));
            }
            build_extremal_forest(t)
        }
        Family::Star => Graph::star(n.ok_or_else(|| usage("--family star needs --n (leaves)"))?),
        Family::Path => Graph::path(n.ok_or_else(|| usage("--family path needs --n"))?),
        Family::StarUnion => star_union(leaves),
    };
    write_or_print(&graph, out)
}

fn generate(kind: GenKind, n: usize, m: Option<usize>, seed: u64, count: usize, out: &Path) -> Result<(), Failure> {
    let kind = match kind {
        GenKind::RandomForest => GraphKind::RandomForest,
        GenKind::RandomGirth5 => GraphKind::RandomGirth5,
    };
    let cfg = GeneratorConfig { n: Some(n), m, seed, count, ..GeneratorConfig::new(kind) };
    fs::create_dir_all(out).map_err(|e| input_error(format!("{}: {e}", out.display())))?;
    let mut failed = 0;
    for (i, inst) in cfg.instances().into_iter().enumerate() {
        match inst {
            Ok(inst) => {
                let path = out.join(format!("{kind}-n{n}-s{seed}-{i:04}.txt"));
                write_or_print(&inst.graph, Some(&path))?;
            }
            Err(e) => {
                eprintln!("instance {i}: {e}");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        return Err(input_error(format!("{failed} of {count} instances could not be generated")));
    }
    Ok(())
}

fn print_entries(entries: &[ClaimEntry]) {
    for e in entries {
        println!("  {:<12} {:<8} {} => {}", e.claim, e.status, e.hypothesis, e.conclusion);
    }
}

fn bounds(input: &Path, k: Option<usize>, t: Option<usize>, p: u32, force: bool) -> Result<(), Failure> {
    let g = read(input)?;
    let profile = g.degree_profile();
    println!("n={} m={} forest={} girth={}", g.order(), g.size(), g.is_forest(), g.girth());
    println!("degrees: {:?}", profile.deltas());
    let opts = VerifyOptions { force, ..VerifyOptions::default() };
    let mut violated = false;
    for k in k.map_or(vec![2, 3], |k| vec![k]) {
        let fk = exact_fk(&g, k, &opts).ok().map(|c| c.size());
        println!("k={k} f_k={}", fk.map_or("?".into(), |v| v.to_string()));
        let mut entries: Vec<ClaimEntry> = Vec::new();
        match t {
            None => {
                for claim in [Claim::Thm1, Claim::Thm2, Claim::Thm2Cert, Claim::Cor1, Claim::Cor2, Claim::Thm3, Claim::Lemma3Cert] {
                    entries.extend(claim_entries(claim, &g, None, k, fk, &opts));
                }
            }
            Some(t) => {
                if k == 2 && t >= 1 {
                    entries.extend(theorem1_entry(&g, t, fk).ok());
                }
                if k == 3 && t >= 2 {
                    entries.extend(theorem2_entry(&g, t, fk).ok());
                    entries.extend(corollary2_entry(&g, t, fk).ok());
                    if let Ok(check) = corollary1_check(&profile, t) {
                        entries.push(check.entry(fk));
                    }
                }
                entries.extend(theorem3_entry(&g, k, t, fk).ok());
            }
        }
        entries.extend(asymptotic_report(&g, k, p, fk));
        violated |= entries.iter().any(|e| e.status == Status::Violated);
        print_entries(&entries);
    }
    if violated {
        return Err(Failure { code: EXIT_VIOLATION, message: "a bound was violated".into() });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    claims: &[Claim],
    corpus: &Path,
    jobs: usize,
    timeout: Option<f64>,
    format: Format,
    force: bool,
    limit: usize,
) -> Result<(), Failure> {
    let text = fs::read_to_string(corpus).map_err(|e| input_error(format!("{}: {e}", corpus.display())))?;
    let corpus: Corpus = serde_json::from_str(&text).map_err(|e| input_error(format!("corpus: {e}")))?;
    let opts = VerifyOptions {
        jobs,
        timeout: timeout.map(Duration::from_secs_f64),
        force,
        brute_limit: limit,
        ..VerifyOptions::default()
    };
    let run = run_verification(&corpus.instances, claims, &corpus.k, &opts);
    match format {
        Format::Text => print!("{}", to_text(&run)),
        Format::Csv => print!("{}", to_csv(&run.results)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&run).expect("serializable")),
    }
    if !run.summary.ok() {
        return Err(Failure { code: EXIT_VIOLATION, message: format!("{} failures", run.summary.fail) });
    }
    Ok(())
}

fn bench(suite: Suite, format: Format, jobs: usize) -> Result<(), Failure> {
    let records = run_suite(suite, jobs);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&records).expect("serializable")),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            for r in &records {
                w.serialize(r).expect("stdout");
            }
            w.flush().expect("stdout");
        }
        Format::Text => {
            for r in &records {
                println!(
                    "{:<22} n={:<4} m={:<4} k={} f_k={:<3} {:<6} {:>10.3} ms",
                    r.case, r.n, r.m, r.k, r.f_k, r.method, r.elapsed_ms
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute { input, k, method, format, jobs, force, limit } => {
            compute(&input, k, method, format, jobs, force, limit)
        }
        Command::Brute { input, k, limit, format } => compute(&input, k, SolveMethod::Brute, format, 0, false, limit),
        Command::Construct { family, t, n, leaves, out, procedure, input, k, format } => {
            construct(family, t, n, &leaves, out.as_deref(), procedure, input.as_deref(), k, format)
        }
        Command::Gen { kind, n, m, seed, count, out } => generate(kind, n, m, seed, count, &out),
        Command::Bounds { input, k, t, p, force } => bounds(&input, k, t, p, force),
        Command::Verify { claims, corpus, jobs, timeout, format, force, limit } => {
            verify(&claims, &corpus, jobs, timeout, format, force, limit)
        }
        Command::Bench { suite, format, jobs } => bench(suite, format, jobs),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
