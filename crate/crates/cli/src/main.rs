use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use cardzk::instances::{dpc_oracle, flow_oracle, ham_oracle};
use cardzk::transcript::{chi_square_test, reveal_distribution, structure_distribution, EventSelector};
use cardzk::{
    build_attack, card_count, deploy_honest, fixtures, run_protocol, simulate_public_view, Attack, Deployment,
    Instance, ProtocolKind, Transcript, Verdict,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "cardzk", version, about = "Card-based zero-knowledge proofs for pencil puzzles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the instance with the oracle, deploy honestly and verify.
    Prove(RunArgs),
    /// Verify a deployment read from a file (honest if none is given).
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_name = "FILE")]
        deployment: Option<PathBuf>,
    },
    /// Verify a malicious deployment built by a named attack.
    Attack {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_parser = parse_attack)]
        attack: Attack,
    },
    /// Compare reveal distributions of honest runs and the simulator.
    Analyze {
        #[command(flatten)]
        run: RunArgs,
        /// Family-wise significance level, split over all tests.
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
    },
    /// Print the cards needed for a Flow Free board.
    CountCards(InstanceArgs),
    /// List every solution found by the brute-force oracle.
    Oracle(InstanceArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance file (.graph, .flow, .dpc) or the name of a bundled fixture.
    #[arg(long, value_name = "FILE")]
    instance: PathBuf,
    /// Overrides the kind inferred from the file extension.
    #[arg(long, value_enum)]
    protocol: Option<Protocol>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Base seed; run `i` uses `seed + i`. Drawn from the OS when omitted.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    runs: u64,
    /// Directory for `run-NNNN.transcript` and `run-NNNN.deployment` files.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Protocol {
    Ham,
    Flow,
    Dpc,
}

impl From<Protocol> for ProtocolKind {
    fn from(p: Protocol) -> Self {
        match p {
            Protocol::Ham => ProtocolKind::Ham,
            Protocol::Flow => ProtocolKind::Flow,
            Protocol::Dpc => ProtocolKind::Dpc,
        }
    }
}

fn parse_attack(s: &str) -> Result<Attack, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Attack::ALL.iter().map(|a| a.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Exit statuses: 0 accept, 1 reject, 2 usage or input error.
enum Outcome {
    Success,
    Failure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Prove(args) => {
            let inst = load(&args.instance)?;
            runs(&args, &inst, |seed| deploy_honest(&inst, &mut rng(seed)))
        }
        Command::Verify { run: args, deployment } => {
            let inst = load(&args.instance)?;
            match deployment {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let d = Deployment::from_text(&inst, &text).with_context(|| format!("parsing {}", path.display()))?;
                    runs(&args, &inst, |_| Ok(d.clone()))
                }
                None => runs(&args, &inst, |seed| deploy_honest(&inst, &mut rng(seed))),
            }
        }
        Command::Attack { run: args, attack } => {
            let inst = load(&args.instance)?;
            runs(&args, &inst, |seed| build_attack(attack, &inst, &mut rng(seed)))
        }
        Command::Analyze { run: args, alpha } => analyze(&args, alpha),
        Command::CountCards(args) => {
            let Instance::Flow(board) = load(&args)? else {
                bail!("count-cards needs a Flow Free board");
            };
            let c = card_count(&board);
            println!("walls={} marking={} index={}", c.walls, c.marking, c.index_cards);
            Ok(Outcome::Success)
        }
        Command::Oracle(args) => oracle(&load(&args)?),
    }
}

/// Prover randomness. Kept on a separate stream from the verifier's, which
/// `run_protocol` derives from the same seed.
fn rng(seed: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(1);
    r
}

/// Reads an instance file, falling back to a bundled fixture of the same
/// name when no such file exists.
fn load(args: &InstanceArgs) -> anyhow::Result<Instance> {
    let path = &args.instance;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let kind = match (args.protocol, ProtocolKind::from_extension(ext)) {
        (Some(p), _) => p.into(),
        (None, Some(k)) => k,
        (None, None) => bail!("cannot infer the protocol from {}; pass --protocol", path.display()),
    };
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => bundled(path, kind).with_context(|| format!("reading {}: {e}", path.display()))?,
    };
    kind.parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn bundled(path: &Path, kind: ProtocolKind) -> anyhow::Result<String> {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    let table = match kind {
        ProtocolKind::Ham => fixtures::GRAPHS,
        ProtocolKind::Flow => fixtures::BOARDS,
        ProtocolKind::Dpc => fixtures::DPC,
    };
    match table.iter().find(|(name, _)| *name == stem) {
        Some((_, text)) if path.components().count() == 1 => Ok(text.to_string()),
        _ => bail!("no such file and no bundled fixture named {stem:?}"),
    }
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    let seed = seed.unwrap_or_else(rand::random);
    println!("seed: {seed}");
    seed
}

/// Runs the verifier `--runs` times in parallel and reports each verdict.
/// Succeeds only when every run is accepted.
fn runs(
    args: &RunArgs,
    inst: &Instance,
    deploy: impl Fn(u64) -> cardzk::Result<Deployment> + Sync,
) -> anyhow::Result<Outcome> {
    let base = resolve_seed(args.seed);
    let results: Vec<(Deployment, Verdict, Transcript)> = (0..args.runs)
        .into_par_iter()
        .map(|i| {
            let seed = base.wrapping_add(i);
            let d = deploy(seed)?;
            let (v, t) = run_protocol(inst, &d, seed)?;
            Ok((d, v, t))
        })
        .collect::<cardzk::Result<_>>()?;

    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (i, (d, _, t)) in results.iter().enumerate() {
            let stem = dir.join(format!("run-{i:04}"));
            fs::write(stem.with_extension("transcript"), t.to_full_text())?;
            fs::write(stem.with_extension("deployment"), d.to_text(inst))?;
        }
    } else if let [(_, _, t)] = results.as_slice() {
        print!("{}", t.to_public_text());
    }

    let accepted = results.iter().filter(|(_, v, _)| v.accepted).count();
    for (i, (_, v, _)) in results.iter().enumerate() {
        println!("run {i:04} seed {}: {v}", base.wrapping_add(i as u64));
    }
    println!("accepted {accepted}/{}", results.len());
    Ok(if accepted == results.len() {
        Outcome::Success
    } else {
        Outcome::Failure
    })
}

fn analyze(args: &RunArgs, alpha: f64) -> anyhow::Result<Outcome> {
    let inst = load(&args.instance)?;
    let base = resolve_seed(args.seed);
    let n = args.runs;
    let witnesses = inst.solution_count()?;
    if witnesses == 0 {
        bail!("instance has no solution, nothing to analyze");
    }
    let honest = |offset: u64| -> anyhow::Result<Vec<Transcript>> {
        (0..n)
            .into_par_iter()
            .map(|i| {
                let seed = base.wrapping_add(offset + i);
                let d = deploy_honest(&inst, &mut rng(seed))?;
                Ok(run_protocol(&inst, &d, seed)?.1)
            })
            .collect()
    };
    let real = honest(0)?;
    let other = honest(n)?;
    let sim: Vec<Transcript> = (0..n)
        .into_par_iter()
        .map(|i| simulate_public_view(&inst, base.wrapping_add(2 * n + i)))
        .collect();

    let mut rows = Vec::new();
    for (label, b) in [("honest/honest", &other), ("honest/sim", &sim)] {
        for sel in EventSelector::reveal_classes(real.iter().chain(b.iter())) {
            let test = chi_square_test(&reveal_distribution(&real, &sel), &reveal_distribution(b, &sel));
            rows.push((label, sel.to_string(), test));
        }
        let test = chi_square_test(&structure_distribution(&real), &structure_distribution(b));
        rows.push((label, "skeleton".to_string(), test));
    }
    let m = rows.iter().filter(|r| r.2.is_ok()).count();
    if m == 0 {
        bail!("too few runs for any test; raise --runs");
    }
    let threshold = alpha / m as f64;

    let mut out = String::new();
    writeln!(out, "runs per condition: {n}, solutions: {witnesses}, tests: {m}, threshold: {threshold:.3e}")?;
    writeln!(out, "{:<14} {:<40} {:>5} {:>12} {:>10}  result", "comparison", "event", "dof", "statistic", "p")?;
    let mut failed = 0;
    for (label, event, test) in &rows {
        match test {
            Ok(c) => {
                let ok = c.p_value >= threshold;
                failed += usize::from(!ok);
                writeln!(
                    out,
                    "{label:<14} {event:<40} {:>5} {:>12.3} {:>10.4}  {}",
                    c.dof,
                    c.statistic,
                    c.p_value,
                    if ok { "ok" } else { "DIFFERS" }
                )?;
            }
            Err(e) => writeln!(out, "{label:<14} {event:<40} {:>5} {:>12} {:>10}  skipped: {e}", "-", "-", "-")?,
        }
    }
    writeln!(out, "{} of {m} tests below threshold", failed)?;
    print!("{out}");
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("analysis.txt"), &out)?;
    }
    Ok(if failed == 0 { Outcome::Success } else { Outcome::Failure })
}

fn oracle(inst: &Instance) -> anyhow::Result<Outcome> {
    let one_based = |p: &[usize]| p.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    let lines: Vec<String> = match inst {
        Instance::Ham(g) => ham_oracle(g)?.iter().map(|w| one_based(&w.order)).collect(),
        Instance::Flow(b) => flow_oracle(b)?
            .iter()
            .map(|w| {
                w.paths
                    .iter()
                    .zip(b.pairs())
                    .map(|(path, &(label, _, _))| {
                        let cells: Vec<String> = path
                            .iter()
                            .map(|&c| {
                                let (r, col) = b.coords(c);
                                format!("{},{}", r + 1, col + 1)
                            })
                            .collect();
                        format!("{label}: {}", cells.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join(" | ")
            })
            .collect(),
        Instance::Dpc(d) => dpc_oracle(d)?
            .iter()
            .map(|w| w.paths.iter().map(|p| one_based(p)).collect::<Vec<_>>().join(" | "))
            .collect(),
    };
    println!("solutions: {}", lines.len());
    for l in &lines {
        println!("{l}");
    }
    Ok(if lines.is_empty() { Outcome::Failure } else { Outcome::Success })
}
