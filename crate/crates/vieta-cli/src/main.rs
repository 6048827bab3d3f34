//! `vieta`: enumerate Markov-like Diophantine solution trees, verify
//! triples, run seed-mutation traces, and execute the full property audit.
//!
//! Exit codes: 0 on success, 1 on verification or audit failure, 2 on usage
//! errors. All numeric output is exact decimal.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;
use vieta_core::audit::{run_audit, AuditOptions};
use vieta_core::cubic::{CubicParams, Triple};
use vieta_core::export;
use vieta_core::gcp::{
    mutate_seed, registry_entry, registry_json, specialize_cluster, PatternWalk,
};
use vieta_core::quartic::QuarticParams;
use vieta_core::tree::{
    brute_force, brute_force_reference, generate, membership_path, EnumBound, FamilySpec,
};

#[derive(Parser)]
#[command(
    name = "vieta",
    version,
    about = "Exact enumeration of Markov-like Diophantine trees and the cluster patterns behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a solution tree breadth-first within a bound.
    Enumerate(EnumerateArgs),
    /// Check whether a triple solves the selected equation.
    Verify(VerifyArgs),
    /// Print the descent path from a solution down to (1,1,1).
    Path(PathArgs),
    /// Apply a mutation walk to a registry seed and print the trace.
    Mutate(MutateArgs),
    /// Run the property-audit suite (everything, or one seed).
    Audit(AuditArgs),
    /// Run the exhaustive box oracle and list all solutions found.
    Oracle(OracleArgs),
    /// Export a tree (JSON or DOT) or the seed registry (JSON).
    Export(ExportArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Equation family: cubic | quartic
    #[arg(long)]
    family: String,
    /// Parameters: k1,k2,k3 for cubic; k for quartic. Decimal, any size.
    #[arg(long, default_value = "0,0,0")]
    k: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Stop below this depth.
    #[arg(long, conflicts_with = "max_entry")]
    max_depth: Option<u32>,
    /// Prune triples whose maximum exceeds this value.
    #[arg(long)]
    max_entry: Option<String>,
    /// Output format: text | json | dot
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// The candidate triple a,b,c.
    #[arg(long)]
    triple: String,
}

#[derive(Args)]
struct PathArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// The solution to descend from.
    #[arg(long)]
    triple: String,
    /// Output format: text | json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct MutateArgs {
    /// Registry seed name (t1r1..t1r6, t2r1..t2r5, t3r1..t3r6, q52) or an
    /// alias (markov, lampe, a2, question52).
    #[arg(long)]
    seed: String,
    /// Parameter values for parametric rows, e.g. "1,2".
    #[arg(long)]
    params: Option<String>,
    /// Mutation directions, 1-based, no immediate repeats, e.g. "1,2,3".
    #[arg(long)]
    walk: String,
    /// Output format: text | json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct AuditArgs {
    /// Restrict the audit to one registry seed.
    #[arg(long)]
    seed: Option<String>,
    /// Parameter values for parametric rows.
    #[arg(long)]
    params: Option<String>,
    /// Walk depth for the Laurent and specialization checks.
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Scan the box [1, bound]^3.
    #[arg(long)]
    bound: u64,
    /// Use the plain triple loop instead of the accelerated scan.
    #[arg(long)]
    reference: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// Export the seed registry as JSON instead of a tree.
    #[arg(long)]
    registry: bool,
    #[arg(long, required_unless_present = "registry")]
    family: Option<String>,
    #[arg(long, default_value = "0,0,0")]
    k: String,
    #[arg(long, conflicts_with = "max_entry")]
    max_depth: Option<u32>,
    #[arg(long)]
    max_entry: Option<String>,
    /// Output format for trees: json | dot
    #[arg(long, default_value = "json")]
    format: String,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

/// A user-input error: reported on stderr, exit code 2.
struct UsageError(String);

/// A verification/audit failure: reported on stdout, exit code 1.
struct CheckFailure(String);

enum CliError {
    Usage(UsageError),
    Check(CheckFailure),
}

impl From<UsageError> for CliError {
    fn from(e: UsageError) -> Self {
        CliError::Usage(e)
    }
}

impl From<CheckFailure> for CliError {
    fn from(e: CheckFailure) -> Self {
        CliError::Check(e)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn parse_bigints(s: &str, what: &str) -> Result<Vec<BigInt>, UsageError> {
    s.split(',')
        .map(|part| {
            BigInt::from_str(part.trim())
                .map_err(|_| usage(format!("invalid integer {part:?} in {what}")))
        })
        .collect()
}

fn parse_family(args: &FamilyArgs) -> Result<FamilySpec, UsageError> {
    let ks = parse_bigints(&args.k, "--k")?;
    match args.family.as_str() {
        "cubic" => {
            if ks.len() != 3 {
                return Err(usage("cubic equations take --k k1,k2,k3"));
            }
            let params = CubicParams::new(ks[0].clone(), ks[1].clone(), ks[2].clone())
                .map_err(|e| usage(e.to_string()))?;
            Ok(FamilySpec::Cubic(params))
        }
        "quartic" => {
            if ks.len() != 1 {
                return Err(usage("quartic equations take --k k"));
            }
            let params =
                QuarticParams::new(ks[0].clone()).map_err(|e| usage(e.to_string()))?;
            Ok(FamilySpec::Quartic(params))
        }
        other => Err(usage(format!(
            "unknown family {other:?}; expected cubic or quartic"
        ))),
    }
}

fn parse_triple(s: &str) -> Result<Triple, UsageError> {
    let parts = parse_bigints(s, "--triple")?;
    if parts.len() != 3 {
        return Err(usage("--triple takes a,b,c"));
    }
    Triple::new(parts[0].clone(), parts[1].clone(), parts[2].clone())
        .map_err(|e| usage(e.to_string()))
}

fn parse_bound(args_depth: Option<u32>, args_entry: &Option<String>) -> Result<EnumBound, UsageError> {
    match (args_depth, args_entry) {
        (Some(d), None) => Ok(EnumBound::MaxDepth(d)),
        (None, Some(e)) => {
            let v = BigInt::from_str(e.trim())
                .map_err(|_| usage(format!("invalid integer {e:?} in --max-entry")))?;
            if v < BigInt::from(1) {
                return Err(usage("--max-entry must be positive"));
            }
            Ok(EnumBound::MaxEntry(v))
        }
        (None, None) => Err(usage("one of --max-depth or --max-entry is required")),
        (Some(_), Some(_)) => Err(usage("--max-depth and --max-entry are mutually exclusive")),
    }
}

fn init_thread_pool() {
    #[cfg(feature = "parallel")]
    {
        if let Ok(v) = std::env::var("VIETA_THREADS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n >= 1 {
                    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
                }
            }
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Path(args) => cmd_path(args),
        Command::Mutate(args) => cmd_mutate(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Export(args) => cmd_export(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(CheckFailure(msg))) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(UsageError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn render_tree(nodes: &[vieta_core::tree::TreeNode], format: &str) -> Result<String, UsageError> {
    match format {
        "json" => Ok(export::to_json(nodes)),
        "dot" => Ok(export::to_dot(nodes)),
        "text" => {
            let mut out = String::new();
            for (i, node) in nodes.iter().enumerate() {
                match (node.parent, node.dir) {
                    (Some(p), Some(d)) => out.push_str(&format!(
                        "#{i} depth={} {} via {} from #{p}\n",
                        node.depth, node.triple, d
                    )),
                    _ => out.push_str(&format!("#{i} depth={} {}\n", node.depth, node.triple)),
                }
            }
            Ok(out)
        }
        other => Err(usage(format!("unknown format {other:?}"))),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let spec = parse_family(&args.family)?;
    let bound = parse_bound(args.max_depth, &args.max_entry)?;
    let nodes = generate(&spec, &bound);
    print!("{}", render_tree(&nodes, &args.format)?);
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let spec = parse_family(&args.family)?;
    let triple = parse_triple(&args.triple)?;
    let residual = spec.residual(&triple);
    if residual == BigInt::from(0) {
        println!("solution");
        Ok(())
    } else {
        Err(CheckFailure(format!("not a solution (residual {residual})")).into())
    }
}

fn cmd_path(args: PathArgs) -> Result<(), CliError> {
    let spec = parse_family(&args.family)?;
    let triple = parse_triple(&args.triple)?;
    let path = membership_path(&spec, &triple)
        .map_err(|e| CheckFailure(format!("path failed: {e}")))?;
    match args.format.as_str() {
        "json" => {
            let steps: Vec<serde_json::Value> = path
                .iter()
                .map(|(t, d)| {
                    serde_json::json!({
                        "triple": [t.a().to_string(), t.b().to_string(), t.c().to_string()],
                        "dir": d.as_str(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&steps).expect("serializes"));
        }
        "text" => {
            for (t, d) in &path {
                println!("{t} --{d}-->");
            }
            println!("{}", Triple::root());
        }
        other => return Err(usage(format!("unknown format {other:?}")).into()),
    }
    Ok(())
}

fn cmd_mutate(args: MutateArgs) -> Result<(), CliError> {
    let params = match &args.params {
        Some(s) => parse_bigints(s, "--params")?,
        None => Vec::new(),
    };
    let entry = registry_entry(&args.seed, &params).map_err(|e| usage(e.to_string()))?;
    let dirs_1based = parse_bigints(&args.walk, "--walk")?;
    let mut dirs = Vec::new();
    for d in &dirs_1based {
        let d: usize = d
            .try_into()
            .ok()
            .filter(|d| (1..=entry.seed.rank()).contains(d))
            .ok_or_else(|| usage(format!("walk direction {d} out of range")))?;
        dirs.push(d - 1);
    }
    let walk =
        PatternWalk::new(entry.seed.rank(), dirs).map_err(|e| usage(e.to_string()))?;

    let mut steps = Vec::new();
    let mut cur = entry.seed.clone();
    let spec0 = specialize_cluster(cur.cluster())
        .map_err(|e| CheckFailure(format!("specialization failed: {e}")))?;
    steps.push((None, cur.cluster().to_vec(), spec0));
    for &k in walk.dirs() {
        cur = mutate_seed(&cur, k).map_err(|e| CheckFailure(format!("mutation failed: {e}")))?;
        let sp = specialize_cluster(cur.cluster())
            .map_err(|e| CheckFailure(format!("specialization failed: {e}")))?;
        steps.push((Some(k), cur.cluster().to_vec(), sp));
    }

    match args.format.as_str() {
        "json" => {
            let rendered: Vec<serde_json::Value> = steps
                .iter()
                .enumerate()
                .map(|(i, (dir, cluster, spec))| {
                    serde_json::json!({
                        "step": i,
                        "dir": dir.map(|k| k + 1),
                        "cluster": cluster.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "specialized": spec.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rendered).expect("serializes"));
        }
        "text" => {
            println!("seed {}", entry.name);
            for (i, (dir, cluster, spec)) in steps.iter().enumerate() {
                let label = match dir {
                    Some(k) => format!("step {i} (mu_{})", k + 1),
                    None => format!("step {i}"),
                };
                let cluster_text: Vec<String> =
                    cluster.iter().map(|x| x.to_string()).collect();
                let spec_text: Vec<String> = spec.iter().map(|v| v.to_string()).collect();
                println!(
                    "{label}: cluster = ({}), specialized = ({})",
                    cluster_text.join(", "),
                    spec_text.join(",")
                );
            }
        }
        other => return Err(usage(format!("unknown format {other:?}")).into()),
    }
    Ok(())
}

fn cmd_audit(args: AuditArgs) -> Result<(), CliError> {
    let seed = match (&args.seed, &args.params) {
        (Some(name), Some(params)) => Some((name.clone(), parse_bigints(params, "--params")?)),
        (Some(name), None) => Some((name.clone(), Vec::new())),
        (None, Some(_)) => return Err(usage("--params requires --seed").into()),
        (None, None) => None,
    };
    let report = run_audit(&AuditOptions {
        seed,
        depth: args.depth,
    });
    print!("{}", report.render());
    if report.all_passed() {
        Ok(())
    } else {
        Err(CheckFailure("audit failed".into()).into())
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<(), CliError> {
    let spec = parse_family(&args.family)?;
    let solutions = if args.reference {
        brute_force_reference(&spec, args.bound)
    } else {
        brute_force(&spec, args.bound)
    }
    .map_err(|e| usage(e.to_string()))?;
    for t in &solutions {
        println!("{t}");
    }
    println!("{} solutions", solutions.len());
    Ok(())
}

fn cmd_export(args: ExportArgs) -> Result<(), CliError> {
    let payload = if args.registry {
        registry_json()
    } else {
        let family = FamilyArgs {
            family: args.family.clone().expect("required by clap"),
            k: args.k.clone(),
        };
        let spec = parse_family(&family)?;
        let bound = parse_bound(args.max_depth, &args.max_entry)?;
        let nodes = generate(&spec, &bound);
        match args.format.as_str() {
            "json" => export::to_json(&nodes),
            "dot" => export::to_dot(&nodes),
            other => return Err(usage(format!("unknown format {other:?}")).into()),
        }
    };
    match &args.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| usage(format!("cannot create {}: {e}", path.display())))?;
            f.write_all(payload.as_bytes())
                .and_then(|()| if payload.ends_with('\n') { Ok(()) } else { f.write_all(b"\n") })
                .map_err(|e| usage(format!("write failed: {e}")))?;
        }
        None => {
            print!("{payload}");
            if !payload.ends_with('\n') {
                println!();
            }
        }
    }
    Ok(())
}
