//! Command-line front end for the set-cover game engine.
//!
//! Exit codes: 0 success (for `verify`, all claims confirmed or vacuous);
//! 1 a verified claim was refuted; 2 parse or argument errors; 3 invalid
//! permutation; 4 permutation cap exceeded; 5 enumeration budget exceeded.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use setcover_game::theorems::{report_csv, report_json, report_table, verify_suite, SuiteConfig};
use setcover_game::{
    cover_distribution, enumerate_nash, greedy_cover, is_nash, monte_carlo_probabilities,
    selection_probabilities, Error, GameParams, JointStrategy, Limits, NashVerdict, Permutation,
    Variant,
};

#[derive(Parser)]
#[command(name = "setcover-game", version, about = "Set-cover game engine")]
struct Cli {
    /// Worker threads for internal parallelism (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LimitArgs {
    /// Exact-enumeration cap on the agent count for m! permutation runs.
    #[arg(long, default_value_t = setcover_game::DEFAULT_PERMUTATION_CAP)]
    cap: usize,

    /// Budget on the number of joint strategies a full scan may visit.
    #[arg(long, default_value_t = 1 << 20)]
    budget: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { permutation_cap: self.cap, profile_budget: self.budget }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the greedy algorithm on an instance and print the cover.
    Solve {
        /// Instance file (JSON).
        instance: String,

        /// Scan agents in index order (the default).
        #[arg(long, conflicts_with = "permutation")]
        identity: bool,

        /// Scan order as comma-separated 1-based agent numbers, e.g. 3,4,2,1.
        #[arg(long, value_delimiter = ',')]
        permutation: Option<Vec<usize>>,
    },

    /// Print the exact cover distribution, or Monte Carlo estimates.
    Distribution {
        instance: String,

        /// Enumerate all m! permutations exactly.
        #[arg(long, conflicts_with = "samples")]
        exact: bool,

        /// Estimate from this many sampled covers instead.
        #[arg(long)]
        samples: Option<u64>,

        /// Seed for the sampling stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[command(flatten)]
        limits: LimitArgs,
    },

    /// Check whether an instance is a pure equilibrium.
    #[command(name = "check-ne")]
    CheckNe {
        instance: String,

        /// Per-element cost, as p/q (overrides the instance file).
        #[arg(long)]
        alpha: Option<String>,

        /// Selection benefit, as p/q (overrides the instance file).
        #[arg(long)]
        beta: Option<String>,

        /// Game variant: d (fixed order) or n (random order).
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,

        #[command(flatten)]
        limits: LimitArgs,
    },

    /// Enumerate all pure equilibria for given sizes and parameters.
    Enumerate {
        #[arg(long)]
        n: usize,

        #[arg(long)]
        m: usize,

        #[arg(long)]
        alpha: String,

        #[arg(long)]
        beta: String,

        #[arg(long, value_parser = parse_variant)]
        variant: Variant,

        /// Keep one representative per agent-relabeling orbit.
        #[arg(long)]
        dedup: bool,

        #[command(flatten)]
        limits: LimitArgs,
    },

    /// Run a verification suite and print the verdict report.
    Verify {
        /// Suite configuration file (JSON).
        #[arg(long)]
        suite: String,

        /// Report format: table, json, or csv.
        #[arg(long, default_value = "table")]
        format: String,

        #[command(flatten)]
        limits: LimitArgs,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidPermutation { .. } => 3,
        Error::PermutationCapExceeded { .. } => 4,
        Error::BudgetExceeded { .. } => 5,
        _ => 2,
    }
}

fn load_instance(path: &str) -> Result<(JointStrategy, Option<GameParams>), Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::InstanceField {
        field: path.to_string(),
        detail: e.to_string(),
    })?;
    setcover_game::parse_instance(&text)
}

fn one_based(agents: &[usize]) -> Vec<usize> {
    agents.iter().map(|a| a + 1).collect()
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Solve { instance, identity: _, permutation } => {
            let (joint, _) = load_instance(&instance)?;
            let pi = match permutation {
                Some(order) => Permutation::from_one_based(&order)?,
                None => Permutation::identity(joint.agent_count()),
            };
            let cover = greedy_cover(&joint, &pi)?;
            let covered = joint.effective_universe()
                == setcover_game::ElementSet::full(joint.universe().size());
            println!(
                "{}",
                json!({
                    "cover": one_based(&cover.agent_set()),
                    "order": one_based(cover.selection_order()),
                    "universe_covered": covered,
                })
            );
            Ok(0)
        }

        Command::Distribution { instance, exact, samples, seed, limits } => {
            let (joint, _) = load_instance(&instance)?;
            match (exact, samples) {
                (false, Some(samples)) => {
                    let estimate = monte_carlo_probabilities(&joint, samples, seed);
                    let rows: Vec<_> = estimate
                        .probabilities
                        .iter()
                        .zip(&estimate.standard_errors)
                        .enumerate()
                        .map(|(agent, (p, se))| {
                            json!({
                                "agent": agent + 1,
                                "probability": p,
                                "standard_error": se,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "samples": estimate.samples,
                            "seed": estimate.seed,
                            "estimates": rows,
                        })
                    );
                }
                _ => {
                    let dist = cover_distribution(&joint, limits.limits().permutation_cap)?;
                    let covers: Vec<_> = dist
                        .iter()
                        .map(|(agents, p)| {
                            json!({
                                "agents": one_based(agents),
                                "probability": p.to_string(),
                            })
                        })
                        .collect();
                    let probs: Vec<String> =
                        selection_probabilities(&joint, limits.limits().permutation_cap)?
                            .iter()
                            .map(|p| p.to_string())
                            .collect();
                    println!(
                        "{}",
                        json!({
                            "permutations": dist.permutation_count(),
                            "covers": covers,
                            "selection_probabilities": probs,
                        })
                    );
                }
            }
            Ok(0)
        }

        Command::CheckNe { instance, alpha, beta, variant, limits } => {
            let (joint, file_params) = load_instance(&instance)?;
            let params = resolve_params(alpha, beta, file_params)?;
            let limits = limits.limits();
            match is_nash(&joint, &params, variant, &limits)? {
                NashVerdict::Equilibrium => {
                    println!("{}", json!({ "equilibrium": true }));
                }
                NashVerdict::Deviation(witness) => {
                    let to = witness.to.labels(joint.universe());
                    println!(
                        "{}",
                        json!({
                            "equilibrium": false,
                            "witness": {
                                "agent": witness.agent + 1,
                                "to": to,
                                "utility_before": witness.utility_before.to_string(),
                                "utility_after": witness.utility_after.to_string(),
                            }
                        })
                    );
                }
            }
            Ok(0)
        }

        Command::Enumerate { n, m, alpha, beta, variant, dedup, limits } => {
            let universe = setcover_game::Universe::of_size(n)?;
            let params = GameParams::parse(&alpha, &beta)?;
            let found =
                enumerate_nash(&universe, m, &params, variant, dedup, &limits.limits())?;
            let profiles: Vec<_> = found.iter().map(|j| j.to_labels()).collect();
            println!(
                "{}",
                json!({
                    "count": found.len(),
                    "equilibria": profiles,
                })
            );
            Ok(0)
        }

        Command::Verify { suite, format, limits } => {
            let text = fs::read_to_string(&suite).map_err(|e| Error::InstanceField {
                field: suite.clone(),
                detail: e.to_string(),
            })?;
            let config = SuiteConfig::from_json(&text)?;
            let report = verify_suite(&config, &limits.limits());
            match format.as_str() {
                "json" => println!("{}", report_json(&report)),
                "csv" => print!("{}", report_csv(&report)),
                _ => print!("{}", report_table(&report)),
            }
            Ok(if report.any_refuted() { 1 } else { 0 })
        }
    }
}

fn resolve_params(
    alpha: Option<String>,
    beta: Option<String>,
    from_file: Option<GameParams>,
) -> Result<GameParams, Error> {
    match (alpha, beta, from_file) {
        (Some(a), Some(b), _) => GameParams::parse(&a, &b),
        (None, None, Some(params)) => Ok(params),
        (Some(a), None, Some(params)) => {
            GameParams::new(a.parse()?, params.beta().clone())
        }
        (None, Some(b), Some(params)) => {
            GameParams::new(params.alpha().clone(), b.parse()?)
        }
        _ => Err(Error::InstanceField {
            field: "alpha/beta".into(),
            detail: "not present in the instance file and not fully given as flags".into(),
        }),
    }
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse::<Variant>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
