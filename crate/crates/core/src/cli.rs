//! Command-line front end. The binary only forwards to [`run`].
//!
//! Exit status is 0 on success, 1 for a domain error (the message goes to
//! stderr) and 2 for bad usage or unparsable input.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{Read, Write};
use std::sync::mpsc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{verify_lemmas, DEFAULT_SAMPLES};
use crate::automaton::{parse_dfa, serialize_dfa, Dfa, IsoConvention};
use crate::closure::{f2_transform, f_transform, power_closure};
use crate::families::{generate, FamilyId};
use crate::search::{cyclic_extremal_search, extremal_search, shard_line, ExtremalReport, SearchOptions, Shard};
use crate::synchro::{count_optimal_words, min_switch_count, optimal_sync_word, shortest_sync_length, Objective};
use crate::verify::{run_battery, BatteryOptions};

#[derive(Debug, Parser)]
#[command(
    name = "syncswitch",
    version,
    about = "Synchronizing words and switch counts of finite automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Transform {
    F,
    F2,
}

#[derive(Debug, clap::Args)]
struct SearchArgs {
    /// Number of states.
    #[arg(long)]
    n: usize,
    /// Worker threads (default: all available).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Number of shards (default: eight per worker).
    #[arg(long, default_value_t = 0)]
    shards: usize,
    /// Allow spaces above the default size limit.
    #[arg(long)]
    long: bool,
    /// Which isomorphism to quotient the extremal forms by.
    #[arg(long, default_value = "states-and-symbols", value_parser = parse_convention)]
    convention: IsoConvention,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a generated automaton or a catalog fixture.
    Gen { family: String, n: Option<usize> },
    /// Length of a shortest synchronizing word.
    Ssl {
        /// Automaton file, or - for stdin.
        input: String,
    },
    /// Minimal switch count over synchronizing words.
    Sw { input: String },
    /// An optimal synchronizing word under the chosen objective.
    Opt {
        input: String,
        #[arg(long, default_value = "switch-then-length", value_parser = parse_objective)]
        objective: Objective,
        /// Print the word with runs written as powers.
        #[arg(long)]
        compressed: bool,
    },
    /// Number of optimal synchronizing words.
    Count {
        input: String,
        #[arg(long, default_value = "length", value_parser = parse_objective)]
        objective: Objective,
    },
    /// Power closure; added symbols are listed as comments.
    Closure { input: String },
    /// Doubling transform with a fresh symbol (f) or its binary form (f2).
    Transform {
        #[arg(value_enum)]
        kind: Transform,
        input: String,
    },
    /// Exhaustive search for the largest switch count.
    Search {
        #[command(flatten)]
        common: SearchArgs,
        /// Number of symbols.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Exhaustive search over automata whose first symbol is an n-cycle.
    CyclicSearch {
        #[command(flatten)]
        common: SearchArgs,
        #[arg(long)]
        k: usize,
    },
    /// Structural checks on the distance measure of the B family.
    VerifyLemmas {
        #[arg(long)]
        n: usize,
        /// Random subsets drawn for the sampled checks.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Run the full reproduction battery.
    VerifyPaper {
        /// Include the six-state exhaustive search.
        #[arg(long)]
        long: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Print every sub-check to stderr.
        #[arg(long)]
        verbose: bool,
    },
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse()
}

fn parse_convention(s: &str) -> Result<IsoConvention, String> {
    s.parse()
}

struct Failure {
    code: i32,
    message: String,
}

fn domain(e: impl Display) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

fn usage(e: impl Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

type Outcome = Result<(), Failure>;

fn read_dfa(input: &str, stdin: &mut dyn Read) -> Result<Dfa, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(domain)?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| domain(format!("{input}: {e}")))?
    };
    parse_dfa(&text).map_err(usage)
}

fn out(w: &mut dyn Write, text: impl Display) -> Outcome {
    writeln!(w, "{text}").map_err(domain)
}

/// Runs a search on a worker thread while streaming shard lines to `stderr`.
fn stream_search<F>(stderr: &mut dyn Write, search: F) -> Result<ExtremalReport, Failure>
where
    F: FnOnce(&(dyn Fn(&Shard, &ExtremalReport) + Sync)) -> Result<ExtremalReport, crate::search::SearchError> + Send,
{
    let (tx, rx) = mpsc::channel::<String>();
    std::thread::scope(|scope| {
        let worker = scope.spawn(move || {
            let progress = move |shard: &Shard, report: &ExtremalReport| {
                let _ = tx.send(shard_line(shard, report));
            };
            search(&progress)
        });
        for line in rx {
            let _ = writeln!(stderr, "{line}");
        }
        worker.join().expect("search thread panicked").map_err(domain)
    })
}

fn search_options(args: &SearchArgs) -> SearchOptions {
    SearchOptions {
        shards: args.shards,
        jobs: args.jobs,
        allow_long: args.long,
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Gen { family, n } => {
            let id: FamilyId = family.parse().map_err(usage)?;
            let dfa = generate(&id, n).map_err(usage)?;
            write!(stdout, "{}", serialize_dfa(&dfa)).map_err(domain)
        }
        Command::Ssl { input } => {
            let dfa = read_dfa(&input, stdin)?;
            out(stdout, shortest_sync_length(&dfa).map_err(domain)?)
        }
        Command::Sw { input } => {
            let dfa = read_dfa(&input, stdin)?;
            out(stdout, min_switch_count(&dfa).map_err(domain)?)
        }
        Command::Opt {
            input,
            objective,
            compressed,
        } => {
            let dfa = read_dfa(&input, stdin)?;
            let r = optimal_sync_word(&dfa, objective).map_err(domain)?;
            let word = if compressed {
                r.word.compressed()
            } else {
                r.word.to_string()
            };
            out(stdout, format!("word={word} len={} sw={}", r.length, r.switch))
        }
        Command::Count { input, objective } => {
            let dfa = read_dfa(&input, stdin)?;
            out(stdout, count_optimal_words(&dfa, objective).map_err(domain)?)
        }
        Command::Closure { input } => {
            let dfa = read_dfa(&input, stdin)?;
            let (closed, map) = power_closure(&dfa);
            write!(stdout, "{}{}", map.comment_lines(), serialize_dfa(&closed)).map_err(domain)
        }
        Command::Transform { kind, input } => {
            let dfa = read_dfa(&input, stdin)?;
            let t = match kind {
                Transform::F => f_transform(&dfa),
                Transform::F2 => f2_transform(&dfa).map_err(domain)?,
            };
            write!(stdout, "{}", serialize_dfa(&t)).map_err(domain)
        }
        Command::Search { common, k } => {
            let opts = search_options(&common);
            let report = stream_search(stderr, |p| extremal_search(common.n, k, &opts, p))?;
            let _ = writeln!(stderr, "elapsed {:.2?}", report.elapsed);
            write!(stdout, "{}", report.render(common.convention)).map_err(domain)
        }
        Command::CyclicSearch { common, k } => {
            let opts = search_options(&common);
            let report = stream_search(stderr, |p| cyclic_extremal_search(common.n, k, &opts, p))?;
            let _ = writeln!(stderr, "elapsed {:.2?}", report.elapsed);
            write!(stdout, "{}", report.render(common.convention)).map_err(domain)
        }
        Command::VerifyLemmas { n, samples } => {
            let report = verify_lemmas(n, samples).map_err(domain)?;
            write!(stdout, "{report}").map_err(domain)?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(domain("lemma checks failed"))
            }
        }
        Command::VerifyPaper { long, jobs, verbose } => {
            let opts = BatteryOptions { long, jobs };
            let mut io_error = None;
            let failures = run_battery(&opts, &mut |c| {
                if verbose {
                    for d in &c.details {
                        let _ = writeln!(stderr, "  {d}");
                    }
                }
                if let Err(e) = writeln!(stdout, "{}", c.check) {
                    io_error.get_or_insert(e);
                }
                let _ = stdout.flush();
            });
            if let Some(e) = io_error {
                return Err(domain(e));
            }
            if failures == 0 {
                Ok(())
            } else {
                Err(domain(format!("{failures} acceptance item(s) failed")))
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match execute(cli, stdin, stdout, stderr) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.message);
            f.code
        }
    }
}
