//! `sylprob`: commuting probabilities of Sylow subgroups from the command
//! line. Every report is JSON; `verify` writes one JSON object per line.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use sylprob_core::lab::{
    builtin_corpus, builtin_implications, example44_report, parse_corpus, run_suite, sample_lemmas,
    sharpness_witnesses, CorpusEntry, DEFAULT_SAMPLE_MAX_ORDER,
};
use sylprob_core::limits::{Limits, DEFAULT_ENUMERATION_BUDGET};
use sylprob_core::probability::{omega_set, pr, pr_star};
use sylprob_core::structure::{is_nilpotent, is_soluble, sylow_subgroup, upper_fitting_series};
use sylprob_core::{build, GroupError, GroupExpression, PrimeSet};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXAMPLE_BLOCKS: std::ops::RangeInclusive<usize> = 1..=5;

#[derive(Parser)]
#[command(name = "sylprob", version, about = "Commuting probabilities of Sylow subgroups")]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Largest group order that may be enumerated element by element
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads (default: available cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Admit Sp62 into the builtin corpus and as a group expression
    #[arg(long, global = true)]
    include_stretch: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Values of pr(P, Q) over Sylow p- and q-subgroups
    Pr {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// Only the value for one fixed pair of Sylow subgroups
        #[arg(long)]
        fixed: bool,
    },
    /// pr*_G(pi1, pi2)
    Prstar {
        #[arg(long)]
        group: String,
        /// Prime set: *, 2, 2', odd, {2,3}
        #[arg(long, default_value = "*")]
        pi1: String,
        #[arg(long, default_value = "*")]
        pi2: String,
    },
    /// Order, nilpotency, solubility and the Fitting series
    Classify {
        #[arg(long)]
        group: String,
    },
    /// Check the criteria over a corpus
    Verify {
        /// JSON array of {"label": ..., "expr": ...}
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        corpus: Option<PathBuf>,
        #[arg(long)]
        builtin: bool,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Suite {
    Implications,
    Sharpness,
    Example44,
    Sampling,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct RunConfig {
    enumeration_budget: u64,
    quotient_degree_budget: u64,
    parallelism: u64,
    include_stretch: bool,
}

enum Failure {
    Usage(String),
    Budget(String),
    Counterexample(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            e if e.is_budget() => Failure::Budget(e.to_string()),
            GroupError::Inconsistent(m) => Failure::Counterexample(m),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn setup(run: &RunArgs) -> Result<RunConfig, Failure> {
    let limits = Limits {
        enumeration_budget: run.budget,
        ..Limits::default()
    };
    limits.install().map_err(Failure::Usage)?;
    let parallelism = configure_threads(run.jobs)?;
    Ok(RunConfig {
        enumeration_budget: limits.enumeration_budget,
        quotient_degree_budget: limits.quotient_degree_budget,
        parallelism,
        include_stretch: run.include_stretch,
    })
}

#[cfg(feature = "parallel")]
fn configure_threads(jobs: Option<u64>) -> Result<u64, Failure> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(rayon::current_num_threads() as u64)
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_jobs: Option<u64>) -> Result<u64, Failure> {
    Ok(1)
}

fn parse_group(s: &str, cfg: &RunConfig) -> Result<GroupExpression, Failure> {
    let expr = GroupExpression::parse(s)?;
    if expr.is_stretch() && !cfg.include_stretch {
        return Err(Failure::Usage(format!("{s} needs --include-stretch")));
    }
    Ok(expr)
}

fn emit(out: &mut impl Write, v: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)
}

fn cmd_pr(cfg: &RunConfig, group: &str, p: u64, q: u64, fixed: bool) -> Outcome {
    let expr = parse_group(group, cfg)?;
    if p == q {
        return Err(Failure::Usage("--p and --q must differ".into()));
    }
    let g = build(&expr)?;
    let report = if fixed {
        let value = pr(&sylow_subgroup(&g, p)?, &sylow_subgroup(&g, q)?)?;
        json!({ "p": p, "q": q, "value": value })
    } else {
        serde_json::to_value(omega_set(&g, p, q)?).expect("report serializes")
    };
    emit(
        &mut io::stdout().lock(),
        &json!({ "config": cfg, "group": group, "report": report }),
    )?;
    Ok(())
}

fn cmd_prstar(cfg: &RunConfig, group: &str, pi1: &str, pi2: &str) -> Outcome {
    let expr = parse_group(group, cfg)?;
    let (a, b) = (PrimeSet::parse(pi1)?, PrimeSet::parse(pi2)?);
    let g = build(&expr)?;
    let report = pr_star(&g, &a, &b)?;
    emit(
        &mut io::stdout().lock(),
        &json!({ "config": cfg, "group": group, "report": report }),
    )?;
    Ok(())
}

fn cmd_classify(cfg: &RunConfig, group: &str) -> Outcome {
    let expr = parse_group(group, cfg)?;
    let g = build(&expr)?;
    let series = upper_fitting_series(&g)?;
    let report = json!({
        "order": g.order().to_string(),
        "prime_divisors": g.prime_divisors(),
        "is_nilpotent": is_nilpotent(&g)?,
        "is_soluble": is_soluble(&g)?,
        "fitting_order": series.term(1).order().to_string(),
        "f2_order": series.term(2).order().to_string(),
        "radical_order": series.radical().order().to_string(),
        "fitting_index": (g.order() / series.term(1).order()).to_string(),
        "fitting_series_orders": series.orders().iter().map(|o| o.to_string()).collect::<Vec<_>>(),
    });
    emit(
        &mut io::stdout().lock(),
        &json!({ "config": cfg, "group": group, "report": report }),
    )?;
    Ok(())
}

fn load_corpus(cfg: &RunConfig, path: Option<&PathBuf>) -> Result<Vec<CorpusEntry>, Failure> {
    let corpus = match path {
        None => builtin_corpus(cfg.include_stretch),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            parse_corpus(&text)?
        }
    };
    if let Some(e) = corpus.iter().find(|e| e.expr.is_stretch() && !cfg.include_stretch) {
        return Err(Failure::Usage(format!("{} needs --include-stretch", e.label)));
    }
    Ok(corpus)
}

fn cmd_verify(cfg: &RunConfig, corpus: Option<&PathBuf>, suite: Suite) -> Outcome {
    let corpus = load_corpus(cfg, corpus)?;
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut out = io::stdout().lock();
    emit(
        &mut out,
        &json!({ "config": cfg, "suite": suite, "corpus_size": corpus.len() }),
    )?;
    if corpus.is_empty() {
        eprintln!("warning: empty corpus, nothing to check");
    }

    let mut problems: Vec<String> = Vec::new();
    let mut budget_skips = 0usize;
    let mut summary = serde_json::Map::new();

    if wants(Suite::Implications) {
        let specs = builtin_implications();
        let report = run_suite(&corpus, &specs);
        for v in &report.verdicts {
            emit(&mut out, v)?;
        }
        for s in &report.skipped {
            eprintln!("warning: skipped {}: {}", s.group_label, s.reason);
            budget_skips += usize::from(s.budget);
            emit(&mut out, &json!({ "skipped": s }))?;
        }
        for row in &report.index_table {
            emit(&mut out, &json!({ "index_row": row }))?;
        }
        let n = report.counterexamples().count();
        if n > 0 {
            problems.push(format!("{n} counterexample verdicts"));
        }
        summary.insert(
            "implications".into(),
            json!({
                "verdicts": report.verdicts.len(),
                "counterexamples": n,
                "skipped": report.skipped.len(),
                "unconfirmed": if corpus.is_empty() { vec![] } else { report.unconfirmed(&specs) },
            }),
        );
    }

    if wants(Suite::Sharpness) {
        let report = sharpness_witnesses()?;
        for item in &report.items {
            emit(&mut out, &json!({ "sharpness": item }))?;
        }
        let n = report.mismatches().count();
        if n > 0 {
            problems.push(format!("{n} sharpness mismatches"));
        }
        summary.insert(
            "sharpness".into(),
            json!({ "items": report.items.len(), "mismatches": n }),
        );
    }

    if wants(Suite::Example44) {
        let mut reports = Vec::new();
        for s in EXAMPLE_BLOCKS {
            let r = example44_report(s)?;
            emit(&mut out, &json!({ "example44": r }))?;
            if !(r.sylow_pairs_ok && r.index_ok) {
                problems.push(format!("InvolutionExample({s}) breaks the Sylow-pair bound or index"));
            }
            reports.push(json!({ "s": s, "passed": r.passed(), "hall_pairs_ok": r.hall_pairs_ok }));
        }
        summary.insert("example44".into(), Value::Array(reports));
    }

    if wants(Suite::Sampling) {
        let report = sample_lemmas(&corpus, DEFAULT_SAMPLE_MAX_ORDER);
        for c in report.failures() {
            emit(&mut out, &json!({ "sample_failure": c }))?;
        }
        for s in &report.skipped {
            eprintln!("warning: sampling skipped {s}");
        }
        let n = report.failures().count();
        if n > 0 {
            problems.push(format!("{n} sampled inequality failures"));
        }
        summary.insert(
            "sampling".into(),
            json!({ "checks": report.checks.len(), "failures": n, "by_property": report.counts() }),
        );
    }

    let passed = problems.is_empty();
    emit(
        &mut out,
        &json!({ "config": cfg, "summary": summary, "passed": passed }),
    )?;
    out.flush()?;
    if !passed {
        return Err(Failure::Counterexample(problems.join("; ")));
    }
    if budget_skips > 0 {
        return Err(Failure::Budget(format!("{budget_skips} groups exceeded the budget")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = setup(&cli.run).and_then(|cfg| match &cli.command {
        Command::Pr { group, p, q, fixed } => cmd_pr(&cfg, group, *p, *q, *fixed),
        Command::Prstar { group, pi1, pi2 } => cmd_prstar(&cfg, group, pi1, pi2),
        Command::Classify { group } => cmd_classify(&cfg, group),
        Command::Verify {
            corpus,
            builtin: _,
            suite,
        } => cmd_verify(&cfg, corpus.as_ref(), *suite),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("budget exceeded: {m}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Counterexample(m)) => {
            eprintln!("FAILED: {m}");
            ExitCode::from(EXIT_COUNTEREXAMPLE)
        }
    }
}
