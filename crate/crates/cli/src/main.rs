use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use matchpow::harness::{
    self, construct_linear_forests_with_stats, random_unweighted_graphs, unweighted_last_power_is_polymatroidal,
    verify_classifier_random, verify_forest_corpus, verify_induced_pairs, verify_unweighted_exhaustive, CorpusOptions,
    OracleCaps,
};
use matchpow::homology::Field;
use matchpow::polymatroid::{exchange_check, ExchangeOutcome};
use matchpow::powers::{edge_ideal, matching_power};
use matchpow::resolution::{betti_numbers_with_cap, is_linearly_related_with_cap};
use matchpow::{
    classify_last_power, verify_certificate, Certificate, GraphDocument, IdealDocument, MonomialIdeal,
    WeightedOrientedGraph,
};

const WORKERS_ENV: &str = "MATCHPOW_WORKERS";

#[derive(Parser)]
#[command(name = "matchpow", version, about = "Matching powers of monomial ideals and weighted oriented forests")]
struct Cli {
    /// Worker threads for the verification runs.
    #[arg(long, global = true, env = WORKERS_ENV)]
    workers: Option<usize>,

    /// Optional TOML file with defaults; command-line flags win.
    #[arg(long, global = true, env = "MATCHPOW_CONFIG")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the last matching power of a forest's edge ideal is polymatroidal.
    Classify {
        graph: PathBuf,
        /// Write the certificate here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Replay the certificate against the algebra before answering.
        #[arg(long)]
        verify: bool,
    },
    /// Print the k-th matching power of a graph's edge ideal.
    Power {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ideal_out: Option<PathBuf>,
    },
    /// Multigraded Betti numbers of an ideal.
    Betti {
        ideal: PathBuf,
        #[arg(long)]
        field: Option<FieldArg>,
        /// Include the multigraded entries, not just the graded view.
        #[arg(long)]
        multigraded: bool,
    },
    /// Test one property of an ideal; exit 1 if it fails.
    Check {
        property: Property,
        ideal: PathBuf,
        #[arg(long)]
        field: Option<FieldArg>,
    },
    /// Randomized or exhaustive verification runs.
    #[command(subcommand)]
    Verify(Verify),
    /// Build forests with a given matching number whose last power is polymatroidal.
    Enumerate {
        #[arg(long)]
        nu: usize,
        #[arg(long, default_value_t = 50)]
        budget: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Last matching powers of unweighted graphs are polymatroidal.
    Unweighted {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Every graph on exactly max-n labeled vertices instead of random draws.
        #[arg(long)]
        exhaustive: bool,
    },
    /// The forest classifier agrees with the exchange and Betti oracles.
    Forests {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        /// Every forest on exactly max-n labeled vertices.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Betti numbers and regularity do not grow when passing to induced subgraphs.
    Induced {
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        field: Option<FieldArg>,
        #[arg(long)]
        reports: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 500)]
    trials: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the per-instance reports here instead of stdout.
    #[arg(long)]
    reports: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Gf2,
    Q,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Gf2 => Field::Gf2,
            FieldArg::Q => Field::Rationals,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    /// Polymatroidal (exchange property).
    Poly,
    /// Linear resolution.
    Linear,
    /// Linearly related.
    Linrel,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    workers: Option<usize>,
    seed: Option<u64>,
    field: Option<Field>,
    betti_generators: Option<usize>,
    exchange_pairs: Option<usize>,
}

struct Settings {
    seed: u64,
    field: Field,
    caps: OracleCaps,
}

impl Settings {
    fn field(&self, flag: Option<FieldArg>) -> Field {
        flag.map(Field::from).unwrap_or(self.field)
    }

    fn seed(&self, flag: Option<u64>) -> u64 {
        flag.unwrap_or(self.seed)
    }
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let Some(path) = path else {
        return Ok(Config::default());
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_graph(path: &Path) -> Result<WeightedOrientedGraph> {
    let doc: GraphDocument = read_json(path)?;
    let (d, adjusted) = doc.load()?;
    for a in adjusted {
        eprintln!("note: {} is a source; weight {} reset to 1", a.vertex, a.from);
    }
    Ok(d)
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal> {
    let doc: IdealDocument = read_json(path)?;
    Ok(MonomialIdeal::try_from(doc)?)
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn write_pretty(path: &Path, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

/// Line-delimited reports, to a file or stdout.
struct ReportSink(Box<dyn Write>);

impl ReportSink {
    fn open(path: Option<&Path>) -> Result<Self> {
        let w: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(
                fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(ReportSink(w))
    }

    fn line(&mut self, value: &impl Serialize) -> Result<()> {
        serde_json::to_writer(&mut self.0, value)?;
        writeln!(self.0)?;
        Ok(())
    }

    fn finish(mut self) -> Result<()> {
        self.0.flush()?;
        Ok(())
    }
}

fn exit(ok: bool) -> ExitCode {
    ExitCode::from(if ok { 0 } else { 1 })
}

fn classify(path: &Path, certificate: Option<&Path>, verify: bool) -> Result<ExitCode> {
    let d = load_graph(path)?;
    let cert = classify_last_power(&d)?;
    let replayed = if verify {
        // replay the serialized form, not the in-memory one
        let back: Certificate = serde_json::from_value(serde_json::to_value(&cert)?)?;
        let ok = verify_certificate(&d, &back)?;
        if !ok {
            bail!("certificate failed to replay");
        }
        Some(ok)
    } else {
        None
    };
    if let Some(p) = certificate {
        write_pretty(p, &cert)?;
    }
    print_json(&json!({
        "verdict": cert.verdict,
        "nu": cert.nu,
        "outcome": cert.label(),
        "steps": cert.spine(),
        "replayed": replayed,
    }))?;
    Ok(exit(cert.verdict))
}

fn power(path: &Path, k: usize, out: Option<&Path>) -> Result<ExitCode> {
    let d = load_graph(path)?;
    let ideal = matching_power(&edge_ideal(&d), k)?;
    let doc = IdealDocument::from(&ideal);
    match out {
        Some(p) => write_pretty(p, &doc)?,
        None => print_json(&doc)?,
    }
    eprintln!("{} generators", ideal.len());
    Ok(ExitCode::SUCCESS)
}

fn betti(path: &Path, field: Field, multigraded: bool, cap: usize) -> Result<ExitCode> {
    let ideal = load_ideal(path)?;
    let table = betti_numbers_with_cap(&ideal, field, cap)?;
    let graded: Vec<_> = table
        .graded()
        .into_iter()
        .map(|((i, j), rank)| json!({ "i": i, "j": j, "rank": rank }))
        .collect();
    let mut doc = json!({
        "field": field,
        "graded": graded,
        "totals": table.totals(),
        "regularity": table.regularity(),
    });
    if multigraded {
        let entries: Vec<_> = table
            .entries()
            .map(|(i, a, rank)| json!({ "i": i, "multidegree": a, "rank": rank }))
            .collect();
        doc["entries"] = entries.into();
    }
    print_json(&doc)?;
    Ok(ExitCode::SUCCESS)
}

fn check(property: Property, path: &Path, field: Field, cap: usize) -> Result<ExitCode> {
    let ideal = load_ideal(path)?;
    let doc = match property {
        Property::Poly => match exchange_check(&ideal) {
            ExchangeOutcome::Polymatroidal => json!({ "property": "polymatroidal", "holds": true }),
            ExchangeOutcome::NotEquigenerated => json!({
                "property": "polymatroidal",
                "holds": false,
                "witness": { "reason": "not_equigenerated" },
            }),
            ExchangeOutcome::Failure(w) => json!({
                "property": "polymatroidal",
                "holds": false,
                "witness": w,
            }),
        },
        Property::Linear => {
            let table = betti_numbers_with_cap(&ideal, field, cap)?;
            let holds = table.is_linear();
            let mut doc = json!({ "property": "linear_resolution", "field": field, "holds": holds });
            if !holds {
                let d0 = table.generation_degrees();
                let off: Vec<_> = table
                    .graded()
                    .into_iter()
                    .filter(|&((i, j), _)| d0.len() != 1 || j != d0[0] + i as u32)
                    .map(|((i, j), rank)| json!({ "i": i, "j": j, "rank": rank }))
                    .collect();
                doc["witness"] = json!({ "generation_degrees": d0, "off_diagonal": off });
            }
            doc
        }
        Property::Linrel => {
            let holds = is_linearly_related_with_cap(&ideal, cap)?;
            json!({ "property": "linearly_related", "holds": holds })
        }
    };
    let holds = doc["holds"].as_bool().unwrap_or(false);
    print_json(&doc)?;
    Ok(exit(holds))
}

fn summary(kind: &str, ok: bool, started: Instant, extra: serde_json::Value) -> serde_json::Value {
    let mut doc = json!({
        "summary": kind,
        "ok": ok,
        "prng": harness::PRNG,
        "seconds": started.elapsed().as_secs_f64(),
    });
    if let (Some(d), Some(e)) = (doc.as_object_mut(), extra.as_object()) {
        d.extend(e.clone());
    }
    doc
}

fn verify_unweighted(run: &RunArgs, max_n: usize, exhaustive: bool, s: &Settings) -> Result<ExitCode> {
    let started = Instant::now();
    let mut sink = ReportSink::open(run.reports.as_deref())?;
    let (ok, extra) = if exhaustive {
        let r = verify_unweighted_exhaustive(max_n)?;
        for edges in &r.failures {
            sink.line(&json!({ "n": max_n, "edges": edges, "holds": false }))?;
        }
        (r.all_passed(), json!({ "mode": "exhaustive", "n": max_n, "graphs": r.graphs, "passed": r.passed }))
    } else {
        use rayon::prelude::*;
        let seed = s.seed(run.seed);
        let graphs = random_unweighted_graphs(run.trials, max_n, seed)?;
        let verdicts: Vec<bool> = graphs.par_iter().map(unweighted_last_power_is_polymatroidal).collect();
        for (index, (g, holds)) in graphs.iter().zip(&verdicts).enumerate() {
            sink.line(&json!({
                "index": index,
                "n": g.n(),
                "edges": g.edges(),
                "nu": g.matching_number(),
                "holds": holds,
            }))?;
        }
        let passed = verdicts.iter().filter(|&&v| v).count();
        (
            passed == graphs.len(),
            json!({ "mode": "random", "seed": seed, "max_n": max_n, "graphs": graphs.len(), "passed": passed }),
        )
    };
    sink.finish()?;
    print_json(&summary("unweighted", ok, started, extra))?;
    Ok(exit(ok))
}

fn verify_forests(run: &RunArgs, max_n: usize, max_weight: u32, exhaustive: bool, s: &Settings) -> Result<ExitCode> {
    let started = Instant::now();
    let mut sink = ReportSink::open(run.reports.as_deref())?;
    let (ok, extra) = if exhaustive {
        let opts = CorpusOptions {
            caps: s.caps,
            ..CorpusOptions::default()
        };
        let c = verify_forest_corpus(max_n, max_weight, opts)?;
        for g in &c.failures {
            sink.line(&json!({ "graph": g, "agreement": false }))?;
        }
        let ok = c.disagreements == 0 && c.replay_failures == 0 && c.strong_edge_mismatches == 0;
        let mut extra = serde_json::to_value(&c)?;
        extra["mode"] = "exhaustive".into();
        extra["skipped_fraction"] = c.skipped_fraction().into();
        if let Some(m) = extra.as_object_mut() {
            m.remove("failures");
        }
        (ok, extra)
    } else {
        let seed = s.seed(run.seed);
        let reports = verify_classifier_random(run.trials, max_n, max_weight, seed, s.caps)?;
        for r in &reports {
            sink.line(r)?;
        }
        let agree = reports.iter().filter(|r| r.agreement).count();
        let skipped = reports.iter().filter(|r| r.skipped_oracle).count();
        let accepted = reports.iter().filter(|r| r.verdicts.classifier).count();
        (
            agree == reports.len(),
            json!({
                "mode": "random",
                "seed": seed,
                "max_n": max_n,
                "max_weight": max_weight,
                "trials": reports.len(),
                "agreements": agree,
                "disagreements": reports.len() - agree,
                "oracle_skipped": skipped,
                "classifier_true": accepted,
            }),
        )
    };
    sink.finish()?;
    print_json(&summary("forests", ok, started, extra))?;
    Ok(exit(ok))
}

fn verify_induced(pairs: usize, seed: u64, field: Field, reports: Option<&Path>) -> Result<ExitCode> {
    let started = Instant::now();
    let mut sink = ReportSink::open(reports)?;
    let out = verify_induced_pairs(pairs, seed, field)?;
    for r in &out {
        sink.line(r)?;
    }
    sink.finish()?;
    let held = out.iter().filter(|r| r.holds).count();
    let ok = held == out.len();
    print_json(&summary(
        "induced",
        ok,
        started,
        json!({ "seed": seed, "field": field, "pairs": out.len(), "held": held }),
    ))?;
    Ok(exit(ok))
}

fn enumerate(nu: usize, budget: usize, out: &Path) -> Result<ExitCode> {
    let started = Instant::now();
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let built = construct_linear_forests_with_stats(nu, budget)?;
    let width = built.forests.len().max(1).to_string().len();
    let mut sink = ReportSink::open(Some(&out.join("reports.jsonl")))?;
    for (index, d) in built.forests.iter().enumerate() {
        let file = format!("forest-{index:0width$}.json");
        let doc = GraphDocument::from_graph(d);
        write_pretty(&out.join(&file), &doc)?;
        sink.line(&json!({ "index": index, "file": file, "nu": d.matching_number(), "graph": doc }))?;
    }
    sink.finish()?;
    let doc = summary(
        "enumerate",
        true,
        started,
        json!({ "nu": nu, "budget": budget, "written": built.forests.len(), "rejected": built.rejected }),
    );
    write_pretty(&out.join("summary.json"), &doc)?;
    print_json(&doc)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = load_config(cli.config.as_deref())?;
    if let Some(n) = cli.workers.or(config.workers) {
        if n == 0 {
            bail!("worker count must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let defaults = OracleCaps::default();
    let settings = Settings {
        seed: config.seed.unwrap_or(42),
        field: config.field.unwrap_or_default(),
        caps: OracleCaps {
            betti_generators: config.betti_generators.unwrap_or(defaults.betti_generators),
            exchange_pairs: config.exchange_pairs.unwrap_or(defaults.exchange_pairs),
            field: config.field.unwrap_or(defaults.field),
        },
    };
    let cap = settings.caps.betti_generators;

    match cli.command {
        Command::Classify {
            graph,
            certificate,
            verify,
        } => classify(&graph, certificate.as_deref(), verify),
        Command::Power { graph, k, ideal_out } => power(&graph, k, ideal_out.as_deref()),
        Command::Betti {
            ideal,
            field,
            multigraded,
        } => betti(&ideal, settings.field(field), multigraded, cap),
        Command::Check { property, ideal, field } => check(property, &ideal, settings.field(field), cap),
        Command::Verify(v) => match v {
            Verify::Unweighted { run, max_n, exhaustive } => verify_unweighted(&run, max_n, exhaustive, &settings),
            Verify::Forests {
                run,
                max_n,
                max_weight,
                exhaustive,
            } => verify_forests(&run, max_n, max_weight, exhaustive, &settings),
            Verify::Induced {
                pairs,
                seed,
                field,
                reports,
            } => verify_induced(pairs, settings.seed(seed), settings.field(field), reports.as_deref()),
        },
        Command::Enumerate { nu, budget, out } => enumerate(nu, budget, &out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
