use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bicm::graph::{enumerate_graphs, read_graphs, to_graph6};
use bicm::homology::{
    alexander_dual, betti_table, bi_cm_report, has_linear_resolution, homological_profile,
    is_cohen_macaulay,
};
use bicm::ideal::{edge_ideal, matching_power, t_spread_borel, IdealJson};
use bicm::verify::{
    probe_veronese_conjecture, verify_lemma_notcm, verify_main_theorem, verify_proof_identities,
    verify_prop_kp, verify_small_graphs, veronese_grid, SweepOptions,
};
use bicm::{BettiTable, Monomial, PrimeField, SpreadVector, SquarefreeIdeal, Verdict};

#[derive(Parser)]
#[command(
    name = "bicm",
    version,
    about = "Matching powers of edge ideals and bi-Cohen-Macaulay checks"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    p: u32,
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit graphs on n vertices as graph6, one per line.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        no_isolated: bool,
        /// One canonical representative per isomorphism class.
        #[arg(long)]
        canonical: bool,
    },
    /// Print the input ideal (edge ideal, Borel ideal or JSON).
    Ideal(Source),
    /// Matching power of a graph or squarefree power of an ideal (needs --k).
    Power(Source),
    /// Alexander dual.
    Dual(Source),
    /// Graded Betti numbers of the ideal.
    Betti(Source),
    /// pd, depth, dim, regularity and unmixedness of S/I.
    Profile(Source),
    /// Evaluate a predicate; exits 1 if it fails for any input.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[command(flatten)]
        source: Source,
    },
    /// Run a verifier; exits 1 if the claim fails.
    Verify {
        #[command(subcommand)]
        claim: Claim,
        /// List every witness, not only counterexamples.
        #[arg(long, global = true)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Bicm,
    Cm,
    Linres,
}

#[derive(Subcommand)]
enum Claim {
    /// Exhaustive classification sweep on n vertices.
    Theorem {
        #[arg(long)]
        n: usize,
        /// Allow the seven-vertex sweep.
        #[arg(long)]
        long: bool,
        /// Checkpoint directory (default: $BICM_CHECKPOINT_DIR).
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Graphs on two and three vertices.
    Small,
    /// Complete graphs and complements of paths.
    PropKp {
        #[arg(long)]
        n: usize,
    },
    /// Squarefree Veronese ideals with one generator removed.
    Notcm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Splittings, generator identities and depths from the proof.
    Identities {
        #[arg(long)]
        n: usize,
    },
    /// Squarefree powers of a uniform t-spread Veronese ideal.
    Veronese {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
        /// Treat n, d, t as upper bounds and probe every feasible triple.
        #[arg(long)]
        grid: bool,
    },
}

#[derive(Args)]
struct Source {
    /// graph6 or edge-list text, or `-` for standard input.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    graph_file: Option<PathBuf>,
    /// Ideal as JSON `{"n":..,"gens":[[..],..]}`, or `-` for standard input.
    #[arg(long)]
    ideal: Option<String>,
    /// Borel generator as 1-based variables, e.g. `2,4`.
    #[arg(long)]
    borel: Option<String>,
    /// Spread vector for --borel, e.g. `1` or `2,2`.
    #[arg(long)]
    t: Option<String>,
    /// Number of variables for --borel.
    #[arg(long)]
    n: Option<usize>,
    /// Power to take: matching power for graphs, squarefree power otherwise.
    #[arg(long)]
    k: Option<usize>,
}

/// Exit status with a one-line diagnostic.
struct Failure(u8, String);

impl From<bicm::Error> for Failure {
    fn from(e: bicm::Error) -> Self {
        Failure(2, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

struct Item {
    label: Option<String>,
    ideal: SquarefreeIdeal,
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| usage(format!("reading standard input: {e}")))?;
    Ok(s)
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<usize>()
                .map_err(|_| usage(format!("bad {what} entry {x:?}")))
        })
        .collect()
}

impl Source {
    fn resolve(&self) -> Result<Vec<Item>, Failure> {
        let given = [
            self.graph.is_some(),
            self.graph_file.is_some(),
            self.ideal.is_some(),
            self.borel.is_some(),
        ];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(usage(
                "give exactly one of --graph, --graph-file, --ideal, --borel",
            ));
        }
        if self.k == Some(0) {
            return Err(usage("--k must be at least 1"));
        }
        if let Some(text) = self.graph_text()? {
            let graphs = read_graphs(&text)?;
            let many = graphs.len() > 1;
            return graphs
                .into_iter()
                .map(|g| {
                    let ideal = match self.k {
                        Some(k) => matching_power(&g, k)?,
                        None => edge_ideal(&g),
                    };
                    Ok(Item {
                        label: many.then(|| to_graph6(&g)),
                        ideal,
                    })
                })
                .collect();
        }
        let base = if let Some(src) = &self.ideal {
            let text = if src == "-" {
                read_stdin()?
            } else {
                src.clone()
            };
            let j: IdealJson =
                serde_json::from_str(&text).map_err(|e| usage(format!("bad ideal JSON: {e}")))?;
            SquarefreeIdeal::from_json(&j)?
        } else {
            let u = parse_list(self.borel.as_deref().unwrap_or_default(), "--borel")?;
            let n = self.n.ok_or_else(|| usage("--borel needs --n"))?;
            let t = match &self.t {
                Some(t) => parse_list(t, "--t")?,
                None => vec![1; u.len().saturating_sub(1)],
            };
            if let Some(v) = u.iter().find(|&&v| v == 0 || v > n) {
                return Err(usage(format!("--borel variable {v} is not in 1..={n}")));
            }
            let vars: Vec<usize> = u.iter().map(|v| v - 1).collect();
            t_spread_borel(Monomial::from_vars(&vars), &SpreadVector(t), n)?
        };
        let ideal = match self.k {
            Some(k) => base.squarefree_power(k)?,
            None => base,
        };
        Ok(vec![Item { label: None, ideal }])
    }

    fn graph_text(&self) -> Result<Option<String>, Failure> {
        if let Some(g) = &self.graph {
            return Ok(Some(if g == "-" { read_stdin()? } else { g.clone() }));
        }
        if let Some(path) = &self.graph_file {
            let text =
                fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            return Ok(Some(text));
        }
        Ok(None)
    }
}

struct Out {
    format: Format,
    sink: io::BufWriter<io::Stdout>,
}

impl Out {
    fn emit(&mut self, label: &Option<String>, text: String, value: Value) {
        let line = match (self.format, label) {
            (Format::Text, None) => text,
            (Format::Text, Some(l)) => format!("{l}\t{}", text.replace('\n', "\n\t")),
            (Format::Json, None) => value.to_string(),
            (Format::Json, Some(l)) => json!({ "graph6": l, "result": value }).to_string(),
        };
        // a closed pipe ends output early; the exit status still reflects the run
        let _ = writeln!(self.sink, "{line}");
    }
}

fn betti_text(t: &BettiTable) -> String {
    let Some(max_i) = t.max_index() else {
        return "(zero)".into();
    };
    let entries: Vec<((usize, usize), usize)> = t.entries().collect();
    let min_row = entries.iter().map(|((i, j), _)| j - i).min().unwrap_or(0);
    let max_row = entries.iter().map(|((i, j), _)| j - i).max().unwrap_or(0);
    let cell = |v: usize| {
        if v == 0 {
            ".".to_string()
        } else {
            v.to_string()
        }
    };
    let width = entries
        .iter()
        .map(|(_, v)| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    let mut lines = Vec::new();
    let mut head = format!("{:>7}", "");
    for i in 0..=max_i {
        head.push_str(&format!(" {i:>width$}"));
    }
    lines.push(head);
    for r in min_row..=max_row {
        let mut row = format!("{:>6}:", r);
        for i in 0..=max_i {
            row.push_str(&format!(" {:>width$}", cell(t.get(i, i + r))));
        }
        lines.push(row);
    }
    let mut total = format!("{:>7}", "total:");
    for i in 0..=max_i {
        total.push_str(&format!(" {:>width$}", t.total(i)));
    }
    lines.push(total);
    lines.join("\n")
}

fn verdict_text(v: &Verdict, verbose: bool) -> String {
    let mut lines = vec![format!(
        "{} {} (p = {}): {}",
        if v.passed { "PASS" } else { "FAIL" },
        v.claim_id,
        v.p,
        v.summary
    )];
    lines.push(format!(
        "  {} instances, {} ideals audited, {} disagreements, {:.2}s",
        v.instances_checked,
        v.audit.ideals,
        v.audit.disagreements(),
        v.elapsed
    ));
    for note in &v.audit.notes {
        lines.push(format!("  audit: {note}"));
    }
    for w in v.witnesses.iter().filter(|w| verbose || w.counterexample) {
        let mut s = format!(
            "  {} ",
            if w.counterexample {
                "counterexample"
            } else {
                "ok"
            }
        );
        if !w.label.is_empty() {
            s.push_str(&w.label);
            s.push(' ');
        }
        if let Some(g6) = &w.graph6 {
            s.push_str(&format!("[{g6}] "));
        }
        if let Some(k) = w.k {
            s.push_str(&format!("k={k} "));
        }
        s.push_str(&serde_json::to_string(&w.facts).unwrap_or_default());
        lines.push(s);
    }
    lines.join("\n")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let field = PrimeField::new(cli.p)?;
    if cli.jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    let mut out = Out {
        format: cli.format,
        sink: io::BufWriter::new(io::stdout()),
    };
    let mut code = 0u8;
    match cli.command {
        Command::Gen {
            n,
            no_isolated,
            canonical,
        } => {
            for g in enumerate_graphs(n, no_isolated, canonical)? {
                let g6 = to_graph6(&g);
                out.emit(&None, g6.clone(), Value::String(g6));
            }
        }
        Command::Ideal(src) => {
            for it in src.resolve()? {
                out.emit(&it.label, it.ideal.to_string(), json!(it.ideal.to_json()));
            }
        }
        Command::Power(src) => {
            if src.k.is_none() {
                return Err(usage("power needs --k"));
            }
            for it in src.resolve()? {
                out.emit(&it.label, it.ideal.to_string(), json!(it.ideal.to_json()));
            }
        }
        Command::Dual(src) => {
            for it in src.resolve()? {
                let d = alexander_dual(&it.ideal)?;
                out.emit(&it.label, d.to_string(), json!(d.to_json()));
            }
        }
        Command::Betti(src) => {
            for it in src.resolve()? {
                let t = betti_table(&it.ideal, field)?;
                out.emit(&it.label, betti_text(&t), json!(t.to_json()));
            }
        }
        Command::Profile(src) => {
            for it in src.resolve()? {
                let p = homological_profile(&it.ideal, field)?;
                let text = format!(
                    "pd {}\ndepth {}\ndim {}\nregularity {}\nunmixed {}",
                    p.pd, p.depth, p.dim, p.regularity, p.is_unmixed
                );
                out.emit(&it.label, text, json!(p));
            }
        }
        Command::Check { what, source } => {
            for it in source.resolve()? {
                let (name, ok, detail) = match what {
                    CheckKind::Bicm => {
                        let r = bi_cm_report(&it.ideal, field)?;
                        (
                            "bicm",
                            r.is_bi_cm(),
                            json!({
                                "cohen_macaulay": r.cohen_macaulay,
                                "linear_resolution": r.linear_resolution,
                                "dual_cohen_macaulay": r.dual_cohen_macaulay,
                            }),
                        )
                    }
                    CheckKind::Cm => ("cm", is_cohen_macaulay(&it.ideal, field)?, Value::Null),
                    CheckKind::Linres => (
                        "linres",
                        has_linear_resolution(&it.ideal, field)?,
                        Value::Null,
                    ),
                };
                if !ok {
                    code = 1;
                }
                let mut value = json!({ "check": name, "p": field.modulus(), "result": ok });
                let mut text = format!("{name} {ok}");
                if let Value::Object(m) = &detail {
                    value["detail"] = detail.clone();
                    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    text.push_str(&format!(" ({})", parts.join(", ")));
                }
                out.emit(&it.label, text, value);
            }
        }
        Command::Verify { claim, verbose } => {
            let verdicts = match claim {
                Claim::Theorem {
                    n,
                    long,
                    checkpoint,
                } => {
                    let mut opts = SweepOptions::from_env();
                    opts.jobs = cli.jobs;
                    opts.allow_long = long;
                    if checkpoint.is_some() {
                        opts.checkpoint_dir = checkpoint;
                    }
                    vec![verify_main_theorem(n, field, &opts)?]
                }
                Claim::Small => vec![verify_small_graphs(field)?],
                Claim::PropKp { n } => vec![verify_prop_kp(n, field)?],
                Claim::Notcm { n, d } => vec![verify_lemma_notcm(n, d, field)?],
                Claim::Identities { n } => vec![verify_proof_identities(n, field)?],
                Claim::Veronese { n, d, t, grid } => {
                    if grid {
                        veronese_grid(n, d, t, field)?
                    } else {
                        vec![probe_veronese_conjecture(n, d, t, field)?]
                    }
                }
            };
            for v in verdicts {
                if !v.passed {
                    code = 1;
                }
                let value = serde_json::to_value(&v).map_err(|e| usage(e.to_string()))?;
                out.emit(&None, verdict_text(&v, verbose), value);
            }
        }
    }
    let _ = out.sink.flush();
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("bicm: {msg}");
            ExitCode::from(code)
        }
    }
}
