//! The `coxrank` command line.
//!
//! Output goes to stdout as text (default) or JSON (`--format json`, always
//! with a top-level `"schemaVersion": 1`). Diagnostics go to stderr. Exit
//! codes: 0 success or PASS, 1 verification FAIL, 2 usage or precondition
//! error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::cancellator::essentialize;
use crate::classifier::{rank_raag, rank_racg, RankReport};
use crate::error::Error;
use crate::essential::{
    find_even_completion, goodness, is_all_odd_essential, is_good_essential, FalsifyOutcome,
    Falsifier,
};
use crate::graph::DefiningGraph;
use crate::subgroup::{enumerate_members_capped, SubgroupSpec};
use crate::verifier::{self, VerificationReport, DEFAULT_MULTIPLIER_BOUND, DEFAULT_SEED};
use crate::word::{
    self, enumerate_ball_capped, normal_form, parity_vector, reduce, Word, DEFAULT_RADIUS_CAP,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "coxrank", version, about = "Rank classification and covering checks for right-angled Coxeter and Artin groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Racg,
    Raag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DjVariant {
    Prime,
    Doubleprime,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Defining graph file.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[command(flatten)]
    pub common: Common,
    /// Space-separated generator labels.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Algebraic rank of the Coxeter or Artin group on the graph.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "racg")]
        kind: Kind,
    },
    /// Reduced word (earliest cancellations first).
    Reduce(WordArgs),
    /// Canonical normal form.
    Nf(WordArgs),
    /// Group equality of two words.
    Equal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
        #[arg(long)]
        other: String,
    },
    /// Parity vector (abelianization image).
    Parity(WordArgs),
    /// Essentiality certificates, goodness report and bounded falsifier.
    Essential {
        #[command(flatten)]
        args: WordArgs,
        #[arg(long, default_value_t = 2)]
        conj_radius: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS_CAP)]
        cap: usize,
    },
    /// Product of the even-count generators making the word all-odd.
    Completion(WordArgs),
    /// Multiplier synthesis making the word s-good for all s.
    Cancellator {
        #[command(flatten)]
        args: WordArgs,
        /// `commutator`, `whole`, or a subgroup spec file.
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Doubled graphs.
    Dj {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        variant: DjVariant,
    },
    /// Elements of reduced length at most the radius.
    Ball {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS_CAP)]
        cap: usize,
    },
    /// Parity-kernel subgroup queries.
    Subgroup {
        #[command(subcommand)]
        action: SubgroupAction,
    },
    /// Exhaustive and randomized checks with PASS/FAIL reports.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
}

#[derive(Debug, Args)]
pub struct SubgroupSel {
    #[command(flatten)]
    pub common: Common,
    /// `commutator`, `whole`, or a subgroup spec file.
    #[arg(long, default_value = "commutator")]
    pub subgroup: String,
}

#[derive(Debug, Subcommand)]
pub enum SubgroupAction {
    /// Membership of a word.
    Member {
        #[command(flatten)]
        sel: SubgroupSel,
        #[arg(long)]
        word: String,
    },
    /// Index and quotient exponent.
    Index {
        #[command(flatten)]
        sel: SubgroupSel,
    },
    /// Members of the ball of the given radius.
    Members {
        #[command(flatten)]
        sel: SubgroupSel,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct VerifyOpts {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Record wall-clock time in `elapsedMs` (otherwise 0, keeping output reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCheck {
    Parity {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    Wordproblem {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        sample_len: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    Covering {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 8)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS_CAP)]
        cap: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    SubgroupCovering {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "commutator")]
        subgroup: String,
        #[arg(long, default_value_t = 8)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_MULTIPLIER_BOUND)]
        multiplier_bound: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS_CAP)]
        cap: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    Uniformity {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "commutator")]
        subgroup: String,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS_CAP)]
        cap: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    Joinlemma {
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    Certificates {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[arg(long, default_value_t = 3)]
        conj_radius: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(reason: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {reason}\n") }
    }
}

fn load_graph(path: &Path) -> Result<DefiningGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    DefiningGraph::parse(&text).map_err(|e| format!("{}: {}: {e}", path.display(), e.code()))
}

fn domain(e: Error) -> String {
    format!("{}: {e}", e.code())
}

fn load_subgroup(g: &DefiningGraph, sel: &str) -> Result<SubgroupSpec, String> {
    match sel {
        "commutator" => Ok(SubgroupSpec::commutator(g.clone())),
        "whole" => Ok(SubgroupSpec::whole(g.clone())),
        path => {
            let spec = SubgroupSpec::load(Path::new(path)).map_err(|e| format!("{path}: {e}"))?;
            if spec.ambient() != g {
                return Err(format!("{path}: subgroup spec refers to a different graph"));
            }
            Ok(spec)
        }
    }
}

fn check_cap(radius: usize, cap: usize) -> Result<(), String> {
    if radius > cap {
        Err(domain(Error::RadiusExceedsCap { radius, cap }))
    } else {
        Ok(())
    }
}

fn emit(format: Format, command: &str, payload: Value, text: String) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
            obj.insert("command".into(), json!(command));
            match payload {
                Value::Object(fields) => obj.extend(fields),
                other => {
                    obj.insert("result".into(), other);
                }
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json");
            s.push('\n');
            s
        }
    }
}

fn rank_text(r: &RankReport) -> String {
    let mut out = String::new();
    let kind = serde_json::to_value(r.group_kind).unwrap();
    let _ = writeln!(out, "group kind     {}", kind.as_str().unwrap_or_default());
    for f in &r.factors {
        let kind = serde_json::to_value(f.kind).unwrap();
        let _ = writeln!(
            out,
            "factor         {{{}}}  {}  rank {}",
            f.vertex_set.join(","),
            kind.as_str().unwrap_or_default(),
            f.factor_rank
        );
    }
    let _ = writeln!(out, "total rank     {}", r.total_rank);
    let _ = writeln!(
        out,
        "higher-rank lattice commensurable  {}",
        serde_json::to_value(r.higher_rank_lattice_commensurable).unwrap().as_str().unwrap_or_default()
    );
    for n in &r.notes {
        let _ = writeln!(out, "note           {n}");
    }
    out
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "{:<18} {}", "check", r.check);
    let _ = writeln!(out, "{:<18} {}", "verdict", verdict);
    if let Some(reason) = &r.reason {
        let _ = writeln!(out, "{:<18} {}", "reason", reason);
    }
    let _ = writeln!(out, "{:<18} {}", "cases", r.total_cases);
    let _ = writeln!(out, "{:<18} {}", "failures", r.failures.len());
    if let Some(seed) = r.seed {
        let _ = writeln!(out, "{:<18} {}", "seed", seed);
    }
    if r.elapsed_ms > 0 {
        let _ = writeln!(out, "{:<18} {}", "elapsed ms", r.elapsed_ms);
    }
    for (k, v) in &r.details {
        let shown = match v {
            Value::Array(_) | Value::Object(_) => format!("{v}"),
            other => other.to_string(),
        };
        if shown.len() <= 120 {
            let _ = writeln!(out, "{k:<18} {shown}");
        }
    }
    for a in &r.assumptions {
        let _ = writeln!(out, "{:<18} {}", "assumes", a);
    }
    for f in r.failures.iter().take(20) {
        let _ = writeln!(out, "  {}: expected {}, observed {}", f.subject, f.expected, f.observed);
    }
    out
}

fn falsify_json(g: &DefiningGraph, o: &FalsifyOutcome) -> Value {
    match o {
        FalsifyOutcome::NoCounterexample { radius } => {
            json!({ "outcome": "NO_COUNTEREXAMPLE", "radius": radius })
        }
        FalsifyOutcome::Counterexample { conjugator, support } => json!({
            "outcome": "COUNTEREXAMPLE",
            "conjugator": conjugator.render(g),
            "support": g.set_labels(*support),
        }),
    }
}

fn verify_outcome(opts: &VerifyOpts, report: Result<VerificationReport, Error>) -> Outcome {
    match report {
        Err(e) => Outcome::error(domain(e)),
        Ok(mut r) => {
            if !opts.timing {
                r.elapsed_ms = 0;
            }
            let code = if r.passed() { 0 } else { 1 };
            let text = report_text(&r);
            let stdout = emit(opts.format, "verify", serde_json::to_value(&r).unwrap(), text);
            Outcome { code, stdout, stderr: String::new() }
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err("--jobs must be positive".into()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| e.to_string()),
    }
}

fn run_verify(check: VerifyCheck) -> Result<Outcome, String> {
    Ok(match check {
        VerifyCheck::Parity { graph, trials, max_len, seed, opts } => {
            let g = load_graph(&graph)?;
            let r = with_jobs(opts.jobs, || verifier::verify_parity_invariance(&g, trials, max_len, seed))?;
            verify_outcome(&opts, Ok(r))
        }
        VerifyCheck::Wordproblem { graph, max_len, samples, sample_len, seed, opts } => {
            let g = load_graph(&graph)?;
            if max_len.max(if samples > 0 { sample_len } else { 0 }) > 8 {
                return Err("word-problem lengths above 8 are not supported".into());
            }
            let r = with_jobs(opts.jobs, || {
                verifier::verify_word_problem(&g, max_len, samples, sample_len, seed)
            })?;
            verify_outcome(&opts, Ok(r))
        }
        VerifyCheck::Covering { graph, radius, cap, opts } => {
            let g = load_graph(&graph)?;
            let r = with_jobs(opts.jobs, || verifier::verify_covering_capped(&g, radius, cap))?;
            verify_outcome(&opts, r)
        }
        VerifyCheck::SubgroupCovering { graph, subgroup, radius, multiplier_bound, cap, opts } => {
            let g = load_graph(&graph)?;
            let spec = load_subgroup(&g, &subgroup)?;
            let r = with_jobs(opts.jobs, || {
                verifier::verify_subgroup_covering_capped(&g, &spec, radius, multiplier_bound, cap)
            })?;
            verify_outcome(&opts, r)
        }
        VerifyCheck::Uniformity { graph, subgroup, radius, cap, opts } => {
            let g = load_graph(&graph)?;
            let spec = load_subgroup(&g, &subgroup)?;
            let r = with_jobs(opts.jobs, || {
                verifier::verify_cancellator_uniformity_capped(&g, &spec, radius, cap)
            })?;
            verify_outcome(&opts, r)
        }
        VerifyCheck::Joinlemma { max_vertices, opts } => {
            let r = with_jobs(opts.jobs, || verifier::verify_join_lemma(max_vertices))?;
            verify_outcome(&opts, r)
        }
        VerifyCheck::Certificates { graph, radius, conj_radius, opts } => {
            let g = load_graph(&graph)?;
            let r = with_jobs(opts.jobs, || {
                verifier::verify_essential_certificates(&g, radius, conj_radius)
            })?;
            verify_outcome(&opts, r)
        }
    })
}

fn parse_word(g: &DefiningGraph, text: &str) -> Result<Word, String> {
    Word::parse(g, text).map_err(domain)
}

fn execute(command: Command) -> Result<Outcome, String> {
    let out = match command {
        Command::Classify { common, kind } => {
            let g = load_graph(&common.graph)?;
            let report = match kind {
                Kind::Racg => rank_racg(&g),
                Kind::Raag => rank_raag(&g),
            }
            .map_err(domain)?;
            let text = rank_text(&report);
            emit(common.format, "classify", serde_json::to_value(&report).unwrap(), text)
        }
        Command::Reduce(a) => {
            let g = load_graph(&a.common.graph)?;
            let r = reduce(&g, &parse_word(&g, &a.word)?).render(&g);
            emit(a.common.format, "reduce", json!({ "word": r }), format!("{r}\n"))
        }
        Command::Nf(a) => {
            let g = load_graph(&a.common.graph)?;
            let r = normal_form(&g, &parse_word(&g, &a.word)?).render(&g);
            emit(a.common.format, "nf", json!({ "word": r }), format!("{r}\n"))
        }
        Command::Equal { common, word, other } => {
            let g = load_graph(&common.graph)?;
            let eq = word::equal(&g, &parse_word(&g, &word)?, &parse_word(&g, &other)?);
            emit(common.format, "equal", json!({ "equal": eq }), format!("{eq}\n"))
        }
        Command::Parity(a) => {
            let g = load_graph(&a.common.graph)?;
            let p = parity_vector(&parse_word(&g, &a.word)?);
            let entries: Map<String, Value> =
                p.entries(&g).into_iter().map(|(l, b)| (l, json!(b))).collect();
            let text = p
                .entries(&g)
                .iter()
                .map(|(l, b)| format!("{l}:{b}"))
                .collect::<Vec<_>>()
                .join(" ");
            emit(
                a.common.format,
                "parity",
                json!({ "bits": p.to_bits(&g), "parity": entries }),
                format!("{text}\n"),
            )
        }
        Command::Essential { args, conj_radius, cap } => {
            let g = load_graph(&args.common.graph)?;
            check_cap(conj_radius, cap)?;
            let w = parse_word(&g, &args.word)?;
            let r = reduce(&g, &w);
            let report = goodness(&g, &r);
            let falsifier = Falsifier::with_cap(&g, conj_radius, cap).map_err(domain)?;
            let outcome = falsifier.falsify(&g, &w);
            let all_odd = is_all_odd_essential(&g, &w);
            let good = is_good_essential(&g, &w);
            let mut text = String::new();
            let _ = writeln!(text, "{:<16} {}", "reduced", r.render(&g));
            let _ = writeln!(text, "{:<16} {}", "support", g.set_labels(r.letter_set()).join(" "));
            let _ = writeln!(text, "{:<16} {}", "all-odd", all_odd);
            let _ = writeln!(text, "{:<16} {}", "good-for-all", good);
            let _ = writeln!(text, "{:<16} {}", "bad set", report.bad_set.join(" "));
            for st in &report.per_generator {
                let s = serde_json::to_value(st.status).unwrap();
                let _ = writeln!(text, "  {:<14} {}", st.generator, s.as_str().unwrap_or_default());
            }
            let _ = writeln!(
                text,
                "{:<16} {}",
                "falsifier",
                match &outcome {
                    FalsifyOutcome::NoCounterexample { radius } => format!("NO_COUNTEREXAMPLE (radius {radius})"),
                    FalsifyOutcome::Counterexample { conjugator, support } => format!(
                        "COUNTEREXAMPLE u = {}, J = {{{}}}",
                        conjugator.render(&g),
                        g.set_labels(*support).join(",")
                    ),
                }
            );
            emit(
                args.common.format,
                "essential",
                json!({
                    "reduced": r.render(&g),
                    "allOddEssential": all_odd,
                    "goodEssential": good,
                    "goodness": report,
                    "falsifier": falsify_json(&g, &outcome),
                }),
                text,
            )
        }
        Command::Completion(a) => {
            let g = load_graph(&a.common.graph)?;
            let w = parse_word(&g, &a.word)?;
            let alpha = find_even_completion(&g, &w);
            let product = alpha.concat(&w);
            emit(
                a.common.format,
                "completion",
                json!({
                    "completion": alpha.render(&g),
                    "product": product.render(&g),
                    "allOddEssential": is_all_odd_essential(&g, &product),
                }),
                format!("{}\n", alpha.render(&g)),
            )
        }
        Command::Cancellator { args, subgroup } => {
            let g = load_graph(&args.common.graph)?;
            let w = parse_word(&g, &args.word)?;
            let spec = subgroup.as_deref().map(|s| load_subgroup(&g, s)).transpose()?;
            let (out, trace) = essentialize(&g, &w, spec.as_ref()).map_err(domain)?;
            let rendered = trace.render(&g);
            let mut text = String::new();
            for st in &rendered.steps {
                let _ = writeln!(
                    text,
                    "{:?} {}: ({}, {}, {}) {:?} × {} -> {}",
                    st.phase, st.target, st.s, st.s_prime, st.s_double_prime, st.variant, st.multiplier, st.result
                );
            }
            let _ = writeln!(text, "total multiplier  {}", rendered.total_multiplier);
            let _ = writeln!(text, "result            {}", out.render(&g));
            emit(
                args.common.format,
                "cancellator",
                json!({
                    "input": w.render(&g),
                    "result": out.render(&g),
                    "goodEssential": is_good_essential(&g, &out),
                    "trace": rendered,
                }),
                text,
            )
        }
        Command::Dj { common, variant } => {
            let g = load_graph(&common.graph)?;
            let d = match variant {
                DjVariant::Prime => g.dj_prime(),
                DjVariant::Doubleprime => g.dj_double_prime(),
            }
            .map_err(domain)?;
            emit(
                common.format,
                "dj",
                json!({
                    "vertices": d.labels(),
                    "edges": d.edge_labels(),
                    "vertexCount": d.len(),
                    "edgeCount": d.edge_count(),
                }),
                d.to_text(),
            )
        }
        Command::Ball { common, radius, cap } => {
            let g = load_graph(&common.graph)?;
            let ball = enumerate_ball_capped(&g, radius, cap).map_err(domain)?;
            let rendered: Vec<String> = ball.iter().map(|w| w.render(&g)).collect();
            let text = rendered.iter().map(|s| format!("{s}\n")).collect();
            emit(common.format, "ball", json!({ "radius": radius, "size": ball.len(), "elements": rendered }), text)
        }
        Command::Subgroup { action } => match action {
            SubgroupAction::Member { sel, word } => {
                let g = load_graph(&sel.common.graph)?;
                let spec = load_subgroup(&g, &sel.subgroup)?;
                let m = spec.member(&parse_word(&g, &word)?);
                emit(sel.common.format, "subgroup", json!({ "member": m }), format!("{m}\n"))
            }
            SubgroupAction::Index { sel } => {
                let g = load_graph(&sel.common.graph)?;
                let spec = load_subgroup(&g, &sel.subgroup)?;
                let (index, exponent) = spec.index_and_exponent();
                emit(
                    sel.common.format,
                    "subgroup",
                    serde_json::to_value(spec.summary()).unwrap(),
                    format!("index {index}\nexponent {exponent}\n"),
                )
            }
            SubgroupAction::Members { sel, radius, cap } => {
                let g = load_graph(&sel.common.graph)?;
                let spec = load_subgroup(&g, &sel.subgroup)?;
                let members = enumerate_members_capped(&spec, radius, cap).map_err(domain)?;
                let rendered: Vec<String> = members.iter().map(|w| w.render(&g)).collect();
                let text = rendered.iter().map(|s| format!("{s}\n")).collect();
                emit(
                    sel.common.format,
                    "subgroup",
                    json!({ "radius": radius, "size": members.len(), "members": rendered }),
                    text,
                )
            }
        },
        Command::Verify { check } => return run_verify(check),
    };
    Ok(Outcome::ok(out))
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome::ok(rendered)
            } else {
                let first = rendered.lines().next().unwrap_or("usage error").to_string();
                Outcome { code, stdout: String::new(), stderr: format!("{first}\n{rendered}") }
            };
        }
    };
    match execute(cli.command) {
        Ok(o) => o,
        Err(reason) => Outcome::error(reason),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn help_and_unknown_flags() {
        let help = run(["coxrank", "reduce", "--help"]);
        assert_eq!(help.code, 0);
        assert!(help.stdout.contains("--word"));
        let bad = run(["coxrank", "reduce", "--graph", "x", "--word", "a", "--bogus"]);
        assert_eq!(bad.code, 2);
        assert!(bad.stderr.starts_with("error"));
    }

    #[test]
    fn missing_file_is_usage_error() {
        let o = run(["coxrank", "reduce", "--graph", "/nonexistent/g.txt", "--word", "a"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("/nonexistent/g.txt"));
    }
}
