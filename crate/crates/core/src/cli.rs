//! Command-line front end: one analysis per invocation, rendered as text or
//! as a JSON report with stable keys
//! `{command, graph: {n, m, source}, params, result, certificates, exit_reason}`.
//!
//! Exit status: 0 success, 1 a negative finding about the graph (not an
//! r-graph, bound missed, no double cover, ...), 2 usage or input errors,
//! 3 an exhausted cap.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, BoundKind, BoundValue};
use crate::cover::{
    self, CoverOptions, CoverReport, CoverState, CutAudit, IterationCertificate, Mode,
};
use crate::cuts::{self, DEFAULT_ODD_CAP};
use crate::error::{Error, Result};
use crate::exact::ExactAnalyzer;
use crate::fractional::{self, DoubleCover};
use crate::generators;
use crate::graph::Multigraph;
use crate::matching::{Matching, DEFAULT_PM_CAP};
use crate::numeric::{fmt_decimal, fmt_rational, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "pmcover",
    version,
    about = "Cover r-graphs with perfect matchings and certify the result"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print a graph as an edge list.
    Gen,
    /// Decide whether the graph is an r-graph.
    Check,
    /// Run the greedy cover for k steps with per-step certificates.
    Cover,
    /// Exact best k-unions and the excessive index.
    Exact,
    /// Closed-form lower bounds.
    Bounds {
        /// Print the k = 2..9, r = 3..5 table.
        #[arg(long)]
        table1: bool,
    },
    /// Convex decomposition of the uniform 1/r vector.
    Decompose,
    /// r*p perfect matchings covering every edge p times.
    Multicolor,
    /// Search for 2r perfect matchings covering every edge twice.
    BfSearch,
    /// Cut-invariant audit after each greedy step.
    Audit,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gen => "gen",
            Command::Check => "check",
            Command::Cover => "cover",
            Command::Exact => "exact",
            Command::Bounds { .. } => "bounds",
            Command::Decompose => "decompose",
            Command::Multicolor => "multicolor",
            Command::BfSearch => "bf-search",
            Command::Audit => "audit",
        }
    }

    fn needs_graph(&self) -> bool {
        !matches!(self, Command::Bounds { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    #[arg(short = 'r', global = true)]
    pub r: Option<u32>,
    #[arg(short = 'k', global = true)]
    pub k: Option<usize>,
    #[arg(long, global = true, default_value = "fast", value_parser = parse_mode)]
    pub mode: Mode,
    /// Named generator, e.g. `petersen`, `dipole:5`, `random_regular:16,3,7`.
    #[arg(long = "gen", global = true, value_name = "NAME[:PARAMS]")]
    pub generator: Option<String>,
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Run the command on every edge-list file in a directory.
    #[arg(long, global = true)]
    pub corpus: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_PM_CAP, value_parser = positive)]
    pub pm_cap: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_ODD_CAP, value_parser = positive)]
    pub odd_cap: usize,
    /// Seed for `random_regular` specs given without one.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

fn parse_mode(s: &str) -> Result<Mode> {
    s.parse()
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Generator(String),
    File(PathBuf),
    Corpus(PathBuf),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub source: Option<Source>,
    pub r: Option<u32>,
    pub k: Option<usize>,
    pub mode: Mode,
    pub pm_cap: usize,
    pub odd_cap: usize,
    pub format: Format,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let o = cli.options;
        let mut sources = Vec::new();
        if let Some(spec) = o.generator {
            sources.push(Source::Generator(spec));
        }
        if let Some(path) = o.input {
            sources.push(Source::File(path));
        }
        if let Some(dir) = o.corpus {
            sources.push(Source::Corpus(dir));
        }
        if sources.len() > 1 {
            return Err(Error::InvalidParameter(
                "give exactly one of --gen, --input, --corpus".into(),
            ));
        }
        let source = sources.pop();
        if cli.command.needs_graph() && source.is_none() {
            return Err(Error::InvalidParameter(format!(
                "`{}` needs one of --gen, --input, --corpus",
                cli.command.name()
            )));
        }
        Ok(Self {
            command: cli.command,
            source,
            r: o.r,
            k: o.k,
            mode: o.mode,
            pm_cap: o.pm_cap,
            odd_cap: o.odd_cap,
            format: o.format,
            seed: o.seed,
        })
    }

    pub fn try_parse_from<I, T>(args: I) -> std::result::Result<Result<Self>, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        Cli::try_parse_from(args).map(Self::from_cli)
    }

    fn require_r(&self) -> Result<u32> {
        self.r
            .ok_or_else(|| Error::InvalidParameter(format!("`{}` needs -r", self.command.name())))
    }

    fn require_k(&self) -> Result<usize> {
        self.k
            .ok_or_else(|| Error::InvalidParameter(format!("`{}` needs -k", self.command.name())))
    }

    fn params(&self) -> Value {
        json!({
            "r": self.r,
            "k": self.k,
            "mode": self.mode,
            "pm_cap": self.pm_cap,
            "odd_cap": self.odd_cap,
            "seed": self.seed,
        })
    }
}

/// Parses `args` (including the program name) and runs the command. Usage
/// errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            status
        }
        Ok(Err(e)) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            2
        }
        Ok(Ok(config)) => dispatch(&config, out),
    }
}

/// Runs one configured analysis, writes its report(s) and returns the exit
/// status.
pub fn dispatch(config: &RunConfig, out: &mut dyn Write) -> i32 {
    let status = match &config.source {
        Some(Source::Corpus(dir)) => run_corpus(config, dir, out),
        source => {
            let report = match source {
                None => build_report(config, None, None),
                Some(s) => {
                    let label = source_label(s);
                    match load_source(config, s) {
                        Ok(g) => build_report(config, Some(&g), Some(label)),
                        Err(e) => error_report(config, None, Some(label), e),
                    }
                }
            };
            emit(config.format, &report, true, out);
            report.status
        }
    };
    let _ = out.flush();
    status
}

fn run_corpus(config: &RunConfig, dir: &Path, out: &mut dyn Write) -> i32 {
    let files = match corpus_files(dir) {
        Ok(f) => f,
        Err(e) => {
            let report = error_report(config, None, Some(dir.display().to_string()), e);
            emit(config.format, &report, true, out);
            return report.status;
        }
    };
    let (mut ok, mut findings, mut errors, mut worst) = (0, 0, 0, 0);
    for path in &files {
        let label = path.display().to_string();
        let report = match read_graph(path) {
            Ok(g) => build_report(config, Some(&g), Some(label)),
            Err(e) => error_report(config, None, Some(label), e),
        };
        match report.status {
            0 => ok += 1,
            1 => findings += 1,
            _ => errors += 1,
        }
        worst = worst.max(report.status);
        if config.format == Format::Text {
            let _ = writeln!(out, "== {} ==", path.display());
        }
        emit(config.format, &report, false, out);
    }
    let summary = json!({
        "summary": {"files": files.len(), "ok": ok, "findings": findings, "errors": errors}
    });
    let _ = match config.format {
        Format::Text => writeln!(
            out,
            "summary: {} files, {ok} ok, {findings} findings, {errors} errors",
            files.len()
        ),
        Format::Json => writeln!(out, "{summary}"),
    };
    worst
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let hidden = path
            .file_name()
            .and_then(|n| n.to_str())
            .is_none_or(|n| n.starts_with('.'));
        if path.is_file() && !hidden {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    Multigraph::read_edge_list(fs::File::open(path)?)
}

fn source_label(source: &Source) -> String {
    match source {
        Source::Generator(spec) => format!("gen:{spec}"),
        Source::File(p) | Source::Corpus(p) => p.display().to_string(),
    }
}

fn load_source(config: &RunConfig, source: &Source) -> Result<Multigraph> {
    match source {
        Source::Generator(spec) => generators::from_spec(&seeded_spec(spec, config.seed)),
        Source::File(path) => read_graph(path),
        Source::Corpus(_) => Err(Error::Internal("corpus is not a single graph".into())),
    }
}

/// Appends `--seed` to a `random_regular:n,r` spec that lacks one.
fn seeded_spec(spec: &str, seed: Option<u64>) -> String {
    match (spec.split_once(':'), seed) {
        (Some(("random_regular", params)), Some(seed)) if params.split(',').count() == 2 => {
            format!("{spec},{seed}")
        }
        _ => spec.to_string(),
    }
}

/// Everything needed to render one run in either format.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub graph: Option<Value>,
    pub params: Value,
    pub result: Value,
    pub certificates: Vec<Value>,
    pub text: String,
    pub exit_reason: String,
    pub status: i32,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "graph": self.graph,
            "params": self.params,
            "result": self.result,
            "certificates": self.certificates,
            "exit_reason": self.exit_reason,
        })
    }
}

fn emit(format: Format, report: &Report, pretty: bool, out: &mut dyn Write) {
    let _ = match format {
        Format::Text => {
            let mut text = report.text.clone();
            if report.status != 0 {
                text.push_str(&format!("exit: {}\n", report.exit_reason));
            }
            write!(out, "{text}")
        }
        Format::Json if pretty => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("json values serialize")
        ),
        Format::Json => writeln!(out, "{}", report.to_json()),
    };
}

fn graph_info(g: Option<&Multigraph>, source: Option<String>) -> Option<Value> {
    match (g, source) {
        (Some(g), source) => Some(json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "source": source,
        })),
        (None, Some(source)) => Some(json!({"n": null, "m": null, "source": source})),
        (None, None) => None,
    }
}

/// Result of one analysis before it is wrapped into a [`Report`].
struct Outcome {
    result: Value,
    certificates: Vec<Value>,
    text: String,
    /// Negative finding: exit status 1 with this reason.
    finding: Option<String>,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Self {
            result,
            certificates: Vec::new(),
            text,
            finding: None,
        }
    }
}

/// Runs the configured command on `graph` and packages the outcome.
pub fn build_report(
    config: &RunConfig,
    graph: Option<&Multigraph>,
    source: Option<String>,
) -> Report {
    let outcome = match graph {
        Some(g) => execute(config, Some(g)),
        None if config.command.needs_graph() => {
            Err(Error::InvalidParameter("no graph given".into()))
        }
        None => execute(config, None),
    };
    match outcome {
        Ok(o) => Report {
            command: config.command.name(),
            graph: graph_info(graph, source),
            params: config.params(),
            result: o.result,
            certificates: o.certificates,
            text: o.text,
            status: if o.finding.is_some() { 1 } else { 0 },
            exit_reason: o.finding.unwrap_or_else(|| "ok".into()),
        },
        Err(e) => error_report(config, graph, source, e),
    }
}

fn error_report(
    config: &RunConfig,
    graph: Option<&Multigraph>,
    source: Option<String>,
    e: Error,
) -> Report {
    let reason = format!("{}: {e}", e.code());
    Report {
        command: config.command.name(),
        graph: graph_info(graph, source),
        params: config.params(),
        result: Value::Null,
        certificates: Vec::new(),
        text: format!("error[{}]: {e}\n", e.code()),
        exit_reason: reason,
        status: e.exit_status(),
    }
}

fn execute(config: &RunConfig, graph: Option<&Multigraph>) -> Result<Outcome> {
    match (config.command, graph) {
        (Command::Bounds { table1 }, _) => run_bounds(config, table1),
        (_, None) => Err(Error::InvalidParameter("no graph given".into())),
        (Command::Gen, Some(g)) => Ok(run_gen(g)),
        (Command::Check, Some(g)) => run_check(config, g),
        (Command::Cover, Some(g)) => run_cover(config, g),
        (Command::Audit, Some(g)) => run_audit(config, g),
        (Command::Exact, Some(g)) => run_exact(config, g),
        (Command::Decompose, Some(g)) => run_decompose(config, g),
        (Command::Multicolor, Some(g)) => run_multicolor(config, g),
        (Command::BfSearch, Some(g)) => run_bf_search(config, g),
    }
}

fn rat(v: &Rational) -> Value {
    Value::String(fmt_rational(v))
}

fn matching_ids(m: &Matching) -> Vec<usize> {
    m.edges().ids().to_vec()
}

fn matchings_json(ms: &[Matching]) -> Value {
    json!(ms.iter().map(matching_ids).collect::<Vec<_>>())
}

fn run_gen(g: &Multigraph) -> Outcome {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
    Outcome::ok(json!({ "edges": edges }), g.to_edge_list())
}

fn run_check(config: &RunConfig, g: &Multigraph) -> Result<Outcome> {
    let r = config.require_r()?;
    if !g.is_r_regular(r) {
        return Ok(Outcome {
            result: json!({"r": r, "regular": false, "is_r_graph": false}),
            certificates: Vec::new(),
            text: format!("r-graph: no (not {r}-regular)\n"),
            finding: Some("not_regular".into()),
        });
    }
    let check = cuts::is_r_graph(g, r)?;
    let cut = &check.min_cut;
    let result = json!({
        "r": r,
        "regular": true,
        "is_r_graph": check.is_r_graph,
        "min_odd_cut": rat(&cut.value),
        "witness": cut.witness,
    });
    if check.is_r_graph {
        Ok(Outcome::ok(
            result,
            format!("r-graph: yes (min odd cut {})\n", fmt_rational(&cut.value)),
        ))
    } else {
        Ok(Outcome {
            result,
            certificates: Vec::new(),
            text: format!(
                "r-graph: no (min odd cut {} around {})\n",
                fmt_rational(&cut.value),
                cut.witness
            ),
            finding: Some("not_r_graph".into()),
        })
    }
}

fn cover_options(config: &RunConfig) -> CoverOptions {
    CoverOptions {
        mode: config.mode,
        pm_cap: config.pm_cap,
        odd_cap: config.odd_cap,
    }
}

fn certificate_json(c: &IterationCertificate) -> Value {
    json!({
        "step": c.step,
        "level": c.level,
        "membership_verified": c.membership_verified,
        "membership_failure": c.membership_failure,
        "uncovered_before": c.uncovered_before,
        "predicted_gain": rat(&c.predicted_gain),
        "uniform_gain": rat(&c.uniform_gain),
        "actual_gain": c.actual_gain,
        "tight_cuts": c.tight_cuts,
        "cut_audit": c.cut_audit,
        "stalled": c.stalled,
    })
}

fn audit_text(audit: &CutAudit) -> String {
    match audit {
        CutAudit::NotChecked => "not checked".into(),
        CutAudit::Checked(families) => families
            .iter()
            .map(|f| {
                let clause = match f.clause {
                    cover::Clause::Exactly(x) => format!("={x}"),
                    cover::Clause::AtMost(x) => format!("<={x}"),
                };
                let status = match &f.violation {
                    None => "ok".to_string(),
                    Some((side, sum)) => format!("violated at {side} (sum {sum})"),
                };
                format!("{}-cuts {clause} {status} ({} cuts)", f.cut_size, f.cuts)
            })
            .collect::<Vec<_>>()
            .join(", "),
    }
}

fn certificate_text(c: &IterationCertificate) -> String {
    let membership = if c.membership_verified {
        "w verified".to_string()
    } else if let Some(f) = &c.membership_failure {
        format!("w not in polytope: {f}")
    } else {
        "w not checked".to_string()
    };
    let tight = match &c.tight_cuts {
        cover::TightCuts::Honored { count } => format!("tight cuts honored ({count})"),
        cover::TightCuts::Violated { side, crossings } => {
            format!("tight cut {side} crossed {crossings} times")
        }
        cover::TightCuts::NotChecked => "tight cuts not checked".to_string(),
    };
    format!(
        "step {}: {:?} gain {} >= {} (uncovered {}, {membership}); {tight}; audit: {}{}\n",
        c.step,
        c.level,
        c.actual_gain,
        fmt_rational(&c.predicted_gain),
        c.uncovered_before,
        audit_text(&c.cut_audit),
        if c.stalled { "; stalled" } else { "" }
    )
}

fn cover_result(rep: &CoverReport) -> Value {
    json!({
        "mode": rep.mode,
        "covered": rep.covered,
        "edges": rep.edge_count,
        "fraction": rat(&rep.fraction),
        "bound": rat(&rep.bound),
        "bound_met": rep.bound_met,
        "matchings": matchings_json(&rep.matchings),
    })
}

fn run_cover(config: &RunConfig, g: &Multigraph) -> Result<Outcome> {
    let r = config.require_r()?;
    let k = config.require_k()?;
    let rep = cover::greedy_cover(g, r, k, cover_options(config))?;
    let mut text: String = rep.certificates.iter().map(certificate_text).collect();
    text.push_str(&format!(
        "covered: {} ({} of {} edges, {})\n",
        fmt_rational(&rep.fraction),
        rep.covered,
        rep.edge_count,
        fmt_decimal(&rep.fraction, 4)
    ));
    text.push_str(&format!(
        "bound: {} ({}) {}\n",
        fmt_rational(&rep.bound),
        fmt_decimal(&rep.bound, 4),
        if rep.bound_met { "met" } else { "not met" }
    ));
    Ok(Outcome {
        result: cover_result(&rep),
        certificates: rep.certificates.iter().map(certificate_json).collect(),
        text,
        finding: (!rep.bound_met).then(|| "bound_not_met".into()),
    })
}

fn run_audit(config: &RunConfig, g: &Multigraph) -> Result<Outcome> {
    let r = config.require_r()?;
    let k = config.require_k()?;
    if g.vertex_count() > config.odd_cap {
        return Err(Error::CapExceeded {
            what: "vertex count for the cut audit",
            cap: config.odd_cap,
        });
    }
    let rep = cover::greedy_cover(g, r, k, cover_options(config))?;
    let mut steps = Vec::new();
    let mut text = String::new();
    let mut all_ok = true;
    for j in 1..=k {
        let state = CoverState::from_matchings(g, &rep.matchings[..j]);
        let audit = cover::audit_cut_invariants(&state, r, config.odd_cap)?;
        let ok = audit.all_satisfied().unwrap_or(false);
        all_ok &= ok;
        text.push_str(&format!("after {j}: {}\n", audit_text(&audit)));
        steps.push(json!({"step": j, "satisfied": ok, "audit": audit}));
    }
    text.push_str(&format!(
        "cut invariants: {}\n",
        if all_ok { "satisfied" } else { "violated" }
    ));
    Ok(Outcome {
        result: json!({
            "mode": rep.mode,
            "satisfied": all_ok,
            "steps": steps,
            "matchings": matchings_json(&rep.matchings),
        }),
        certificates: rep.certificates.iter().map(certificate_json).collect(),
        text,
        finding: (!all_ok).then(|| "cut_invariant_violated".into()),
    })
}

fn run_exact(config: &RunConfig, g: &Multigraph) -> Result<Outcome> {
    let analyzer = ExactAnalyzer::new(g, config.pm_cap)?;
    let mut text = format!("perfect matchings: {}\n", analyzer.matchings().len());
    let mut coverage = Vec::new();
    for k in 1..=config.k.unwrap_or(0) {
        let c = analyzer.m_exact(k)?;
        text.push_str(&format!(
            "best {k}-union: {} ({} of {} edges)\n",
            fmt_rational(&c.fraction),
            c.covered,
            g.edge_count()
        ));
        coverage.push(json!({
            "k": k,
            "covered": c.covered,
            "fraction": rat(&c.fraction),
            "witness": matchings_json(&c.witness),
        }));
    }
    let (index, finding) = match analyzer.excessive_index() {
        Ok(ix) => {
            text.push_str(&format!("excessive index: {}\n", ix.value));
            (
                json!({"value": ix.value, "witness": matchings_json(&ix.witness)}),
                None,
            )
        }
        Err(Error::EdgeInNoMatching(e)) => {
            text.push_str(&format!(
                "excessive index: undefined (edge {e} is in no perfect matching)\n"
            ));
            (Value::Null, Some(format!("edge_in_no_matching: edge {e}")))
        }
        Err(e) => return Err(e),
    };
    Ok(Outcome {
        result: json!({
            "perfect_matchings": analyzer.matchings().len(),
            "coverage": coverage,
            "excessive_index": index,
        }),
        certificates: Vec::new(),
        text,
        finding,
    })
}

fn bound_json(b: &BoundValue) -> Value {
    json!({
        "r": b.r,
        "k": b.k,
        "kind": b.kind,
        "value": rat(&b.value),
        "decimal": b.decimal(4),
    })
}

fn run_bounds(config: &RunConfig, table1: bool) -> Result<Outcome> {
    if table1 {
        let cells: Vec<Value> = bounds::table().iter().map(bound_json).collect();
        return Ok(Outcome::ok(
            json!({ "table": cells }),
            bounds::render_table(),
        ));
    }
    let r = config.require_r()?;
    let k = u32::try_from(config.require_k()?)
        .map_err(|_| Error::InvalidParameter("k too large".into()))?;
    let mut values = vec![
        bounds::bound(BoundKind::Uniform, r, k)?,
        bounds::bound(BoundKind::Improved, r, k)?,
    ];
    if k < 2 * r {
        values.push(bounds::bound(BoundKind::DoubleCoverConditional, r, k)?);
    }
    let text = values
        .iter()
        .map(|b| {
            let name = serde_json::to_value(b.kind).expect("enum serializes");
            format!(
                "{}: {} ≈ {}\n",
                name.as_str().unwrap_or_default(),
                fmt_rational(&b.value),
                b.decimal(4)
            )
        })
        .collect();
    Ok(Outcome::ok(
        json!({ "bounds": values.iter().map(bound_json).collect::<Vec<_>>() }),
        text,
    ))
}

fn run_decompose(config: &RunConfig, g: &Multigraph) -> Result<Outcome> {
    let r = config.require_r()?;
    let w = fractional::uniform(g, r)?;
    let d = fractional::decompose(g, &w, config.pm_cap)?;
    let exact = d.reconstruct(g.edge_count()) == w.values();
    let mut text = format!(
        "uniform 1/{r} = sum of {} perfect matchings:\n",
        d.terms.len()
    );
    for (m, c) in &d.terms {
        text.push_str(&format!("  {}  {:?}\n", fmt_rational(c), matching_ids(m)));
    }
    text.push_str(&format!(
        "reconstruction: {}\n",
        if exact { "exact" } else { "mismatch" }
    ));
    let terms: Vec<Value> = d
        .terms
        .iter()
        .map(|(m, c)| json!({"coefficient": rat(c), "matching": matching_ids(m)}))
        .collect();
    Ok(Outcome::ok(
        json!({"terms": terms, "coefficient_sum": rat(&d.coefficient_sum()), "exact": exact}),
        text,
    ))
}

fn run_multicolor(config: &RunConfig, g: &Multigraph) -> Result<Outcome> {
    let r = config.require_r()?;
    let mc = fractional::multicoloring(g, r, config.pm_cap)?;
    let mut text = format!(
        "p = {} ({} matchings, each edge in exactly {})\n",
        mc.p,
        mc.matchings.len(),
        mc.p
    );
    for m in &mc.matchings {
        text.push_str(&format!("  {:?}\n", matching_ids(m)));
    }
    Ok(Outcome::ok(
        json!({"p": mc.p, "matchings": matchings_json(&mc.matchings)}),
        text,
    ))
}

fn run_bf_search(config: &RunConfig, g: &Multigraph) -> Result<Outcome> {
    let r = config.require_r()?;
    match fractional::bf_double_cover(g, r, config.pm_cap)? {
        DoubleCover::Found(ms) => {
            let mut text = format!("double cover: found ({} matchings)\n", ms.len());
            for m in &ms {
                text.push_str(&format!("  {:?}\n", matching_ids(m)));
            }
            Ok(Outcome::ok(
                json!({"found": true, "matchings": matchings_json(&ms)}),
                text,
            ))
        }
        DoubleCover::Exhausted { matchings_searched } => Ok(Outcome {
            result: json!({"found": false, "matchings_searched": matchings_searched}),
            certificates: Vec::new(),
            text: format!(
                "double cover: none (searched all {matchings_searched} perfect matchings)\n"
            ),
            finding: Some("no_double_cover".into()),
        }),
    }
}
