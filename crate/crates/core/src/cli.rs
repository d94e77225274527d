//! The `cst` command line.
//!
//! Exit codes: 0 success (or a true verdict), 1 false verdict or failed
//! sweep, 2 unreadable input or bad usage, 3 resource bound exceeded,
//! 4 closed form requested with a zero parameter, 5 classification
//! precondition failed, 6 internal consistency failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::csf::{
    coloring_count_oracle_bounded, csf_e_with, csf_m_bounded, e_positivity_with, Bounds,
};
use crate::error::Error;
use crate::graph::{
    asteroidal_triple, build_gb, build_gp, build_pattern, chordless_cycle, find_induced,
    parse_graph_text, to_edge_list, Graph, Pattern,
};
use crate::partition::partitions_of;
use crate::search::{run_search, GraphClass, SearchConfig, SearchReport, DEFAULT_MAX_N};
use crate::symfunc::{Basis, SymPoly, TransitionCache};
use crate::theorems::{
    classify_with, gb_e_closed, gb_m_closed, gb_mtilde_closed, gp_e_closed, gp_m_closed,
    gp_mtilde_closed, verify_sweep_with, CaseStructure, Certificate, Classification, Family,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;
pub const EXIT_INTERNAL: i32 = 6;

#[derive(Parser, Debug)]
#[command(
    name = "cst",
    version,
    about = "Chromatic symmetric functions of small graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Output mode, resource bounds and worker count shared by every command.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..=64), global = true)]
    pub max_census_vertices: u64,
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..=64), global = true)]
    pub max_oracle_vertices: u64,
    /// Defaults to the number of available cores.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1024), global = true)]
    pub workers: Option<u64>,
}

impl RunConfig {
    pub fn bounds(&self) -> Bounds {
        Bounds {
            max_census_vertices: self.max_census_vertices as usize,
            max_oracle_vertices: self.max_oracle_vertices as usize,
        }
    }

    pub fn workers(&self) -> usize {
        match self.workers {
            Some(w) => w as usize,
            None => std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisArg {
    M,
    Mtilde,
    E,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::Mtilde => Basis::MTilde,
            BasisArg::E => Basis::E,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    EPositive,
    ClawFree,
    #[value(name = "2k2-free")]
    TwoK2Free,
    Chordal,
    AtFree,
    UnitInterval,
    CoTriangleFree,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    Gp,
    Gb,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gp => Family::GP,
            FamilyArg::Gb => Family::GB,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Edges,
    Expansion,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassArg {
    All,
    CoTriangleFree,
    #[value(name = "2k2-unit-interval")]
    TwoK2UnitInterval,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> GraphClass {
        match c {
            ClassArg::All => GraphClass::All,
            ClassArg::CoTriangleFree => GraphClass::CoTriangleFree,
            ClassArg::TwoK2UnitInterval => GraphClass::TwoK2UnitInterval,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hunt {
    NegativeECoefficient,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print X_G in the chosen basis.
    Expand {
        /// Edge list or graph6 file, `-` for standard input.
        graph: String,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
        /// Cross-check every monomial coefficient against the coloring count.
        #[arg(long)]
        cross_check: bool,
    },
    /// Decide a predicate; exits 0 when it holds and 1 when it fails.
    Check {
        #[arg(value_enum)]
        predicate: Predicate,
        graph: String,
    },
    /// Build a pyramid or bull, or print its closed-form expansion.
    Family {
        #[arg(value_enum)]
        family: FamilyArg,
        r: usize,
        s: usize,
        t: usize,
        #[arg(long, value_enum, default_value_t = Emit::Edges)]
        emit: Emit,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
    },
    /// Certify each component of a 2K2-free unit interval graph.
    Classify { graph: String },
    /// Compare closed forms with the census for all 1 <= r,s,t <= max.
    Verify {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_param: u64,
    },
    /// Enumerate labelled graphs and count e-positivity verdicts.
    Search {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = Hunt::NegativeECoefficient)]
        hunt: Hunt,
        /// Only connected graphs count as in class.
        #[arg(long)]
        connected: bool,
        /// Also classify every in-class graph (2k2-unit-interval only).
        #[arg(long)]
        classify: bool,
        /// Permit --max-n above the default ceiling.
        #[arg(long)]
        allow_large: bool,
    },
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match &e {
            Error::Parse { .. } | Error::UnknownPattern(_) | Error::VertexOutOfRange { .. } => {
                EXIT_INPUT
            }
            Error::ResourceLimit { .. } => EXIT_BOUND,
            Error::Domain(_) => EXIT_DOMAIN,
            Error::Precondition { .. } => EXIT_PRECONDITION,
            _ => EXIT_INTERNAL,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message,
    }
}

/// Runs the CLI with explicit streams; returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok((code, out)) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

fn read_graph(source: &str, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    let text = if source == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(source).map_err(|e| input_error(format!("{source}: {e}")))?
    };
    Ok(parse_graph_text(&text)?)
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output is serializable");
    s.push('\n');
    s
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(i32, String), CliError> {
    let cfg = &cli.config;
    let json = cfg.format == Format::Json;
    let bounds = cfg.bounds();
    let cache = TransitionCache::global();
    match &cli.command {
        Command::Expand {
            graph,
            basis,
            cross_check,
        } => {
            let g = read_graph(graph, stdin)?;
            let m = csf_m_bounded(&g, &bounds)?;
            if *cross_check {
                for lambda in partitions_of(g.n()) {
                    let oracle = coloring_count_oracle_bounded(&g, &lambda, &bounds)?;
                    if num_bigint::BigInt::from(oracle) != m.coeff(&lambda) {
                        return Err(Error::Internal(format!(
                            "census and coloring count disagree at {lambda}"
                        ))
                        .into());
                    }
                }
            }
            let out = match Basis::from(*basis) {
                Basis::E => csf_e_with(&g, &bounds, cache)?,
                b => m.convert_to(b)?,
            };
            Ok((EXIT_OK, render_poly(&out, json)))
        }
        Command::Check { predicate, graph } => {
            let g = read_graph(graph, stdin)?;
            check(&g, *predicate, &bounds, json)
        }
        Command::Family {
            family,
            r,
            s,
            t,
            emit,
            basis,
        } => family_cmd(*family, *r, *s, *t, *emit, (*basis).into(), json),
        Command::Classify { graph } => {
            let g = read_graph(graph, stdin)?;
            let c = classify_with(&g, &bounds, cache)?;
            Ok((EXIT_OK, render_classification(&c, json)))
        }
        Command::Verify { family, max_param } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.workers())
                .build()
                .map_err(|e| CliError::from(Error::Internal(e.to_string())))?;
            let report = pool.install(|| {
                verify_sweep_with((*family).into(), *max_param as usize, &bounds, cache)
            });
            let all = report.iter().all(|e| e.passed());
            let out = if json {
                json_line(&report)
            } else {
                let mut s = String::new();
                for e in &report {
                    let mark = |b: bool| if b { "ok" } else { "FAIL" };
                    let _ = writeln!(
                        s,
                        "{}({},{},{}) m:{} e:{} nonneg:{} {}ms",
                        e.family,
                        e.r,
                        e.s,
                        e.t,
                        mark(e.m_match),
                        mark(e.e_match),
                        mark(e.e_nonneg),
                        e.millis
                    );
                }
                let passed = report.iter().filter(|e| e.passed()).count();
                let _ = writeln!(s, "{passed}/{} triples pass", report.len());
                s
            };
            Ok((if all { EXIT_OK } else { EXIT_FALSE }, out))
        }
        Command::Search {
            max_n,
            min_n,
            class,
            hunt: _,
            connected,
            classify,
            allow_large,
        } => {
            if *max_n > DEFAULT_MAX_N && !allow_large {
                return Err(CliError {
                    code: EXIT_BOUND,
                    message: format!(
                        "--max-n {max_n} exceeds {DEFAULT_MAX_N}; pass --allow-large to proceed"
                    ),
                });
            }
            let class: GraphClass = (*class).into();
            if *classify && class != GraphClass::TwoK2UnitInterval {
                return Err(input_error(
                    "--classify needs --class 2k2-unit-interval".into(),
                ));
            }
            let sc = SearchConfig {
                min_n: *min_n,
                max_n: *max_n,
                class,
                connected_only: *connected,
                classify: *classify,
                workers: cfg.workers(),
                bounds,
            };
            let report = run_search(&sc)?;
            let code = if report.failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            };
            Ok((
                code,
                if json {
                    json_line(&report)
                } else {
                    render_search(&report)
                },
            ))
        }
    }
}

fn render_poly(p: &SymPoly, json: bool) -> String {
    if json {
        format!("{}\n", p.to_json())
    } else {
        format!("{p}\n")
    }
}

fn verdict(
    predicate: &str,
    holds: bool,
    witness: Option<serde_json::Value>,
    json: bool,
) -> (i32, String) {
    let code = if holds { EXIT_OK } else { EXIT_FALSE };
    let out = if json {
        json_line(&json!({ "predicate": predicate, "value": holds, "witness": witness }))
    } else {
        match witness {
            None => format!("{holds}\n"),
            Some(serde_json::Value::String(w)) => format!("{holds}\nwitness: {w}\n"),
            Some(w) => format!("{holds}\nwitness: {w}\n"),
        }
    };
    (code, out)
}

fn vertices_value(vs: &[usize]) -> serde_json::Value {
    json!(vs)
}

fn check(g: &Graph, p: Predicate, bounds: &Bounds, json: bool) -> Result<(i32, String), CliError> {
    let induced = |pat: Pattern| find_induced(g, &build_pattern(pat));
    let (name, holds, witness) = match p {
        Predicate::EPositive => {
            let v = e_positivity_with(g, bounds, TransitionCache::global())?;
            let w = v
                .witness
                .map(|(lambda, c)| json!({ "partition": lambda.parts(), "coeff": c.to_string() }));
            ("e-positive", v.positive, w)
        }
        Predicate::ClawFree => {
            let w = induced(Pattern::Claw);
            ("claw-free", w.is_none(), w.map(|w| vertices_value(&w)))
        }
        Predicate::TwoK2Free => {
            let w = induced(Pattern::TwoK2);
            ("2k2-free", w.is_none(), w.map(|w| vertices_value(&w)))
        }
        Predicate::CoTriangleFree => {
            let w = induced(Pattern::CoTriangle);
            (
                "co-triangle-free",
                w.is_none(),
                w.map(|w| vertices_value(&w)),
            )
        }
        Predicate::Chordal => {
            let w = chordless_cycle(g);
            ("chordal", w.is_none(), w.map(|w| vertices_value(&w)))
        }
        Predicate::AtFree => {
            let w = asteroidal_triple(g);
            ("at-free", w.is_none(), w.map(|w| vertices_value(&w)))
        }
        Predicate::UnitInterval => {
            let w = crate::graph::unit_interval_violation(g);
            let witness = w.map(|(why, vs)| json!({ "fails": why, "vertices": vs }));
            ("unit-interval", witness.is_none(), witness)
        }
    };
    let witness = witness.map(|w| if json { w } else { json!(text_witness(&w)) });
    let (code, out) = verdict(name, holds, witness, json);
    Ok((code, out))
}

fn text_witness(w: &serde_json::Value) -> String {
    match w {
        serde_json::Value::Array(vs) => vs
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        serde_json::Value::Object(o) if o.contains_key("partition") => {
            let parts: Vec<String> = o["partition"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|v| v.to_string())
                .collect();
            format!(
                "e[{}] has coefficient {}",
                parts.join(","),
                o["coeff"].as_str().unwrap_or_default()
            )
        }
        serde_json::Value::Object(o) => format!(
            "not {} at {}",
            o["fails"].as_str().unwrap_or_default(),
            text_witness(&o["vertices"])
        ),
        other => other.to_string(),
    }
}

fn family_cmd(
    family: FamilyArg,
    r: usize,
    s: usize,
    t: usize,
    emit: Emit,
    basis: Basis,
    json: bool,
) -> Result<(i32, String), CliError> {
    match emit {
        Emit::Edges => {
            let g = match family {
                FamilyArg::Gp => build_gp(r, s, t),
                FamilyArg::Gb => build_gb(r, s, t),
            };
            let out = if json {
                json_line(&json!({ "n": g.n(), "edges": g.edges() }))
            } else {
                to_edge_list(&g)
            };
            Ok((EXIT_OK, out))
        }
        Emit::Expansion => {
            let (poly, named) = match (family, basis) {
                (FamilyArg::Gp, Basis::E) => {
                    let (c, p) = gp_e_closed(r, s, t)?;
                    let named = vec![("A", c.a), ("B", c.b), ("C", c.c), ("D", c.d), ("E", c.e)];
                    (
                        p,
                        named
                            .into_iter()
                            .map(|(k, v)| (k, v.to_string()))
                            .collect::<Vec<_>>(),
                    )
                }
                (FamilyArg::Gp, Basis::M) => (gp_m_closed(r, s, t)?, Vec::new()),
                (FamilyArg::Gp, Basis::MTilde) => (gp_mtilde_closed(r, s, t)?, Vec::new()),
                (FamilyArg::Gb, Basis::E) => (gb_e_closed(r, s, t)?, Vec::new()),
                (FamilyArg::Gb, Basis::M) => (gb_m_closed(r, s, t)?, Vec::new()),
                (FamilyArg::Gb, Basis::MTilde) => (gb_mtilde_closed(r, s, t)?, Vec::new()),
            };
            let out = if json {
                let expansion: serde_json::Value =
                    serde_json::from_str(&poly.to_json()).expect("valid JSON");
                let coefficients: serde_json::Map<String, serde_json::Value> = named
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                let mut v = json!({ "family": Family::from(family).to_string(), "r": r, "s": s, "t": t, "expansion": expansion });
                if !coefficients.is_empty() {
                    v["coefficients"] = serde_json::Value::Object(coefficients);
                }
                json_line(&v)
            } else {
                let mut out = String::new();
                for (k, v) in &named {
                    let _ = writeln!(out, "{k}={v}");
                }
                let _ = writeln!(out, "{poly}");
                out
            };
            Ok((EXIT_OK, out))
        }
    }
}

fn list(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn render_classification(c: &Classification, json: bool) -> String {
    if json {
        let comps: Vec<serde_json::Value> = c
            .components
            .iter()
            .map(|comp| {
                let mut v = serde_json::to_value(comp).expect("serializable");
                v["e_expansion"] =
                    serde_json::from_str(&comp.e_expansion.to_json()).expect("valid JSON");
                v
            })
            .collect();
        let total: serde_json::Value =
            serde_json::from_str(&c.e_expansion.to_json()).expect("valid JSON");
        return json_line(&json!({ "components": comps, "e_expansion": total }));
    }
    let mut s = String::new();
    for (i, comp) in c.components.iter().enumerate() {
        let _ = writeln!(s, "component {}: vertices {}", i + 1, list(&comp.vertices));
        let _ = writeln!(
            s,
            "  case {} root {} layer sizes {:?}",
            comp.case,
            comp.root,
            comp.layers.iter().map(Vec::len).collect::<Vec<_>>()
        );
        match &comp.structure {
            Some(CaseStructure::TwoFar { p, q, a, b }) => {
                let _ = writeln!(s, "  p={p} q={q} A={} B={}", list(a), list(b));
            }
            Some(CaseStructure::OneFarCliqueB { p, a, b }) => {
                let _ = writeln!(s, "  p={p} A={} B={}", list(a), list(b));
            }
            Some(CaseStructure::OneFarBull {
                p,
                x,
                y,
                a,
                b,
                a2,
                a3,
                b1,
                b2,
            }) => {
                let _ = writeln!(
                    s,
                    "  p={p} x={x} y={y} A={} B={} A2={} A3={} B1={} B2={}",
                    list(a),
                    list(b),
                    list(a2),
                    list(a3),
                    list(b1),
                    list(b2)
                );
            }
            None => {}
        }
        match &comp.certificate {
            Certificate::CoTriangleFree => {
                let _ = writeln!(s, "  certificate: CoTriangleFree");
            }
            Certificate::GeneralizedBull {
                r,
                s: ss,
                t,
                mapping,
            } => {
                let pairs: Vec<String> = mapping.iter().map(|(v, b)| format!("{v}->{b}")).collect();
                let _ = writeln!(s, "  certificate: GeneralizedBull r={r} s={ss} t={t}");
                let _ = writeln!(s, "  mapping: {}", pairs.join(" "));
            }
            Certificate::Unresolved => {
                let _ = writeln!(s, "  certificate: Unresolved");
            }
        }
        let _ = writeln!(s, "  e-expansion: {}", comp.e_expansion);
    }
    let _ = writeln!(s, "X_G = {}", c.e_expansion);
    s
}

fn render_search(r: &SearchReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "class {}{}",
        r.class,
        if r.connected_only {
            ", connected only"
        } else {
            ""
        }
    );
    let _ = writeln!(
        s,
        "{:>3} {:>10} {:>10} {:>10} {:>10}",
        "n", "checked", "in-class", "positive", "negative"
    );
    for c in r.per_n.iter().chain(std::iter::once(&r.totals)) {
        let label = if std::ptr::eq(c, &r.totals) {
            "all".to_string()
        } else {
            c.n.to_string()
        };
        let _ = writeln!(
            s,
            "{label:>3} {:>10} {:>10} {:>10} {:>10}",
            c.checked, c.in_class, c.positive, c.negative
        );
    }
    if r.totals.certified + r.totals.unresolved > 0 {
        let _ = writeln!(
            s,
            "certified {} unresolved {}",
            r.totals.certified, r.totals.unresolved
        );
    }
    for neg in &r.negatives {
        let _ = writeln!(
            s,
            "negative: e[{}] coefficient {}",
            neg.partition
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(","),
            neg.coeff
        );
        let _ = write!(s, "{}", neg.n);
        for (u, v) in &neg.edges {
            let _ = write!(s, "\n{u} {v}");
        }
        s.push('\n');
    }
    for f in &r.failures {
        let _ = writeln!(s, "failure on n={} edges {:?}: {}", f.n, f.edges, f.message);
    }
    s
}
