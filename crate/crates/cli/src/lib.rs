//! The `indpoly` command line.
//!
//! Exit codes: 0 on success or a passed check, 1 when a check fails
//! (violations, unmet hypotheses, or disagreeing computations), 2 on usage,
//! parse or limit errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::Rational64;
use serde::Serialize;

use indpoly::classification::{classify, ClassificationRecord, W2_MAX_VERTICES};
use indpoly::enumeration::{
    brute_force_coefficients_with_limit, independence_coefficients, CoefficientSequence,
    BRUTE_FORCE_MAX_VERTICES,
};
use indpoly::graph::{parse_graph6, parse_graph_spec, to_edge_list, to_graph6, MAX_VERTICES};
use indpoly::polynomial::{corona_compose, real_root_census, IntPolynomial, RootCensus};
use indpoly::survey::{run_survey_to, write_summary, Filter, SurveyConfig, SurveySummary};
use indpoly::survey::{DEFAULT_SURVEY_MAX_VERTICES, SURVEY_MAX_VERTICES};
use indpoly::theorems::{
    roller_coaster_window_with, BoundReport, Checker, TheoremId, Window, WindowKind, WindowStart,
};
use indpoly::{Error, Graph};

/// Environment variable holding the default per-graph order limit.
pub const MAX_N_ENV: &str = "INDPOLY_MAX_N";
/// Order limit for single-graph commands when the variable is unset.
pub const DEFAULT_MAX_N: usize = 40;

#[derive(Parser, Debug)]
#[command(
    name = "indpoly",
    version,
    about = "Independence polynomials of small graphs"
)]
struct Cli {
    /// Output format; json and tsv are stable, human is not.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Args, Debug)]
struct GraphArg {
    /// `g6:<graph6>`, `@<file>`, or a graph expression such as `corona(C(3),K(2))`.
    graph: String,

    /// Largest accepted order [default: $INDPOLY_MAX_N or 40].
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of the independence polynomial.
    Poly(GraphArg),
    /// Place in the well-coveredness hierarchy and the exact λ*.
    Classify {
        #[command(flatten)]
        graph: GraphArg,
        /// Also decide membership in W2 (at most 16 vertices).
        #[arg(long)]
        w2: bool,
    },
    /// Run one coefficient-bound check.
    Bounds {
        #[command(flatten)]
        graph: GraphArg,
        /// TH13, COR3, COR2, TH5, COR1, TH3 or CORONA_K2.
        #[arg(long)]
        theorem: TheoremId,
        /// Ratio for TH13, e.g. `3/2` [default: λ* of the graph].
        #[arg(long)]
        lambda: Option<Rational64>,
    },
    /// Build `base ∘ attach` or its polynomial.
    Corona {
        base: String,
        attach: String,
        /// Polynomial from the composition formula.
        #[arg(long)]
        via_formula: bool,
        /// Polynomial by counting on the built graph.
        #[arg(long)]
        via_enum: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Exact count of distinct real roots.
    Roots {
        /// Graph whose independence polynomial is examined.
        #[arg(required_unless_present = "coeffs")]
        graph: Option<String>,
        /// Explicit integer coefficients, lowest degree first: `1,12,51`.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            conflicts_with = "graph"
        )]
        coeffs: Option<Vec<BigInt>>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// The roller-coaster index window.
    Window {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "WELL_COVERED")]
        kind: WindowKind,
        #[arg(long, value_enum, default_value_t = StartArg::Ceil)]
        start: StartArg,
    },
    /// Process graph6 catalogs into JSON-lines records and a summary.
    Survey(SurveyArgs),
    /// Coefficients by testing every vertex subset (24 vertices unless
    /// --max-n raises it, at most 32).
    Oracle(GraphArg),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StartArg {
    Ceil,
    FloorPlusOne,
}

impl From<StartArg> for WindowStart {
    fn from(s: StartArg) -> Self {
        match s {
            StartArg::Ceil => WindowStart::Ceil,
            StartArg::FloorPlusOne => WindowStart::FloorPlusOne,
        }
    }
}

#[derive(Args, Debug)]
struct SurveyArgs {
    /// graph6 files, one graph per line.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Predicate over classification fields, e.g. `well_covered && n >= 6`.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long, default_value = "WELL_COVERED")]
    kind: WindowKind,
    #[arg(long, value_enum, default_value_t = StartArg::Ceil)]
    start: StartArg,
    /// Bound check to run on every accepted graph; repeatable.
    #[arg(long = "check")]
    checks: Vec<TheoremId>,
    /// Record file [default: standard output].
    #[arg(long)]
    output: Option<PathBuf>,
    /// Summary file [default: standard output after the records when
    /// --output is given, standard error otherwise].
    #[arg(long)]
    summary: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Largest accepted order, at most 32 [default: $INDPOLY_MAX_N capped
    /// at 32, or 16].
    #[arg(long)]
    max_n: Option<usize>,
    /// Record unparsable lines as skipped instead of stopping.
    #[arg(long)]
    skip_parse_errors: bool,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write error: {e}"))
    }
}

type CliResult = Result<(), Failure>;

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Poly(arg) => {
            let g = load(&arg.graph, arg.max_n)?;
            poly(fmt, out, &g, &independence_coefficients(&g))
        }
        Command::Oracle(arg) => {
            let g = load(&arg.graph, arg.max_n)?;
            let limit = arg.max_n.unwrap_or(BRUTE_FORCE_MAX_VERTICES);
            poly(
                fmt,
                out,
                &g,
                &brute_force_coefficients_with_limit(&g, limit)?,
            )
        }
        Command::Classify { graph, w2 } => {
            let g = load(&graph.graph, graph.max_n)?;
            if *w2 && g.order() > W2_MAX_VERTICES {
                return Err(Error::SizeLimit {
                    op: "W2 classification",
                    n: g.order(),
                    limit: W2_MAX_VERTICES,
                }
                .into());
            }
            classify_cmd(fmt, out, &classify(&g, *w2)?)
        }
        Command::Bounds {
            graph,
            theorem,
            lambda,
        } => {
            let g = load(&graph.graph, graph.max_n)?;
            let report = Checker::new(&g).run(*theorem, *lambda)?;
            bounds(fmt, out, &report)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Corona {
            base,
            attach,
            via_formula,
            via_enum,
            max_n,
        } => corona(fmt, out, base, attach, *via_formula, *via_enum, *max_n),
        Command::Roots {
            graph,
            coeffs,
            max_n,
        } => {
            let p = match (graph, coeffs) {
                (_, Some(c)) => IntPolynomial::new(c.clone()),
                (Some(spec), None) => {
                    let g = load(spec, *max_n)?;
                    IntPolynomial::from(&independence_coefficients(&g))
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            roots(fmt, out, &p, &real_root_census(&p)?)
        }
        Command::Window {
            alpha,
            n,
            kind,
            start,
        } => {
            let w = roller_coaster_window_with(*alpha, *n, *kind, (*start).into())?;
            window(fmt, out, &w)
        }
        Command::Survey(args) => survey(fmt, out, err, args),
    }
}

fn max_n(flag: Option<usize>, default: usize) -> Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_N_ENV}={v:?} is not a vertex count"))),
        Err(_) => Ok(default),
    }
}

/// Resolves a graph argument: `g6:` prefix for graph6, otherwise a graph
/// expression (which covers `@file`).
fn load(arg: &str, limit: Option<usize>) -> Result<Graph, Failure> {
    let limit = max_n(limit, DEFAULT_MAX_N)?.min(MAX_VERTICES);
    let g = match arg.strip_prefix("g6:") {
        Some(g6) => parse_graph6(g6)?,
        None => parse_graph_spec(arg)?,
    };
    if g.order() > limit {
        return Err(Error::SizeLimit {
            op: "graph input",
            n: g.order(),
            limit,
        }
        .into());
    }
    Ok(g)
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult {
    serde_json::to_writer(&mut *out, value).map_err(Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn tsv_row<I, T>(out: &mut dyn Write, fields: I) -> CliResult
where
    I: IntoIterator<Item = T>,
    T: ToString,
{
    let row: Vec<String> = fields.into_iter().map(|f| f.to_string()).collect();
    writeln!(out, "{}", row.join("\t"))?;
    Ok(())
}

#[derive(Serialize)]
struct PolyOutput<'a> {
    n: usize,
    alpha: usize,
    coefficients: &'a CoefficientSequence,
}

fn poly(fmt: Format, out: &mut dyn Write, g: &Graph, s: &CoefficientSequence) -> CliResult {
    match fmt {
        Format::Json => json(
            out,
            &PolyOutput {
                n: g.order(),
                alpha: s.alpha(),
                coefficients: s,
            },
        ),
        Format::Tsv => tsv_row(out, s.as_slice()),
        Format::Human => {
            writeln!(out, "n = {}, alpha = {}", g.order(), s.alpha())?;
            writeln!(out, "I(G; x) = {}", IntPolynomial::from(s))?;
            Ok(())
        }
    }
}

fn classify_cmd(fmt: Format, out: &mut dyn Write, r: &ClassificationRecord) -> CliResult {
    let w2 = r.in_w2.map_or("-".to_string(), |b| b.to_string());
    match fmt {
        Format::Json => json(out, r),
        Format::Tsv => tsv_row(
            out,
            [
                r.n.to_string(),
                r.alpha.to_string(),
                r.connected.to_string(),
                r.has_isolated.to_string(),
                r.well_covered.to_string(),
                r.very_well_covered.to_string(),
                r.one_well_covered.to_string(),
                w2,
                r.lambda_star.to_string(),
            ],
        ),
        Format::Human => {
            writeln!(out, "n                  {}", r.n)?;
            writeln!(out, "alpha              {}", r.alpha)?;
            writeln!(out, "connected          {}", r.connected)?;
            writeln!(out, "has isolated       {}", r.has_isolated)?;
            writeln!(out, "well-covered       {}", r.well_covered)?;
            writeln!(out, "very well-covered  {}", r.very_well_covered)?;
            writeln!(out, "1-well-covered     {}", r.one_well_covered)?;
            writeln!(out, "in W2              {w2}")?;
            writeln!(out, "lambda*            {}", r.lambda_star)?;
            Ok(())
        }
    }
}

fn bounds(fmt: Format, out: &mut dyn Write, r: &BoundReport) -> CliResult {
    match fmt {
        Format::Json => json(out, r),
        Format::Tsv => {
            tsv_row(
                out,
                [
                    r.theorem_id.to_string(),
                    r.hypotheses_met.to_string(),
                    r.passed.to_string(),
                    r.checked_count.to_string(),
                    r.violations.len().to_string(),
                ],
            )?;
            for v in &r.violations {
                tsv_row(
                    out,
                    [
                        v.k.to_string(),
                        serde_json::to_value(v.tag)
                            .unwrap()
                            .as_str()
                            .unwrap()
                            .to_string(),
                        v.relation.symbol().to_string(),
                        v.lhs.to_string(),
                        v.rhs.to_string(),
                    ],
                )?;
            }
            Ok(())
        }
        Format::Human => {
            let verdict = match (r.hypotheses_met, r.passed) {
                (false, _) => "HYPOTHESES NOT MET",
                (true, true) => "PASSED",
                (true, false) => "VIOLATED",
            };
            writeln!(
                out,
                "{} on n = {}, alpha = {}: {verdict}",
                r.theorem_id, r.n, r.alpha
            )?;
            for reason in &r.reasons {
                writeln!(out, "  hypothesis: {reason}")?;
            }
            if let Some(l) = &r.lambda {
                writeln!(out, "  lambda = {l}")?;
            }
            if let Some(p) = r.prefix_end {
                writeln!(out, "  prefix up to index {p}")?;
            }
            if let Some(t) = r.tail_start {
                writeln!(out, "  tail from index {t}")?;
            }
            for s in &r.skipped {
                writeln!(out, "  skipped: {s}")?;
            }
            writeln!(out, "  {} inequalities checked", r.checked_count)?;
            for v in &r.violations {
                writeln!(out, "  {v}")?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CoronaOutput {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    via_formula: Option<IntPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    via_enum: Option<IntPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn corona(
    fmt: Format,
    out: &mut dyn Write,
    base: &str,
    attach: &str,
    via_formula: bool,
    via_enum: bool,
    limit: Option<usize>,
) -> CliResult {
    let h = load(base, limit)?;
    let y = load(attach, limit)?;
    let g = h.corona_uniform(&y)?;
    let limit = max_n(limit, DEFAULT_MAX_N)?;
    let formula = via_formula
        .then(|| {
            corona_compose(
                &IntPolynomial::from(&independence_coefficients(&h)),
                &IntPolynomial::from(&independence_coefficients(&y)),
                h.order(),
            )
        })
        .transpose()?;
    let enumerated = if via_enum {
        if g.order() > limit {
            return Err(Error::SizeLimit {
                op: "corona enumeration",
                n: g.order(),
                limit,
            }
            .into());
        }
        Some(IntPolynomial::from(&independence_coefficients(&g)))
    } else {
        None
    };
    let agree = match (&formula, &enumerated) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let show_graph = !via_formula && !via_enum;
    let result = CoronaOutput {
        n: g.order(),
        graph6: show_graph.then(|| to_graph6(&g)).transpose()?,
        via_formula: formula,
        via_enum: enumerated,
        agree,
    };
    match fmt {
        Format::Json => json(out, &result)?,
        Format::Tsv => {
            if let Some(g6) = &result.graph6 {
                tsv_row(out, [g6])?;
            }
            for (name, p) in [("formula", &result.via_formula), ("enum", &result.via_enum)] {
                if let Some(p) = p {
                    tsv_row(
                        out,
                        std::iter::once(name.to_string())
                            .chain(p.coeffs().iter().map(|c| c.to_string())),
                    )?;
                }
            }
            if let Some(a) = agree {
                tsv_row(out, ["agree".to_string(), a.to_string()])?;
            }
        }
        Format::Human => {
            writeln!(out, "n = {}", result.n)?;
            if show_graph {
                write!(out, "{}", to_edge_list(&g))?;
            }
            if let Some(p) = &result.via_formula {
                writeln!(out, "formula:     {p}")?;
            }
            if let Some(p) = &result.via_enum {
                writeln!(out, "enumeration: {p}")?;
            }
            if let Some(a) = agree {
                writeln!(out, "{}", if a { "agree" } else { "DISAGREE" })?;
            }
        }
    }
    if agree == Some(false) {
        return Err(Failure::Check);
    }
    Ok(())
}

fn roots(fmt: Format, out: &mut dyn Write, p: &IntPolynomial, c: &RootCensus) -> CliResult {
    match fmt {
        Format::Json => json(out, c),
        Format::Tsv => tsv_row(
            out,
            [
                c.degree.to_string(),
                c.squarefree_degree.to_string(),
                c.distinct_real_roots.to_string(),
                c.real_rooted.to_string(),
            ],
        ),
        Format::Human => {
            writeln!(out, "p(x) = {p}")?;
            writeln!(
                out,
                "degree {}, {} distinct roots, {} of them real: {}",
                c.degree,
                c.squarefree_degree,
                c.distinct_real_roots,
                if c.real_rooted {
                    "real-rooted"
                } else {
                    "has non-real roots"
                }
            )?;
            Ok(())
        }
    }
}

fn window(fmt: Format, out: &mut dyn Write, w: &Window) -> CliResult {
    match fmt {
        Format::Json => json(out, w),
        Format::Tsv => tsv_row(
            out,
            [w.lo.to_string(), w.hi.to_string(), w.kind.to_string()],
        ),
        Format::Human => {
            if w.is_empty() {
                writeln!(out, "{}: empty (lo {} > hi {})", w.kind, w.lo, w.hi)?;
            } else {
                let idx: Vec<String> = w.indices().map(|k| k.to_string()).collect();
                writeln!(out, "{}: {{{}}}", w.kind, idx.join(", "))?;
            }
            Ok(())
        }
    }
}

fn survey(fmt: Format, out: &mut dyn Write, err: &mut dyn Write, args: &SurveyArgs) -> CliResult {
    let filter = args
        .filter
        .as_deref()
        .map(str::parse::<Filter>)
        .transpose()?;
    let config = SurveyConfig {
        inputs: args.inputs.clone(),
        filter,
        window_kind: args.kind,
        window_start: args.start.into(),
        checks: args.checks.clone(),
        output: args.output.clone(),
        summary_output: args.summary.clone(),
        workers: args.workers,
        max_n: match args.max_n {
            Some(n) => n,
            None => max_n(None, DEFAULT_SURVEY_MAX_VERTICES)?.min(SURVEY_MAX_VERTICES),
        },
        skip_parse_errors: args.skip_parse_errors,
    };
    let summary = match &config.output {
        Some(_) => indpoly::survey::run_survey(&SurveyConfig {
            summary_output: None,
            ..config.clone()
        })?,
        None => run_survey_to(&config, &mut *out)?,
    };
    match (&config.summary_output, &config.output) {
        (Some(path), _) => write_summary(path, &summary)?,
        (None, Some(_)) => print_summary(fmt, out, &summary)?,
        (None, None) => print_summary(fmt, err, &summary)?,
    }
    let violated = summary.bound_totals.values().any(|t| t.with_violations > 0);
    if violated {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn print_summary(fmt: Format, out: &mut dyn Write, s: &SurveySummary) -> CliResult {
    match fmt {
        Format::Json => json(out, s),
        Format::Tsv => {
            for c in &s.cells {
                for (strict, patterns) in [(true, &c.strict_patterns), (false, &c.tied_patterns)] {
                    for p in patterns {
                        let pattern: Vec<String> =
                            p.pattern.iter().map(|r| r.to_string()).collect();
                        tsv_row(
                            out,
                            [
                                c.alpha.to_string(),
                                c.n.to_string(),
                                c.kind.to_string(),
                                if strict { "strict" } else { "tied" }.to_string(),
                                pattern.join(","),
                                p.count.to_string(),
                            ],
                        )?;
                    }
                }
            }
            Ok(())
        }
        Format::Human => {
            writeln!(
                out,
                "{} lines, {} records, {} filtered out, {} skipped",
                s.lines_read,
                s.records,
                s.filtered_out,
                s.skipped.len()
            )?;
            for c in &s.cells {
                writeln!(
                    out,
                    "alpha {} n {} {}: {} records",
                    c.alpha, c.n, c.kind, c.records
                )?;
                for p in &c.strict_patterns {
                    writeln!(out, "  strict {:?} x{}", p.pattern, p.count)?;
                }
                for p in &c.tied_patterns {
                    writeln!(out, "  tied   {:?} x{}", p.pattern, p.count)?;
                }
            }
            for (id, t) in &s.bound_totals {
                writeln!(
                    out,
                    "{id}: {} runs, {} with hypotheses, {} passed, {} violated, {} errors",
                    t.runs, t.hypotheses_met, t.passed, t.with_violations, t.errors
                )?;
            }
            Ok(())
        }
    }
}
