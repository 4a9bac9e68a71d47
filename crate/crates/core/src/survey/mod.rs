//! Catalog pipeline: graph6 lines in, one JSON record per accepted graph out,
//! plus a summary of which coefficient orderings occur inside the window.
//!
//! Graphs are processed in chunks on a fixed-size worker pool; results are
//! collected in input order before anything is written, so the output does
//! not depend on the worker count.

mod filter;
mod signature;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use filter::{Cmp, Field, Filter, Flag};
pub use signature::{pattern_signature, WindowSignature};

use crate::classification::{classify, ClassificationRecord, W2_MAX_VERTICES};
use crate::enumeration::{independence_coefficients, CoefficientSequence};
use crate::graph::{parse_graph6, to_graph6};
use crate::theorems::{
    roller_coaster_window_with, Checker, TheoremId, Violation, Window, WindowKind, WindowStart,
};
use crate::{Error, Result};

/// Largest per-graph order a survey accepts.
pub const SURVEY_MAX_VERTICES: usize = 32;
pub const DEFAULT_SURVEY_MAX_VERTICES: usize = 16;
const CHUNK: usize = 2048;

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub inputs: Vec<PathBuf>,
    pub filter: Option<Filter>,
    pub window_kind: WindowKind,
    pub window_start: WindowStart,
    pub checks: Vec<TheoremId>,
    /// JSON-lines record file; `None` discards records.
    pub output: Option<PathBuf>,
    pub summary_output: Option<PathBuf>,
    pub workers: usize,
    /// Graphs above this order are skipped and listed in the summary.
    pub max_n: usize,
    /// Record unparsable lines as skipped instead of failing.
    pub skip_parse_errors: bool,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig {
            inputs: Vec::new(),
            filter: None,
            window_kind: WindowKind::WellCovered,
            window_start: WindowStart::Ceil,
            checks: Vec::new(),
            output: None,
            summary_output: None,
            workers: 1,
            max_n: DEFAULT_SURVEY_MAX_VERTICES,
            skip_parse_errors: false,
        }
    }
}

impl SurveyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n > SURVEY_MAX_VERTICES {
            return Err(Error::SizeLimit {
                op: "survey",
                n: self.max_n,
                limit: SURVEY_MAX_VERTICES,
            });
        }
        if self.workers == 0 {
            return Err(Error::Window("worker count must be at least 1".into()));
        }
        Ok(())
    }
}

/// Outcome of one bound check inside a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSummary {
    pub theorem_id: TheoremId,
    pub hypotheses_met: bool,
    pub passed: bool,
    pub checked_count: usize,
    pub violations: Vec<Violation>,
    /// Set when the check could not run on this graph.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    /// Position among the non-blank input lines, counted across all inputs
    /// from 0.
    pub ordinal: u64,
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    pub classification: ClassificationRecord,
    pub coefficients: CoefficientSequence,
    /// Absent when the graph has no window (α = 0).
    pub signature: Option<WindowSignature>,
    pub bounds: Vec<BoundSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    pub ordinal: u64,
    pub source: String,
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCount {
    pub pattern: Vec<usize>,
    pub count: u64,
}

/// Aggregate for one `(α, n, kind)` cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyCell {
    pub alpha: usize,
    pub n: usize,
    pub kind: WindowKind,
    pub window: Option<Window>,
    pub records: u64,
    /// Patterns with all window values distinct, sorted lexicographically.
    pub strict_patterns: Vec<PatternCount>,
    /// Patterns with at least one tie, kept apart from the strict ones.
    pub tied_patterns: Vec<PatternCount>,
    /// Records without a window.
    pub without_window: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTotals {
    pub runs: u64,
    pub hypotheses_met: u64,
    pub passed: u64,
    pub with_violations: u64,
    pub errors: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveySummary {
    pub lines_read: u64,
    pub records: u64,
    pub filtered_out: u64,
    pub skipped: Vec<SkippedLine>,
    pub cells: Vec<SurveyCell>,
    pub bound_totals: BTreeMap<TheoremId, BoundTotals>,
}

impl SurveySummary {
    /// Each cell's pattern counts add up to its record count, and the cells
    /// add up to the total.
    pub fn is_conserved(&self) -> bool {
        let cells_ok = self.cells.iter().all(|c| {
            let patterns: u64 = c
                .strict_patterns
                .iter()
                .chain(&c.tied_patterns)
                .map(|p| p.count)
                .sum();
            patterns + c.without_window == c.records
        });
        cells_ok && self.cells.iter().map(|c| c.records).sum::<u64>() == self.records
    }
}

/// Runs the survey, writing records to `config.output` and the summary to
/// `config.summary_output` when set.
pub fn run_survey(config: &SurveyConfig) -> Result<SurveySummary> {
    let summary = match &config.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| io_error(path, e))?;
            let mut out = BufWriter::new(file);
            let summary = run_survey_to(config, &mut out)?;
            out.flush().map_err(|e| io_error(path, e))?;
            summary
        }
        None => run_survey_to(config, io::sink())?,
    };
    if let Some(path) = &config.summary_output {
        write_summary(path, &summary)?;
    }
    Ok(summary)
}

/// Runs the survey over `config.inputs`, writing records to `out`.
pub fn run_survey_to<W: Write>(config: &SurveyConfig, mut out: W) -> Result<SurveySummary> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .expect("thread pool");
    let mut state = State::default();
    for path in &config.inputs {
        let file = File::open(path).map_err(|e| io_error(path, e))?;
        survey_reader(
            config,
            &pool,
            path,
            BufReader::new(file),
            &mut out,
            &mut state,
        )?;
    }
    Ok(state.finish())
}

/// Same as [`run_survey_to`] over an in-memory or piped source.
pub fn run_survey_reader<R: BufRead, W: Write>(
    config: &SurveyConfig,
    source: &Path,
    reader: R,
    mut out: W,
) -> Result<SurveySummary> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .expect("thread pool");
    let mut state = State::default();
    survey_reader(config, &pool, source, reader, &mut out, &mut state)?;
    Ok(state.finish())
}

pub fn write_summary(path: &Path, summary: &SurveySummary) -> Result<()> {
    let mut text = serde_json::to_string_pretty(summary)?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}

fn io_error(path: &Path, source: io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

struct Line {
    ordinal: u64,
    number: usize,
    text: String,
}

enum Outcome {
    Record(Box<SurveyRecord>),
    Filtered,
    Skipped(String),
    ParseError(String),
}

#[derive(Default)]
struct CellAcc {
    window: Option<Window>,
    records: u64,
    strict: BTreeMap<Vec<usize>, u64>,
    tied: BTreeMap<Vec<usize>, u64>,
    without_window: u64,
}

#[derive(Default)]
struct State {
    next_ordinal: u64,
    summary: SurveySummary,
    cells: BTreeMap<(usize, usize, WindowKind), CellAcc>,
}

impl State {
    fn add(&mut self, kind: WindowKind, record: &SurveyRecord) {
        self.summary.records += 1;
        let cell = self
            .cells
            .entry((record.alpha, record.n, kind))
            .or_default();
        cell.records += 1;
        match &record.signature {
            Some(sig) => {
                cell.window = Some(sig.window);
                let bucket = if sig.is_strict() {
                    &mut cell.strict
                } else {
                    &mut cell.tied
                };
                *bucket.entry(sig.pattern.clone()).or_default() += 1;
            }
            None => cell.without_window += 1,
        }
        for b in &record.bounds {
            let t = self.summary.bound_totals.entry(b.theorem_id).or_default();
            t.runs += 1;
            t.hypotheses_met += b.hypotheses_met as u64;
            t.passed += b.passed as u64;
            t.with_violations += !b.violations.is_empty() as u64;
            t.errors += b.error.is_some() as u64;
        }
    }

    fn finish(mut self) -> SurveySummary {
        let counts = |m: BTreeMap<Vec<usize>, u64>| {
            m.into_iter()
                .map(|(pattern, count)| PatternCount { pattern, count })
                .collect()
        };
        self.summary.cells = self
            .cells
            .into_iter()
            .map(|((alpha, n, kind), c)| SurveyCell {
                alpha,
                n,
                kind,
                window: c.window,
                records: c.records,
                strict_patterns: counts(c.strict),
                tied_patterns: counts(c.tied),
                without_window: c.without_window,
            })
            .collect();
        self.summary
    }
}

fn survey_reader<R: BufRead, W: Write>(
    config: &SurveyConfig,
    pool: &rayon::ThreadPool,
    source: &Path,
    reader: R,
    out: &mut W,
    state: &mut State,
) -> Result<()> {
    let mut lines = reader.lines().enumerate();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for (i, text) in lines.by_ref() {
            let text = text.map_err(|e| io_error(source, e))?;
            let trimmed = text.trim();
            if trimmed.is_empty() {
                continue;
            }
            chunk.push(Line {
                ordinal: state.next_ordinal,
                number: i + 1,
                text: trimmed.to_string(),
            });
            state.next_ordinal += 1;
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            return Ok(());
        }
        let outcomes: Vec<Outcome> =
            pool.install(|| chunk.par_iter().map(|line| process(config, line)).collect());
        for (line, outcome) in chunk.iter().zip(outcomes) {
            state.summary.lines_read += 1;
            match outcome {
                Outcome::Record(record) => {
                    serde_json::to_writer(&mut *out, &record)?;
                    out.write_all(b"\n").map_err(|e| io_error(source, e))?;
                    state.add(config.window_kind, &record);
                }
                Outcome::Filtered => state.summary.filtered_out += 1,
                Outcome::Skipped(reason) => state.summary.skipped.push(SkippedLine {
                    ordinal: line.ordinal,
                    source: source.display().to_string(),
                    line: line.number,
                    reason,
                }),
                Outcome::ParseError(msg) if config.skip_parse_errors => {
                    state.summary.skipped.push(SkippedLine {
                        ordinal: line.ordinal,
                        source: source.display().to_string(),
                        line: line.number,
                        reason: msg,
                    })
                }
                Outcome::ParseError(msg) => {
                    return Err(Error::Input {
                        path: source.to_path_buf(),
                        line: line.number,
                        msg,
                    })
                }
            }
        }
    }
}

fn process(config: &SurveyConfig, line: &Line) -> Outcome {
    let g = match parse_graph6(&line.text) {
        Ok(g) => g,
        Err(e) => return Outcome::ParseError(e.to_string()),
    };
    let n = g.order();
    if n > config.max_n {
        return Outcome::Skipped(format!("order {n} exceeds the limit {}", config.max_n));
    }
    let needs_w2 = config.filter.as_ref().is_some_and(Filter::uses_w2);
    if needs_w2 && n > W2_MAX_VERTICES {
        return Outcome::Skipped(format!(
            "filter reads in_w2, which is limited to {W2_MAX_VERTICES} vertices"
        ));
    }
    let classification = match classify(&g, needs_w2) {
        Ok(c) => c,
        Err(e) => return Outcome::Skipped(e.to_string()),
    };
    if let Some(f) = &config.filter {
        if !f.matches(&classification) {
            return Outcome::Filtered;
        }
    }
    let coefficients = independence_coefficients(&g);
    let alpha = coefficients.alpha();
    let signature = roller_coaster_window_with(alpha, n, config.window_kind, config.window_start)
        .ok()
        .map(|w| pattern_signature(&coefficients, w).expect("window lies within [0, alpha]"));
    let checker = Checker::with_record(&g, &coefficients, &classification);
    let bounds = config
        .checks
        .iter()
        .map(|&id| match checker.run(id, None) {
            Ok(r) => BoundSummary {
                theorem_id: id,
                hypotheses_met: r.hypotheses_met,
                passed: r.passed,
                checked_count: r.checked_count,
                violations: r.violations,
                error: None,
            },
            Err(e) => BoundSummary {
                theorem_id: id,
                hypotheses_met: false,
                passed: false,
                checked_count: 0,
                violations: Vec::new(),
                error: Some(e.to_string()),
            },
        })
        .collect();
    Outcome::Record(Box::new(SurveyRecord {
        ordinal: line.ordinal,
        graph6: to_graph6(&g).expect("order within graph6 range"),
        n,
        alpha,
        classification,
        coefficients,
        signature,
        bounds,
    }))
}
