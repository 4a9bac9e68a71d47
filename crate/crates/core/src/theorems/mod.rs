//! Coefficient inequalities for the well-coveredness hierarchy, evaluated as
//! checks that return a structured report instead of a bare boolean.
//!
//! Every check first gates on its hypotheses. A graph that misses them gets
//! `hypotheses_met = false` with the reasons, never an error, so survey
//! pipelines can filter on the flag. All comparisons are exact integer
//! comparisons; rational ratios are cleared of denominators first.

mod window;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use window::{
    roller_coaster_window, roller_coaster_window_with, Window, WindowKind, WindowStart,
};

use crate::classification::{
    is_one_well_covered, is_well_covered, lambda_star, min_deficiency, ClassificationRecord,
    LambdaStar,
};
use crate::enumeration::{independence_coefficients, CoefficientSequence};
use crate::graph::Graph;
use crate::polynomial::{corona_compose, IntPolynomial};
use crate::{Error, Result};

/// The inequality families. The external tags (`TH13`, `COR3`, ...) are the
/// stable identifiers used on the command line and in JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Level bound and tail for λ-quasi-regularizable graphs.
    #[serde(rename = "TH13")]
    QuasiRegular,
    /// The same at λ = 1.
    #[serde(rename = "COR3")]
    QuasiRegularizable,
    /// Two-sided level bounds, prefix and tail for well-covered graphs.
    #[serde(rename = "COR2")]
    WellCovered,
    /// Non-decreasing prefix up to `⌈α/2⌉` for well-covered graphs.
    #[serde(rename = "TH5")]
    WellCoveredPrefix,
    /// Prefix and tail for very well-covered graphs.
    #[serde(rename = "COR1")]
    VeryWellCovered,
    /// Strict bounds for connected 1-well-covered graphs.
    #[serde(rename = "TH3")]
    OneWellCovered,
    /// Bounds for `H ∘ K2` with `H` connected.
    #[serde(rename = "CORONA_K2")]
    CoronaK2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::QuasiRegular,
        TheoremId::QuasiRegularizable,
        TheoremId::WellCovered,
        TheoremId::WellCoveredPrefix,
        TheoremId::VeryWellCovered,
        TheoremId::OneWellCovered,
        TheoremId::CoronaK2,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TheoremId::QuasiRegular => "TH13",
            TheoremId::QuasiRegularizable => "COR3",
            TheoremId::WellCovered => "COR2",
            TheoremId::WellCoveredPrefix => "TH5",
            TheoremId::VeryWellCovered => "COR1",
            TheoremId::OneWellCovered => "TH3",
            TheoremId::CoronaK2 => "CORONA_K2",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let known: Vec<_> = TheoremId::ALL.iter().map(|t| t.tag()).collect();
                format!(
                    "unknown theorem id {s:?} (expected one of {})",
                    known.join(", ")
                )
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Eq => "=",
        }
    }
}

/// One inequality family. Index `k` in a violation refers to the formula
/// given here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum InequalityTag {
    /// `q(k+1)s_{k+1} <= (qn - (p+q)k)s_k` for `λ = p/q`.
    LevelUpper,
    /// `(k+1)s_{k+1} < (n-2k)s_k`.
    StrictLevelUpper,
    /// `(k+1)s_{k+1} <= 3(α-k)s_k`.
    TripleLevelUpper,
    /// `(α-k)s_k <= (k+1)s_{k+1}`.
    LevelLower,
    /// `2(α-k)s_k <= (k+1)s_{k+1}`.
    DoubleLevelLower,
    /// `s_k <= s_{k+1}`.
    Prefix,
    /// `s_k >= s_{k+1}`.
    Tail,
    /// `s_k > s_{k+1}`.
    StrictTail,
    /// `s_{k-1}s_{k+1} <= s_k^2`.
    LogConcave,
    /// `s_{k-1} >= s_k` at a rise that follows a descent.
    Unimodal,
    /// `n = 3α`, reported with `k = 0`.
    OrderThreeAlpha,
    /// `min_S (|N(S)| - λ|S|) >= 0`, reported with `k = |S|` of a minimizer.
    QuasiRegularity,
}

impl InequalityTag {
    pub fn relation(self) -> Relation {
        use InequalityTag::*;
        match self {
            LevelUpper | TripleLevelUpper | LevelLower | DoubleLevelLower | Prefix | LogConcave => {
                Relation::Le
            }
            StrictLevelUpper => Relation::Lt,
            Tail | Unimodal | QuasiRegularity => Relation::Ge,
            StrictTail => Relation::Gt,
            OrderThreeAlpha => Relation::Eq,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub k: usize,
    pub tag: InequalityTag,
    pub relation: Relation,
    #[serde(with = "crate::decimal::single")]
    pub lhs: BigInt,
    #[serde(with = "crate::decimal::single")]
    pub rhs: BigInt,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} at k={}: {} {} {} fails",
            self.tag,
            self.k,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem_id: TheoremId,
    /// Order and independence number of the graph the inequalities are about.
    pub n: usize,
    pub alpha: usize,
    pub hypotheses_met: bool,
    /// Why the hypotheses fail; empty when they hold.
    pub reasons: Vec<String>,
    /// Inequality families left out on purpose, with the reason.
    pub skipped: Vec<String>,
    /// The ratio λ in use, for the quasi-regular families.
    pub lambda: Option<String>,
    pub prefix_end: Option<usize>,
    /// First index of the checked tail (`r` for the λ-family).
    pub tail_start: Option<usize>,
    pub checked_count: usize,
    pub violations: Vec<Violation>,
    /// `hypotheses_met` and no violations.
    pub passed: bool,
}

impl BoundReport {
    fn new(theorem_id: TheoremId, n: usize, alpha: usize) -> Self {
        BoundReport {
            theorem_id,
            n,
            alpha,
            hypotheses_met: true,
            reasons: Vec::new(),
            skipped: Vec::new(),
            lambda: None,
            prefix_end: None,
            tail_start: None,
            checked_count: 0,
            violations: Vec::new(),
            passed: false,
        }
    }

    fn unmet(&mut self, reason: impl Into<String>) {
        self.hypotheses_met = false;
        self.reasons.push(reason.into());
    }

    fn finish(mut self) -> Self {
        self.passed = self.hypotheses_met && self.violations.is_empty();
        self
    }
}

fn int(v: usize) -> BigInt {
    BigInt::from(v)
}

/// Evaluates inequalities over a coefficient sequence into a report.
struct Eval<'a> {
    s: &'a [BigInt],
    report: BoundReport,
}

impl Eval<'_> {
    fn s(&self, k: usize) -> BigInt {
        self.s.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    fn alpha(&self) -> usize {
        self.report.alpha
    }

    fn check(&mut self, k: usize, tag: InequalityTag, lhs: BigInt, rhs: BigInt) {
        self.report.checked_count += 1;
        let relation = tag.relation();
        if !relation.holds(&lhs, &rhs) {
            self.report.violations.push(Violation {
                k,
                tag,
                relation,
                lhs,
                rhs,
            });
        }
    }

    /// `s_0 <= s_1 <= ... <= s_end`.
    fn prefix(&mut self, end: usize) {
        let end = end.min(self.alpha());
        self.report.prefix_end = Some(end);
        for k in 0..end {
            self.check(k, InequalityTag::Prefix, self.s(k), self.s(k + 1));
        }
    }

    /// `s_start >= ... >= s_α`, strict when `tag` is [`InequalityTag::StrictTail`].
    fn tail(&mut self, start: usize, tag: InequalityTag) {
        self.report.tail_start = Some(start);
        for k in start..self.alpha() {
            self.check(k, tag, self.s(k), self.s(k + 1));
        }
    }

    /// `(k+1)s_{k+1}` against `(n-2k)s_k` for `k` in `from..α`.
    fn level_upper_integer(&mut self, from: usize, tag: InequalityTag) {
        let n = int(self.report.n);
        for k in from..self.alpha() {
            let lhs = int(k + 1) * self.s(k + 1);
            let rhs = (&n - int(2 * k)) * self.s(k);
            self.check(k, tag, lhs, rhs);
        }
    }

    /// `c(α-k)s_k <= (k+1)s_{k+1}` for `1 <= k < α`.
    fn level_lower(&mut self, c: usize, tag: InequalityTag) {
        let alpha = self.alpha();
        for k in 1..alpha {
            let lhs = int(c * (alpha - k)) * self.s(k);
            let rhs = int(k + 1) * self.s(k + 1);
            self.check(k, tag, lhs, rhs);
        }
    }

    fn finish(self) -> BoundReport {
        self.report.finish()
    }
}

/// Runs the checks on one graph, computing its coefficients once and the
/// classification facts on demand.
pub struct Checker<'g> {
    g: &'g Graph,
    s: Vec<BigInt>,
    well_covered: OnceCell<bool>,
    one_well_covered: OnceCell<bool>,
    lambda_star: OnceCell<LambdaStar>,
}

impl<'g> Checker<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::with_coefficients(g, &independence_coefficients(g))
    }

    pub fn with_coefficients(g: &'g Graph, coeffs: &CoefficientSequence) -> Self {
        Checker {
            g,
            s: coeffs
                .as_slice()
                .iter()
                .map(|c| BigInt::from(c.clone()))
                .collect(),
            well_covered: OnceCell::new(),
            one_well_covered: OnceCell::new(),
            lambda_star: OnceCell::new(),
        }
    }

    /// Reuses classification results already computed for `g`.
    pub fn with_record(
        g: &'g Graph,
        coeffs: &CoefficientSequence,
        record: &ClassificationRecord,
    ) -> Self {
        let c = Self::with_coefficients(g, coeffs);
        let _ = c.well_covered.set(record.well_covered);
        let _ = c.one_well_covered.set(record.one_well_covered);
        let _ = c.lambda_star.set(record.lambda_star);
        c
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.s
    }

    pub fn alpha(&self) -> usize {
        self.s.len() - 1
    }

    fn well_covered(&self) -> bool {
        *self.well_covered.get_or_init(|| is_well_covered(self.g))
    }

    fn one_well_covered(&self) -> bool {
        *self
            .one_well_covered
            .get_or_init(|| is_one_well_covered(self.g))
    }

    pub fn lambda_star(&self) -> LambdaStar {
        *self.lambda_star.get_or_init(|| lambda_star(self.g))
    }

    fn admits(&self, lambda: Rational64) -> bool {
        match self.lambda_star.get() {
            Some(l) => l.admits(lambda),
            None => {
                let (p, _) = min_deficiency(self.g, lambda);
                !p.is_negative()
            }
        }
    }

    fn eval(&self, id: TheoremId) -> Eval<'_> {
        Eval {
            s: &self.s,
            report: BoundReport::new(id, self.g.order(), self.alpha()),
        }
    }

    /// Runs the check named by `id`. `lambda` applies to the λ-family only
    /// and defaults to λ* (or 1 when λ* is unbounded).
    pub fn run(&self, id: TheoremId, lambda: Option<Rational64>) -> Result<BoundReport> {
        match id {
            TheoremId::QuasiRegular => match lambda {
                Some(l) => self.quasi_regular(l),
                None => self.quasi_regular_at_lambda_star(),
            },
            TheoremId::QuasiRegularizable => Ok(self.quasi_regularizable()),
            TheoremId::WellCovered => Ok(self.well_covered_bounds()),
            TheoremId::WellCoveredPrefix => Ok(self.well_covered_prefix()),
            TheoremId::VeryWellCovered => Ok(self.very_well_covered_bounds()),
            TheoremId::OneWellCovered => Ok(self.one_well_covered_bounds()),
            TheoremId::CoronaK2 => self.corona_k2(),
        }
    }

    /// The λ-family at `λ = λ*`. A graph with `λ* = 0` has no admissible
    /// ratio and fails the hypotheses.
    pub fn quasi_regular_at_lambda_star(&self) -> Result<BoundReport> {
        match self.lambda_star() {
            LambdaStar::Unbounded => self.quasi_regular(Rational64::from(1)),
            LambdaStar::Finite(l) if l.is_positive() => self.quasi_regular(l),
            LambdaStar::Finite(_) => {
                let mut e = self.eval(TheoremId::QuasiRegular);
                e.report
                    .unmet("lambda* = 0: no positive ratio is admissible");
                Ok(e.finish())
            }
        }
    }

    /// `(k+1)s_{k+1} <= (n-(λ+1)k)s_k` for `0 <= k < α`, and
    /// `s_r >= ... >= s_α` with `r = ⌈(n-1)/(λ+2)⌉`.
    pub fn quasi_regular(&self, lambda: Rational64) -> Result<BoundReport> {
        if !lambda.is_positive() {
            return Err(Error::NonPositiveLambda(lambda.to_string()));
        }
        let mut e = self.eval(TheoremId::QuasiRegular);
        e.report.lambda = Some(lambda.to_string());
        if !self.admits(lambda) {
            e.report.unmet(format!("not {lambda}-quasi-regularizable"));
            return Ok(e.finish());
        }
        let (p, q) = (BigInt::from(*lambda.numer()), BigInt::from(*lambda.denom()));
        let n = int(self.g.order());
        for k in 0..e.alpha() {
            let lhs = &q * int(k + 1) * e.s(k + 1);
            let rhs = (&q * &n - (&p + &q) * int(k)) * e.s(k);
            e.check(k, InequalityTag::LevelUpper, lhs, rhs);
        }
        e.tail(tail_index(self.g.order(), lambda), InequalityTag::Tail);
        Ok(e.finish())
    }

    /// The λ-family at λ = 1 for graphs of order at least 2.
    pub fn quasi_regularizable(&self) -> BoundReport {
        let mut e = self.eval(TheoremId::QuasiRegularizable);
        let n = self.g.order();
        e.report.lambda = Some("1".into());
        if n < 2 {
            e.report.unmet(format!("order {n} is below 2"));
        } else if !self.admits(Rational64::from(1)) {
            e.report.unmet("not quasi-regularizable");
        }
        if e.report.hypotheses_met {
            e.level_upper_integer(0, InequalityTag::LevelUpper);
            e.tail((n - 1).div_ceil(3), InequalityTag::Tail);
        }
        e.finish()
    }

    /// `(α-k)s_k <= (k+1)s_{k+1} <= (n-2k)s_k` for `1 <= k < α`, the prefix up
    /// to `⌈α/2⌉` and the tail from `⌈(n-1)/3⌉`. The upper bound and the tail
    /// rest on quasi-regularizability, which an isolated vertex breaks, so
    /// they are skipped for graphs with isolated vertices.
    pub fn well_covered_bounds(&self) -> BoundReport {
        let mut e = self.eval(TheoremId::WellCovered);
        let n = self.g.order();
        if n < 2 {
            e.report.unmet(format!("order {n} is below 2"));
        } else if !self.well_covered() {
            e.report.unmet("not well-covered");
        }
        if !e.report.hypotheses_met {
            return e.finish();
        }
        e.level_lower(1, InequalityTag::LevelLower);
        e.prefix(e.alpha().div_ceil(2));
        if self.g.has_isolated_vertex() {
            e.report.skipped.push(
                "upper level bound and tail: isolated vertex, so not quasi-regularizable".into(),
            );
        } else {
            e.level_upper_integer(1, InequalityTag::LevelUpper);
            e.tail((n - 1).div_ceil(3), InequalityTag::Tail);
        }
        e.finish()
    }

    /// `s_0 <= ... <= s_{⌈α/2⌉}` for well-covered graphs.
    pub fn well_covered_prefix(&self) -> BoundReport {
        let mut e = self.eval(TheoremId::WellCoveredPrefix);
        if !self.well_covered() {
            e.report.unmet("not well-covered");
            return e.finish();
        }
        e.prefix(e.alpha().div_ceil(2));
        e.finish()
    }

    /// Prefix up to `⌈α/2⌉` and tail from `⌈(2α-1)/3⌉` for very well-covered
    /// graphs of order at least 2.
    pub fn very_well_covered_bounds(&self) -> BoundReport {
        let mut e = self.eval(TheoremId::VeryWellCovered);
        let n = self.g.order();
        let alpha = e.alpha();
        if n < 2 {
            e.report.unmet(format!("order {n} is below 2"));
        } else if self.g.has_isolated_vertex() {
            e.report.unmet("has an isolated vertex");
        } else if n != 2 * alpha {
            e.report
                .unmet(format!("order {n} differs from 2 alpha = {}", 2 * alpha));
        } else if !self.well_covered() {
            e.report.unmet("not well-covered");
        }
        if e.report.hypotheses_met {
            e.prefix(alpha.div_ceil(2));
            e.tail((2 * alpha - 1).div_ceil(3), InequalityTag::Tail);
        }
        e.finish()
    }

    /// For connected 1-well-covered graphs with `n > 2`:
    /// `2(α-k)s_k <= (k+1)s_{k+1}`, the prefix up to `⌈2α/3⌉`,
    /// `(k+1)s_{k+1} < (n-2k)s_k`, and a strictly decreasing tail from
    /// `⌈(n-1)/3⌉`.
    pub fn one_well_covered_bounds(&self) -> BoundReport {
        let mut e = self.eval(TheoremId::OneWellCovered);
        let n = self.g.order();
        if n <= 2 {
            e.report.unmet(format!("order {n} is at most 2"));
        } else if !self.g.is_connected() {
            e.report.unmet("not connected");
        } else if !self.one_well_covered() {
            e.report.unmet("not 1-well-covered");
        }
        if e.report.hypotheses_met {
            e.level_lower(2, InequalityTag::DoubleLevelLower);
            e.prefix((2 * e.alpha()).div_ceil(3));
            e.level_upper_integer(1, InequalityTag::StrictLevelUpper);
            e.tail((n - 1).div_ceil(3), InequalityTag::StrictTail);
        }
        e.finish()
    }

    /// Treats the checker's graph as `H` and checks `H ∘ K2`.
    pub fn corona_k2(&self) -> Result<BoundReport> {
        corona_k2_report(self.g, &IntPolynomial::new(self.s.clone()))
    }
}

/// `⌈(n-1)/(λ+2)⌉`, and 0 for the graph without vertices.
fn tail_index(n: usize, lambda: Rational64) -> usize {
    if n == 0 {
        return 0;
    }
    let (p, q) = (*lambda.numer() as i128, *lambda.denom() as i128);
    let num = q * (n as i128 - 1);
    let den = p + 2 * q;
    ((num + den - 1) / den) as usize
}

fn corona_k2_report(h: &Graph, ih: &IntPolynomial) -> Result<BoundReport> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let g = h.corona_uniform(&Graph::complete(2)?)?;
    let s = corona_compose(ih, &IntPolynomial::from_i64s(&[1, 2]), h.order())?;
    let alpha = s.degree().unwrap_or(0);
    let n = g.order();
    let mut e = Eval {
        s: s.coeffs(),
        report: BoundReport::new(TheoremId::CoronaK2, n, alpha),
    };
    e.report.lambda = Some("2".into());

    e.check(0, InequalityTag::OrderThreeAlpha, int(n), int(3 * alpha));
    let (deficiency, witness) = min_deficiency(&g, Rational64::from(2));
    e.check(
        witness.len(),
        InequalityTag::QuasiRegularity,
        BigInt::from(deficiency.to_integer()),
        BigInt::zero(),
    );

    e.level_lower(2, InequalityTag::DoubleLevelLower);
    for k in 1..alpha {
        let lhs = int(k + 1) * e.s(k + 1);
        let rhs = int(3 * (alpha - k)) * e.s(k);
        e.check(k, InequalityTag::TripleLevelUpper, lhs, rhs);
    }
    e.prefix((2 * alpha).div_ceil(3));
    e.tail(
        (3 * alpha).saturating_sub(1).div_ceil(4),
        InequalityTag::Tail,
    );
    if alpha >= 3 {
        for k in [alpha - 2, alpha - 1] {
            let lhs = e.s(k - 1) * e.s(k + 1);
            let rhs = e.s(k) * e.s(k);
            e.check(k, InequalityTag::LogConcave, lhs, rhs);
        }
    }
    if alpha <= 17 {
        let a = s.coeffs();
        let descent = (0..alpha).find(|&k| a[k] > a[k + 1]);
        let rise = descent.and_then(|d| (d + 2..=alpha).find(|&k| a[k - 1] < a[k]));
        match rise {
            Some(k) => e.check(k, InequalityTag::Unimodal, e.s(k - 1), e.s(k)),
            None => e.report.checked_count += 1,
        }
    } else {
        e.report.skipped.push(format!(
            "unimodality: only asserted for alpha <= 17 (alpha = {alpha})"
        ));
    }
    Ok(e.finish())
}

pub fn check_quasi_regular_bounds(g: &Graph, lambda: Rational64) -> Result<BoundReport> {
    Checker::new(g).quasi_regular(lambda)
}

pub fn check_quasi_regularizable_bounds(g: &Graph) -> BoundReport {
    Checker::new(g).quasi_regularizable()
}

pub fn check_well_covered_bounds(g: &Graph) -> BoundReport {
    Checker::new(g).well_covered_bounds()
}

pub fn check_well_covered_prefix(g: &Graph) -> BoundReport {
    Checker::new(g).well_covered_prefix()
}

pub fn check_very_well_covered_bounds(g: &Graph) -> BoundReport {
    Checker::new(g).very_well_covered_bounds()
}

pub fn check_one_well_covered_bounds(g: &Graph) -> BoundReport {
    Checker::new(g).one_well_covered_bounds()
}

/// Checks `H ∘ K2` for a connected `H`; the coefficients come from the
/// corona composition formula, so `H` may have up to 21 vertices.
pub fn check_corona_k2_bounds(h: &Graph) -> Result<BoundReport> {
    Checker::new(h).corona_k2()
}
