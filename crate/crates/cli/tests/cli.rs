use std::fs;
use std::process::Command;

use indpoly::classification::{classify, ClassificationRecord, LambdaStar};
use indpoly::enumeration::independence_coefficients;
use indpoly::graph::{parse_graph6, parse_graph_spec, to_graph6};
use indpoly::polynomial::{real_root_census, IntPolynomial, RootCensus};
use indpoly::survey::{SurveyRecord, SurveySummary};
use indpoly::theorems::{BoundReport, TheoremId, Window, WindowKind};
use num_rational::Rational64;
use serde_json::Value;

struct Outcome {
    code: u8,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("indpoly").chain(args.iter().copied());
    let code = indpoly_cli::run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json_of(args: &[&str]) -> (u8, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = cli(&full);
    (o.code, serde_json::from_str(&o.out).unwrap())
}

#[test]
fn poly_tsv_fixture() {
    let o = cli(&["poly", "corona(Star(3),K(2))", "--format", "tsv"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out, "1\t12\t51\t93\t62\n");
}

#[test]
fn poly_json_and_human() {
    let (code, v) = json_of(&["poly", "C(5)"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 5);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["coefficients"], serde_json::json!(["1", "5", "5"]));

    let o = cli(&["poly", "C(5)"]);
    assert!(o.out.contains("I(G; x) = 1 + 5x + 5x^2"), "{}", o.out);
}

#[test]
fn graph_sources_agree() {
    let g = parse_graph_spec("corona(P(3),K(2))").unwrap();
    let g6 = format!("g6:{}", to_graph6(&g).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.edges");
    fs::write(&file, indpoly::graph::to_edge_list(&g)).unwrap();
    let at_file = format!("@{}", file.display());
    let expected = cli(&["poly", "corona(P(3),K(2))", "--format", "tsv"]).out;
    for source in [g6.as_str(), at_file.as_str()] {
        let o = cli(&["poly", source, "--format", "tsv"]);
        assert_eq!((o.code, o.out.as_str()), (0, expected.as_str()), "{source}");
    }
}

#[test]
fn classify_round_trips() {
    let (code, v) = json_of(&["classify", "C(7)", "--w2"]);
    assert_eq!(code, 0);
    let r: ClassificationRecord = serde_json::from_value(v).unwrap();
    assert!(r.well_covered && !r.one_well_covered);
    assert_eq!(r.in_w2, Some(false));
    assert_eq!(r.lambda_star, LambdaStar::Finite(Rational64::new(4, 3)));
    assert_eq!(
        r,
        classify(&parse_graph_spec("C(7)").unwrap(), true).unwrap()
    );

    let (_, v) = json_of(&["classify", "Empty(0)"]);
    assert_eq!(v["lambda_star"], "inf");
    let r: ClassificationRecord = serde_json::from_value(v).unwrap();
    assert_eq!(r.lambda_star, LambdaStar::Unbounded);
}

#[test]
fn bounds_exit_codes() {
    let (code, v) = json_of(&["bounds", "C(6)", "--theorem", "COR2"]);
    assert_eq!(code, 1);
    let r: BoundReport = serde_json::from_value(v).unwrap();
    assert!(!r.hypotheses_met && !r.passed);
    assert!(!r.reasons.is_empty());

    let (code, v) = json_of(&["bounds", "C(7)", "--theorem", "COR2"]);
    assert_eq!(code, 0);
    let r: BoundReport = serde_json::from_value(v).unwrap();
    assert!(r.passed && r.violations.is_empty() && r.checked_count > 0);
    assert_eq!(r.theorem_id, TheoremId::WellCovered);

    let (code, v) = json_of(&["bounds", "C(7)", "--theorem", "TH13", "--lambda", "4/3"]);
    assert_eq!(code, 0);
    assert_eq!(v["lambda"], "4/3");
    let (code, v) = json_of(&["bounds", "C(7)", "--theorem", "TH13", "--lambda", "3/2"]);
    assert_eq!(code, 1);
    assert_eq!(v["hypotheses_met"], false);

    for id in ["TH13", "COR3", "TH5", "COR1", "TH3", "CORONA_K2"] {
        let o = cli(&["bounds", "C(5)", "--theorem", id, "--format", "tsv"]);
        let first = o.out.lines().next().unwrap();
        assert!(first.starts_with(id), "{first}");
        assert!(o.code <= 1, "{id}: {}", o.err);
    }

    let o = cli(&["bounds", "C(5)", "--theorem", "TH99"]);
    assert_eq!(o.code, 2);
}

#[test]
fn corona_paths_agree() {
    for (base, attach) in [
        ("Star(3)", "K(2)"),
        ("C(5)", "P(3)"),
        ("P(4)", "K(1)"),
        ("K(4)", "Empty(2)"),
        ("union(C(3),K(2))", "C(4)"),
    ] {
        let (code, v) = json_of(&["corona", base, attach, "--via-formula", "--via-enum"]);
        assert_eq!(code, 0, "{base} {attach}");
        assert_eq!(v["agree"], true);
        assert_eq!(v["via_formula"], v["via_enum"]);
        let p: IntPolynomial = serde_json::from_value(v["via_enum"].clone()).unwrap();
        let g = parse_graph_spec(&format!("corona({base},{attach})")).unwrap();
        assert_eq!(p, IntPolynomial::from(&independence_coefficients(&g)));
    }

    let o = cli(&["corona", "C(3)", "K(2)", "--format", "tsv"]);
    assert_eq!(o.code, 0);
    let g = parse_graph6(o.out.trim()).unwrap();
    assert_eq!(g, parse_graph_spec("corona(C(3),K(2))").unwrap());
}

#[test]
fn roots_census() {
    let (code, v) = json_of(&["roots", "corona(Star(3),K(2))"]);
    assert_eq!(code, 0);
    let c: RootCensus = serde_json::from_value(v).unwrap();
    assert!(!c.real_rooted);
    assert_eq!(c.degree, 4);

    let o = cli(&["roots", "--coeffs", "1,2", "--format", "tsv"]);
    assert_eq!(o.out, "1\t1\t1\ttrue\n");
    let o = cli(&["roots", "--coeffs", "-1,0,1", "--format", "tsv"]);
    assert_eq!(o.out, "2\t2\t2\ttrue\n");

    let (_, v) = json_of(&["roots", "corona(P(3),K(2))"]);
    let c: RootCensus = serde_json::from_value(v).unwrap();
    let p = IntPolynomial::from(&independence_coefficients(
        &parse_graph_spec("corona(P(3),K(2))").unwrap(),
    ));
    assert_eq!(c, real_root_census(&p).unwrap());
    assert!(c.real_rooted);

    assert_eq!(cli(&["roots", "--coeffs", "0"]).code, 2);
}

#[test]
fn window_examples() {
    let o = cli(&["window", "--alpha", "5", "--n", "12", "--format", "tsv"]);
    assert_eq!(o.out, "3\t4\tWELL_COVERED\n");
    let (_, v) = json_of(&["window", "--alpha", "3", "--n", "9", "--kind", "CORONA_K2"]);
    let w: Window = serde_json::from_value(v).unwrap();
    assert_eq!((w.lo, w.hi, w.kind), (2, 2, WindowKind::CoronaK2));
    let (_, v) = json_of(&[
        "window",
        "--alpha",
        "2",
        "--n",
        "5",
        "--kind",
        "ONE_WELL_COVERED",
    ]);
    assert_eq!((v["lo"].as_u64(), v["hi"].as_u64()), (Some(2), Some(2)));
    let o = cli(&[
        "window",
        "--alpha",
        "4",
        "--n",
        "12",
        "--start",
        "floor-plus-one",
        "--format",
        "tsv",
    ]);
    assert_eq!(o.out, "3\t4\tWELL_COVERED\n");

    assert_eq!(cli(&["window", "--alpha", "0", "--n", "3"]).code, 2);
    assert_eq!(cli(&["window", "--alpha", "5", "--n", "3"]).code, 2);
}

#[test]
fn oracle_matches_poly() {
    for spec in ["corona(Star(3),K(2))", "C(16)", "union(K(3),P(5))"] {
        let a = cli(&["oracle", spec, "--format", "tsv"]);
        let b = cli(&["poly", spec, "--format", "tsv"]);
        assert_eq!((a.code, &a.out), (0, &b.out), "{spec}");
    }
    let o = cli(&["oracle", "C(25)"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("25"), "{}", o.err);
    let o = cli(&["oracle", "C(26)", "--max-n", "26", "--format", "tsv"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out, cli(&["poly", "C(26)", "--format", "tsv"]).out);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &[][..],
        &["poly"][..],
        &["poly", "C(5"][..],
        &["poly", "X(5)"][..],
        &["poly", "g6:???"][..],
        &["poly", "@/nonexistent/graph.txt"][..],
        &["poly", "C(41)"][..],
        &["poly", "C(10)", "--max-n", "9"][..],
        &["poly", "C(5)", "--format", "xml"][..],
        &["classify", "C(17)", "--w2"][..],
        &["bounds", "C(5)", "--theorem", "TH13", "--lambda", "-1"][..],
        &["corona", "C(20)", "K(2)", "--via-enum"][..],
        &["roots", "C(5)", "--coeffs", "1,2"][..],
    ] {
        let o = cli(args);
        assert_eq!(o.code, 2, "{args:?}: {}", o.out);
        assert!(!o.err.is_empty(), "{args:?}");
    }
    assert_eq!(cli(&["--help"]).code, 0);
    assert_eq!(cli(&["--version"]).code, 0);
}

#[test]
fn survey_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    let graphs: Vec<String> = ["C(5)", "C(6)", "C(7)", "P(4)", "K(3)", "corona(C(3),K(2))"]
        .iter()
        .map(|s| to_graph6(&parse_graph_spec(s).unwrap()).unwrap())
        .collect();
    fs::write(&input, graphs.join("\n") + "\n").unwrap();
    let output = dir.path().join("out.jsonl");
    let summary = dir.path().join("summary.json");
    let o = cli(&[
        "survey",
        input.to_str().unwrap(),
        "--filter",
        "well_covered",
        "--check",
        "COR2",
        "--check",
        "TH3",
        "--output",
        output.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
        "--workers",
        "2",
    ]);
    assert_eq!(o.code, 0, "{}", o.err);
    let records: Vec<SurveyRecord> = fs::read_to_string(&output)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let ordinals: Vec<u64> = records.iter().map(|r| r.ordinal).collect();
    assert_eq!(ordinals, vec![0, 2, 3, 4, 5]);
    assert!(records.iter().all(|r| r.bounds.len() == 2));
    let s: SurveySummary = serde_json::from_str(&fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!((s.lines_read, s.records, s.filtered_out), (6, 5, 1));
    assert!(s.is_conserved());

    let o = cli(&["--format", "tsv", "survey", input.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out.lines().count(), 6);
    assert!(!o.err.is_empty());

    let empty = dir.path().join("empty.g6");
    fs::write(&empty, "").unwrap();
    let o = cli(&[
        "survey",
        empty.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert_eq!((o.code, o.out.as_str()), (0, ""));
    let s: SurveySummary = serde_json::from_str(&fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(s.records, 0);
    assert!(s.cells.is_empty());

    let bad = dir.path().join("bad.g6");
    fs::write(&bad, format!("{}\n!!!\n", graphs[0])).unwrap();
    assert_eq!(cli(&["survey", bad.to_str().unwrap()]).code, 2);
    let o = cli(&[
        "survey",
        bad.to_str().unwrap(),
        "--skip-parse-errors",
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.err);
    let s: SurveySummary = serde_json::from_str(&fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(s.skipped.len(), 1);

    assert_eq!(
        cli(&["survey", input.to_str().unwrap(), "--max-n", "33"]).code,
        2
    );
    assert_eq!(
        cli(&["survey", input.to_str().unwrap(), "--filter", "n >"]).code,
        2
    );
    assert_eq!(
        cli(&["survey", dir.path().join("missing").to_str().unwrap()]).code,
        2
    );
}

#[test]
fn environment_limit_applies_to_the_binary() {
    let bin = env!("CARGO_BIN_EXE_indpoly");
    let run = |limit: &str, args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env("INDPOLY_MAX_N", limit)
            .output()
            .unwrap()
    };
    let o = run("8", &["poly", "C(9)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let o = run("8", &["poly", "C(9)", "--max-n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run("50", &["poly", "C(45)", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("1\t45\t"));
    let o = run("lots", &["poly", "C(5)"]);
    assert_eq!(o.status.code(), Some(2));
}
