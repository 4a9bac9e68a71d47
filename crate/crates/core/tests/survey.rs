mod common;

use std::fs;
use std::io::Cursor;
use std::path::Path;

use common::{random_graph, rng};
use indpoly::classification::{classify, is_well_covered};
use indpoly::enumeration::{independence_coefficients, CoefficientSequence};
use indpoly::graph::{parse_graph6, to_graph6};
use indpoly::survey::{
    pattern_signature, run_survey, run_survey_reader, Filter, SurveyConfig, SurveyRecord,
};
use indpoly::theorems::{roller_coaster_window, TheoremId, WindowKind};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;

fn catalog(seed: u64, lines: usize, max_n: usize) -> String {
    let mut r = rng(seed);
    let mut text = String::new();
    for _ in 0..lines {
        let n = r.gen_range(1..=max_n);
        let p = r.gen_range(0.15..0.7);
        text.push_str(&to_graph6(&random_graph(&mut r, n, p)).unwrap());
        text.push('\n');
    }
    text
}

fn records(text: &str) -> Vec<SurveyRecord> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn output_is_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("catalog.g6");
    fs::write(&input, catalog(31, 3000, 9)).unwrap();
    let run = |workers: usize| {
        let output = dir.path().join(format!("records-{workers}.jsonl"));
        let summary_path = dir.path().join(format!("summary-{workers}.json"));
        let config = SurveyConfig {
            inputs: vec![input.clone()],
            filter: Some("connected".parse().unwrap()),
            checks: TheoremId::ALL.to_vec(),
            output: Some(output.clone()),
            summary_output: Some(summary_path.clone()),
            workers,
            ..SurveyConfig::default()
        };
        run_survey(&config).unwrap();
        (fs::read(output).unwrap(), fs::read(summary_path).unwrap())
    };
    let single = run(1);
    assert!(!single.0.is_empty());
    assert_eq!(run(2), single);
    assert_eq!(run(4), single);
}

#[test]
fn records_satisfy_filter_and_summary_is_conserved() {
    let text = catalog(32, 2500, 8);
    for filter_text in [
        "well_covered",
        "connected && !has_isolated",
        "one_well_covered || very_well_covered",
        "alpha >= 3 && lambda_star > 1",
        "n <= 5 || lambda_star == 0",
    ] {
        let filter: Filter = filter_text.parse().unwrap();
        let config = SurveyConfig {
            filter: Some(filter.clone()),
            checks: vec![TheoremId::WellCovered, TheoremId::OneWellCovered],
            workers: 2,
            ..SurveyConfig::default()
        };
        let mut out = Vec::new();
        let summary =
            run_survey_reader(&config, Path::new("catalog"), Cursor::new(&text), &mut out).unwrap();
        let emitted = records(std::str::from_utf8(&out).unwrap());
        assert_eq!(summary.records, emitted.len() as u64);
        assert_eq!(summary.records + summary.filtered_out, summary.lines_read);
        assert!(summary.is_conserved(), "{filter_text}");
        let mut last = None;
        for rec in &emitted {
            let g = parse_graph6(&rec.graph6).unwrap();
            let fresh = classify(&g, false).unwrap();
            assert!(filter.matches(&fresh), "{filter_text}: {}", rec.graph6);
            assert_eq!(rec.classification, fresh);
            assert_eq!(rec.coefficients, independence_coefficients(&g));
            assert!(last < Some(rec.ordinal));
            last = Some(rec.ordinal);
        }
        let direct = text
            .lines()
            .filter(|l| filter.matches(&classify(&parse_graph6(l).unwrap(), false).unwrap()))
            .count();
        assert_eq!(direct, emitted.len(), "{filter_text}");
    }
}

#[test]
fn well_covered_filter_counts_ten_random_graphs() {
    for seed in 34..44 {
        let mut r = rng(seed);
        let input: String = (0..10)
            .map(|_| to_graph6(&random_graph(&mut r, 6, 0.5)).unwrap() + "\n")
            .collect();
        let expected = input
            .lines()
            .filter(|l| is_well_covered(&parse_graph6(l).unwrap()))
            .count() as u64;
        let config = SurveyConfig {
            filter: Some("well_covered".parse().unwrap()),
            ..SurveyConfig::default()
        };
        let summary = run_survey_reader(
            &config,
            Path::new("ten"),
            Cursor::new(&input),
            std::io::sink(),
        )
        .unwrap();
        assert_eq!(summary.records, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn signature_ignores_positive_scaling(
        values in proptest::collection::vec(1u64..1000, 4..14),
        c in 1u64..1000,
    ) {
        let mut values = values;
        values[0] = 1;
        let alpha = values.len() - 1;
        let window = roller_coaster_window(alpha, 3 * alpha, WindowKind::WellCovered).unwrap();
        let base = pattern_signature(&CoefficientSequence::from_u64s(&values), window).unwrap();
        let scaled = CoefficientSequence::new(
            values.iter().map(|&v| BigUint::from(v) * c).collect(),
        );
        let scaled = pattern_signature(&scaled, window).unwrap();
        prop_assert_eq!(&base.pattern, &scaled.pattern);
        prop_assert_eq!(base.strict_pattern, scaled.strict_pattern);
        prop_assert_eq!(base.pattern.len(), window.len());
    }
}
