//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact. A criterion also fails when it exceeds its
//! runtime target.

use std::time::{Duration, Instant};

use capelli::center;
use capelli::suite::{run_suite, Check, Suite, SuiteConfig, DEFAULT_SEED};

struct Outcome {
    pass: bool,
    detail: String,
}

fn config(n: u32) -> SuiteConfig {
    SuiteConfig { n, seed: DEFAULT_SEED, samples: 25, timing: false, ..SuiteConfig::default() }
}

fn collect(runs: Vec<(Suite, SuiteConfig)>) -> Vec<Check> {
    let mut checks = Vec::new();
    for (suite, cfg) in runs {
        let report = run_suite(suite, &cfg).unwrap_or_else(|e| panic!("{suite} n={}: {e}", cfg.n));
        checks.extend(report.checks);
    }
    checks
}

fn summarize(checks: &[Check]) -> Outcome {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    let mut detail = format!("{}/{} checks", checks.len() - failed.len(), checks.len());
    if let Some(c) = failed.first() {
        detail.push_str(&format!("; first failure {}", c.name));
    }
    Outcome { pass: failed.is_empty(), detail }
}

fn capelli_vanishing() -> Outcome {
    let runs = [(2, 1), (3, 1), (3, 2), (4, 3)]
        .into_iter()
        .map(|(n, d)| (Suite::Capelli, SuiteConfig { d: Some(d), ..config(n) }))
        .collect();
    summarize(&collect(runs))
}

fn special_identity() -> Outcome {
    summarize(&collect(vec![(Suite::Capelli, config(2)), (Suite::Capelli, config(3))]))
}

fn virtual_capelli_word() -> Outcome {
    let runs = [(2, 2), (2, 3), (3, 3), (3, 4)]
        .into_iter()
        .map(|(n, d)| (Suite::VirtualWord, SuiteConfig { d: Some(d), ..config(n) }))
        .collect();
    summarize(&collect(runs))
}

fn epimorphism() -> Outcome {
    let runs = (1..=3).map(|n| (Suite::Epimorphism, SuiteConfig { samples: 50, ..config(n) })).collect();
    summarize(&collect(runs))
}

fn golden_values() -> Outcome {
    summarize(&collect(vec![(Suite::Golden, config(2))]))
}

fn centrality() -> Outcome {
    let runs = (2..=3).map(|n| (Suite::Centrality, SuiteConfig { p: Some(3), r: Some(3), ..config(n) })).collect();
    summarize(&collect(runs))
}

fn expansion() -> Outcome {
    let runs = (1..=3).map(|n| (Suite::Expansion, SuiteConfig { p: Some(2), ..config(n) })).collect();
    summarize(&collect(runs))
}

/// The printed Stirling relation is expected to fail at n = 2, 3; the
/// outcome still reports it as a failure, and the finding itself is asserted.
fn generating() -> Outcome {
    let checks = collect((1..=3).map(|n| (Suite::Generating, config(n))).collect());
    let failing: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    let expected: Vec<String> =
        (2..=3u32).flat_map(|n| (0..n).map(move |h| format!("stirling_relation[n={n},h={h}]"))).collect();
    let mut sorted = failing.clone();
    sorted.sort_unstable();
    let mut want: Vec<&str> = expected.iter().map(String::as_str).collect();
    want.sort_unstable();
    assert_eq!(sorted, want, "generating identities: unexpected set of failing checks");
    assert!(center::stirling_relation(1, 0));
    for n in 1..=3 {
        for h in 0..n {
            assert!(center::stirling_relation_alternating(n, h), "alternating Stirling n={n} h={h}");
        }
    }
    let mut out = summarize(&checks);
    if !out.pass {
        out.detail.push_str("; printed Stirling relation fails for n=2,3, sign-alternating form holds");
    }
    out
}

fn harish_chandra() -> Outcome {
    let runs = (2..=3).map(|n| (Suite::HarishChandra, SuiteConfig { r: Some(3), ..config(n) })).collect();
    summarize(&collect(runs))
}

fn koszul() -> Outcome {
    let runs = (1..=3).map(|n| (Suite::Koszul, SuiteConfig { k: Some(4), ..config(n) })).collect();
    summarize(&collect(runs))
}

fn basis() -> Outcome {
    summarize(&collect(vec![(Suite::Basis, SuiteConfig { k: Some(3), ..config(2) })]))
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "Capelli vanishing for n > d", Duration::from_secs(10), capelli_vanishing),
        (2, "special Capelli identity for n = d", Duration::from_secs(30), special_identity),
        (3, "virtual Capelli word acts as the Capelli operator", Duration::from_secs(30), virtual_capelli_word),
        (4, "epimorphism agrees with the action on forms", Duration::from_secs(120), epimorphism),
        (5, "golden values", Duration::from_secs(1), golden_values),
        (6, "centrality of generator families", Duration::from_secs(120), centrality),
        (7, "expansion theorem", Duration::from_secs(300), expansion),
        (8, "generating identities", Duration::from_secs(60), generating),
        (9, "Harish-Chandra images", Duration::from_secs(120), harish_chandra),
        (10, "Koszul map on bitableaux", Duration::from_secs(120), koszul),
        (11, "standard bitableaux bases", Duration::from_secs(60), basis),
    ];
    let mut results = Vec::new();
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let pass = out.pass && in_time;
        let timing = if in_time { String::new() } else { format!("; over the {}s target", limit.as_secs()) };
        println!(
            "{} criterion {id}: {title} ({}; {:.2}s{timing})",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
        results.push((id, pass));
    }
    let unexpected: Vec<u32> = results.iter().filter(|&&(id, pass)| !pass && id != 8).map(|&(id, _)| id).collect();
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
    assert!(!results[7].1, "criterion 8 passed; the printed Stirling relation finding is stale");
}
