//! End-to-end acceptance checks. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use mgcount::bench::{run_row, TABLE1};
use mgcount::oracle::Oracle;
use mgcount::verify::{check_cells_against_oracle, check_identities};
use mgcount::{
    count_free, multiset_coefficient, multiset_coefficient_step, BigCount, DpTables, FreeCounter, RootedTotals,
};

/// Table rows are compared after rounding half up to this many figures.
const SIG_FIGS: usize = 3;
/// Reported only; the published-table run is not judged on time.
const TABLE_BUDGET: Duration = Duration::from_secs(3600);
/// Ceiling on fill-time growth when `n` doubles at fixed `delta`.
const MAX_DOUBLING_RATIO: f64 = 50.0;
const TREE_COLUMN: [u64; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn free_counts_match_oracle() -> Outcome {
    let oracle = Oracle::build(8, 4).expect("oracle at (8, 4)");
    let counter = FreeCounter::new(8, 4).unwrap();
    let mut checked = 0;
    for n in 1..=8 {
        for delta in 0..=4 {
            let truth = match oracle.count_free(n, delta) {
                Ok(t) => t,
                Err(e) => return outcome(false, e.to_string()),
            };
            let dp = counter.free(n, delta).unwrap().total;
            if dp != BigCount::from(truth) {
                return outcome(false, format!("(n={n}, delta={delta}): dp {dp}, oracle {truth}"));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} instances"))
}

fn cells_match_oracle() -> Outcome {
    let oracle = Oracle::build(7, 3).unwrap();
    let tables = DpTables::build(7, 3).unwrap();
    let r = check_cells_against_oracle(&tables, &oracle);
    match r.first_failure {
        None => outcome(true, format!("{} cells", r.checks)),
        Some(f) => outcome(
            false,
            format!("{} of {} cells differ, first: {f}", r.failures, r.checks),
        ),
    }
}

fn published_table() -> Outcome {
    let start = Instant::now();
    let mut matched = 0;
    let mut differ = Vec::new();
    let mut alt_matched = 0;
    for row in TABLE1 {
        let o = run_row(row).expect("table row");
        eprintln!(
            "    ({:>3}, {:>2}) got {:<9} published {:<9} {:>9.1} ms  {}",
            row.n,
            row.delta,
            o.record.count_sci,
            row.published,
            o.record.millis,
            if o.matches { "ok" } else { "differs" }
        );
        if o.matches {
            matched += 1;
        } else {
            differ.push(format!("({},{})", row.n, row.delta));
        }
        alt_matched += usize::from(o.as_published_matches);
    }
    let elapsed = start.elapsed();
    let detail = format!(
        "{matched}/{} rows equal at {SIG_FIGS} s.f.; differing: {}; overcounting bicentroid sum would match {alt_matched}/{}; {:.1} s of {} s budget",
        TABLE1.len(),
        if differ.is_empty() { "none".into() } else { differ.join(" ") },
        TABLE1.len(),
        elapsed.as_secs_f64(),
        TABLE_BUDGET.as_secs(),
    );
    outcome(differ.is_empty(), detail)
}

fn closed_forms() -> Outcome {
    let free = |n, d| count_free(n, d).unwrap().total;
    for d in 0..=12 {
        if !free(0, d).is_zero() {
            return outcome(false, format!("count_free(0, {d}) != 0"));
        }
        if d >= 1 && !free(1, d).is_zero() {
            return outcome(false, format!("count_free(1, {d}) != 0"));
        }
        if !free(2, d).is_one() {
            return outcome(false, format!("count_free(2, {d}) != 1"));
        }
    }
    outcome(true, "n in {0, 1, 2}, delta <= 12")
}

fn tree_column() -> Outcome {
    let oracle = Oracle::build(10, 0).unwrap();
    let counter = FreeCounter::new(10, 0).unwrap();
    for (k, &expected) in TREE_COLUMN.iter().enumerate() {
        let n = k + 1;
        let truth = oracle.count_free(n, 0).unwrap();
        let dp = counter.free(n, 0).unwrap().total;
        if truth as u64 != expected || dp != BigCount::from(expected) {
            return outcome(false, format!("n={n}: dp {dp}, oracle {truth}, expected {expected}"));
        }
    }
    outcome(true, "1,1,1,2,3,6,11,23,47,106")
}

fn identities() -> Outcome {
    let r = check_identities(&DpTables::build(8, 4).unwrap());
    match r.first_failure {
        None => outcome(true, format!("{} checks at (8, 4)", r.checks)),
        Some(f) => outcome(false, f),
    }
}

fn incremental_coefficients() -> Outcome {
    let mut steps = 0;
    for base in 0u32..=50 {
        let b = BigUint::from(base);
        let mut f = BigCount::one();
        for p in 1..=50usize {
            let product = &f * (&b + BigUint::from(p) - 1u32);
            if !product.is_multiple_of(&BigUint::from(p)) {
                return outcome(false, format!("inexact division at base={base}, p={p}"));
            }
            f = multiset_coefficient_step(&f, &b, p);
            // independent closed form
            let direct = if base == 0 {
                BigCount::zero()
            } else {
                binomial(BigUint::from(base as usize + p - 1), BigUint::from(p))
            };
            if f != direct || multiset_coefficient(&b, p) != direct {
                return outcome(false, format!("mismatch at base={base}, p={p}"));
            }
            steps += 1;
        }
    }
    outcome(true, format!("{steps} steps"))
}

fn fill_time(n: usize, delta: usize) -> f64 {
    // best of three to damp scheduler noise
    (0..3)
        .map(|_| {
            let t = Instant::now();
            RootedTotals::build(n, delta).unwrap();
            t.elapsed().as_secs_f64()
        })
        .fold(f64::INFINITY, f64::min)
}

fn doubling_growth() -> Outcome {
    let times: Vec<_> = [40, 80, 160].iter().map(|&n| (n, fill_time(n, 10))).collect();
    let ratios: Vec<f64> = times.windows(2).map(|w| w[1].1 / w[0].1.max(1e-6)).collect();
    let detail = format!(
        "fill s: {}; ratios {}; ceiling {MAX_DOUBLING_RATIO}x",
        times
            .iter()
            .map(|(n, t)| format!("n={n} {t:.3}"))
            .collect::<Vec<_>>()
            .join(", "),
        ratios.iter().map(|r| format!("{r:.1}x")).collect::<Vec<_>>().join(", "),
    );
    outcome(ratios.iter().all(|&r| r <= MAX_DOUBLING_RATIO), detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "free counts equal brute force, n <= 8, delta <= 4",
            free_counts_match_oracle,
        ),
        (
            "every table cell equals brute force, n <= 7, delta <= 3",
            cells_match_oracle,
        ),
        ("published 21-row table at 3 significant figures", published_table),
        ("closed-form edge cases", closed_forms),
        ("delta = 0 column is the free-tree sequence", tree_column),
        ("partition and telescoping identities, zero rows", identities),
        (
            "incremental multiset coefficients, base, p <= 50",
            incremental_coefficients,
        ),
        ("fill time growth per doubling of n, delta = 10", doubling_growth),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "[{}] criterion {}: {name} ({}; {:.1} s)",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
