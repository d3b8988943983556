//! Acceptance suite. Each criterion prints one PASS/FAIL line to stderr
//! (uncaptured) and the test fails if any criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use artinx_core::artin::CongruenceOptions;
use artinx_core::catalog::default_catalog;
use artinx_core::numtheory::prime_power;
use artinx_core::{
    artin_exponent_congruence, artin_exponent_marks, build_group, build_mark_table, closed_form_predictor, conductor,
    enumerate_subgroups, family_vector, ghost_of, multiply_basis, parse_group_spec, run_sweep, solve_rational, Check,
    CongruenceSystem, Family, GroupTable, RunResult, Status, SubgroupLattice, SweepConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Line {
    id: usize,
    name: &'static str,
    ok: bool,
    detail: String,
    elapsed: Duration,
}

fn emit(line: &Line) {
    let verdict = if line.ok { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "criterion {} [{}] {verdict} ({:.2}s): {}",
        line.id,
        line.name,
        line.elapsed.as_secs_f64(),
        line.detail
    );
}

fn load(spec: &str) -> (GroupTable, SubgroupLattice) {
    let group = build_group(&parse_group_spec(spec).unwrap()).unwrap();
    let lattice = enumerate_subgroups(&group).unwrap();
    (group, lattice)
}

fn exponent(spec: &str) -> u64 {
    let (g, l) = load(spec);
    artin_exponent_congruence(&g, &l, &Family::AllCyclic).unwrap()
}

fn failures_for(result: &RunResult, check: Check) -> Vec<String> {
    result
        .failures
        .iter()
        .filter(|f| f.check == check)
        .map(|f| format!("{}: expected {}, got {}", f.group, f.expected, f.got))
        .collect()
}

fn sweep_line(result: &RunResult, check: Check, id: usize, name: &'static str, elapsed: Duration) -> Line {
    let failures = failures_for(result, check);
    let ran = result.groups.iter().filter(|g| g.status(check) == Some(Status::Pass)).count();
    Line {
        id,
        name,
        ok: failures.is_empty() && ran > 0,
        detail: if failures.is_empty() { format!("{ran} groups") } else { failures.join("; ") },
        elapsed,
    }
}

fn criterion_cyclic(result: &RunResult, elapsed: Duration) -> Line {
    let mut bad = failures_for(result, Check::Cyclic);
    let mut cyclic = 0;
    for g in &result.groups {
        if g.group.starts_with('C') && !g.group.contains('x') {
            cyclic += 1;
            if g.exponent != 1 {
                bad.push(format!("{} has A = {}", g.group, g.exponent));
            }
        } else if g.exponent == 1 {
            bad.push(format!("noncyclic {} has A = 1", g.group));
        }
    }
    Line { id: 1, name: "cyclic iff A = 1", ok: bad.is_empty(), detail: format!("{cyclic} cyclic entries; {}", bad.join("; ")), elapsed }
}

fn criterion_odd_p() -> Line {
    let start = Instant::now();
    let cases: &[(&str, u64)] = &[("C3xC3", 3), ("C9xC3", 9), ("C3xC3xC3", 9), ("H3", 9), ("C5xC5", 5), ("C7xC7", 7)];
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for &(spec, want) in cases {
        let (g, l) = load(spec);
        let (p, alpha) = prime_power(g.order() as u64).unwrap();
        assert_eq!(p.pow(alpha - 1), want, "table entry for {spec} must be p^(alpha-1)");
        let got = artin_exponent_congruence(&g, &l, &Family::AllCyclic).unwrap();
        seen.push(format!("{spec}={got}"));
        if got != want {
            bad.push(format!("{spec}: expected {want}, got {got}"));
        }
    }
    let ok = bad.is_empty() && start.elapsed() < Duration::from_secs(120);
    Line { id: 2, name: "odd p-groups", ok, detail: if bad.is_empty() { seen.join(" ") } else { bad.join("; ") }, elapsed: start.elapsed() }
}

fn criterion_two_groups() -> Line {
    let start = Instant::now();
    let mut bad = Vec::new();
    for spec in ["D8", "D16", "D32", "D64", "Q8"] {
        let got = exponent(spec);
        if got != 2 {
            bad.push(format!("{spec}: expected 2, got {got}"));
        }
    }

    // Q8 by hand: back-substitute e_F and find the least integral multiple
    let (g, l) = load("Q8");
    let table = build_mark_table(&g, &l);
    let coeffs = solve_rational(&table, &family_vector(&l, &Family::AllCyclic).unwrap()).unwrap();
    let den = coeffs.iter().map(|c| c.denom()).fold(1i128, |a, b| a * b / gcd(a, b));
    if den != 2 {
        bad.push(format!("Q8 hand check: denominators lcm {den}"));
    }

    let mut reports = Vec::new();
    for spec in ["Q16", "Q32", "Q64", "SD16", "SD32", "SD64"] {
        let (g, l) = load(spec);
        let table = build_mark_table(&g, &l);
        let a = artin_exponent_congruence(&g, &l, &Family::AllCyclic).unwrap();
        let b = artin_exponent_marks(&g, &l, &table, &Family::AllCyclic).unwrap();
        if a != b {
            bad.push(format!("{spec}: congruence {a} vs marks {b}"));
        }
        let pred = closed_form_predictor(&g, &l).unwrap();
        let rules: Vec<String> = std::iter::once(format!("{} {}", pred.branch, pred.value.unwrap()))
            .chain(pred.alternatives.iter().map(|x| format!("{} {}", x.rule, x.value)))
            .collect();
        reports.push(format!("{spec}={a} [{}]", rules.join(", ")));
    }
    let _ = writeln!(std::io::stderr(), "  report: {}", reports.join("; "));
    Line {
        id: 3,
        name: "Q and D values",
        ok: bad.is_empty(),
        detail: if bad.is_empty() { "D8..D64 = 2, Q8 = 2 (marks and congruences)".into() } else { bad.join("; ") },
        elapsed: start.elapsed(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn criterion_conductor() -> Line {
    let start = Instant::now();
    let mut bad = Vec::new();
    let catalog = default_catalog(24);
    for spec in &catalog {
        let g = build_group(spec).unwrap();
        let l = enumerate_subgroups(&g).unwrap();
        let c = conductor(&build_mark_table(&g, &l)).unwrap();
        if c != g.order() as u64 {
            bad.push(format!("{spec}: conductor {c}"));
        }
    }
    let ok = bad.is_empty() && start.elapsed() < Duration::from_secs(30);
    Line { id: 4, name: "conductor = |G|", ok, detail: format!("{} groups; {}", catalog.len(), bad.join("; ")), elapsed: start.elapsed() }
}

fn criterion_ring(result: &RunResult, elapsed: Duration) -> Line {
    let start = Instant::now();
    let mut line = sweep_line(result, Check::Ring, 7, "Burnside ring structure", elapsed);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    for spec in ["S4", "D12", "Q8"] {
        let (g, l) = load(spec);
        let t = build_mark_table(&g, &l);
        let n = l.len();
        for _ in 0..1000 {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let prod = ghost_of(&t, &multiply_basis(&g, &l, u, v).unwrap());
            let expected: Vec<i64> = (0..n).map(|w| t.m[u][w] * t.m[v][w]).collect();
            if prod.0 != expected {
                bad.push(format!("{spec}: [G/{u}]x[G/{v}]"));
            }
        }
    }
    if !bad.is_empty() {
        line.ok = false;
        line.detail = bad.join("; ");
    }
    line.elapsed += start.elapsed();
    line
}

fn criterion_divisibility(result: &RunResult, elapsed: Duration) -> Line {
    let mut bad = failures_for(result, Check::Invariance);
    for g in &result.groups {
        if !(g.order as u64).is_multiple_of(g.exponent) {
            bad.push(format!("{}: {} does not divide {}", g.group, g.exponent, g.order));
        }
    }
    let ran = result.groups.iter().filter(|g| g.status(Check::Invariance) == Some(Status::Pass)).count();
    Line { id: 8, name: "divisibility and invariance", ok: bad.is_empty() && ran > 0, detail: format!("{ran} groups; {}", bad.join("; ")), elapsed }
}

fn criterion_performance(sweep_time: Duration) -> Line {
    let start = Instant::now();
    let mut slowest = (String::new(), Duration::ZERO);
    for spec in default_catalog(64) {
        let g = build_group(&spec).unwrap();
        let t = Instant::now();
        enumerate_subgroups(&g).unwrap();
        let d = t.elapsed();
        if d > slowest.1 {
            slowest = (spec.to_string(), d);
        }
    }
    let parallel_start = Instant::now();
    let parallel = run_sweep(&SweepConfig::default().with_jobs(4)).unwrap();
    let parallel_time = parallel_start.elapsed();
    let ok = sweep_time < Duration::from_secs(300) && slowest.1 < Duration::from_secs(2) && parallel.passed();
    Line {
        id: 9,
        name: "performance",
        ok,
        detail: format!(
            "sweep {:.2}s with 1 job, {:.2}s with 4 jobs; slowest lattice {} {:.3}s",
            sweep_time.as_secs_f64(),
            parallel_time.as_secs_f64(),
            slowest.0,
            slowest.1.as_secs_f64()
        ),
        elapsed: start.elapsed(),
    }
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let result = run_sweep(&SweepConfig::default().with_jobs(1)).unwrap();
    let sweep_time = start.elapsed();
    assert_eq!(result.max_order, 64);

    // congruence systems built once per group must agree with fresh ones
    let (g, l) = load("S4");
    let system = CongruenceSystem::new(&g, &l, CongruenceOptions::default()).unwrap();
    assert_eq!(system.exponent(&l, &Family::AllCyclic).unwrap(), exponent("S4"));

    let lines = vec![
        criterion_cyclic(&result, sweep_time),
        criterion_odd_p(),
        criterion_two_groups(),
        criterion_conductor(),
        sweep_line(&result, Check::CrossMethod, 5, "cross-method agreement", sweep_time),
        sweep_line(&result, Check::Lemmas, 6, "counting lemmas", sweep_time),
        criterion_ring(&result, sweep_time),
        criterion_divisibility(&result, sweep_time),
        criterion_performance(sweep_time),
    ];
    for line in &lines {
        emit(line);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
