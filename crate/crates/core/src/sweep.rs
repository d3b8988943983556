//! Catalog sweeps: run named check suites over many groups in parallel.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::artin::{
    artin_exponent_marks, closed_form_predictor, count_c_sets, cyclic_count, exponent_report, Branch, CongruenceOptions,
    CongruenceSystem, Family, ReportOptions, TwoGroupKind,
};
use crate::bitset::{ElemSet, MAX_ORDER};
use crate::burnside::{build_mark_table, conductor, ghost_of, multiply_basis, solve_membership, BurnsideElement, MarkTable, Membership};
use crate::catalog::default_catalog;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice::{enumerate_subgroups, SubgroupLattice};
use crate::numtheory::prime_power;
use crate::spec::{build_group, GroupSpec};
use crate::subgroup::{centralizer, is_normal_in, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Cyclic,
    OddP,
    TwoGroup,
    Conductor,
    Lemmas,
    CrossMethod,
    Sylow,
    Ring,
    Invariance,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Cyclic,
        Check::OddP,
        Check::TwoGroup,
        Check::Conductor,
        Check::Lemmas,
        Check::CrossMethod,
        Check::Sylow,
        Check::Ring,
        Check::Invariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Cyclic => "cyclic",
            Check::OddP => "oddp",
            Check::TwoGroup => "twogroup",
            Check::Conductor => "conductor",
            Check::Lemmas => "lemmas",
            Check::CrossMethod => "crossmethod",
            Check::Sylow => "sylow",
            Check::Ring => "ring",
            Check::Invariance => "invariance",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Precondition(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_order: usize,
    pub catalog: Vec<GroupSpec>,
    pub checks: BTreeSet<Check>,
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(max_order: usize) -> Result<SweepConfig> {
        if max_order > MAX_ORDER {
            return Err(Error::OrderTooLarge(max_order));
        }
        Ok(SweepConfig { max_order, catalog: default_catalog(max_order), checks: Check::ALL.into(), jobs: 1 })
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig::new(64).expect("64 is within the order cap")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    /// Informational; never fails the run.
    Report,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupOutcome {
    pub group: String,
    pub order: usize,
    pub classes: usize,
    pub subgroups: usize,
    pub exponent: u64,
    pub checks: Vec<CheckOutcome>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl GroupOutcome {
    pub fn status(&self, check: Check) -> Option<Status> {
        self.checks.iter().find(|c| c.check == check).map(|c| c.status)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub group: String,
    pub check: Check,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunResult {
    pub schema: u32,
    pub max_order: usize,
    pub checks: Vec<Check>,
    pub groups: Vec<GroupOutcome>,
    pub failures: Vec<Failure>,
}

impl RunResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A verdict plus the expected/observed pair recorded on failure.
struct Verdict {
    status: Status,
    detail: String,
    expected: String,
    got: String,
}

impl Verdict {
    fn skip(why: &str) -> Verdict {
        Verdict { status: Status::Skip, detail: why.into(), expected: String::new(), got: String::new() }
    }

    fn report(detail: String) -> Verdict {
        Verdict { status: Status::Report, detail, expected: String::new(), got: String::new() }
    }

    fn compare(expected: impl fmt::Display, got: impl fmt::Display, detail: impl Into<String>) -> Verdict {
        let (expected, got) = (expected.to_string(), got.to_string());
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Verdict { status, detail: detail.into(), expected, got }
    }

    fn all(failures: Vec<String>, checked: usize, what: &str) -> Verdict {
        if failures.is_empty() {
            Verdict { status: Status::Pass, detail: format!("{checked} {what}"), expected: String::new(), got: String::new() }
        } else {
            let got = failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ");
            Verdict { status: Status::Fail, detail: format!("{} of {checked} {what} failed", failures.len()), expected: "all hold".into(), got }
        }
    }
}

/// Everything computed once per group and shared by the check suites.
pub struct GroupContext {
    pub label: String,
    pub group: GroupTable,
    pub lattice: SubgroupLattice,
    pub table: MarkTable,
    pub system: CongruenceSystem,
    pub exponent: u64,
}

impl GroupContext {
    pub fn new(label: &str, group: GroupTable, lattice: SubgroupLattice) -> Result<GroupContext> {
        let table = build_mark_table(&group, &lattice);
        let system = CongruenceSystem::new(&group, &lattice, CongruenceOptions::default())?;
        let exponent = system.exponent(&lattice, &Family::AllCyclic)?;
        Ok(GroupContext { label: label.to_string(), group, lattice, table, system, exponent })
    }

    fn is_cyclic(&self) -> bool {
        self.lattice.class(self.lattice.len() - 1).is_cyclic()
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        // FNV-1a keeps seeds stable across runs and toolchains
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.label.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(h ^ salt)
    }
}

fn check_cyclic(ctx: &GroupContext) -> Verdict {
    let expected = if ctx.is_cyclic() { "A = 1" } else { "A > 1" };
    let got = if ctx.exponent == 1 { "A = 1" } else { "A > 1" };
    Verdict::compare(expected, got, format!("A = {}", ctx.exponent))
}

fn check_odd_p(ctx: &GroupContext) -> Verdict {
    match prime_power(ctx.group.order() as u64) {
        Some((p, alpha)) if p != 2 && !ctx.is_cyclic() => {
            Verdict::compare(p.pow(alpha - 1), ctx.exponent, format!("p = {p}, order p^{alpha}"))
        }
        _ => Verdict::skip("not a noncyclic odd p-group"),
    }
}

fn check_two_group(ctx: &GroupContext) -> Result<Verdict> {
    if !ctx.group.order().is_power_of_two() || ctx.is_cyclic() {
        return Ok(Verdict::skip("not a noncyclic 2-group"));
    }
    let pred = closed_form_predictor(&ctx.group, &ctx.lattice)?;
    let primary = pred.value.expect("p-groups always get a prediction");
    let strict = match (pred.branch, pred.two_group_kind) {
        (Branch::TwoGroup, _) => true,
        (Branch::QuaternionOrDihedral, Some(TwoGroupKind::Dihedral)) => true,
        (Branch::QuaternionOrDihedral, Some(TwoGroupKind::Quaternion)) => ctx.group.order() == 8,
        _ => false,
    };
    let detail = format!("branch {}", pred.branch);
    if strict {
        return Ok(Verdict::compare(primary, ctx.exponent, detail));
    }
    let mut parts = vec![format!("computed {}", ctx.exponent), format!("{} rule {}", pred.branch, primary)];
    parts.extend(pred.alternatives.iter().map(|a| format!("{} rule {}", a.rule, a.value)));
    let disagree: Vec<String> = std::iter::once((pred.branch.to_string(), primary))
        .chain(pred.alternatives.iter().map(|a| (a.rule.clone(), a.value)))
        .filter(|(_, v)| *v != ctx.exponent)
        .map(|(r, _)| r)
        .collect();
    if !disagree.is_empty() {
        parts.push(format!("disagreeing: {}", disagree.join(", ")));
    }
    Ok(Verdict::report(parts.join("; ")))
}

fn check_conductor(ctx: &GroupContext) -> Result<Verdict> {
    Ok(Verdict::compare(ctx.group.order(), conductor(&ctx.table)?, "conductor vs |G|"))
}

fn p_elements(group: &GroupTable, v: &Subgroup, p: u64) -> ElemSet {
    v.elements()
        .filter(|&x| group.element_order(x) == 1 || prime_power(group.element_order(x) as u64).is_some_and(|(q, _)| q == p))
        .collect()
}

fn check_lemmas(ctx: &GroupContext) -> Result<Verdict> {
    let (g, lattice) = (&ctx.group, &ctx.lattice);
    let mut failures = Vec::new();
    let mut checked = 0;

    for class in lattice.classes() {
        let h = class.representative;
        let Some((p, _)) = prime_power(h.order as u64) else { continue };
        let h_abelian = derived_subgroup_of(g, &h).order == 1;
        let h_derived = derived_subgroup_of(g, &h);
        for (_, u) in lattice.subgroups() {
            if !u.is_cyclic || !u.is_subgroup_of(&h) || !is_normal_in(g, u, &h)? {
                continue;
            }
            checked += 1;
            let sets = count_c_sets(g, &h, u)?;
            let (c, c_prime) = (sets.c.len() as u64, sets.c_prime.len() as u64);
            let at = || format!("H={} U={}", h.members.to_hex().trim_start_matches('0'), u.order);
            if c % p != c_prime % p {
                failures.push(format!("|C| = {c} vs |C'| = {c_prime} mod {p} at {}", at()));
            }
            let inner = count_c_sets(g, &sets.h_prime, u)?;
            if inner.c != sets.c_prime {
                failures.push(format!("C'(H) != C(H') at {}", at()));
            }
            if h_abelian && u.order > 1 && u.order < h.order && ((c % p != 0) != h.is_cyclic) {
                failures.push(format!("abelian cyclicity criterion at {}", at()));
            }
            if p == 2 && u.order == 2 && h_derived.is_subgroup_of(u) && c % 2 == 1 {
                let nonabelian_8 = !h_abelian && h.order == 8;
                if !(h.is_cyclic || nonabelian_8) {
                    failures.push(format!("odd |C| with [H,H] <= U but H neither cyclic nor nonabelian of order 8 at {}", at()));
                }
            }
        }
    }

    for pair in ctx.system.pairs(lattice, &Family::AllCyclic)? {
        checked += 1;
        let c_v = centralizer(g, &pair.u).members.intersection(&pair.v.members).len() as u64;
        if pair.count > 0 && !ctx.exponent.is_multiple_of(pair.v.order as u64 / c_v) {
            failures.push(format!("(V : C_V(U)) does not divide A for U={} V={}", pair.u_class, pair.v_class));
        }
        // central decomposition V = V_p x U_p'
        let central = pair.u.elements().all(|x| pair.v.elements().all(|y| g.mul(x, y) == g.mul(y, x)));
        if central && pair.u.is_cyclic && prime_power(pair.u.order as u64).is_none_or(|(q, _)| q != pair.prime) && pair.u.order > 1 {
            let vp = Subgroup::try_from_members(g, p_elements(g, &pair.v, pair.prime))?;
            let up = Subgroup::from_members(g, pair.u.members.intersection(&vp.members));
            let reduced = cyclic_count(g, lattice, &up, &vp, &Family::AllCyclic)? as u64;
            if reduced != pair.count {
                failures.push(format!("c(U,V) = {} but c(U_p,V_p) = {reduced}", pair.count));
            }
        }
    }

    let reduced = CongruenceSystem::new(g, lattice, CongruenceOptions { central_reduction: true })?;
    checked += 1;
    match reduced.exponent(lattice, &Family::AllCyclic) {
        Ok(a) if a == ctx.exponent => {}
        Ok(a) => failures.push(format!("central reduction exponent {a} != {}", ctx.exponent)),
        Err(e) => failures.push(e.to_string()),
    }
    Ok(Verdict::all(failures, checked, "lemma instances"))
}

fn derived_subgroup_of(g: &GroupTable, h: &Subgroup) -> Subgroup {
    crate::subgroup::commutator_closure(g, h, h)
}

fn random_family(rng: &mut ChaCha8Rng, n: usize) -> Family {
    Family::ExplicitClasses((0..n).filter(|_| rng.gen_bool(0.5)).collect())
}

fn check_cross_method(ctx: &GroupContext) -> Result<Verdict> {
    let mut failures = Vec::new();
    let order = ctx.group.order() as u64;
    let mut families = vec![Family::AllCyclic];
    let mut rng = ctx.rng(0x5eed_0001);
    families.extend((0..20).map(|_| random_family(&mut rng, ctx.lattice.len())));
    for family in &families {
        let a = ctx.system.exponent(&ctx.lattice, family)?;
        let b = artin_exponent_marks(&ctx.group, &ctx.lattice, &ctx.table, family)?;
        if a != b {
            failures.push(format!("family {family}: congruence {a}, marks {b}"));
        }
        if !order.is_multiple_of(a) {
            failures.push(format!("family {family}: {a} does not divide {order}"));
        }
    }
    Ok(Verdict::all(failures, families.len(), "families"))
}

fn check_sylow(ctx: &GroupContext) -> Result<Verdict> {
    let report = exponent_report(
        &ctx.label,
        &ctx.group,
        &ctx.lattice,
        &Family::AllCyclic,
        ReportOptions { method: crate::artin::Method::Congruence, sylow: true, ..Default::default() },
    )?;
    let parts: Vec<String> = report
        .sylow
        .iter()
        .map(|e| format!("p={}: part {} vs Sylow {}", e.prime, e.exponent_p_part, e.sylow_exponent))
        .collect();
    if report.sylow.iter().all(|e| e.matches) {
        Ok(Verdict { status: Status::Pass, detail: parts.join("; "), expected: String::new(), got: String::new() })
    } else {
        Ok(Verdict::report(format!("mismatch (report-only): {}", parts.join("; "))))
    }
}

fn check_ring(ctx: &GroupContext) -> Result<Verdict> {
    let (g, lattice, t) = (&ctx.group, &ctx.lattice, &ctx.table);
    let n = lattice.len();
    let order = g.order() as i64;
    let mut failures = Vec::new();
    let mut checked = 0;

    for v in 0..n {
        let class = lattice.class(v);
        checked += 1;
        for u in 0..n {
            let sub = lattice.is_subconjugate(u, v);
            if (u > v || !sub) && t.m[v][u] != 0 {
                failures.push(format!("m[{v}][{u}] nonzero off the subconjugacy pattern"));
            }
        }
        if t.m[v][0] != order / class.order() as i64 {
            failures.push(format!("first column of row {v}"));
        }
        let normalizer_index = (g.order() / (class.order() * class.normalizer_index)) as i64;
        if t.m[v][v] != normalizer_index || t.m[v][v] <= 0 {
            failures.push(format!("diagonal of row {v}"));
        }
    }
    if t.m[n - 1].iter().any(|&x| x != 1) {
        failures.push("last row is not all ones".into());
    }

    let mut rng = ctx.rng(0x5eed_0002);
    let pairs: Vec<(usize, usize)> = if g.order() <= 24 {
        (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect()
    } else {
        (0..1000).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
    };
    for (u, v) in pairs {
        checked += 1;
        let product = ghost_of(t, &multiply_basis(g, lattice, u, v)?);
        let gu = ghost_of(t, &t.basis(u));
        let gv = ghost_of(t, &t.basis(v));
        if product.0.iter().zip(gu.0.iter().zip(&gv.0)).any(|(p, (a, b))| *p != a * b) {
            failures.push(format!("ghost of [G/{u}] x [G/{v}] is not the pointwise product"));
        }
    }

    for _ in 0..100 {
        checked += 1;
        let x = BurnsideElement((0..n).map(|_| rng.gen_range(-9..=9)).collect());
        match solve_membership(t, &ghost_of(t, &x))? {
            Membership::Integral(y) if y == x => {}
            other => failures.push(format!("round trip of {:?} gave {other:?}", x.0)),
        }
    }

    for v in 0..n {
        checked += 1;
        if let Some(i) = ctx.system.first_violation(&ghost_of(t, &t.basis(v))) {
            failures.push(format!("basis [G/{v}] violates coset congruence {i}"));
        }
    }
    Ok(Verdict::all(failures, checked, "ring instances"))
}

fn check_invariance(ctx: &GroupContext) -> Result<Verdict> {
    let order = ctx.group.order();
    let shape = |l: &SubgroupLattice| {
        let mut s: Vec<(usize, usize)> = l.classes().iter().map(|c| (c.order(), c.conjugates.len())).collect();
        s.sort_unstable();
        s
    };
    let base_shape = shape(&ctx.lattice);
    let mut rng = ctx.rng(0x5eed_0003);
    let mut failures = Vec::new();
    for _ in 0..10 {
        let mut perm: Vec<usize> = (0..order).collect();
        perm[1..].shuffle(&mut rng);
        let relabeled = ctx.group.relabel(&perm)?;
        let lattice = enumerate_subgroups(&relabeled)?;
        let a = CongruenceSystem::new(&relabeled, &lattice, CongruenceOptions::default())?.exponent(&lattice, &Family::AllCyclic)?;
        if a != ctx.exponent {
            failures.push(format!("relabeled exponent {a} != {}", ctx.exponent));
        }
        if shape(&lattice) != base_shape {
            failures.push("relabeled lattice shape differs".into());
        }
    }
    Ok(Verdict::all(failures, 10, "relabelings"))
}

pub fn run_check(ctx: &GroupContext, check: Check) -> Result<CheckOutcome> {
    let v = eval(ctx, check)?;
    Ok(CheckOutcome { check, status: v.status, detail: v.detail })
}

fn eval(ctx: &GroupContext, check: Check) -> Result<Verdict> {
    match check {
        Check::Cyclic => Ok(check_cyclic(ctx)),
        Check::OddP => Ok(check_odd_p(ctx)),
        Check::TwoGroup => check_two_group(ctx),
        Check::Conductor => check_conductor(ctx),
        Check::Lemmas => check_lemmas(ctx),
        Check::CrossMethod => check_cross_method(ctx),
        Check::Sylow => check_sylow(ctx),
        Check::Ring => check_ring(ctx),
        Check::Invariance => check_invariance(ctx),
    }
}

/// Source of subgroup lattices, so callers can plug in a cache.
pub trait LatticeSource: Sync {
    fn lattice(&self, spec: &GroupSpec, group: &GroupTable) -> Result<SubgroupLattice>;
}

pub struct Enumerate;

impl LatticeSource for Enumerate {
    fn lattice(&self, _spec: &GroupSpec, group: &GroupTable) -> Result<SubgroupLattice> {
        enumerate_subgroups(group)
    }
}

fn sweep_group(spec: &GroupSpec, checks: &BTreeSet<Check>, source: &dyn LatticeSource) -> (GroupOutcome, Vec<Failure>) {
    let start = Instant::now();
    let label = spec.to_string();
    let error_outcome = |e: Error| {
        let outcome = GroupOutcome {
            group: label.clone(),
            order: spec.order().unwrap_or(0),
            classes: 0,
            subgroups: 0,
            exponent: 0,
            checks: vec![],
            elapsed: start.elapsed(),
        };
        let failure = Failure { group: label.clone(), check: Check::CrossMethod, expected: "computation succeeds".into(), got: e.to_string() };
        (outcome, vec![failure])
    };
    let ctx = match build_group(spec)
        .and_then(|g| source.lattice(spec, &g).map(|l| (g, l)))
        .and_then(|(g, l)| GroupContext::new(&label, g, l))
    {
        Ok(ctx) => ctx,
        Err(e) => return error_outcome(e),
    };
    let mut outcomes = Vec::new();
    let mut failures = Vec::new();
    for &check in checks {
        let v = eval(&ctx, check).unwrap_or_else(|e| Verdict {
            status: Status::Fail,
            detail: "error".into(),
            expected: "computation succeeds".into(),
            got: e.to_string(),
        });
        if v.status == Status::Fail {
            failures.push(Failure { group: label.clone(), check, expected: v.expected.clone(), got: v.got.clone() });
        }
        outcomes.push(CheckOutcome { check, status: v.status, detail: v.detail });
    }
    let outcome = GroupOutcome {
        group: label.clone(),
        order: ctx.group.order(),
        classes: ctx.lattice.len(),
        subgroups: ctx.lattice.subgroup_count(),
        exponent: ctx.exponent,
        checks: outcomes,
        elapsed: start.elapsed(),
    };
    (outcome, failures)
}

pub fn run_sweep(config: &SweepConfig) -> Result<RunResult> {
    run_sweep_with(config, &Enumerate)
}

/// Runs every selected check on every catalog group using `jobs` workers.
/// Results come back in catalog order regardless of scheduling.
pub fn run_sweep_with(config: &SweepConfig, source: &dyn LatticeSource) -> Result<RunResult> {
    if config.max_order > MAX_ORDER {
        return Err(Error::OrderTooLarge(config.max_order));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let specs: Vec<&GroupSpec> = config.catalog.iter().filter(|s| s.order().is_none_or(|o| o <= config.max_order)).collect();
    let results: Vec<(GroupOutcome, Vec<Failure>)> =
        pool.install(|| specs.par_iter().map(|s| sweep_group(s, &config.checks, source)).collect());
    let mut groups = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for (g, f) in results {
        groups.push(g);
        failures.extend(f);
    }
    Ok(RunResult { schema: 1, max_order: config.max_order, checks: config.checks.iter().copied().collect(), groups, failures })
}
