//! Human-readable tables.

use std::fmt::Write;

use artinx_core::artin::CongruencePair;
use artinx_core::sweep::{Check, RunResult, Status};
use artinx_core::{ExponentReport, MarkTable, SubgroupLattice};

pub fn class_labels(lattice: &SubgroupLattice) -> Vec<String> {
    lattice.classes().iter().map(|c| c.label()).collect()
}

pub fn mark_table(lattice: &SubgroupLattice, table: &MarkTable) -> String {
    let labels = class_labels(lattice);
    let width = labels
        .iter()
        .map(String::len)
        .chain(table.m.iter().flatten().map(|x| x.to_string().len()))
        .max()
        .unwrap_or(1)
        + 1;
    let mut out = String::new();
    let _ = write!(out, "{:>w$} |", "", w = width + 4);
    for l in &labels {
        let _ = write!(out, "{l:>width$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}", "-".repeat(width + 6 + width * labels.len()));
    for (v, row) in table.m.iter().enumerate() {
        let _ = write!(out, "{v:>3} {:>width$} |", labels[v]);
        for x in row {
            let _ = write!(out, "{x:>width$}");
        }
        out.push('\n');
    }
    out
}

fn pair_line(lattice: &SubgroupLattice, p: &CongruencePair) -> String {
    format!(
        "U={} (class {}) ⊴ V={} (class {}): index {}, count {}, constraint {}",
        lattice.class(p.u_class).label(),
        p.u_class,
        lattice.class(p.v_class).label(),
        p.v_class,
        p.index,
        p.count,
        p.constraint
    )
}

pub fn exponent_report(lattice: &SubgroupLattice, r: &ExponentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {} (order {}), family {}", r.group, r.order, r.family);
    if let Some(a) = r.exponent_congruence {
        let _ = writeln!(out, "exponent (congruence): {a}");
    }
    if let Some(a) = r.exponent_marks {
        let _ = writeln!(out, "exponent (marks):      {a}");
    }
    if r.exponent_congruence.is_some() && r.exponent_marks.is_some() {
        let _ = writeln!(out, "{}", if r.methods_agree { "methods agree" } else { "METHODS DISAGREE" });
    }
    let pred = &r.predictor;
    let value = pred.value.map_or("unknown".to_string(), |v| v.to_string());
    let _ = writeln!(out, "prediction: {value} (branch: {})", pred.branch);
    for alt in &pred.alternatives {
        let _ = writeln!(out, "  alternative {}: {}", alt.rule, alt.value);
    }
    if let Some(c) = &pred.commutator_candidates {
        let _ = writeln!(
            out,
            "  {{g : [g,G] <= Z}}: order {}, cyclic {}; {{g : [g,Z] <= Z}}: order {}, cyclic {}",
            c.kernel_order, c.kernel_cyclic, c.literal_order, c.literal_cyclic
        );
    }
    if !r.sylow.is_empty() {
        let _ = writeln!(out, "sylow comparison (report only):");
        for e in &r.sylow {
            let _ = writeln!(
                out,
                "  p={}: p-part {}, A(Sylow of order {}) = {}, {}",
                e.prime,
                e.exponent_p_part,
                e.sylow_order,
                e.sylow_exponent,
                if e.matches { "match" } else { "mismatch" }
            );
        }
    }
    if let Some(pairs) = &r.pairs {
        let _ = writeln!(out, "congruence pairs ({}; * = binding):", pairs.len());
        for p in pairs {
            let mark = if r.binding_pairs.contains(p) { '*' } else { ' ' };
            let _ = writeln!(out, " {mark} {}", pair_line(lattice, p));
        }
    } else if !r.binding_pairs.is_empty() {
        let _ = writeln!(out, "binding pairs:");
        for p in &r.binding_pairs {
            let _ = writeln!(out, "  {}", pair_line(lattice, p));
        }
    }
    out
}

fn cell(status: Option<Status>) -> &'static str {
    match status {
        Some(Status::Pass) => "ok",
        Some(Status::Fail) => "FAIL",
        Some(Status::Skip) => "-",
        Some(Status::Report) => "report",
        None => "?",
    }
}

pub fn sweep_summary(result: &RunResult) -> String {
    let mut out = String::new();
    let name_w = result.groups.iter().map(|g| g.group.len()).max().unwrap_or(5).max(5);
    let col_w = result.checks.iter().map(|c| c.name().len()).max().unwrap_or(6).max(6) + 1;
    let _ = write!(out, "{:<name_w$} {:>5} {:>5}", "group", "order", "A");
    for c in &result.checks {
        let _ = write!(out, "{:>col_w$}", c.name());
    }
    out.push('\n');
    for g in &result.groups {
        let _ = write!(out, "{:<name_w$} {:>5} {:>5}", g.group, g.order, g.exponent);
        for c in &result.checks {
            let _ = write!(out, "{:>col_w$}", cell(g.status(*c)));
        }
        out.push('\n');
    }
    let reports: Vec<String> = result
        .groups
        .iter()
        .flat_map(|g| {
            g.checks
                .iter()
                .filter(|c| c.status == Status::Report)
                .map(move |c| format!("  {} [{}]: {}", g.group, c.check, c.detail))
        })
        .collect();
    if !reports.is_empty() {
        let _ = writeln!(out, "\nreports:");
        for r in reports {
            let _ = writeln!(out, "{r}");
        }
    }
    if result.failures.is_empty() {
        let _ = writeln!(out, "\n{} groups, all checks passed", result.groups.len());
    } else {
        let _ = writeln!(out, "\nfailures:");
        for f in &result.failures {
            let _ = writeln!(out, "  {} [{}]: expected {}, got {}", f.group, f.check, f.expected, f.got);
        }
    }
    out
}

pub fn parse_checks(text: &str) -> artinx_core::Result<Vec<Check>> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}
