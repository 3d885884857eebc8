use std::fmt::Write;

use og10_llv::weyl::DecompositionTerm;
use og10_llv::{PaperClaim, PolynomialSource, ScanReport, SignCase};

use crate::report::{CheckResult, InvariantsResult, OutputEnvelope, Results, TableResult, WeylResult};

pub fn source_name(source: PolynomialSource) -> &'static str {
    match source {
        PolynomialSource::Derived => "derived",
        PolynomialSource::PaperLiteral => "printed",
    }
}

pub fn case_name(case: SignCase) -> &'static str {
    match case {
        SignCase::A => "a",
        SignCase::B => "b",
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json(envelope: &OutputEnvelope) -> String {
    // every field is a plain struct, string or integer; serialization cannot fail
    let mut s = serde_json::to_string_pretty(envelope).expect("envelope serializes");
    s.push('\n');
    s
}

/// Human-readable rendering.
pub fn to_text(envelope: &OutputEnvelope) -> String {
    let mut out = String::new();
    let p = &envelope.profile;
    // writing into a String cannot fail
    let _ = writeln!(out, "profile: b2={} euler={} dim={}", p.second_betti, p.total_euler, p.complex_dimension);
    match &envelope.results {
        Results::Invariants(r) => invariants(&mut out, r),
        Results::Table(r) => table(&mut out, r),
        Results::Check(r) => check(&mut out, r),
        Results::Weyl(r) => weyl(&mut out, r),
    }
    if !envelope.errata.is_empty() {
        let _ = writeln!(out, "\nerrata:");
        for e in &envelope.errata {
            let _ = writeln!(out, "  {e}");
        }
    }
    out
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn invariants(out: &mut String, r: &InvariantsResult) {
    let _ = writeln!(out, "order {}  H2 [{}]  V [{}]", r.order, join(&r.h2_mults), join(&r.mukai_mults));
    let _ = writeln!(out, "invariant dim on H2: {}", r.invariant_dim);
    let _ = writeln!(out, "verbitsky fixed:     {} (graded route {})", r.verbitsky_fixed, r.verbitsky_fixed_graded);
    let _ = writeln!(out, "v22 fixed:           {}", r.v22_fixed);
    let _ = writeln!(out, "total case a:        {}", r.total_case_a);
    if let Some(b) = r.total_case_b {
        let _ = writeln!(out, "total case b:        {b}");
    }
}

fn table(out: &mut String, r: &TableResult) {
    let _ = writeln!(out, "order {} target {}", r.order, r.target);
    let _ = writeln!(out, "f(r) = {}", r.plain);
    let _ = writeln!(out, "latex: {}", r.latex);
    match (&r.reference_id, &r.printed, &r.erratum) {
        (Some(id), Some(printed), Some(report)) => {
            let _ = writeln!(out, "printed ({id}): {printed}");
            if report.is_exact_match() {
                let _ = writeln!(out, "EXACT MATCH with the printed polynomial");
            } else {
                let _ = writeln!(out, "MISMATCH at degrees {:?}", report.mismatched_degrees());
                for m in &report.mismatched {
                    let _ = writeln!(out, "  r^{}: derived {}  printed {}", m.degree, m.derived, m.printed);
                }
            }
        }
        _ => {
            let _ = writeln!(out, "no printed polynomial to compare");
        }
    }
    if let Some(sc) = &r.self_check {
        let verdict = if sc.holds { "ok" } else { "FAILED" };
        let _ = writeln!(out, "self-check f({}) = {} vs {} = {}: {verdict}", sc.r, sc.value, sc.label, sc.expected);
    }
}

fn scan_section(out: &mut String, s: &ScanReport) {
    let claim = match s.paper_claim {
        PaperClaim::Consistent => "consistent with the published claim",
        PaperClaim::Discrepant => "DISCREPANT with the published claim",
    };
    let _ = writeln!(
        out,
        "\norder {} ({} source): {} candidates, {} solutions; {claim}",
        s.order,
        source_name(s.polynomial_source),
        s.candidates.len(),
        s.solutions.len()
    );
    for c in &s.solutions {
        let _ = writeln!(
            out,
            "  SOLUTION invariant dim {} case {}: {} * {} = {}",
            c.invariant_dim,
            case_name(c.case),
            s.order,
            c.total,
            s.euler
        );
    }
}

fn check(out: &mut String, r: &CheckResult) {
    let _ = writeln!(out, "admissible indices {:?}: {}", r.admissible.indices, r.admissible.note);
    for s in &r.scans {
        scan_section(out, s);
    }
    for s in &r.composite {
        scan_section(out, s);
    }
    if let Some(s) = r.scans.first().or(r.composite.first()) {
        let _ = writeln!(out, "\nnote: {}", s.note);
    }
}

fn terms(out: &mut String, label: &str, ts: &[DecompositionTerm]) {
    let parts: Vec<String> = ts
        .iter()
        .map(|t| {
            if t.multiplicity == 1 {
                format!("{} [{}]", t.highest_weight, t.dimension)
            } else {
                format!("{} x {} [{}]", t.multiplicity, t.highest_weight, t.dimension)
            }
        })
        .collect();
    let _ = writeln!(out, "  {label:<14} {}", parts.join(" + "));
}

fn weyl(out: &mut String, r: &WeylResult) {
    let d = &r.dimensions;
    let _ = writeln!(out, "D_{}: dim Sym2(L2 V) = {}", r.rank, d.sym2_ext2);
    let _ = writeln!(
        out,
        "  {} + {} + {} = {} ({})",
        d.sym2,
        d.ext4,
        d.v22,
        d.sym2 + d.ext4 + d.v22,
        if d.balances() { "balances" } else { "DOES NOT BALANCE" }
    );
    if let Some(c) = &r.certificate {
        terms(out, "Sym2(L2 V):", &c.sym2_ext2);
        terms(out, "Sym2 V:", &c.sym2);
        terms(out, "L4 V:", &c.ext4);
        terms(out, "remainder:", &c.remainder);
        let _ = writeln!(out, "remainder is V(2,2): {}", c.remainder_is_v22);
        let _ = writeln!(out, "summands match: {}", c.summands_match);
        let _ = writeln!(out, "work used: {} steps", c.work_used);
    }
    let _ = writeln!(out, "{}", if r.verified { "VERIFIED" } else { "NOT VERIFIED" });
}
