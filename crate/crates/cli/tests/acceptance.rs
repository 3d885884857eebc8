//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use og10_llv::table::{compare_with_reference, reconstruct, Target};
use og10_llv::weyl::weyl_dimension;
use og10_llv::{Fraction, ManifoldProfile, RationalPolynomial, Weight};
use og10_llv_cli::report::{OutputEnvelope, Results};

type Outcome = Result<String, String>;
type PropertyRun = fn(u32) -> Result<u32, String>;
/// Target, reference id, mismatched degrees, and (derived, printed) constants.
type Expectation = (Target, &'static str, Vec<usize>, Option<(&'static str, &'static str)>);
type Criterion = (u32, &'static str, fn() -> Outcome, Duration);

fn frac(s: &str) -> Fraction {
    s.parse().unwrap()
}

fn poly(ascending: &[&str]) -> RationalPolynomial {
    RationalPolynomial::new(ascending.iter().map(|s| frac(s)).collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> (OutputEnvelope, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_og10-llv")).args(args).output().expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let envelope = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: bad JSON ({e}); stderr {}", String::from_utf8_lossy(&out.stderr)));
    (envelope, code)
}

fn dimension_anchors() -> Outcome {
    let og10 = ManifoldProfile::og10();
    let (verb, v22) =
        (og10.verbitsky_dimension().map_err(|e| e.to_string())?, og10.v22_dimension().map_err(|e| e.to_string())?);
    let w5 = weyl_dimension(&Weight::padded(13, &[5]).unwrap()).map_err(|e| e.to_string())?;
    let w22 = weyl_dimension(&Weight::padded(13, &[2, 2]).unwrap()).map_err(|e| e.to_string())?;
    ensure(verb == 139230 && w5 == 139230, || format!("V(5): binomial {verb}, Weyl {w5}"))?;
    ensure(v22 == 37674 && w22 == 37674, || format!("V(2,2): binomial {v22}, Weyl {w22}"))?;
    ensure(verb + v22 == 176904, || format!("sum {}", verb + v22))?;
    Ok(format!("{verb} + {v22} = {} by binomials and by the Weyl formula", verb + v22))
}

fn row_c() -> Outcome {
    let expected = poly(&["59832", "-3438/5", "261/2", "117/4", "-27/2", "27/20"]);
    let got = reconstruct(3, Target::TotalC).map_err(|e| e.to_string())?;
    ensure(got == expected, || format!("got {got}"))?;
    let report = compare_with_reference(&got, "totals.c").map_err(|e| e.to_string())?;
    ensure(report.is_exact_match(), || format!("{report:?}"))?;
    Ok(format!("f(r) = {got}"))
}

fn lemma_intermediates() -> Outcome {
    let cases: [(u32, Target, RationalPolynomial, i64, i64); 4] = [
        (2, Target::Sym2, poly(&["303", "-22", "1"]), 24, 351),
        (2, Target::Lambda2, poly(&["277", "-22", "1"]), 24, 325),
        (2, Target::Lambda4, poly(&["10902", "-4510/3", "689/3", "-44/3", "1/3"]), 24, 14950),
        (3, Target::V22, poly(&["13158", "-675", "597/2", "-60", "9/2"]), 12, 37674),
    ];
    let mut details = Vec::new();
    for (order, target, expected, r_id, value) in cases {
        let got = reconstruct(order, target).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("order {order} {target}: got {got}"))?;
        let at_id = got.evaluate_at(r_id);
        ensure(at_id == Fraction::from(value), || format!("order {order} {target}: f({r_id}) = {at_id}"))?;
        details.push(format!("{target}({r_id})={at_id}"));
    }
    Ok(details.join(", "))
}

fn erratum_detection() -> Outcome {
    // the hand-enumerated oracle fixes the derived values first
    for r in [0u64, 1, 2, 24] {
        let brute = common::brute_totals(&common::order2(r));
        for (target, value) in
            [(Target::V22, Some(brute.v22)), (Target::TotalA, Some(brute.total_a)), (Target::TotalB, brute.total_b)]
        {
            let derived = reconstruct(2, target).map_err(|e| e.to_string())?.evaluate_at(r as i64);
            ensure(Some(derived) == value.map(Fraction::from), || {
                format!("oracle disagrees for {target} at r={r}: {derived} vs {value:?}")
            })?;
        }
    }

    let expectations: [Expectation; 4] = [
        (Target::Sym2Lambda2, "ord2.sym2lambda2", vec![1], None),
        (Target::V22, "ord2.v22", vec![0, 1], Some(("28474", "28500"))),
        (Target::TotalA, "totals.a", vec![0], Some(("64176", "64202"))),
        (Target::TotalB, "totals.b", vec![0], Some(("7228", "7202"))),
    ];
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (target, id, degrees, constants) in expectations {
        let derived = reconstruct(2, target).map_err(|e| e.to_string())?;
        let report = compare_with_reference(&derived, id).map_err(|e| e.to_string())?;
        if report.mismatched.is_empty() || report.mismatched_degrees() != degrees {
            failures.push(format!("{id}: mismatched degrees {:?}, expected {degrees:?}", report.mismatched_degrees()));
        }
        if degrees.contains(&1) {
            let c1 = (derived.coefficient(1), report.mismatched.iter().find(|m| m.degree == 1).map(|m| m.printed));
            if c1.1 != Some(-c1.0) {
                failures.push(format!("{id}: degree-1 coefficient is not a sign flip: {c1:?}"));
            }
        }
        if let Some((d, p)) = constants {
            let m0 = report.mismatched.iter().find(|m| m.degree == 0);
            match m0 {
                Some(m) if m.derived == frac(d) && m.printed == frac(p) => {}
                Some(m) => failures.push(format!(
                    "{id}: constant derived {} vs printed {} (expected {d} vs {p})",
                    m.derived, m.printed
                )),
                None => failures.push(format!("{id}: constant not flagged")),
            }
        }
        details.push(format!("{id} at {:?}", report.mismatched_degrees()));
    }
    for target in [Target::TotalA, Target::TotalB] {
        let f24 = reconstruct(2, target).map_err(|e| e.to_string())?.evaluate_at(24);
        if f24 != Fraction::from(176904i64) {
            failures.push(format!("{target}: f(24) = {f24}, expected 176904"));
        }
    }
    if failures.is_empty() {
        Ok(details.join(", "))
    } else {
        Err(failures.join("; "))
    }
}

fn property(run: PropertyRun, cases: u32) -> Outcome {
    run(cases).map(|n| format!("{n} seeded cases, 0 failures"))
}

fn route_equality() -> Outcome {
    property(common::props::route_equality, 256)
}

fn commuting_square() -> Outcome {
    property(common::props::commuting_square, 128)
}

fn plethysm_rank(rank: u32) -> Outcome {
    let rank_s = rank.to_string();
    let (env, code) = cli(&["weyl", "--rank", &rank_s, "--format", "json"]);
    ensure(code == 0, || format!("exit code {code}"))?;
    let Results::Weyl(w) = env.results else { return Err("wrong result kind".into()) };
    let cert = w.certificate.ok_or("no certificate")?;
    ensure(w.verified && cert.remainder_is_v22 && cert.summands_match, || "identity not verified".into())?;
    let top = Weight::padded(rank as usize, &[2, 2]).unwrap();
    ensure(
        cert.remainder.len() == 1 && cert.remainder[0].highest_weight == top && cert.remainder[0].multiplicity == 1,
        || format!("remainder {:?}", cert.remainder),
    )?;
    let d = w.dimensions;
    Ok(format!("rank {rank}: {} + {} + {} = {}", d.sym2, d.ext4, d.v22, d.sym2_ext2))
}

fn plethysm() -> Outcome {
    let big = plethysm_rank(13)?;
    let mut small = Vec::new();
    for rank in [4, 5] {
        let start = Instant::now();
        small.push(plethysm_rank(rank)?);
        ensure(start.elapsed() < Duration::from_secs(5), || format!("rank {rank} took {:?}", start.elapsed()))?;
    }
    Ok(format!("{big}; {}", small.join("; ")))
}

fn feasibility_scan() -> Outcome {
    let (env, code) = cli(&["check", "--format", "json"]);
    let Results::Check(check) = env.results else { return Err("wrong result kind".into()) };
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for scan in &check.scans {
        let tag = format!("order {} {:?}", scan.order, scan.polynomial_source);
        match scan.order {
            2 => {
                let covered = (0..=24u64).all(|r| scan.candidates.iter().filter(|c| c.invariant_dim == r).count() == 2);
                if !covered || !scan.solutions.is_empty() {
                    failures.push(format!("{tag}: covered={covered}, {} solutions", scan.solutions.len()));
                }
            }
            3 => {
                let dims: Vec<u64> = scan.solutions.iter().map(|s| s.invariant_dim).collect();
                let ok = scan.solutions.len() == 1
                    && scan.solutions[0].invariant_dim == 8
                    && scan.solutions[0].total == Fraction::from(58968i64)
                    && scan.paper_claim == og10_llv::PaperClaim::Discrepant;
                if !ok {
                    failures.push(format!(
                        "{tag}: expected exactly one solution at dim 8, found dims {dims:?} (all 58968)"
                    ));
                }
                details.push(format!("{tag}: solutions at dims {dims:?}"));
            }
            other => failures.push(format!("unexpected order {other}")),
        }
    }
    let orders: Vec<u32> = check.scans.iter().map(|s| s.order).collect();
    if orders != [2, 2, 3, 3] {
        failures.push(format!("scanned orders {orders:?}"));
    }
    if code != 3 {
        failures.push(format!("exit code {code}"));
    }
    if failures.is_empty() {
        Ok(format!("exit 3; {}", details.join("; ")))
    } else {
        Err(failures.join("; "))
    }
}

fn property_suite() -> Outcome {
    let runs: [(&str, PropertyRun, u32); 4] = [
        ("newton integrality", common::props::newton_integrality, 300),
        ("non-negativity", common::props::non_negativity, 150),
        ("rationality and self-duality", common::props::rationality_and_duality, 300),
        ("brute-force sym/ext", common::props::brute_force_powers, 300),
    ];
    let mut details = Vec::new();
    for (name, run, cases) in runs {
        let n = run(cases).map_err(|e| format!("{name}: {e}"))?;
        details.push(format!("{name} {n}"));
    }
    Ok(details.join(", "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "dimension anchors", dimension_anchors, Duration::from_secs(1)),
        (2, "row c reproduced", row_c, Duration::from_secs(1)),
        (3, "lemma intermediates", lemma_intermediates, Duration::from_secs(5)),
        (4, "erratum detection", erratum_detection, Duration::from_secs(10)),
        (5, "verbitsky route equality", route_equality, Duration::from_secs(10)),
        (6, "torus commuting square", commuting_square, Duration::from_secs(60)),
        (7, "plethysm certification", plethysm, Duration::from_secs(600)),
        (8, "feasibility scan", feasibility_scan, Duration::from_secs(1)),
        (9, "property suite", property_suite, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(d) if elapsed > limit => Err(format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {n} PASS {name} ({elapsed:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n} FAIL {name} ({elapsed:.2?}): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
