use og10_llv::enriques::{admissible_indices, rational_characters, scan, scan_characters};
use og10_llv::mukai::{graded_verbitsky_invariants, mukai_extend, total_invariants};
use og10_llv::table::{
    admissible_range, compare_with_reference, reconstruct_with_profile, reference_id_for, ReferenceSet,
};
use og10_llv::weyl::{plethysm_dimensions, verify_plethysm, WorkBudget, DEFAULT_WORK_CAP};
use og10_llv::{CyclicCharacter, Error, ManifoldProfile, PolynomialSource, Target};

use crate::args::{Case, CheckArgs, Cli, Command, InvariantsArgs, SourceArg, TableArgs, WeylArgs, WORK_CAP_ENV};
use crate::render::{case_name, source_name};
use crate::report::{CheckResult, InvariantsResult, OutputEnvelope, Results, SelfCheck, TableResult, WeylResult};

/// Success, or no finding.
pub const EXIT_OK: i32 = 0;
/// Usage or validation error.
pub const EXIT_USAGE: i32 = 2;
/// A scan solution or a disagreement with a printed value.
pub const EXIT_FINDING: i32 = 3;

#[derive(Debug)]
pub struct Outcome {
    pub envelope: OutputEnvelope,
    pub exit_code: i32,
}

/// One-line diagnostic for a failed command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

/// Run a parsed command. `argv` is echoed into the envelope.
pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Outcome, Failure> {
    let profile = cli.profile;
    let (results, errata, finding) = match &cli.command {
        Command::Invariants(a) => invariants(a, &profile)?,
        Command::Table(a) => table(a, &profile)?,
        Command::Check(a) => check(a, &profile)?,
        Command::Weyl(a) => weyl(a, work_cap_from_env()?)?,
    };
    let envelope =
        OutputEnvelope { command: argv, profile, results, errata, version: env!("CARGO_PKG_VERSION").to_string() };
    Ok(Outcome { envelope, exit_code: if finding { EXIT_FINDING } else { EXIT_OK } })
}

type Section = (Results, Vec<String>, bool);

fn work_cap_from_env() -> Result<Option<u64>, Failure> {
    match std::env::var(WORK_CAP_ENV) {
        Ok(v) => {
            v.trim().parse().map(Some).map_err(|_| Failure(format!("{WORK_CAP_ENV}={v} is not a non-negative integer")))
        }
        Err(_) => Ok(None),
    }
}

fn invariants(a: &InvariantsArgs, profile: &ManifoldProfile) -> Result<Section, Failure> {
    let h2 = match (&a.mults, a.invariant_dim) {
        (Some(m), _) => CyclicCharacter::new(a.order, m.clone())?,
        (None, Some(d)) => profile.h2_from_invariant_dim(a.order, d)?,
        (None, None) => return Err(Failure("one of --mults or --invariant-dim is required".into())),
    };
    let inv = total_invariants(&h2, profile)?;
    let graded = graded_verbitsky_invariants(&h2, profile)?;
    let result = InvariantsResult {
        order: h2.order(),
        h2_mults: h2.mults().to_vec(),
        mukai_mults: mukai_extend(&h2, profile)?.mults().to_vec(),
        invariant_dim: h2.eig(0),
        verbitsky_fixed: inv.verbitsky_fixed,
        verbitsky_fixed_graded: graded,
        v22_fixed: inv.v22_fixed,
        total_case_a: inv.total_case_a,
        total_case_b: inv.total_case_b,
    };
    let mut errata = Vec::new();
    if graded != inv.verbitsky_fixed {
        errata.push(format!("verbitsky routes disagree: {} vs {graded}", inv.verbitsky_fixed));
    }
    let finding = !errata.is_empty();
    Ok((Results::Invariants(result), errata, finding))
}

fn table(a: &TableArgs, profile: &ManifoldProfile) -> Result<Section, Failure> {
    let target = match (a.case, a.target) {
        (_, Some(t)) => t,
        (Some(Case::A), None) if a.order == 2 => Target::TotalA,
        (Some(Case::B), None) if a.order == 2 => Target::TotalB,
        (Some(Case::C), None) if a.order == 3 => Target::TotalC,
        (Some(c), None) => {
            return Err(Failure(format!(
                "case {} is not a row for order {}; use a or b with order 2, c with order 3",
                format!("{c:?}").to_lowercase(),
                a.order
            )))
        }
        (None, None) => return Err(Failure("one of --case or --target is required".into())),
    };
    let polynomial = reconstruct_with_profile(a.order, target, profile)?;

    // printed polynomials describe the default manifold only
    let reference_id = reference_id_for(a.order, target).filter(|_| *profile == ManifoldProfile::og10());
    let (printed, erratum) = match reference_id {
        Some(id) => (Some(ReferenceSet::embedded().get(id)?.clone()), Some(compare_with_reference(&polynomial, id)?)),
        None => (None, None),
    };

    // at r_max the automorphism is trivial on H², so case a fixes all of H* and
    // case b fixes exactly the Verbitsky component
    let self_check = match target {
        Target::TotalA | Target::TotalC => Some(("e(X)", profile.total_euler)),
        Target::TotalB => Some(("dim V(n)", profile.verbitsky_dimension()?)),
        _ => None,
    }
    .map(|(label, expected)| -> Result<SelfCheck, Failure> {
        let r = *admissible_range(a.order, profile)?.end();
        let value = polynomial.evaluate_at(r as i64);
        let holds = value == og10_llv::Fraction::from(expected);
        Ok(SelfCheck { r, value, expected, label: label.to_string(), holds })
    })
    .transpose()?;

    let mut errata = Vec::new();
    if let Some(report) = &erratum {
        for m in &report.mismatched {
            errata.push(format!(
                "{}: coefficient of r^{} is {} (printed {})",
                report.target, m.degree, m.derived, m.printed
            ));
        }
    }
    if let Some(sc) = &self_check {
        if !sc.holds {
            errata.push(format!("f({}) = {} but {} = {}", sc.r, sc.value, sc.label, sc.expected));
        }
    }
    let finding = !errata.is_empty();
    let result = TableResult {
        order: a.order,
        target,
        plain: polynomial.to_plain("r"),
        latex: polynomial.to_latex("r"),
        polynomial,
        reference_id: reference_id.map(str::to_string),
        printed,
        erratum,
        self_check,
    };
    Ok((Results::Table(result), errata, finding))
}

fn check(a: &CheckArgs, profile: &ManifoldProfile) -> Result<Section, Failure> {
    profile.validate()?;
    let chi = profile.holomorphic_euler();
    let admissible = admissible_indices(chi);
    let mut orders = a.orders.clone().unwrap_or_else(|| admissible.indices.clone());
    orders.sort_unstable();
    orders.dedup();
    for &order in &orders {
        if order != 2 && order != 3 {
            return Err(Error::UnsupportedOrder(order).into());
        }
    }
    let sources: &[PolynomialSource] = match a.source {
        SourceArg::Derived => &[PolynomialSource::Derived],
        SourceArg::PaperLiteral => &[PolynomialSource::PaperLiteral],
        SourceArg::Both if *profile == ManifoldProfile::og10() => {
            &[PolynomialSource::Derived, PolynomialSource::PaperLiteral]
        }
        // printed totals exist only for the default manifold
        SourceArg::Both => &[PolynomialSource::Derived],
    };
    let mut scans = Vec::new();
    for &order in &orders {
        for &source in sources {
            scans.push(scan(order, source, profile)?);
        }
    }

    let mut composite = Vec::new();
    if a.include_composite {
        let composite_orders =
            (4..=chi).filter(|d| chi.is_multiple_of(*d) && !admissible.indices.contains(&(*d as u32)));
        for d in composite_orders {
            let d = u32::try_from(d).map_err(|_| Failure(format!("order {d} is too large")))?;
            let characters = rational_characters(d, profile)?;
            composite.extend(scan_characters(&characters, profile)?);
        }
    }

    let mut errata = Vec::new();
    for report in scans.iter().chain(&composite) {
        for s in &report.solutions {
            errata.push(format!(
                "order {} ({} source): invariant dim {} case {} gives {} * {} = {}",
                report.order,
                source_name(report.polynomial_source),
                s.invariant_dim,
                case_name(s.case),
                report.order,
                s.total,
                report.euler
            ));
        }
    }
    let finding = !errata.is_empty();
    Ok((Results::Check(CheckResult { admissible, scans, composite }), errata, finding))
}

fn weyl(a: &WeylArgs, env_cap: Option<u64>) -> Result<Section, Failure> {
    let rank = a.rank as usize;
    let dimensions = plethysm_dimensions(rank)?;
    if a.dim_only {
        let verified = dimensions.balances();
        let errata = if verified { Vec::new() } else { vec![format!("dimensions do not balance at rank {rank}")] };
        let finding = !verified;
        return Ok((Results::Weyl(WeylResult { rank, dimensions, certificate: None, verified }), errata, finding));
    }
    let cap = a.work_cap.or(env_cap).unwrap_or(DEFAULT_WORK_CAP);
    let mut budget = WorkBudget::new(cap);
    let report = verify_plethysm(rank, &mut budget).map_err(|e| match e {
        Error::WorkCapExceeded { cap } => Failure(format!(
            "work cap of {cap} steps exceeded at rank {rank}; raise it with --work-cap or {WORK_CAP_ENV}, or use --dim-only"
        )),
        other => other.into(),
    })?;
    let verified = report.verified();
    let errata = if verified { Vec::new() } else { vec![format!("plethysm identity not confirmed at rank {rank}")] };
    Ok((Results::Weyl(WeylResult { rank, dimensions, certificate: Some(report), verified }), errata, !verified))
}
