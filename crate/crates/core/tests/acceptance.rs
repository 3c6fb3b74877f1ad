//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! All comparisons are exact equalities of canonical polynomials or exact
//! rationals; there are no tolerances anywhere.

use std::collections::BTreeMap;

use hnlab_core::analysis::{analyze_standard, AnalysisReport};
use hnlab_core::classify::{
    admissible_space, all_class_subspaces, class_reports, classification_table, decompose,
    MinimalClass, StratumPredicate,
};
use hnlab_core::curvature::{identities as rid, ricci_and_scalars, riemann, sectional, Sign};
use hnlab_core::exactalg::{rat, rat_int, Poly, RatMatrix, Rational, VarSet};
use hnlab_core::hnstruct::{standard_frame, Plane};
use hnlab_core::liealg::catalog;
use hnlab_core::tensorcalc::{identities as tid, levi_civita, structural_tensors};
use hnlab_core::verify::{run_all, CheckStatus, VerifyReport};

fn poly(s: &str) -> Poly {
    Poly::parse(&VarSet::ab(), s).unwrap()
}

fn assignment(a: Rational, b: Rational) -> BTreeMap<String, Rational> {
    [("a".to_string(), a), ("b".to_string(), b)].into()
}

fn checks_with_prefix<'r>(report: &'r VerifyReport, prefix: &str) -> Vec<&'r hnlab_core::verify::CheckResult> {
    report
        .checks
        .iter()
        .filter(|c| c.id.starts_with(prefix))
        .collect()
}

fn suite() -> &'static VerifyReport {
    use std::sync::OnceLock;
    static SUITE: OnceLock<VerifyReport> = OnceLock::new();
    SUITE.get_or_init(|| run_all().expect("verification suite runs"))
}

#[test]
fn criterion_1_golden_components_g4_5() {
    // Every displayed g4_5 value reproduced symbolically, exactly; the one
    // source-internal sign conflict, (N3)_132, is reported with both values.
    let report = suite();
    let component_groups = [
        "g4_5 F", "g4_5 theta", "g4_5 N", "g4_5 R_", "g4_5 rho", "g4_5 tau", "g4_5 k_",
    ];
    let mut seen = 0;
    for check in &report.checks {
        if !component_groups.iter().any(|g| check.id.starts_with(g)) {
            continue;
        }
        seen += 1;
        match &check.status {
            CheckStatus::Pass => {}
            CheckStatus::Discrepancy(d) if check.id == "g4_5 N3_132" => {
                assert_eq!(d.published, "a - b");
                assert_eq!(d.computed, "-a + b");
                assert!(!d.corroborated_by.is_empty());
            }
            other => panic!("{}: unexpected status {other:?}", check.id),
        }
    }
    assert!(seen >= 46, "only {seen} pinned g4_5 values checked");

    // Spot-check the criterion's own examples directly.
    let frame = standard_frame();
    let alg = catalog::g4_5();
    let t = structural_tensors(&alg, &frame).unwrap();
    let r = riemann(&t.connection, &alg, &frame);
    let bundle = ricci_and_scalars(&r, &frame);
    assert_eq!(t.f[0].get(&[0, 0, 2]), &poly("1"));
    assert_eq!(t.theta[1].get(&[1]), &poly("2*a + b + 1"));
    assert_eq!(t.nijenhuis[2].get(&[0, 1, 2]), &poly("a - b"));
    assert_eq!(r.get(&[2, 3, 3, 2]), &poly("b^2"));
    assert_eq!(bundle.rho.get(&[3, 3]), &poly("-a^2 - b^2 - 1"));
    for alpha in 0..3 {
        assert!(bundle.tau_star[alpha].is_zero());
    }
    assert_eq!(
        sectional(&r, &frame, Plane::new(2, 4).unwrap()).unwrap(),
        poly("a^2")
    );
    println!("criterion 1 (golden components, g4_5): PASS");
}

#[test]
fn criterion_2_golden_components_g4_6() {
    // Every displayed g4_6 value reproduced, with the R_3443 divergence
    // reported with both values and corroborated by k_34.
    let report = suite();
    let component_groups = [
        "g4_6 F", "g4_6 theta", "g4_6 N", "g4_6 R_", "g4_6 rho", "g4_6 tau", "g4_6 k_",
    ];
    let mut seen = 0;
    let mut saw_r3443 = false;
    for check in &report.checks {
        if !component_groups.iter().any(|g| check.id.starts_with(g)) {
            continue;
        }
        seen += 1;
        match &check.status {
            CheckStatus::Pass => {}
            CheckStatus::Discrepancy(d) if check.id == "g4_6 R_3443" => {
                saw_r3443 = true;
                assert_eq!(d.published, "-b^2 + 2");
                assert_eq!(d.computed, "b^2 - 1");
                assert!(d.corroborated_by.contains("k_34"));
            }
            other => panic!("{}: unexpected status {other:?}", check.id),
        }
    }
    assert!(seen >= 65, "only {seen} pinned g4_6 values checked");
    assert!(saw_r3443, "the R_3443 divergence must be reported");

    let frame = standard_frame();
    let alg = catalog::g4_6();
    let t = structural_tensors(&alg, &frame).unwrap();
    let r = riemann(&t.connection, &alg, &frame);
    let bundle = ricci_and_scalars(&r, &frame);
    assert_eq!(t.f[2].get(&[1, 0, 2]), &poly("-1"));
    assert_eq!(t.theta[2].get(&[3]), &poly("-2"));
    assert_eq!(bundle.rho.get(&[1, 2]), &poly("a + 2*b"));
    assert_eq!(bundle.tau_star[2], poly("2*a + 4*b"));
    assert_eq!(bundle.tau_star_star[2], poly("2*a^2 + 2*b^2 + 2"));
    assert_eq!(
        sectional(&r, &frame, Plane::new(2, 3).unwrap()).unwrap(),
        poly("b^2 + 1")
    );
    println!("criterion 2 (golden components, g4_6): PASS");
}

#[test]
fn criterion_3_classification_table_g4_5() {
    let report = suite();
    let rows = checks_with_prefix(report, "g4_5 table row");
    assert_eq!(rows.len(), 12);
    for check in rows {
        match &check.status {
            CheckStatus::Pass => {}
            CheckStatus::Discrepancy(d) if check.id == "g4_5 table row 4" => {
                // The single over-stated cell: J3 at (1, 1) is minimally W1.
                assert_eq!(d.published, "W1+W2");
                assert_eq!(d.computed, "W1");
            }
            other => panic!("{}: unexpected status {other:?}", check.id),
        }
    }
    // The sum-class row quoted by the criterion: (1, -3) -> W2+W3 for J2, J3.
    let frame = standard_frame();
    let reports = class_reports(&catalog::g4_5(), &frame).unwrap();
    let at = assignment(rat_int(1), rat_int(-3));
    assert_eq!(
        reports[1].minimal_at(&at).unwrap(),
        MinimalClass::parse("W2+W3").unwrap()
    );
    assert_eq!(
        reports[2].minimal_at(&at).unwrap(),
        MinimalClass::parse("W2+W3").unwrap()
    );
    println!("criterion 3 (classification table, g4_5): PASS");
}

#[test]
fn criterion_4_classification_g4_6() {
    let report = suite();
    let generic = checks_with_prefix(report, "g4_6 single generic stratum");
    assert_eq!(generic.len(), 1);
    assert!(matches!(generic[0].status, CheckStatus::Pass));
    let points = checks_with_prefix(report, "g4_6 classes at");
    assert!(points.len() >= 11, "10 sample points plus the b = 0 boundary");
    for check in &points {
        assert!(
            matches!(check.status, CheckStatus::Pass),
            "{} failed",
            check.id
        );
    }
    // Direct generic check.
    let frame = standard_frame();
    let table = classification_table(&catalog::g4_6(), &frame).unwrap();
    assert_eq!(table.strata.len(), 1);
    assert_eq!(table.strata[0].predicate, StratumPredicate::Generic);
    assert_eq!(
        table.strata[0].classes[0],
        MinimalClass::parse("W2+W4").unwrap()
    );
    assert_eq!(
        table.strata[0].classes[1],
        MinimalClass::parse("W1+W2+W3").unwrap()
    );
    assert_eq!(
        table.strata[0].classes[2],
        MinimalClass::parse("W1+W2").unwrap()
    );
    println!("criterion 4 (classification, g4_6): PASS");
}

#[test]
fn criterion_5_theorem_45_2() {
    let report = suite();
    let items = checks_with_prefix(report, "thm-45-2");
    assert!(items.len() >= 11);
    for check in &items {
        assert!(
            matches!(check.status, CheckStatus::Pass),
            "{} failed",
            check.id
        );
    }
    // The derived oracle, frozen: completing the square shows
    // tau/2 - 2/3 = (a + (b+1)/2)^2 + 3/4 (b + 1/3)^2 with minimum 2/3 at
    // (-1/3, -1/3).
    let frame = standard_frame();
    let alg = catalog::g4_5();
    let conn = levi_civita(&alg, &frame);
    let bundle = ricci_and_scalars(&riemann(&conn, &alg, &frame), &frame);
    let half_tau = bundle.tau.scale(&rat(1, 2));
    let s1 = poly("a + 1/2*b + 1/2");
    let s2 = poly("b + 1/3");
    assert_eq!(
        &half_tau - &poly("2/3"),
        &(&s1 * &s1) + &(&s2 * &s2).scale(&rat(3, 4))
    );
    assert_eq!(
        half_tau.eval(&assignment(rat(-1, 3), rat(-1, 3))).unwrap(),
        rat(2, 3)
    );
    // 100-point grid positivity off the excluded axes.
    let mut count = 0;
    for an in -5i64..=5 {
        for bn in -5i64..=5 {
            if an == 0 || bn == 0 {
                continue;
            }
            let v = bundle.tau.eval(&assignment(rat_int(an), rat_int(bn))).unwrap();
            assert_eq!(Sign::of(&v), Sign::Positive, "tau at ({an}, {bn})");
            count += 1;
        }
    }
    assert_eq!(count, 100);
    println!("criterion 5 (theorem items, g4_5): PASS");
}

#[test]
fn criterion_6_theorem_46_2() {
    let report = suite();
    let items = checks_with_prefix(report, "thm-46-2");
    assert!(items.len() >= 11);
    for check in &items {
        assert!(
            matches!(check.status, CheckStatus::Pass),
            "{} failed",
            check.id
        );
    }
    // Direct assertions for the criterion's named facts.
    let frame = standard_frame();
    let alg = catalog::g4_6();
    let t = structural_tensors(&alg, &frame).unwrap();
    assert!(t.nijenhuis[2].is_zero(), "N3 vanishes identically");
    let bundle = ricci_and_scalars(&riemann(&t.connection, &alg, &frame), &frame);
    assert_eq!(bundle.r.get(&[1, 2, 1, 2]), &poly("b^2 + 1"));
    assert_eq!(bundle.tau.normalized(), poly("a^2 + 2*a*b + 3*b^2 - 1"));
    assert!(bundle.tau_star[0].is_zero() && bundle.tau_star[1].is_zero());
    assert_eq!(bundle.tau_star[2].normalized(), poly("a + 2*b"));
    assert_eq!(
        bundle.tau_star_star[0].normalized(),
        poly("a*b + b^2 - 1")
    );
    assert_eq!(bundle.tau_star_star[0], bundle.tau_star_star[1]);
    println!("criterion 6 (theorem items, g4_6): PASS");
}

#[test]
fn criterion_7_structural_property_suites() {
    let frame = standard_frame();
    for alg in [catalog::g4_5(), catalog::g4_6()] {
        let t = structural_tensors(&alg, &frame).unwrap();
        assert!(tid::torsion_free(&t.connection, &alg));
        assert!(tid::metric_compatible(&t.connection, &frame));
        for alpha in 1..=3 {
            assert!(tid::f_symmetries(&t.f[alpha - 1], &frame, alpha));
            assert!(tid::n_symmetries(&t.nijenhuis[alpha - 1], &frame, alpha));
        }
        for (a, b, g) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            assert!(tid::f_cyclic_relation(&t.f, &frame, a, b, g));
        }
        let r = riemann(&t.connection, &alg, &frame);
        assert!(rid::r_properties(&r));
        assert!(rid::block_symmetry(&r));
    }
    // Frame identities (quaternionic relations, compatibility, associated
    // metrics) are asserted inside the constructor.
    let _ = standard_frame();
    println!("criterion 7 (structural property suites): PASS");
}

#[test]
fn criterion_8_classification_engine_self_consistency() {
    let frame = standard_frame();
    let subs = all_class_subspaces(&frame).unwrap();

    // Direct-sum dimensions.
    assert_eq!(subs[0].admissible.dim(), 8);
    assert_eq!(
        subs[0].bases.iter().map(Vec::len).sum::<usize>(),
        subs[0].admissible.dim()
    );
    for s in &subs[1..] {
        assert_eq!(s.admissible.dim(), 16);
        assert_eq!(s.bases.iter().map(Vec::len).sum::<usize>(), 16);
    }

    // Projector algebra, exactly.
    for s in &subs {
        let m = s.admissible.dim();
        let id = RatMatrix::identity(m);
        let mut sum = RatMatrix::zeros(m, m);
        for (i, p) in s.projectors.iter().enumerate() {
            assert_eq!(p.mul(p), *p, "P^2 = P");
            for (j, q) in s.projectors.iter().enumerate() {
                if i != j {
                    assert!(p.mul(q).is_zero(), "P_i P_j = 0");
                }
            }
            sum = RatMatrix::from_fn(m, m, |r, c| sum.at(r, c) + p.at(r, c));
        }
        assert_eq!(sum, id, "sum of projectors is the identity");
    }

    // Reconstruction and the 20-point symbolic-vs-direct oracle.
    for alg in [catalog::g4_5(), catalog::g4_6()] {
        let tensors = structural_tensors(&alg, &frame).unwrap();
        let reports = class_reports(&alg, &frame).unwrap();
        for alpha in 1..=3usize {
            let report = decompose(&tensors.f[alpha - 1], &subs[alpha - 1]).unwrap();
            let mut sum = hnlab_core::tensorcalc::ComponentTensor::zeros(alg.vars(), 3);
            for comp in &report.components {
                sum = sum.add(&comp.tensor);
            }
            assert_eq!(sum, tensors.f[alpha - 1], "components reconstruct F");
        }

        let mut state: u64 = 0x243f6a8885a308d3;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 17) as i64 - 8
        };
        let mut checked = 0;
        while checked < 20 {
            let (an, ad, bn, bd) = (next(), next().abs() + 1, next(), next().abs() + 1);
            let a = rat(an, ad);
            let b = rat(bn, bd);
            let asgn = assignment(a.clone(), b.clone());
            if alg.check_constraints(&asgn).is_err() {
                continue;
            }
            for alpha in 1..=3usize {
                let f_at = tensors.f[alpha - 1].eval(&asgn).unwrap();
                let direct = decompose(&f_at, &subs[alpha - 1]).unwrap().minimal;
                let symbolic = reports[alpha - 1].minimal_at(&asgn).unwrap();
                assert_eq!(direct, symbolic, "{} alpha={alpha} at ({a}, {b})", alg.name());
            }
            checked += 1;
        }
    }
    // The admissible spaces really are cut out by the symmetry constraints.
    for alpha in 1..=3 {
        assert!(admissible_space(&frame, alpha).unwrap().dim() > 0);
    }
    println!("criterion 8 (classification engine self-consistency): PASS");
}

#[test]
fn criterion_9_verification_suite_and_json_schema() {
    // verify-paper semantics: at least 120 pinned checks, zero failures;
    // the CLI exit codes themselves are exercised in the CLI crate's
    // integration tests.
    let report = suite();
    assert!(report.total() >= 120, "only {} checks", report.total());
    assert_eq!(report.failed(), 0);
    assert_eq!(report.discrepancies().len(), 4);

    // JSON golden file: byte-stable schema and lossless round-trip.
    let current = analyze_standard(&catalog::g4_5(), None).unwrap();
    let golden_text = include_str!("data/g4_5_symbolic.json");
    let golden: serde_json::Value = serde_json::from_str(golden_text).unwrap();
    let now: serde_json::Value = serde_json::from_str(&current.to_json()).unwrap();
    assert_eq!(now, golden, "symbolic g4_5 JSON drifted from the golden file");
    let reparsed = AnalysisReport::from_json(golden_text).unwrap();
    assert_eq!(reparsed, current, "JSON round-trip is lossless");
    // Top-level key order is part of the schema; serde_json's Value
    // alphabetizes maps, so check the serialized text directly.
    let expected_keys = [
        "algebra",
        "params",
        "connection",
        "F",
        "theta",
        "nijenhuis",
        "riemann",
        "ricci",
        "scalars",
        "sectional",
        "classes",
        "discrepancies",
    ];
    assert_eq!(golden.as_object().unwrap().len(), expected_keys.len());
    let mut last = 0;
    for key in expected_keys {
        let needle = format!("\n  \"{key}\":");
        let pos = golden_text
            .find(&needle)
            .unwrap_or_else(|| panic!("top-level key `{key}` missing"));
        assert!(pos > last || last == 0, "key `{key}` out of order");
        last = pos;
    }
    println!("criterion 9 (verification suite and JSON schema): PASS");
}
