//! Acceptance suite: every release-gating property of the crate, one
//! test per criterion, each printing a single PASS/FAIL line.
//!
//! Run with `cargo test -p waring --test acceptance -- --nocapture` to
//! see the lines as they complete.

mod common;

use std::time::Instant;

use common::{hilbert_axiom_violations, kruskal_brute_force, mixed_pointset, random_pointset, rng};

use waring::algebra::{compose_tensor, scalar, Instance, Monomial, ProjPoint};
use waring::bench::{bench, Method};
use waring::error::Error;
use waring::gen::{gen_double_decomposition_fixture, gen_instance, Position};
use waring::hilbert::{cayley_bacharach, hilbert_profile, PointSet};
use waring::kruskal::{kruskal_rank_d, baseline_check};
use waring::pipeline::{identify, identify_with, validate_instance, VerdictKind};
use waring::position::{contained_in_cubic, FamilyObstruction};
use waring::terracini::{terracini_dimension, terracini_test};

fn report(criterion: usize, label: &str, violations: &[String], elapsed_s: f64) {
    let status = if violations.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "acceptance criterion {criterion} ({label}): {status} [{elapsed_s:.1}s]{}",
        if violations.is_empty() {
            String::new()
        } else {
            format!(" - {} violation(s), first: {}", violations.len(), violations[0])
        }
    );
    assert!(violations.is_empty(), "criterion {criterion}: {violations:?}");
}

/// Criterion 1: Hilbert-function axioms, the non-increasing first
/// difference, and the CB head/tail inequality over 300 random sets.
#[test]
fn criterion_1_hilbert_axioms() {
    let start = Instant::now();
    let mut violations = Vec::new();
    for seed in 0..300u64 {
        let mut r = rng(seed);
        let ell = 1 + (seed as usize) % 14;
        let z = if seed % 7 == 0 {
            mixed_pointset(&mut r, ell.max(3), seed)
        } else {
            random_pointset(&mut r, ell)
        };
        violations.extend(
            hilbert_axiom_violations(&z, &mut r)
                .into_iter()
                .map(|v| format!("seed {seed} (ell {}): {v}", z.len())),
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 60.0 {
        violations.push(format!("runtime {elapsed:.1}s exceeds the 60s target"));
    }
    report(1, "hilbert-axioms", &violations, elapsed);
}

/// Criterion 2: disjoint double decompositions of one form satisfy exact
/// composition agreement, CB(8) on the union, and Dh(9) > 0.
#[test]
fn criterion_2_disjoint_decomposition_fixtures() {
    let start = Instant::now();
    let mut violations = Vec::new();
    for seed in 0..20u64 {
        let (a, b, t) = match gen_double_decomposition_fixture(8, 5, seed) {
            Ok(out) => out,
            Err(e) => {
                violations.push(format!("seed {seed}: generation failed: {e}"));
                continue;
            }
        };
        if compose_tensor(&a) != t || compose_tensor(&b) != t {
            violations.push(format!("seed {seed}: compositions disagree"));
        }
        if a.points().iter().any(|p| b.points().contains(p)) {
            violations.push(format!("seed {seed}: supports are not disjoint"));
        }
        let z = PointSet::new(a.points().to_vec())
            .unwrap()
            .union(&PointSet::new(b.points().to_vec()).unwrap());
        if !cayley_bacharach(&z, 8) {
            violations.push(format!("seed {seed}: CB(8) fails on the union"));
        }
        if hilbert_profile(&z, None).dh_at(9) <= 0 {
            violations.push(format!("seed {seed}: Dh(9) is not positive"));
        }
    }
    report(2, "disjoint-decompositions", &violations, start.elapsed().as_secs_f64());
}

fn general_instances_d8() -> Vec<(u64, usize, Instance)> {
    (0..50u64)
        .map(|i| {
            let r = 5 + (i as usize) % 7;
            let seed = 20_000 + i;
            (seed, r, gen_instance(0, r, Position::General, seed, false).unwrap())
        })
        .collect()
}

/// Criterion 3: general supports in degree 8 attain the expected
/// Terracini dimension 3r - 1 and the pipeline certifies them.
#[test]
fn criterion_3_terracini_generic_fullness() {
    let start = Instant::now();
    let mut violations = Vec::new();
    for (seed, r, inst) in general_instances_d8() {
        let rep = terracini_dimension(&inst);
        if !rep.full || rep.projective_dimension != (3 * r - 1) as i64 {
            violations.push(format!(
                "seed {seed} r {r}: projective dimension {} != {}",
                rep.projective_dimension,
                3 * r - 1
            ));
        }
        match identify(&inst) {
            Ok(v) if v.kind == VerdictKind::IdentifiableTerracini => {}
            Ok(v) => violations.push(format!("seed {seed} r {r}: verdict {:?}", v.kind)),
            Err(e) => violations.push(format!("seed {seed} r {r}: {e}")),
        }
    }
    report(3, "terracini-generic-fullness", &violations, start.elapsed().as_secs_f64());
}

/// Criterion 4: collinear (>= 5) and conic (>= 9) overloads force a
/// deficient Terracini space and an Inconclusive verdict carrying the
/// matching obstruction.
#[test]
fn criterion_4_obstruction_deficiency() {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut check = |seed: u64, inst: &Instance, want_collinear: bool| {
        match terracini_test(inst) {
            Ok(false) => {}
            Ok(true) => violations.push(format!("seed {seed}: Terracini test passed unexpectedly")),
            Err(e) => violations.push(format!("seed {seed}: {e}")),
        }
        match identify_with(inst, true) {
            Ok(v) => {
                if v.kind != VerdictKind::Inconclusive {
                    violations.push(format!("seed {seed}: verdict {:?}", v.kind));
                }
                let ok = matches!(
                    (&v.obstruction, want_collinear),
                    (Some(FamilyObstruction::Collinear { .. }), true)
                        | (Some(FamilyObstruction::Conic { .. }), false)
                );
                if !ok {
                    violations.push(format!(
                        "seed {seed}: obstruction {:?} does not match the construction",
                        v.obstruction
                    ));
                }
            }
            Err(e) => violations.push(format!("seed {seed}: {e}")),
        }
    };
    for i in 0..50u64 {
        let r = 5 + (i as usize) % 7;
        let seed = 30_000 + i;
        let inst = gen_instance(0, r, Position::Collinear(5), seed, false).unwrap();
        check(seed, &inst, true);
    }
    for i in 0..50u64 {
        let r = 9 + (i as usize) % 3;
        let seed = 40_000 + i;
        let inst = gen_instance(0, r, Position::Conic(9), seed, false).unwrap();
        check(seed, &inst, false);
    }
    report(4, "obstruction-deficiency", &violations, start.elapsed().as_secs_f64());
}

/// Criterion 5: the Kruskal baseline certifies the criterion-3 instances
/// and never disagrees in the direction "baseline certifies, Terracini
/// deficient".
#[test]
fn criterion_5_baseline_agreement() {
    let start = Instant::now();
    let mut violations = Vec::new();
    for (seed, r, inst) in general_instances_d8() {
        let baseline = match baseline_check(&inst) {
            Ok(b) => b,
            Err(e) => {
                violations.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        if !baseline.identifiable {
            violations.push(format!("seed {seed} r {r}: baseline failed to certify"));
        }
        if baseline.k2.k != 6.min(r) {
            violations.push(format!("seed {seed} r {r}: k2 = {} != {}", baseline.k2.k, 6.min(r)));
        }
        if !baseline.kn3_ok {
            violations.push(format!("seed {seed} r {r}: k3 below min(r, 9)"));
        }
        let terracini_full = terracini_dimension(&inst).full;
        if baseline.identifiable && !terracini_full {
            violations.push(format!(
                "seed {seed} r {r}: baseline certifies but Terracini is deficient"
            ));
        }
    }
    report(5, "baseline-agreement", &violations, start.elapsed().as_secs_f64());
}

/// Criterion 6: input validation rejects the documented shapes and the
/// small-rank shortcut fires exactly for r <= 4 + n.
#[test]
fn criterion_6_pipeline_boundaries() {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut blame = |cond: bool, msg: &str| {
        if !cond {
            violations.push(msg.to_string());
        }
    };

    let p = |a: i64, b: i64, c: i64| ProjPoint::new([a, b, c]).unwrap();
    let odd = Instance::new(7, vec![p(1, 0, 0)], vec![scalar(1)]).unwrap();
    blame(
        validate_instance(&odd) == Err(Error::UnsupportedDegree(7)),
        "degree 7 must be rejected as unsupported",
    );

    let too_long = Instance::new(
        10,
        (0..15).map(|t| p(1, t, t * t + 1)).collect(),
        vec![scalar(1); 15],
    )
    .unwrap();
    blame(
        matches!(validate_instance(&too_long), Err(Error::LengthOutOfRange { r: 15, bound: 14, .. })),
        "degree 10 with 15 points must exceed the range",
    );

    let zero = Instance::new(8, vec![p(1, 0, 0), p(0, 1, 0)], vec![scalar(1), scalar(0)]).unwrap();
    blame(
        validate_instance(&zero) == Err(Error::ZeroCoefficient { index: 1 }),
        "zero coefficients must be rejected",
    );

    // a single power is always certified by length
    let one = gen_instance(0, 1, Position::General, 9, false).unwrap();
    match identify(&one) {
        Ok(v) if v.kind == VerdictKind::IdentifiableSmallRank => {}
        other => violations.push(format!("r 1: expected small-rank, got {other:?}")),
    }

    // small-rank boundary at n = 0: r = 4 certifies by length, r = 5 does not
    for (n, small_r) in [(0usize, 4usize), (1, 5)] {
        let small = gen_instance(n, small_r, Position::General, 123 + n as u64, false).unwrap();
        match identify(&small) {
            Ok(v) if v.kind == VerdictKind::IdentifiableSmallRank => {}
            other => violations.push(format!("n {n} r {small_r}: expected small-rank, got {other:?}")),
        }
        let above = gen_instance(n, small_r + 1, Position::General, 321 + n as u64, false).unwrap();
        match identify(&above) {
            Ok(v) if v.kind == VerdictKind::IdentifiableSmallRank => {
                violations.push(format!("n {n} r {}: small-rank fired above the bound", small_r + 1))
            }
            Ok(_) => {}
            Err(e) => violations.push(format!("n {n} r {}: {e}", small_r + 1)),
        }
    }
    report(6, "pipeline-boundaries", &violations, start.elapsed().as_secs_f64());
}

/// Criterion 7: the cost comparison. At r = 11 every trial counts fewer
/// multiplications for the Terracini pipeline than for the Kruskal
/// baseline, and the fitted growth exponent of the baseline exceeds the
/// pipeline's by at least 1.
#[test]
fn criterion_7_cost_model_trend() {
    let start = Instant::now();
    let mut violations = Vec::new();
    let out = bench(&[0], &[8, 9, 10, 11], 5, 777).expect("bench run");

    for trial in 0..5usize {
        let find = |method: Method| {
            out.records
                .iter()
                .find(|rec| rec.r == 11 && rec.trial == trial && rec.method == method)
                .map(|rec| rec.mults)
        };
        match (find(Method::Terracini), find(Method::Kruskal)) {
            (Some(t), Some(k)) => {
                if t >= k {
                    violations.push(format!(
                        "trial {trial} at r=11: terracini {t} not below kruskal {k}"
                    ));
                }
            }
            _ => violations.push(format!("trial {trial} at r=11 missing records")),
        }
    }

    let slope_of = |method: Method| {
        out.fits
            .iter()
            .find(|f| f.method == method && f.n == 0)
            .and_then(|f| f.slope)
    };
    match (slope_of(Method::Terracini), slope_of(Method::Kruskal)) {
        (Some(t), Some(k)) => {
            if k - t < 1.0 {
                violations.push(format!(
                    "slope gap {:.2} below 1.0 (kruskal {k:.2}, terracini {t:.2})",
                    k - t
                ));
            }
        }
        _ => violations.push("missing slope fits".to_string()),
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 300.0 {
        violations.push(format!("runtime {elapsed:.1}s exceeds the 5 min target"));
    }
    report(7, "cost-model-trend", &violations, elapsed);
}

/// Criterion 8: the early-exit Kruskal rank equals exhaustive
/// enumeration on 102 seeded sets.
#[test]
fn criterion_8_kruskal_oracle_equivalence() {
    let start = Instant::now();
    let mut violations = Vec::new();
    for seed in 0..102u64 {
        let mut r = rng(50_000 + seed);
        let ell = 1 + (seed as usize) % 10;
        let z = mixed_pointset(&mut r, ell, seed);
        let d = 1 + (seed as usize) % 3;
        let fast = kruskal_rank_d(&z, d).k;
        let brute = kruskal_brute_force(&z, d);
        if fast != brute {
            violations.push(format!("seed {seed} ell {ell} d {d}: {fast} != {brute}"));
        }
    }
    report(8, "kruskal-oracle-equivalence", &violations, start.elapsed().as_secs_f64());
}

/// Criterion 9: twelve points of the cuspidal cubic produce the witness
/// x^3 - y^2 z and the first difference (1, 2, 3, 3, 3).
#[test]
fn criterion_9_cuspidal_fixture() {
    let start = Instant::now();
    let mut violations = Vec::new();
    let z = PointSet::new(
        (1..=12i64)
            .map(|t| ProjPoint::new([t * t, t * t * t, 1]).unwrap())
            .collect(),
    )
    .unwrap();
    let (yes, witness) = contained_in_cubic(&z);
    if !yes {
        violations.push("cubic containment not detected".to_string());
    }
    match witness {
        Some(w) => {
            let mut expected = vec![scalar(0); 10];
            expected[Monomial { exponents: [3, 0, 0] }.index()] = scalar(1);
            expected[Monomial { exponents: [0, 2, 1] }.index()] = scalar(-1);
            if w.coeffs() != &expected[..] {
                violations.push("witness is not proportional to x^3 - y^2 z".to_string());
            }
        }
        None => violations.push("no witness cubic".to_string()),
    }
    let profile = hilbert_profile(&z, None);
    if profile.dh() != [1, 2, 3, 3, 3] {
        violations.push(format!("Dh = {:?} != (1, 2, 3, 3, 3)", profile.dh()));
    }
    report(9, "cuspidal-fixture", &violations, start.elapsed().as_secs_f64());
}
