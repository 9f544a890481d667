//! Acceptance suite: one `PASS`/`FAIL` line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed; the process exits
//! non-zero when any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use chevkit::chevalley::AdjointEngine;
use chevkit::cohomology::{build_sym4_model, h1_classes, structure_descriptor, GroupAutomorphism, TABLE1};
use chevkit::groupelems::{self, torus_involution_census};
use chevkit::lattices::{fundamental_group, FrobeniusSpec, IsogenyForm, TorusLattice, Twist};
use chevkit::rootsystem::CartanType;
use chevkit::verification::{
    check_a7_survey, check_census, check_construction, check_engine, check_h1_and_table1,
    check_lemma_derived_membership, check_simply_connected, check_theorem, odd_prime_powers_below, theorem_decision,
    CheckResult, OuterPart, CENSUS_COUNTS,
};

type Outcome = Result<String, Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);

/// Collects the failing assertion names of a check, prefixed with `context`.
fn failures_of(check: &CheckResult, context: &str, failures: &mut Vec<String>) {
    if check.passed() {
        return;
    }
    if let Some(err) = check.details.get("error") {
        failures.push(format!("{context}{}: error {err}", check.name));
        return;
    }
    let failed: Vec<String> = check.details["assertions"]
        .as_object()
        .map(|m| m.iter().filter(|(_, v)| **v != true).map(|(k, _)| k.clone()).collect())
        .unwrap_or_default();
    failures.push(format!("{context}{}: {}", check.name, failed.join(", ")));
}

fn finish(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn engine_self_test() -> Outcome {
    let mut failures = Vec::new();
    match AdjointEngine::e7(17) {
        Ok(engine) => {
            let check = check_engine(&engine);
            failures_of(&check, "", &mut failures);
            if engine.dim() != 133 {
                failures.push(format!("adjoint dimension {}", engine.dim()));
            }
        }
        Err(err) => failures.push(format!("engine construction: {err}")),
    }
    finish(failures, "500 Jacobi triples, 100 h samples, 200 commutator pairs over GF(17)".into())
}

fn construction() -> Outcome {
    let mut failures = Vec::new();
    let mut fields = Vec::new();
    for p in [3, 5, 7, 17] {
        match AdjointEngine::e7(p) {
            Ok(engine) => {
                fields.push(engine.field().params().to_string());
                let check = check_construction(&engine);
                failures_of(&check, &format!("p={p} "), &mut failures);
                if check.details["common_fixed_space_dim"] != 28 {
                    failures.push(format!("p={p}: common fixed space {}", check.details["common_fixed_space_dim"]));
                }
            }
            Err(err) => failures.push(format!("p={p}: {err}")),
        }
    }
    finish(failures, format!("fields {}", fields.join(", ")))
}

fn simply_connected() -> Outcome {
    let mut failures = Vec::new();
    failures_of(&check_simply_connected(), "", &mut failures);
    let lat = TorusLattice::e7();
    if fundamental_group(CartanType::E(7)).ok() != Some(vec![2]) {
        failures.push("fundamental group is not Z/2".into());
    }
    let e = groupelems::e_lattice(&lat);
    let g = groupelems::g_lattice(&lat);
    let orders = (
        lat.element_order(&e, IsogenyForm::SimplyConnected),
        lat.element_order(&e, IsogenyForm::Adjoint),
        lat.element_order(&g, IsogenyForm::SimplyConnected),
    );
    if orders != (4, 2, 8) {
        failures.push(format!("orders (e sc, e ad, y' sc) = {orders:?}"));
    }
    finish(failures, "pi_1 = Z/2; e: sc 4, ad 2; y': sc 8; A7 center: ad 2, sc 4".into())
}

fn census() -> Outcome {
    let mut failures = Vec::new();
    match AdjointEngine::e7(17) {
        Ok(engine) => {
            failures_of(&check_census(&engine), "", &mut failures);
            match torus_involution_census(&engine, &TorusLattice::e7()) {
                Ok(c) => {
                    let frozen: BTreeMap<usize, usize> = CENSUS_COUNTS.into_iter().collect();
                    if c.nontrivial != 127 || c.counts != frozen {
                        failures.push(format!("census {} classes, counts {:?}", c.nontrivial, c.counts));
                    }
                }
                Err(err) => failures.push(format!("census: {err}")),
            }
        }
        Err(err) => failures.push(format!("engine: {err}")),
    }
    finish(failures, "127 classes; fixed dims 63:36, 69:63, 79:28".into())
}

fn h1_and_table() -> Outcome {
    let mut failures = Vec::new();
    failures_of(&check_h1_and_table1(), "", &mut failures);
    let model = build_sym4_model();
    let classes = h1_classes(&model.group, &GroupAutomorphism::trivial(&model.group));
    if classes.len() != 5 {
        failures.push(format!("{} classes", classes.len()));
    }
    for c in &classes {
        let label = model.class_label(c.representative);
        let expected = TABLE1.iter().find(|(l, _)| *l == label).map(|(_, d)| *d);
        let got = structure_descriptor(&model, c).ok();
        if expected.is_none() || got != expected {
            failures.push(format!("class [{label}]: {got:?} vs {expected:?}"));
        }
    }
    finish(failures, "5 classes, descriptors byte-exact, both witnesses found".into())
}

fn theorem() -> Outcome {
    let mut failures = Vec::new();
    let qs = odd_prime_powers_below(1000);
    failures_of(&check_theorem(&qs, "theorem_all_q_below_1000"), "", &mut failures);
    for &q in &qs {
        match theorem_decision(q) {
            Ok(d) => {
                let sym3 = q % 8 == 1 || q % 8 == 7;
                if (d.outer_part == OuterPart::Sym3) != sym3 {
                    failures.push(format!("q={q}: {}", d.outer_part.as_str()));
                }
            }
            Err(err) => failures.push(format!("q={q}: {err}")),
        }
    }
    let spots = [(3, "3"), (5, "3"), (7, "Sym3"), (9, "Sym3"), (17, "Sym3"), (23, "Sym3"), (25, "Sym3")];
    for (q, expected) in spots {
        match theorem_decision(q) {
            Ok(d) if d.outer_part.as_str() == expected => {}
            other => failures.push(format!("spot q={q}: {other:?}")),
        }
    }
    finish(failures, format!("{} odd prime powers below 1000 plus 7 spot rows", qs.len()))
}

fn lemma() -> Outcome {
    let mut failures = Vec::new();
    let lat = TorusLattice::e7();
    let e = groupelems::e_lattice(&lat);
    for q in [3, 5, 7, 9, 11, 13] {
        failures_of(&check_lemma_derived_membership(q), "", &mut failures);
        let plus = lat.in_derived_subgroup(&e, FrobeniusSpec::new(q, Twist::Plus));
        let minus = lat.in_derived_subgroup(&e, FrobeniusSpec::new(q, Twist::Minus));
        if plus != Ok(q % 4 == 1) || minus != Ok(q % 4 == 3) {
            failures.push(format!("q={q}: untwisted {plus:?}, twisted {minus:?}"));
        }
    }
    finish(failures, "q in {3,5,7,9,11,13}".into())
}

fn a7_survey() -> Outcome {
    let mut failures = Vec::new();
    let check = check_a7_survey();
    failures_of(&check, "", &mut failures);
    finish(failures, format!("{} admissible cases, each with an involution lift", check.details["admissible"]))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("engine self-test", engine_self_test),
        ("construction of e, f, g for p in {3, 5, 7, 17}", construction),
        ("simply connected side", simply_connected),
        ("involution census", census),
        ("twisted classes and structure table", h1_and_table),
        ("q mod 8 dichotomy for all odd q < 1000", theorem),
        ("derived membership of E and its twisted conjugate", lemma),
        ("A7 torus-level survey", a7_survey),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!("PASS  criterion {}: {name} ({summary}) [{secs:.2}s]", i + 1),
            Err(failures) => {
                failed += 1;
                println!("FAIL  criterion {}: {name} [{secs:.2}s]", i + 1);
                for f in failures {
                    println!("        {f}");
                }
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
