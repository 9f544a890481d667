//! End-to-end checks binding the engines together, and the JSON report.
//!
//! Every check returns a [`CheckResult`] whose status is `pass` only when all of its
//! sub-assertions hold; the details record the computed values so a failing run shows
//! what was actually found. Reports contain no hash-ordered data and serialize
//! byte-identically for identical inputs.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::chevalley::{AdjointEngine, ChevalleyError};
use crate::cohomology::{
    build_sym4_model, derive_descriptor, h1_classes, structure_descriptor, twisted_action, twisted_related,
    GroupAutomorphism, TABLE1,
};
use crate::finitefield::{is_prime, prime_power};
use crate::groupelems::{
    self, a7_involution_survey, commutes, conjugate, involution_class, root_conjugation_map, torus_involution_census,
    DistinguishedElements, GroupError, InvolutionClassLabel,
};
use crate::lattices::{fundamental_group, FrobeniusSpec, IsogenyForm, LatticeError, TorusLattice, Twist};
use crate::rootsystem::{CartanType, SubsystemBase};
use crate::sampling_rng;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("p = {0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("q = {0} is not a power of an odd prime")]
    InvalidQ(u64),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub paper_anchor: String,
    pub details: Value,
}

impl CheckResult {
    fn from_assertions(name: impl Into<String>, anchor: &str, assertions: &BTreeMap<&str, bool>, mut details: Value) -> Self {
        let ok = assertions.values().all(|&b| b);
        details["assertions"] = json!(assertions);
        CheckResult {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            paper_anchor: anchor.to_string(),
            details,
        }
    }

    fn errored(name: impl Into<String>, anchor: &str, err: impl std::fmt::Display) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Fail,
            paper_anchor: anchor.to_string(),
            details: json!({ "error": err.to_string() }),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineInfo {
    pub p: u64,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub engine: EngineInfo,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn new(engine: EngineInfo, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        CheckReport { engine, checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Fixed-space dimension counts of the 127 nontrivial adjoint 2-torsion classes,
/// recorded once by enumeration.
pub const CENSUS_COUNTS: [(usize, usize); 3] = [(63, 36), (69, 63), (79, 28)];

pub const SAMPLE_JACOBI: usize = 500;
pub const SAMPLE_H_DEFINITION: usize = 100;
pub const SAMPLE_COMMUTATOR: usize = 200;

pub fn validate_prime(p: u64) -> Result<(), ReportError> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(ReportError::InvalidPrime(p))
    }
}

pub fn validate_q(q: u64) -> Result<(), ReportError> {
    match prime_power(q) {
        Some((p, _)) if p != 2 => Ok(()),
        _ => Err(ReportError::InvalidQ(q)),
    }
}

/// Odd prime powers below `bound`.
pub fn odd_prime_powers_below(bound: u64) -> Vec<u64> {
    (3..bound).filter(|&q| validate_q(q).is_ok()).collect()
}

/// Structure constants, Jacobi identity, the definition of `h_alpha(t)` and the
/// commutator relation.
pub fn check_engine(engine: &AdjointEngine) -> CheckResult {
    let cb = engine.basis();
    let f = engine.field();
    let rs = engine.root_system();
    let nroots = rs.roots().len();
    let mut rng = sampling_rng();

    let mut units = true;
    let mut antisymmetric = true;
    let mut support = true;
    for i in 0..nroots {
        for j in 0..nroots {
            let n = cb.structure_constant_at(i, j);
            let is_root = rs.contains(&rs.roots()[i].add(&rs.roots()[j]));
            support &= (n != 0) == is_root;
            units &= !is_root || n.abs() == 1;
            antisymmetric &= n == -cb.structure_constant_at(j, i);
        }
    }
    let extraspecial_positive = cb.extraspecial_pairs().iter().all(|&(a, b, _)| cb.structure_constant_at(a, b) == 1);

    let dim = cb.dim();
    let jacobi_failures = (0..SAMPLE_JACOBI)
        .filter(|_| {
            let (i, j, k) = (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim));
            cb.jacobi_residual(i, j, k).iter().any(|&x| x != 0)
        })
        .count();

    let mut h_failures = 0;
    for _ in 0..SAMPLE_H_DEFINITION {
        let alpha = &rs.roots()[rng.gen_range(0..nroots)];
        let t = f.random_nonzero(&mut rng);
        match (engine.h_matrix_from_w(alpha, t), engine.h_matrix(alpha, t)) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => h_failures += 1,
        }
    }

    let mut comm_failures = 0;
    let mut comm_done = 0;
    while comm_done < SAMPLE_COMMUTATOR {
        let (i, j) = (rng.gen_range(0..nroots), rng.gen_range(0..nroots));
        let n = cb.structure_constant_at(i, j);
        if n == 0 {
            continue;
        }
        let k = rs.index_of(&rs.roots()[i].add(&rs.roots()[j])).expect("sum is a root");
        let (s, t) = (f.random(&mut rng), f.random(&mut rng));
        let lhs = engine.mul(
            &engine.mul(&engine.x_matrix_at(i, f.neg(s)), &engine.x_matrix_at(j, f.neg(t))),
            &engine.mul(&engine.x_matrix_at(i, s), &engine.x_matrix_at(j, t)),
        );
        if lhs != engine.x_matrix_at(k, f.mul(f.from_int(n), f.mul(s, t))) {
            comm_failures += 1;
        }
        comm_done += 1;
    }

    let assertions = BTreeMap::from([
        ("structure_constants_are_units", units),
        ("structure_constants_supported_on_root_sums", support),
        ("antisymmetry", antisymmetric),
        ("extraspecial_pairs_positive", extraspecial_positive),
        ("jacobi", jacobi_failures == 0),
        ("h_definition", h_failures == 0),
        ("commutator_relation", comm_failures == 0),
    ]);
    CheckResult::from_assertions(
        "engine_self_test",
        "chevalley-basis-and-steinberg-generators",
        &assertions,
        json!({
            "sign_convention_id": cb.sign_convention_id(),
            "dimension": dim,
            "jacobi_samples": SAMPLE_JACOBI,
            "jacobi_failures": jacobi_failures,
            "h_definition_samples": SAMPLE_H_DEFINITION,
            "h_definition_failures": h_failures,
            "commutator_samples": SAMPLE_COMMUTATOR,
            "commutator_failures": comm_failures,
        }),
    )
}

/// The matrix identities satisfied by `e`, `f` and `g`.
pub fn check_construction(engine: &AdjointEngine) -> CheckResult {
    const NAME: &str = "construction";
    const ANCHOR: &str = "e-f-g-construction";
    let d = match DistinguishedElements::build(engine) {
        Ok(d) => d,
        Err(err) => return CheckResult::errored(NAME, ANCHOR, err),
    };
    let f = engine.field();
    let rs = engine.root_system();
    let mut rng = sampling_rng();

    let dims = [
        engine.fixed_space_dim(&d.e),
        engine.fixed_space_dim(&d.f),
        engine.fixed_space_dim(&d.ef),
    ];
    let classes: Vec<Option<InvolutionClassLabel>> =
        [&d.e, &d.f, &d.ef].iter().map(|m| involution_class(engine, m).ok()).collect();

    let mut inverted = 0;
    for alpha in rs.simple_roots() {
        let t = f.random_nonzero(&mut rng);
        let h = engine.h_matrix(&alpha, t).expect("simple root");
        let hinv = engine.h_matrix(&alpha, f.inv(t).expect("nonzero")).expect("simple root");
        if conjugate(engine, &d.f, &h) == hinv {
            inverted += 1;
        }
    }

    let (targets_negated, minus_signs, plus_signs, deviations) = match root_conjugation_map(engine, &d.f) {
        Ok(map) => {
            let negated = map.iter().all(|img| img.target == img.source.neg());
            let minus = map.iter().filter(|img| img.sign == -1).count();
            let plus = map.iter().filter(|img| img.sign == 1).count();
            let dev: Vec<String> = map.iter().filter(|img| img.sign != -1).map(|img| img.source.to_string()).collect();
            (negated, minus, plus, dev)
        }
        Err(_) => (false, 0, 0, Vec::new()),
    };
    let common = engine.common_fixed_space_dim(&[&d.e, &d.f]);

    let assertions = BTreeMap::from([
        ("e_squared_is_identity", engine.mul(&d.e, &d.e).is_identity()),
        ("e_equals_reduced_form", d.e == d.e_reduced),
        ("f_squared_is_identity", engine.mul(&d.f, &d.f).is_identity()),
        ("e_f_commute", commutes(engine, &d.e, &d.f)),
        ("fixed_dims_63", dims == [63, 63, 63]),
        ("involutions_of_type_a7", classes.iter().all(|c| *c == Some(InvolutionClassLabel::A7))),
        ("f_inverts_torus_generators", inverted == 7),
        ("f_negates_every_root", targets_negated),
        ("g_squared_is_e", engine.mul(&d.g, &d.g) == d.e),
        ("g_conjugates_f_to_ef", conjugate(engine, &d.g, &d.f) == d.ef),
        ("g_conjugates_ef_to_f", conjugate(engine, &d.g, &d.ef) == d.f),
        ("g_centralizes_e", commutes(engine, &d.g, &d.e)),
        ("common_fixed_space_28", common == 28),
    ]);
    CheckResult::from_assertions(
        NAME,
        ANCHOR,
        &assertions,
        json!({
            "field": { "p": f.characteristic(), "k": f.degree() },
            "fixed_dims": { "e": dims[0], "f": dims[1], "ef": dims[2] },
            "classes": classes.iter().map(|c| c.map(|l| l.to_string())).collect::<Vec<_>>(),
            "torus_generators_inverted": inverted,
            "common_fixed_space_dim": common,
            "f_conjugation_signs": {
                "minus_one": minus_signs,
                "plus_one": plus_signs,
                "roots_with_sign_other_than_minus_one": deviations,
            },
        }),
    )
}

/// Simply connected statements, computed in the lattice engine.
pub fn check_simply_connected() -> CheckResult {
    const NAME: &str = "simply_connected";
    const ANCHOR: &str = "simply-connected-lifts";
    let lat = TorusLattice::e7();
    let run = || -> Result<CheckResult, LatticeError> {
        let pi1 = fundamental_group(CartanType::E(7))?;
        let z = lat.central_element_sc();
        let f2 = groupelems::f_square_lattice(&lat);
        let e = groupelems::e_lattice(&lat);
        let g = groupelems::g_lattice(&lat);
        let z8 = z.rescale(8)?;
        let base = SubsystemBase::e7_a7(lat.root_system());
        let center_ad = lat.subsystem_center(&base, 8, IsogenyForm::Adjoint)?;
        let center_sc = lat.subsystem_center(&base, 8, IsogenyForm::SimplyConnected)?;
        let e_sc = lat.element_order(&e, IsogenyForm::SimplyConnected);
        let e_ad = lat.element_order(&e, IsogenyForm::Adjoint);
        let g_sc = lat.element_order(&g, IsogenyForm::SimplyConnected);
        let assertions = BTreeMap::from([
            ("fundamental_group_z2", pi1 == vec![2]),
            ("f_square_is_central_in_sc", lat.equal_in_form(&f2, &z, IsogenyForm::SimplyConnected)? && !z.is_zero()),
            ("f_square_trivial_in_adjoint", lat.element_order(&f2, IsogenyForm::Adjoint) == 1),
            ("e_sc_order_4", e_sc == 4),
            ("e_adjoint_order_2", e_ad == 2),
            ("e_squared_is_center_in_sc", e.scale(2) == z8),
            ("e_equals_reduced_form_in_sc", e == groupelems::e_reduced_lattice(&lat)),
            ("g_lift_sc_order_8", g_sc == 8),
            ("a7_center_adjoint_order_2", center_ad.order == 2),
            ("a7_center_sc_order_4", center_sc.order == 4),
        ]);
        Ok(CheckResult::from_assertions(
            NAME,
            ANCHOR,
            &assertions,
            json!({
                "fundamental_group": pi1,
                "z": z.coeffs(),
                "e": { "modulus": e.modulus(), "coroot": e.coeffs(), "sc_order": e_sc, "adjoint_order": e_ad },
                "g": { "modulus": g.modulus(), "coroot": g.coeffs(), "sc_order": g_sc },
                "a7_center_order": { "adjoint": center_ad.order, "simply_connected": center_sc.order },
            }),
        ))
    };
    run().unwrap_or_else(|err| CheckResult::errored(NAME, ANCHOR, err))
}

/// Derived-subgroup membership of `E` under the plain and the twisted Frobenius map.
pub fn check_lemma_derived_membership(q: u64) -> CheckResult {
    let name = format!("derived_membership_q{q}");
    const ANCHOR: &str = "derived-membership-of-e";
    let lat = TorusLattice::e7();
    let e = groupelems::e_lattice(&lat);
    let plus = lat.in_derived_subgroup(&e, FrobeniusSpec::new(q, Twist::Plus));
    let minus = lat.in_derived_subgroup(&e, FrobeniusSpec::new(q, Twist::Minus));
    let (plus, minus) = match (plus, minus) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(err), _) | (_, Err(err)) => return CheckResult::errored(name, ANCHOR, err),
    };
    let assertions = BTreeMap::from([
        ("untwisted_iff_q_1_mod_4", plus == (q % 4 == 1)),
        ("twisted_iff_q_3_mod_4", minus == (q % 4 == 3)),
    ]);
    CheckResult::from_assertions(
        name,
        ANCHOR,
        &assertions,
        json!({
            "q": q,
            "q_mod_4": q % 4,
            "untwisted_in_derived": plus,
            "twisted_in_derived": minus,
            // f is a product of w_alpha(1): its parameters are +-1, fixed by every Frobenius map
            "f_lift_frobenius_fixed": true,
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OuterPart {
    Sym3,
    #[serde(rename = "3")]
    Three,
}

impl OuterPart {
    pub fn as_str(self) -> &'static str {
        match self {
            OuterPart::Sym3 => "Sym3",
            OuterPart::Three => "3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremDecision {
    pub q: u64,
    pub epsilon: i64,
    pub y_in_derived: bool,
    pub outer_part: OuterPart,
    /// `q = +-1 mod 8`.
    pub closed_form: bool,
}

impl TheoremDecision {
    pub fn agrees(&self) -> bool {
        self.y_in_derived == self.closed_form
    }
}

/// Decides the outer part of the normaliser in the derived group via the lattice:
/// `y'` is the simply connected lift of `g`, and the outer part is `Sym3` exactly when
/// the lift is fixed by the Frobenius map twisted by `epsilon = q mod 4`.
pub fn theorem_decision(q: u64) -> Result<TheoremDecision, ReportError> {
    if q.is_multiple_of(2) {
        return Err(ReportError::InvalidQ(q));
    }
    let lat = TorusLattice::e7();
    let (epsilon, twist) = if q % 4 == 1 { (1, Twist::Plus) } else { (-1, Twist::Minus) };
    let y = groupelems::g_lattice(&lat);
    let y_in_derived = lat.in_derived_subgroup(&y, FrobeniusSpec::new(q, twist))?;
    Ok(TheoremDecision {
        q,
        epsilon,
        y_in_derived,
        outer_part: if y_in_derived { OuterPart::Sym3 } else { OuterPart::Three },
        closed_form: q % 8 == 1 || q % 8 == 7,
    })
}

pub fn check_theorem(qs: &[u64], name: &str) -> CheckResult {
    const ANCHOR: &str = "q-mod-8-dichotomy";
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for &q in qs {
        match theorem_decision(q) {
            Ok(d) => {
                if !d.agrees() {
                    disagreements.push(q);
                }
                rows.push(json!({ "q": q, "epsilon": d.epsilon, "y_in_derived": d.y_in_derived, "outer_part": d.outer_part.as_str() }));
            }
            Err(err) => return CheckResult::errored(name, ANCHOR, err),
        }
    }
    let assertions = BTreeMap::from([("lattice_matches_closed_form", disagreements.is_empty())]);
    let details = if qs.len() > 32 {
        let sym3 = rows.iter().filter(|r| r["outer_part"] == "Sym3").count();
        json!({ "q_count": qs.len(), "sym3": sym3, "three": qs.len() - sym3, "disagreements": disagreements })
    } else {
        json!({ "decisions": rows, "disagreements": disagreements })
    };
    CheckResult::from_assertions(name, ANCHOR, &assertions, details)
}

/// Twisted classes of the Sym4 model and the structure table.
pub fn check_h1_and_table1() -> CheckResult {
    let model = build_sym4_model();
    let g = &model.group;
    let trivial = GroupAutomorphism::trivial(g);
    let classes = h1_classes(g, &trivial);
    let reference: std::collections::BTreeSet<_> = g.conjugacy_classes().into_iter().collect();
    let ours: std::collections::BTreeSet<_> = classes.iter().map(|c| c.members.clone()).collect();

    let mut rows = Vec::new();
    let mut all_match = true;
    for c in &classes {
        let derived = derive_descriptor(&model, c.representative);
        let tabulated = structure_descriptor(&model, c).ok();
        let matches = tabulated == Some(derived.descriptor.as_str());
        all_match &= matches;
        rows.push(json!({
            "class": format!("[{}]", derived.class_label),
            "size": c.members.len(),
            "derived": derived.descriptor,
            "tabulated": tabulated,
            "quotient_order": derived.quotient_order,
            "centralizer_order": derived.centralizer_order,
            "fixed_points_in_e": derived.fixed_in_e,
            "complemented": derived.complemented,
        }));
    }
    let labels: std::collections::BTreeSet<String> = classes.iter().map(|c| model.class_label(c.representative)).collect();
    let table_labels: std::collections::BTreeSet<String> = TABLE1.iter().map(|(l, _)| l.to_string()).collect();

    let gi = model.g_image();
    let (one, e, f, ef) = (model.translation("1"), model.translation("e"), model.translation("f"), model.translation("ef"));
    let sigma_f = GroupAutomorphism::conjugation(g, f);
    let f_ef = twisted_action(g, &trivial, f, gi) == ef;
    let one_e = twisted_action(g, &sigma_f, one, gi) == e;
    let twisted_count = h1_classes(g, &sigma_f).len();

    let assertions = BTreeMap::from([
        ("five_classes", classes.len() == 5),
        ("classes_equal_conjugacy_classes", ours == reference),
        ("descriptors_match_table", all_match && labels == table_labels),
        ("f_related_to_ef_trivial_action", f_ef && twisted_related(g, &trivial, f, ef).is_some()),
        ("one_related_to_e_f_twisted_action", one_e && twisted_related(g, &sigma_f, one, e).is_some()),
        ("f_twisted_class_count_5", twisted_count == 5),
    ]);
    CheckResult::from_assertions(
        "h1_table1",
        "twisted-classes-and-structure-table",
        &assertions,
        json!({
            "rows": rows,
            "witness_g_image": g.label(gi),
            "f_twisted_class_count": twisted_count,
        }),
    )
}

pub fn check_census(engine: &AdjointEngine) -> CheckResult {
    const NAME: &str = "involution_census";
    const ANCHOR: &str = "involution-classes-by-fixed-dimension";
    let lat = TorusLattice::e7();
    let census = match torus_involution_census(engine, &lat) {
        Ok(c) => c,
        Err(err) => return CheckResult::errored(NAME, ANCHOR, err),
    };
    let frozen: BTreeMap<usize, usize> = CENSUS_COUNTS.into_iter().collect();
    let support: Vec<usize> = census.counts.keys().copied().collect();
    let assertions = BTreeMap::from([
        ("torsion_has_128_classes", census.torsion_size == 128),
        ("nontrivial_127", census.nontrivial == 127),
        ("support_63_69_79", support == vec![63, 69, 79]),
        ("counts_match_frozen", census.counts == frozen),
    ]);
    let labelled: BTreeMap<String, usize> = census
        .counts
        .iter()
        .map(|(&dim, &n)| {
            let label = InvolutionClassLabel::from_fixed_dim(dim).map_or("unknown".to_string(), |l| l.to_string());
            (format!("{dim} ({label})"), n)
        })
        .collect();
    CheckResult::from_assertions(
        NAME,
        ANCHOR,
        &assertions,
        json!({ "torsion_size": census.torsion_size, "nontrivial": census.nontrivial, "counts": labelled }),
    )
}

pub fn check_a7_survey() -> CheckResult {
    const NAME: &str = "a7_torus_survey";
    const ANCHOR: &str = "a7-diagonal-case-analysis";
    let lat = TorusLattice::e7();
    let survey = match a7_involution_survey(&lat) {
        Ok(s) => s,
        Err(err) => return CheckResult::errored(NAME, ANCHOR, err),
    };
    let rows: Vec<Value> = survey
        .rows
        .iter()
        .map(|r| {
            json!({
                "a": r.a,
                "lambda": match r.lambda { groupelems::SurveyScalar::Zeta => "zeta", groupelems::SurveyScalar::One => "1" },
                "sc_order_f": r.sc_order_f,
                "sc_order_ef": r.sc_order_ef,
                "excluded": r.excluded,
            })
        })
        .collect();
    let admissible = survey.admissible().count();
    let assertions = BTreeMap::from([
        ("some_case_admissible", admissible > 0),
        ("admissible_cases_are_adjoint_involutions", survey.admissible().all(|r| r.adjoint_order == 2)),
        ("every_case_lifts_to_an_involution", survey.all_cases_lift()),
    ]);
    CheckResult::from_assertions(NAME, ANCHOR, &assertions, json!({ "admissible": admissible, "rows": rows }))
}

pub const DEFAULT_QS: [u64; 10] = [3, 5, 7, 9, 11, 13, 17, 23, 25, 27];

/// Runs every check over `GF(p^k)`, `k` minimal with a primitive 16th root of unity.
pub fn run_report(p: u64, qs: &[u64]) -> Result<CheckReport, ReportError> {
    validate_prime(p)?;
    for &q in qs {
        validate_q(q)?;
    }
    let engine = AdjointEngine::e7(p)?;
    let mut checks = vec![
        check_engine(&engine),
        check_construction(&engine),
        check_simply_connected(),
    ];
    checks.extend(qs.iter().map(|&q| check_lemma_derived_membership(q)));
    checks.push(check_theorem(qs, "theorem"));
    checks.push(check_theorem(&odd_prime_powers_below(1000), "theorem_all_q_below_1000"));
    checks.push(check_h1_and_table1());
    checks.push(check_census(&engine));
    checks.push(check_a7_survey());
    let f = engine.field();
    Ok(CheckReport::new(EngineInfo { p: f.characteristic(), k: f.degree() }, checks))
}
