//! Words in the Steinberg generators and the distinguished elements `e`, `f`, `g`.
//!
//! `e` and `g` are torus elements written over the `A7` base
//! `J = (-alpha_0, alpha_1, alpha_3, alpha_4, alpha_5, alpha_6, alpha_7)`; `f` is a
//! product of `w`-elements for seven pairwise orthogonal roots. Every identity between
//! them is established by evaluating words in the matrix engine or by projecting torus
//! words to the lattice engine; words are never rewritten symbolically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chevalley::{AdjointEngine, AdjointMatrix, ChevalleyError};
use crate::finitefield::FieldElem;
use crate::lattices::{IsogenyForm, LatticeError, TorsionTorusElement, TorusLattice};
use crate::rootsystem::{Root, RootSystem, SubsystemBase};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("w and h generators need a nonzero parameter")]
    ZeroParameter,
    #[error("matrix is not a nontrivial involution")]
    NotAnInvolution,
    #[error("involution with fixed-space dimension {0} matches no known class")]
    UnexpectedFixedDim(usize),
    #[error("conjugate of x_{0}(1) is not a root element")]
    NotRootElement(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    XRoot,
    WRoot,
    HRoot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorToken {
    pub kind: TokenKind,
    pub root: Root,
    pub param: FieldElem,
}

impl GeneratorToken {
    pub fn x(root: Root, t: FieldElem) -> Self {
        GeneratorToken { kind: TokenKind::XRoot, root, param: t }
    }

    pub fn w(root: Root, t: FieldElem) -> Result<Self, GroupError> {
        if t.is_zero() {
            return Err(GroupError::ZeroParameter);
        }
        Ok(GeneratorToken { kind: TokenKind::WRoot, root, param: t })
    }

    pub fn h(root: Root, t: FieldElem) -> Result<Self, GroupError> {
        if t.is_zero() {
            return Err(GroupError::ZeroParameter);
        }
        Ok(GeneratorToken { kind: TokenKind::HRoot, root, param: t })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupWord {
    pub tokens: Vec<GeneratorToken>,
}

impl GroupWord {
    pub fn new(tokens: Vec<GeneratorToken>) -> Self {
        GroupWord { tokens }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        GroupWord { tokens }
    }

    pub fn split_at(&self, k: usize) -> (GroupWord, GroupWord) {
        let (a, b) = self.tokens.split_at(k);
        (GroupWord::new(a.to_vec()), GroupWord::new(b.to_vec()))
    }
}

pub fn token_matrix(token: &GeneratorToken, engine: &AdjointEngine) -> Result<AdjointMatrix, GroupError> {
    Ok(match token.kind {
        TokenKind::XRoot => engine.x_matrix(&token.root, token.param)?,
        TokenKind::WRoot => engine.w_matrix(&token.root, token.param)?,
        TokenKind::HRoot => engine.h_matrix(&token.root, token.param)?,
    })
}

/// Ordered product of the generator matrices.
pub fn evaluate(word: &GroupWord, engine: &AdjointEngine) -> Result<AdjointMatrix, GroupError> {
    let mut acc = engine.identity();
    for token in &word.tokens {
        acc = engine.mul(&acc, &token_matrix(token, engine)?);
    }
    Ok(acc)
}

/// The word `prod h_alpha(zeta_m^k)` for torus terms `(alpha, k)`.
pub fn h_word(engine: &AdjointEngine, terms: &[(Root, i64)], m: u64) -> Result<GroupWord, GroupError> {
    let zeta = engine.root_of_unity(m)?;
    let f = engine.field();
    let tokens = terms
        .iter()
        .map(|(r, k)| GeneratorToken::h(r.clone(), f.pow(zeta, k.rem_euclid(m as i64) as u64)))
        .collect::<Result<_, _>>()?;
    Ok(GroupWord::new(tokens))
}

/// Torus terms of `e = prod_i h_{beta_i}(zeta^i)` over `J`, `zeta` of order 8.
pub fn e_terms(rs: &RootSystem) -> Vec<(Root, i64)> {
    SubsystemBase::e7_a7(rs)
        .roots()
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i as i64 + 1))
        .collect()
}

/// Torus terms of `h_{a2}(-zeta^2) h_{a5}(zeta^2) h_{a7}(-zeta^2) h_{a6}(-1)`, modulus 8.
pub fn e_reduced_terms(rs: &RootSystem) -> Vec<(Root, i64)> {
    vec![
        (rs.simple_root(2), 6),
        (rs.simple_root(5), 2),
        (rs.simple_root(7), 6),
        (rs.simple_root(6), 4),
    ]
}

/// Torus terms of `g = diag(s, ..., s, -s)` in the `A7` torus, `s` of order 16:
/// `prod_i h_{beta_i}(t_1 ... t_i)` with `t_1 = ... = t_7 = s`.
pub fn g_terms(rs: &RootSystem) -> Vec<(Root, i64)> {
    e_terms(rs)
}

pub const E_MODULUS: u64 = 8;
pub const G_MODULUS: u64 = 16;

/// The seven pairwise orthogonal roots whose `w`-elements multiply to `f`.
pub fn f_roots(rs: &RootSystem) -> Vec<Root> {
    [
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1],
        [1, 1, 2, 2, 1, 0, 0],
        [1, 1, 2, 2, 2, 2, 1],
        [1, 2, 2, 4, 3, 2, 1],
    ]
    .iter()
    .map(|c| rs.root_by_coeffs(c).expect("f-roots are roots"))
    .collect()
}

pub fn construct_e(engine: &AdjointEngine) -> Result<GroupWord, GroupError> {
    h_word(engine, &e_terms(engine.root_system()), E_MODULUS)
}

pub fn construct_e_reduced(engine: &AdjointEngine) -> Result<GroupWord, GroupError> {
    h_word(engine, &e_reduced_terms(engine.root_system()), E_MODULUS)
}

pub fn construct_f(engine: &AdjointEngine) -> GroupWord {
    let tokens = f_roots(engine.root_system())
        .into_iter()
        .map(|r| GeneratorToken::w(r, FieldElem::ONE).expect("1 is nonzero"))
        .collect();
    GroupWord::new(tokens)
}

pub fn construct_g(engine: &AdjointEngine) -> Result<GroupWord, GroupError> {
    h_word(engine, &g_terms(engine.root_system()), G_MODULUS)
}

/// Lattice images of the distinguished torus elements.
pub fn e_lattice(lat: &TorusLattice) -> TorsionTorusElement {
    lat.h_element(&e_terms(lat.root_system()), E_MODULUS).expect("e terms are roots")
}

pub fn e_reduced_lattice(lat: &TorusLattice) -> TorsionTorusElement {
    lat.h_element(&e_reduced_terms(lat.root_system()), E_MODULUS).expect("simple roots")
}

pub fn g_lattice(lat: &TorusLattice) -> TorsionTorusElement {
    lat.h_element(&g_terms(lat.root_system()), G_MODULUS).expect("g terms are roots")
}

/// `f^2 = prod h_beta(-1)` over the (commuting) `f`-roots.
pub fn f_square_lattice(lat: &TorusLattice) -> TorsionTorusElement {
    let terms: Vec<(Root, i64)> = f_roots(lat.root_system()).into_iter().map(|r| (r, 1)).collect();
    lat.h_element(&terms, 2).expect("f-roots are roots")
}

pub fn commutes(engine: &AdjointEngine, a: &AdjointMatrix, b: &AdjointMatrix) -> bool {
    engine.mul(a, b) == engine.mul(b, a)
}

/// `a b a^{-1}`.
pub fn conjugate(engine: &AdjointEngine, a: &AdjointMatrix, b: &AdjointMatrix) -> AdjointMatrix {
    let inv = engine.inverse(a).expect("group elements are invertible");
    engine.mul(&engine.mul(a, b), &inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InvolutionClassLabel {
    A7,
    D6A1,
    E6T1,
}

impl InvolutionClassLabel {
    pub const ALL: [InvolutionClassLabel; 3] = [Self::D6A1, Self::E6T1, Self::A7];

    pub fn fixed_dim(self) -> usize {
        match self {
            Self::A7 => 63,
            Self::D6A1 => 69,
            Self::E6T1 => 79,
        }
    }

    pub fn from_fixed_dim(d: usize) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.fixed_dim() == d)
    }

    pub fn centralizer(self) -> &'static str {
        match self {
            Self::A7 => "A7",
            Self::D6A1 => "D6A1",
            Self::E6T1 => "E6T1",
        }
    }
}

impl fmt::Display for InvolutionClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.centralizer())
    }
}

pub fn involution_class(engine: &AdjointEngine, m: &AdjointMatrix) -> Result<InvolutionClassLabel, GroupError> {
    if m.is_identity() || !engine.mul(m, m).is_identity() {
        return Err(GroupError::NotAnInvolution);
    }
    let d = engine.fixed_space_dim(m);
    InvolutionClassLabel::from_fixed_dim(d).ok_or(GroupError::UnexpectedFixedDim(d))
}

/// Image of `x_alpha(1)` under conjugation: `M x_alpha(1) M^{-1} = x_target(scalar)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootImage {
    pub source: Root,
    pub target: Root,
    /// `+1` or `-1` when the scalar is `+-1`, otherwise `0` (scalar kept in `scalar`).
    pub sign: i64,
    pub scalar: FieldElem,
}

/// Recognise a root element `x_beta(s)`: `x_beta(s) h_i = h_i - s <beta, alpha_i^vee> e_beta`,
/// so the Cartan columns of `M - 1` are supported on the single row `e_beta`.
pub fn recognize_root_element(engine: &AdjointEngine, m: &AdjointMatrix) -> Option<(usize, FieldElem)> {
    let f = engine.field();
    let rs = engine.root_system();
    let nroots = rs.roots().len();
    let mut found: Option<(usize, FieldElem)> = None;
    for i in 1..=rs.rank() {
        let col = engine.basis().cartan_index(i);
        for row in 0..engine.dim() {
            let mut x = m.get(row, col);
            if row == col {
                x = f.sub(x, FieldElem::ONE);
            }
            if x.is_zero() {
                continue;
            }
            if row >= nroots {
                return None;
            }
            let pairing = rs.pairing(&rs.roots()[row], &rs.simple_root(i)).ok()?;
            if pairing == 0 {
                return None;
            }
            // x = -s * pairing
            let s = f.neg(f.div(x, f.from_int(pairing)).ok()?);
            match found {
                None => found = Some((row, s)),
                Some(prev) if prev == (row, s) => {}
                Some(_) => return None,
            }
        }
    }
    let (b, s) = found?;
    (engine.x_matrix_at(b, s) == *m).then_some((b, s))
}

pub fn root_conjugation_map(engine: &AdjointEngine, m: &AdjointMatrix) -> Result<Vec<RootImage>, GroupError> {
    let f = engine.field();
    let inv = engine.inverse(m).ok_or(GroupError::NotAnInvolution)?;
    let rs = engine.root_system();
    let minus_one = f.from_int(-1);
    rs.roots()
        .iter()
        .enumerate()
        .map(|(a, alpha)| {
            let c = engine.mul(&engine.mul(m, &engine.x_matrix_at(a, FieldElem::ONE)), &inv);
            let (b, s) = recognize_root_element(engine, &c).ok_or_else(|| GroupError::NotRootElement(alpha.to_string()))?;
            let sign = if s == FieldElem::ONE {
                1
            } else if s == minus_one {
                -1
            } else {
                0
            };
            Ok(RootImage {
                source: alpha.clone(),
                target: rs.roots()[b].clone(),
                sign,
                scalar: s,
            })
        })
        .collect()
}

/// The matrices of `e`, `f`, `ef` and `g` in one engine.
#[derive(Clone, Debug)]
pub struct DistinguishedElements {
    pub e: AdjointMatrix,
    pub e_reduced: AdjointMatrix,
    pub f: AdjointMatrix,
    pub ef: AdjointMatrix,
    pub g: AdjointMatrix,
}

impl DistinguishedElements {
    pub fn build(engine: &AdjointEngine) -> Result<Self, GroupError> {
        let e = evaluate(&construct_e(engine)?, engine)?;
        let e_reduced = evaluate(&construct_e_reduced(engine)?, engine)?;
        let f = evaluate(&construct_f(engine), engine)?;
        let ef = engine.mul(&e, &f);
        let g = evaluate(&construct_g(engine)?, engine)?;
        Ok(DistinguishedElements { e, e_reduced, f, ef, g })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    /// Coroot coordinates mod 4 of a representative.
    pub coroot_mod4: Vec<u64>,
    pub fixed_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionCensus {
    /// Adjoint classes of order dividing 2, including the identity.
    pub torsion_size: usize,
    pub nontrivial: usize,
    pub counts: BTreeMap<usize, usize>,
    pub entries: Vec<CensusEntry>,
}

pub const CENSUS_MODULUS: u64 = 4;

/// Representatives of the adjoint 2-torsion of the torus.
///
/// An element of order dividing 2 in the adjoint torus is `v / 2` for a coweight `v`;
/// since twice a coweight lies in the coroot lattice, every such element is `u / 4`
/// with `u` in the coroot lattice and `<alpha_j, u>` even. Classes are deduplicated by
/// the adjoint key `(<alpha_j, u> mod 4)_j`, visiting `u` in lexicographic order.
pub fn adjoint_two_torsion(lat: &TorusLattice) -> Vec<TorsionTorusElement> {
    let n = lat.rank();
    let m = CENSUS_MODULUS;
    let total = m.pow(n as u32);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for code in 0..total {
        let coeffs: Vec<i64> = (0..n).rev().map(|i| ((code / m.pow(i as u32)) % m) as i64).collect();
        let v = TorsionTorusElement::new(m, &coeffs).expect("valid modulus");
        let key = lat.adjoint_key(&v);
        if key.iter().any(|&x| x % 2 != 0) {
            continue;
        }
        if seen.insert(key) {
            out.push(v);
        }
    }
    out
}

pub fn torus_involution_census(engine: &AdjointEngine, lat: &TorusLattice) -> Result<InvolutionCensus, GroupError> {
    let classes = adjoint_two_torsion(lat);
    let mut counts = BTreeMap::new();
    let mut entries = Vec::new();
    for v in &classes {
        if lat.element_order(v, IsogenyForm::Adjoint) == 1 {
            continue;
        }
        let d = engine.fixed_space_dim(&engine.torsion_to_matrix(v)?);
        *counts.entry(d).or_insert(0) += 1;
        entries.push(CensusEntry {
            coroot_mod4: v.coeffs().to_vec(),
            fixed_dim: d,
        });
    }
    Ok(InvolutionCensus {
        torsion_size: classes.len(),
        nontrivial: entries.len(),
        counts,
        entries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurveyScalar {
    /// `lambda = zeta`, a primitive 8th root of unity.
    Zeta,
    One,
}

impl SurveyScalar {
    fn exponent(self) -> i64 {
        match self {
            SurveyScalar::Zeta => 1,
            SurveyScalar::One => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub a: usize,
    pub lambda: SurveyScalar,
    /// Coroot coordinates mod 8 of the `A7`-torus element.
    pub coroot_mod8: Vec<u64>,
    pub adjoint_order: u64,
    pub sc_order_f: u64,
    pub sc_order_ef: u64,
    /// Why the case is not part of the survey, if it is not.
    pub excluded: Option<String>,
}

impl SurveyRow {
    pub fn has_involution_lift(&self) -> bool {
        self.sc_order_f <= 2 || self.sc_order_ef <= 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A7Survey {
    pub rows: Vec<SurveyRow>,
}

impl A7Survey {
    pub fn admissible(&self) -> impl Iterator<Item = &SurveyRow> {
        self.rows.iter().filter(|r| r.excluded.is_none())
    }

    /// Every admissible case has an involution among the lifts of `f'` and `e f'`.
    pub fn all_cases_lift(&self) -> bool {
        self.admissible().all(SurveyRow::has_involution_lift)
    }
}

/// The torus element `diag(lambda I_a, -lambda I_{8-a})` of the `A7` subsystem group,
/// mapped to the `E7` torus.
pub fn a7_diagonal_element(lat: &TorusLattice, a: usize, lambda: SurveyScalar) -> TorsionTorusElement {
    let rs = lat.root_system();
    let base = SubsystemBase::e7_a7(rs);
    let mut terms = Vec::new();
    let mut partial = 0i64;
    for (i, beta) in base.roots().iter().enumerate() {
        partial += lambda.exponent() + if i < a { 0 } else { 4 };
        terms.push((beta.clone(), partial));
    }
    lat.h_element(&terms, E_MODULUS).expect("base roots are roots")
}

pub fn a7_involution_survey(lat: &TorusLattice) -> Result<A7Survey, GroupError> {
    let e = e_lattice(lat);
    let mut rows = Vec::new();
    for lambda in [SurveyScalar::Zeta, SurveyScalar::One] {
        for a in 0..=8usize {
            // determinant lambda^8 (-1)^(8-a) = (-1)^a
            if a % 2 != 0 {
                continue;
            }
            let fp = a7_diagonal_element(lat, a, lambda);
            let efp = e.add(&fp)?;
            let adjoint_order = lat.element_order(&fp, IsogenyForm::Adjoint);
            let excluded = if adjoint_order == 1 {
                Some("trivial in the adjoint group".to_string())
            } else if lat.equal_in_form(&fp, &e, IsogenyForm::Adjoint)? {
                Some("equals e in the adjoint group".to_string())
            } else {
                None
            };
            rows.push(SurveyRow {
                a,
                lambda,
                coroot_mod8: fp.coeffs().to_vec(),
                adjoint_order,
                sc_order_f: lat.element_order(&fp, IsogenyForm::SimplyConnected),
                sc_order_ef: lat.element_order(&efp, IsogenyForm::SimplyConnected),
                excluded,
            });
        }
    }
    Ok(A7Survey { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling_rng;
    use rand::Rng;
    use std::sync::OnceLock;

    fn engine17() -> &'static AdjointEngine {
        static E: OnceLock<AdjointEngine> = OnceLock::new();
        E.get_or_init(|| AdjointEngine::e7(17).unwrap())
    }

    fn elems17() -> &'static DistinguishedElements {
        static D: OnceLock<DistinguishedElements> = OnceLock::new();
        D.get_or_init(|| DistinguishedElements::build(engine17()).unwrap())
    }

    #[test]
    fn evaluate_basics() {
        let en = engine17();
        let f = en.field();
        assert!(evaluate(&GroupWord::default(), en).unwrap().is_identity());
        let alpha = en.root_system().roots()[30].clone();
        let t = f.from_int(5);
        let w = GroupWord::new(vec![
            GeneratorToken::h(alpha.clone(), t).unwrap(),
            GeneratorToken::h(alpha.clone(), f.inv(t).unwrap()).unwrap(),
        ]);
        assert!(evaluate(&w, en).unwrap().is_identity());
        assert_eq!(GeneratorToken::w(alpha, f.zero()), Err(GroupError::ZeroParameter));
    }

    #[test]
    fn evaluate_is_a_homomorphism() {
        let en = engine17();
        let f = en.field();
        let rs = en.root_system();
        let mut rng = sampling_rng();
        let tokens: Vec<GeneratorToken> = (0..6)
            .map(|i| {
                let r = rs.roots()[rng.gen_range(0..126)].clone();
                let t = f.random_nonzero(&mut rng);
                match i % 3 {
                    0 => GeneratorToken::x(r, t),
                    1 => GeneratorToken::w(r, t).unwrap(),
                    _ => GeneratorToken::h(r, t).unwrap(),
                }
            })
            .collect();
        let word = GroupWord::new(tokens);
        let k = rng.gen_range(0..=word.len());
        let (u, v) = word.split_at(k);
        assert_eq!(
            evaluate(&word, en).unwrap(),
            en.mul(&evaluate(&u, en).unwrap(), &evaluate(&v, en).unwrap())
        );
    }

    #[test]
    fn h_words_match_lattice() {
        let en = engine17();
        let lat = TorusLattice::e7();
        let rs = en.root_system();
        let mut rng = sampling_rng();
        for m in [2u64, 4, 8, 16] {
            let terms: Vec<(Root, i64)> = (0..4)
                .map(|_| (rs.roots()[rng.gen_range(0..126)].clone(), rng.gen_range(0..m as i64)))
                .collect();
            let word = h_word(en, &terms, m).unwrap();
            let v = lat.h_element(&terms, m).unwrap();
            assert_eq!(evaluate(&word, en).unwrap(), en.torsion_to_matrix(&v).unwrap());
        }
    }

    #[test]
    fn e_f_g_relations() {
        let en = engine17();
        let d = elems17();
        assert!(en.mul(&d.e, &d.e).is_identity());
        assert_eq!(d.e, d.e_reduced);
        assert!(en.mul(&d.f, &d.f).is_identity());
        assert!(commutes(en, &d.e, &d.f));
        assert_eq!(en.mul(&d.g, &d.g), d.e);
        assert_eq!(conjugate(en, &d.g, &d.f), d.ef);
        assert_eq!(conjugate(en, &d.g, &d.ef), d.f);
        assert_eq!(conjugate(en, &d.g, &d.e), d.e);
        for m in [&d.e, &d.f, &d.ef] {
            assert_eq!(involution_class(en, m).unwrap(), InvolutionClassLabel::A7);
        }
        assert_eq!(en.common_fixed_space_dim(&[&d.e, &d.f]), 28);
        assert!(commutes(en, &d.f, &en.identity()));
        assert_eq!(involution_class(en, &en.identity()), Err(GroupError::NotAnInvolution));
    }

    #[test]
    fn f_inverts_the_torus() {
        let en = engine17();
        let d = elems17();
        let fld = en.field();
        let mut rng = sampling_rng();
        for alpha in en.root_system().simple_roots() {
            let t = fld.random_nonzero(&mut rng);
            let h = en.h_matrix(&alpha, t).unwrap();
            assert_eq!(conjugate(en, &d.f, &h), en.h_matrix(&alpha, fld.inv(t).unwrap()).unwrap());
        }
    }

    #[test]
    fn conjugation_by_f_negates_roots() {
        let en = engine17();
        let d = elems17();
        let map = root_conjugation_map(en, &d.f).unwrap();
        assert_eq!(map.len(), 126);
        for img in &map {
            assert_eq!(img.target, img.source.neg());
            assert!(img.sign == 1 || img.sign == -1);
        }
        // applying the map twice returns (alpha, +1)
        let rs = en.root_system();
        for img in &map {
            let back = &map[rs.index_of(&img.target).unwrap()];
            assert_eq!(back.target, img.source);
            assert_eq!(back.sign * img.sign, 1);
        }
    }

    #[test]
    fn recognizes_root_elements() {
        let en = engine17();
        let t = en.field().from_int(3);
        assert_eq!(recognize_root_element(en, &en.x_matrix_at(77, t)), Some((77, t)));
        assert_eq!(recognize_root_element(en, &elems17().e), None);
    }

    #[test]
    fn census_matches_closed_form_oracle() {
        let en = engine17();
        let lat = TorusLattice::e7();
        let census = torus_involution_census(en, &lat).unwrap();
        assert_eq!(census.torsion_size, 128);
        assert_eq!(census.nontrivial, 127);
        let expected: BTreeMap<usize, usize> = [(63, 36), (69, 63), (79, 28)].into_iter().collect();
        assert_eq!(census.counts, expected);
        // fixed dim = rank + #{beta : <beta, u> = 0 mod 4}
        for entry in &census.entries {
            let v = TorsionTorusElement::new(4, &entry.coroot_mod4.iter().map(|&x| x as i64).collect::<Vec<_>>()).unwrap();
            let fixed = lat
                .root_system()
                .roots()
                .iter()
                .filter(|b| lat.root_pairing(b, &v).rem_euclid(4) == 0)
                .count();
            assert_eq!(entry.fixed_dim, 7 + fixed);
        }
    }

    #[test]
    fn lattice_images() {
        let lat = TorusLattice::e7();
        let e = e_lattice(&lat);
        assert_eq!(e.coeffs(), &[0, 6, 0, 0, 2, 4, 6]);
        assert_eq!(e, e_reduced_lattice(&lat));
        let g = g_lattice(&lat);
        assert_eq!(g.coeffs(), &[0, 14, 0, 0, 2, 4, 6]);
        assert_eq!(lat.element_order(&g, IsogenyForm::SimplyConnected), 8);
        assert_eq!(g.scale(2), e.rescale(16).unwrap());
        assert_eq!(f_square_lattice(&lat), lat.central_element_sc());
    }

    #[test]
    fn a7_survey_cases() {
        let lat = TorusLattice::e7();
        let s = a7_involution_survey(&lat).unwrap();
        assert_eq!(s.rows.len(), 10);
        assert!(s.all_cases_lift());
        let row = |a: usize, l: SurveyScalar| s.rows.iter().find(|r| r.a == a && r.lambda == l).unwrap();
        assert_eq!(row(4, SurveyScalar::One).sc_order_f, 2);
        assert!(row(8, SurveyScalar::One).excluded.is_some());
        assert!(row(0, SurveyScalar::One).excluded.is_some());
        for r in s.admissible() {
            assert_eq!(r.adjoint_order, 2);
            if r.lambda == SurveyScalar::Zeta {
                assert!(r.sc_order_ef <= 2);
            }
        }
        assert_eq!(s.admissible().count(), 6);
    }
}
