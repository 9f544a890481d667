//! Torsion torus elements in coroot coordinates.
//!
//! A [`TorsionTorusElement`] with modulus `m` and coefficients `k_i` stands for
//! `prod_i h_{alpha_i}(zeta_m^{k_i})`, where `zeta_m` is a fixed primitive `m`-th root
//! of unity. In the simply connected group this is faithful on `(Z/m)^rank`. In the
//! adjoint group two vectors are identified when their difference lies in `m P^vee`,
//! which is tested by pairing against every simple root: `v` is trivial iff
//! `<alpha_j, v> = 0 mod m` for all `j`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intlinalg;
use crate::rootsystem::{cartan_matrix, CartanType, Root, RootSystem, RootSystemError, SubsystemBase};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("cannot re-embed modulus {from} into {to}")]
    BadRescale { from: u64, to: u64 },
    #[error("q = {q} is not a unit modulo {m}")]
    NotAUnit { q: u64, m: u64 },
    #[error("element is not fixed by the Frobenius map in adjoint form")]
    NotSigmaStable,
    #[error(transparent)]
    Root(#[from] RootSystemError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsogenyForm {
    SimplyConnected,
    Adjoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorsionTorusElement {
    modulus: u64,
    coeffs: Vec<u64>,
}

fn reduce(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

impl TorsionTorusElement {
    pub fn new(modulus: u64, coeffs: &[i64]) -> Result<Self, LatticeError> {
        if modulus == 0 {
            return Err(LatticeError::ZeroModulus);
        }
        Ok(TorsionTorusElement {
            modulus,
            coeffs: coeffs.iter().map(|&c| reduce(c, modulus)).collect(),
        })
    }

    pub fn zero(rank: usize, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        TorsionTorusElement {
            modulus,
            coeffs: vec![0; rank],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn compatible(&self, other: &Self) -> Result<(), LatticeError> {
        if self.modulus != other.modulus {
            return Err(LatticeError::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.rank() != other.rank() {
            return Err(LatticeError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(())
    }

    /// Group law: the product of the two torus elements.
    pub fn add(&self, other: &Self) -> Result<Self, LatticeError> {
        self.compatible(other)?;
        Ok(TorsionTorusElement {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| (a + b) % self.modulus)
                .collect(),
        })
    }

    /// `n`-th power.
    pub fn scale(&self, n: i64) -> Self {
        let m = self.modulus;
        let n = reduce(n, m) as u128;
        TorsionTorusElement {
            modulus: m,
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| ((c as u128 * n) % m as u128) as u64)
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        self.scale(-1)
    }

    /// The same torus element written with modulus `new_modulus` (a multiple of the current one).
    pub fn rescale(&self, new_modulus: u64) -> Result<Self, LatticeError> {
        if new_modulus == 0 || !new_modulus.is_multiple_of(self.modulus) {
            return Err(LatticeError::BadRescale {
                from: self.modulus,
                to: new_modulus,
            });
        }
        let k = new_modulus / self.modulus;
        Ok(TorsionTorusElement {
            modulus: new_modulus,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        })
    }

    fn signed(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| c as i64).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Twist {
    Plus,
    Minus,
}

impl Twist {
    pub fn sign(self) -> i64 {
        match self {
            Twist::Plus => 1,
            Twist::Minus => -1,
        }
    }
}

/// A Frobenius map acting on a torus by `t -> t^{twist * q}`.
///
/// `Twist::Minus` models the torus `x^{-1} T x` of the twisted conjugate, which the
/// Frobenius map acts on by `t -> t^{-q}`; the conjugating element itself is never built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusSpec {
    pub q: u64,
    pub twist: Twist,
}

impl FrobeniusSpec {
    pub fn new(q: u64, twist: Twist) -> Self {
        FrobeniusSpec { q, twist }
    }

    /// The exponent `twist * q` reduced modulo `m`, after checking that `q` is a unit.
    pub fn exponent_mod(self, m: u64) -> Result<u64, LatticeError> {
        if gcd(self.q, m) != 1 {
            return Err(LatticeError::NotAUnit { q: self.q, m });
        }
        let r = self.q % m;
        Ok(match self.twist {
            Twist::Plus => r,
            Twist::Minus => (m - r) % m,
        })
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Invariant factors of the cokernel of the Cartan matrix.
pub fn fundamental_group(ty: CartanType) -> Result<Vec<i64>, LatticeError> {
    let c = cartan_matrix(ty)?;
    Ok(intlinalg::smith_normal_form(&c).torsion_factors())
}

/// Same as [`fundamental_group`] for an arbitrary (possibly reordered) Cartan matrix.
pub fn cokernel_torsion(cartan: &intlinalg::IntMatrix) -> Vec<i64> {
    intlinalg::smith_normal_form(cartan).torsion_factors()
}

/// Center of a subsystem subgroup, as computed by [`TorusLattice::subsystem_center`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemCenter {
    /// Nontrivial generators together with their orders in the chosen form.
    pub generators: Vec<(TorsionTorusElement, u64)>,
    /// Order of the generated group in the chosen form.
    pub order: u64,
}

/// The cocharacter-side lattice engine over a fixed root system.
#[derive(Clone, Debug)]
pub struct TorusLattice {
    rs: RootSystem,
}

impl TorusLattice {
    pub fn new(rs: RootSystem) -> Self {
        TorusLattice { rs }
    }

    pub fn e7() -> Self {
        Self::new(RootSystem::e7())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Encodes `prod h_alpha(zeta_m^k)` as `sum k alpha^vee mod m`.
    pub fn h_element(&self, terms: &[(Root, i64)], modulus: u64) -> Result<TorsionTorusElement, LatticeError> {
        let n = self.rank();
        let mut acc = vec![0i64; n];
        for (root, k) in terms {
            let co = self.rs.coroot(root)?;
            for i in 0..n {
                acc[i] = (acc[i] + k * co[i]).rem_euclid(modulus.max(1) as i64);
            }
        }
        TorsionTorusElement::new(modulus, &acc)
    }

    /// `<beta, v>` as an integer (not reduced); `v` given by its integer lift.
    pub fn root_pairing(&self, beta: &Root, v: &TorsionTorusElement) -> i64 {
        self.rs.form(beta.coeffs(), &v.signed())
    }

    /// `(<alpha_j, v> mod m)_j`; determines the class of `v` in the adjoint torus.
    pub fn adjoint_key(&self, v: &TorsionTorusElement) -> Vec<u64> {
        let c = self.rs.cartan();
        let m = v.modulus as i64;
        (0..self.rank())
            .map(|j| {
                let s: i64 = (0..self.rank()).map(|i| c[j][i] * v.coeffs[i] as i64).sum();
                s.rem_euclid(m) as u64
            })
            .collect()
    }

    fn is_trivial(&self, v: &TorsionTorusElement, form: IsogenyForm) -> bool {
        match form {
            IsogenyForm::SimplyConnected => v.is_zero(),
            IsogenyForm::Adjoint => self.adjoint_key(v).iter().all(|&x| x == 0),
        }
    }

    pub fn equal_in_form(
        &self,
        a: &TorsionTorusElement,
        b: &TorsionTorusElement,
        form: IsogenyForm,
    ) -> Result<bool, LatticeError> {
        a.compatible(b)?;
        Ok(self.is_trivial(&a.add(&b.inverse())?, form))
    }

    pub fn element_order(&self, a: &TorsionTorusElement, form: IsogenyForm) -> u64 {
        let m = a.modulus;
        let entries = match form {
            IsogenyForm::SimplyConnected => a.coeffs.clone(),
            IsogenyForm::Adjoint => self.adjoint_key(a),
        };
        let g = entries.iter().fold(m, |g, &x| gcd(g, x));
        m / g
    }

    /// `z = h_{alpha_2}(-1) h_{alpha_5}(-1) h_{alpha_7}(-1)` for E7 with modulus 2.
    pub fn central_element_sc(&self) -> TorsionTorusElement {
        assert_eq!(self.rs.cartan_type(), CartanType::E(7), "central element is defined for E7");
        let terms: Vec<(Root, i64)> = [2, 5, 7].iter().map(|&i| (self.rs.simple_root(i), 1)).collect();
        self.h_element(&terms, 2).expect("simple roots are roots")
    }

    pub fn frobenius_act(
        &self,
        a: &TorsionTorusElement,
        spec: FrobeniusSpec,
    ) -> Result<TorsionTorusElement, LatticeError> {
        frobenius_act(a, spec)
    }

    /// Whether an adjoint element fixed by the Frobenius map lies in the derived subgroup
    /// of the finite group, i.e. whether its simply connected lift is also fixed.
    pub fn in_derived_subgroup(
        &self,
        a: &TorsionTorusElement,
        spec: FrobeniusSpec,
    ) -> Result<bool, LatticeError> {
        let image = frobenius_act(a, spec)?;
        if !self.equal_in_form(&image, a, IsogenyForm::Adjoint)? {
            return Err(LatticeError::NotSigmaStable);
        }
        self.equal_in_form(&image, a, IsogenyForm::SimplyConnected)
    }

    /// Generators of the center of the subsystem subgroup with base `base`:
    /// the `v` in the span of the base coroots (mod `m`) with `<beta, v> = 0 mod m` for all
    /// base roots `beta`, taken modulo triviality in `form`.
    pub fn subsystem_center(
        &self,
        base: &SubsystemBase,
        modulus: u64,
        form: IsogenyForm,
    ) -> Result<SubsystemCenter, LatticeError> {
        if modulus == 0 {
            return Err(LatticeError::ZeroModulus);
        }
        let b = base.cartan(&self.rs);
        let snf = intlinalg::smith_normal_form(&b);
        let r = base.len();
        let mut gens = Vec::new();
        for i in 0..r {
            let d = snf.diagonal[i].unsigned_abs();
            let step = (modulus / gcd(d, modulus)) as i64;
            if step as u64 == modulus {
                continue;
            }
            // c = V (step * e_i), pushed forward along the base coroots
            let c: Vec<i64> = (0..r).map(|j| snf.right[j][i] * step).collect();
            let mut acc = vec![0i64; self.rank()];
            for (cj, beta) in c.iter().zip(base.roots()) {
                let co = self.rs.coroot(beta)?;
                for (a, x) in acc.iter_mut().zip(co) {
                    *a += cj * x;
                }
            }
            let v = TorsionTorusElement::new(modulus, &acc)?;
            if !self.is_trivial(&v, form) {
                let ord = self.element_order(&v, form);
                gens.push((v, ord));
            }
        }
        let elems: Vec<TorsionTorusElement> = gens.iter().map(|(v, _)| v.clone()).collect();
        let order = self.generated_order(&elems, modulus, form) as u64;
        Ok(SubsystemCenter { generators: gens, order })
    }

    fn key(&self, v: &TorsionTorusElement, form: IsogenyForm) -> Vec<u64> {
        match form {
            IsogenyForm::SimplyConnected => v.coeffs.clone(),
            IsogenyForm::Adjoint => self.adjoint_key(v),
        }
    }

    /// Order of the subgroup generated by `gens` in `form`, by closure.
    pub fn generated_order(&self, gens: &[TorsionTorusElement], modulus: u64, form: IsogenyForm) -> usize {
        self.generated_subgroup(gens, modulus, form).len()
    }

    /// Keys (coroot vectors for SC, pairing vectors for adjoint) of the generated subgroup.
    pub fn generated_subgroup(
        &self,
        gens: &[TorsionTorusElement],
        modulus: u64,
        form: IsogenyForm,
    ) -> HashSet<Vec<u64>> {
        let zero = TorsionTorusElement::zero(self.rank(), modulus);
        let mut seen = HashSet::new();
        seen.insert(self.key(&zero, form));
        let mut queue = VecDeque::from([zero]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.add(g).expect("same modulus");
                if seen.insert(self.key(&y, form)) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

pub fn frobenius_act(
    a: &TorsionTorusElement,
    spec: FrobeniusSpec,
) -> Result<TorsionTorusElement, LatticeError> {
    let k = spec.exponent_mod(a.modulus)?;
    Ok(a.scale(k as i64))
}
