//! A Chevalley basis of a simply-laced Lie algebra and the Steinberg generators acting
//! on the adjoint module.
//!
//! Basis order: `e_alpha` for every root in canonical order, then `h_1, ..., h_n`.
//! Matrices use the column convention: column `j` holds the image of basis vector `j`.
//!
//! Signs. Start from the Frenkel-Kac cocycle
//! `eps(a, b) = (-1)^{sum_i a_i b_i + sum_{i<j adjacent} a_i b_j}` on the root lattice,
//! which gives a basis `E_alpha` with `[E_a, E_b] = eps(a, b) E_{a+b}` and
//! `[E_a, E_{-a}] = -h_a`. Rescaling `e_g = s_g E_g` by signs (with an extra minus for
//! negative roots) yields a Chevalley basis. The signs `s_g` are fixed in canonical order so
//! that `N(a, b) = +1` on every extraspecial pair, where the extraspecial pair of a
//! positive non-simple root `g` is the pair `a + b = g`, `index(a) < index(b)`, with
//! `a` minimal in canonical order.

use thiserror::Error;

use crate::fieldmatrix::FieldMatrix;
use crate::finitefield::{FieldElem, FieldError, GaloisField};
use crate::lattices::TorsionTorusElement;
use crate::rootsystem::{Root, RootSystem, RootSystemError};

pub type AdjointMatrix = FieldMatrix;

pub const SIGN_CONVENTION_ID: &str = "kac-cocycle/extraspecial-positive/canonical-order-min";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error(transparent)]
    Root(#[from] RootSystemError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("generator parameter must be nonzero")]
    ZeroParameter,
    #[error("no primitive {0}-th root of unity in the engine field")]
    MissingRootOfUnity(u64),
    #[error("torus element of rank {got} for a root system of rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("nilpotency check failed for ad e_{0}")]
    Nilpotency(String),
}

type SparseVec = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    rs: RootSystem,
    /// `N(a, b)` for root indices, 0 when `a + b` is not a root.
    n: Vec<i64>,
    signs: Vec<i64>,
    /// Bracket of basis elements `i`, `j` as a sparse integer vector.
    table: Vec<SparseVec>,
    /// Per root: columns of `ad e_a` and of `(ad e_a)^2 / 2`.
    ad: Vec<Vec<SparseVec>>,
    ad2_half: Vec<Vec<SparseVec>>,
    extraspecial: Vec<(usize, usize, usize)>,
}

fn kac_cocycle(rs: &RootSystem, a: &[i64], b: &[i64]) -> i64 {
    let n = rs.rank();
    let c = rs.cartan();
    let mut e = 0;
    for i in 0..n {
        e += a[i] * b[i];
        for j in i + 1..n {
            if c[i][j] != 0 {
                e += a[i] * b[j];
            }
        }
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl ChevalleyBasis {
    pub fn new(rs: RootSystem) -> Result<Self, ChevalleyError> {
        let nroots = rs.roots().len();
        let npos = rs.num_positive();
        let rank = rs.rank();
        let dim = nroots + rank;
        let roots = rs.roots().to_vec();

        let sum_index = |i: usize, j: usize| -> Option<usize> { rs.index_of(&roots[i].add(&roots[j])) };

        // signs on positive roots, extended to negatives
        let mut s = vec![0i64; npos];
        let mut extraspecial = Vec::new();
        for g in 0..npos {
            if roots[g].height() == 1 {
                s[g] = 1;
                continue;
            }
            let (a, b) = (0..g)
                .find_map(|a| {
                    let b = rs.index_of(&Root::from_coeffs_unchecked(
                        roots[g].coeffs().iter().zip(roots[a].coeffs()).map(|(x, y)| x - y).collect(),
                    ))?;
                    (b < npos && a < b).then_some((a, b))
                })
                .expect("non-simple positive roots decompose");
            s[g] = s[a] * s[b] * kac_cocycle(&rs, roots[a].coeffs(), roots[b].coeffs());
            extraspecial.push((a, b, g));
        }
        let sigma: Vec<i64> = (0..nroots)
            .map(|i| if i < npos { s[i] } else { -s[i - npos] })
            .collect();

        let mut n = vec![0i64; nroots * nroots];
        for i in 0..nroots {
            for j in 0..nroots {
                if let Some(k) = sum_index(i, j) {
                    n[i * nroots + j] =
                        sigma[i] * sigma[j] * sigma[k] * kac_cocycle(&rs, roots[i].coeffs(), roots[j].coeffs());
                }
            }
        }

        let cartan = rs.cartan().clone();
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..nroots {
            for j in 0..nroots {
                let entry = &mut table[i * dim + j];
                if let Some(k) = sum_index(i, j) {
                    entry.push((k, n[i * nroots + j]));
                } else if roots[i].coeffs().iter().zip(roots[j].coeffs()).all(|(x, y)| x + y == 0) {
                    // [e_a, e_{-a}] = h_a written in the basis h_1..h_n
                    for (t, &c) in rs.coroot_at(i).iter().enumerate() {
                        if c != 0 {
                            entry.push((nroots + t, c));
                        }
                    }
                }
            }
            for t in 0..rank {
                let pairing: i64 = (0..rank).map(|k| roots[i].coeffs()[k] * cartan[k][t]).sum();
                if pairing != 0 {
                    table[(nroots + t) * dim + i].push((i, pairing));
                    table[i * dim + nroots + t].push((i, -pairing));
                }
            }
        }

        let mut cb = ChevalleyBasis {
            rs,
            n,
            signs: sigma,
            table,
            ad: Vec::new(),
            ad2_half: Vec::new(),
            extraspecial,
        };
        for a in 0..nroots {
            let cols: Vec<SparseVec> = (0..dim).map(|j| cb.table[a * dim + j].clone()).collect();
            let apply = |v: &SparseVec| -> Vec<i64> {
                let mut out = vec![0i64; dim];
                for &(r, x) in v {
                    for &(r2, y) in &cols[r] {
                        out[r2] += x * y;
                    }
                }
                out
            };
            let mut half = Vec::with_capacity(dim);
            for col in &cols {
                let sq = apply(col);
                let sq_sparse: SparseVec = sq.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect();
                if apply(&sq_sparse).iter().any(|&x| x != 0) || sq_sparse.iter().any(|&(_, x)| x % 2 != 0) {
                    return Err(ChevalleyError::Nilpotency(cb.rs.roots()[a].to_string()));
                }
                half.push(sq_sparse.into_iter().map(|(i, x)| (i, x / 2)).collect());
            }
            cb.ad.push(cols);
            cb.ad2_half.push(half);
        }
        Ok(cb)
    }

    pub fn e7() -> Self {
        Self::new(RootSystem::e7()).expect("E7 Chevalley basis")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.roots().len() + self.rs.rank()
    }

    pub fn sign_convention_id(&self) -> &'static str {
        SIGN_CONVENTION_ID
    }

    /// Basis index of `e_alpha`.
    pub fn root_index(&self, alpha: &Root) -> Result<usize, ChevalleyError> {
        self.rs
            .index_of(alpha)
            .ok_or_else(|| RootSystemError::NotARoot(alpha.coeffs().to_vec()).into())
    }

    /// Basis index of `h_i` (1-based `i`).
    pub fn cartan_index(&self, i: usize) -> usize {
        assert!((1..=self.rs.rank()).contains(&i), "Cartan index out of range");
        self.rs.roots().len() + i - 1
    }

    /// `N(alpha, beta)`; zero when `alpha + beta` is not a root.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<i64, ChevalleyError> {
        let (i, j) = (self.root_index(alpha)?, self.root_index(beta)?);
        Ok(self.n[i * self.rs.roots().len() + j])
    }

    pub fn structure_constant_at(&self, i: usize, j: usize) -> i64 {
        self.n[i * self.rs.roots().len() + j]
    }

    /// Sign `c_g` with `e_g = c_g E_g` relative to the cocycle basis.
    pub fn basis_sign(&self, idx: usize) -> i64 {
        self.signs[idx]
    }

    /// Extraspecial pairs as root indices `(a, b, a + b)`.
    pub fn extraspecial_pairs(&self) -> &[(usize, usize, usize)] {
        &self.extraspecial
    }

    /// Bracket of two basis vectors.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_int(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let dim = self.dim();
        let mut out = vec![0i64; dim];
        for (i, &x) in u.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in v.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                for &(k, c) in self.bracket_basis(i, j) {
                    out[k] += x * y * c;
                }
            }
        }
        out
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` on basis vectors.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<i64> {
        let dim = self.dim();
        let unit = |t: usize| {
            let mut v = vec![0i64; dim];
            v[t] = 1;
            v
        };
        let (x, y, z) = (unit(i), unit(j), unit(k));
        let a = self.bracket_int(&x, &self.bracket_int(&y, &z));
        let b = self.bracket_int(&y, &self.bracket_int(&z, &x));
        let c = self.bracket_int(&z, &self.bracket_int(&x, &y));
        (0..dim).map(|t| a[t] + b[t] + c[t]).collect()
    }

    /// Columns of `ad e_alpha` for the root with index `idx`.
    pub fn ad_columns(&self, idx: usize) -> &[Vec<(usize, i64)>] {
        &self.ad[idx]
    }
}

/// A Chevalley basis together with a field holding a primitive 16th root of unity.
#[derive(Clone, Debug)]
pub struct AdjointEngine {
    basis: ChevalleyBasis,
    field: GaloisField,
    zeta16: FieldElem,
}

impl AdjointEngine {
    /// E7 over the smallest extension of `GF(p)` with a primitive 16th root of unity.
    pub fn e7(p: u64) -> Result<Self, ChevalleyError> {
        Self::new(ChevalleyBasis::e7(), GaloisField::for_roots_of_unity(p, 16)?)
    }

    pub fn new(basis: ChevalleyBasis, field: GaloisField) -> Result<Self, ChevalleyError> {
        let zeta16 = field
            .primitive_root_of_unity(16)
            .map_err(|_| ChevalleyError::MissingRootOfUnity(16))?;
        Ok(AdjointEngine { basis, field, zeta16 })
    }

    pub fn basis(&self) -> &ChevalleyBasis {
        &self.basis
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.basis.rs
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// The engine's primitive `m`-th root of unity: `zeta16^(16/m)` when `m | 16`,
    /// otherwise the first one in the field's enumeration order.
    pub fn root_of_unity(&self, m: u64) -> Result<FieldElem, ChevalleyError> {
        if m > 0 && 16 % m == 0 {
            return Ok(self.field.pow(self.zeta16, 16 / m));
        }
        self.field
            .primitive_root_of_unity(m)
            .map_err(|_| ChevalleyError::MissingRootOfUnity(m))
    }

    pub fn identity(&self) -> AdjointMatrix {
        FieldMatrix::identity(self.dim())
    }

    pub fn mul(&self, a: &AdjointMatrix, b: &AdjointMatrix) -> AdjointMatrix {
        a.mul(b, &self.field)
    }

    pub fn inverse(&self, a: &AdjointMatrix) -> Option<AdjointMatrix> {
        a.inverse(&self.field)
    }

    /// `x_alpha(t) = 1 + t ad e_alpha + t^2 (ad e_alpha)^2 / 2`.
    pub fn x_matrix(&self, alpha: &Root, t: FieldElem) -> Result<AdjointMatrix, ChevalleyError> {
        let a = self.basis.root_index(alpha)?;
        Ok(self.x_matrix_at(a, t))
    }

    pub fn x_matrix_at(&self, a: usize, t: FieldElem) -> AdjointMatrix {
        let f = &self.field;
        let t2 = f.mul(t, t);
        let mut m = self.identity();
        for (j, col) in self.basis.ad[a].iter().enumerate() {
            for &(i, c) in col {
                let cur = m.get(i, j);
                m.set(i, j, f.add(cur, f.mul(t, f.from_int(c))));
            }
        }
        for (j, col) in self.basis.ad2_half[a].iter().enumerate() {
            for &(i, c) in col {
                let cur = m.get(i, j);
                m.set(i, j, f.add(cur, f.mul(t2, f.from_int(c))));
            }
        }
        m
    }

    /// `w_alpha(t) = x_alpha(t) x_{-alpha}(-t^{-1}) x_alpha(t)`.
    pub fn w_matrix(&self, alpha: &Root, t: FieldElem) -> Result<AdjointMatrix, ChevalleyError> {
        if t.is_zero() {
            return Err(ChevalleyError::ZeroParameter);
        }
        let f = &self.field;
        let x = self.x_matrix(alpha, t)?;
        let y = self.x_matrix(&alpha.neg(), f.neg(f.inv(t)?))?;
        Ok(self.mul(&self.mul(&x, &y), &x))
    }

    /// `h_alpha(t)`: diagonal, `e_beta -> t^<beta, alpha^vee> e_beta`, identity on the Cartan part.
    pub fn h_matrix(&self, alpha: &Root, t: FieldElem) -> Result<AdjointMatrix, ChevalleyError> {
        if t.is_zero() {
            return Err(ChevalleyError::ZeroParameter);
        }
        self.basis.root_index(alpha)?;
        let f = &self.field;
        let diag: Vec<FieldElem> = self
            .root_system()
            .roots()
            .iter()
            .map(|beta| {
                let k = self.root_system().pairing(beta, alpha).expect("roots of the system");
                f.pow_signed(t, k).expect("t is nonzero")
            })
            .chain(std::iter::repeat_n(FieldElem::ONE, self.root_system().rank()))
            .collect();
        Ok(FieldMatrix::from_diagonal(&diag))
    }

    /// `h_alpha(t)` by its defining product `w_alpha(t) w_alpha(1)^{-1}`.
    pub fn h_matrix_from_w(&self, alpha: &Root, t: FieldElem) -> Result<AdjointMatrix, ChevalleyError> {
        let w = self.w_matrix(alpha, t)?;
        let w1 = self.w_matrix(alpha, FieldElem::ONE)?;
        let w1_inv = self.inverse(&w1).expect("w_alpha(1) is invertible");
        Ok(self.mul(&w, &w1_inv))
    }

    /// Diagonal matrix `e_beta -> zeta_m^<beta, v>` of a torsion torus element.
    pub fn torsion_to_matrix(&self, v: &TorsionTorusElement) -> Result<AdjointMatrix, ChevalleyError> {
        let rank = self.root_system().rank();
        if v.rank() != rank {
            return Err(ChevalleyError::RankMismatch { expected: rank, got: v.rank() });
        }
        let m = v.modulus();
        let zeta = self.root_of_unity(m)?;
        let f = &self.field;
        let cartan = self.root_system().cartan();
        let diag: Vec<FieldElem> = self
            .root_system()
            .roots()
            .iter()
            .map(|beta| {
                let mut e: i64 = 0;
                for (i, &vi) in v.coeffs().iter().enumerate() {
                    let pairing: i64 = (0..rank).map(|k| beta.coeffs()[k] * cartan[k][i]).sum();
                    e += pairing * vi as i64;
                }
                f.pow(zeta, e.rem_euclid(m as i64) as u64)
            })
            .chain(std::iter::repeat_n(FieldElem::ONE, rank))
            .collect();
        Ok(FieldMatrix::from_diagonal(&diag))
    }

    /// `dim ker(M - I)`.
    pub fn fixed_space_dim(&self, m: &AdjointMatrix) -> usize {
        m.sub_identity(&self.field).nullity(&self.field)
    }

    /// Dimension of the common fixed space of several matrices.
    pub fn common_fixed_space_dim(&self, ms: &[&AdjointMatrix]) -> usize {
        let f = &self.field;
        let mut stacked: Option<FieldMatrix> = None;
        for m in ms {
            let d = m.sub_identity(f);
            stacked = Some(match stacked {
                None => d,
                Some(s) => s.vstack(&d),
            });
        }
        match stacked {
            None => self.dim(),
            Some(s) => s.nullity(f),
        }
    }

    /// Lie bracket of two vectors over the engine field.
    pub fn bracket(&self, u: &[FieldElem], v: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; self.dim()];
        for (i, &x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = f.mul(x, y);
                for &(k, c) in self.basis.bracket_basis(i, j) {
                    out[k] = f.add(out[k], f.mul(xy, f.from_int(c)));
                }
            }
        }
        out
    }

    /// Whether `M[b_i, b_j] = [M b_i, M b_j]`.
    pub fn preserves_bracket_on(&self, m: &AdjointMatrix, i: usize, j: usize) -> bool {
        let f = &self.field;
        let dim = self.dim();
        let mut bij = vec![FieldElem::ZERO; dim];
        for &(k, c) in self.basis.bracket_basis(i, j) {
            bij[k] = f.from_int(c);
        }
        let lhs = m.mul_vec(&bij, f);
        let rhs = self.bracket(&m.column(i), &m.column(j));
        lhs == rhs
    }
}
