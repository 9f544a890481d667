//! Simply-laced root systems in simple-root coordinates.
//!
//! Roots are integer coefficient vectors over the simple roots with Bourbaki
//! labelling. Positive roots are generated breadth-first from the simple roots by
//! adding simple roots; within one height they are ordered by descending
//! coefficient vector, so the simple roots come out as `alpha_1, ..., alpha_n`.
//! The full list is the positive roots followed by their negatives in the same order,
//! and that list order is the canonical root order used everywhere else.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intlinalg::{self, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("invalid subsystem base: {0}")]
    InvalidBase(String),
}

/// Simply-laced Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::D(n) | CartanType::E(n) => n,
        }
    }

    /// Edges of the Dynkin diagram, 1-based node labels.
    fn edges(self) -> Result<Vec<(usize, usize)>, RootSystemError> {
        match self {
            CartanType::A(n) if n >= 1 => Ok((1..n).map(|i| (i, i + 1)).collect()),
            CartanType::D(n) if n >= 4 => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                Ok(e)
            }
            CartanType::E(n) if (6..=8).contains(&n) => {
                let mut e = vec![(1, 3), (3, 4), (2, 4)];
                e.extend((4..n).map(|i| (i, i + 1)));
                Ok(e)
            }
            other => Err(RootSystemError::UnsupportedType(other.to_string())),
        }
    }
}

/// Cartan matrix `a_ij = <alpha_i, alpha_j^vee>`; symmetric in the simply-laced case.
pub fn cartan_matrix(ty: CartanType) -> Result<IntMatrix, RootSystemError> {
    let edges = ty.edges()?;
    let n = ty.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    /// Wraps a coefficient vector without checking membership in any root system.
    pub fn from_coeffs_unchecked(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn neg(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for Root {
    /// Compact digit string such as `1122100`, with a leading `-` for negative roots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let abs_digits = self.coeffs.iter().all(|c| c.abs() < 10);
        if self.coeffs.iter().any(|&c| c < 0) {
            write!(f, "-")?;
        }
        if abs_digits {
            for c in &self.coeffs {
                write!(f, "{}", c.abs())?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(|c| c.abs().to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: IntMatrix,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn build(ty: CartanType) -> Result<Self, RootSystemError> {
        let cartan = cartan_matrix(ty)?;
        let n = ty.rank();
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();

        let mut positive: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut level = simple.clone();
        while !level.is_empty() {
            level.sort_by(|a, b| b.cmp(a));
            let mut next = Vec::new();
            for beta in &level {
                seen.insert(beta.clone(), ());
                for i in 0..n {
                    // simply-laced: beta + alpha_i is a root iff (beta, alpha_i) = -1
                    let p: i64 = (0..n).map(|k| beta[k] * cartan[k][i]).sum();
                    if p == -1 {
                        let mut gamma = beta.clone();
                        gamma[i] += 1;
                        if !next.contains(&gamma) {
                            next.push(gamma);
                        }
                    }
                }
            }
            positive.append(&mut level);
            level = next.into_iter().filter(|g| !seen.contains_key(g)).collect();
        }

        let mut roots: Vec<Root> = positive
            .iter()
            .map(|c| Root { coeffs: c.clone() })
            .collect();
        let negatives: Vec<Root> = roots.iter().map(Root::neg).collect();
        roots.extend(negatives);
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();

        let mut rs = RootSystem {
            cartan_type: ty,
            cartan,
            roots,
            index,
            coroots: Vec::new(),
        };
        rs.coroots = rs.roots.iter().map(|r| rs.solve_coroot(r)).collect();
        Ok(rs)
    }

    pub fn e7() -> Self {
        Self::build(CartanType::E(7)).expect("E7 is supported")
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// All roots in canonical order (positive roots first).
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        assert!((1..=self.rank()).contains(&i), "simple root index out of range");
        self.roots[i - 1].clone()
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..=self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coeffs).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(&r.coeffs)
    }

    pub fn root_by_coeffs(&self, coeffs: &[i64]) -> Result<Root, RootSystemError> {
        match self.index.get(coeffs) {
            Some(&i) => Ok(self.roots[i].clone()),
            None => Err(RootSystemError::NotARoot(coeffs.to_vec())),
        }
    }

    fn check(&self, r: &Root) -> Result<(), RootSystemError> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(RootSystemError::NotARoot(r.coeffs.clone()))
        }
    }

    /// The symmetric bilinear form normalised so that roots have length 2.
    pub(crate) fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.cartan[i][j] * b[j];
            }
        }
        s
    }

    /// Cartan integer `<beta, alpha^vee>`.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> Result<i64, RootSystemError> {
        self.check(beta)?;
        self.check(alpha)?;
        Ok(self.form(&beta.coeffs, &alpha.coeffs))
    }

    /// `s_alpha(beta) = beta - <beta, alpha^vee> alpha`.
    pub fn reflect(&self, beta: &Root, alpha: &Root) -> Result<Root, RootSystemError> {
        let p = self.pairing(beta, alpha)?;
        Ok(Root {
            coeffs: beta
                .coeffs
                .iter()
                .zip(&alpha.coeffs)
                .map(|(b, a)| b - p * a)
                .collect(),
        })
    }

    pub fn highest_root(&self) -> Root {
        self.positive_roots()
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty root system")
            .clone()
    }

    /// Coroot coordinates of `alpha^vee` over the simple coroots.
    pub fn coroot(&self, alpha: &Root) -> Result<&[i64], RootSystemError> {
        match self.index_of(alpha) {
            Some(i) => Ok(&self.coroots[i]),
            None => Err(RootSystemError::NotARoot(alpha.coeffs.clone())),
        }
    }

    pub(crate) fn coroot_at(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }

    // <alpha_j, alpha^vee> = sum_i c_i <alpha_j, alpha_i^vee>, solved for c over Z.
    fn solve_coroot(&self, alpha: &Root) -> Vec<i64> {
        let n = self.rank();
        let rhs: Vec<i64> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                self.form(&e, &alpha.coeffs)
            })
            .collect();
        intlinalg::solve_integer(&self.cartan, &rhs).expect("coroot lies in the coroot lattice")
    }

    /// All roots in the integer span of `base`, in canonical order.
    pub fn subsystem(&self, base: &SubsystemBase) -> Vec<Root> {
        // columns of `span` are the base roots
        let n = self.rank();
        let span: IntMatrix = (0..n)
            .map(|i| base.roots.iter().map(|r| r.coeffs[i]).collect())
            .collect();
        self.roots
            .iter()
            .filter(|r| intlinalg::solve_integer(&span, &r.coeffs).is_some())
            .cloned()
            .collect()
    }

    pub fn pairwise_orthogonal(&self, roots: &[Root]) -> Result<bool, RootSystemError> {
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                if self.pairing(a, b)? != 0 {
                    return Ok(false);
                }
            }
        }
        for r in roots {
            self.check(r)?;
        }
        Ok(true)
    }

    /// Export of the root list, one root per line as space-separated integers.
    pub fn export_roots(&self) -> String {
        let mut out = String::new();
        for r in &self.roots {
            let parts: Vec<String> = r.coeffs.iter().map(i64::to_string).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A simple system for a subsystem of a root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemBase {
    roots: Vec<Root>,
}

impl SubsystemBase {
    pub fn new(rs: &RootSystem, roots: Vec<Root>) -> Result<Self, RootSystemError> {
        for r in &roots {
            rs.check(r)?;
        }
        let m: IntMatrix = roots.iter().map(|r| r.coeffs.clone()).collect();
        if !roots.is_empty() && intlinalg::rank(&m) != roots.len() {
            return Err(RootSystemError::InvalidBase("roots are linearly dependent".into()));
        }
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                if rs.form(&a.coeffs, &b.coeffs) > 0 {
                    return Err(RootSystemError::InvalidBase(format!(
                        "<{a}, {b}^vee> is positive"
                    )));
                }
            }
        }
        Ok(SubsystemBase { roots })
    }

    /// The base `{-alpha_0, alpha_1, alpha_3, ..., alpha_7}` of the A7 subsystem of E7,
    /// ordered along the A7 chain.
    pub fn e7_a7(rs: &RootSystem) -> Self {
        let mut roots = vec![rs.highest_root().neg()];
        roots.extend([1, 3, 4, 5, 6, 7].iter().map(|&i| rs.simple_root(i)));
        Self::new(rs, roots).expect("A7 base is valid")
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The Cartan matrix of the base, `<beta_i, beta_j^vee>`.
    pub fn cartan(&self, rs: &RootSystem) -> IntMatrix {
        self.roots
            .iter()
            .map(|a| self.roots.iter().map(|b| rs.form(&a.coeffs, &b.coeffs)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e7() -> RootSystem {
        RootSystem::e7()
    }

    #[test]
    fn e7_counts() {
        let rs = e7();
        assert_eq!(rs.roots().len(), 126);
        assert_eq!(rs.num_positive(), 63);
        assert_eq!(intlinalg::determinant(rs.cartan()), 2);
    }

    #[test]
    fn simple_roots_first() {
        let rs = e7();
        for i in 1..=7 {
            let mut c = [0; 7];
            c[i - 1] = 1;
            assert_eq!(rs.simple_root(i).coeffs(), &c[..]);
        }
    }

    #[test]
    fn pairings() {
        let rs = e7();
        let a1 = rs.simple_root(1);
        let a2 = rs.simple_root(2);
        let a3 = rs.simple_root(3);
        assert_eq!(rs.pairing(&a1, &a1).unwrap(), 2);
        assert_eq!(rs.pairing(&a1, &a3).unwrap(), -1);
        assert_eq!(rs.pairing(&a1, &a2).unwrap(), 0);
        assert!(rs.pairing(&Root::from_coeffs_unchecked(vec![1, 1, 1, 1, 1, 1, 2]), &a1).is_err());
    }

    #[test]
    fn reflections() {
        let rs = e7();
        let a1 = rs.simple_root(1);
        let a3 = rs.simple_root(3);
        assert_eq!(rs.reflect(&a1, &a1).unwrap(), a1.neg());
        assert_eq!(rs.reflect(&a1, &a3).unwrap(), a1.add(&a3));
    }

    #[test]
    fn named_roots() {
        let rs = e7();
        for c in [[1, 1, 2, 2, 1, 0, 0], [1, 1, 2, 2, 2, 2, 1], [1, 2, 2, 4, 3, 2, 1]] {
            assert!(rs.root_by_coeffs(&c).is_ok());
        }
        assert!(matches!(
            rs.root_by_coeffs(&[1, 1, 1, 1, 1, 1, 2]),
            Err(RootSystemError::NotARoot(_))
        ));
        let top = rs.root_by_coeffs(&[2, 2, 3, 4, 3, 2, 1]).unwrap();
        assert_eq!(rs.highest_root(), top);
        assert_eq!(top.height(), 17);
        assert_eq!(rs.pairing(&top, &top).unwrap(), 2);
    }

    #[test]
    fn subsystems() {
        let rs = e7();
        let a7 = SubsystemBase::e7_a7(&rs);
        assert_eq!(rs.subsystem(&a7).len(), 56);
        let a1 = SubsystemBase::new(&rs, vec![rs.simple_root(1)]).unwrap();
        assert_eq!(
            rs.subsystem(&a1),
            vec![rs.simple_root(1), rs.simple_root(1).neg()]
        );
        let full = SubsystemBase::new(&rs, rs.simple_roots()).unwrap();
        assert_eq!(rs.subsystem(&full).len(), 126);
    }

    #[test]
    fn invalid_bases() {
        let rs = e7();
        let a1 = rs.simple_root(1);
        let a3 = rs.simple_root(3);
        assert!(SubsystemBase::new(&rs, vec![a1.clone(), a1.clone()]).is_err());
        // alpha_1 and alpha_1 + alpha_3 pair positively
        assert!(SubsystemBase::new(&rs, vec![a1.clone(), a1.add(&a3)]).is_err());
    }

    #[test]
    fn a7_induced_cartan() {
        let rs = e7();
        let c = SubsystemBase::e7_a7(&rs).cartan(&rs);
        assert_eq!(c, cartan_matrix(CartanType::A(7)).unwrap());
    }

    #[test]
    fn orthogonal_sets() {
        let rs = e7();
        let f_roots: Vec<Root> = [
            [1, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 1],
            [1, 1, 2, 2, 1, 0, 0],
            [1, 1, 2, 2, 2, 2, 1],
            [1, 2, 2, 4, 3, 2, 1],
        ]
        .iter()
        .map(|c| rs.root_by_coeffs(c).unwrap())
        .collect();
        assert!(rs.pairwise_orthogonal(&f_roots).unwrap());
        assert!(!rs
            .pairwise_orthogonal(&[rs.simple_root(1), rs.simple_root(3)])
            .unwrap());
        assert!(rs.pairwise_orthogonal(&[rs.simple_root(4)]).unwrap());
    }

    #[test]
    fn coroots_match_roots_when_simply_laced() {
        let rs = e7();
        for r in rs.roots() {
            assert_eq!(rs.coroot(r).unwrap(), r.coeffs());
        }
    }

    #[test]
    fn other_types() {
        assert_eq!(RootSystem::build(CartanType::A(1)).unwrap().roots().len(), 2);
        assert_eq!(RootSystem::build(CartanType::A(7)).unwrap().roots().len(), 56);
        assert_eq!(RootSystem::build(CartanType::D(4)).unwrap().roots().len(), 24);
        assert_eq!(RootSystem::build(CartanType::E(6)).unwrap().roots().len(), 72);
        assert_eq!(RootSystem::build(CartanType::E(8)).unwrap().roots().len(), 240);
        assert!(RootSystem::build(CartanType::E(9)).is_err());
        assert!(RootSystem::build(CartanType::D(3)).is_err());
    }

    #[test]
    fn export_format() {
        let rs = e7();
        let text = rs.export_roots();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 126);
        assert_eq!(lines[0], "1 0 0 0 0 0 0");
        assert_eq!(lines[62], "2 2 3 4 3 2 1");
        assert_eq!(lines[63], "-1 0 0 0 0 0 0");
    }
}
