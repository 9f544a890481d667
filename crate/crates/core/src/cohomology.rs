//! Twisted conjugacy classes of small finite groups, and the Sym4 model `E x| GL2(F2)`.
//!
//! For an automorphism `s` of `G`, elements `x, y` are related when
//! `y = s(g)^{-1} x g` for some `g`; the classes are the nonabelian `H^1(s, G)`.
//! Everything is brute force over the multiplication table.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("map is not an automorphism")]
    NotAnAutomorphism,
    #[error("element index {0} out of range")]
    BadElement(usize),
    #[error("class with representative {0} is not a conjugacy class of the Sym4 model")]
    UnknownClass(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupModel {
    labels: Vec<String>,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroupModel {
    pub fn from_table(labels: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self, CohomologyError> {
        let n = labels.len();
        if n == 0 || mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(CohomologyError::NotAGroup("table shape".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult[e][x] == x && mult[x][e] == x))
            .ok_or_else(|| CohomologyError::NotAGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| mult[x][y] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CohomologyError::NotAGroup("missing inverse".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(CohomologyError::NotAGroup("not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroupModel { labels, mult, identity, inverse })
    }

    pub fn trivial_group() -> Self {
        Self::from_table(vec!["1".into()], vec![vec![0]]).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.mul(a, x) == self.mul(x, a)).collect()
    }

    /// Ordinary conjugacy classes by orbit enumeration, independent of [`h1_classes`].
    pub fn conjugacy_classes(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order())
                .map(|g| self.mul(self.mul(g, x), self.inv(g)))
                .collect();
            for &y in &class {
                seen[y] = true;
            }
            out.push(class);
        }
        out
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    pub map: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn new(g: &FiniteGroupModel, map: Vec<usize>) -> Result<Self, CohomologyError> {
        let n = g.order();
        let image: BTreeSet<usize> = map.iter().copied().collect();
        if map.len() != n || image.len() != n || image.iter().any(|&x| x >= n) {
            return Err(CohomologyError::NotAnAutomorphism);
        }
        for a in 0..n {
            for b in 0..n {
                if map[g.mul(a, b)] != g.mul(map[a], map[b]) {
                    return Err(CohomologyError::NotAnAutomorphism);
                }
            }
        }
        Ok(GroupAutomorphism { map })
    }

    pub fn trivial(g: &FiniteGroupModel) -> Self {
        GroupAutomorphism { map: (0..g.order()).collect() }
    }

    /// `x -> a x a^{-1}`.
    pub fn conjugation(g: &FiniteGroupModel, a: usize) -> Self {
        GroupAutomorphism {
            map: (0..g.order()).map(|x| g.mul(g.mul(a, x), g.inv(a))).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Class {
    pub representative: usize,
    pub members: BTreeSet<usize>,
    /// `member -> g` with `s(g)^{-1} rep g = member`.
    pub witnesses: BTreeMap<usize, usize>,
}

/// `s(g)^{-1} x g`.
pub fn twisted_action(g: &FiniteGroupModel, sigma: &GroupAutomorphism, x: usize, h: usize) -> usize {
    g.mul(g.mul(g.inv(sigma.apply(h)), x), h)
}

/// Partition of `G` into twisted classes; representatives are the smallest indices.
pub fn h1_classes(g: &FiniteGroupModel, sigma: &GroupAutomorphism) -> Vec<H1Class> {
    let mut assigned = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if assigned[x] {
            continue;
        }
        let mut witnesses = BTreeMap::new();
        for h in 0..g.order() {
            witnesses.entry(twisted_action(g, sigma, x, h)).or_insert(h);
        }
        for &y in witnesses.keys() {
            assigned[y] = true;
        }
        out.push(H1Class {
            representative: x,
            members: witnesses.keys().copied().collect(),
            witnesses,
        });
    }
    out
}

/// Some `h` with `s(h)^{-1} x h = y`.
pub fn twisted_related(g: &FiniteGroupModel, sigma: &GroupAutomorphism, x: usize, y: usize) -> Option<usize> {
    (0..g.order()).find(|&h| twisted_action(g, sigma, x, h) == y)
}

/// Affine maps `p -> A p + v` of `F2^2`, stored as `(v, A)` with `A` as two column bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    pub v: u8,
    pub a: [u8; 2],
}

impl AffineMap {
    fn linear(self, p: u8) -> u8 {
        let mut out = 0;
        for (bit, col) in self.a.iter().enumerate() {
            if p >> bit & 1 == 1 {
                out ^= col;
            }
        }
        out
    }

    pub fn apply(self, p: u8) -> u8 {
        self.linear(p) ^ self.v
    }

    pub fn compose(self, other: AffineMap) -> AffineMap {
        AffineMap {
            v: self.linear(other.v) ^ self.v,
            a: [self.linear(other.a[0]), self.linear(other.a[1])],
        }
    }

    /// Permutation of the points `1 = 0, 2 = e, 3 = f, 4 = ef`.
    pub fn permutation(self) -> [u8; 4] {
        [0, 1, 2, 3].map(|p| self.apply(p))
    }
}

/// Names of the elements of `E = F2^2`.
pub const E_NAMES: [&str; 4] = ["1", "e", "f", "ef"];

/// The Sym4 model `E x| GL2(F2)`, acting on the four points of `E`.
#[derive(Clone, Debug)]
pub struct Sym4Model {
    pub group: FiniteGroupModel,
    pub maps: Vec<AffineMap>,
}

fn cycle_notation(perm: [u8; 4]) -> String {
    let mut seen = [false; 4];
    let mut out = String::new();
    for start in 0..4u8 {
        if seen[start as usize] || perm[start as usize] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            cycle.push((x + 1).to_string());
            x = perm[x as usize];
        }
        out.push_str(&format!("({})", cycle.join(",")));
    }
    if out.is_empty() {
        "(1)".into()
    } else {
        out
    }
}

pub fn build_sym4_model() -> Sym4Model {
    let mut linear = Vec::new();
    for c0 in 1..4u8 {
        for c1 in 1..4u8 {
            if c0 != c1 {
                linear.push([c0, c1]);
            }
        }
    }
    linear.sort_by_key(|a| (*a != [1, 2], *a));
    let mut maps = Vec::new();
    for a in &linear {
        for v in 0..4u8 {
            maps.push(AffineMap { v, a: *a });
        }
    }
    let labels: Vec<String> = maps.iter().map(|m| cycle_notation(m.permutation())).collect();
    let index: BTreeMap<AffineMap, usize> = maps.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mult = maps
        .iter()
        .map(|&x| maps.iter().map(|&y| index[&x.compose(y)]).collect())
        .collect();
    Sym4Model {
        group: FiniteGroupModel::from_table(labels, mult).expect("affine group"),
        maps,
    }
}

impl Sym4Model {
    /// Index of the translation by the named element of `E`.
    pub fn translation(&self, name: &str) -> usize {
        let v = E_NAMES.iter().position(|&n| n == name).expect("element of E") as u8;
        self.maps
            .iter()
            .position(|m| m.v == v && m.a == [1, 2])
            .expect("translations are present")
    }

    pub fn find(&self, map: AffineMap) -> usize {
        self.maps.iter().position(|&m| m == map).expect("map in the model")
    }

    /// The normal subgroup `E` of translations.
    pub fn translations(&self) -> Vec<usize> {
        (0..self.maps.len()).filter(|&i| self.maps[i].a == [1, 2]).collect()
    }

    /// Order of the image in `Sym4 / E = GL2(F2)`.
    pub fn quotient_order(&self, x: usize) -> usize {
        let mut n = 1;
        let lin = AffineMap { v: 0, a: self.maps[x].a };
        let mut acc = lin;
        while acc.a != [1, 2] {
            acc = acc.compose(lin);
            n += 1;
        }
        n
    }

    /// The image of `g`: translation by `f` followed by the linear map swapping `f` and `ef`.
    pub fn g_image(&self) -> usize {
        // columns: e -> e, f -> ef
        self.find(AffineMap { v: 2, a: [1, 3] })
    }

    /// Cycle-type label of the conjugacy class containing `x`.
    pub fn class_label(&self, x: usize) -> String {
        let perm = self.maps[x].permutation();
        let mut lens: Vec<usize> = Vec::new();
        let mut seen = [false; 4];
        for s in 0..4 {
            let mut len = 0;
            let mut y = s;
            while !seen[y] {
                seen[y] = true;
                y = perm[y] as usize;
                len += 1;
            }
            if len > 1 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        match lens.as_slice() {
            [] => "(1)",
            [2] => "(1,2)",
            [2, 2] => "(1,2)(3,4)",
            [3] => "(1,2,3)",
            [4] => "(1,2,3,4)",
            _ => unreachable!("cycle types of Sym4"),
        }
        .to_string()
    }
}

/// Table rows: class label and descriptor of the finite normaliser.
pub const TABLE1: [(&str, &str); 5] = [
    ("(1)", "(2^2 x Inndiag(D4(q))).Sym3"),
    ("(1,2)", "(2 x 2D4(q).2).2"),
    ("(1,2)(3,4)", "(2^2 x Inndiag(D4(q))).2"),
    ("(1,2,3)", "3D4(q).3"),
    ("(1,2,3,4)", "(2D4(q).2).4"),
];

pub fn table1_descriptor(label: &str) -> Option<&'static str> {
    TABLE1.iter().find(|(l, _)| *l == label).map(|(_, d)| *d)
}

/// Name of a small group given as the quotient `whole / normal` of subsets of `g`.
fn quotient_name(g: &FiniteGroupModel, whole: &BTreeSet<usize>, normal: &BTreeSet<usize>) -> String {
    let order = whole.len() / normal.len();
    let in_n = |x: usize| normal.contains(&x);
    let rel_order = |x: usize| {
        let mut y = x;
        let mut n = 1;
        while !in_n(y) {
            y = g.mul(y, x);
            n += 1;
        }
        n
    };
    let cyclic = whole.iter().any(|&x| rel_order(x) == order);
    let abelian = whole
        .iter()
        .all(|&x| whole.iter().all(|&y| in_n(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)))));
    match (order, cyclic, abelian) {
        (n, true, _) => n.to_string(),
        (4, false, true) => "2^2".into(),
        (6, false, false) => "Sym3".into(),
        (8, false, false) => "D8".into(),
        (24, false, false) => "Sym4".into(),
        (n, _, _) => format!("[{n}]"),
    }
}

fn has_complement(g: &FiniteGroupModel, whole: &BTreeSet<usize>, normal: &BTreeSet<usize>) -> bool {
    let target = whole.len() / normal.len();
    let elems: Vec<usize> = whole.iter().copied().collect();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i..] {
            let k = g.generate(&[a, b]);
            if k.len() == target && k.intersection(normal).count() == 1 {
                return true;
            }
        }
    }
    false
}

/// What the structure recipe derives for the class of `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorDerivation {
    pub class_label: String,
    pub quotient_order: usize,
    pub centralizer_order: usize,
    pub fixed_in_e: usize,
    pub complemented: bool,
    pub descriptor: String,
}

/// Structure of the fixed points for the Frobenius twisted by `w`:
/// the connected part is `D4` twisted by the image of `w` in `Sym3`
/// (order 1, 2, 3 give `Inndiag(D4(q))`, `2D4(q).2`, `3D4(q)`); the component group is
/// the centraliser `C` of `w` in Sym4; the fixed points `F` of `w` on `E` split off as a
/// direct factor when they have a complement in `C`.
pub fn derive_descriptor(model: &Sym4Model, w: usize) -> DescriptorDerivation {
    let g = &model.group;
    let qo = model.quotient_order(w);
    let d = match qo {
        1 => "Inndiag(D4(q))",
        2 => "2D4(q).2",
        3 => "3D4(q)",
        _ => unreachable!("GL2(F2) has exponent 6 with element orders 1, 2, 3"),
    };
    let c: BTreeSet<usize> = g.centralizer(w).into_iter().collect();
    let fixed: BTreeSet<usize> = model.translations().into_iter().filter(|&t| c.contains(&t)).collect();
    let wrap = |s: &str| if s.contains('.') { format!("({s})") } else { s.to_string() };
    let trivial = BTreeSet::from([g.identity()]);
    let complemented = fixed.len() > 1 && has_complement(g, &c, &fixed);
    let descriptor = if complemented {
        format!(
            "({} x {}).{}",
            quotient_name(g, &fixed, &trivial),
            d,
            quotient_name(g, &c, &fixed)
        )
    } else {
        format!("{}.{}", wrap(d), quotient_name(g, &c, &trivial))
    };
    DescriptorDerivation {
        class_label: model.class_label(w),
        quotient_order: qo,
        centralizer_order: c.len(),
        fixed_in_e: fixed.len(),
        complemented,
        descriptor,
    }
}

/// The tabulated descriptor of an H1 class of the trivial action, checked against the
/// recipe.
pub fn structure_descriptor(model: &Sym4Model, class: &H1Class) -> Result<&'static str, CohomologyError> {
    let label = model.class_label(class.representative);
    table1_descriptor(&label).ok_or(CohomologyError::UnknownClass(label))
}
