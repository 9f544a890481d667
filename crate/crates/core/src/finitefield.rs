//! Finite fields `GF(p^k)` for odd `p`, with `p^k < 2^64`.
//!
//! Elements are packed integers `sum_i c_i p^i` whose base-`p` digits are the
//! coordinates in the polynomial basis `1, x, ..., x^{k-1}`. The packed value doubles
//! as the enumeration order used by deterministic searches.
//!
//! The defining polynomial is the first irreducible monic polynomial of degree `k`
//! when the lower coefficients `(c_0, ..., c_{k-1})` are read as base-`p` digits of
//! `0, 1, 2, ...`; for `k = 1` that is `x` itself.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_DEGREE: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{k} does not fit in 64 bits")]
    TooLarge { p: u64, k: usize },
    #[error("modulus polynomial of degree {0} is not irreducible")]
    Reducible(usize),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("gcd({p}, {n}) != 1")]
    NotCoprime { p: u64, n: u64 },
    #[error("no primitive {n}-th root of unity in a field of order {order}")]
    NoRootOfUnity { n: u64, order: u64 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `Some((p, e))` with `n = p^e`, `p` prime.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        out.push(p);
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Multiplicative order of `p` modulo `n`: the least `k` with `n | p^k - 1`.
pub fn min_extension_degree(p: u64, n: u64) -> Result<usize, FieldError> {
    if n == 0 || crate::lattices::gcd(p, n) != 1 {
        return Err(FieldError::NotCoprime { p, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let mut k = 1;
    let mut x = p % n;
    while x != 1 {
        x = mul_mod(x, p, n);
        k += 1;
    }
    Ok(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Position in the enumeration order.
    pub fn packed(self) -> u64 {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u64,
    pub k: usize,
    /// Monic modulus, coefficients from `x^0` to `x^k`.
    pub modulus_poly: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct GaloisField {
    params: FieldParams,
    order: u64,
    // p^i for i < k
    powers: Vec<u64>,
    // discrete log / antilog tables for small extension fields
    tables: Option<Arc<LogTables>>,
}

#[derive(Debug)]
struct LogTables {
    log: Vec<u32>,
    exp: Vec<u64>,
}

const TABLE_LIMIT: u64 = 1 << 20;

type Digits = [u64; MAX_DEGREE];

impl GaloisField {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    /// `GF(p^k)` with the first irreducible modulus in the documented search order.
    pub fn new(p: u64, k: usize) -> Result<Self, FieldError> {
        let order = check_size(p, k)?;
        if k == 1 {
            return Self::with_modulus(p, vec![0, 1]);
        }
        let mut lower = 0u64;
        while lower < order {
            let mut poly = Vec::with_capacity(k + 1);
            let mut n = lower;
            for _ in 0..k {
                poly.push(n % p);
                n /= p;
            }
            poly.push(1);
            if poly[0] != 0 && poly::is_irreducible(&poly, p) {
                return Self::with_modulus(p, poly);
            }
            lower += 1;
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn with_modulus(p: u64, modulus_poly: Vec<u64>) -> Result<Self, FieldError> {
        let k = modulus_poly.len().saturating_sub(1);
        let order = check_size(p, k)?;
        if modulus_poly[k] != 1 || modulus_poly.iter().any(|&c| c >= p) {
            return Err(FieldError::Reducible(k));
        }
        if k > 1 && !poly::is_irreducible(&modulus_poly, p) {
            return Err(FieldError::Reducible(k));
        }
        let mut powers = vec![1u64; k];
        for i in 1..k {
            powers[i] = powers[i - 1] * p;
        }
        let mut field = GaloisField {
            params: FieldParams { p, k, modulus_poly },
            order,
            powers,
            tables: None,
        };
        if k > 1 && order <= TABLE_LIMIT {
            let g = field.primitive_root_of_unity(order - 1)?;
            let mut log = vec![0u32; order as usize];
            let mut exp = Vec::with_capacity(order as usize - 1);
            let mut x = FieldElem::ONE;
            for i in 0..order - 1 {
                exp.push(x.0);
                log[x.0 as usize] = i as u32;
                x = field.mul(x, g);
            }
            field.tables = Some(Arc::new(LogTables { log, exp }));
        }
        Ok(field)
    }

    /// The smallest extension of `GF(p)` containing a primitive `n`-th root of unity.
    pub fn for_roots_of_unity(p: u64, n: u64) -> Result<Self, FieldError> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Self::new(p, min_extension_degree(p, n)?)
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn characteristic(&self) -> u64 {
        self.params.p
    }

    pub fn degree(&self) -> usize {
        self.params.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.params.p as i64) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElem {
        let mut d = [0u64; MAX_DEGREE];
        for (i, &c) in coeffs.iter().enumerate().take(self.params.k) {
            d[i] = c % self.params.p;
        }
        self.pack(&d)
    }

    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        self.unpack(a)[..self.params.k].to_vec()
    }

    /// Element with packed index `n` (must be below the field order).
    pub fn element(&self, n: u64) -> FieldElem {
        assert!(n < self.order, "element index out of range");
        FieldElem(n)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order).map(FieldElem)
    }

    pub fn random_nonzero<R: Rng>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(1..self.order))
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> FieldElem {
        FieldElem(rng.gen_range(0..self.order))
    }

    fn unpack(&self, a: FieldElem) -> Digits {
        let mut d = [0u64; MAX_DEGREE];
        let mut n = a.0;
        let p = self.params.p;
        for slot in d.iter_mut().take(self.params.k) {
            *slot = n % p;
            n /= p;
        }
        d
    }

    fn pack(&self, d: &Digits) -> FieldElem {
        let mut n = 0;
        for i in 0..self.params.k {
            n += d[i] * self.powers[i];
        }
        FieldElem(n)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.params.p;
        if self.params.k == 1 {
            let s = a.0 as u128 + b.0 as u128;
            return FieldElem((s % p as u128) as u64);
        }
        let (x, y) = (self.unpack(a), self.unpack(b));
        let mut d = [0u64; MAX_DEGREE];
        for i in 0..self.params.k {
            d[i] = (x[i] + y[i]) % p;
        }
        self.pack(&d)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.params.p;
        if self.params.k == 1 {
            return FieldElem((p - a.0) % p);
        }
        let x = self.unpack(a);
        let mut d = [0u64; MAX_DEGREE];
        for i in 0..self.params.k {
            d[i] = (p - x[i]) % p;
        }
        self.pack(&d)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.params.p;
        let k = self.params.k;
        if k == 1 {
            return FieldElem(mul_mod(a.0, b.0, p));
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        if a.0 == 1 {
            return b;
        }
        if b.0 == 1 {
            return a;
        }
        if let Some(t) = &self.tables {
            let n = self.order as usize - 1;
            let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
            return FieldElem(t.exp[if i >= n { i - n } else { i }]);
        }
        self.mul_poly(a, b)
    }

    fn mul_poly(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.params.p;
        let k = self.params.k;
        let (x, y) = (self.unpack(a), self.unpack(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = ((prod[i + j] as u128 + x[i] as u128 * y[j] as u128) % p as u128) as u64;
            }
        }
        let f = &self.params.modulus_poly;
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let t = mul_mod(c, f[j], p);
                prod[i - k + j] = (prod[i - k + j] + p - t) % p;
            }
        }
        let mut d = [0u64; MAX_DEGREE];
        d[..k].copy_from_slice(&prod[..k]);
        self.pack(&d)
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut r = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// `a^n` for a signed exponent; `a` must be nonzero when `n < 0`.
    pub fn pow_signed(&self, a: FieldElem, n: i64) -> Result<FieldElem, FieldError> {
        if n >= 0 {
            Ok(self.pow(a, n as u64))
        } else {
            Ok(self.pow(self.inv(a)?, n.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElem) -> Result<u64, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let mut n = self.order - 1;
        for l in prime_factors(self.order - 1) {
            while n.is_multiple_of(l) && self.pow(a, n / l) == FieldElem::ONE {
                n /= l;
            }
        }
        Ok(n)
    }

    /// The first element (in packed order) of exact multiplicative order `n`, found as
    /// `a^((q-1)/n)` for `a = 1, 2, ...`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<FieldElem, FieldError> {
        let q1 = self.order - 1;
        if n == 0 || !q1.is_multiple_of(n) {
            return Err(FieldError::NoRootOfUnity { n, order: self.order });
        }
        let primes = prime_factors(n);
        for a in 1..self.order {
            let b = self.pow(FieldElem(a), q1 / n);
            if primes.iter().all(|&l| self.pow(b, n / l) != FieldElem::ONE) {
                return Ok(b);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }

    pub fn display(&self, a: FieldElem) -> String {
        if self.params.k == 1 {
            return a.0.to_string();
        }
        let d = self.unpack(a);
        let mut terms = Vec::new();
        for i in (0..self.params.k).rev() {
            match (d[i], i) {
                (0, _) => {}
                (c, 0) => terms.push(c.to_string()),
                (1, 1) => terms.push("x".into()),
                (c, 1) => terms.push(format!("{c}x")),
                (1, i) => terms.push(format!("x^{i}")),
                (c, i) => terms.push(format!("{c}x^{i}")),
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for FieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

fn check_size(p: u64, k: usize) -> Result<u64, FieldError> {
    if p < 3 || p.is_multiple_of(2) || !is_prime(p) {
        return Err(FieldError::NotOddPrime(p));
    }
    if k == 0 {
        return Err(FieldError::ZeroDegree);
    }
    if k > MAX_DEGREE {
        return Err(FieldError::TooLarge { p, k });
    }
    let mut order: u64 = 1;
    for _ in 0..k {
        order = order.checked_mul(p).ok_or(FieldError::TooLarge { p, k })?;
    }
    Ok(order)
}

/// Dense polynomials over `GF(p)`, coefficients from low to high degree.
mod poly {
    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        super::pow_mod(a, p - 2, p)
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let f = trim(f.to_vec());
        let df = f.len() - 1;
        let lead_inv = inv_mod(f[df], p);
        if df == 0 {
            return vec![0];
        }
        while r.len() > df {
            let dr = r.len() - 1;
            let c = super::mul_mod(r[dr], lead_inv, p);
            for j in 0..=df {
                let t = super::mul_mod(c, f[j], p);
                r[dr - df + j] = (r[dr - df + j] + p - t) % p;
            }
            r.pop();
            r = trim(r);
        }
        r
    }

    fn mul_rem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + super::mul_mod(x, y, p)) % p;
            }
        }
        rem(&out, f, p)
    }

    fn pow_rem(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut r = vec![1u64];
        let mut b = rem(base, f, p);
        while e > 0 {
            if e & 1 == 1 {
                r = mul_rem(&r, &b, f, p);
            }
            b = mul_rem(&b, &b, f, p);
            e >>= 1;
        }
        r
    }

    fn is_zero(a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !is_zero(&y) {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    /// Ben-Or test: `f` of degree `k` is irreducible iff `gcd(x^{p^i} - x, f) = 1`
    /// for every `1 <= i <= k/2`.
    pub(super) fn is_irreducible(f: &[u64], p: u64) -> bool {
        let k = f.len() - 1;
        if k <= 1 {
            return k == 1;
        }
        let x = vec![0u64, 1];
        let mut xp = x.clone();
        for _ in 0..k / 2 {
            xp = pow_rem(&xp, p, f, p);
            let mut diff = xp.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let g = gcd(f, &diff, p);
            if trim(g).len() > 1 {
                return false;
            }
        }
        true
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn small_irreducibility() {
            // x^2 + 1 over GF(3) is irreducible, over GF(5) it is not
            assert!(is_irreducible(&[1, 0, 1], 3));
            assert!(!is_irreducible(&[1, 0, 1], 5));
            // (x^2 + 1)^2 over GF(3)
            assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3));
        }

        #[test]
        fn irreducible_count_matches_necklace_formula() {
            // monic irreducibles of degree 4 over GF(3): (3^4 - 3^2) / 4 = 18
            let mut count = 0;
            for n in 0..81u64 {
                let f = [n % 3, n / 3 % 3, n / 9 % 3, n / 27, 1];
                if is_irreducible(&f, 3) {
                    count += 1;
                }
            }
            assert_eq!(count, 18);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling_rng;

    #[test]
    fn extension_degrees() {
        assert_eq!(min_extension_degree(17, 16).unwrap(), 1);
        assert_eq!(min_extension_degree(3, 16).unwrap(), 4);
        assert_eq!(min_extension_degree(7, 8).unwrap(), 2);
        assert_eq!(min_extension_degree(5, 16).unwrap(), 4);
        assert_eq!(min_extension_degree(7, 16).unwrap(), 2);
        assert!(matches!(min_extension_degree(3, 9), Err(FieldError::NotCoprime { .. })));
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert_eq!(GaloisField::prime(2).unwrap_err(), FieldError::NotOddPrime(2));
        assert_eq!(GaloisField::prime(9).unwrap_err(), FieldError::NotOddPrime(9));
        assert!(GaloisField::new(3, 41).is_err());
        assert!(GaloisField::with_modulus(5, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn order_eight_in_gf17() {
        let f = GaloisField::prime(17).unwrap();
        let z = f.primitive_root_of_unity(8).unwrap();
        // brute-force oracle: the elements of order 8 in Z/17
        let order8: Vec<u64> = (1..17u64)
            .filter(|&a| {
                let o = (1..=16).find(|&n| pow_mod(a, n, 17) == 1).unwrap();
                o == 8
            })
            .collect();
        assert!(order8.contains(&z.packed()));
        assert_eq!(f.multiplicative_order(f.mul(z, z)).unwrap(), 4);
        assert_eq!(f.pow(z, 4), f.from_int(-1));
        assert_eq!(f.pow(z, 8), f.one());
    }

    #[test]
    fn roots_in_extensions() {
        for (p, k) in [(3u64, 4usize), (5, 4), (7, 2), (17, 1)] {
            let f = GaloisField::for_roots_of_unity(p, 16).unwrap();
            assert_eq!(f.degree(), k);
            let r = f.primitive_root_of_unity(16).unwrap();
            assert_eq!(f.pow(r, 16), f.one());
            assert_ne!(f.pow(r, 8), f.one());
            assert_eq!(f.pow(r, 8), f.from_int(-1));
            assert_eq!(f.multiplicative_order(r).unwrap(), 16);
        }
        let f = GaloisField::prime(7).unwrap();
        assert!(matches!(
            f.primitive_root_of_unity(8),
            Err(FieldError::NoRootOfUnity { n: 8, order: 7 })
        ));
    }

    #[test]
    fn deterministic_construction() {
        let a = GaloisField::new(3, 4).unwrap();
        let b = GaloisField::new(3, 4).unwrap();
        assert_eq!(a.params(), b.params());
        assert_eq!(
            a.primitive_root_of_unity(16).unwrap(),
            b.primitive_root_of_unity(16).unwrap()
        );
    }

    #[test]
    fn field_axioms_sampled() {
        let mut rng = sampling_rng();
        for (p, k) in [(3u64, 4usize), (5, 2), (7, 2), (17, 1), (3, 1)] {
            let f = GaloisField::new(p, k).unwrap();
            for _ in 0..200 {
                let a = f.random(&mut rng);
                let b = f.random(&mut rng);
                let c = f.random(&mut rng);
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                // Frobenius is additive in characteristic p
                assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                    assert_eq!(f.pow(a, f.order() - 1), f.one());
                }
            }
        }
        let f = GaloisField::prime(5).unwrap();
        assert_eq!(f.inv(f.zero()), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn log_tables_agree_with_polynomial_product() {
        let f = GaloisField::new(3, 4).unwrap();
        assert!(f.tables.is_some());
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul_poly(a, b));
            }
        }
    }

    #[test]
    fn primality_helpers() {
        assert!(is_prime(17) && is_prime(2) && !is_prime(1) && !is_prime(91));
        assert!(is_prime(1_000_000_007));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_factors(80), vec![2, 5]);
    }
}
