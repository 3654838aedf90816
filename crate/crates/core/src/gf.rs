//! Arithmetic in `F_{p^e}` and dense matrices over it.
//!
//! The field is realized as `F_p[x]/(f)` for the first monic irreducible `f`
//! of degree `e` in a fixed enumeration, so matrices built on top of it are
//! reproducible across runs. Orders stay small here (the matrix-verification
//! grid needs at most `p^e ≈ 2^20`), so elements are plain coefficient
//! vectors and the generator is found by brute force over a factorization
//! of `p^e - 1`.

use crate::arith::{factorize, gcd, mod_inv};

/// The field `F_{p^e}` with a fixed monic irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    e: usize,
    /// Coefficients of the modulus, degree 0..=e, monic.
    modulus: Vec<u64>,
    order: u64,
}

/// An element of a [`GaloisField`]: coefficients of degree `0..e` mod `p`.
/// Ordering is lexicographic on the coefficient vector; it exists to make
/// orbit representatives and searches deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(Vec<u64>);

impl GaloisField {
    /// Builds `F_{p^e}`. The modulus is the first irreducible monic
    /// polynomial of degree `e` in the base-`p` counter enumeration of
    /// coefficient vectors.
    pub fn new(p: u64, e: usize) -> Self {
        assert!(e >= 1, "field degree must be positive");
        let order = (0..e).fold(1u64, |acc, _| {
            acc.checked_mul(p).expect("field order p^e must fit in u64")
        });
        let modulus = find_irreducible(p, e);
        Self {
            p,
            e,
            modulus,
            order,
        }
    }

    /// The characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The extension degree `e`.
    pub fn degree(&self) -> usize {
        self.e
    }

    /// `p^e`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients of the modulus polynomial (degree 0..=e).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> GfElem {
        GfElem(vec![0; self.e])
    }

    pub fn one(&self) -> GfElem {
        self.embed(1)
    }

    /// Embeds an integer into the prime field `F_p ⊆ F_{p^e}`.
    pub fn embed(&self, n: u64) -> GfElem {
        let mut c = vec![0; self.e];
        c[0] = n % self.p;
        GfElem(c)
    }

    /// The element whose coefficient vector is the base-`p` expansion of
    /// `index`; indexes run over `0..p^e`.
    pub fn elem_from_index(&self, mut index: u64) -> GfElem {
        let mut c = vec![0; self.e];
        for slot in c.iter_mut() {
            *slot = index % self.p;
            index /= self.p;
        }
        debug_assert_eq!(index, 0);
        GfElem(c)
    }

    /// Iterates over all `p^e` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GfElem> + '_ {
        (0..self.order).map(move |i| self.elem_from_index(i))
    }

    pub fn is_zero(&self, x: &GfElem) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &GfElem, y: &GfElem) -> GfElem {
        GfElem(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| (a + b) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, x: &GfElem, y: &GfElem) -> GfElem {
        GfElem(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| (a + self.p - b) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, x: &GfElem) -> GfElem {
        self.sub(&self.zero(), x)
    }

    pub fn mul(&self, x: &GfElem, y: &GfElem) -> GfElem {
        let mut prod = vec![0u64; 2 * self.e];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                prod[i + j] =
                    ((prod[i + j] as u128 + a as u128 * b as u128) % self.p as u128) as u64;
            }
        }
        self.reduce(prod)
    }

    pub fn scale(&self, x: &GfElem, k: u64) -> GfElem {
        let k = k % self.p;
        GfElem(
            x.0.iter()
                .map(|&a| ((a as u128 * k as u128) % self.p as u128) as u64)
                .collect(),
        )
    }

    pub fn pow(&self, x: &GfElem, mut exp: u64) -> GfElem {
        let mut base = x.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, x: &GfElem) -> GfElem {
        assert!(!self.is_zero(x), "division by zero in GF(p^e)");
        self.pow(x, self.order - 2)
    }

    /// Reduces a raw product (coefficients already mod p) by the modulus.
    fn reduce(&self, mut poly: Vec<u64>) -> GfElem {
        for i in (self.e..poly.len()).rev() {
            let coef = poly[i];
            if coef == 0 {
                continue;
            }
            poly[i] = 0;
            // x^i = x^{i-e} * (x^e mod f) with x^e = -sum modulus[j] x^j.
            for j in 0..self.e {
                let sub = (coef as u128 * self.modulus[j] as u128) % self.p as u128;
                poly[i - self.e + j] =
                    ((poly[i - self.e + j] as u128 + self.p as u128 - sub) % self.p as u128) as u64;
            }
        }
        poly.truncate(self.e);
        GfElem(poly)
    }

    /// The first generator of `F_{p^e}^×` in index order.
    pub fn generator(&self) -> GfElem {
        let factors = factorize(self.order - 1);
        'cand: for i in 1..self.order {
            let x = self.elem_from_index(i);
            if self.is_zero(&x) {
                continue;
            }
            for &(q, _) in &factors {
                if self.pow(&x, (self.order - 1) / q) == self.one() {
                    continue 'cand;
                }
            }
            return x;
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// A primitive `m`-th root of unity `ζ_m` with `ζ_m^c = a` in the prime
    /// field, i.e. compatible with the choice fixed by the group data.
    /// Requires `m | p^e - 1` and that `a` has order `m/gcd(m, c)`.
    pub fn compatible_zeta_m(&self, m: u64, c: u64, a: u64) -> GfElem {
        assert!(m >= 1 && (self.order - 1) % m == 0, "m must divide p^e - 1");
        let base = self.pow(&self.generator(), (self.order - 1) / m);
        let target = self.embed(a);
        for t in 1..=m {
            if gcd(t, m) != 1 {
                continue;
            }
            let zeta = self.pow(&base, t);
            if self.pow(&zeta, c) == target {
                return zeta;
            }
        }
        panic!("no compatible m-th root of unity; c/a inconsistent with m")
    }
}

/// First monic irreducible of degree `e` over `F_p` in counter order: the
/// candidate with counter `t` has lower coefficients given by the base-`p`
/// digits of `t`.
fn find_irreducible(p: u64, e: usize) -> Vec<u64> {
    if e == 1 {
        // x itself: quotient is F_p.
        return vec![0, 1];
    }
    let count = (0..e).fold(1u64, |acc, _| acc * p);
    for t in 0..count {
        let mut f = Vec::with_capacity(e + 1);
        let mut v = t;
        for _ in 0..e {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Irreducibility over `F_p`: `x^{p^e} = x (mod f)` and
/// `gcd(x^{p^{e/q}} - x, f) = 1` for every prime `q | e`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    let xq = |k: u32| -> Vec<u64> {
        // x^(p^k) mod f by repeated p-th powering.
        let mut acc = vec![0, 1]; // x
        for _ in 0..k {
            acc = poly_pow_mod(&acc, p, f, p);
        }
        acc
    };
    let frob = xq(e as u32);
    // x^{p^e} - x must vanish mod f.
    if poly_sub(&frob, &[0, 1], p).iter().any(|&c| c != 0) {
        return false;
    }
    for (q, _) in factorize(e as u64) {
        let part = xq((e as u64 / q) as u32);
        let diff = poly_sub(&part, &[0, 1], p);
        if poly_gcd(&diff, f, p).len() > 1 {
            return false;
        }
    }
    true
}

fn poly_trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    poly_trim(out)
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_pow_mod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1];
    let mut b = poly_rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, f, p);
        }
        b = poly_mul_mod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let df = f.len() - 1;
    let lead_inv = mod_inv(f[df], p).expect("modulus leading coefficient invertible");
    while poly_trim(r.clone()).len() > df {
        r = poly_trim(r);
        let dr = r.len() - 1;
        let coef = ((r[dr] as u128 * lead_inv as u128) % p as u128) as u64;
        for j in 0..=df {
            let sub = (coef as u128 * f[j] as u128) % p as u128;
            r[dr - df + j] = ((r[dr - df + j] as u128 + p as u128 - sub) % p as u128) as u64;
        }
    }
    poly_trim(r)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = poly_trim(a.to_vec());
    let mut y = poly_trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// A square matrix over a [`GaloisField`]; row-major entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMatrix {
    n: usize,
    entries: Vec<GfElem>,
}

impl GfMatrix {
    pub fn zero(field: &GaloisField, n: usize) -> Self {
        Self {
            n,
            entries: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: &GaloisField, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &GfElem {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: GfElem) {
        self.entries[row * self.n + col] = value;
    }

    pub fn mul(&self, field: &GaloisField, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(field, self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..self.n {
                    let add = field.mul(a, other.get(k, j));
                    let cur = field.add(out.get(i, j), &add);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn pow(&self, field: &GaloisField, mut exp: u64) -> Self {
        let mut acc = Self::identity(field, self.n);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(field, &base);
            }
            base = base.mul(field, &base);
            exp >>= 1;
        }
        acc
    }

    /// Diagonal entries, top-left to bottom-right.
    pub fn diagonal(&self) -> Vec<GfElem> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_upper_triangular(&self, field: &GaloisField) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| field.is_zero(self.get(i, j))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = GaloisField::new(7, 1);
        assert_eq!(f.order(), 7);
        let three = f.embed(3);
        assert_eq!(f.mul(&three, &f.inv(&three)), f.one());
        assert_eq!(f.pow(&three, 6), f.one());
    }

    #[test]
    fn f9_has_eight_unit_powers() {
        let f = GaloisField::new(3, 2);
        assert_eq!(f.order(), 9);
        let g = f.generator();
        let mut seen = std::collections::HashSet::new();
        for k in 0..8 {
            seen.insert(f.pow(&g, k));
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn compatible_zeta_in_f7() {
        // Group (7, 3, 2) has c = 1, so zeta_3 must equal 2 in F_7.
        let f = GaloisField::new(7, 1);
        let zeta = f.compatible_zeta_m(3, 1, 2);
        assert_eq!(zeta, f.embed(2));
        assert_eq!(f.pow(&zeta, 3), f.one());
    }

    #[test]
    fn larger_extension_field() {
        // ord(3 mod 16) = 4.
        let f = GaloisField::new(3, 4);
        assert_eq!(f.order(), 81);
        let zeta = f.compatible_zeta_m(16, 0, 1);
        assert_eq!(f.pow(&zeta, 16), f.one());
        assert_ne!(f.pow(&zeta, 8), f.one());
    }

    #[test]
    fn matrix_powers() {
        let f = GaloisField::new(3, 1);
        let mut j = GfMatrix::identity(&f, 3);
        j.set(0, 1, f.one());
        j.set(1, 2, f.one());
        assert_eq!(j.pow(&f, 3), GfMatrix::identity(&f, 3));
        assert_ne!(j.pow(&f, 2), GfMatrix::identity(&f, 3));
    }
}
