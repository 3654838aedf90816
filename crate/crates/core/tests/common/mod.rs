#![allow(dead_code)] // each test binary uses a different slice of the oracles

//! Independent brute-force oracles shared by the integration suites.
//!
//! Nothing here reuses the closed forms under test: the group model
//! multiplies explicit pairs, and the extension-count oracle counts
//! Frobenius-stable orbits inside an explicitly enumerated finite field.

use num::BigUint;
use wild_mckay::arith::{gcd, mod_pow};
use wild_mckay::gf::GaloisField;
use wild_mckay::group::MetacyclicGroup;
use wild_mckay::moduli::stratum_dimension;

/// The abstract group `⟨σ, τ | σ^p, τ^m, τστ⁻¹σ^{-a}⟩` as explicit pairs
/// `(i, j) = σ^i τ^j` with `(i1, j1)·(i2, j2) = (i1 + a^{j1} i2, j1 + j2)`.
pub struct AbstractGroup {
    pub p: u64,
    pub m: u64,
    pub a: u64,
}

pub type El = (u64, u64);

impl AbstractGroup {
    pub fn new(p: u64, m: u64, a: u64) -> Self {
        Self { p, m, a }
    }

    pub fn elements(&self) -> Vec<El> {
        let mut out = Vec::with_capacity((self.p * self.m) as usize);
        for i in 0..self.p {
            for j in 0..self.m {
                out.push((i, j));
            }
        }
        out
    }

    pub fn mul(&self, x: El, y: El) -> El {
        let twist = mod_pow(self.a, x.1, self.p);
        ((x.0 + twist * y.0) % self.p, (x.1 + y.1) % self.m)
    }

    pub fn inv(&self, x: El) -> El {
        // Search is fine at this size.
        self.elements()
            .into_iter()
            .find(|&y| self.mul(x, y) == (0, 0))
            .expect("group element has an inverse")
    }

    pub fn element_order(&self, x: El) -> u64 {
        let mut acc = x;
        let mut k = 1;
        while acc != (0, 0) {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn center(&self) -> Vec<El> {
        let els = self.elements();
        els.iter()
            .copied()
            .filter(|&z| els.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<El>> {
        let els = self.elements();
        let mut seen = std::collections::HashSet::new();
        let mut classes = Vec::new();
        for &x in &els {
            if seen.contains(&x) {
                continue;
            }
            let mut class: Vec<El> = els
                .iter()
                .map(|&g| self.mul(self.mul(g, x), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen.insert(y);
            }
            classes.push(class);
        }
        classes
    }

    /// Conjugacy classes of elements whose order is coprime to p.
    pub fn tame_classes(&self) -> Vec<Vec<El>> {
        self.conjugacy_classes()
            .into_iter()
            .filter(|class| gcd(self.element_order(class[0]), self.p) == 1)
            .collect()
    }
}

/// Counts `G`-extensions of `F_q((t))` with jump `r` as
/// `|Z(G)| · #{Frobenius-stable μ_n-orbits of G_m × A^{dim-1}}`,
/// the orbit count evaluated by Burnside over the twisted sectors
/// `{v : v^q = ζ·v}`, each sector size obtained by enumerating an explicit
/// field `F_{q^j}` large enough to contain it.
///
/// Precondition: `q = 1 (mod m)` (the matching-component case) and `q` a
/// power of `p`.
pub fn count_extensions_oracle(group: &MetacyclicGroup, q: u64, gamma: u64, r: u64) -> BigUint {
    let p = group.p();
    let n = group.n();
    assert_eq!(
        q % group.m().max(1),
        1 % group.m().max(1),
        "oracle needs q = 1 mod m"
    );
    let f = {
        let mut f = 0u32;
        let mut qq = q;
        while qq > 1 {
            assert_eq!(qq % p, 0);
            qq /= p;
            f += 1;
        }
        f
    };
    // Smallest j with n(q-1) | q^j - 1: all solutions of x^{q-1} = ζ^{-1}
    // lie in that field.
    let mut j = 1u32;
    loop {
        let mut order = 1u64;
        for _ in 0..j {
            order *= q;
        }
        if (order - 1) % (n * (q - 1)) == 0 {
            break;
        }
        j += 1;
    }
    let field = GaloisField::new(p, (f * j) as usize);
    let sector_order = field.order();
    let zeta = field.pow(&field.generator(), (sector_order - 1) / n);

    let dim = stratum_dimension(group, gamma, r).expect("oracle called on admissible jumps");
    let mut total = BigUint::from(0u32);
    for k in 0..n {
        let twist = field.pow(&zeta, k);
        // #{x != 0 : x^q = twist * x} and #{y : y^q = twist * y}.
        let mut cnt_x = 0u64;
        let mut cnt_y = 0u64;
        for el in field.elements() {
            if field.pow(&el, q) == field.mul(&twist, &el) {
                cnt_y += 1;
                if !field.is_zero(&el) {
                    cnt_x += 1;
                }
            }
        }
        total += BigUint::from(cnt_x) * BigUint::from(cnt_y).pow(dim as u32 - 1);
    }
    let n_big = BigUint::from(n);
    assert!(
        (total.clone() % &n_big) == BigUint::from(0u32),
        "Burnside sum must be divisible by the group order"
    );
    BigUint::from(group.center_order()) * (total / n_big)
}

/// Literal orbit enumeration over `F_{q^n}` for small strata: counts
/// Frobenius-stable μ_n-orbits of vectors `(x, y_2, …, y_dim)` with
/// `x != 0`. Cross-checks the Burnside computation.
pub fn frobenius_orbit_count_enumerated(group: &MetacyclicGroup, q: u64, dim: u64) -> u64 {
    let p = group.p();
    let n = group.n();
    let f = {
        let mut f = 0u32;
        let mut qq = q;
        while qq > 1 {
            qq /= p;
            f += 1;
        }
        f
    };
    let mut j = 1u32;
    loop {
        let mut order = 1u64;
        for _ in 0..j {
            order *= q;
        }
        if (order - 1) % (n * (q - 1)) == 0 {
            break;
        }
        j += 1;
    }
    let field = GaloisField::new(p, (f * j) as usize);
    let fo = field.order();
    let zeta = field.pow(&field.generator(), (fo - 1) / n);
    let mu: Vec<_> = (0..n).map(|k| field.pow(&zeta, k)).collect();

    let dim = dim as usize;
    let mut count = 0u64;
    let mut index = vec![0u64; dim];
    loop {
        if index[0] != 0 {
            let v: Vec<_> = index.iter().map(|&i| field.elem_from_index(i)).collect();
            let orbit: Vec<Vec<_>> = mu
                .iter()
                .map(|z| v.iter().map(|x| field.mul(x, z)).collect())
                .collect();
            // Count each orbit once, at its least member.
            if orbit.iter().min().unwrap() == &v {
                let frob: Vec<_> = v.iter().map(|x| field.pow(x, q)).collect();
                if orbit.contains(&frob) {
                    count += 1;
                }
            }
        }
        let mut pos = dim;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < fo {
                break;
            }
            index[pos] = 0;
        }
    }
}

/// Every valid `(p, m, a)` with the given predicate on `(p, m)`.
pub fn groups_where(mut keep: impl FnMut(u64, u64) -> bool) -> Vec<MetacyclicGroup> {
    let primes = [
        2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
    ];
    let mut out = Vec::new();
    for &p in &primes {
        for m in 1..=200 {
            if gcd(m, p) != 1 || !keep(p, m) {
                continue;
            }
            for a in 1..p.max(2) {
                if mod_pow(a, m, p) == 1 {
                    if let Ok(g) = MetacyclicGroup::new(p, m, a) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}
