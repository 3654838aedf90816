//! Modular representations of `G` as multisets of indecomposables.
//!
//! Over an algebraically closed field of characteristic `p`, the group
//! `G = Z/p ⋊ Z/m` has exactly `m·p` indecomposable modules, indexed by a
//! dimension `d ∈ {1, …, p}` and the exponent `s` of the first diagonal
//! entry `ξ₁ = ζ_m^s` of `τ`. A representation is a nonempty multiset of
//! such summands; the invariant `D_V = Σ d(d-1)/2` controls convergence of
//! every stringy quantity downstream.
//!
//! [`construct_matrices`] realizes a summand explicitly over `F_{p^e}`
//! (`e` the order of `p` mod `m`): `σ` as the unipotent Jordan block and
//! `τ` as the upper-triangular matrix acting on the canonical filtration of
//! the projective cover. This is a verification path; no formula below
//! consumes the matrices.

use num::BigRational;

use crate::arith::multiplicative_order;
use crate::error::{Error, Result};
use crate::gf::{GaloisField, GfElem, GfMatrix};
use crate::group::MetacyclicGroup;

/// An indecomposable `kG`-module `V_{d,s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Indecomposable {
    d: u64,
    s: u64,
}

impl Indecomposable {
    /// Validates `1 <= d <= p` and `0 <= s < m`.
    pub fn new(group: &MetacyclicGroup, d: u64, s: u64) -> Result<Self> {
        if d == 0 || d > group.p() || s >= group.m() {
            return Err(Error::BadSummand {
                d,
                s,
                p: group.p(),
                m: group.m(),
            });
        }
        Ok(Self { d, s })
    }

    /// The dimension `d`.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// The exponent `s` of the leading eigenvalue of `τ`.
    pub fn s(&self) -> u64 {
        self.s
    }
}

/// A `G`-representation as a nonempty list of indecomposable summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    summands: Vec<Indecomposable>,
    dim: u64,
    d_invariant: u64,
}

impl Representation {
    pub fn new(summands: Vec<Indecomposable>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyRepresentation);
        }
        let dim = summands.iter().map(|v| v.d).sum();
        let d_invariant = summands.iter().map(|v| v.d * (v.d - 1) / 2).sum();
        Ok(Self {
            summands,
            dim,
            d_invariant,
        })
    }

    /// Builds a representation from `(d, s)` pairs, validating each against
    /// the group. This is the shared input format of the CLI.
    pub fn from_pairs(group: &MetacyclicGroup, pairs: &[(u64, u64)]) -> Result<Self> {
        let summands = pairs
            .iter()
            .map(|&(d, s)| Indecomposable::new(group, d, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(summands)
    }

    pub fn summands(&self) -> &[Indecomposable] {
        &self.summands
    }

    /// Total dimension `d = Σ d_λ`.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// `D_V = Σ d_λ(d_λ - 1)/2`.
    pub fn d_invariant(&self) -> u64 {
        self.d_invariant
    }
}

/// Exponents of the eigenvalues of `τ` on `V_{d,s}`: the diagonal of `τ` is
/// `ζ_m^{s}, ζ_m^{s-c}, …, ζ_m^{s-(d-1)c}`, returned as residues mod `m`.
pub fn tau_eigenvalue_exponents(group: &MetacyclicGroup, v: &Indecomposable) -> Vec<u64> {
    let m = group.m();
    let c = group.root_of_unity_exponent();
    (0..v.d)
        .map(|j| {
            let shift = (j * c) % m;
            (v.s + m - shift) % m
        })
        .collect()
}

/// The age of `τ^k` acting on `V`: `Σ ((k·e_i) mod m)/m` over all eigenvalue
/// exponents `e_i` of `τ`, with the representative taken in `{0, …, m-1}`.
pub fn age(group: &MetacyclicGroup, v: &Representation, k: u64) -> BigRational {
    let m = group.m();
    let mut total: u64 = 0;
    for summand in v.summands() {
        for e in tau_eigenvalue_exponents(group, summand) {
            total += (k % m) * e % m;
        }
    }
    BigRational::new(total.into(), m.into())
}

/// Explicit matrices for a summand, over the field of their realization.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    /// `F_{p^e}` with `e` the multiplicative order of `p` mod `m`.
    pub field: GaloisField,
    /// The fixed primitive `m`-th root of unity with `ζ_m^c = a`.
    pub zeta_m: GfElem,
    /// `σ`: the `d×d` unipotent Jordan block.
    pub sigma: GfMatrix,
    /// `τ`: upper triangular with diagonal `ζ_m^{s-jc}`.
    pub tau: GfMatrix,
}

/// Builds `σ` and `τ` for `V_{d,s}` over `F_{p^e}` and verifies the three
/// relations `σ^p = 1`, `τ^m = 1`, `τστ⁻¹ = σ^a` exactly.
///
/// `τ` is read off the submodule spanned by the top `d` steps of the radical
/// filtration of the projective cover: with `δ = σ - 1` and `D = (1+δ)^a - 1`
/// acting on `F_p[δ]/(δ^p)`, the action of `τ` on `δ^j` is `D^j`, and
/// rescaling by `χ = ζ_m^s` pins the leading diagonal entry. Solving the
/// intertwining system `τσ = σ^a τ` alone would leave free off-diagonal
/// parameters that can break `τ^m = 1`; this construction is a solution of
/// that system for which all three relations hold.
pub fn construct_matrices(
    group: &MetacyclicGroup,
    v: &Indecomposable,
) -> Result<MatrixRealization> {
    let p = group.p();
    let m = group.m();
    let d = v.d as usize;
    let e = if m == 1 {
        1
    } else {
        multiplicative_order(p % m, m) as usize
    };
    let field = GaloisField::new(p, e);
    let zeta_m = field.compatible_zeta_m(m, group.root_of_unity_exponent(), group.a());
    let chi = field.pow(&zeta_m, v.s);

    // sigma: Jordan block with 1s on the superdiagonal.
    let mut sigma = GfMatrix::identity(&field, d);
    for i in 0..d.saturating_sub(1) {
        sigma.set(i, i + 1, field.one());
    }

    // Powers of D = (1+delta)^a - 1 in F_p[delta]/(delta^p).
    let pu = p as usize;
    let mut base = vec![0u64; pu]; // coefficients of D
    {
        // (1+delta)^a - 1 via iterated multiplication by (1+delta).
        let mut pow = vec![0u64; pu];
        pow[0] = 1;
        for _ in 0..group.a() {
            let mut next = pow.clone();
            for i in (1..pu).rev() {
                next[i] = (next[i] + pow[i - 1]) % p;
            }
            pow = next;
        }
        base[..].copy_from_slice(&pow);
        base[0] = 0; // subtract the identity
    }
    // d_pows[j][l] = coefficient of delta^l in D^j.
    let mut d_pows: Vec<Vec<u64>> = Vec::with_capacity(pu);
    let mut cur = vec![0u64; pu];
    cur[0] = 1;
    d_pows.push(cur.clone());
    for _ in 1..pu {
        let mut next = vec![0u64; pu];
        for (l, &x) in cur.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (i, &y) in base.iter().enumerate() {
                if y == 0 || l + i >= pu {
                    continue;
                }
                next[l + i] = (next[l + i] + x * y) % p;
            }
        }
        d_pows.push(next.clone());
        cur = next;
    }

    // Basis u_k = delta^{p-k} v for k = 1..=d; tau u_k = chi * D^{p-k} v.
    let mut tau = GfMatrix::zero(&field, d);
    for k in 1..=d {
        let j = pu - k;
        for kp in 1..=d {
            let l = pu - kp;
            let coef = d_pows[j][l];
            if coef != 0 {
                tau.set(kp - 1, k - 1, field.scale(&chi, coef));
            }
        }
    }

    // Verify the relations exactly.
    let id = GfMatrix::identity(&field, d);
    let relations_ok = sigma.pow(&field, p) == id
        && tau.pow(&field, m) == id
        && tau.mul(&field, &sigma) == sigma.pow(&field, group.a()).mul(&field, &tau)
        && tau.is_upper_triangular(&field);
    if !relations_ok {
        return Err(Error::NoSolution { d: v.d, s: v.s });
    }

    Ok(MatrixRealization {
        field,
        zeta_m,
        sigma,
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, One, Zero};

    fn s3() -> MetacyclicGroup {
        MetacyclicGroup::new(3, 2, 2).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eigenvalue_exponents() {
        let g = s3();
        let p2 = Indecomposable::new(&g, 3, 1).unwrap();
        assert_eq!(tau_eigenvalue_exponents(&g, &p2), vec![1, 0, 1]);
        let p1 = Indecomposable::new(&g, 3, 0).unwrap();
        assert_eq!(tau_eigenvalue_exponents(&g, &p1), vec![0, 1, 0]);
        let trivial = Indecomposable::new(&g, 1, 0).unwrap();
        assert_eq!(tau_eigenvalue_exponents(&g, &trivial), vec![0]);
    }

    #[test]
    fn ages_for_s3() {
        let g = s3();
        let p2 = Representation::from_pairs(&g, &[(3, 1)]).unwrap();
        assert_eq!(age(&g, &p2, 1), BigRational::one());
        assert!(age(&g, &p2, 0).is_zero());
        let p1p1 = Representation::from_pairs(&g, &[(3, 0), (3, 0)]).unwrap();
        assert_eq!(age(&g, &p1p1, 1), BigRational::one());
        // Each copy of P1 contributes (0 + 1 + 0)/2.
        let single = Representation::from_pairs(&g, &[(3, 0)]).unwrap();
        assert_eq!(age(&g, &single, 1), rat(1, 2));
    }

    #[test]
    fn d_invariants() {
        let g = s3();
        let p2 = Representation::from_pairs(&g, &[(3, 1)]).unwrap();
        assert_eq!(p2.d_invariant(), 3);
        let p1p1 = Representation::from_pairs(&g, &[(3, 0), (3, 0)]).unwrap();
        assert_eq!(p1p1.d_invariant(), 6);
        let line = Representation::from_pairs(&g, &[(1, 1)]).unwrap();
        assert_eq!(line.d_invariant(), 0);
    }

    #[test]
    fn d_invariant_additive() {
        let g = MetacyclicGroup::new(5, 4, 2).unwrap();
        let a = Representation::from_pairs(&g, &[(5, 1), (3, 2)]).unwrap();
        let b = Representation::from_pairs(&g, &[(2, 0)]).unwrap();
        let joined = Representation::from_pairs(&g, &[(5, 1), (3, 2), (2, 0)]).unwrap();
        assert_eq!(joined.d_invariant(), a.d_invariant() + b.d_invariant());
    }

    #[test]
    fn summand_validation() {
        let g = s3();
        assert!(matches!(
            Indecomposable::new(&g, 4, 0).unwrap_err(),
            Error::BadSummand { d: 4, .. }
        ));
        assert!(matches!(
            Indecomposable::new(&g, 1, 2).unwrap_err(),
            Error::BadSummand { s: 2, .. }
        ));
        assert_eq!(
            Representation::new(vec![]).unwrap_err(),
            Error::EmptyRepresentation
        );
    }

    #[test]
    fn matrices_for_s3_p2() {
        let g = s3();
        let v = Indecomposable::new(&g, 3, 1).unwrap();
        let real = construct_matrices(&g, &v).unwrap();
        let f = &real.field;
        assert_eq!(f.order(), 3); // m = 2 divides 3 - 1, so e = 1
        assert_eq!(real.zeta_m, f.embed(2));
        // Hand-computed: tau = [[2,2,0],[0,1,0],[0,0,2]] over F_3.
        let two = f.embed(2);
        let one = f.one();
        let zero = f.zero();
        let expect = [
            [two.clone(), two.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), two.clone()],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert_eq!(real.tau.get(i, j), want, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn matrices_trivial_summand() {
        let g = s3();
        let v = Indecomposable::new(&g, 1, 0).unwrap();
        let real = construct_matrices(&g, &v).unwrap();
        assert_eq!(real.sigma, GfMatrix::identity(&real.field, 1));
        assert_eq!(real.tau, GfMatrix::identity(&real.field, 1));
    }

    #[test]
    fn matrices_order_21_summand() {
        let g = MetacyclicGroup::new(7, 3, 2).unwrap();
        let v = Indecomposable::new(&g, 2, 0).unwrap();
        let real = construct_matrices(&g, &v).unwrap();
        let f = &real.field;
        assert_eq!(f.order(), 7);
        // diag(tau) = (1, zeta_3^{-1}) with zeta_3 = 2 in F_7.
        assert_eq!(real.zeta_m, f.embed(2));
        let diag = real.tau.diagonal();
        assert_eq!(diag[0], f.one());
        assert_eq!(diag[1], f.inv(&f.embed(2)));
    }

    #[test]
    fn diagonal_matches_eigenvalue_exponents() {
        let g = MetacyclicGroup::new(5, 4, 2).unwrap();
        for d in 1..=5 {
            for s in 0..4 {
                let v = Indecomposable::new(&g, d, s).unwrap();
                let real = construct_matrices(&g, &v).unwrap();
                let diag = real.tau.diagonal();
                let exps = tau_eigenvalue_exponents(&g, &v);
                for (entry, e) in diag.iter().zip(exps) {
                    assert_eq!(*entry, real.field.pow(&real.zeta_m, e));
                }
            }
        }
    }
}
