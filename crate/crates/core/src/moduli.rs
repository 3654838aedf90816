//! The moduli of `G`-torsors over the punctured formal disk, stratified by
//! ramification jump.
//!
//! For a component `γ ∈ Z/m`, the admissible jumps are the positive
//! integers prime to `p` in the residue class `ρ_γ` mod `m_γ`; the stratum
//! at jump `r` is parametrized by `(G_m × A^{dim-1})/μ` and we only ever
//! need its dimension: the count `#E(G,r,γ)` of admissible jumps `e <= r`,
//! one free coefficient per representative-polynomial degree. Writing the
//! candidates as `e = r - m_γ·t`, `t ∈ [0, ⌊(r-1)/m_γ⌋]`, the dimension is
//! the number of `t` avoiding the single excluded residue
//! `t = r·m_γ⁻¹ (mod p)`, evaluated in closed form by
//! [`stratum_dimension`] and by direct enumeration in
//! [`stratum_dimension_bruteforce`]. It grows by `p - 1` per period
//! `m_γ·p` of the jump.

use num::{BigUint, Zero};

use crate::arith::{gcd, mod_inv};
use crate::error::{Error, Result};
use crate::group::MetacyclicGroup;

/// A stratum label: component `γ` and ramification jump `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StratumIndex {
    pub gamma: u64,
    pub r: u64,
}

/// Shape of the parameter space of one stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumInfo {
    /// `dim Δ_{G,γ}(r)`.
    pub dim: u64,
    /// Order `m_γ / gcd(r, m_γ)` of the root-of-unity group acting on the
    /// representative polynomials.
    pub mu_order: u64,
    /// Irreducible components of the stratum; always 1.
    pub components: u64,
}

/// True iff `r` is an admissible ramification jump for the component `γ`:
/// `r >= 1`, `p ∤ r` and `r = ρ_γ (mod m_γ)`.
pub fn is_admissible(group: &MetacyclicGroup, gamma: u64, r: u64) -> bool {
    if r == 0 || r % group.p() == 0 {
        return false;
    }
    let data = group.gamma_reduction(gamma);
    r % data.m_gamma == data.rho
}

/// Admissible jumps in `[1, bound]`, ascending.
pub fn enumerate_jumps(group: &MetacyclicGroup, gamma: u64, bound: u64) -> Vec<u64> {
    (1..=bound)
        .filter(|&r| is_admissible(group, gamma, r))
        .collect()
}

/// Admissible jumps in the fundamental window `[1, mult·m_γ·p - 1]`.
pub fn window_jumps(group: &MetacyclicGroup, gamma: u64, mult: u64) -> Vec<u64> {
    let m_gamma = group.gamma_reduction(gamma).m_gamma;
    enumerate_jumps(group, gamma, mult * m_gamma * group.p() - 1)
}

fn check_admissible(group: &MetacyclicGroup, gamma: u64, r: u64) -> Result<()> {
    if is_admissible(group, gamma, r) {
        Ok(())
    } else {
        let data = group.gamma_reduction(gamma);
        Err(Error::InadmissibleJump {
            gamma: gamma % group.m(),
            r,
            p: group.p(),
            rho: data.rho,
            m_gamma: data.m_gamma,
        })
    }
}

/// `dim Δ_{G,γ}(r)` by the closed form: with `T = ⌊(r-1)/m_γ⌋ + 1`
/// candidate degrees and `t₀ = r·m_γ⁻¹ mod p` the excluded residue,
/// `dim = T − #{t ∈ [0, T) : t ≡ t₀ (mod p)}`.
pub fn stratum_dimension(group: &MetacyclicGroup, gamma: u64, r: u64) -> Result<u64> {
    check_admissible(group, gamma, r)?;
    let p = group.p();
    let m_gamma = group.gamma_reduction(gamma).m_gamma;
    let t_total = (r - 1) / m_gamma + 1;
    let m_inv = mod_inv(m_gamma % p, p).expect("m_gamma is coprime to p");
    let t0 = (r % p) * m_inv % p;
    debug_assert!(t0 != 0, "admissible jumps are prime to p");
    let excluded = if t0 >= t_total {
        0
    } else {
        (t_total - 1 - t0) / p + 1
    };
    Ok(t_total - excluded)
}

/// `dim Δ_{G,γ}(r)` as the count `#E(G,r,γ)` of admissible jumps `e <= r`.
/// Independent enumeration used as the oracle for [`stratum_dimension`].
pub fn stratum_dimension_bruteforce(group: &MetacyclicGroup, gamma: u64, r: u64) -> Result<u64> {
    check_admissible(group, gamma, r)?;
    Ok((1..=r).filter(|&e| is_admissible(group, gamma, e)).count() as u64)
}

/// Dimension and parameter-space shape of the stratum `(γ, r)`.
pub fn stratum_info(group: &MetacyclicGroup, gamma: u64, r: u64) -> Result<StratumInfo> {
    let dim = stratum_dimension(group, gamma, r)?;
    let m_gamma = group.gamma_reduction(gamma).m_gamma;
    Ok(StratumInfo {
        dim,
        mu_order: m_gamma / gcd(r, m_gamma),
        components: 1,
    })
}

/// The number of `G`-extensions of `F_q((t))` with ramification jump `r` on
/// the connected component `γ`:
///
/// * `0` when `γ·q ≠ γ (mod m)` (Frobenius permutes the components without
///   fixed points),
/// * `|Z(G)|·(q-1)·q^{dim Δ_{G,γ}(r) - 1}` otherwise — the stratum is one
///   `G_m` factor of free leading coefficient times an affine space.
///
/// Errors: [`Error::BadFieldSize`] unless `q` is a power of `p`,
/// [`Error::NotInvertible`] unless `gcd(γ, m) = 1` (the count covers field
/// extensions only), [`Error::InadmissibleJump`] for bad `r`.
pub fn count_extensions(group: &MetacyclicGroup, q: u64, gamma: u64, r: u64) -> Result<BigUint> {
    let p = group.p();
    let m = group.m();
    let mut qq = q;
    while qq > 1 && qq % p == 0 {
        qq /= p;
    }
    if qq != 1 || q == 1 {
        return Err(Error::BadFieldSize { q, p });
    }
    let gamma = gamma % m;
    if gcd(gamma, m) != 1 {
        return Err(Error::NotInvertible { gamma, m });
    }
    let exponent = stratum_dimension(group, gamma, r)? - 1;
    if (gamma * (q % m)) % m != gamma {
        return Ok(BigUint::zero());
    }
    let count = BigUint::from(group.center_order())
        * BigUint::from(q - 1)
        * BigUint::from(q).pow(u32::try_from(exponent).expect("jump too large"));
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> MetacyclicGroup {
        MetacyclicGroup::new(3, 2, 2).unwrap()
    }

    #[test]
    fn admissibility_for_s3() {
        let g = s3();
        assert!(is_admissible(&g, 1, 1));
        assert!(!is_admissible(&g, 1, 3)); // 3 | r
        assert!(!is_admissible(&g, 1, 2)); // even
        assert!(is_admissible(&g, 0, 2));
        assert!(!is_admissible(&g, 0, 3)); // r = p
        assert!(!is_admissible(&g, 1, 0));
    }

    #[test]
    fn jump_enumeration() {
        let g = s3();
        assert_eq!(enumerate_jumps(&g, 1, 5), vec![1, 5]);
        assert_eq!(enumerate_jumps(&g, 0, 2), vec![1, 2]);
        assert!(enumerate_jumps(&g, 1, 0).is_empty());
    }

    #[test]
    fn dimensions_match_worked_examples() {
        let g = s3();
        assert_eq!(stratum_dimension(&g, 0, 1).unwrap(), 1);
        assert_eq!(stratum_dimension(&g, 0, 2).unwrap(), 2);
        assert_eq!(stratum_dimension(&g, 1, 1).unwrap(), 1);
        assert_eq!(stratum_dimension(&g, 1, 5).unwrap(), 2);
    }

    #[test]
    fn bruteforce_examples() {
        let g = s3();
        assert_eq!(stratum_dimension_bruteforce(&g, 1, 5).unwrap(), 2);
        assert_eq!(stratum_dimension_bruteforce(&g, 1, 7).unwrap(), 3); // {1, 5, 7}
                                                                        // Least admissible jump alone.
        assert_eq!(stratum_dimension_bruteforce(&g, 1, 1).unwrap(), 1);
    }

    #[test]
    fn inadmissible_jump_is_an_error() {
        let g = s3();
        assert!(matches!(
            stratum_dimension(&g, 1, 2),
            Err(Error::InadmissibleJump { r: 2, .. })
        ));
        assert!(matches!(
            stratum_info(&g, 0, 3),
            Err(Error::InadmissibleJump { r: 3, .. })
        ));
    }

    #[test]
    fn stratum_shapes() {
        let g = s3();
        assert_eq!(
            stratum_info(&g, 1, 1).unwrap(),
            StratumInfo {
                dim: 1,
                mu_order: 2,
                components: 1
            }
        );
        assert_eq!(
            stratum_info(&g, 0, 1).unwrap(),
            StratumInfo {
                dim: 1,
                mu_order: 1,
                components: 1
            }
        );
        assert_eq!(
            stratum_info(&g, 1, 5).unwrap(),
            StratumInfo {
                dim: 2,
                mu_order: 2,
                components: 1
            }
        );
    }

    #[test]
    fn extension_counts_for_s3() {
        let g = s3();
        assert_eq!(count_extensions(&g, 3, 1, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(count_extensions(&g, 3, 1, 5).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn frobenius_moves_the_component() {
        // m = 4, q = 3: gamma*q = 3*gamma != gamma mod 4 for invertible gamma.
        // With a = 1 the admissible jumps on gamma = 1 are multiples of 4.
        let g = MetacyclicGroup::new(3, 4, 1).unwrap();
        assert!(is_admissible(&g, 1, 4));
        assert_eq!(count_extensions(&g, 3, 1, 4).unwrap(), BigUint::zero());
    }

    #[test]
    fn counting_errors() {
        let g = s3();
        assert_eq!(
            count_extensions(&g, 2, 1, 1).unwrap_err(),
            Error::BadFieldSize { q: 2, p: 3 }
        );
        assert_eq!(
            count_extensions(&g, 3, 0, 1).unwrap_err(),
            Error::NotInvertible { gamma: 0, m: 2 }
        );
        assert!(matches!(
            count_extensions(&g, 3, 1, 2),
            Err(Error::InadmissibleJump { .. })
        ));
    }

    #[test]
    fn window_jump_bounds() {
        let g = s3();
        assert_eq!(window_jumps(&g, 0, 1), vec![1, 2]);
        assert_eq!(window_jumps(&g, 1, 1), vec![1, 5]);
        assert_eq!(window_jumps(&g, 1, 2), vec![1, 5, 7, 11]);
    }
}
