//! The v-function of a representation on every stratum of the torsor
//! moduli, and its tame specialization.
//!
//! On the stratum `(γ, r)` the v-function of an indecomposable `V_{d,s}` is
//!
//! ```text
//! v(r) = Σ_{(i,j) ∈ I} i/m_γ + Σ_{(i,j) ∈ I} ⌈(-i·p + j·r)/(m_γ·p)⌉,
//! ```
//!
//! where `I = I_{γ,r,s}` picks, for each `j < d`, the unique
//! `i ∈ {0, …, m_γ-1}` with `i - rj = s·(γ†)⁻¹ (mod m_γ)`. The two sums are
//! the valuation of the tame generator part and the ceiling corrections
//! `n_{i,j}` coming from the integral basis `α^i β^j t^{n_{i,j}}`, with
//! `v_L(α) = p`, `v_L(β) = -r` and ramification index `m_γ·p`. On tame
//! classes the v-function is the age. Values are exact rationals in
//! `(1/m_γ)·Z` and the whole thing is additive over direct sums.

use num::BigRational;

use crate::arith::{ceil_div, mod_inv};
use crate::error::{Error, Result};
use crate::group::MetacyclicGroup;
use crate::moduli::is_admissible;
use crate::representation::{age, Indecomposable, Representation};

/// The index set `I_{γ,r,s}`: one pair `(i, j)` per basis direction `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    pairs: Vec<(u64, u64)>,
}

impl IndexSet {
    /// The pairs `(i, j)`, ascending in `j`.
    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Valuation constants of the stratum `(γ, r)`: `v_L(α) = p`,
/// `v_L(β) = -r`, ramification index `e_{L/K} = m_γ·p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationData {
    pub v_alpha: i64,
    pub v_beta: i64,
    pub ram_index: u64,
}

impl ValuationData {
    pub fn new(group: &MetacyclicGroup, gamma: u64, r: u64) -> Result<Self> {
        check_admissible(group, gamma, r)?;
        let m_gamma = group.gamma_reduction(gamma).m_gamma;
        Ok(Self {
            v_alpha: group.p() as i64,
            v_beta: -(r as i64),
            ram_index: m_gamma * group.p(),
        })
    }
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

/// Solves the congruence `i - rj = s·(γ†)⁻¹ (mod m_γ)` for a dimension-`d`
/// summand; `s` is reduced mod `m_γ` first. For `γ = 0` the congruence is
/// empty and `i = 0` throughout.
pub fn index_set(group: &MetacyclicGroup, gamma: u64, r: u64, s: u64, d: u64) -> Result<IndexSet> {
    check_admissible(group, gamma, r)?;
    let data = group.gamma_reduction(gamma);
    let m_gamma = data.m_gamma;
    let pairs = if m_gamma == 1 {
        (0..d).map(|j| (0, j)).collect()
    } else {
        let inv = mod_inv(data.gamma_dagger, m_gamma).expect("gamma_dagger invertible mod m_gamma");
        let base = (inv * (s % m_gamma)) % m_gamma;
        (0..d)
            .map(|j| (((base + (r % m_gamma) * (j % m_gamma)) % m_gamma), j))
            .collect()
    };
    Ok(IndexSet { pairs })
}

/// v-function of an indecomposable summand on the stratum `(γ, r)`.
pub fn v_indecomposable(
    group: &MetacyclicGroup,
    v: &Indecomposable,
    gamma: u64,
    r: u64,
) -> Result<BigRational> {
    let set = index_set(group, gamma, r, v.s(), v.d())?;
    let m_gamma = group.gamma_reduction(gamma).m_gamma as i128;
    let p = group.p() as i128;
    let mut i_sum: i128 = 0;
    let mut ceil_sum: i128 = 0;
    for &(i, j) in set.pairs() {
        i_sum += i as i128;
        ceil_sum += ceil_div(-(i as i128) * p + (j as i128) * (r as i128), m_gamma * p);
    }
    Ok(BigRational::new(
        (i_sum + ceil_sum * m_gamma).into(),
        m_gamma.into(),
    ))
}

/// v-function of a representation: the sum over its summands.
pub fn v_rep(
    group: &MetacyclicGroup,
    v: &Representation,
    gamma: u64,
    r: u64,
) -> Result<BigRational> {
    let mut total = BigRational::new(0.into(), 1.into());
    for summand in v.summands() {
        total += v_indecomposable(group, summand, gamma, r)?;
    }
    Ok(total)
}

/// v-function on the tame class `τ^k`: equal to the age. The unramified
/// torsor is `k = 0`, where the value is 0.
pub fn v_tame(group: &MetacyclicGroup, v: &Representation, k: u64) -> BigRational {
    age(group, v, k)
}
