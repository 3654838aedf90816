//! a/b-invariants of the v-function and the singularity classification of
//! the quotient.
//!
//! The a-invariant is the supremum of `(1 + dim v⁻¹(g))/g` over nonzero
//! values `g`; tame classes contribute `1/age`, wild strata contribute
//! `(1 + dim Δ_{G,γ}(r))/v(r)`. One window `[1, m_γ·p - 1]` per component
//! suffices: along a residue class the shifted ratios
//! `(1 + dim + n(p-1))/(v + n·D_V)` are monotone in `n` with limit
//! `(p-1)/D_V`, so the per-residue supremum is either attained at `n = 0`
//! or equals the (unattained) tail limit. The scan therefore reports an
//! exact supremum together with whether it is attained.
//!
//! The b-invariant counts, over the values attaining the supremum, the
//! maximal-dimension irreducible components of the fiber: each wild
//! stratum is one component, each tame class is one point.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::MetacyclicGroup;
use crate::moduli::{stratum_dimension, window_jumps};
use crate::motive::euler_number;
use crate::representation::{age, Representation};
use crate::serde_util::rational_string;
use crate::vfunction::v_rep;

/// A nontrivial locus of the torsor moduli carrying a v-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    /// The tame conjugacy class `τ^k`, a point.
    Tame { k: u64 },
    /// The wild stratum with component `γ` and jump `r`.
    Wild { gamma: u64, r: u64 },
}

/// A locus attaining the a-invariant, with its value and dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttainingLocus {
    pub locus: Locus,
    #[serde(with = "rational_string")]
    pub v: BigRational,
    pub dim: u64,
}

/// The b-invariant: a finite component count, or the markers for the two
/// degenerate shapes of the attaining set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BValue {
    Finite(u64),
    /// A window ratio equals the tail limit exactly, so infinitely many
    /// shifted strata attain the supremum.
    Infinite,
    /// The supremum is only a limit; the defining set is empty.
    Undefined,
}

/// Singularity type of `V/G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Terminal,
    CanonicalNotTerminal,
    NotCanonical,
}

/// Everything the invariant scan produces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(with = "rational_string")]
    pub a_value: BigRational,
    pub a_attained: bool,
    pub b_value: BValue,
    pub attaining: Vec<AttainingLocus>,
    pub classification: Classification,
    /// `sup (dim - v)` over nontrivial loci, tame loci counting as
    /// `(0 - age)`. Satisfies `a <= 1 ⟺ sup <= -1`.
    #[serde(with = "rational_string")]
    pub sup_dim_minus_v: BigRational,
}

struct ScanItem {
    locus: Locus,
    v: BigRational,
    dim: u64,
    ratio: BigRational,
}

/// Collects every nontrivial locus in the (possibly extended) windows with
/// its v-value and dimension. Errors with [`Error::ZeroV`] if a nontrivial
/// locus has vanishing v-value.
fn scan_loci(
    group: &MetacyclicGroup,
    v: &Representation,
    window_mult: u64,
) -> Result<Vec<ScanItem>> {
    let mut items = Vec::new();
    for k in 1..group.m() {
        let value = age(group, v, k);
        if value.is_zero() {
            return Err(Error::ZeroV {
                locus: format!("tame class k = {k}"),
            });
        }
        let ratio = BigRational::one() / value.clone();
        items.push(ScanItem {
            locus: Locus::Tame { k },
            v: value,
            dim: 0,
            ratio,
        });
    }
    for gamma in 0..group.m() {
        for r in window_jumps(group, gamma, window_mult) {
            let value = v_rep(group, v, gamma, r).expect("window jumps are admissible");
            if value.is_zero() {
                return Err(Error::ZeroV {
                    locus: format!("stratum (gamma, r) = ({gamma}, {r})"),
                });
            }
            let dim = stratum_dimension(group, gamma, r).expect("window jumps are admissible");
            let ratio = BigRational::from_integer((dim + 1).into()) / value.clone();
            items.push(ScanItem {
                locus: Locus::Wild { gamma, r },
                v: value,
                dim,
                ratio,
            });
        }
    }
    Ok(items)
}

/// Full invariant scan with the default window `[1, m_γ·p - 1]`.
pub fn invariant_report(group: &MetacyclicGroup, v: &Representation) -> Result<InvariantReport> {
    invariant_report_with_window(group, v, 1)
}

/// Full invariant scan with windows extended to `[1, mult·m_γ·p - 1]`.
/// Results are window-stable for `mult >= 1`; the knob exists for
/// stability experiments. Requires `D_V >= p`.
pub fn invariant_report_with_window(
    group: &MetacyclicGroup,
    v: &Representation,
    window_mult: u64,
) -> Result<InvariantReport> {
    let p = group.p();
    let d_v = v.d_invariant();
    if d_v < p {
        return Err(Error::Divergent { d_v, p });
    }
    let window_mult = window_mult.max(1);
    let items = scan_loci(group, v, window_mult)?;

    let windowed_max = items
        .iter()
        .map(|it| it.ratio.clone())
        .max()
        .expect("the gamma = 0 window is never empty");
    let tail = BigRational::new((p - 1).into(), d_v.into());
    let (a_value, a_attained) = if windowed_max >= tail {
        (windowed_max, true)
    } else {
        (tail.clone(), false)
    };

    let sup_dim_minus_v = items
        .iter()
        .map(|it| BigRational::from_integer(it.dim.into()) - &it.v)
        .max()
        .expect("nonempty scan");

    let attaining: Vec<AttainingLocus> = items
        .iter()
        .filter(|it| it.ratio == a_value)
        .map(|it| AttainingLocus {
            locus: it.locus,
            v: it.v.clone(),
            dim: it.dim,
        })
        .collect();

    let b_value = if !a_attained {
        BValue::Undefined
    } else if a_value == tail {
        // The monotone interpolation toward the tail is constant for the
        // attaining residues: every shifted stratum attains too.
        BValue::Infinite
    } else {
        let mut by_value: BTreeMap<BigRational, Vec<&AttainingLocus>> = BTreeMap::new();
        for locus in &attaining {
            by_value.entry(locus.v.clone()).or_default().push(locus);
        }
        let count: u64 = by_value
            .values()
            .map(|group| {
                let max_dim = group.iter().map(|l| l.dim).max().unwrap_or(0);
                group.iter().filter(|l| l.dim == max_dim).count() as u64
            })
            .sum();
        BValue::Finite(count)
    };

    let classification = classify_singularities_with_window(group, v, window_mult);

    let report = InvariantReport {
        a_value,
        a_attained,
        b_value,
        attaining,
        classification,
        sup_dim_minus_v,
    };
    debug_assert_eq!(
        report.a_value <= BigRational::one(),
        report.sup_dim_minus_v <= -BigRational::one(),
    );
    Ok(report)
}

/// The a-invariant and whether the supremum is attained. Requires
/// `D_V >= p`.
pub fn a_invariant(group: &MetacyclicGroup, v: &Representation) -> Result<(BigRational, bool)> {
    let report = invariant_report(group, v)?;
    Ok((report.a_value, report.a_attained))
}

/// The b-invariant. Requires `D_V >= p`.
pub fn b_invariant(group: &MetacyclicGroup, v: &Representation) -> Result<BValue> {
    Ok(invariant_report(group, v)?.b_value)
}

/// Canonical/terminal test from the two finite conditions: `age(τ^k) >= 1`
/// for every nontrivial tame class (strict for terminal), and
/// `dim - v <= -1` on every window stratum (strict for terminal).
pub fn classify_singularities(group: &MetacyclicGroup, v: &Representation) -> Classification {
    classify_singularities_with_window(group, v, 1)
}

/// [`classify_singularities`] with extended windows; the verdict is stable
/// under enlargement.
pub fn classify_singularities_with_window(
    group: &MetacyclicGroup,
    v: &Representation,
    window_mult: u64,
) -> Classification {
    let window_mult = window_mult.max(1);
    let one = BigRational::one();
    let mut canonical = true;
    let mut terminal = true;
    for k in 1..group.m() {
        let a = age(group, v, k);
        canonical &= a >= one;
        terminal &= a > one;
    }
    for gamma in 0..group.m() {
        for r in window_jumps(group, gamma, window_mult) {
            let dim = stratum_dimension(group, gamma, r).expect("window jumps are admissible");
            let value = v_rep(group, v, gamma, r).expect("window jumps are admissible");
            let excess = BigRational::from_integer(dim.into()) - value;
            canonical &= excess <= -one.clone();
            terminal &= excess < -one.clone();
        }
    }
    if terminal {
        Classification::Terminal
    } else if canonical {
        Classification::CanonicalNotTerminal
    } else {
        Classification::NotCanonical
    }
}

/// Euler characteristic of a crepant resolution, valid only if one exists:
/// the same closed form as the stringy Euler number. Requires `D_V >= p`.
pub fn crepant_euler(group: &MetacyclicGroup, v: &Representation) -> Result<BigRational> {
    euler_number(group, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn s3() -> MetacyclicGroup {
        MetacyclicGroup::new(3, 2, 2).unwrap()
    }

    fn rep(g: &MetacyclicGroup, pairs: &[(u64, u64)]) -> Representation {
        Representation::from_pairs(g, pairs).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn p2_invariants() {
        let g = s3();
        let report = invariant_report(&g, &rep(&g, &[(3, 1)])).unwrap();
        assert_eq!(report.a_value, rat(1));
        assert!(report.a_attained);
        assert_eq!(report.b_value, BValue::Finite(4));
        assert_eq!(report.classification, Classification::CanonicalNotTerminal);
        assert_eq!(report.sup_dim_minus_v, rat(-1));
        assert_eq!(report.attaining.len(), 4);
    }

    #[test]
    fn p1_plus_p1_invariants() {
        let g = s3();
        let report = invariant_report(&g, &rep(&g, &[(3, 0), (3, 0)])).unwrap();
        assert_eq!(report.a_value, rat(1));
        assert!(report.a_attained);
        assert_eq!(report.b_value, BValue::Finite(1));
        assert_eq!(report.classification, Classification::CanonicalNotTerminal);
        // Only the tame class attains.
        assert_eq!(
            report.attaining,
            vec![AttainingLocus {
                locus: Locus::Tame { k: 1 },
                v: rat(1),
                dim: 0,
            }]
        );
    }

    #[test]
    fn wild_ratios_below_one_for_p1_plus_p1() {
        let g = s3();
        let v = rep(&g, &[(3, 0), (3, 0)]);
        for gamma in 0..2 {
            for r in window_jumps(&g, gamma, 1) {
                let dim = stratum_dimension(&g, gamma, r).unwrap();
                let value = v_rep(&g, &v, gamma, r).unwrap();
                assert!(BigRational::from_integer((dim + 1).into()) < value);
            }
        }
    }

    #[test]
    fn trivial_rep_is_not_canonical() {
        let g = s3();
        let v = rep(&g, &[(1, 0)]);
        assert_eq!(classify_singularities(&g, &v), Classification::NotCanonical);
    }

    #[test]
    fn divergent_rep_has_no_a_invariant() {
        let g = s3();
        assert_eq!(
            a_invariant(&g, &rep(&g, &[(2, 0)])).unwrap_err(),
            Error::Divergent { d_v: 1, p: 3 }
        );
    }

    #[test]
    fn zero_age_is_rejected() {
        // a = 1, c = 0: the trivial-s summands have age 0 on every class,
        // while D_V = 3 >= p keeps the scan alive until the tame check.
        let g = MetacyclicGroup::new(3, 2, 1).unwrap();
        let v = rep(&g, &[(3, 0)]);
        assert!(matches!(invariant_report(&g, &v), Err(Error::ZeroV { .. })));
    }

    #[test]
    fn crepant_euler_matches_closed_form() {
        let g = s3();
        assert_eq!(crepant_euler(&g, &rep(&g, &[(3, 1)])).unwrap(), rat(6));
        assert_eq!(
            crepant_euler(&g, &rep(&g, &[(3, 0), (3, 0)])).unwrap(),
            rat(3)
        );
    }

    #[test]
    fn window_enlargement_is_stable() {
        let g = s3();
        let v = rep(&g, &[(3, 1)]);
        let base = invariant_report(&g, &v).unwrap();
        let wide = invariant_report_with_window(&g, &v, 10).unwrap();
        assert_eq!(base.a_value, wide.a_value);
        assert_eq!(base.b_value, wide.b_value);
        assert_eq!(base.classification, wide.classification);
    }
}
