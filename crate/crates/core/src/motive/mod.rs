//! Stringy motives and stringy Euler numbers.
//!
//! The stringy motive of `X = V/G` splits into a tame part, a finite sum
//! `Σ_{k ∈ Z/m} L^{d - age(τ^k)}`, and a wild part assembled from one
//! window of jumps per component:
//!
//! ```text
//! M_str(X) = Σ_k L^{d - age(τ^k)}
//!          + (L-1)·L^{d-1} · W / (1 - L^{p-1-D_V}),
//! W = Σ_{γ} Σ_{s ∈ Z_γ, 1 <= s <= m_γ·p - 1} L^{dim Δ_{G,γ}(s) - v_{V,γ}(s)}.
//! ```
//!
//! The geometric series behind the denominator converges only when
//! `D_V >= p`; `D_V < p` is reported as a divergent result, not an error.
//! At the boundary `D_V = p` the prefactor collapses and the motive is the
//! polynomial `tame + L^d·W`.

mod puiseux;
mod rational;

pub use puiseux::PuiseuxPoly;
pub use rational::{RationalExpr, Reduced};

use std::fmt;

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::MetacyclicGroup;
use crate::moduli::{stratum_dimension, window_jumps};
use crate::representation::{age, Representation};
use crate::vfunction::v_rep;

/// A stringy motive: exact polynomial, reduced rational expression, or a
/// marker that the defining series diverges (`D_V < p`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MotiveResult {
    Polynomial { value: PuiseuxPoly },
    Rational { value: RationalExpr },
    Divergent { d_v: u64, p: u64 },
}

impl MotiveResult {
    pub fn kind(&self) -> &'static str {
        match self {
            MotiveResult::Polynomial { .. } => "polynomial",
            MotiveResult::Rational { .. } => "rational",
            MotiveResult::Divergent { .. } => "divergent",
        }
    }

    pub fn as_polynomial(&self) -> Option<&PuiseuxPoly> {
        match self {
            MotiveResult::Polynomial { value } => Some(value),
            _ => None,
        }
    }

    /// The stringy Euler number: the exact value at `L = 1`.
    pub fn limit_at_one(&self) -> Result<BigRational> {
        match self {
            MotiveResult::Polynomial { value } => Ok(value.sum_of_coefficients()),
            MotiveResult::Rational { value } => value.limit_at_one(),
            MotiveResult::Divergent { d_v, p } => Err(Error::Divergent { d_v: *d_v, p: *p }),
        }
    }

    /// Exact evaluation at `L = q` (point-count heuristic `L ↦ q`).
    pub fn evaluate_at(&self, q: &BigRational) -> Result<BigRational> {
        match self {
            MotiveResult::Polynomial { value } => value.evaluate(q),
            MotiveResult::Rational { value } => value.evaluate_at(q),
            MotiveResult::Divergent { d_v, p } => Err(Error::Divergent { d_v: *d_v, p: *p }),
        }
    }
}

impl fmt::Display for MotiveResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MotiveResult::Polynomial { value } => write!(f, "{value}"),
            MotiveResult::Rational { value } => write!(f, "{value}"),
            MotiveResult::Divergent { d_v, p } => {
                write!(f, "divergent (D_V = {d_v} < p = {p})")
            }
        }
    }
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Tame contribution `Σ_{k=0}^{m-1} L^{d - age(τ^k)}`.
pub fn tame_contribution(group: &MetacyclicGroup, v: &Representation) -> PuiseuxPoly {
    let d = rat_int(v.dim() as i64);
    let mut out = PuiseuxPoly::zero();
    for k in 0..group.m() {
        let exp = &d - &age(group, v, k);
        out = out.add(&PuiseuxPoly::monomial(
            exp,
            BigRational::from_integer(1.into()),
        ));
    }
    out
}

/// The window sum `W`: one term `L^{dim - v}` per admissible jump
/// `s ∈ [1, m_γ·p - 1]`, summed over every component `γ ∈ Z/m`.
pub fn wild_window_sum(group: &MetacyclicGroup, v: &Representation) -> PuiseuxPoly {
    let mut out = PuiseuxPoly::zero();
    for gamma in 0..group.m() {
        for s in window_jumps(group, gamma, 1) {
            let dim = stratum_dimension(group, gamma, s).expect("window jumps are admissible");
            let value = v_rep(group, v, gamma, s).expect("window jumps are admissible");
            let exp = rat_int(dim as i64) - value;
            out = out.add(&PuiseuxPoly::monomial(
                exp,
                BigRational::from_integer(1.into()),
            ));
        }
    }
    out
}

/// The stringy motive of `V/G`.
///
/// * `D_V > p`: the rational expression, GCD-reduced; collapses to the
///   `Polynomial` kind when the reduced denominator is a unit.
/// * `D_V = p`: the polynomial `tame + L^d·W`.
/// * `D_V < p`: `Divergent`.
pub fn stringy_motive(group: &MetacyclicGroup, v: &Representation) -> MotiveResult {
    let p = group.p();
    let d_v = v.d_invariant();
    if d_v < p {
        return MotiveResult::Divergent { d_v, p };
    }
    let tame = tame_contribution(group, v);
    let window = wild_window_sum(group, v);
    let d = v.dim() as i64;
    if d_v == p {
        let value =
            tame.add(&window.mul_monomial(&rat_int(d), &BigRational::from_integer(1.into())));
        return MotiveResult::Polynomial { value };
    }
    // den = 1 - L^{p - 1 - D_V}, num = tame*den + (L-1)*L^{d-1}*W.
    let den = PuiseuxPoly::one().sub(&PuiseuxPoly::monomial(
        rat_int(p as i64 - 1 - d_v as i64),
        BigRational::from_integer(1.into()),
    ));
    let prefactor = PuiseuxPoly::monomial_int(1, 1)
        .sub(&PuiseuxPoly::one())
        .mul_monomial(&rat_int(d - 1), &BigRational::from_integer(1.into()));
    let num = tame.mul(&den).add(&prefactor.mul(&window));
    match RationalExpr::new(num, den).reduce() {
        Reduced::Poly(value) => MotiveResult::Polynomial { value },
        Reduced::Ratio(value) => MotiveResult::Rational { value },
    }
}

/// Closed form of the stringy Euler number, `m·D_V/(D_V - p + 1)`.
/// Requires `D_V >= p`.
pub fn euler_number(group: &MetacyclicGroup, v: &Representation) -> Result<BigRational> {
    let p = group.p();
    let d_v = v.d_invariant();
    if d_v < p {
        return Err(Error::Divergent { d_v, p });
    }
    Ok(BigRational::new(
        BigInt::from(group.m() * d_v),
        BigInt::from(d_v - p + 1),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::Representation;

    fn s3() -> MetacyclicGroup {
        MetacyclicGroup::new(3, 2, 2).unwrap()
    }

    fn rep(g: &MetacyclicGroup, pairs: &[(u64, u64)]) -> Representation {
        Representation::from_pairs(g, pairs).unwrap()
    }

    fn poly_from(terms: &[(i64, i64)]) -> PuiseuxPoly {
        terms.iter().fold(PuiseuxPoly::zero(), |acc, &(e, c)| {
            acc.add(&PuiseuxPoly::monomial_int(e, c))
        })
    }

    #[test]
    fn tame_parts_of_the_worked_examples() {
        let g = s3();
        assert_eq!(
            tame_contribution(&g, &rep(&g, &[(3, 1)])),
            poly_from(&[(3, 1), (2, 1)])
        );
        assert_eq!(
            tame_contribution(&g, &rep(&g, &[(3, 0), (3, 0)])),
            poly_from(&[(6, 1), (5, 1)])
        );
    }

    #[test]
    fn tame_part_with_trivial_tame_quotient() {
        let g = MetacyclicGroup::new(3, 1, 1).unwrap();
        let v = rep(&g, &[(3, 0)]);
        assert_eq!(tame_contribution(&g, &v), poly_from(&[(3, 1)]));
    }

    #[test]
    fn window_sums_of_the_worked_examples() {
        let g = s3();
        assert_eq!(
            wild_window_sum(&g, &rep(&g, &[(3, 1)])),
            poly_from(&[(-1, 3), (-2, 1)])
        );
        assert_eq!(
            wild_window_sum(&g, &rep(&g, &[(3, 0), (3, 0)])),
            poly_from(&[(-2, 1), (-3, 1), (-4, 1), (-5, 1)])
        );
    }

    #[test]
    fn stringy_motive_p2() {
        let g = s3();
        let motive = stringy_motive(&g, &rep(&g, &[(3, 1)]));
        let expect = poly_from(&[(3, 1), (2, 4), (1, 1)]);
        assert_eq!(motive.as_polynomial(), Some(&expect));
        assert_eq!(motive.to_string(), "L^3 + 4*L^2 + L");
        assert_eq!(motive.limit_at_one().unwrap(), rat_int(6));
    }

    #[test]
    fn stringy_motive_p1_plus_p1() {
        let g = s3();
        let motive = stringy_motive(&g, &rep(&g, &[(3, 0), (3, 0)]));
        let expect = poly_from(&[(6, 1), (5, 1), (4, 1)]);
        assert_eq!(motive.as_polynomial(), Some(&expect));
        assert_eq!(motive.limit_at_one().unwrap(), rat_int(3));
    }

    #[test]
    fn divergent_for_small_d_invariant() {
        let g = s3();
        let motive = stringy_motive(&g, &rep(&g, &[(1, 0)]));
        assert_eq!(motive, MotiveResult::Divergent { d_v: 0, p: 3 });
        assert_eq!(
            motive.limit_at_one().unwrap_err(),
            Error::Divergent { d_v: 0, p: 3 }
        );
    }

    #[test]
    fn genuinely_rational_motive() {
        // p = 2, m = 1, three 2-dimensional summands: D_V = 3 > p and the
        // denominator keeps the factor L + 1.
        let g = MetacyclicGroup::new(2, 1, 1).unwrap();
        let v = rep(&g, &[(2, 0), (2, 0), (2, 0)]);
        let motive = stringy_motive(&g, &v);
        assert_eq!(motive.kind(), "rational");
        assert_eq!(motive.to_string(), "(L^7 + L^6 + L^5) / (L + 1)");
        let expect = RationalExpr::new(
            poly_from(&[(7, 1), (6, 1), (5, 1)]),
            poly_from(&[(1, 1), (0, 1)]),
        );
        match &motive {
            MotiveResult::Rational { value } => assert_eq!(value, &expect),
            other => panic!("expected rational, got {other:?}"),
        }
        // m*D_V/(D_V - p + 1) = 3/2, matching the limit of the reduced form.
        let three_halves = BigRational::new(3.into(), 2.into());
        assert_eq!(motive.limit_at_one().unwrap(), three_halves);
        assert_eq!(euler_number(&g, &v).unwrap(), three_halves);
    }

    #[test]
    fn euler_closed_forms() {
        let g = s3();
        assert_eq!(euler_number(&g, &rep(&g, &[(3, 1)])).unwrap(), rat_int(6));
        assert_eq!(
            euler_number(&g, &rep(&g, &[(3, 0), (3, 0)])).unwrap(),
            rat_int(3)
        );
        assert_eq!(
            euler_number(&g, &rep(&g, &[(2, 0)])).unwrap_err(),
            Error::Divergent { d_v: 1, p: 3 }
        );
    }

    #[test]
    fn evaluation_of_motive() {
        let g = s3();
        let motive = stringy_motive(&g, &rep(&g, &[(3, 0), (3, 0)]));
        assert_eq!(
            motive.evaluate_at(&rat_int(3)).unwrap(),
            rat_int(729 + 243 + 81)
        );
        assert_eq!(motive.evaluate_at(&rat_int(1)).unwrap(), rat_int(3));
    }
}
