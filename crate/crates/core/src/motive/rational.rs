//! Quotients of Puiseux polynomials and their exact simplification.
//!
//! Fractional exponents are cleared by the substitution `L = M^N` with `N`
//! the lcm of all exponent denominators, a common power of `M` shifts both
//! sides to ordinary polynomials, and the quotient is reduced by a monic
//! Euclidean GCD over `Q`. Limits at `L = 1` only need the multiplicity of
//! the factor `(M - 1)` on each side, which is extracted by repeated
//! synthetic division.

use std::fmt;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::puiseux::PuiseuxPoly;
use crate::error::{Error, Result};

/// A quotient `num/den` of Puiseux polynomials, `den ≠ 0`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RationalExpr {
    num: PuiseuxPoly,
    den: PuiseuxPoly,
}

/// Outcome of [`RationalExpr::reduce`].
#[derive(Debug, Clone, PartialEq)]
pub enum Reduced {
    /// The denominator divides the numerator exactly.
    Poly(PuiseuxPoly),
    /// GCD-reduced quotient; the denominator is not a unit.
    Ratio(RationalExpr),
}

impl RationalExpr {
    /// Builds `num/den`. Panics if `den` is the zero polynomial: a zero
    /// denominator is a programming error, not an input condition.
    pub fn new(num: PuiseuxPoly, den: PuiseuxPoly) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        Self { num, den }
    }

    pub fn from_poly(p: PuiseuxPoly) -> Self {
        Self::new(p, PuiseuxPoly::one())
    }

    pub fn num(&self) -> &PuiseuxPoly {
        &self.num
    }

    pub fn den(&self) -> &PuiseuxPoly {
        &self.den
    }

    /// GCD reduction after exponent clearing. Returns the quotient as a
    /// polynomial when the reduced denominator is a single term.
    ///
    /// Denominators of the shape `c·M^a·(M^J - 1)` (every stringy-motive
    /// denominator) are squarefree with cyclotomic factors, so the common
    /// factor is found by exact divisibility tests against each `Φ_d`,
    /// `d | J`; this sidesteps the coefficient growth of a Euclidean GCD.
    pub fn reduce(&self) -> Reduced {
        if self.num.is_zero() {
            return Reduced::Poly(PuiseuxPoly::zero());
        }
        let cleared = Cleared::from(&self.num, &self.den);
        if let Some((a, j, c)) = binomial_diff_shape(&cleared.den) {
            return reduce_by_roots_of_unity(&cleared, a, j, &c);
        }
        let g = gcd(&cleared.num, &cleared.den);
        let num_r = div_exact(&cleared.num, &g).expect("gcd divides numerator");
        let den_r = div_exact(&cleared.den, &g).expect("gcd divides denominator");
        // Strip a common monomial factor M^k (zero low-order coefficients).
        let k_num = num_r.iter().take_while(|c| c.is_zero()).count();
        let k_den = den_r.iter().take_while(|c| c.is_zero()).count();
        let k = k_num.min(k_den);
        let num_r = num_r[k..].to_vec();
        let den_r = den_r[k..].to_vec();
        if den_r.len() == den_r.iter().take_while(|c| c.is_zero()).count() + 1 {
            // den = c * M^j: divide through.
            let j = den_r.len() - 1;
            let c = den_r[j].clone();
            let poly = cleared.rebuild(&num_r, -(j as i64), &c.recip());
            Reduced::Poly(poly)
        } else {
            Reduced::Ratio(RationalExpr::new(
                cleared.rebuild(&num_r, 0, &BigRational::one()),
                cleared.rebuild(&den_r, 0, &BigRational::one()),
            ))
        }
    }

    /// Exact limit as `L → 1`: strips matching powers of `(M - 1)` from both
    /// sides and evaluates. Errors with [`Error::PoleAtOne`] when the
    /// denominator vanishes to higher order than the numerator.
    pub fn limit_at_one(&self) -> Result<BigRational> {
        if self.num.is_zero() {
            return Ok(BigRational::zero());
        }
        let cleared = Cleared::from(&self.num, &self.den);
        let mut num = cleared.num;
        let mut den = cleared.den;
        // Multiplicity of (M - 1) in the denominator.
        while eval_one(&den).is_zero() {
            den = div_linear_one(&den);
            if eval_one(&num).is_zero() {
                num = div_linear_one(&num);
            } else {
                return Err(Error::PoleAtOne);
            }
        }
        Ok(eval_one(&num) / eval_one(&den))
    }

    /// Exact evaluation at `L = q` on the reduced form.
    pub fn evaluate_at(&self, q: &BigRational) -> Result<BigRational> {
        match self.reduce() {
            Reduced::Poly(p) => p.evaluate(q),
            Reduced::Ratio(r) => {
                let den = r.den.evaluate(q)?;
                if den.is_zero() {
                    return Err(Error::PoleAtPoint(q.to_string()));
                }
                Ok(r.num.evaluate(q)? / den)
            }
        }
    }
}

/// Equality by cross-multiplication: `a/b = c/d` iff `a·d = c·b`.
impl PartialEq for RationalExpr {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalExpr {}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Both sides of a quotient as dense polynomials in `M = L^{1/N}`, shifted
/// by a common `M^t` so all exponents are nonnegative.
struct Cleared {
    num: Vec<BigRational>,
    den: Vec<BigRational>,
    scale: BigInt,
}

impl Cleared {
    fn from(num: &PuiseuxPoly, den: &PuiseuxPoly) -> Self {
        let n = lcm_big(
            &num.exponent_denominator_lcm(),
            &den.exponent_denominator_lcm(),
        );
        let to_indexed = |p: &PuiseuxPoly| -> Vec<(i64, BigRational)> {
            p.terms()
                .map(|(e, c)| {
                    let k = (e * &BigRational::from_integer(n.clone())).to_integer();
                    (k.to_i64().expect("cleared exponent fits in i64"), c.clone())
                })
                .collect()
        };
        let ni = to_indexed(num);
        let di = to_indexed(den);
        let min = ni
            .iter()
            .chain(&di)
            .map(|&(k, _)| k)
            .min()
            .unwrap_or(0)
            .min(0);
        let densify = |items: Vec<(i64, BigRational)>| -> Vec<BigRational> {
            let deg = items.iter().map(|&(k, _)| k - min).max().unwrap_or(0) as usize;
            let mut v = vec![BigRational::zero(); deg + 1];
            for (k, c) in items {
                v[(k - min) as usize] = c;
            }
            v
        };
        Self {
            num: densify(ni),
            den: densify(di),
            scale: n,
        }
    }

    /// Maps a dense polynomial in `M` back to `L`-exponents
    /// `(index + offset)/N`, scaling coefficients by `factor`.
    fn rebuild(&self, coeffs: &[BigRational], offset: i64, factor: &BigRational) -> PuiseuxPoly {
        let n = BigRational::from_integer(self.scale.clone());
        let mut out = PuiseuxPoly::zero();
        for (idx, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = BigRational::from_integer(BigInt::from(idx as i64 + offset)) / &n;
            out = out.add(&PuiseuxPoly::monomial(exp, c * factor));
        }
        out
    }
}

fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num::Integer;
    a.lcm(b)
}

/// Matches `den = c·M^a·(M^j - 1)`, i.e. exactly two nonzero coefficients
/// that are negatives of each other.
fn binomial_diff_shape(den: &[BigRational]) -> Option<(usize, u64, BigRational)> {
    let nz: Vec<(usize, &BigRational)> = den
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    match nz.as_slice() {
        [(lo, clo), (hi, chi)] if **clo == -(*chi).clone() => {
            Some((*lo, (hi - lo) as u64, (*chi).clone()))
        }
        _ => None,
    }
}

/// Divisors of `j`, ascending.
fn divisors(j: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=j).filter(|d| j % d == 0).collect();
    out.sort_unstable();
    out
}

/// The cyclotomic polynomials `Φ_d` for every `d | j`, by the recursion
/// `Φ_d = (M^d - 1) / Π_{e | d, e < d} Φ_e`.
fn cyclotomics_dividing(j: u64) -> Vec<(u64, Vec<BigRational>)> {
    let mut cache: Vec<(u64, Vec<BigRational>)> = Vec::new();
    for d in divisors(j) {
        let mut poly = vec![BigRational::zero(); d as usize + 1];
        poly[0] = -BigRational::one();
        poly[d as usize] = BigRational::one();
        for (e, phi) in &cache {
            if d % e == 0 {
                poly = div_exact(&poly, phi).expect("cyclotomic recursion divides exactly");
            }
        }
        cache.push((d, poly));
    }
    cache
}

/// Reduces `num / (c·M^a·(M^j - 1))` by peeling off the cyclotomic factors
/// of the denominator that divide the numerator.
fn reduce_by_roots_of_unity(cleared: &Cleared, a: usize, j: u64, c: &BigRational) -> Reduced {
    let mut num = cleared.num.clone();
    trim(&mut num);
    let mut den_parts: Vec<Vec<BigRational>> = Vec::new();
    for (_, phi) in cyclotomics_dividing(j) {
        match div_exact(&num, &phi) {
            Some(q) => num = q,
            None => den_parts.push(phi),
        }
    }
    let v_num = num.iter().take_while(|c| c.is_zero()).count();
    let k = v_num.min(a);
    let num: Vec<BigRational> = num[k..].to_vec();
    let a = a - k;
    if den_parts.is_empty() {
        return Reduced::Poly(cleared.rebuild(&num, -(a as i64), &c.recip()));
    }
    let mut den = vec![c.clone()];
    for part in &den_parts {
        den = mul_dense(&den, part);
    }
    let mut shifted = vec![BigRational::zero(); a];
    shifted.extend(den);
    Reduced::Ratio(RationalExpr::new(
        cleared.rebuild(&num, 0, &BigRational::one()),
        cleared.rebuild(&shifted, 0, &BigRational::one()),
    ))
}

fn mul_dense(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn is_zero_poly(v: &[BigRational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn eval_one(v: &[BigRational]) -> BigRational {
    v.iter().fold(BigRational::zero(), |a, c| a + c)
}

/// Synthetic division by `(M - 1)`; caller guarantees the value at 1 is 0.
fn div_linear_one(v: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); v.len().saturating_sub(1)];
    let mut carry = BigRational::zero();
    for i in (1..v.len()).rev() {
        carry = &carry + &v[i];
        out[i - 1] = carry.clone();
    }
    debug_assert!((&carry + &v[0]).is_zero(), "no root at 1");
    out
}

/// Remainder of `a` by `b` (monic-normalized internally). The divisor is
/// walked through its nonzero coefficients only; the window denominators
/// are binomials, so this is the step that keeps reduction linear.
fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut d = b.to_vec();
    trim(&mut d);
    assert!(!d.is_empty(), "division by zero polynomial");
    let lead = d.last().unwrap().clone();
    if !lead.is_one() {
        for c in d.iter_mut() {
            *c = &*c / &lead;
        }
    }
    let db = d.len() - 1;
    let nz: Vec<(usize, BigRational)> = d[..db]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j, c.clone()))
        .collect();
    while r.len() > db {
        let coef = r.last().unwrap().clone();
        let dr = r.len() - 1;
        if !coef.is_zero() {
            for (j, c) in &nz {
                let sub = &coef * c;
                r[dr - db + j] = &r[dr - db + j] - &sub;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic Euclidean GCD over `Q`.
fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        if !lead.is_one() {
            for c in x.iter_mut() {
                *c = &*c / &lead;
            }
        }
    }
    x
}

/// Exact quotient `a / b`, or `None` with nonzero remainder.
fn div_exact(a: &[BigRational], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut d = b.to_vec();
    trim(&mut d);
    assert!(!d.is_empty(), "division by zero polynomial");
    if r.is_empty() {
        return Some(vec![]);
    }
    if r.len() < d.len() {
        return None;
    }
    let db = d.len() - 1;
    let lead = d.last().unwrap().clone();
    let nz: Vec<(usize, BigRational)> = d[..db]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j, c.clone()))
        .collect();
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let coef = r.last().unwrap() / &lead;
        if !coef.is_zero() {
            q[dr - db] = coef.clone();
            for (j, c) in &nz {
                let sub = &coef * c;
                r[dr - db + j] = &r[dr - db + j] - &sub;
            }
        }
        r.pop();
        trim(&mut r);
    }
    if is_zero_poly(&r) {
        Some(q)
    } else {
        None
    }
}
