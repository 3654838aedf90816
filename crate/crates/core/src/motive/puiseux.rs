//! Sparse polynomials in `L` with exact rational exponents and coefficients.
//!
//! `L` stands for the class of the affine line; everything the stringy
//! formulas produce is a finite sum `Σ c_e L^e` with `c_e ∈ Q` and `e ∈ Q`
//! (exponent denominators divide `m`). Terms are kept in a map keyed by
//! exponent, zero coefficients are never stored, so structural equality is
//! canonical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `Σ c_e L^e` with rational exponents, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<BigRational, BigRational>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::zero(), BigRational::one())
    }

    /// The single term `coeff · L^exp`; the zero polynomial if `coeff = 0`.
    pub fn monomial(exp: BigRational, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `coeff · L^exp` from integer data.
    pub fn monomial_int(exp: i64, coeff: i64) -> Self {
        Self::monomial(
            BigRational::from_integer(exp.into()),
            BigRational::from_integer(coeff.into()),
        )
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(BigRational::zero(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &BigRational) -> BigRational {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exponent(&self) -> Option<&BigRational> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&BigRational> {
        self.terms.keys().next_back()
    }

    fn insert(&mut self, exp: BigRational, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplication by the monomial `coeff · L^exp`.
    pub fn mul_monomial(&self, exp: &BigRational, coeff: &BigRational) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    /// The value at `L = 1`: the coefficient sum.
    pub fn sum_of_coefficients(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Least common multiple of the exponent denominators.
    pub fn exponent_denominator_lcm(&self) -> BigInt {
        self.terms
            .keys()
            .fold(BigInt::one(), |acc, e| lcm_big(&acc, e.denom()))
    }

    /// Exact evaluation at `L = q`.
    ///
    /// Fractional exponents require `q` to be an exact `N`-th power for `N`
    /// the lcm of the exponent denominators; negative exponents require
    /// `q != 0`. Errors: [`Error::FractionalExponent`], [`Error::PoleAtPoint`].
    pub fn evaluate(&self, q: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let n = self.exponent_denominator_lcm();
        let base = if n.is_one() {
            q.clone()
        } else {
            let n_u32 = n.to_u32().ok_or_else(|| Error::FractionalExponent {
                denom: u64::MAX,
                point: q.to_string(),
            })?;
            exact_nth_root(q, n_u32).ok_or_else(|| Error::FractionalExponent {
                denom: n.to_u64().unwrap_or(u64::MAX),
                point: q.to_string(),
            })?
        };
        let scale = BigRational::from_integer(n);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let k = (e * &scale).to_integer();
            let k_i64 = k.to_i64().expect("exponent fits in i64");
            if base.is_zero() {
                if k_i64 < 0 {
                    return Err(Error::PoleAtPoint(q.to_string()));
                }
                if k_i64 == 0 {
                    acc += c;
                }
                continue;
            }
            acc += c * pow_rational(&base, k_i64);
        }
        Ok(acc)
    }
}

fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num::Integer;
    a.lcm(b)
}

fn pow_rational(base: &BigRational, exp: i64) -> BigRational {
    base.pow(i32::try_from(exp).expect("exponent fits in i32"))
}

fn big_pow(x: &BigInt, n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Exact rational `n`-th root, if one exists.
fn exact_nth_root(q: &BigRational, n: u32) -> Option<BigRational> {
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    if q.is_negative() && n % 2 == 0 {
        return None;
    }
    let root_abs = |x: &BigInt| -> Option<BigInt> {
        let mag = x.abs();
        let r = mag.nth_root(n);
        (big_pow(&r, n) == mag).then_some(r)
    };
    let rn = root_abs(q.numer())?;
    let rd = root_abs(q.denom())?;
    let sign = if q.is_negative() { -1 } else { 1 };
    Some(BigRational::new(rn * BigInt::from(sign), rd))
}

impl Add for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn add(self, rhs: Self) -> PuiseuxPoly {
        PuiseuxPoly::add(self, rhs)
    }
}

impl Sub for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn sub(self, rhs: Self) -> PuiseuxPoly {
        PuiseuxPoly::sub(self, rhs)
    }
}

impl Mul for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn mul(self, rhs: Self) -> PuiseuxPoly {
        PuiseuxPoly::mul(self, rhs)
    }
}

impl Neg for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        PuiseuxPoly::neg(self)
    }
}

fn format_exponent(e: &BigRational) -> String {
    if e.is_one() {
        "L".to_string()
    } else if e.is_integer() {
        format!("L^{}", e)
    } else {
        format!("L^({})", e)
    }
}

impl fmt::Display for PuiseuxPoly {
    /// Canonical rendering, descending exponents: `L^3 + 4*L^2 + L`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", format_exponent(e))?;
            } else {
                write!(f, "{}*{}", mag, format_exponent(e))?;
            }
        }
        Ok(())
    }
}

impl Serialize for PuiseuxPoly {
    /// `[["exp", "coeff"], …]` with exact fraction strings, descending
    /// exponents.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(String, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PuiseuxPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(String, String)>::deserialize(deserializer)?;
        let mut out = PuiseuxPoly::zero();
        for (e, c) in pairs {
            let exp = BigRational::from_str(&e).map_err(D::Error::custom)?;
            let coeff = BigRational::from_str(&c).map_err(D::Error::custom)?;
            out.insert(exp, coeff);
        }
        Ok(out)
    }
}
