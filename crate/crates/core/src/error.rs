//! Error type shared by the whole crate.
//!
//! Divergence of the stringy motive is deliberately *not* an error: it is a
//! result kind (see [`crate::motive::MotiveResult`]). The `Divergent` variant
//! here is used by the operations whose preconditions require `D_V >= p`
//! (Euler numbers, a/b-invariants).

use thiserror::Error;

/// Errors raised by group validation, stratum queries and exact evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `p` failed a primality check.
    #[error("p = {0} is not prime")]
    NotPrime(u64),

    /// The tame order must be coprime to the characteristic.
    #[error("m = {m} is not coprime to p = {p}")]
    NotCoprime { m: u64, p: u64 },

    /// The action exponent is out of range or does not satisfy a^m = 1 mod p.
    #[error("action exponent a = {a} is invalid for (p, m) = ({p}, {m}): need 1 <= a <= p-1 and a^m = 1 (mod p)")]
    BadAction { p: u64, m: u64, a: u64 },

    /// A summand (d, s) outside 1 <= d <= p, 0 <= s < m.
    #[error("summand (d, s) = ({d}, {s}) is invalid: need 1 <= d <= p = {p} and 0 <= s < m = {m}")]
    BadSummand { d: u64, s: u64, p: u64, m: u64 },

    /// A representation needs at least one summand.
    #[error("a representation must have at least one indecomposable summand")]
    EmptyRepresentation,

    /// The jump fails `p ∤ r` or the congruence class for its component.
    #[error("jump r = {r} is not admissible for gamma = {gamma}: need r >= 1, p = {p} ∤ r and r = {rho} (mod {m_gamma})")]
    InadmissibleJump {
        gamma: u64,
        r: u64,
        p: u64,
        rho: u64,
        m_gamma: u64,
    },

    /// Extension counting requires the residue field size to be a power of p.
    #[error("q = {q} is not a power of p = {p}")]
    BadFieldSize { q: u64, p: u64 },

    /// Extension counting covers field extensions only (connected torsors).
    #[error(
        "gamma = {gamma} is not invertible modulo m = {m}; counting covers connected torsors only"
    )]
    NotInvertible { gamma: u64, m: u64 },

    /// `D_V < p`: the geometric tail does not decay and the requested
    /// quantity has no finite value.
    #[error("D_V = {d_v} < p = {p}: the stringy motive diverges")]
    Divergent { d_v: u64, p: u64 },

    /// The reduced denominator vanishes at L = 1.
    #[error("denominator vanishes at L = 1")]
    PoleAtOne,

    /// The reduced denominator vanishes at the evaluation point.
    #[error("denominator vanishes at L = {0}")]
    PoleAtPoint(String),

    /// Fractional exponents that cannot be cleared exactly at the point.
    #[error("exponents with denominator {denom} cannot be evaluated exactly at L = {point}")]
    FractionalExponent { denom: u64, point: String },

    /// A nontrivial locus with vanishing v-value: the v-function is not a
    /// raising function for this input and the a-invariant is undefined.
    #[error("v-function vanishes at the nontrivial locus {locus}; a/b-invariants are undefined")]
    ZeroV { locus: String },

    /// Internal invariant violation in the matrix construction.
    #[error("matrix construction failed to satisfy the group relations for (d, s) = ({d}, {s})")]
    NoSolution { d: u64, s: u64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
