//! Exact invariants of wild quotient singularities for the groups
//! `G = Z/p ⋊ Z/m` acting in characteristic `p`.
//!
//! Given the group data `(p, m, a)` and a representation as a multiset of
//! indecomposable summands `(d, s)`, this crate computes, in exact rational
//! arithmetic throughout:
//!
//! * derived group invariants and the reduction data of every torsor
//!   component ([`group`]),
//! * eigenvalue exponents, ages, `D_V`, and explicit `σ`/`τ` matrices over
//!   `F_{p^e}` ([`representation`]),
//! * admissible ramification jumps, stratum dimensions of the torsor
//!   moduli, and counts of local Galois extensions ([`moduli`]),
//! * the v-function on every stratum and tame class ([`vfunction`]),
//! * stringy motives as sparse polynomials in `L` with rational exponents,
//!   and stringy Euler numbers ([`motive`]),
//! * a/b-invariants and the canonical/terminal classification
//!   ([`invariants`]).
//!
//! # Example
//!
//! The projective cover `P_2` of the sign representation of
//! `S_3 = Z/3 ⋊ Z/2`:
//!
//! ```
//! use wild_mckay::group::MetacyclicGroup;
//! use wild_mckay::representation::Representation;
//! use wild_mckay::motive::{euler_number, stringy_motive};
//!
//! let g = MetacyclicGroup::new(3, 2, 2)?;
//! let v = Representation::from_pairs(&g, &[(3, 1)])?;
//! assert_eq!(stringy_motive(&g, &v).to_string(), "L^3 + 4*L^2 + L");
//! assert_eq!(euler_number(&g, &v)?.to_string(), "6");
//! # Ok::<(), wild_mckay::Error>(())
//! ```

pub mod arith;
pub mod error;
pub mod gf;
pub mod group;
pub mod invariants;
pub mod moduli;
pub mod motive;
pub mod representation;
pub mod vfunction;

mod serde_util;

pub use error::{Error, Result};
pub use group::MetacyclicGroup;
pub use representation::{Indecomposable, Representation};

/// Book chapters double as doctests so the guide can never drift from the
/// library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(groups, "../../../book/src/groups.md");
    chapter!(representations, "../../../book/src/representations.md");
    chapter!(moduli, "../../../book/src/moduli.md");
    chapter!(vfunction, "../../../book/src/vfunction.md");
    chapter!(motives, "../../../book/src/motives.md");
    chapter!(invariants, "../../../book/src/invariants.md");
    chapter!(cli, "../../../book/src/cli.md");
}
