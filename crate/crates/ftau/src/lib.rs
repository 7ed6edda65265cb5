//! Exact computation in the golden-ratio Thompson group.
//!
//! The group consists of the piecewise-linear, orientation-preserving
//! homeomorphisms of `[0, 1]` whose slopes are integer powers of
//! `tau = (sqrt(5) - 1) / 2` (the positive root of `x^2 + x = 1`) and whose
//! breakpoints lie in the ring `Z[tau]`. This crate models those maps
//! exactly and connects them to the infinite presentation on the generators
//! `x_i`, `y_i`:
//!
//! * [`golden`] — arithmetic in `Z[tau]` with exact sign and order;
//! * [`pl`] — the homeomorphisms themselves: evaluation, composition,
//!   inversion, the generators, the reflection automorphism;
//! * [`words`] — words in the generators, free reduction, index shifts, the
//!   defining relations, the abelianization and the characters `lambda`,
//!   `rho`;
//! * [`normal`] — the unique normal form and the rewriting system reaching
//!   it;
//! * [`characters`] — the rational character space, projective classes, and
//!   the restriction/lift correspondence with the index-two subgroup `K`;
//! * [`sigma`] — the Sigma-invariant membership oracle, kernel finiteness
//!   verdicts, and kernel witnesses;
//! * [`subgroups`] — membership in `K` and in the shifted copies of the
//!   group, plus Britton-style HNN rewriting.
//!
//! ```
//! use ftau::{normal, words::Word};
//!
//! let word: Word = "y0 y0".parse()?;
//! let nf = normal::normalize(&word, normal::DEFAULT_STEP_LIMIT)?;
//! assert_eq!(nf.to_string(), "x0 x1");
//! assert_eq!(nf.eval(), word.eval());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod characters;
pub mod golden;
pub mod normal;
pub mod pl;
pub mod sigma;
pub mod subgroups;
pub mod words;

pub use characters::{Character, CharacterClass, CharacterClassOnK, CharacterOnK};
pub use golden::GoldenInt;
pub use normal::NormalForm;
pub use pl::PlHomeo;
pub use sigma::{KernelType, SigmaVerdict};
pub use subgroups::{HnnForm, Membership};
pub use words::{AbelElt, Coset, Family, Letter, Word};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[cfg(doctest)]
mod book;
