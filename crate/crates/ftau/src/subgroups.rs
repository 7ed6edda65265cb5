//! The index-two subgroup `K` generated by `x0, x1, y1, x2, y2, ...`, the
//! shifted copies generated by all generators of index at least `m`, the
//! index-shift endomorphism, and Britton-style rewriting for the
//! presentation of `K` as an ascending HNN extension with stable letter
//! `x0^-1`.

use std::fmt;

use thiserror::Error;

use crate::normal::{normalize, StepLimitExceeded};
use crate::words::{coset_parity, Family, Letter, Word};

/// A word in the shape `x0^a * core * x0^-b` with the core indexed entirely
/// away from zero. Represents the same group element as the word it was
/// rewritten from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HnnForm {
    a: usize,
    core: Word,
    b: usize,
}

impl HnnForm {
    pub fn new(a: usize, core: Word, b: usize) -> HnnForm {
        debug_assert!(core.min_index().map_or(true, |i| i >= 1));
        HnnForm { a, core, b }
    }

    pub fn leading_exp(&self) -> usize {
        self.a
    }

    pub fn core(&self) -> &Word {
        &self.core
    }

    pub fn trailing_exp(&self) -> usize {
        self.b
    }

    /// The spelled-out word `x0^a core x0^-b`.
    pub fn to_word(&self) -> Word {
        let x0 = Word::from_letters(vec![Letter::x(0)]);
        x0.repeat(self.a as i64).concat(&self.core).concat(&x0.repeat(-(self.b as i64)))
    }
}

impl fmt::Display for HnnForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, core=\"{}\", b={})", self.a, self.core, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("letter y0 at position {position} is outside the HNN alphabet of K")]
pub struct HnnAlphabetError {
    pub position: usize,
}

/// Three-valued membership verdict: `Unknown` is reported when the normal
/// form computation backing the test ran out of steps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Membership {
    In,
    NotIn,
    Unknown,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Membership::In => "in",
            Membership::NotIn => "not in",
            Membership::Unknown => "unknown",
        };
        write!(f, "{text}")
    }
}

/// The index-shift endomorphism: every generator index goes up by one. On
/// words indexed away from zero this agrees with conjugation by `x0`, i.e.
/// the image evaluates to the same map as `x0^-1 w x0`.
pub fn sigma_endo(w: &Word) -> Word {
    w.shift(1).expect("shifting indices up stays in range")
}

/// Rewrites a word over the alphabet `{x0^{+-1}} U {index >= 1}` into the
/// shape `x0^a core x0^-b`: positive `x0` letters migrate to the front and
/// negative ones to the back via `g x0 -> x0 sigma(g)` and
/// `x0^-1 g -> sigma(g) x0^-1`, cancelling interior `x0^{+-1}` pairs on the
/// way. Rejects `y0^{+-1}`.
pub fn hnn_rewrite(w: &Word) -> Result<HnnForm, HnnAlphabetError> {
    let mut a = 0usize;
    let mut core: Vec<Letter> = Vec::new();
    let mut b = 0usize;
    for (position, &l) in w.letters().iter().enumerate() {
        if l.index == 0 {
            if l.family == Family::Y {
                return Err(HnnAlphabetError { position });
            }
            if l.inverse {
                b += 1;
            } else if b > 0 {
                b -= 1;
            } else {
                a += 1;
                for letter in &mut core {
                    letter.index += 1;
                }
            }
        } else {
            let mut letter = l;
            letter.index += u32::try_from(b).expect("trailing exponent fits");
            core.push(letter);
        }
    }
    Ok(HnnForm { a, core: Word::from_letters(core), b })
}

/// Britton-style reduction: while both outer exponents are positive and the
/// normalized core only uses indices at least two, strip one `x0` from each
/// side and shift the core down. The result admits no further step and
/// represents the same element. Each round normalizes the core, so the step
/// limit applies per round.
pub fn hnn_reduce(h: &HnnForm, step_limit: u64) -> Result<HnnForm, StepLimitExceeded> {
    let mut current = h.clone();
    while current.a > 0 && current.b > 0 {
        let core_nf = normalize(&current.core, step_limit)?;
        if core_nf.min_index().is_some_and(|i| i < 2) {
            break;
        }
        current = HnnForm {
            a: current.a - 1,
            core: core_nf.shift(-1).expect("indices at least two"),
            b: current.b - 1,
        };
    }
    Ok(current)
}

/// Membership in the index-two subgroup `K`: the coset parity map vanishes.
pub fn in_k(w: &Word) -> bool {
    coset_parity(w) == 0
}

/// Membership in the copy of the group generated by all generators of index
/// at least `m`, decided through the normal form: by uniqueness, a member's
/// normal form uses no index below `m`.
pub fn in_ftau_m(w: &Word, m: u32, step_limit: u64) -> Membership {
    assert!(m >= 1, "subgroup level must be positive");
    match normalize(w, step_limit) {
        Ok(nf) => {
            if nf.min_index().map_or(true, |i| i >= m) {
                Membership::In
            } else {
                Membership::NotIn
            }
        }
        Err(_) => Membership::Unknown,
    }
}
