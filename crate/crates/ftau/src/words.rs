//! Words over the generators `x_i`, `y_i` and their inverses: parsing,
//! formatting, evaluation into piecewise-linear maps, free reduction, index
//! shifts, the defining relations, the abelianization, the boundary-slope
//! characters `lambda` and `rho`, and the coset decomposition along the
//! index-two subgroup `K`.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use thiserror::Error;

use crate::pl::PlHomeo;

/// Maximum exponent magnitude a single `^` term may expand to. Words are
/// materialized letter by letter, so an unbounded exponent would just be an
/// allocation bomb.
pub const MAX_TERM_EXPONENT: i64 = 1_000_000;

/// Generator family: `x`-type or `y`-type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
}

impl Family {
    fn symbol(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
        }
    }
}

/// A signed generator `x_i^{+-1}` or `y_i^{+-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub family: Family,
    pub index: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn x(index: u32) -> Letter {
        Letter { family: Family::X, index, inverse: false }
    }

    pub fn y(index: u32) -> Letter {
        Letter { family: Family::Y, index, inverse: false }
    }

    pub fn inverted(self) -> Letter {
        Letter { inverse: !self.inverse, ..self }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn is_inverse_of(self, other: Letter) -> bool {
        self.family == other.family && self.index == other.index && self.inverse != other.inverse
    }

    fn pl(self) -> PlHomeo {
        let map = match self.family {
            Family::X => PlHomeo::generator_x(self.index),
            Family::Y => PlHomeo::generator_y(self.index),
        };
        if self.inverse {
            map.invert()
        } else {
            map
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.index)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators. Unreduced words are legal everywhere; no
/// invariant beyond the letters themselves.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid word at byte {position}: {message}")]
pub struct WordParseError {
    pub position: usize,
    pub message: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("index shift by {amount} takes {letter} at position {position} out of range")]
pub struct ShiftError {
    pub position: usize,
    pub letter: Letter,
    pub amount: i64,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses whitespace-separated terms `('x'|'y') <index> ['^' <exponent>]`.
    /// The exponent defaults to `1`; negative exponents expand to repeated
    /// inverse letters.
    pub fn parse(text: &str) -> Result<Word, WordParseError> {
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut pos = 0usize;
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let family = match bytes[pos] {
                b'x' => Family::X,
                b'y' => Family::Y,
                _ => {
                    return Err(WordParseError { position: pos, message: "expected 'x' or 'y'" })
                }
            };
            pos += 1;
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits_start {
                return Err(WordParseError { position: pos, message: "expected a generator index" });
            }
            let index: u32 = text[digits_start..pos].parse().map_err(|_| WordParseError {
                position: digits_start,
                message: "generator index too large",
            })?;
            let mut exponent: i64 = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let exp_start = pos;
                if pos < bytes.len() && bytes[pos] == b'-' {
                    pos += 1;
                }
                let exp_digits = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == exp_digits {
                    return Err(WordParseError { position: pos, message: "expected an exponent" });
                }
                exponent = text[exp_start..pos].parse().map_err(|_| WordParseError {
                    position: exp_start,
                    message: "exponent out of range",
                })?;
                if exponent.unsigned_abs() > MAX_TERM_EXPONENT as u64 {
                    return Err(WordParseError { position: exp_start, message: "exponent too large" });
                }
            }
            if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                return Err(WordParseError { position: pos, message: "unexpected character in term" });
            }
            let letter = Letter { family, index, inverse: exponent < 0 };
            for _ in 0..exponent.unsigned_abs() {
                letters.push(letter);
            }
        }
        Ok(Word { letters })
    }

    /// Formal inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// `self^k`; negative `k` repeats the inverse.
    pub fn repeat(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top.is_inverse_of(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word { letters: stack }
    }

    /// Adds `m` to every generator index. Fails if any index would leave
    /// `u32` range.
    pub fn shift(&self, m: i64) -> Result<Word, ShiftError> {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(position, &l)| {
                let shifted = i64::from(l.index) + m;
                u32::try_from(shifted)
                    .map(|index| Letter { index, ..l })
                    .map_err(|_| ShiftError { position, letter: l, amount: m })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word { letters })
    }

    /// The representation map: fold the generator maps left to right, so the
    /// first letter acts first. The empty word is the identity.
    pub fn eval(&self) -> PlHomeo {
        let mut acc = PlHomeo::identity();
        for &l in &self.letters {
            acc = acc.compose(&l.pl());
        }
        acc
    }

    pub fn max_index(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.index).max()
    }

    pub fn min_index(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.index).min()
    }
}

impl FromStr for Word {
    type Err = WordParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    /// Groups runs of an identical letter into exponent notation, e.g.
    /// `y0^2 x1^-3`. Purely a display convention; the letter sequence is the
    /// real datum.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1usize;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exponent = l.sign() * run as i64;
            if exponent == 1 {
                write!(f, "{}{}", l.family.symbol(), l.index)?;
            } else {
                write!(f, "{}{}^{}", l.family.symbol(), l.index, exponent)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// All defining relations `(a_j b_i, b_i a_{j+1})` for `0 <= i < j <= n`
/// together with `(y_i^2, x_i x_{i+1})` for `0 <= i <= n`. Both sides of each
/// pair evaluate to the same homeomorphism.
pub fn relations_up_to(n: u32) -> Vec<(Word, Word)> {
    assert!(n >= 1, "need at least indices 0 and 1");
    let families = [Family::X, Family::Y];
    let letter = |family, index| Letter { family, index, inverse: false };
    let mut out = Vec::new();
    for j in 1..=n {
        for i in 0..j {
            for a in families {
                for b in families {
                    let lhs = Word::from_letters(vec![letter(a, j), letter(b, i)]);
                    let rhs = Word::from_letters(vec![letter(b, i), letter(a, j + 1)]);
                    out.push((lhs, rhs));
                }
            }
        }
    }
    for i in 0..=n {
        let lhs = Word::from_letters(vec![Letter::y(i), Letter::y(i)]);
        let rhs = Word::from_letters(vec![Letter::x(i), Letter::x(i + 1)]);
        out.push((lhs, rhs));
    }
    out
}

/// Image of a word in the abelianization, written in the basis
/// `(y0-bar, x1-bar, z)`: two free coordinates and one order-two bit.
///
/// Generator images are forced by abelianizing the relations:
/// `x0 -> (2, -1, 0)`, `x_j -> (0, 1, 0)` and `y_j -> (0, 1, 1)` for
/// `j >= 1`, `y0 -> (1, 0, 0)`; inverses negate, and `z` is its own negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct AbelElt {
    pub u: i64,
    pub v: i64,
    pub z: bool,
}

impl AbelElt {
    pub fn zero() -> AbelElt {
        AbelElt::default()
    }

    /// `lambda` read off the abelianization: `-u`.
    pub fn lambda(&self) -> i64 {
        -self.u
    }

    /// `rho` read off the abelianization: `u + v`.
    pub fn rho(&self) -> i64 {
        self.u + self.v
    }
}

impl Add for AbelElt {
    type Output = AbelElt;
    fn add(self, rhs: AbelElt) -> AbelElt {
        AbelElt { u: self.u + rhs.u, v: self.v + rhs.v, z: self.z ^ rhs.z }
    }
}

impl Neg for AbelElt {
    type Output = AbelElt;
    fn neg(self) -> AbelElt {
        AbelElt { u: -self.u, v: -self.v, z: self.z }
    }
}

fn letter_abel(l: Letter) -> AbelElt {
    let positive = match (l.family, l.index) {
        (Family::X, 0) => AbelElt { u: 2, v: -1, z: false },
        (Family::X, _) => AbelElt { u: 0, v: 1, z: false },
        (Family::Y, 0) => AbelElt { u: 1, v: 0, z: false },
        (Family::Y, _) => AbelElt { u: 0, v: 1, z: true },
    };
    if l.inverse {
        -positive
    } else {
        positive
    }
}

/// Additive image of a word in the abelianization.
pub fn abelianize(w: &Word) -> AbelElt {
    w.letters().iter().fold(AbelElt::zero(), |acc, &l| acc + letter_abel(l))
}

/// `lambda(w)`: `log_tau` of the slope at `0` of the represented map. Letter
/// values: `x0 -> -2`, `y0 -> -1`, everything of index `>= 1` vanishes.
pub fn lambda_of(w: &Word) -> i64 {
    w.letters()
        .iter()
        .map(|l| {
            let value = match (l.family, l.index) {
                (Family::X, 0) => -2,
                (Family::Y, 0) => -1,
                _ => 0,
            };
            value * l.sign()
        })
        .sum()
}

/// `rho(w)`: `log_tau` of the slope at `1`. Every positive letter contributes
/// `+1`.
pub fn rho_of(w: &Word) -> i64 {
    w.letters().iter().map(|l| l.sign()).sum()
}

/// Which of the two cosets of the index-two subgroup `K` a word lies in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Coset {
    K,
    Y0K,
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coset::K => write!(f, "K"),
            Coset::Y0K => write!(f, "y0K"),
        }
    }
}

/// Signed count of `y0` letters mod 2. This map kills every defining
/// relation, so it is well defined on group elements; it also equals the
/// `y0`-flag of the normal form.
pub fn coset_parity(w: &Word) -> u8 {
    (w.letters()
        .iter()
        .filter(|l| l.family == Family::Y && l.index == 0)
        .count()
        % 2) as u8
}

pub fn coset_of(w: &Word) -> Coset {
    if coset_parity(w) == 0 {
        Coset::K
    } else {
        Coset::Y0K
    }
}
