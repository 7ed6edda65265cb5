//! The rational character space spanned by the boundary-slope characters
//! `lambda` and `rho`, projective character classes, and the restriction /
//! lift correspondence with the index-two subgroup `K`.
//!
//! Characters are homomorphisms to the additive rationals, written
//! `chi = a*lambda + b*rho` with exact rational coefficients. Both
//! coefficient spaces have dimension two, and the coordinates on `Hom(K, R)`
//! are chosen as the restrictions of `lambda` and `rho`, which makes the
//! restriction map the identity matrix and concentrates the lift's content in
//! the single value it assigns to `y0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::words::{lambda_of, rho_of, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("the zero character has no projective class")]
pub struct ZeroCharacterError;

/// A character `a*lambda + b*rho` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    a: BigRational,
    b: BigRational,
}

impl Character {
    pub fn new(a: BigRational, b: BigRational) -> Character {
        Character { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Character {
        Character { a: BigRational::from_integer(a.into()), b: BigRational::from_integer(b.into()) }
    }

    /// The character `lambda`, i.e. coefficients `(1, 0)`.
    pub fn lambda() -> Character {
        Character::from_ints(1, 0)
    }

    /// The character `rho`, i.e. coefficients `(0, 1)`.
    pub fn rho() -> Character {
        Character::from_ints(0, 1)
    }

    pub fn zero() -> Character {
        Character::from_ints(0, 0)
    }

    pub fn lambda_coeff(&self) -> &BigRational {
        &self.a
    }

    pub fn rho_coeff(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `chi(w) = a*lambda(w) + b*rho(w)`; factors through the abelianization.
    pub fn eval(&self, w: &Word) -> BigRational {
        &self.a * BigRational::from_integer(lambda_of(w).into())
            + &self.b * BigRational::from_integer(rho_of(w).into())
    }

    /// Projective class under positive scaling.
    pub fn class(&self) -> Result<CharacterClass, ZeroCharacterError> {
        CharacterClass::from_rationals(&self.a, &self.b)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*lambda + {}*rho", self.a, self.b)
    }
}

/// A point of the character sphere: a primitive integer pair `(a, b)` with
/// the sign pattern of the underlying character retained. Two characters give
/// the same class exactly when they differ by a positive rational factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharacterClass {
    a: BigInt,
    b: BigInt,
}

impl CharacterClass {
    /// Builds a class from an integer pair by dividing out the gcd. The pair
    /// must be nonzero.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<CharacterClass, ZeroCharacterError> {
        let a = a.into();
        let b = b.into();
        if a.is_zero() && b.is_zero() {
            return Err(ZeroCharacterError);
        }
        let g = a.gcd(&b);
        Ok(CharacterClass { a: a / &g, b: b / &g })
    }

    fn from_rationals(a: &BigRational, b: &BigRational) -> Result<CharacterClass, ZeroCharacterError> {
        // Clear denominators by a positive factor, then reduce.
        let scale = a.denom().lcm(b.denom());
        let scaled_a = (a * BigRational::from_integer(scale.clone())).to_integer();
        let scaled_b = (b * BigRational::from_integer(scale)).to_integer();
        CharacterClass::new(scaled_a, scaled_b)
    }

    pub fn lambda_coeff(&self) -> &BigInt {
        &self.a
    }

    pub fn rho_coeff(&self) -> &BigInt {
        &self.b
    }

    pub fn antipode(&self) -> CharacterClass {
        CharacterClass { a: -&self.a, b: -&self.b }
    }

    /// A representative character with these integer coefficients.
    pub fn representative(&self) -> Character {
        Character::new(
            BigRational::from_integer(self.a.clone()),
            BigRational::from_integer(self.b.clone()),
        )
    }
}

impl fmt::Display for CharacterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// A character of the subgroup `K`, in the basis of the restrictions of
/// `lambda` and `rho`. The basis is legitimate: the torsion-free rank of the
/// abelianization of `K` is two, and `x0`, `x1` witness independence of the
/// restricted characters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterOnK {
    a: BigRational,
    b: BigRational,
}

impl CharacterOnK {
    pub fn new(a: BigRational, b: BigRational) -> CharacterOnK {
        CharacterOnK { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> CharacterOnK {
        CharacterOnK {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    pub fn lambda_coeff(&self) -> &BigRational {
        &self.a
    }

    pub fn rho_coeff(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Evaluation by the same formula `a*lambda + b*rho`. On words in `K`
    /// this is the character itself; on other words it computes the unique
    /// extension.
    pub fn eval(&self, w: &Word) -> BigRational {
        &self.a * BigRational::from_integer(lambda_of(w).into())
            + &self.b * BigRational::from_integer(rho_of(w).into())
    }

    pub fn class(&self) -> Result<CharacterClassOnK, ZeroCharacterError> {
        CharacterClass::from_rationals(&self.a, &self.b).map(CharacterClassOnK)
    }
}

/// A point of the character sphere of `K`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharacterClassOnK(pub CharacterClass);

impl CharacterClassOnK {
    /// The corresponding class of the whole group under the coordinate
    /// identification (the restriction is the identity matrix in these
    /// bases).
    pub fn as_full_group_class(&self) -> CharacterClass {
        self.0.clone()
    }
}

impl fmt::Display for CharacterClassOnK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Restriction along the inclusion of `K`: identity on coordinates by the
/// choice of basis, and injective because `K` has finite index.
pub fn restrict_to_k(chi: &Character) -> CharacterOnK {
    CharacterOnK { a: chi.a.clone(), b: chi.b.clone() }
}

/// The lift from characters of `K` to characters of the whole group.
///
/// On the generators inside `K` the lift agrees with `psi`; the one generator
/// outside, `y0`, receives `psi(x0 x1) / 2` because `y0^2 = x0 x1` lands in
/// `K`. The returned coordinates are recovered from the lift's values on `y0`
/// and `x1`. Restriction after lifting is the identity, and the lift of a
/// nonzero character is nonzero.
pub fn lift_from_k(psi: &CharacterOnK) -> Character {
    let y0_squared = Word::parse("x0 x1").expect("fixed word");
    let x1 = Word::parse("x1").expect("fixed word");
    let two = BigRational::from_integer(2.into());
    let value_y0 = psi.eval(&y0_squared) / two;
    let value_x1 = psi.eval(&x1);
    // chi(y0) = -a + b and chi(x1) = b determine (a, b).
    let b = value_x1;
    let a = &b - &value_y0;
    Character { a, b }
}

/// Whether some power of the element lies in the commutator subgroup:
/// equivalently, the image in the abelianization is torsion, equivalently
/// `lambda` and `rho` both vanish.
pub fn in_sqrt_commutator(w: &Word) -> bool {
    lambda_of(w) == 0 && rho_of(w) == 0
}

/// Parses an exact rational in the grammar `p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<BigRational, RationalParseError> {
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt =
        num_text.trim().parse().map_err(|_| RationalParseError { text: text.to_string() })?;
    let denom: BigInt =
        den_text.trim().parse().map_err(|_| RationalParseError { text: text.to_string() })?;
    if denom.is_zero() {
        return Err(RationalParseError { text: text.to_string() });
    }
    Ok(BigRational::new(numer, denom))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational number: {text:?}")]
pub struct RationalParseError {
    pub text: String,
}

#[allow(dead_code)]
fn _rational_one() -> BigRational {
    BigRational::one()
}
