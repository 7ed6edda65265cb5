//! Decision procedures for the Sigma (BNSR) invariants of the group and of
//! its index-two subgroup `K`, kernel finiteness verdicts for coabelian
//! subgroups, and constructive kernel witnesses.
//!
//! The membership rules encode the published classification of these
//! invariants for this particular group. They are lookup procedures for a
//! known theorem, not an independent computation from the definitions: the
//! first invariant omits exactly the classes of `-lambda` and `-rho`, and
//! from degree two on the invariant is constant and omits exactly the classes
//! with both coordinates nonpositive. At every degree the homotopical and
//! homological (integral coefficients) answers agree.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::characters::{Character, CharacterClass, CharacterClassOnK, ZeroCharacterError};
use crate::words::Word;

/// Membership of a class in the first and the stable Sigma invariant.
/// `in_sigma_infty` implies `in_sigma1` (the invariants form a descending
/// chain).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SigmaVerdict {
    pub in_sigma1: bool,
    pub in_sigma_infty: bool,
}

/// Finiteness type of the kernel of a nonzero rational character.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KernelType {
    /// Kernel of type `F_infinity` (coefficients of opposite sign).
    FInfty,
    /// Finitely generated but not of type `FP_2` (coefficients of equal
    /// nonzero sign).
    FgNotFp2,
    /// Not finitely generated (exactly one coefficient vanishes).
    NotFg,
}

impl fmt::Display for KernelType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            KernelType::FInfty => "F_INFTY",
            KernelType::FgNotFp2 => "FG_NOT_FP2",
            KernelType::NotFg => "NOT_FG",
        };
        write!(f, "{text}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("kernel witnesses need both coefficients nonzero")]
    ZeroCoefficient,
    #[error("witness exponent does not fit in a word")]
    ExponentOverflow,
}

/// Is the class in the `n`-th Sigma invariant? `n` must be positive.
///
/// For `n = 1` the complement is the two classes `[-lambda]` and `[-rho]`;
/// for every `n >= 2` the invariant equals the degree-two one, whose
/// complement is the classes with both coordinates nonpositive. Degrees
/// strictly between two and infinity carry the value forced by the chain.
pub fn sigma_membership(class: &CharacterClass, n: u32) -> bool {
    assert!(n >= 1, "Sigma invariants are indexed from 1");
    let a = class.lambda_coeff();
    let b = class.rho_coeff();
    if n == 1 {
        let minus_lambda = a.is_negative() && b.is_zero();
        let minus_rho = a.is_zero() && b.is_negative();
        !(minus_lambda || minus_rho)
    } else {
        a.is_positive() || b.is_positive()
    }
}

/// Both memberships at once.
pub fn verdict(class: &CharacterClass) -> SigmaVerdict {
    SigmaVerdict {
        in_sigma1: sigma_membership(class, 1),
        in_sigma_infty: sigma_membership(class, 2),
    }
}

/// Sigma membership for classes of the index-two subgroup `K`, transported
/// along the coordinate identification of the character spheres (restriction
/// is a homeomorphism because the subgroup has finite index and the same
/// torsion-free abelianized rank).
pub fn sigma_membership_k(class: &CharacterClassOnK, n: u32) -> bool {
    sigma_membership(&class.as_full_group_class(), n)
}

/// Finiteness type of `ker(chi)` for a nonzero rational character
/// `chi = a*lambda + b*rho`, decided by the sign of `a*b`.
pub fn kernel_coabelian_type(chi: &Character) -> Result<KernelType, ZeroCharacterError> {
    if chi.is_zero() {
        return Err(ZeroCharacterError);
    }
    let product = chi.lambda_coeff() * chi.rho_coeff();
    Ok(if product.is_negative() {
        KernelType::FInfty
    } else if product.is_positive() {
        KernelType::FgNotFp2
    } else {
        KernelType::NotFg
    })
}

/// A kernel element `t0` with `chi(t0) = 0` and `|lambda(t0)|` minimal among
/// kernel elements on which `lambda` does not vanish.
///
/// Built from the two words `y0 x0^-1` and `x1`, whose `(lambda, rho)`
/// profiles are `(1, 0)` and `(0, 1)`: scaling `chi` to a primitive integer
/// pair `(A, B)`, the witness is `(y0 x0^-1)^B (x1)^-A`, so
/// `(lambda, rho)(t0) = (B, -A)`. Since `(lambda, rho)` maps the group onto
/// `Z^2`, the `lambda`-values over the kernel form exactly `B Z`, which gives
/// the minimality. Requires both coefficients nonzero.
pub fn kernel_witness(chi: &Character) -> Result<Word, WitnessError> {
    if chi.lambda_coeff().is_zero() || chi.rho_coeff().is_zero() {
        return Err(WitnessError::ZeroCoefficient);
    }
    let class = chi.class().expect("nonzero by the check above");
    let p: i64 = class.rho_coeff().try_into().map_err(|_| WitnessError::ExponentOverflow)?;
    let q_neg: i64 = class.lambda_coeff().try_into().map_err(|_| WitnessError::ExponentOverflow)?;
    let w_f = Word::parse("y0 x0^-1").expect("fixed word");
    let w_g = Word::parse("x1").expect("fixed word");
    Ok(w_f.repeat(p).concat(&w_g.repeat(-q_neg)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::in_sqrt_commutator;
    use crate::words::{lambda_of, rho_of};
    use num_rational::BigRational;

    fn class(a: i64, b: i64) -> CharacterClass {
        CharacterClass::new(a, b).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(!sigma_membership(&class(-1, 0), 1));
        assert!(sigma_membership(&class(-1, -1), 1));
        assert!(!sigma_membership(&class(-1, -1), 2));
        assert!(sigma_membership(&class(-3, 5), 7));
    }

    #[test]
    fn cardinal_classes() {
        for c in [class(1, 0), class(0, 1)] {
            assert!(sigma_membership(&c, 1));
            assert!(sigma_membership(&c, 2));
        }
        for c in [class(-1, 0), class(0, -1)] {
            assert!(!sigma_membership(&c, 1));
            assert!(!sigma_membership(&c, 5));
        }
    }

    #[test]
    fn chain_is_monotone_and_flip_symmetric() {
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                if a == 0 && b == 0 {
                    continue;
                }
                let c = class(a, b);
                let v = verdict(&c);
                assert!(!v.in_sigma_infty || v.in_sigma1);
                for n in 1..=5u32 {
                    assert_eq!(sigma_membership(&c, n), sigma_membership(&class(b, a), n));
                    if n >= 2 {
                        assert_eq!(sigma_membership(&c, n), sigma_membership(&c, 2));
                    }
                }
            }
        }
    }

    #[test]
    fn membership_on_k_matches_transport() {
        let on_k = |a, b| CharacterClassOnK(class(a, b));
        assert!(!sigma_membership_k(&on_k(-1, 0), 1));
        assert!(sigma_membership_k(&on_k(1, 1), 1));
        assert!(sigma_membership_k(&on_k(1, 1), 4));
        assert!(!sigma_membership_k(&on_k(0, -1), 3));
    }

    #[test]
    fn kernel_types_by_sign() {
        let t = |a, b| kernel_coabelian_type(&Character::from_ints(a, b)).unwrap();
        assert_eq!(t(1, -1), KernelType::FInfty);
        assert_eq!(t(1, 1), KernelType::FgNotFp2);
        assert_eq!(t(1, 0), KernelType::NotFg);
        assert_eq!(t(0, -5), KernelType::NotFg);
        assert!(kernel_coabelian_type(&Character::zero()).is_err());
    }

    #[test]
    fn witness_profiles() {
        let t0 = kernel_witness(&Character::from_ints(1, -1)).unwrap();
        assert_eq!((lambda_of(&t0), rho_of(&t0)), (-1, -1));
        let t0 = kernel_witness(&Character::from_ints(2, 3)).unwrap();
        assert_eq!((lambda_of(&t0), rho_of(&t0)), (3, -2));
    }

    #[test]
    fn witness_lies_in_the_kernel_and_off_the_torsion() {
        for (a, b) in [(1, -1), (2, 3), (-5, 2), (7, 7)] {
            let chi = Character::from_ints(a, b);
            let t0 = kernel_witness(&chi).unwrap();
            assert_eq!(chi.eval(&t0), BigRational::zero());
            assert_ne!(lambda_of(&t0), 0);
            assert!(!in_sqrt_commutator(&t0));
        }
    }

    #[test]
    fn witness_rejects_axis_characters() {
        assert_eq!(kernel_witness(&Character::from_ints(1, 0)), Err(WitnessError::ZeroCoefficient));
        assert_eq!(kernel_witness(&Character::from_ints(0, 3)), Err(WitnessError::ZeroCoefficient));
    }
}
