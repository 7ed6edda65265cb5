//! Exact arithmetic in the ring `Z[tau]`, where `tau = (sqrt(5) - 1) / 2` is
//! the positive root of `x^2 + x = 1`.
//!
//! Elements are stored as integer pairs `(a, b)` representing `a + b*tau` in
//! the free basis `{1, tau}`, so equality is componentwise and every operation
//! is exact. Multiplication reduces `tau^2` to `1 - tau`; sign and order are
//! decided by integer comparisons alone. No floating point anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// An element `a + b*tau` of `Z[tau]` with arbitrary-precision coordinates.
///
/// The represented real number is `a + b*(sqrt(5)-1)/2`. Values are immutable
/// and all operations are pure, so sharing across threads is unrestricted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    a: BigInt,
    b: BigInt,
}

/// Error produced when parsing the `<int>[(+|-)<int>"t"]` grammar fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid golden integer at byte {position}: {message}")]
pub struct GoldenParseError {
    pub position: usize,
    pub message: &'static str,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        GoldenInt::new(0, 0)
    }

    pub fn one() -> Self {
        GoldenInt::new(1, 0)
    }

    /// The ring generator `tau` itself, i.e. `(0, 1)`.
    pub fn tau() -> Self {
        GoldenInt::new(0, 1)
    }

    /// Coefficient of `1`.
    pub fn coeff_one(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of `tau`.
    pub fn coeff_tau(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `tau^n` in canonical coordinates, for any integer `n`.
    ///
    /// `tau` is a unit with `tau^-1 = 1 + tau`, so negative exponents stay in
    /// the ring. Stepping up uses `(a, b) -> (b, a - b)` and stepping down
    /// uses `(a, b) -> (a + b, a)`, both immediate from `tau^2 = 1 - tau`.
    ///
    /// ```
    /// use ftau::GoldenInt;
    /// assert_eq!(GoldenInt::tau_pow(0), GoldenInt::one());
    /// assert_eq!(GoldenInt::tau_pow(3), GoldenInt::new(-1, 2));
    /// assert_eq!(GoldenInt::tau_pow(-2), GoldenInt::new(2, 1));
    /// ```
    pub fn tau_pow(n: i64) -> Self {
        let mut a = BigInt::from(1);
        let mut b = BigInt::from(0);
        if n >= 0 {
            for _ in 0..n {
                let next_a = std::mem::replace(&mut b, BigInt::zero());
                b = &a - &next_a;
                a = next_a;
            }
        } else {
            for _ in 0..(-n) {
                let next_a = &a + &b;
                b = std::mem::replace(&mut a, next_a);
            }
        }
        GoldenInt { a, b }
    }

    /// Multiply by the unit `tau^n`.
    pub fn mul_tau_pow(&self, n: i64) -> Self {
        self * &GoldenInt::tau_pow(n)
    }

    /// Exact sign of the real number `a + b*tau`, in `{-1, 0, 1}`.
    ///
    /// Writes `2(a + b*tau) = u + v*sqrt(5)` with `u = 2a - b`, `v = b`. When
    /// the two summands agree in (weak) sign that sign wins; otherwise the
    /// side with the larger square `u^2` vs `5 v^2` decides. Ties are
    /// impossible for nonzero input since `sqrt(5)` is irrational.
    pub fn signum(&self) -> i32 {
        let u: BigInt = 2 * &self.a - &self.b;
        let v = &self.b;
        if v.is_zero() {
            return sign_of(&self.a);
        }
        let su = sign_of(&u);
        let sv = sign_of(v);
        if su == 0 || su == sv {
            return sv;
        }
        let u2 = &u * &u;
        let v2_5: BigInt = 5 * (v * v);
        if u2 > v2_5 {
            su
        } else {
            sv
        }
    }

    /// Decimal rendering with `places` digits after the point, rounded half
    /// up. Display-only: the string must never feed back into exact
    /// computation.
    pub fn approx(&self, places: usize) -> String {
        // value = (u + v*sqrt(5)) / 2 with u = 2a - b, v = b.
        let u: BigInt = 2 * &self.a - &self.b;
        let v = &self.b;
        let pow: BigInt = BigInt::from(10).pow(places as u32 + 1);
        let scaled_u = &u * &pow;
        let two = BigInt::from(2);
        let floor_scaled = if v.is_zero() {
            // u = 2a is even, division is exact.
            scaled_u / &two
        } else {
            // floor(v * sqrt(5) * pow): the floor of an irrational, so the
            // later halving cannot land on the excluded boundary.
            let radicand: BigInt = BigInt::from(5) * (v * v) * (&pow * &pow);
            let s = radicand.sqrt();
            let fl = if v.is_positive() { s } else { -s - 1 };
            (scaled_u + fl).div_floor(&two)
        };
        let n = (floor_scaled + BigInt::from(5)).div_floor(&BigInt::from(10));
        let denom = BigInt::from(10).pow(places as u32);
        let neg = n.is_negative();
        let m = n.abs();
        let (int_part, frac_part) = m.div_rem(&denom);
        let mut out = String::new();
        if neg && !m.is_zero() {
            out.push('-');
        }
        if places == 0 {
            out.push_str(&int_part.to_string());
        } else {
            let frac = frac_part.to_string();
            out.push_str(&int_part.to_string());
            out.push('.');
            for _ in frac.len()..places {
                out.push('0');
            }
            out.push_str(&frac);
        }
        out
    }
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for GoldenInt {
    /// Canonical form always prints both coordinates, e.g. `0+1t`, `2-3t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}t", self.a, self.b)
    }
}

impl fmt::Debug for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenInt({self})")
    }
}

impl FromStr for GoldenInt {
    type Err = GoldenParseError;

    /// Parses the grammar `<int> [ (+|-) <int> "t" ]`, e.g. `5`, `2-3t`,
    /// `0+1t`. The whole input must be consumed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let err = |position, message| Err(GoldenParseError { position, message });
        let mut pos = 0usize;

        let parse_int = |pos: &mut usize, allow_sign: bool| -> Result<BigInt, GoldenParseError> {
            let start = *pos;
            let mut negative = false;
            if allow_sign && *pos < bytes.len() && (bytes[*pos] == b'+' || bytes[*pos] == b'-') {
                negative = bytes[*pos] == b'-';
                *pos += 1;
            }
            let digits_start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if *pos == digits_start {
                return Err(GoldenParseError { position: start, message: "expected an integer" });
            }
            let mag: BigInt = s[digits_start..*pos].parse().expect("digits parse");
            Ok(if negative { -mag } else { mag })
        };

        let a = parse_int(&mut pos, true)?;
        if pos == bytes.len() {
            return Ok(GoldenInt { a, b: BigInt::zero() });
        }
        let sign = match bytes[pos] {
            b'+' => 1,
            b'-' => -1,
            _ => return err(pos, "expected '+', '-' or end of input"),
        };
        pos += 1;
        let mag = parse_int(&mut pos, false)?;
        if pos >= bytes.len() || bytes[pos] != b't' {
            return err(pos, "expected 't' after tau coefficient");
        }
        pos += 1;
        if pos != bytes.len() {
            return err(pos, "trailing input");
        }
        Ok(GoldenInt { a, b: sign * mag })
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenInt {
    /// Exact order on the represented real numbers: `cmp(x, y) = sign(x - y)`.
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self - other;
        match diff.signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -self.a, b: -self.b }
    }
}

impl Neg for &GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt { a: -&self.a, b: -&self.b }
    }
}

impl Add<&GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub<&GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul<&GoldenInt> for &GoldenInt {
    type Output = GoldenInt;
    /// `(a + b t)(c + d t) = (ac + bd) + (ad + bc - bd) t` via `t^2 = 1 - t`.
    fn mul(self, rhs: &GoldenInt) -> GoldenInt {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        GoldenInt { a: ac + &bd, b: ad + bc - bd }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GoldenInt> for GoldenInt {
            type Output = GoldenInt;
            fn $method(self, rhs: GoldenInt) -> GoldenInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GoldenInt> for GoldenInt {
            type Output = GoldenInt;
            fn $method(self, rhs: &GoldenInt) -> GoldenInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<GoldenInt> for &GoldenInt {
            type Output = GoldenInt;
            fn $method(self, rhs: GoldenInt) -> GoldenInt {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
