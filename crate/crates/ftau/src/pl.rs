//! Piecewise-linear, orientation-preserving homeomorphisms of `[0, 1]` with
//! slopes in the cyclic group generated by `tau` and breakpoints in `Z[tau]`.
//!
//! These maps form the semantic model of group elements: words evaluate to
//! [`PlHomeo`] values, and equality of canonical forms is the ground-truth
//! equality oracle for the whole crate. Everything here is exact; there is no
//! tolerance parameter anywhere.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::golden::GoldenInt;

/// One linear piece: on `[left, next_left)` the map is
/// `x -> value_at_left + tau^slope_exp * (x - left)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece {
    left: GoldenInt,
    value: GoldenInt,
    slope_exp: i64,
}

impl Piece {
    pub fn left(&self) -> &GoldenInt {
        &self.left
    }

    pub fn value_at_left(&self) -> &GoldenInt {
        &self.value
    }

    pub fn slope_exp(&self) -> i64 {
        self.slope_exp
    }
}

/// A piecewise-linear homeomorphism of `[0, 1]`, stored in canonical form.
///
/// Invariants kept by every constructor:
/// * left endpoints strictly increase, starting at `0`; the final right
///   endpoint `1` is implicit;
/// * the first piece starts at value `0`, pieces are continuous, and the last
///   piece reaches value `1` at `1`;
/// * adjacent pieces carry distinct slope exponents.
///
/// Slopes `tau^k` are positive, so the map is strictly increasing and fixes
/// both endpoints. Equality of canonical forms decides equality of maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlHomeo {
    pieces: Vec<Piece>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("point {x} lies outside [0, 1]")]
    OutOfDomain { x: GoldenInt },
    #[error("invalid piece {index}: {reason}")]
    InvalidPieces { index: usize, reason: &'static str },
}

impl PlHomeo {
    /// The identity map.
    pub fn identity() -> Self {
        PlHomeo {
            pieces: vec![Piece { left: GoldenInt::zero(), value: GoldenInt::zero(), slope_exp: 0 }],
        }
    }

    /// Builds a map from raw `(left, value_at_left, slope_exp)` triples,
    /// validating every invariant and merging redundant breakpoints.
    pub fn from_pieces(
        raw: Vec<(GoldenInt, GoldenInt, i64)>,
    ) -> Result<Self, PlError> {
        if raw.is_empty() {
            return Err(PlError::InvalidPieces { index: 0, reason: "no pieces" });
        }
        let zero = GoldenInt::zero();
        let one = GoldenInt::one();
        if raw[0].0 != zero {
            return Err(PlError::InvalidPieces { index: 0, reason: "first piece must start at 0" });
        }
        if raw[0].1 != zero {
            return Err(PlError::InvalidPieces { index: 0, reason: "value at 0 must be 0" });
        }
        for i in 1..raw.len() {
            if raw[i].0 <= raw[i - 1].0 {
                return Err(PlError::InvalidPieces {
                    index: i,
                    reason: "left endpoints must strictly increase",
                });
            }
        }
        let last = raw.len() - 1;
        if raw[last].0 >= one {
            return Err(PlError::InvalidPieces { index: last, reason: "left endpoint must be below 1" });
        }
        // Continuity at each internal breakpoint and the right endpoint.
        for i in 0..raw.len() {
            let (ref l, ref v, k) = raw[i];
            let (right, expected) = if i + 1 < raw.len() {
                (&raw[i + 1].0, &raw[i + 1].1)
            } else {
                (&one, &one)
            };
            let reached = v + &GoldenInt::tau_pow(k) * &(right - l);
            if &reached != expected {
                return Err(PlError::InvalidPieces { index: i, reason: "discontinuity at breakpoint" });
            }
        }
        // Canonical form: drop breakpoints that do not change the slope.
        let mut pieces: Vec<Piece> = Vec::with_capacity(raw.len());
        for (left, value, slope_exp) in raw {
            match pieces.last() {
                Some(prev) if prev.slope_exp == slope_exp => {}
                _ => pieces.push(Piece { left, value, slope_exp }),
            }
        }
        Ok(PlHomeo { pieces })
    }

    /// Builds a map from breakpoints and slope exponents, deriving the values
    /// by continuity from `f(0) = 0`. Zero-length pieces are dropped, which
    /// is what collapses the degenerate first piece of the index-0
    /// generators.
    pub fn from_breaks(breaks: &[GoldenInt], exps: &[i64]) -> Result<Self, PlError> {
        assert_eq!(breaks.len(), exps.len(), "one slope exponent per piece");
        let one = GoldenInt::one();
        let mut raw = Vec::with_capacity(breaks.len());
        let mut value = GoldenInt::zero();
        for i in 0..breaks.len() {
            let right = if i + 1 < breaks.len() { &breaks[i + 1] } else { &one };
            let width = right - &breaks[i];
            if !width.is_zero() {
                raw.push((breaks[i].clone(), value.clone(), exps[i]));
            }
            value = &value + &GoldenInt::tau_pow(exps[i]) * &width;
        }
        PlHomeo::from_pieces(raw)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_identity(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].slope_exp == 0
    }

    /// Index of the piece whose half-open interval contains `x` (for `x = 1`,
    /// the last piece). Caller guarantees `0 <= x <= 1`.
    fn piece_index(&self, x: &GoldenInt) -> usize {
        self.pieces.partition_point(|p| &p.left <= x) - 1
    }

    /// Right-sided slope exponent at `x` in `[0, 1)`.
    fn right_slope_exp(&self, x: &GoldenInt) -> i64 {
        self.pieces[self.piece_index(x)].slope_exp
    }

    fn eval_unchecked(&self, x: &GoldenInt) -> GoldenInt {
        let p = &self.pieces[self.piece_index(x)];
        &p.value + &GoldenInt::tau_pow(p.slope_exp) * &(x - &p.left)
    }

    /// Exact image of a point of `[0, 1]`.
    pub fn eval(&self, x: &GoldenInt) -> Result<GoldenInt, PlError> {
        if x.signum() < 0 || x > &GoldenInt::one() {
            return Err(PlError::OutOfDomain { x: x.clone() });
        }
        Ok(self.eval_unchecked(x))
    }

    /// Composite `x -> then(self(x))`: apply `self` first. This is the
    /// orientation under which a word acts left to right.
    pub fn compose(&self, then: &PlHomeo) -> PlHomeo {
        let self_inv = self.invert();
        let mut cuts: BTreeSet<GoldenInt> = self.pieces.iter().map(|p| p.left.clone()).collect();
        for p in &then.pieces {
            cuts.insert(self_inv.eval_unchecked(&p.left));
        }
        let mut raw = Vec::with_capacity(cuts.len());
        for x in cuts {
            let mid = self.eval_unchecked(&x);
            let exp = self.right_slope_exp(&x) + then.right_slope_exp(&mid);
            let value = then.eval_unchecked(&mid);
            raw.push((x, value, exp));
        }
        PlHomeo::from_pieces(raw).expect("composite of homeomorphisms is a homeomorphism")
    }

    /// Exact inverse: breakpoints are the images of breakpoints, slope
    /// exponents negate.
    pub fn invert(&self) -> PlHomeo {
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece { left: p.value.clone(), value: p.left.clone(), slope_exp: -p.slope_exp })
            .collect();
        PlHomeo { pieces }
    }

    /// Conjugation by the reflection `t -> 1 - t`, i.e. the map
    /// `x -> 1 - self(1 - x)`. An involutive automorphism of the group that
    /// swaps boundary slope exponents.
    pub fn flip(&self) -> PlHomeo {
        let one = GoldenInt::one();
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for (i, p) in self.pieces.iter().enumerate().rev() {
            let right = if i + 1 < self.pieces.len() { &self.pieces[i + 1].left } else { &one };
            let value_at_right = &p.value + &GoldenInt::tau_pow(p.slope_exp) * &(right - &p.left);
            pieces.push(Piece {
                left: &one - right,
                value: &one - &value_at_right,
                slope_exp: p.slope_exp,
            });
        }
        PlHomeo { pieces }
    }

    /// `log_tau` of the right derivative at `0`.
    pub fn slope_exp_at_zero(&self) -> i64 {
        self.pieces[0].slope_exp
    }

    /// `log_tau` of the left derivative at `1`.
    pub fn slope_exp_at_one(&self) -> i64 {
        self.pieces[self.pieces.len() - 1].slope_exp
    }

    /// Smallest closed interval containing the non-fixed points, or `None`
    /// for the identity.
    pub fn support_bounds(&self) -> Option<(GoldenInt, GoldenInt)> {
        let one = GoldenInt::one();
        let is_fixed = |p: &Piece| p.slope_exp == 0 && p.value == p.left;
        let first = self.pieces.iter().position(|p| !is_fixed(p))?;
        let last = self.pieces.iter().rposition(|p| !is_fixed(p)).expect("nonempty");
        let upper = if last + 1 < self.pieces.len() { self.pieces[last + 1].left.clone() } else { one };
        Some((self.pieces[first].left.clone(), upper))
    }

    /// The generator `x_i`: four pieces (three for `i = 0`, where the leading
    /// identity piece is empty), with slope exponents `0, -2, 0, 1`.
    pub fn generator_x(i: u32) -> PlHomeo {
        let i = i64::from(i);
        let one = GoldenInt::one();
        let p0 = &one - &GoldenInt::tau_pow(i);
        let p1 = &p0 + &GoldenInt::tau_pow(i + 4);
        let p2 = &one - &GoldenInt::tau_pow(i + 1);
        PlHomeo::from_breaks(&[GoldenInt::zero(), p0, p1, p2], &[0, -2, 0, 1])
            .expect("generator pieces are consistent")
    }

    /// The generator `y_i`: three pieces (two for `i = 0`), with slope
    /// exponents `0, -1, 1`.
    pub fn generator_y(i: u32) -> PlHomeo {
        let i = i64::from(i);
        let one = GoldenInt::one();
        let p0 = &one - &GoldenInt::tau_pow(i);
        let p1 = &one - &GoldenInt::tau_pow(i + 1);
        PlHomeo::from_breaks(&[GoldenInt::zero(), p0, p1], &[0, -1, 1])
            .expect("generator pieces are consistent")
    }
}

impl fmt::Display for PlHomeo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            let right = if i + 1 < self.pieces.len() {
                self.pieces[i + 1].left.to_string()
            } else {
                "1+0t".to_string()
            };
            writeln!(
                f,
                "[{}, {}]  slope tau^{}  value {}",
                p.left, right, p.slope_exp, p.value
            )?;
        }
        Ok(())
    }
}
