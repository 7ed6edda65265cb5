//! The unique normal form
//! `x0^{i_0} y0^{e_0} x1^{i_1} y1^{e_1} ... xn^{i_n} yn^{e_n} xm^{-j_m} ... x0^{-j_0}`
//! and a deterministic rewriting procedure that reaches it.
//!
//! Beyond the spelling above, a normal word satisfies two side conditions:
//!
//! 1. if `i_k != 0 != j_k` then at least one of `i_{k+1}`, `j_{k+1}`, `e_k`,
//!    `e_{k+1}` is nonzero (out-of-range entries read as zero);
//! 2. there is no subword `x_k y_k x_{k+2} u x_{k+1}^-1 x_k^-1` whose middle
//!    `u` contains no generator indexed `k+1` or `k+2`.
//!
//! Rewriting runs in three stages: eliminate inverse `y` letters, sort to the
//! positive-ascending / negative-descending spelling with the oriented
//! relation moves, then repair condition violations by cancelling
//! `x_k ... x_k^-1` across an index shift (condition 1) or collapsing the
//! forbidden pattern (condition 2). Every move preserves the represented
//! homeomorphism; each repair strictly shortens the word, and a step limit
//! guards the sorting stage, whose termination is checked empirically rather
//! than proven.

use std::fmt;

use thiserror::Error;

use crate::words::{Family, Letter, Word};

/// Default bound on rewriting steps for [`normalize`].
pub const DEFAULT_STEP_LIMIT: u64 = 100_000;

/// Structured normal form: per-index positive data `(i_k, e_k)` and negative
/// exponents `j_k`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NormalForm {
    positive: Vec<(usize, bool)>,
    negative: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalFormError {
    #[error("letter at position {position} breaks the normal-form spelling")]
    Shape { position: usize },
    #[error("condition 1 fails at index {index}")]
    ConditionOne { index: usize },
    #[error("condition 2 fails at index {index}")]
    ConditionTwo { index: usize },
}

/// The rewriting budget ran out before a normal form was reached. `partial`
/// holds the in-progress word, which still represents the same group element.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rewriting step limit of {limit} exceeded")]
pub struct StepLimitExceeded {
    pub limit: u64,
    pub partial: Word,
}

impl NormalForm {
    /// Largest index carrying positive data, if any.
    pub fn max_positive_index(&self) -> Option<usize> {
        if self.positive.is_empty() {
            None
        } else {
            Some(self.positive.len() - 1)
        }
    }

    pub fn max_negative_index(&self) -> Option<usize> {
        if self.negative.is_empty() {
            None
        } else {
            Some(self.negative.len() - 1)
        }
    }

    /// `i_k`, reading out-of-range entries as zero.
    pub fn x_exp(&self, k: usize) -> usize {
        self.positive.get(k).map_or(0, |&(i, _)| i)
    }

    /// `e_k`.
    pub fn y_flag(&self, k: usize) -> bool {
        self.positive.get(k).is_some_and(|&(_, e)| e)
    }

    /// `j_k`.
    pub fn neg_exp(&self, k: usize) -> usize {
        self.negative.get(k).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    /// Rebuilds the word this data spells.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for (k, &(i, e)) in self.positive.iter().enumerate() {
            for _ in 0..i {
                letters.push(Letter::x(k as u32));
            }
            if e {
                letters.push(Letter::y(k as u32));
            }
        }
        for (k, &j) in self.negative.iter().enumerate().rev() {
            for _ in 0..j {
                letters.push(Letter::x(k as u32).inverted());
            }
        }
        Word::from_letters(letters)
    }

    fn trim(&mut self) {
        while self.positive.last() == Some(&(0, false)) {
            self.positive.pop();
        }
        while self.negative.last() == Some(&0) {
            self.negative.pop();
        }
    }

    fn condition1_violation(&self) -> Option<usize> {
        let top = self.positive.len().max(self.negative.len());
        (0..top).find(|&k| {
            self.x_exp(k) != 0
                && self.neg_exp(k) != 0
                && self.x_exp(k + 1) == 0
                && self.neg_exp(k + 1) == 0
                && !self.y_flag(k)
                && !self.y_flag(k + 1)
        })
    }

    fn condition2_violation(&self) -> Option<usize> {
        let top = self.positive.len().max(self.negative.len());
        (0..top).find(|&k| {
            self.x_exp(k) >= 1
                && self.y_flag(k)
                && self.x_exp(k + 1) == 0
                && !self.y_flag(k + 1)
                && self.x_exp(k + 2) == 1
                && !self.y_flag(k + 2)
                && self.neg_exp(k + 2) == 0
                && self.neg_exp(k + 1) == 1
                && self.neg_exp(k) >= 1
        })
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Splits a word into the normal-form spelling without checking the side
/// conditions. `Err` carries the first offending letter position.
fn decompose(letters: &[Letter]) -> Result<NormalForm, usize> {
    let mut nf = NormalForm::default();
    let mut pos_index: Option<u32> = None;
    let mut y_seen = false;
    let mut neg_index: Option<u32> = None;
    let ensure_pos = |nf: &mut NormalForm, k: u32| {
        let k = k as usize;
        if nf.positive.len() <= k {
            nf.positive.resize(k + 1, (0, false));
        }
    };
    for (position, &l) in letters.iter().enumerate() {
        if !l.inverse {
            if neg_index.is_some() {
                return Err(position);
            }
            let cur = pos_index.map_or(-1, |k| k as i64);
            match l.family {
                Family::X => {
                    if i64::from(l.index) == cur {
                        if y_seen {
                            return Err(position);
                        }
                        nf.positive[l.index as usize].0 += 1;
                    } else if i64::from(l.index) > cur {
                        ensure_pos(&mut nf, l.index);
                        nf.positive[l.index as usize].0 = 1;
                        pos_index = Some(l.index);
                        y_seen = false;
                    } else {
                        return Err(position);
                    }
                }
                Family::Y => {
                    if i64::from(l.index) == cur && !y_seen {
                        nf.positive[l.index as usize].1 = true;
                        y_seen = true;
                    } else if i64::from(l.index) > cur {
                        ensure_pos(&mut nf, l.index);
                        nf.positive[l.index as usize].1 = true;
                        pos_index = Some(l.index);
                        y_seen = true;
                    } else {
                        return Err(position);
                    }
                }
            }
        } else {
            if l.family == Family::Y {
                return Err(position);
            }
            match neg_index {
                None => {
                    nf.negative.resize(l.index as usize + 1, 0);
                    nf.negative[l.index as usize] = 1;
                    neg_index = Some(l.index);
                }
                Some(cur) => {
                    if l.index == cur {
                        nf.negative[l.index as usize] += 1;
                    } else if l.index < cur {
                        nf.negative[l.index as usize] = 1;
                        neg_index = Some(l.index);
                    } else {
                        return Err(position);
                    }
                }
            }
        }
    }
    nf.trim();
    Ok(nf)
}

/// Parses a word into [`NormalForm`] data, verifying the spelling and both
/// side conditions.
pub fn to_normal_form_data(w: &Word) -> Result<NormalForm, NormalFormError> {
    let nf = decompose(w.letters()).map_err(|position| NormalFormError::Shape { position })?;
    if let Some(index) = nf.condition1_violation() {
        return Err(NormalFormError::ConditionOne { index });
    }
    if let Some(index) = nf.condition2_violation() {
        return Err(NormalFormError::ConditionTwo { index });
    }
    Ok(nf)
}

/// Whether a word is literally in normal form.
pub fn is_normal_form(w: &Word) -> bool {
    to_normal_form_data(w).is_ok()
}

/// One sorting move on an adjacent pair of letters.
enum Move {
    /// Delete both letters (free cancellation).
    Cancel,
    /// Replace the pair.
    Replace(Vec<Letter>),
}

/// The oriented relation moves of the sorting stage. `None` means the pair is
/// locally in order; positive-then-negative pairs are the untouched boundary
/// of the target spelling.
fn sorting_move(u: Letter, v: Letter) -> Option<Move> {
    let up = |l: Letter| Letter { index: l.index + 1, ..l };
    if u.family == v.family && u.index == v.index && u.inverse != v.inverse {
        return Some(Move::Cancel);
    }
    match (u.inverse, v.inverse) {
        (false, false) => {
            if u.index > v.index {
                // a_j b_i -> b_i a_{j+1} for i < j.
                Some(Move::Replace(vec![v, up(u)]))
            } else if u.index == v.index && u.family == Family::Y {
                let k = u.index;
                if v.family == Family::X {
                    // y_k x_k -> x_k y_k x_{k+2} x_{k+1}^-1.
                    Some(Move::Replace(vec![
                        Letter::x(k),
                        Letter::y(k),
                        Letter::x(k + 2),
                        Letter::x(k + 1).inverted(),
                    ]))
                } else {
                    // y_k y_k -> x_k x_{k+1}.
                    Some(Move::Replace(vec![Letter::x(k), Letter::x(k + 1)]))
                }
            } else {
                None
            }
        }
        (true, true) => {
            if u.index < v.index {
                // b_i^-1 a_j^-1 -> a_{j+1}^-1 b_i^-1 for i < j.
                Some(Move::Replace(vec![up(v), u]))
            } else {
                None
            }
        }
        (true, false) => {
            // A negative letter never precedes a positive one in the target.
            if v.index > u.index {
                // b_i^-1 a_j -> a_{j+1} b_i^-1 for j > i.
                Some(Move::Replace(vec![up(v), u]))
            } else if v.index < u.index {
                // c_q^-1 d_p -> d_p c_{q+1}^-1 for p < q.
                Some(Move::Replace(vec![v, up(u)]))
            } else {
                // Same index; exact inverses were handled above, so this is
                // x_k^-1 y_k -> y_k x_{k+2} x_{k+1}^-1 x_k^-1.
                let k = u.index;
                Some(Move::Replace(vec![
                    Letter::y(k),
                    Letter::x(k + 2),
                    Letter::x(k + 1).inverted(),
                    Letter::x(k).inverted(),
                ]))
            }
        }
        (false, true) => None,
    }
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn spend(&mut self, letters: &[Letter]) -> Result<(), StepLimitExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(StepLimitExceeded { limit: self.limit, partial: Word::from_letters(letters.to_vec()) })
        } else {
            Ok(())
        }
    }
}

/// Condition-1 repair at `k`: cancel one `x_k` against one `x_k^-1`; the
/// letters in between all have index `>= k+2` and shift down by one.
fn repair_condition1(nf: &mut NormalForm, k: usize) {
    nf.positive[k].0 -= 1;
    nf.negative[k] -= 1;
    let top = nf.positive.len().max(nf.negative.len());
    for idx in k + 2..top {
        let entry = if idx < nf.positive.len() { nf.positive[idx] } else { (0, false) };
        if idx - 1 < nf.positive.len() {
            nf.positive[idx - 1] = entry;
        } else if entry != (0, false) {
            nf.positive.resize(idx, (0, false));
            nf.positive[idx - 1] = entry;
        }
        if idx < nf.positive.len() {
            nf.positive[idx] = (0, false);
        }
        let j = if idx < nf.negative.len() { nf.negative[idx] } else { 0 };
        if idx - 1 < nf.negative.len() {
            nf.negative[idx - 1] = j;
        } else if j != 0 {
            nf.negative.resize(idx, 0);
            nf.negative[idx - 1] = j;
        }
        if idx < nf.negative.len() {
            nf.negative[idx] = 0;
        }
    }
    nf.trim();
}

/// Condition-2 repair at `k`: collapse
/// `x_k y_k x_{k+2} u x_{k+1}^-1 x_k^-1` to `y_k u'` where `u'` is `u` with
/// every index lowered by two.
fn repair_condition2(nf: &mut NormalForm, k: usize) {
    nf.positive[k].0 -= 1;
    nf.positive[k + 2] = (0, false);
    nf.negative[k + 1] = 0;
    nf.negative[k] -= 1;
    let top = nf.positive.len().max(nf.negative.len());
    for idx in k + 3..top {
        let entry = if idx < nf.positive.len() { nf.positive[idx] } else { (0, false) };
        if entry != (0, false) {
            nf.positive[idx - 2] = entry;
            nf.positive[idx] = (0, false);
        }
        let j = if idx < nf.negative.len() { nf.negative[idx] } else { 0 };
        if j != 0 {
            nf.negative[idx - 2] = j;
            nf.negative[idx] = 0;
        }
    }
    nf.trim();
}

/// Rewrites `w` to its normal form, spending at most `step_limit` moves.
///
/// The result represents the same homeomorphism as the input and passes
/// [`is_normal_form`]; by uniqueness of the normal form the outcome does not
/// depend on the rewriting path. Running out of budget is an error carrying
/// the partially rewritten word, never a wrong answer.
pub fn normalize(w: &Word, step_limit: u64) -> Result<Word, StepLimitExceeded> {
    let mut letters: Vec<Letter> = w.letters().to_vec();
    let mut budget = Budget { limit: step_limit, used: 0 };

    // Stage 1: y_i^-1 -> y_i x_{i+1}^-1 x_i^-1.
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        if l.family == Family::Y && l.inverse {
            budget.spend(&letters)?;
            letters.splice(
                i..=i,
                [Letter::y(l.index), Letter::x(l.index + 1).inverted(), Letter::x(l.index).inverted()],
            );
        }
        i += 1;
    }

    // Stage 2: sort with the oriented moves, backtracking one position after
    // each local change.
    let mut j = 0usize;
    while j + 1 < letters.len() {
        match sorting_move(letters[j], letters[j + 1]) {
            None => j += 1,
            Some(mv) => {
                budget.spend(&letters)?;
                match mv {
                    Move::Cancel => {
                        letters.splice(j..j + 2, []);
                    }
                    Move::Replace(repl) => {
                        letters.splice(j..j + 2, repl);
                    }
                }
                j = j.saturating_sub(1);
            }
        }
    }

    // Stage 3: repair the side conditions; each repair shortens the word.
    let mut nf = decompose(&letters).expect("sorted words spell a normal form");
    loop {
        if let Some(k) = nf.condition1_violation() {
            budget.spend(&letters)?;
            repair_condition1(&mut nf, k);
        } else if let Some(k) = nf.condition2_violation() {
            budget.spend(&letters)?;
            repair_condition2(&mut nf, k);
        } else {
            break;
        }
        letters = nf.to_word().letters().to_vec();
    }

    let out = nf.to_word();
    debug_assert!(is_normal_form(&out));
    Ok(out)
}
