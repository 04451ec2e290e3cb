//! Deciding the braid word problem.
//!
//! The decision procedure is Dehornoy handle reduction. A *handle* is a
//! subword σᵢ^{e} v σᵢ^{−e} whose interior v contains no letter of index i or
//! i−1. Reducing it deletes the two σᵢ letters and conjugates each interior
//! σ_{i+1}^{±1} into σ_{i+1}^{−e} σᵢ^{±1} σ_{i+1}^{e}; letters of any other
//! index commute with σᵢ and pass through unchanged. Every reduction sequence
//! terminates, and a word with no handles left is either empty or has its
//! lowest-index generator occurring with a single sign (σ-positive or
//! σ-negative), in which case it is not the identity. Emptiness of the fully
//! reduced word therefore decides triviality.
//!
//! [`is_trivial`] runs two cheap homomorphic rejects (exponent sum, strand
//! permutation) before reducing. The independent cross-check against the
//! Burau matrix representation lives in [`burau`].

mod burau;

pub use burau::{burau, burau_verdict, BurauVerdict, LaurentMatrix, LaurentPoly};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Step ceiling for [`handle_reduce`]. Reduction terminates on its own; the
/// ceiling only guards against implementation bugs and sits far above what
/// desk-scale words need.
pub const DEFAULT_STEP_LIMIT: u64 = 1_000_000;

/// Rewrites `word` into a group-equivalent word containing no handles.
///
/// The output is empty, σ-positive, or σ-negative. Panics if the default
/// step ceiling is exceeded, which indicates a bug rather than an input
/// condition; use [`handle_reduce_with_limit`] to observe the ceiling.
pub fn handle_reduce(word: &BraidWord) -> BraidWord {
    handle_reduce_with_limit(word, DEFAULT_STEP_LIMIT)
        .expect("handle reduction exceeded the default step ceiling")
}

/// [`handle_reduce`] with an explicit step ceiling, counting one step per
/// handle reduced.
pub fn handle_reduce_with_limit(word: &BraidWord, limit: u64) -> Result<BraidWord> {
    let mut letters = free_reduce_vec(word.letters().to_vec());
    let mut steps = 0u64;
    while let Some((start, end)) = find_handle(&letters, word.strands()) {
        steps += 1;
        if steps > limit {
            return Err(Error::StepLimitExceeded { limit });
        }
        reduce_handle(&mut letters, start, end);
        letters = free_reduce_vec(letters);
    }
    BraidWord::from_letters(word.strands(), letters)
}

/// True iff `word` represents the identity of its braid group.
pub fn is_trivial(word: &BraidWord) -> bool {
    // Fast homomorphic rejects before the real work.
    if word.exponent_sum() != 0 {
        return false;
    }
    if !word.permutation().is_identity() {
        return false;
    }
    handle_reduce(word).is_empty()
}

/// True iff the two words represent the same group element.
pub fn equivalent(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(is_trivial(&a.concat(&b.invert())?))
}

/// Finds the handle with the leftmost closing letter, scanning left to right.
///
/// For each position q with index i, the only candidate opener is the most
/// recent earlier occurrence p of index i (anything earlier would have an
/// index-i letter in its interior). The pair is a handle when the signs are
/// opposite and no index i−1 letter sits strictly between, which makes the
/// returned handle innermost.
fn find_handle(letters: &[Letter], strands: usize) -> Option<(usize, usize)> {
    let mut last_seen: Vec<Option<usize>> = vec![None; strands];
    for (q, letter) in letters.iter().enumerate() {
        let i = letter.index();
        if let Some(p) = last_seen[i - 1] {
            if letters[p].sign() == letter.sign().flip() {
                let below_clear = i == 1
                    || match last_seen[i - 2] {
                        None => true,
                        Some(r) => r < p,
                    };
                if below_clear {
                    return Some((p, q));
                }
            }
        }
        last_seen[i - 1] = Some(q);
    }
    None
}

/// Replaces the handle `letters[start..=end]` by its reduct.
fn reduce_handle(letters: &mut Vec<Letter>, start: usize, end: usize) {
    let i = letters[start].index();
    let opening_sign = letters[start].sign();
    let mut replacement = Vec::with_capacity(end - start + 1);
    for &letter in &letters[start + 1..end] {
        if letter.index() == i + 1 {
            replacement.push(Letter::new(i + 1, opening_sign.flip()));
            replacement.push(Letter::new(i, letter.sign()));
            replacement.push(Letter::new(i + 1, opening_sign));
        } else {
            replacement.push(letter);
        }
    }
    letters.splice(start..=end, replacement);
}

fn free_reduce_vec(letters: Vec<Letter>) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for letter in letters {
        match stack.last() {
            Some(top) if top.is_inverse_of(&letter) => {
                stack.pop();
            }
            _ => stack.push(letter),
        }
    }
    stack
}

/// True when the lowest-index generator of `word` occurs with a single sign
/// (vacuously true for the empty word).
pub fn is_sigma_consistent(word: &BraidWord) -> bool {
    let lowest = match word.letters().iter().map(Letter::index).min() {
        None => return true,
        Some(i) => i,
    };
    let mut signs = word
        .letters()
        .iter()
        .filter(|l| l.index() == lowest)
        .map(Letter::sign);
    let first = signs.next().expect("lowest index occurs");
    signs.all(|s| s == first)
}
