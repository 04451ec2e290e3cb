//! Braid words and their purely syntactic algebra.
//!
//! A word in the Artin generators σ₁…σ₍ₙ₋₁₎ of the n-strand braid group is
//! stored as a flat letter sequence. Everything here is syntax: concatenation,
//! inversion, free reduction (cancelling adjacent σᵢσᵢ⁻¹ pairs), the pure
//! generator expansion l_{ij} = σ_{j-1}…σ_{i+1}·σᵢ²·σ_{i+1}⁻¹…σ_{j-1}⁻¹, and
//! two cheap homomorphic invariants (exponent sum and the induced strand
//! permutation). Deciding group equivalence lives in [`crate::word_problem`].
//!
//! Words are immutable values; every operation returns a fresh word. The
//! leftmost letter of a word is applied first.

use std::fmt;

use crate::error::{Error, Result};

/// Crossing direction of a single letter: σᵢ or σᵢ⁻¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// One signed generator occurrence σᵢ^{±1}.
///
/// `index` is always ≥ 1; the upper bound is validated against the strand
/// count of the word that owns the letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    index: usize,
    sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Letter {
        assert!(index >= 1, "generator index must be >= 1");
        Letter { index, sign }
    }

    /// Builds a letter from a nonzero signed index: `k > 0` is σ_k, `k < 0` is σ_{|k|}⁻¹.
    pub fn from_signed(k: i64) -> Option<Letter> {
        if k == 0 {
            return None;
        }
        Some(Letter {
            index: k.unsigned_abs() as usize,
            sign: if k > 0 {
                Sign::Positive
            } else {
                Sign::Negative
            },
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    pub fn as_signed(&self) -> i64 {
        self.sign.as_i64() * self.index as i64
    }

    pub fn is_inverse_of(&self, other: &Letter) -> bool {
        self.index == other.index && self.sign == other.sign.flip()
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// The empty letter sequence is the group identity e. Equality is syntactic:
/// two words are `==` iff they have the same strand count and letter sequence,
/// which is strictly finer than group equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The identity word e on `strands` strands.
    pub fn identity(strands: usize) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::InvalidStrandCount(strands));
        }
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    /// Builds a word from signed generator indices, validating every letter.
    ///
    /// `k > 0` stands for σ_k and `k < 0` for σ_{|k|}⁻¹; each |k| must be at
    /// most `strands - 1`. Positions in errors are 1-based.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::InvalidStrandCount(strands));
        }
        let mut parsed = Vec::with_capacity(letters.len());
        for (pos, &k) in letters.iter().enumerate() {
            let letter = Letter::from_signed(k).ok_or(Error::ZeroLetter { position: pos + 1 })?;
            if letter.index() > strands - 1 {
                return Err(Error::LetterOutOfRange {
                    position: pos + 1,
                    index: k,
                    strands,
                });
            }
            parsed.push(letter);
        }
        Ok(BraidWord {
            strands,
            letters: parsed,
        })
    }

    pub fn from_letters(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::InvalidStrandCount(strands));
        }
        for (pos, letter) in letters.iter().enumerate() {
            if letter.index() > strands - 1 {
                return Err(Error::LetterOutOfRange {
                    position: pos + 1,
                    index: letter.as_signed(),
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn signed_letters(&self) -> Vec<i64> {
        self.letters.iter().map(Letter::as_signed).collect()
    }

    /// Group product: the letters of `self` followed by the letters of `other`.
    /// No reduction of any kind is performed.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The group inverse: letters reversed with all signs flipped.
    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// Cancels adjacent σᵢ^{e}σᵢ^{−e} pairs until none remain.
    ///
    /// Uses no braid relations, so equal-sign squares like σᵢσᵢ survive.
    /// Idempotent, and the result represents the same group element.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            match stack.last() {
                Some(top) if top.is_inverse_of(&letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Sum of letter signs: the image of the word under abelianization.
    /// Invariant under both braid relations and free reduction.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.as_i64()).sum()
    }

    /// The induced permutation of strand endpoints, mapping each strand's
    /// starting position to its ending position. σᵢ acts as the transposition
    /// of positions (i, i+1); the leftmost letter acts first.
    pub fn permutation(&self) -> Permutation {
        // occupant[p] = strand currently at position p (0-based).
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for letter in &self.letters {
            occupant.swap(letter.index() - 1, letter.index());
        }
        let mut images = vec![0usize; self.strands];
        for (position, &strand) in occupant.iter().enumerate() {
            images[strand] = position;
        }
        Permutation { images }
    }
}

/// Canonical text form, e.g. `B3: 2 2 1 -2`; the identity is `B3:`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for letter in &self.letters {
            write!(f, " {}", letter.as_signed())?;
        }
        Ok(())
    }
}

/// A pure braid generator label l_{ij} with 1 ≤ i < j.
///
/// The strand-count upper bound on `j` is checked when the generator is
/// expanded into a word on a concrete number of strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PureGeneratorId {
    i: usize,
    j: usize,
}

impl PureGeneratorId {
    pub fn new(i: usize, j: usize) -> Result<PureGeneratorId> {
        if i < 1 || i >= j {
            return Err(Error::InvalidPureGenerator { i, j });
        }
        Ok(PureGeneratorId { i, j })
    }

    pub fn lower(&self) -> usize {
        self.i
    }

    pub fn upper(&self) -> usize {
        self.j
    }

    /// Expands l_{ij} = σ_{j−1}σ_{j−2}…σ_{i+1} · σᵢ² · σ_{i+1}⁻¹…σ_{j−1}⁻¹
    /// as a word on `strands` strands. The result has exactly 2(j−i) letters,
    /// links strands i and j, and induces the identity permutation.
    pub fn expand(&self, strands: usize) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::InvalidStrandCount(strands));
        }
        if self.j > strands {
            return Err(Error::PureGeneratorOutOfRange {
                i: self.i,
                j: self.j,
                strands,
            });
        }
        let mut letters = Vec::with_capacity(2 * (self.j - self.i));
        for k in (self.i + 1..self.j).rev() {
            letters.push(Letter::new(k, Sign::Positive));
        }
        letters.push(Letter::new(self.i, Sign::Positive));
        letters.push(Letter::new(self.i, Sign::Positive));
        for k in self.i + 1..self.j {
            letters.push(Letter::new(k, Sign::Negative));
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for PureGeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l_{{{},{}}}", self.i, self.j)
    }
}

/// A permutation of strand positions 1..=n, stored as 0-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition swapping positions a and a+1 (1-based) in degree n.
    pub fn transposition(n: usize, a: usize) -> Permutation {
        assert!(a >= 1 && a < n, "transposition out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, a);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Image of a 1-based position.
    pub fn image_of(&self, position: usize) -> usize {
        self.images[position - 1] + 1
    }

    /// One-line notation with 1-based entries: element k is the image of position k.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&q| q + 1).collect()
    }

    /// Composition that applies `self` first and `other` second, matching
    /// word concatenation order.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&q| other.images[q]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: usize, letters: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, letters).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        let w = word(3, &[]);
        assert!(w.is_empty());
        assert_eq!(w, BraidWord::identity(3).unwrap());
    }

    #[test]
    fn sigma2_squared_is_l23() {
        let w = word(3, &[2, 2]);
        let l23 = PureGeneratorId::new(2, 3).unwrap().expand(3).unwrap();
        assert_eq!(w, l23);
    }

    #[test]
    fn out_of_range_index_rejected() {
        let err = BraidWord::from_signed(3, &[3]).unwrap_err();
        assert_eq!(
            err,
            Error::LetterOutOfRange {
                position: 1,
                index: 3,
                strands: 3
            }
        );
        let err = BraidWord::from_signed(3, &[2, 0]).unwrap_err();
        assert_eq!(err, Error::ZeroLetter { position: 2 });
        assert!(BraidWord::from_signed(1, &[]).is_err());
    }

    #[test]
    fn concat_keeps_letter_order() {
        let e = BraidWord::identity(3).unwrap();
        let w = word(3, &[2, 1, -2]);
        assert_eq!(e.concat(&w).unwrap(), w);
        assert_eq!(w.concat(&e).unwrap(), w);

        let l23 = word(3, &[2, 2]);
        let l13 = word(3, &[2, 1, 1, -2]);
        assert_eq!(
            l23.concat(&l13).unwrap().signed_letters(),
            vec![2, 2, 2, 1, 1, -2]
        );
    }

    #[test]
    fn concat_strand_mismatch() {
        let a = word(3, &[1]);
        let b = word(4, &[1]);
        assert_eq!(
            a.concat(&b).unwrap_err(),
            Error::StrandMismatch { left: 3, right: 4 }
        );
    }

    #[test]
    fn invert_reverses_and_flips() {
        let w = word(3, &[1, 2]);
        assert_eq!(w.invert().signed_letters(), vec![-2, -1]);
        assert_eq!(BraidWord::identity(3).unwrap().invert().len(), 0);
        let v = word(4, &[1, -3, 2, 2, -1]);
        assert_eq!(v.invert().invert(), v);
    }

    #[test]
    fn free_reduce_cancels_inverse_pairs_only() {
        assert!(word(3, &[1, -1]).free_reduce().is_empty());
        assert_eq!(
            word(3, &[1, 2, -2, 1]).free_reduce().signed_letters(),
            vec![1, 1]
        );
        // equal signs never cancel
        assert_eq!(word(3, &[1, 1]).free_reduce().signed_letters(), vec![1, 1]);
    }

    #[test]
    fn free_reduce_handles_nested_cancellation() {
        let w = word(4, &[1, 2, 3, -3, -2, -1]);
        assert!(w.free_reduce().is_empty());
    }

    #[test]
    fn word_cancels_with_its_inverse_syntactically() {
        let w = word(5, &[1, -4, 2, 2, 3, -1]);
        let prod = w.concat(&w.invert()).unwrap();
        assert!(prod.free_reduce().is_empty());
    }

    #[test]
    fn pure_generator_expansions() {
        let l12 = PureGeneratorId::new(1, 2).unwrap().expand(3).unwrap();
        assert_eq!(l12.signed_letters(), vec![1, 1]);

        let l13 = PureGeneratorId::new(1, 3).unwrap().expand(3).unwrap();
        assert_eq!(l13.signed_letters(), vec![2, 1, 1, -2]);

        let l24 = PureGeneratorId::new(2, 4).unwrap().expand(4).unwrap();
        assert_eq!(l24.signed_letters(), vec![3, 2, 2, -3]);

        let l14 = PureGeneratorId::new(1, 4).unwrap().expand(4).unwrap();
        assert_eq!(l14.signed_letters(), vec![3, 2, 1, 1, -2, -3]);
    }

    #[test]
    fn pure_generator_length_is_twice_span() {
        for strands in 2..=7 {
            for i in 1..strands {
                for j in i + 1..=strands {
                    let w = PureGeneratorId::new(i, j).unwrap().expand(strands).unwrap();
                    assert_eq!(w.len(), 2 * (j - i));
                    assert_eq!(w.exponent_sum(), 2);
                    assert!(w.permutation().is_identity());
                }
            }
        }
    }

    #[test]
    fn pure_generator_bounds_checked() {
        assert!(PureGeneratorId::new(2, 2).is_err());
        assert!(PureGeneratorId::new(0, 1).is_err());
        assert!(PureGeneratorId::new(3, 2).is_err());
        let l25 = PureGeneratorId::new(2, 5).unwrap();
        assert_eq!(
            l25.expand(4).unwrap_err(),
            Error::PureGeneratorOutOfRange {
                i: 2,
                j: 5,
                strands: 4
            }
        );
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(BraidWord::identity(3).unwrap().exponent_sum(), 0);
        assert_eq!(word(3, &[1, 2, 1]).exponent_sum(), 3);
        assert_eq!(word(3, &[2, 1, 2]).exponent_sum(), 3);
        assert_eq!(word(3, &[2, -1]).exponent_sum(), 0);
    }

    #[test]
    fn permutation_of_single_generator_is_transposition() {
        let p = word(3, &[1]).permutation();
        assert_eq!(p, Permutation::transposition(3, 1));
        assert_eq!(p.one_line(), vec![2, 1, 3]);
    }

    #[test]
    fn permutation_composes_in_letter_order() {
        // σ₁ then σ₂: strand 1 ends at position 3.
        let p = word(3, &[1, 2]).permutation();
        let expected = Permutation::transposition(3, 1).then(&Permutation::transposition(3, 2));
        assert_eq!(p, expected);
        assert_eq!(p.one_line(), vec![3, 1, 2]);
        assert_eq!(p.image_of(1), 3);
    }

    #[test]
    fn permutation_of_pure_generator_is_identity() {
        let l13 = PureGeneratorId::new(1, 3).unwrap().expand(3).unwrap();
        assert!(l13.permutation().is_identity());
    }

    #[test]
    fn display_round_trips_shape() {
        assert_eq!(word(3, &[2, 2, 1, -2]).to_string(), "B3: 2 2 1 -2");
        assert_eq!(BraidWord::identity(3).unwrap().to_string(), "B3:");
    }
}
