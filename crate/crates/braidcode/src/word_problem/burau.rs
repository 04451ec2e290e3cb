//! Unreduced Burau representation over exact Laurent polynomials.
//!
//! σᵢ maps to the identity matrix with the 2×2 block [[1−t, t], [1, 0]] at
//! rows/columns (i, i+1), σᵢ⁻¹ to the exact inverse block
//! [[0, 1], [t⁻¹, 1−t⁻¹]], and a word to the left-to-right product of its
//! letter matrices. The representation is faithful for up to 3 strands, so a
//! non-identity matrix witnesses non-triviality for any strand count while an
//! identity matrix is conclusive only through 3 strands. This gives a second,
//! independent route to word-problem answers against which handle reduction
//! is checked.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braid::{BraidWord, Letter, Sign};

/// An integer-coefficient Laurent polynomial in one variable, stored as an
/// exponent → coefficient map with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, 1)
    }

    /// c·t^e, dropped entirely when c = 0.
    pub fn monomial(exponent: i64, coefficient: impl Into<BigInt>) -> LaurentPoly {
        let coefficient = coefficient.into();
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> LaurentPoly {
        LaurentPoly::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn insert_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.insert_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let magnitude = c.magnitude();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = magnitude.is_one();
            match (e, coeff_is_one) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{magnitude}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{magnitude}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// A square matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(dim: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        };
        for k in 0..dim {
            m.entries[k * dim + k] = LaurentPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based (row, col).
    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let dim = self.dim;
        let mut out = LaurentMatrix {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        };
        for r in 0..dim {
            for k in 0..dim {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..dim {
                    let b = rhs.entry(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.entries[r * dim + c] = &out.entries[r * dim + c] + &prod;
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        for r in 0..self.dim {
            for c in 0..self.dim {
                let e = self.entry(r, c);
                if r == c {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            write!(f, "[")?;
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The n×n matrix of a single letter.
fn letter_matrix(letter: &Letter, strands: usize) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(strands);
    let k = letter.index() - 1; // block at rows/cols (k, k+1)
    let one = LaurentPoly::one();
    let t = LaurentPoly::monomial(1, 1);
    let t_inv = LaurentPoly::monomial(-1, 1);
    match letter.sign() {
        Sign::Positive => {
            // [[1−t, t], [1, 0]]
            m.set_entry(k, k, &one - &t);
            m.set_entry(k, k + 1, t);
            m.set_entry(k + 1, k, one.clone());
            m.set_entry(k + 1, k + 1, LaurentPoly::zero());
        }
        Sign::Negative => {
            // [[0, 1], [t⁻¹, 1−t⁻¹]]
            m.set_entry(k, k, LaurentPoly::zero());
            m.set_entry(k, k + 1, one.clone());
            m.set_entry(k + 1, k, t_inv.clone());
            m.set_entry(k + 1, k + 1, &one - &t_inv);
        }
    }
    m
}

/// The unreduced Burau matrix of `word`: the product of its letter matrices,
/// leftmost letter first.
pub fn burau(word: &BraidWord) -> LaurentMatrix {
    let mut acc = LaurentMatrix::identity(word.strands());
    for letter in word.letters() {
        acc = acc.mul(&letter_matrix(letter, word.strands()));
    }
    acc
}

/// What the Burau oracle can say about a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurauVerdict {
    Trivial,
    NonTrivial,
    /// Identity matrix on 4 or more strands: faithfulness is not available,
    /// so the oracle cannot conclude.
    Inconclusive,
}

/// Classifies `word` by its Burau matrix.
///
/// A non-identity matrix proves non-triviality for every strand count. An
/// identity matrix proves triviality only for up to 3 strands; beyond that
/// the verdict is [`BurauVerdict::Inconclusive`], except that the empty word
/// short-circuits to trivial.
pub fn burau_verdict(word: &BraidWord) -> BurauVerdict {
    if word.is_empty() {
        return BurauVerdict::Trivial;
    }
    let matrix = burau(word);
    if !matrix.is_identity() {
        BurauVerdict::NonTrivial
    } else if word.strands() <= 3 {
        BurauVerdict::Trivial
    } else {
        BurauVerdict::Inconclusive
    }
}

impl fmt::Display for BurauVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BurauVerdict::Trivial => write!(f, "TRIVIAL"),
            BurauVerdict::NonTrivial => write!(f, "NONTRIVIAL"),
            BurauVerdict::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}
