//! Alphabet schemes over pure braid generators, encoding and decoding.
//!
//! An N-symbol alphabet lives on N+1 strands with the last strand
//! distinguished: symbol k maps to the pure generator l_{N−k, N+1}, so every
//! code generator links its own lower strand to the shared distinguished one.
//! Encoding a symbol string concatenates the generator expansions in symbol
//! order; decoding is verified by annihilation against the inverse string,
//! and a brute-force decoder searches symbol strings by exhaustive
//! equivalence tests.

use std::fmt;

use crate::braid::{BraidWord, PureGeneratorId};
use crate::error::{Error, Result};
use crate::word_problem;

/// Upper bound on strings visited by the exhaustive enumerations.
pub const ENUMERATION_BUDGET: u128 = 2_000_000;

/// A finite sequence of symbols over the alphabet {0, …, N−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolString {
    alphabet_size: usize,
    symbols: Vec<usize>,
}

impl SymbolString {
    pub fn new(alphabet_size: usize, symbols: Vec<usize>) -> Result<SymbolString> {
        if alphabet_size < 2 {
            return Err(Error::AlphabetTooSmall(alphabet_size));
        }
        for (pos, &s) in symbols.iter().enumerate() {
            if s >= alphabet_size {
                return Err(Error::SymbolOutOfRange {
                    position: pos + 1,
                    symbol: s,
                    alphabet_size,
                });
            }
        }
        Ok(SymbolString {
            alphabet_size,
            symbols,
        })
    }

    pub fn empty(alphabet_size: usize) -> Result<SymbolString> {
        SymbolString::new(alphabet_size, Vec::new())
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Appends one symbol, returning a fresh string.
    pub fn push(&self, symbol: usize) -> Result<SymbolString> {
        let mut symbols = self.symbols.clone();
        symbols.push(symbol);
        SymbolString::new(self.alphabet_size, symbols)
    }

    /// All strings of length exactly `len`, in lexicographic order.
    pub fn enumerate_exact(alphabet_size: usize, len: usize) -> Result<Vec<SymbolString>> {
        if alphabet_size < 2 {
            return Err(Error::AlphabetTooSmall(alphabet_size));
        }
        let count = (alphabet_size as u128)
            .checked_pow(len as u32)
            .unwrap_or(u128::MAX);
        if count > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded {
                required: count,
                budget: ENUMERATION_BUDGET,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0usize; len];
        loop {
            out.push(SymbolString {
                alphabet_size,
                symbols: digits.clone(),
            });
            // odometer increment, most significant digit first
            let mut k = len;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < alphabet_size {
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    /// All strings of length 0 through `max_len`, shortest first, each length
    /// block in lexicographic order.
    pub fn enumerate_up_to(alphabet_size: usize, max_len: usize) -> Result<Vec<SymbolString>> {
        let mut total: u128 = 0;
        for len in 0..=max_len {
            total += (alphabet_size as u128)
                .checked_pow(len as u32)
                .unwrap_or(u128::MAX);
            if total > ENUMERATION_BUDGET {
                return Err(Error::BudgetExceeded {
                    required: total,
                    budget: ENUMERATION_BUDGET,
                });
            }
        }
        let mut out = Vec::with_capacity(total as usize);
        for len in 0..=max_len {
            out.extend(SymbolString::enumerate_exact(alphabet_size, len)?);
        }
        Ok(out)
    }
}

/// Digit string for alphabets up to 10 symbols, comma-separated decimal
/// symbols beyond that. The empty string prints as nothing.
impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet_size <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (k, s) in self.symbols.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// An N-symbol alphabet scheme on N+1 strands with strand N+1 distinguished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeScheme {
    alphabet_size: usize,
}

impl CodeScheme {
    pub fn new(alphabet_size: usize) -> Result<CodeScheme> {
        if alphabet_size < 2 {
            return Err(Error::AlphabetTooSmall(alphabet_size));
        }
        Ok(CodeScheme { alphabet_size })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn strands(&self) -> usize {
        self.alphabet_size + 1
    }

    pub fn distinguished_strand(&self) -> usize {
        self.strands()
    }

    /// The pure generator assigned to `symbol`: l_{N−symbol, N+1}.
    pub fn generator_for(&self, symbol: usize) -> Result<PureGeneratorId> {
        if symbol >= self.alphabet_size {
            return Err(Error::SymbolOutOfRange {
                position: 1,
                symbol,
                alphabet_size: self.alphabet_size,
            });
        }
        PureGeneratorId::new(self.alphabet_size - symbol, self.strands())
    }

    /// The full symbol → generator table.
    pub fn symbol_map(&self) -> Vec<(usize, PureGeneratorId)> {
        (0..self.alphabet_size)
            .map(|s| (s, self.generator_for(s).expect("symbol in range")))
            .collect()
    }

    fn check_alphabet(&self, s: &SymbolString) -> Result<()> {
        if s.alphabet_size() != self.alphabet_size {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet_size,
                right: s.alphabet_size(),
            });
        }
        Ok(())
    }

    /// Encodes a symbol string as the concatenation of its generators'
    /// expansions, first symbol leftmost. The empty string encodes to the
    /// identity word.
    pub fn encode(&self, s: &SymbolString) -> Result<BraidWord> {
        self.check_alphabet(s)?;
        let mut word = BraidWord::identity(self.strands())?;
        for &symbol in s.symbols() {
            let generator = self.generator_for(symbol)?.expand(self.strands())?;
            word = word.concat(&generator)?;
        }
        Ok(word)
    }

    /// The inverse string S⁻¹: the reversed symbol sequence with every
    /// generator inverted, i.e. exactly `encode(s).invert()`.
    pub fn inverse_string(&self, s: &SymbolString) -> Result<BraidWord> {
        Ok(self.encode(s)?.invert())
    }

    /// Decoding-by-annihilation check: S·S⁻¹ must represent the identity.
    pub fn verify_roundtrip(&self, s: &SymbolString) -> Result<bool> {
        let encoded = self.encode(s)?;
        let product = encoded.concat(&self.inverse_string(s)?)?;
        Ok(word_problem::is_trivial(&product))
    }

    /// Brute-force decoder: the unique symbol string of length at most
    /// `max_len` whose encoding is equivalent to `word`, or `None`.
    ///
    /// Candidates of length L all have exponent sum 2L, so only the one
    /// length compatible with `word` is actually tested.
    pub fn decode_exhaustive(
        &self,
        word: &BraidWord,
        max_len: usize,
    ) -> Result<Option<SymbolString>> {
        if word.strands() != self.strands() {
            return Err(Error::StrandMismatch {
                left: self.strands(),
                right: word.strands(),
            });
        }
        // the whole search is charged against the budget up front
        let _ = SymbolString::enumerate_up_to(self.alphabet_size, max_len)?;
        let target_sum = word.exponent_sum();
        for len in 0..=max_len {
            if 2 * (len as i64) != target_sum {
                continue;
            }
            for candidate in SymbolString::enumerate_exact(self.alphabet_size, len)? {
                if word_problem::equivalent(&self.encode(&candidate)?, word)? {
                    return Ok(Some(candidate));
                }
            }
        }
        Ok(None)
    }

    /// Checks that all distinct nonempty strings of length at most `max_len`
    /// encode to pairwise non-equivalent braid words. The empty string is
    /// excluded (it cannot collide: every code word has positive exponent sum).
    pub fn injectivity_check(&self, max_len: usize) -> Result<InjectivityReport> {
        let mut strings = SymbolString::enumerate_up_to(self.alphabet_size, max_len)?;
        strings.retain(|s| !s.is_empty());
        let pair_count = (strings.len() as u128) * (strings.len() as u128 - 1) / 2;
        if pair_count > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded {
                required: pair_count,
                budget: ENUMERATION_BUDGET,
            });
        }
        let encoded: Vec<BraidWord> = strings
            .iter()
            .map(|s| self.encode(s))
            .collect::<Result<_>>()?;
        let mut collisions = Vec::new();
        for a in 0..strings.len() {
            for b in a + 1..strings.len() {
                if word_problem::equivalent(&encoded[a], &encoded[b])? {
                    collisions.push((strings[a].clone(), strings[b].clone()));
                }
            }
        }
        Ok(InjectivityReport {
            alphabet_size: self.alphabet_size,
            max_len,
            strings_checked: strings.len(),
            pairs_checked: pair_count as u64,
            collisions,
        })
    }
}

impl fmt::Display for CodeScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "alphabet of {} symbols on {} strands, strand {} distinguished",
            self.alphabet_size,
            self.strands(),
            self.distinguished_strand()
        )?;
        for (symbol, generator) in self.symbol_map() {
            writeln!(f, "  {symbol} -> {generator}")?;
        }
        Ok(())
    }
}

/// Outcome of an exhaustive pairwise injectivity check.
#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub alphabet_size: usize,
    pub max_len: usize,
    pub strings_checked: usize,
    pub pairs_checked: u64,
    pub collisions: Vec<(SymbolString, SymbolString)>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.collisions.is_empty()
    }
}
