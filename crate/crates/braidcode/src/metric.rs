//! The decoding-aligned information distance on symbol strings.
//!
//! Two strings are close when they share a long common tail: the distance is
//! (f + d + |f − d| − 2x)/2 where d, f are the lengths and x is the longest
//! common suffix, which works out to max(d, f) − x. Everything here is exact
//! integer arithmetic; axiom checks and distributions are brute-force
//! enumerations.

use std::collections::BTreeMap;
use std::fmt;

use crate::codec::SymbolString;
use crate::error::{Error, Result};

fn check_alphabets(a: &SymbolString, b: &SymbolString) -> Result<()> {
    if a.alphabet_size() != b.alphabet_size() {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet_size(),
            right: b.alphabet_size(),
        });
    }
    Ok(())
}

/// The largest x such that the last x symbols of both strings agree.
pub fn common_suffix_len(a: &SymbolString, b: &SymbolString) -> Result<usize> {
    check_alphabets(a, b)?;
    Ok(a.symbols()
        .iter()
        .rev()
        .zip(b.symbols().iter().rev())
        .take_while(|(x, y)| x == y)
        .count())
}

/// The suffix distance (f + d + |f − d| − 2x) / 2.
pub fn distance(a: &SymbolString, b: &SymbolString) -> Result<usize> {
    let value = distance_signed(a, b)?;
    debug_assert!(value >= 0);
    Ok(value as usize)
}

/// The defining formula evaluated in signed arithmetic, so the axiom checker
/// can observe non-negativity rather than assume it.
fn distance_signed(a: &SymbolString, b: &SymbolString) -> Result<i64> {
    let x = common_suffix_len(a, b)? as i64;
    let d = a.len() as i64;
    let f = b.len() as i64;
    Ok((f + d + (f - d).abs() - 2 * x) / 2)
}

/// Positions at which two equal-length strings differ.
pub fn hamming_distance(a: &SymbolString, b: &SymbolString) -> Result<usize> {
    check_alphabets(a, b)?;
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.symbols()
        .iter()
        .zip(b.symbols())
        .filter(|(x, y)| x != y)
        .count())
}

/// Brute-force verification of the four metric axioms over every string of
/// length at most `max_len`.
pub fn verify_axioms(alphabet_size: usize, max_len: usize) -> Result<AxiomReport> {
    let strings = SymbolString::enumerate_up_to(alphabet_size, max_len)?;
    let n = strings.len() as u128;
    // triples dominate; keep the whole run at desk scale
    if n * n * n > 200_000_000 {
        return Err(Error::BudgetExceeded {
            required: n * n * n,
            budget: 200_000_000,
        });
    }

    let mut violations = Vec::new();
    let mut d = vec![vec![0i64; strings.len()]; strings.len()];
    for (i, a) in strings.iter().enumerate() {
        for (j, b) in strings.iter().enumerate() {
            d[i][j] = distance_signed(a, b)?;
        }
    }

    for i in 0..strings.len() {
        for j in 0..strings.len() {
            if d[i][j] < 0 {
                violations.push(format!(
                    "negative distance d({}, {}) = {}",
                    strings[i], strings[j], d[i][j]
                ));
            }
            if (d[i][j] == 0) != (strings[i] == strings[j]) {
                violations.push(format!(
                    "identity of indiscernibles fails for ({}, {})",
                    strings[i], strings[j]
                ));
            }
            if d[i][j] != d[j][i] {
                violations.push(format!(
                    "asymmetry: d({}, {}) = {} but d({}, {}) = {}",
                    strings[i], strings[j], d[i][j], strings[j], strings[i], d[j][i]
                ));
            }
        }
    }

    let mut triples_checked: u64 = 0;
    for i in 0..strings.len() {
        for j in 0..strings.len() {
            for k in 0..strings.len() {
                triples_checked += 1;
                if d[i][k] > d[i][j] + d[j][k] {
                    violations.push(format!(
                        "triangle inequality fails: d({}, {}) = {} > {} + {}",
                        strings[i], strings[k], d[i][k], d[i][j], d[j][k]
                    ));
                }
            }
        }
    }

    Ok(AxiomReport {
        alphabet_size,
        max_len,
        strings_checked: strings.len(),
        triples_checked,
        violations,
    })
}

/// Histogram of distances from `reference` to every other string of the same
/// length.
pub fn distance_distribution(
    alphabet_size: usize,
    length: usize,
    reference: &SymbolString,
) -> Result<DistanceReport> {
    if reference.alphabet_size() != alphabet_size {
        return Err(Error::AlphabetMismatch {
            left: alphabet_size,
            right: reference.alphabet_size(),
        });
    }
    if reference.len() != length {
        return Err(Error::ReferenceLengthMismatch {
            expected: length,
            got: reference.len(),
        });
    }
    let universe = SymbolString::enumerate_exact(alphabet_size, length)?;
    let universe_size = universe.len();
    let mut histogram = BTreeMap::new();
    for other in &universe {
        if other == reference {
            continue;
        }
        *histogram.entry(distance(reference, other)?).or_insert(0) += 1;
    }
    Ok(DistanceReport {
        histogram,
        universe_size,
        reference: reference.clone(),
    })
}

/// Result of a brute-force axiom verification.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub alphabet_size: usize,
    pub max_len: usize,
    pub strings_checked: usize,
    pub triples_checked: u64,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Distance histogram around a reference string.
#[derive(Clone, Debug)]
pub struct DistanceReport {
    pub histogram: BTreeMap<usize, usize>,
    pub universe_size: usize,
    pub reference: SymbolString,
}

impl DistanceReport {
    /// Counts sum to the universe size minus the excluded reference itself.
    pub fn total_count(&self) -> usize {
        self.histogram.values().sum()
    }
}

/// Two-column text: one `distance count` line per histogram entry.
impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (distance, count) in &self.histogram {
            writeln!(f, "{distance} {count}")?;
        }
        Ok(())
    }
}
