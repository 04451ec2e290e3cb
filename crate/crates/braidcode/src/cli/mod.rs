//! Command-line front end.
//!
//! Boolean subcommands print YES/NO and exit 0/1; report subcommands print
//! PASS/FAIL and exit 0/1; usage and parse errors exit 2; enumeration-budget
//! and step-ceiling errors exit 3.

pub mod text;

pub use text::{parse_symbols, parse_word, sniff_alphabet};

use clap::{Parser, Subcommand};

use crate::braid::BraidWord;
use crate::codec::{CodeScheme, SymbolString, ENUMERATION_BUDGET};
use crate::efficiency::{curve, CostModel};
use crate::error::{Error, Result};
use crate::metric;
use crate::word_problem::{burau_verdict, equivalent, is_trivial, BurauVerdict};

#[derive(Parser)]
#[command(
    name = "braidcode",
    version,
    about = "Braid-word coding: encode, decode, and check symbol strings carried by pure braids"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a symbol string as a braid word
    Encode {
        /// Alphabet size N; symbols are 0..N-1
        #[arg(long)]
        alphabet: usize,
        /// Symbol string (digits for N <= 10, comma-separated otherwise)
        symbols: String,
    },
    /// Search for the symbol string a braid word encodes
    Decode {
        #[arg(long)]
        alphabet: usize,
        /// Longest candidate string to try
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Word text, e.g. "B3: 2 2 1 -2"
        word: String,
    },
    /// Check that a string's encoding annihilates with its inverse string
    Verify {
        #[arg(long)]
        alphabet: usize,
        symbols: String,
    },
    /// Decide whether two braid words represent the same element
    Equiv { word1: String, word2: String },
    /// Decide whether a braid word represents the identity
    Trivial { word: String },
    /// Suffix distance between two symbol strings
    Distance {
        /// Alphabet size; may be omitted when either string has an A<N>: prefix
        #[arg(long)]
        alphabet: Option<usize>,
        s1: String,
        s2: String,
    },
    /// Brute-force the four metric axioms over all strings up to a length
    Axioms {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        max_len: usize,
    },
    /// Distance histogram from a reference string to all strings of its length
    Distribution {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        length: usize,
        /// Defaults to the all-zeros string (the histogram does not depend on it)
        #[arg(long)]
        reference: Option<String>,
    },
    /// Tabulate cost, gain, and their ratio over alphabet sizes (CSV)
    Efficiency {
        /// Cost-model exponent i in f1(N) = N^i
        #[arg(long)]
        exponent: f64,
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long)]
        max: usize,
    },
    /// Cross-check the word-problem decider against the Burau matrix oracle
    #[command(name = "burau-check")]
    BurauCheck {
        /// Single word to check; omit to sweep all short words
        word: Option<String>,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Check that distinct symbol strings encode to non-equivalent words
    Injectivity {
        #[arg(long)]
        alphabet: usize,
        #[arg(long)]
        max_len: usize,
    },
}

/// Parses std::env::args and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } | Error::StepLimitExceeded { .. } => 3,
        _ => 2,
    }
}

fn yes_no(value: bool) -> i32 {
    println!("{}", if value { "YES" } else { "NO" });
    if value {
        0
    } else {
        1
    }
}

fn pass_fail(passed: bool) -> i32 {
    println!("{}", if passed { "PASS" } else { "FAIL" });
    if passed {
        0
    } else {
        1
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Encode { alphabet, symbols } => {
            let scheme = CodeScheme::new(alphabet)?;
            let s = parse_symbols(&symbols, Some(alphabet))?;
            println!("{}", scheme.encode(&s)?);
            Ok(0)
        }
        Command::Decode {
            alphabet,
            max_len,
            word,
        } => {
            let scheme = CodeScheme::new(alphabet)?;
            let w = parse_word(&word)?;
            match scheme.decode_exhaustive(&w, max_len)? {
                Some(s) => {
                    println!("{s}");
                    Ok(0)
                }
                None => {
                    println!("NONE");
                    Ok(1)
                }
            }
        }
        Command::Verify { alphabet, symbols } => {
            let scheme = CodeScheme::new(alphabet)?;
            let s = parse_symbols(&symbols, Some(alphabet))?;
            Ok(yes_no(scheme.verify_roundtrip(&s)?))
        }
        Command::Equiv { word1, word2 } => {
            let a = parse_word(&word1)?;
            let b = parse_word(&word2)?;
            Ok(yes_no(equivalent(&a, &b)?))
        }
        Command::Trivial { word } => Ok(yes_no(is_trivial(&parse_word(&word)?))),
        Command::Distance { alphabet, s1, s2 } => {
            let n = alphabet
                .or_else(|| sniff_alphabet(&s1))
                .or_else(|| sniff_alphabet(&s2));
            let a = parse_symbols(&s1, n)?;
            let b = parse_symbols(&s2, Some(a.alphabet_size()))?;
            println!("{}", metric::distance(&a, &b)?);
            Ok(0)
        }
        Command::Axioms { alphabet, max_len } => {
            let report = metric::verify_axioms(alphabet, max_len)?;
            println!("strings checked: {}", report.strings_checked);
            println!("triples checked: {}", report.triples_checked);
            for violation in &report.violations {
                println!("violation: {violation}");
            }
            println!("violations: {}", report.violations.len());
            Ok(pass_fail(report.passed()))
        }
        Command::Distribution {
            alphabet,
            length,
            reference,
        } => {
            let reference = match reference {
                Some(text) => parse_symbols(&text, Some(alphabet))?,
                None => SymbolString::new(alphabet, vec![0; length])?,
            };
            let report = metric::distance_distribution(alphabet, length, &reference)?;
            print!("{report}");
            Ok(0)
        }
        Command::Efficiency { exponent, min, max } => {
            let model = CostModel::new(exponent)?;
            if min < 2 || min > max {
                return Err(Error::parse(
                    1,
                    format!("need 2 <= min <= max, got min={min} max={max}"),
                ));
            }
            print!("{}", curve(&model, min, max).to_csv());
            Ok(0)
        }
        Command::BurauCheck {
            word,
            strands,
            max_len,
        } => match word {
            Some(word) => {
                let w = parse_word(&word)?;
                let oracle = burau_verdict(&w);
                let decider = is_trivial(&w);
                println!("burau: {oracle}");
                println!(
                    "decider: {}",
                    if decider { "TRIVIAL" } else { "NONTRIVIAL" }
                );
                let agree = match oracle {
                    BurauVerdict::Trivial => decider,
                    BurauVerdict::NonTrivial => !decider,
                    BurauVerdict::Inconclusive => true,
                };
                Ok(pass_fail(agree))
            }
            None => {
                let sweep = oracle_sweep(strands, max_len)?;
                println!("words checked: {}", sweep.words_checked);
                println!("inconclusive: {}", sweep.inconclusive);
                for word in &sweep.disagreements {
                    println!("disagreement: {word}");
                }
                println!("disagreements: {}", sweep.disagreements.len());
                Ok(pass_fail(sweep.disagreements.is_empty()))
            }
        },
        Command::Injectivity { alphabet, max_len } => {
            let scheme = CodeScheme::new(alphabet)?;
            let report = scheme.injectivity_check(max_len)?;
            println!("strings checked: {}", report.strings_checked);
            println!("pairs checked: {}", report.pairs_checked);
            for (a, b) in &report.collisions {
                println!("collision: {a} ~ {b}");
            }
            println!("collisions: {}", report.collisions.len());
            Ok(pass_fail(report.passed()))
        }
    }
}

#[derive(Debug)]
struct SweepOutcome {
    words_checked: u64,
    inconclusive: u64,
    disagreements: Vec<BraidWord>,
}

/// Compares the decider and the oracle on every word of length up to
/// `max_len` over the signed generator alphabet of the given strand count.
fn oracle_sweep(strands: usize, max_len: usize) -> Result<SweepOutcome> {
    if strands < 2 {
        return Err(Error::InvalidStrandCount(strands));
    }
    let alphabet = 2 * (strands - 1) as u128;
    let mut total: u128 = 0;
    for len in 0..=max_len as u32 {
        total += alphabet.pow(len);
        if total > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded {
                required: total,
                budget: ENUMERATION_BUDGET,
            });
        }
    }

    let mut outcome = SweepOutcome {
        words_checked: 0,
        inconclusive: 0,
        disagreements: Vec::new(),
    };
    let mut letters: Vec<i64> = Vec::new();
    sweep_rec(strands, max_len, &mut letters, &mut outcome)?;
    Ok(outcome)
}

fn sweep_rec(
    strands: usize,
    remaining: usize,
    letters: &mut Vec<i64>,
    outcome: &mut SweepOutcome,
) -> Result<()> {
    let word = BraidWord::from_signed(strands, letters)?;
    outcome.words_checked += 1;
    let decider = is_trivial(&word);
    match burau_verdict(&word) {
        BurauVerdict::Trivial => {
            if !decider {
                outcome.disagreements.push(word.clone());
            }
        }
        BurauVerdict::NonTrivial => {
            if decider {
                outcome.disagreements.push(word.clone());
            }
        }
        BurauVerdict::Inconclusive => outcome.inconclusive += 1,
    }
    if remaining == 0 {
        return Ok(());
    }
    for index in 1..strands as i64 {
        for k in [index, -index] {
            letters.push(k);
            sweep_rec(strands, remaining - 1, letters, outcome)?;
            letters.pop();
        }
    }
    Ok(())
}
