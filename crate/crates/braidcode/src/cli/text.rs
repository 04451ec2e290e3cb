//! Line formats for braid words and symbol strings.
//!
//! Word text: `B<n>: k1 k2 ... km` with nonzero signed integers, `B<n>:`
//! alone for the identity. Symbol text: a digit string for alphabets up to
//! 10 symbols, comma-separated decimal symbols beyond that, optionally
//! prefixed `A<N>:` when the alphabet is not known from context. Parse
//! errors carry 1-based character columns.

use crate::braid::BraidWord;
use crate::codec::SymbolString;
use crate::error::{Error, Result};

/// Parses the canonical word form, the inverse of [`BraidWord`]'s `Display`.
pub fn parse_word(text: &str) -> Result<BraidWord> {
    let line = text.trim_end_matches(['\n', '\r']);
    let mut chars = line.char_indices().peekable();

    match chars.next() {
        Some((_, 'B')) => {}
        Some((_, other)) => {
            return Err(Error::parse(1, format!("expected 'B', found '{other}'")));
        }
        None => return Err(Error::parse(1, "empty input, expected 'B<n>: ...'")),
    }

    let mut digits = String::new();
    while let Some(&(_, c)) = chars.peek() {
        if c.is_ascii_digit() {
            digits.push(c);
            chars.next();
        } else {
            break;
        }
    }
    if digits.is_empty() {
        return Err(Error::parse(2, "expected strand count after 'B'"));
    }
    let strands: usize = digits
        .parse()
        .map_err(|_| Error::parse(2, "strand count out of range"))?;

    match chars.next() {
        Some((_, ':')) => {}
        Some((at, other)) => {
            return Err(Error::parse(
                column_at(line, at),
                format!("expected ':', found '{other}'"),
            ));
        }
        None => {
            return Err(Error::parse(
                column_at(line, line.len()),
                "expected ':' after strand count",
            ));
        }
    }

    let body_start = chars.peek().map(|&(at, _)| at).unwrap_or(line.len());
    let mut letters = Vec::new();
    let mut columns = Vec::new();
    for token in tokenize(&line[body_start..], body_start) {
        let (at, word) = token;
        let value: i64 = word.parse().map_err(|_| {
            Error::parse(
                column_at(line, at),
                format!("expected an integer, found '{word}'"),
            )
        })?;
        letters.push(value);
        columns.push(column_at(line, at));
    }

    BraidWord::from_signed(strands, &letters).map_err(|err| match err {
        Error::ZeroLetter { position } => {
            Error::parse(columns[position - 1], "zero is not a valid letter")
        }
        Error::LetterOutOfRange {
            position, index, ..
        } => Error::parse(
            columns[position - 1],
            format!("letter {index} out of range for {strands} strands"),
        ),
        Error::InvalidStrandCount(n) => {
            Error::parse(2, format!("a braid needs at least 2 strands, got {n}"))
        }
        other => other,
    })
}

/// Parses symbol text. `alphabet` supplies the size when the text has no
/// `A<N>:` prefix; when both are present they must agree.
pub fn parse_symbols(text: &str, alphabet: Option<usize>) -> Result<SymbolString> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (declared, body, body_offset) = split_alphabet_prefix(line)?;
    let alphabet_size = match (declared, alphabet) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::parse(
                2,
                format!("prefix declares alphabet {a} but {b} was requested"),
            ));
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::parse(
                1,
                "alphabet size not inferable: pass --alphabet or use an 'A<N>:' prefix",
            ));
        }
    };
    if alphabet_size < 2 {
        return Err(Error::AlphabetTooSmall(alphabet_size));
    }

    let mut symbols = Vec::new();
    if alphabet_size <= 10 {
        for (at, c) in body.char_indices() {
            let column = column_at(line, body_offset + at);
            let digit = c
                .to_digit(10)
                .ok_or_else(|| Error::parse(column, format!("expected a digit, found '{c}'")))?
                as usize;
            if digit >= alphabet_size {
                return Err(Error::parse(
                    column,
                    format!("symbol {digit} out of range for alphabet of size {alphabet_size}"),
                ));
            }
            symbols.push(digit);
        }
    } else if !body.is_empty() {
        let mut at = 0usize;
        for piece in body.split(',') {
            let column = column_at(line, body_offset + at);
            let value: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(column, format!("expected a symbol, found '{piece}'")))?;
            if value >= alphabet_size {
                return Err(Error::parse(
                    column,
                    format!("symbol {value} out of range for alphabet of size {alphabet_size}"),
                ));
            }
            symbols.push(value);
            at += piece.len() + 1;
        }
    }
    SymbolString::new(alphabet_size, symbols)
}

/// Reads the alphabet size out of an `A<N>:` prefix without full parsing.
pub fn sniff_alphabet(text: &str) -> Option<usize> {
    split_alphabet_prefix(text).ok().and_then(|(n, _, _)| n)
}

fn split_alphabet_prefix(line: &str) -> Result<(Option<usize>, &str, usize)> {
    let rest = match line.strip_prefix('A') {
        Some(rest) => rest,
        None => return Ok((None, line, 0)),
    };
    let digits_len = rest.chars().take_while(|c| c.is_ascii_digit()).count();
    if digits_len == 0 || !rest[digits_len..].starts_with(':') {
        // not a prefix after all; treat the whole line as body
        return Ok((None, line, 0));
    }
    let n: usize = rest[..digits_len]
        .parse()
        .map_err(|_| Error::parse(2, "alphabet size out of range"))?;
    let body_offset = 1 + digits_len + 1;
    Ok((Some(n), &line[body_offset..], body_offset))
}

fn tokenize(body: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (at, c) in body.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((offset + s, &body[s..at]));
            }
        } else if start.is_none() {
            start = Some(at);
        }
    }
    if let Some(s) = start {
        tokens.push((offset + s, &body[s..]));
    }
    tokens
}

/// 1-based character column of a byte offset.
fn column_at(line: &str, byte_offset: usize) -> usize {
    line[..byte_offset.min(line.len())].chars().count() + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_word_basic() {
        let w = parse_word("B3: 2 2 1 -2").unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.signed_letters(), vec![2, 2, 1, -2]);
    }

    #[test]
    fn parse_word_identity() {
        let w = parse_word("B3:").unwrap();
        assert!(w.is_empty());
        let w = parse_word("B12:  ").unwrap();
        assert_eq!(w.strands(), 12);
    }

    #[test]
    fn parse_word_canonicalizes_whitespace() {
        let w = parse_word("B3:   2  2   1    -2").unwrap();
        assert_eq!(w.to_string(), "B3: 2 2 1 -2");
    }

    #[test]
    fn parse_word_errors_carry_columns() {
        match parse_word("B3: 0").unwrap_err() {
            Error::Parse { column, .. } => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("B3: 2 x").unwrap_err() {
            Error::Parse { column, .. } => assert_eq!(column, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("B3: 1 2 3").unwrap_err() {
            Error::Parse { column, .. } => assert_eq!(column, 9),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_word("Q3: 1").is_err());
        assert!(parse_word("B: 1").is_err());
        assert!(parse_word("B3 1").is_err());
        assert!(parse_word("B1:").is_err());
        assert!(parse_word("").is_err());
    }

    #[test]
    fn parse_round_trip() {
        for text in ["B3: 2 2 2 1 1 -2 2 2", "B5: -4 4 1", "B2:"] {
            let w = parse_word(text).unwrap();
            assert_eq!(w.to_string(), text);
            assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn parse_symbols_digits() {
        let s = parse_symbols("010", Some(2)).unwrap();
        assert_eq!(s.symbols(), &[0, 1, 0]);
        assert_eq!(s.alphabet_size(), 2);
        assert!(parse_symbols("012", Some(2)).is_err());
        assert!(parse_symbols("0x1", Some(2)).is_err());
    }

    #[test]
    fn parse_symbols_empty() {
        assert!(parse_symbols("", Some(2)).unwrap().is_empty());
        assert!(parse_symbols("A3:", None).unwrap().is_empty());
    }

    #[test]
    fn parse_symbols_prefix() {
        let s = parse_symbols("A3:120", None).unwrap();
        assert_eq!(s.alphabet_size(), 3);
        assert_eq!(s.symbols(), &[1, 2, 0]);
        assert!(parse_symbols("A3:0", Some(2)).is_err());
        assert_eq!(sniff_alphabet("A12:0,11"), Some(12));
        assert_eq!(sniff_alphabet("010"), None);
    }

    #[test]
    fn parse_symbols_wide_alphabet() {
        let s = parse_symbols("0,11,3", Some(12)).unwrap();
        assert_eq!(s.symbols(), &[0, 11, 3]);
        assert!(parse_symbols("0,12", Some(12)).is_err());
        assert!(parse_symbols("0,,1", Some(12)).is_err());
    }

    #[test]
    fn parse_symbols_requires_alphabet_context() {
        assert!(parse_symbols("010", None).is_err());
    }
}
