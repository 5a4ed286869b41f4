use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

/// A finite sequence of symbol indices.
///
/// The plain text form spells symbol 0 as `a`, 1 as `b` and so on; symbols
/// from 26 upward are written as `{26}`, `{27}`, ... . The derived ordering
/// is lexicographic with a proper prefix before its extensions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("unexpected character {0:?} in word")]
    UnexpectedChar(char),
    #[error("unbalanced parentheses in word")]
    Unbalanced,
    #[error("bad number in word: {0:?}")]
    BadNumber(String),
}

/// Length of `w` after collapsing each maximal run of equal symbols.
pub fn switch_count(w: &[usize]) -> usize {
    match w.first() {
        None => 0,
        Some(_) => 1 + w.windows(2).filter(|p| p[0] != p[1]).count(),
    }
}

/// Text name of a symbol index.
pub fn symbol_name(s: usize) -> String {
    if s < 26 {
        ((b'a' + s as u8) as char).to_string()
    } else {
        format!("{{{s}}}")
    }
}

impl Word {
    pub fn new(symbols: Vec<usize>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn switch_count(&self) -> usize {
        switch_count(&self.0)
    }

    pub fn push(&mut self, s: usize) {
        self.0.push(s);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self` repeated `times` times.
    pub fn pow(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Maximal runs as `(symbol, run length)` pairs.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((t, r)) if *t == s => *r += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Display form with runs and alternating pairs compressed, e.g.
    /// `ba^3(ba)^3`. [`Word::parse_compressed`] reads it back.
    pub fn compressed(&self) -> String {
        let w = &self.0;
        let mut out = String::new();
        let mut i = 0;
        while i < w.len() {
            let x = w[i];
            let run = w[i..].iter().take_while(|&&s| s == x).count();
            if run >= 2 {
                let _ = write!(out, "{}^{}", symbol_name(x), run);
                i += run;
                continue;
            }
            let mut pairs = 0;
            if i + 1 < w.len() && w[i + 1] != x {
                let y = w[i + 1];
                while i + 2 * pairs + 1 < w.len() && w[i + 2 * pairs] == x && w[i + 2 * pairs + 1] == y {
                    pairs += 1;
                }
            }
            if pairs >= 2 {
                let _ = write!(out, "({}{})^{}", symbol_name(x), symbol_name(w[i + 1]), pairs);
                i += 2 * pairs;
            } else {
                out.push_str(&symbol_name(x));
                i += 1;
            }
        }
        out
    }

    /// Parses plain or compressed notation: letters, `{n}` symbols,
    /// parenthesised groups and `^exponent` suffixes. Whitespace is ignored.
    pub fn parse_compressed(text: &str) -> Result<Word, WordParseError> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_seq(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(if chars[pos] == ')' {
                WordParseError::Unbalanced
            } else {
                WordParseError::UnexpectedChar(chars[pos])
            });
        }
        Ok(Word(w))
    }
}

fn parse_number(chars: &[char], pos: &mut usize) -> Result<usize, WordParseError> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let s: String = chars[start..*pos].iter().collect();
    s.parse().map_err(|_| WordParseError::BadNumber(s))
}

fn parse_seq(chars: &[char], pos: &mut usize) -> Result<Vec<usize>, WordParseError> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        let atom = match c {
            'a'..='z' => {
                *pos += 1;
                vec![c as usize - 'a' as usize]
            }
            '{' => {
                *pos += 1;
                let n = parse_number(chars, pos)?;
                if chars.get(*pos) != Some(&'}') {
                    return Err(WordParseError::Unbalanced);
                }
                *pos += 1;
                vec![n]
            }
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(WordParseError::Unbalanced);
                }
                *pos += 1;
                inner
            }
            ')' => break,
            other => return Err(WordParseError::UnexpectedChar(other)),
        };
        if chars.get(*pos) == Some(&'^') {
            *pos += 1;
            let e = parse_number(chars, pos)?;
            out.extend(atom.repeat(e));
        } else {
            out.extend(atom);
        }
    }
    Ok(out)
}

impl FromStr for Word {
    type Err = WordParseError;

    /// Parses the plain interchange form (no exponents or groups).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(c) = s.chars().find(|c| matches!(c, '^' | '(' | ')')) {
            return Err(WordParseError::UnexpectedChar(c));
        }
        Word::parse_compressed(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(&symbol_name(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse_compressed(s).unwrap()
    }

    #[test]
    fn switch_count_examples() {
        assert_eq!(Word::empty().switch_count(), 0);
        assert_eq!(w("aaab").switch_count(), 2);
        assert_eq!(w("b aaa b aaa b").switch_count(), 5);
        assert_eq!(w("a").switch_count(), 1);
    }

    #[test]
    fn parses_compressed_forms() {
        assert_eq!(w("b(a^3b)^2").to_string(), "baaabaaab");
        assert_eq!(w("abab^2aba").to_string(), "ababbaba");
        assert_eq!(w("a{27}b").symbols(), &[0, 27, 1]);
        assert_eq!(Word::parse_compressed("(ab"), Err(WordParseError::Unbalanced));
        assert_eq!(Word::parse_compressed("ab)"), Err(WordParseError::Unbalanced));
        assert_eq!(Word::parse_compressed("aB"), Err(WordParseError::UnexpectedChar('B')));
        assert!("a^2".parse::<Word>().is_err());
    }

    #[test]
    fn compressed_display() {
        assert_eq!(w("baaababab").compressed(), "ba^3(ba)^2b");
        assert_eq!(w("").compressed(), "");
        assert_eq!(w("ab").compressed(), "ab");
    }

    #[test]
    fn runs_collapse() {
        assert_eq!(w("aabccc").runs(), vec![(0, 2), (1, 1), (2, 3)]);
    }

    fn word_strategy() -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0usize..4, 0..30)
    }

    proptest! {
        #[test]
        fn switch_count_of_concatenation(u in word_strategy(), v in word_strategy()) {
            let (u, v) = (Word::new(u), Word::new(v));
            let joined = u.concat(&v).switch_count();
            let sum = u.switch_count() + v.switch_count();
            let glued = matches!((u.symbols().last(), v.symbols().first()), (Some(x), Some(y)) if x == y);
            prop_assert_eq!(joined, if glued { sum - 1 } else { sum });
        }

        #[test]
        fn switch_count_bounds(u in word_strategy()) {
            let u = Word::new(u);
            prop_assert!(u.switch_count() <= u.len());
            prop_assert_eq!(u.switch_count() == 0, u.is_empty());
            prop_assert_eq!(u.switch_count(), u.runs().len());
        }

        #[test]
        fn text_forms_round_trip(u in prop::collection::vec(0usize..30, 0..30)) {
            let u = Word::new(u);
            prop_assert_eq!(u.to_string().parse::<Word>().unwrap(), u.clone());
            prop_assert_eq!(Word::parse_compressed(&u.compressed()).unwrap(), u);
        }
    }
}
