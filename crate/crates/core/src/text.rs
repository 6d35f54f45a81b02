//! Text syntax for words and extension elements.
//!
//! Words are whitespace-separated tokens `x<i>` or `x<i>^-1`, with `1` for
//! the identity. An element may start with a `t^<k>` token. Artin presets
//! also accept `y<i>` / `z<i>` as aliases for `x<i+1>`.

use std::fmt;

use crate::error::Error;
use crate::word::{Alphabet, Letter, Word};

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "x{}^-1", self.index())
        } else {
            write!(f, "x{}", self.index())
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Formats `t^exp word`; the `t` token is omitted when `exp == 0`.
pub fn format_element(t_exp: i64, word: &Word) -> String {
    match (t_exp, word.is_empty()) {
        (0, _) => word.to_string(),
        (e, true) => format!("t^{e}"),
        (e, false) => format!("t^{e} {word}"),
    }
}

/// What a parser accepts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Syntax {
    pub alphabet: Alphabet,
    /// Alias letter (`y` or `z`) whose indices start at 0.
    pub alias: Option<char>,
}

impl Syntax {
    pub fn new(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            alias: None,
        }
    }

    pub fn with_alias(mut self, alias: Option<char>) -> Self {
        self.alias = alias;
        self
    }
}

fn err(position: usize, token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        position,
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn parse_letter(tok: &str, position: usize, syntax: Syntax) -> Result<Letter, Error> {
    let mut chars = tok.chars();
    let head = chars
        .next()
        .ok_or_else(|| err(position, tok, "empty token"))?;
    let offset = match head {
        'x' => 0,
        c if Some(c) == syntax.alias => 1,
        _ => return Err(err(position, tok, "expected a generator token")),
    };
    let rest = &tok[head.len_utf8()..];
    let (num, inverse) = match rest.split_once('^') {
        Some((n, "-1")) => (n, true),
        Some(_) => return Err(err(position, tok, "only the exponent ^-1 is allowed")),
        None => (rest, false),
    };
    let index: i32 = num
        .parse()
        .map_err(|_| err(position, tok, "malformed generator index"))?;
    if num.starts_with('+') {
        return Err(err(position, tok, "malformed generator index"));
    }
    let letter = Letter::new(index + offset, inverse);
    if !syntax.alphabet.contains(letter) {
        return Err(err(
            position,
            tok,
            format!("generator index outside the {} alphabet", syntax.alphabet),
        ));
    }
    Ok(letter)
}

fn parse_tokens<'a>(
    tokens: impl Iterator<Item = (usize, &'a str)>,
    syntax: Syntax,
) -> Result<Word, Error> {
    let mut letters = Vec::new();
    for (pos, tok) in tokens {
        if tok == "1" {
            continue;
        }
        letters.push(parse_letter(tok, pos, syntax)?);
    }
    Ok(Word::from_letters(letters))
}

/// Parses a word; the result is freely reduced.
pub fn parse_word(text: &str, syntax: Syntax) -> Result<Word, Error> {
    parse_tokens(
        text.split_whitespace().enumerate().map(|(i, t)| (i + 1, t)),
        syntax,
    )
}

/// Parses `[t^k] word`, returning `(k, word)`.
pub fn parse_element(text: &str, syntax: Syntax) -> Result<(i64, Word), Error> {
    let mut tokens = text
        .split_whitespace()
        .enumerate()
        .map(|(i, t)| (i + 1, t))
        .peekable();
    let mut t_exp = 0;
    if let Some(&(pos, tok)) = tokens.peek() {
        if let Some(rest) = tok.strip_prefix('t') {
            t_exp = match rest.strip_prefix('^') {
                Some(e) => e
                    .parse::<i64>()
                    .map_err(|_| err(pos, tok, "malformed t exponent"))?,
                None if rest.is_empty() => 1,
                None => return Err(err(pos, tok, "malformed t exponent")),
            };
            tokens.next();
        }
    }
    let word = parse_tokens(tokens, syntax)?;
    Ok((t_exp, word))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: u32) -> Syntax {
        Syntax::new(Alphabet::Rank(n))
    }

    #[test]
    fn grammar_examples() {
        let (e, w) = parse_element("t^2 x1 x2^-1", rank(3)).unwrap();
        assert_eq!(e, 2);
        assert_eq!(w, Word::from_pairs(&[(1, 1), (2, -1)]));

        assert_eq!(parse_element("1", rank(2)).unwrap(), (0, Word::empty()));

        match parse_element("t^1 x3 q7", rank(3)) {
            Err(Error::Parse {
                position, token, ..
            }) => {
                assert_eq!(position, 3);
                assert_eq!(token, "q7");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn range_and_sign_checks() {
        assert!(parse_word("x3", rank(2)).is_err());
        assert!(parse_word("x0", rank(2)).is_err());
        assert!(parse_word("x-3", rank(2)).is_err());
        assert_eq!(
            parse_word("x-3 x0^-1", Syntax::new(Alphabet::Integers)).unwrap(),
            Word::from_pairs(&[(-3, 1), (0, -1)])
        );
        assert!(parse_word("x1^2", rank(2)).is_err());
        assert!(parse_element("x1 t^2", rank(2)).is_err());
    }

    #[test]
    fn aliases() {
        let s = rank(2).with_alias(Some('y'));
        assert_eq!(
            parse_word("y0 y1^-1", s).unwrap(),
            Word::from_pairs(&[(1, 1), (2, -1)])
        );
        assert!(parse_word("y2", s).is_err());
        assert!(parse_word("z0", s).is_err());
    }

    #[test]
    fn printing() {
        let w = Word::from_pairs(&[(0, 1), (3, -1)]);
        assert_eq!(format_element(1, &w), "t^1 x0 x3^-1");
        assert_eq!(format_element(0, &w), "x0 x3^-1");
        assert_eq!(format_element(-2, &Word::empty()), "t^-2");
        assert_eq!(format_element(0, &Word::empty()), "1");
    }

    #[test]
    fn input_is_reduced() {
        assert_eq!(
            parse_word("x1 x2 x2^-1 x1^-1", rank(2)).unwrap(),
            Word::empty()
        );
    }
}
