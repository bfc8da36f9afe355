//! Text grammar for polynomials:
//!
//! ```text
//! poly := term ('+' term)*
//! term := [integer '*'] word
//! word := '1' | letter+
//! ```
//!
//! Whitespace is ignored everywhere and integers may carry a leading sign.

use super::{Alphabet, Letter, NcError, NcPolynomial, Word};
use num_bigint::BigInt;
use num_traits::One;

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, message: impl Into<String>) -> NcError {
        NcError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, NcError> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse::<BigInt>()
            .map_err(|_| self.err("expected integer"))
    }

    fn word(&mut self, alphabet: Alphabet) -> Result<Word, NcError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        while let Some(b) = self.peek() {
            let ch = b as char;
            match Letter::from_char(ch) {
                Some(l) if l.alphabet() == alphabet => {
                    letters.push(l);
                    self.pos += 1;
                }
                Some(l) => {
                    return Err(self.err(format!(
                        "letter '{}' is not in the {} alphabet",
                        l.to_char(),
                        alphabet
                    )))
                }
                None => break,
            }
        }
        if letters.is_empty() {
            return Err(self.err("expected a word ('1' or letters)"));
        }
        Ok(Word::from_letters(letters))
    }

    fn term(&mut self, alphabet: Alphabet) -> Result<(Word, BigInt), NcError> {
        self.skip_ws();
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() || b == b'-' || b == b'+' => {
                // '1' starts both an integer and the empty word; only treat it
                // as a coefficient when a '*' follows.
                let save = self.pos;
                let n = self.integer()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    n
                } else if self.text[save..self.pos].trim() == "1" && n.is_one() {
                    // A bare '1' is the empty word.
                    return Ok((Word::empty(), BigInt::one()));
                } else {
                    return Err(self.err("expected '*' after coefficient"));
                }
            }
            _ => BigInt::one(),
        };
        let w = self.word(alphabet)?;
        Ok((w, coeff))
    }
}

/// Parses the polynomial grammar; `"1"` is the empty word.
pub fn parse_polynomial(text: &str, alphabet: Alphabet) -> Result<NcPolynomial, NcError> {
    let mut cur = Cursor::new(text);
    let mut poly = NcPolynomial::zero(alphabet);
    let (w, c) = cur.term(alphabet)?;
    poly.add_term(w, &c);
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                let (w, c) = cur.term(alphabet)?;
                poly.add_term(w, &c);
            }
            Some(b) => {
                return Err(cur.err(format!("unexpected character '{}'", b as char)));
            }
        }
    }
    Ok(poly)
}

/// Parses a single word: `"1"` or a letter string such as `"cddc"`.
pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word, NcError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let w = cur.word(alphabet)?;
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.err("trailing input after word"));
    }
    Ok(w)
}
