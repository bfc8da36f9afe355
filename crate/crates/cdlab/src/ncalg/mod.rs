//! Words and polynomials in the free algebras Z<a,b> and Z<c,d>.
//!
//! The two alphabets are graded differently: `a`, `b`, `c` have degree 1
//! while `d` has degree 2. Polynomials are stored as canonical maps from
//! words to nonzero integer coefficients, ordered by degree and then
//! lexicographically (a < b, c < d), so iteration order is the output order.

mod convert;
mod json;
mod parse;

pub use convert::{convert_ab_to_cd, expand_cd_to_ab, expand_word_cd_to_ab};
pub use parse::{parse_polynomial, parse_word};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum NcError {
    #[error("alphabet mismatch: expected {expected}, got {found}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("not expressible in c and d (offending term: {term})")]
    NotExpressible { term: Word },
}

/// The two-letter alphabet a polynomial lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Ab,
    Cd,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Ab => write!(f, "ab"),
            Alphabet::Cd => write!(f, "cd"),
        }
    }
}

/// One of the four generator symbols. Degree is 1 except for `d`,
/// which has degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Letter::A | Letter::B => Alphabet::Ab,
            Letter::C | Letter::D => Alphabet::Cd,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Letter::D => 2,
            _ => 1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }
}

/// A word in one alphabet. The empty word is the multiplicative identity
/// and is considered a member of both alphabets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    /// c^n or a^n etc.
    pub fn power(l: Letter, n: usize) -> Word {
        Word {
            letters: vec![l; n],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Sum of letter degrees (d counts twice).
    pub fn degree(&self) -> usize {
        self.letters.iter().map(|l| l.degree()).sum()
    }

    /// True when every letter belongs to `alphabet`. The empty word fits both.
    pub fn fits_alphabet(&self, alphabet: Alphabet) -> bool {
        self.letters.iter().all(|l| l.alphabet() == alphabet)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn append(&self, l: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters.push(l);
        Word { letters }
    }

    /// Splits off the last letter, if any.
    pub fn split_last(&self) -> Option<(Word, Letter)> {
        let (&last, init) = self.letters.split_last()?;
        Some((Word { letters: init.to_vec() }, last))
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            letters: self.letters[..len].to_vec(),
        }
    }

    pub fn suffix(&self, from: usize) -> Word {
        Word {
            letters: self.letters[from..].to_vec(),
        }
    }
}

/// Graded order: by degree first, then lexicographically with a < b, c < d.
/// Two distinct words of equal degree always differ at some position, so the
/// lexicographic comparison never falls through to a prefix case.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// A finite integer combination of words of one alphabet.
///
/// Invariants: no stored coefficient is zero and every word fits the
/// polynomial's alphabet. The `BTreeMap` keeps terms in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPolynomial {
    alphabet: Alphabet,
    terms: BTreeMap<Word, BigInt>,
}

impl NcPolynomial {
    pub fn zero(alphabet: Alphabet) -> NcPolynomial {
        NcPolynomial {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient 1.
    pub fn one(alphabet: Alphabet) -> NcPolynomial {
        NcPolynomial::monomial(Word::empty(), BigInt::one(), alphabet)
            .expect("empty word fits every alphabet")
    }

    pub fn from_word(word: Word, alphabet: Alphabet) -> Result<NcPolynomial, NcError> {
        NcPolynomial::monomial(word, BigInt::one(), alphabet)
    }

    pub fn monomial(word: Word, coeff: BigInt, alphabet: Alphabet) -> Result<NcPolynomial, NcError> {
        if !word.fits_alphabet(alphabet) {
            return Err(NcError::AlphabetMismatch {
                expected: alphabet,
                found: match alphabet {
                    Alphabet::Ab => Alphabet::Cd,
                    Alphabet::Cd => Alphabet::Ab,
                },
            });
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        Ok(NcPolynomial { alphabet, terms })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> BigInt {
        self.terms.get(word).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest term degree, or 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.degree()).max().unwrap_or(0)
    }

    /// True when every term has the same degree `deg`.
    pub fn is_homogeneous_of(&self, deg: usize) -> bool {
        self.terms.keys().all(|w| w.degree() == deg)
    }

    pub fn add_term(&mut self, word: Word, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(word.fits_alphabet(self.alphabet));
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies every term by `word` on the right.
    pub fn mul_word_right(&self, word: &Word) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.concat(word), c);
        }
        out
    }

    /// Multiplies every term by `word` on the left.
    pub fn mul_word_left(&self, word: &Word) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(word.concat(w), c);
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * k));
        }
        out
    }

    /// The smallest term in canonical order, if any.
    pub fn min_term(&self) -> Option<(&Word, &BigInt)> {
        self.terms.iter().next()
    }
}

/// Concatenation product, extended bilinearly.
pub fn multiply(p: &NcPolynomial, q: &NcPolynomial) -> Result<NcPolynomial, NcError> {
    if p.alphabet != q.alphabet {
        return Err(NcError::AlphabetMismatch {
            expected: p.alphabet,
            found: q.alphabet,
        });
    }
    let mut out = NcPolynomial::zero(p.alphabet);
    for (wp, cp) in &p.terms {
        for (wq, cq) in &q.terms {
            out.add_term(wp.concat(wq), &(cp * cq));
        }
    }
    Ok(out)
}

impl Add for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        assert_eq!(self.alphabet, rhs.alphabet, "alphabet mismatch in +");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl AddAssign<&NcPolynomial> for NcPolynomial {
    fn add_assign(&mut self, rhs: &NcPolynomial) {
        assert_eq!(self.alphabet, rhs.alphabet, "alphabet mismatch in +=");
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c);
        }
    }
}

impl Sub for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &(-c));
        }
        out
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(-c));
        }
        out
    }
}

impl Mul for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        multiply(self, rhs).expect("alphabet mismatch in *")
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            // "0*1" re-parses to zero under the polynomial grammar.
            return write!(f, "0*1");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{c}*{w}")?;
            }
        }
        Ok(())
    }
}

/// An integer combination of ordered word pairs; the output type of coproducts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorPolynomial {
    alphabet: Alphabet,
    terms: BTreeMap<(Word, Word), BigInt>,
}

impl TensorPolynomial {
    pub fn zero(alphabet: Alphabet) -> TensorPolynomial {
        TensorPolynomial {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Word, right: Word, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(left.fits_alphabet(self.alphabet) && right.fits_alphabet(self.alphabet));
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Right-multiplies the second slot of every term by `word`.
    pub fn mul_second_right(&self, word: &Word) -> TensorPolynomial {
        let mut out = TensorPolynomial::zero(self.alphabet);
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), r.concat(word), c);
        }
        out
    }

    /// Left-multiplies the first slot of every term by `word`.
    pub fn mul_first_left(&self, word: &Word) -> TensorPolynomial {
        let mut out = TensorPolynomial::zero(self.alphabet);
        for ((l, r), c) in &self.terms {
            out.add_term(word.concat(l), r.clone(), c);
        }
        out
    }
}

impl Add for &TensorPolynomial {
    type Output = TensorPolynomial;
    fn add(self, rhs: &TensorPolynomial) -> TensorPolynomial {
        assert_eq!(self.alphabet, rhs.alphabet, "alphabet mismatch in +");
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), c);
        }
        out
    }
}

impl fmt::Display for TensorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, r), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{l}⊗{r}")?;
            } else {
                write!(f, "{c}*{l}⊗{r}")?;
            }
        }
        Ok(())
    }
}
