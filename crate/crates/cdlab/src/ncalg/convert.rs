//! Change of basis between the ab- and cd-alphabets under the ring map
//! c -> a + b, d -> ab + ba.

use super::{Alphabet, Letter, NcError, NcPolynomial, Word};

/// Expands a single cd-word into its ab-polynomial image.
pub fn expand_word_cd_to_ab(word: &Word) -> NcPolynomial {
    let mut out = NcPolynomial::one(Alphabet::Ab);
    let a = NcPolynomial::from_word(Word::letter(Letter::A), Alphabet::Ab).unwrap();
    let b = NcPolynomial::from_word(Word::letter(Letter::B), Alphabet::Ab).unwrap();
    let c_image = &a + &b;
    let d_image = &(&a * &b) + &(&b * &a);
    for &l in word.letters() {
        let factor = match l {
            Letter::C => &c_image,
            Letter::D => &d_image,
            _ => unreachable!("cd-word contains an ab letter"),
        };
        out = &out * factor;
    }
    out
}

/// Image of a cd-polynomial under c -> a+b, d -> ab+ba. Degree-preserving.
pub fn expand_cd_to_ab(p: &NcPolynomial) -> Result<NcPolynomial, NcError> {
    if p.alphabet() != Alphabet::Cd {
        return Err(NcError::AlphabetMismatch {
            expected: Alphabet::Cd,
            found: p.alphabet(),
        });
    }
    let mut out = NcPolynomial::zero(Alphabet::Ab);
    for (w, c) in p.terms() {
        out += &expand_word_cd_to_ab(w).scale(c);
    }
    Ok(out)
}

/// The lexicographically minimal ab-word in the expansion of a cd-word is the
/// image under c -> a, d -> ab. This inverts that map: scanning left to
/// right, an `a` followed by `b` came from `d`, a lone `a` from `c`, and a
/// leading `b` has no preimage.
fn invert_minimal_word(w: &Word) -> Option<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        match letters[i] {
            Letter::A => {
                if letters.get(i + 1) == Some(&Letter::B) {
                    out.push(Letter::D);
                    i += 2;
                } else {
                    out.push(Letter::C);
                    i += 1;
                }
            }
            Letter::B => return None,
            _ => unreachable!("ab-word contains a cd letter"),
        }
    }
    Some(Word::from_letters(out))
}

/// Rewrites an ab-polynomial in c and d when possible.
///
/// Greedy leading-term peeling: the expansions of distinct cd-words have
/// distinct minimal ab-terms, each with coefficient 1, so repeatedly
/// subtracting `coeff * expand(preimage of the minimal term)` either empties
/// the polynomial or exposes a term with no preimage.
pub fn convert_ab_to_cd(p: &NcPolynomial) -> Result<NcPolynomial, NcError> {
    if p.alphabet() != Alphabet::Ab {
        return Err(NcError::AlphabetMismatch {
            expected: Alphabet::Ab,
            found: p.alphabet(),
        });
    }
    let mut residual = p.clone();
    let mut out = NcPolynomial::zero(Alphabet::Cd);
    while let Some((word, coeff)) = residual.min_term() {
        let word = word.clone();
        let coeff = coeff.clone();
        let preimage = invert_minimal_word(&word)
            .ok_or_else(|| NcError::NotExpressible { term: word.clone() })?;
        out.add_term(preimage.clone(), &coeff);
        let expanded = expand_word_cd_to_ab(&preimage);
        residual = &residual - &expanded.scale(&coeff);
        // The minimal term is gone; everything newly introduced is larger.
        debug_assert!(residual.min_term().is_none_or(|(w, _)| *w > word));
    }
    Ok(out)
}
