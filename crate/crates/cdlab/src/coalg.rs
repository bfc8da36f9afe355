//! Coproducts on both alphabets, the derivation G, and the Pyr operator.
//!
//! On Z<a,b> the coproduct deletes one letter at a time:
//! Delta(u_1...u_n) = sum_i u_1...u_{i-1} (x) u_{i+1}...u_n, with
//! Delta(1) = 0. On Z<c,d> we use Delta(c) = 2 1(x)1 and
//! Delta(d) = 1(x)c + c(x)1 and expand position by position, which agrees
//! with the ab coproduct after expanding c and d.

use crate::ncalg::{Alphabet, Letter, NcError, NcPolynomial, TensorPolynomial, Word};
use num_bigint::BigInt;

/// Coproduct of an ab-word: delete each letter in turn.
pub fn coproduct_ab_word(w: &Word) -> TensorPolynomial {
    let mut out = TensorPolynomial::zero(Alphabet::Ab);
    let one = BigInt::from(1);
    for i in 0..w.len() {
        out.add_term(w.prefix(i), w.suffix(i + 1), &one);
    }
    out
}

/// Coproduct of a cd-word, staying in the cd-alphabet.
pub fn coproduct_cd_word(w: &Word) -> TensorPolynomial {
    let mut out = TensorPolynomial::zero(Alphabet::Cd);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    for (i, &l) in w.letters().iter().enumerate() {
        let prefix = w.prefix(i);
        let suffix = w.suffix(i + 1);
        match l {
            Letter::C => {
                out.add_term(prefix, suffix, &two);
            }
            Letter::D => {
                // Delta(d) = 1 (x) c + c (x) 1
                out.add_term(
                    prefix.clone(),
                    Word::letter(Letter::C).concat(&suffix),
                    &one,
                );
                out.add_term(prefix.append(Letter::C), suffix, &one);
            }
            _ => unreachable!("cd-word contains an ab letter"),
        }
    }
    out
}

fn coproduct_poly(
    p: &NcPolynomial,
    expected: Alphabet,
    word_coproduct: impl Fn(&Word) -> TensorPolynomial,
) -> Result<TensorPolynomial, NcError> {
    if p.alphabet() != expected {
        return Err(NcError::AlphabetMismatch {
            expected,
            found: p.alphabet(),
        });
    }
    let mut out = TensorPolynomial::zero(expected);
    for (w, c) in p.terms() {
        for ((l, r), k) in word_coproduct(w).terms() {
            out.add_term(l.clone(), r.clone(), &(c * k));
        }
    }
    Ok(out)
}

/// Linear extension of [`coproduct_ab_word`] to polynomials.
pub fn coproduct_ab(p: &NcPolynomial) -> Result<TensorPolynomial, NcError> {
    coproduct_poly(p, Alphabet::Ab, coproduct_ab_word)
}

/// Linear extension of [`coproduct_cd_word`] to polynomials.
pub fn coproduct_cd(p: &NcPolynomial) -> Result<TensorPolynomial, NcError> {
    coproduct_poly(p, Alphabet::Cd, coproduct_cd_word)
}

/// Coproduct of a word in whichever alphabet it belongs to; the empty word
/// maps to the zero tensor in `alphabet`.
pub fn coproduct_word(w: &Word, alphabet: Alphabet) -> TensorPolynomial {
    match alphabet {
        Alphabet::Ab => coproduct_ab_word(w),
        Alphabet::Cd => coproduct_cd_word(w),
    }
}

fn derive_letter(l: Letter) -> Word {
    match l {
        Letter::A => Word::from_letters([Letter::B, Letter::A]),
        Letter::B => Word::from_letters([Letter::A, Letter::B]),
        Letter::C => Word::letter(Letter::D),
        Letter::D => Word::from_letters([Letter::C, Letter::D]),
    }
}

/// The derivation G with G(a) = ba, G(b) = ab, G(c) = d, G(d) = cd,
/// extended by the product rule.
pub fn derivation_g(p: &NcPolynomial) -> NcPolynomial {
    let mut out = NcPolynomial::zero(p.alphabet());
    for (w, c) in p.terms() {
        for i in 0..w.len() {
            let image = w
                .prefix(i)
                .concat(&derive_letter(w.letters()[i]))
                .concat(&w.suffix(i + 1));
            out.add_term(image, c);
        }
    }
    out
}

/// Pyr(u) = u c + G(u) on cd-polynomials; raises every term degree by 1.
pub fn pyr(p: &NcPolynomial) -> Result<NcPolynomial, NcError> {
    if p.alphabet() != Alphabet::Cd {
        return Err(NcError::AlphabetMismatch {
            expected: Alphabet::Cd,
            found: p.alphabet(),
        });
    }
    let shifted = p.mul_word_right(&Word::letter(Letter::C));
    Ok(&shifted + &derivation_g(p))
}

/// Pyr of a single cd-word.
pub fn pyr_word(w: &Word) -> NcPolynomial {
    let p = NcPolynomial::from_word(w.clone(), Alphabet::Cd).expect("cd word");
    pyr(&p).expect("cd polynomial")
}
