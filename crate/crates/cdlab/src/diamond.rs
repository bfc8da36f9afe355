//! The bilinear diamond product on ab- and cd-polynomials.
//!
//! On words the product is computed by recursion on the last letter of the
//! second argument:
//!
//! ```text
//! u <> (w a) = (u <> w) a + sum (u1 <> w) ab u2
//! u <> (w b) = (u <> w) b + sum (u1 <> w) ba u2
//! u <> (w c) = (u <> w) c + sum (u1 <> w) d  u2
//! u <> (w d) = (u <> w) d + sum (u1 <> w) d  Pyr(u2)
//! ```
//!
//! where the sums run over the coproduct of u and the base case is
//! u <> 1 = u. The product is commutative; that is used only to normalize
//! memo keys, never to change the computation path.

use crate::coalg::{coproduct_word, pyr_word};
use crate::ncalg::{Alphabet, Letter, NcError, NcPolynomial, Word};
use std::collections::HashMap;

/// Memo table for diamond products of words, one map per alphabet (the
/// empty word belongs to both, so the maps must not share keys).
///
/// Results are deterministic regardless of sharing: a cache can be reused
/// across calls, shared per worker, or dropped entirely.
#[derive(Debug)]
pub struct DiamondCache {
    /// Keys are normalized by commutativity unless the cache was built with
    /// [`DiamondCache::unnormalized`]; normalization only affects lookups,
    /// never the computation path.
    normalize: bool,
    memo_ab: HashMap<(Word, Word), NcPolynomial>,
    memo_cd: HashMap<(Word, Word), NcPolynomial>,
}

impl Default for DiamondCache {
    fn default() -> DiamondCache {
        DiamondCache::new()
    }
}

impl DiamondCache {
    pub fn new() -> DiamondCache {
        DiamondCache {
            normalize: true,
            memo_ab: HashMap::new(),
            memo_cd: HashMap::new(),
        }
    }

    /// A cache keyed by ordered pairs. Checks that compare u<>v against
    /// v<>u need this so the two sides stay independent computations.
    pub fn unnormalized() -> DiamondCache {
        DiamondCache {
            normalize: false,
            ..DiamondCache::new()
        }
    }

    pub fn len(&self) -> usize {
        self.memo_ab.len() + self.memo_cd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn word_product(&mut self, u: &Word, v: &Word, alphabet: Alphabet) -> NcPolynomial {
        let key = if self.normalize && u > v {
            (v.clone(), u.clone())
        } else {
            (u.clone(), v.clone())
        };
        let memo = match alphabet {
            Alphabet::Ab => &self.memo_ab,
            Alphabet::Cd => &self.memo_cd,
        };
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }

        let result = match v.split_last() {
            None => NcPolynomial::from_word(u.clone(), alphabet).expect("word fits alphabet"),
            Some((w, last)) => {
                let base = self
                    .word_product(u, &w, alphabet)
                    .mul_word_right(&Word::letter(last));
                let mut acc = base;
                let mid = match last {
                    Letter::A => Word::from_letters([Letter::A, Letter::B]),
                    Letter::B => Word::from_letters([Letter::B, Letter::A]),
                    Letter::C | Letter::D => Word::letter(Letter::D),
                };
                for ((u1, u2), k) in coproduct_word(u, alphabet).terms() {
                    let sub = self.word_product(u1, &w, alphabet);
                    let tail = match last {
                        Letter::D => {
                            // (u1 <> w) d Pyr(u2)
                            let mut t = NcPolynomial::zero(alphabet);
                            for (pw, pc) in pyr_word(u2).terms() {
                                t.add_term(mid.concat(pw), pc);
                            }
                            t
                        }
                        _ => NcPolynomial::from_word(mid.concat(u2), alphabet)
                            .expect("word fits alphabet"),
                    };
                    for (tw, tc) in tail.terms() {
                        for (sw, sc) in sub.terms() {
                            acc.add_term(sw.concat(tw), &(sc * tc * k));
                        }
                    }
                }
                acc
            }
        };
        let memo = match alphabet {
            Alphabet::Ab => &mut self.memo_ab,
            Alphabet::Cd => &mut self.memo_cd,
        };
        memo.insert(key, result.clone());
        result
    }

    /// Diamond product of two words of the same alphabet.
    pub fn words(&mut self, u: &Word, v: &Word, alphabet: Alphabet) -> NcPolynomial {
        debug_assert!(u.fits_alphabet(alphabet) && v.fits_alphabet(alphabet));
        self.word_product(u, v, alphabet)
    }

    /// Bilinear extension to polynomials.
    pub fn product(&mut self, p: &NcPolynomial, q: &NcPolynomial) -> Result<NcPolynomial, NcError> {
        if p.alphabet() != q.alphabet() {
            return Err(NcError::AlphabetMismatch {
                expected: p.alphabet(),
                found: q.alphabet(),
            });
        }
        let alphabet = p.alphabet();
        let mut out = NcPolynomial::zero(alphabet);
        for (wp, cp) in p.terms() {
            for (wq, cq) in q.terms() {
                let prod = self.word_product(wp, wq, alphabet);
                for (w, c) in prod.terms() {
                    out.add_term(w.clone(), &(c * cp * cq));
                }
            }
        }
        Ok(out)
    }
}

thread_local! {
    static WORKER_CACHE: std::cell::RefCell<DiamondCache> =
        std::cell::RefCell::new(DiamondCache::new());
}

/// Diamond product of two words using a cache shared within the current
/// thread; sweeps over many related inputs should prefer this.
pub fn diamond_words_cached(u: &Word, v: &Word, alphabet: Alphabet) -> NcPolynomial {
    WORKER_CACHE.with(|c| c.borrow_mut().words(u, v, alphabet))
}

/// Bilinear diamond product using the per-thread cache.
pub fn diamond_cached(p: &NcPolynomial, q: &NcPolynomial) -> Result<NcPolynomial, NcError> {
    WORKER_CACHE.with(|c| c.borrow_mut().product(p, q))
}

/// Diamond product of two ab-polynomials with a throwaway cache.
pub fn diamond_ab(p: &NcPolynomial, q: &NcPolynomial) -> Result<NcPolynomial, NcError> {
    if p.alphabet() != Alphabet::Ab {
        return Err(NcError::AlphabetMismatch {
            expected: Alphabet::Ab,
            found: p.alphabet(),
        });
    }
    DiamondCache::new().product(p, q)
}

/// Diamond product of two cd-polynomials with a throwaway cache.
pub fn diamond_cd(p: &NcPolynomial, q: &NcPolynomial) -> Result<NcPolynomial, NcError> {
    if p.alphabet() != Alphabet::Cd {
        return Err(NcError::AlphabetMismatch {
            expected: Alphabet::Cd,
            found: p.alphabet(),
        });
    }
    DiamondCache::new().product(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::tests::{ab, cd, words_up_to_degree};
    use crate::ncalg::expand_cd_to_ab;
    use num_traits::Zero;

    #[test]
    fn unit_on_words() {
        assert_eq!(diamond_ab(&ab("abab"), &ab("1")).unwrap(), ab("abab"));
        assert_eq!(diamond_cd(&cd("1"), &cd("cdc")).unwrap(), cd("cdc"));
    }

    #[test]
    fn small_ab_products() {
        assert_eq!(diamond_ab(&ab("a"), &ab("a")).unwrap(), ab("aa + ab"));
        assert_eq!(diamond_ab(&ab("a"), &ab("b")).unwrap(), ab("ab + ba"));
    }

    #[test]
    fn small_cd_products() {
        assert_eq!(diamond_cd(&cd("c"), &cd("c")).unwrap(), cd("cc + 2*d"));
        assert_eq!(diamond_cd(&cd("c"), &cd("d")).unwrap(), cd("cd + 2*dc"));
        assert_eq!(diamond_cd(&cd("d"), &cd("c")).unwrap(), cd("cd + 2*dc"));
    }

    #[test]
    fn product_of_cd_and_dc() {
        let expected = cd(
            "3*cddc + ccdcc + ccdd + cdccc + 2*cdcd + 2*ddcc + 4*dcdc + 2*dccd + 4*ddd",
        );
        assert_eq!(diamond_cd(&cd("cd"), &cd("dc")).unwrap(), expected);
    }

    #[test]
    fn unit_both_sides_up_to_degree_8() {
        let mut cache = DiamondCache::new();
        for w in words_up_to_degree(Alphabet::Cd, 8) {
            let p = NcPolynomial::from_word(w.clone(), Alphabet::Cd).unwrap();
            let one = cd("1");
            assert_eq!(cache.product(&p, &one).unwrap(), p);
            assert_eq!(cache.product(&one, &p).unwrap(), p);
        }
    }

    #[test]
    fn commutative_cd_up_to_degree_5() {
        // Unnormalized keys keep the two orders independent computations;
        // the full degree-6 sweep lives in the verification suite.
        let mut cache = DiamondCache::unnormalized();
        let words = words_up_to_degree(Alphabet::Cd, 5);
        for u in &words {
            for v in &words {
                assert_eq!(
                    cache.words(u, v, Alphabet::Cd),
                    cache.words(v, u, Alphabet::Cd),
                    "u={u}, v={v}"
                );
            }
        }
    }

    #[test]
    fn associative_cd_small() {
        let mut cache = DiamondCache::new();
        let words = words_up_to_degree(Alphabet::Cd, 3);
        for u in &words {
            for v in &words {
                for w in &words {
                    let pu = NcPolynomial::from_word(u.clone(), Alphabet::Cd).unwrap();
                    let pw = NcPolynomial::from_word(w.clone(), Alphabet::Cd).unwrap();
                    let uv = cache.words(u, v, Alphabet::Cd);
                    let vw = cache.words(v, w, Alphabet::Cd);
                    let lhs = cache.product(&uv, &pw).unwrap();
                    let rhs = cache.product(&pu, &vw).unwrap();
                    assert_eq!(lhs, rhs, "u={u}, v={v}, w={w}");
                }
            }
        }
    }

    #[test]
    fn cd_product_expands_to_ab_product() {
        let mut cd_cache = DiamondCache::new();
        let mut ab_cache = DiamondCache::new();
        for u in words_up_to_degree(Alphabet::Cd, 4) {
            for v in words_up_to_degree(Alphabet::Cd, 4) {
                let lhs = expand_cd_to_ab(&cd_cache.words(&u, &v, Alphabet::Cd)).unwrap();
                let ue = expand_cd_to_ab(
                    &NcPolynomial::from_word(u.clone(), Alphabet::Cd).unwrap(),
                )
                .unwrap();
                let ve = expand_cd_to_ab(
                    &NcPolynomial::from_word(v.clone(), Alphabet::Cd).unwrap(),
                )
                .unwrap();
                let rhs = ab_cache.product(&ue, &ve).unwrap();
                assert_eq!(lhs, rhs, "u={u}, v={v}");
            }
        }
    }

    #[test]
    fn coefficients_nonnegative_and_degree_additive() {
        let mut cache = DiamondCache::new();
        for u in words_up_to_degree(Alphabet::Cd, 5) {
            for v in words_up_to_degree(Alphabet::Cd, 5) {
                let p = cache.words(&u, &v, Alphabet::Cd);
                assert!(p.is_homogeneous_of(u.degree() + v.degree()));
                for (w, c) in p.terms() {
                    assert!(*c > num_bigint::BigInt::zero(), "u={u}, v={v}, term {w}");
                }
            }
        }
    }

    #[test]
    fn rejects_mixed_alphabets() {
        assert!(diamond_ab(&ab("a"), &cd("c")).is_err());
        assert!(diamond_cd(&ab("a"), &ab("b")).is_err());
    }
}
