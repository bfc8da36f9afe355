//! Flag statistics: chain counts by rank set, their inclusion–exclusion
//! transform, and the ab- and cd-indices built from them.

use super::{GradedPoset, PosetError};
use crate::ncalg::{convert_ab_to_cd, Alphabet, Letter, NcPolynomial, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Chain counts (or their transform) indexed by subsets of the interior
/// ranks {1, ..., n}. Subsets are bitmasks: bit i-1 stands for rank i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    counts: Vec<BigInt>,
}

impl FlagVector {
    pub fn new(n: usize, counts: Vec<BigInt>) -> FlagVector {
        assert_eq!(counts.len(), 1 << n);
        FlagVector { n, counts }
    }

    /// Number of interior ranks.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, mask: usize) -> &BigInt {
        &self.counts[mask]
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Ranks in the subset, ascending.
    pub fn ranks_of(mask: usize) -> Vec<usize> {
        (0..usize::BITS as usize)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    pub fn set_name(mask: usize) -> String {
        let ranks: Vec<String> = Self::ranks_of(mask).iter().map(|r| r.to_string()).collect();
        format!("{{{}}}", ranks.join(","))
    }
}

/// Counts, for each subset S of interior ranks, the chains from bottom to
/// top whose interior ranks are exactly S. Dynamic programming over rank
/// layers; no chain is ever materialized.
pub fn flag_f_vector(poset: &GradedPoset) -> FlagVector {
    let n = poset.height().saturating_sub(1);
    let mut counts = vec![BigInt::zero(); 1 << n];
    for (mask, slot) in counts.iter_mut().enumerate() {
        let ranks = FlagVector::ranks_of(mask);
        // Start from the bottom (everything is above it).
        let mut layer: Vec<(usize, BigInt)> = vec![(poset.bottom(), BigInt::one())];
        for r in ranks {
            let mut next = Vec::new();
            for &y in poset.elements_of_rank(r) {
                let mut total = BigInt::zero();
                for (x, ways) in &layer {
                    if poset.le(*x, y) {
                        total += ways;
                    }
                }
                if !total.is_zero() {
                    next.push((y, total));
                }
            }
            layer = next;
        }
        let mut total = BigInt::zero();
        for (x, ways) in &layer {
            if poset.le(*x, poset.top()) {
                total += ways;
            }
        }
        *slot = total;
    }
    FlagVector::new(n, counts)
}

/// h_S = sum over T subset of S of (-1)^|S-T| f_T.
pub fn flag_h_vector(f: &FlagVector) -> FlagVector {
    let mut counts = f.counts.clone();
    // Signed subset-sum (Möbius) transform, one rank bit at a time.
    for bit in 0..f.n {
        for mask in 0..counts.len() {
            if mask >> bit & 1 == 1 {
                let lower = counts[mask ^ (1 << bit)].clone();
                counts[mask] -= lower;
            }
        }
    }
    FlagVector::new(f.n, counts)
}

/// Inverse relation f_S = sum over T subset of S of h_T; used to check the
/// transform round-trips.
pub fn flag_f_from_h(h: &FlagVector) -> FlagVector {
    let mut counts = h.counts.clone();
    for bit in 0..h.n {
        for mask in 0..counts.len() {
            if mask >> bit & 1 == 1 {
                let lower = counts[mask ^ (1 << bit)].clone();
                counts[mask] += lower;
            }
        }
    }
    FlagVector::new(h.n, counts)
}

/// The ab-index: sum over S of h_S u_S, where u_S has `b` exactly at the
/// ranks in S.
pub fn ab_index(poset: &GradedPoset) -> NcPolynomial {
    let h = flag_h_vector(&flag_f_vector(poset));
    let mut out = NcPolynomial::zero(Alphabet::Ab);
    for mask in 0..h.counts.len() {
        let letters: Vec<Letter> = (0..h.n)
            .map(|i| if mask >> i & 1 == 1 { Letter::B } else { Letter::A })
            .collect();
        out.add_term(Word::from_letters(letters), &h.counts[mask]);
    }
    out
}

/// The cd-index, when the ab-index lies in the span of cd-words. Fails with
/// [`PosetError::NotEulerianIndex`] otherwise (for example on non-Eulerian
/// posets).
pub fn cd_index(poset: &GradedPoset) -> Result<NcPolynomial, PosetError> {
    convert_ab_to_cd(&ab_index(poset)).map_err(|_| PosetError::NotEulerianIndex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::tests::{ab, cd};
    use crate::poset::generate::generate;
    use crate::poset::DEFAULT_MAX_ELEMENTS;

    fn fv(n: usize, pairs: &[(usize, i64)]) -> FlagVector {
        let mut counts = vec![BigInt::zero(); 1 << n];
        for &(mask, v) in pairs {
            counts[mask] = BigInt::from(v);
        }
        FlagVector::new(n, counts)
    }

    #[test]
    fn chain_of_rank_two_counts() {
        let p = generate("chain:2", DEFAULT_MAX_ELEMENTS).unwrap();
        let f = flag_f_vector(&p);
        assert_eq!(f, fv(1, &[(0b0, 1), (0b1, 1)]));
    }

    #[test]
    fn boolean_three_counts() {
        let p = generate("boolean:3", DEFAULT_MAX_ELEMENTS).unwrap();
        let f = flag_f_vector(&p);
        assert_eq!(f, fv(2, &[(0b00, 1), (0b01, 3), (0b10, 3), (0b11, 6)]));
        let h = flag_h_vector(&f);
        assert_eq!(h, fv(2, &[(0b00, 1), (0b01, 2), (0b10, 2), (0b11, 1)]));
    }

    #[test]
    fn pentagon_counts() {
        let p = generate("polygon:5", DEFAULT_MAX_ELEMENTS).unwrap();
        let f = flag_f_vector(&p);
        assert_eq!(f, fv(2, &[(0b00, 1), (0b01, 5), (0b10, 5), (0b11, 10)]));
        let h = flag_h_vector(&f);
        assert_eq!(h, fv(2, &[(0b00, 1), (0b01, 4), (0b10, 4), (0b11, 1)]));
    }

    #[test]
    fn constant_f_vector_telescopes() {
        let f = fv(2, &[(0b00, 7), (0b01, 7), (0b10, 7), (0b11, 7)]);
        let h = flag_h_vector(&f);
        assert_eq!(h, fv(2, &[(0b00, 7)]));
    }

    #[test]
    fn transform_round_trips_on_generated_posets() {
        for spec in ["boolean:4", "polygon:5", "butterfly:3", "cube:3", "chain:3"] {
            let p = generate(spec, DEFAULT_MAX_ELEMENTS).unwrap();
            let f = flag_f_vector(&p);
            let h = flag_h_vector(&f);
            assert_eq!(flag_f_from_h(&h), f, "{spec}");
        }
    }

    #[test]
    fn ab_indices_of_small_posets() {
        let b2 = generate("boolean:2", DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(ab_index(&b2), ab("a + b"));
        let b3 = generate("boolean:3", DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(ab_index(&b3), ab("aa + 2*ab + 2*ba + bb"));
        let b1 = generate("boolean:1", DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(ab_index(&b1), ab("1"));
    }

    #[test]
    fn cd_indices_of_small_posets() {
        let b3 = generate("boolean:3", DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(cd_index(&b3).unwrap(), cd("cc + d"));
        let pentagon = generate("polygon:5", DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(cd_index(&pentagon).unwrap(), cd("cc + 3*d"));
    }

    #[test]
    fn non_eulerian_poset_has_no_cd_index() {
        // A chain of rank 3 with an extra atom below the rank-2 element.
        let p = GradedPoset::new(
            vec!["b".into(), "m".into(), "a2".into(), "y".into(), "t".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
            0,
            4,
        )
        .unwrap();
        assert_eq!(cd_index(&p), Err(PosetError::NotEulerianIndex));
        // Plain chains of rank >= 2 fail too.
        let chain = generate("chain:2", DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(cd_index(&chain), Err(PosetError::NotEulerianIndex));
    }
}
