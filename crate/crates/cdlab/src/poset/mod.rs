//! Finite bounded graded posets stored by cover relations, with flag
//! statistics, the Möbius function, Eulerian testing, standard generators,
//! and the product constructions.

mod flag;
mod generate;
mod json;
mod ops;

pub use flag::{ab_index, cd_index, flag_f_from_h, flag_f_vector, flag_h_vector, FlagVector};
pub use generate::{generate, DEFAULT_MAX_ELEMENTS};
pub use ops::{cartesian_product, diamond_product_poset, isomorphic, prism_poset, pyramid_poset};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PosetError {
    #[error("poset is invalid: {0}")]
    Invalid(String),
    #[error("elements {0} and {1} are incomparable")]
    Incomparable(String, String),
    #[error("unknown generator spec {0:?}")]
    UnknownSpec(String),
    #[error("generator parameter out of range: {0}")]
    BadParameter(String),
    #[error("poset would have {size} elements, above the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("ab-index is not expressible in c and d")]
    NotEulerianIndex,
}

/// A finite bounded graded poset. Elements are indexed densely; covers are
/// pairs (lower, upper) that each raise rank by exactly one. Order tests use
/// a precomputed reachability bitset.
#[derive(Debug, Clone)]
pub struct GradedPoset {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    rank: Vec<usize>,
    bottom: usize,
    top: usize,
    /// names/ranks of elements at each rank, for layered sweeps.
    by_rank: Vec<Vec<usize>>,
    /// reach[x] bit y set iff x <= y.
    reach: Vec<Vec<u64>>,
}

fn bit_get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

impl GradedPoset {
    /// Builds and validates a poset from named elements and cover pairs.
    /// Ranks are inferred from the bottom element and checked for
    /// gradedness, a unique minimum, and a unique maximum.
    #[allow(clippy::needless_range_loop)] // parallel arrays indexed by element id
    pub fn new(
        names: Vec<String>,
        covers: Vec<(usize, usize)>,
        bottom: usize,
        top: usize,
    ) -> Result<GradedPoset, PosetError> {
        let n = names.len();
        if n == 0 {
            return Err(PosetError::Invalid("no elements".into()));
        }
        if bottom >= n || top >= n {
            return Err(PosetError::Invalid("bottom/top index out of range".into()));
        }
        if bottom == top {
            return Err(PosetError::Invalid(
                "bottom and top must be distinct (rank at least 1)".into(),
            ));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for name in &names {
                if !seen.insert(name) {
                    return Err(PosetError::Invalid(format!("duplicate element {name:?}")));
                }
            }
        }
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(PosetError::Invalid("cover index out of range".into()));
            }
            if a == b {
                return Err(PosetError::Invalid(format!("self-cover on {:?}", names[a])));
            }
        }

        // Rank assignment by breadth-first propagation from the bottom: a
        // cover must raise rank by exactly 1, which also rules out cycles.
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut has_lower = vec![false; n];
        let mut has_upper = vec![false; n];
        for &(a, b) in &covers {
            up[a].push(b);
            has_lower[b] = true;
            has_upper[a] = true;
        }
        for x in 0..n {
            if x != bottom && !has_lower[x] {
                return Err(PosetError::Invalid(format!(
                    "element {:?} has no lower cover but is not the bottom",
                    names[x]
                )));
            }
            if x != top && !has_upper[x] {
                return Err(PosetError::Invalid(format!(
                    "element {:?} has no upper cover but is not the top",
                    names[x]
                )));
            }
        }
        if has_lower[bottom] {
            return Err(PosetError::Invalid("bottom has a lower cover".into()));
        }
        if has_upper[top] {
            return Err(PosetError::Invalid("top has an upper cover".into()));
        }

        let mut rank = vec![usize::MAX; n];
        rank[bottom] = 0;
        let mut queue = std::collections::VecDeque::from([bottom]);
        while let Some(x) = queue.pop_front() {
            for &y in &up[x] {
                if rank[y] == usize::MAX {
                    rank[y] = rank[x] + 1;
                    queue.push_back(y);
                } else if rank[y] != rank[x] + 1 {
                    return Err(PosetError::Invalid(format!(
                        "cover {:?} -> {:?} does not raise rank by one",
                        names[x], names[y]
                    )));
                }
            }
        }
        if rank.contains(&usize::MAX) {
            return Err(PosetError::Invalid(
                "some element is not reachable from the bottom".into(),
            ));
        }
        let top_rank = rank[top];
        if rank.iter().any(|&r| r > top_rank) {
            return Err(PosetError::Invalid("an element outranks the top".into()));
        }

        let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); top_rank + 1];
        for x in 0..n {
            by_rank[rank[x]].push(x);
        }
        if by_rank[0] != vec![bottom] || by_rank[top_rank] != vec![top] {
            return Err(PosetError::Invalid(
                "minimum or maximum is not unique".into(),
            ));
        }

        // Reachability, processed from the top rank downward.
        let blocks = n.div_ceil(64);
        let mut reach = vec![vec![0u64; blocks]; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(rank[x]));
        for x in order {
            bit_set(&mut reach[x], x);
            for i in 0..up[x].len() {
                let y = up[x][i];
                let (rx, ry) = if x < y {
                    let (lo, hi) = reach.split_at_mut(y);
                    (&mut lo[x], &hi[0])
                } else {
                    let (lo, hi) = reach.split_at_mut(x);
                    (&mut hi[0], &lo[y])
                };
                for (bx, by) in rx.iter_mut().zip(ry.iter()) {
                    *bx |= by;
                }
            }
        }

        Ok(GradedPoset {
            names,
            covers,
            rank,
            bottom,
            top,
            by_rank,
            reach,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// Rank of the whole poset (the rank of the top element).
    pub fn height(&self) -> usize {
        self.rank[self.top]
    }

    pub fn elements_of_rank(&self, r: usize) -> &[usize] {
        self.by_rank.get(r).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Order test x <= y.
    pub fn le(&self, x: usize, y: usize) -> bool {
        bit_get(&self.reach[x], y)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Möbius function on the interval [x, y].
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, PosetError> {
        if !self.le(x, y) {
            return Err(PosetError::Incomparable(
                self.names[x].clone(),
                self.names[y].clone(),
            ));
        }
        Ok(self.mobius_row(x)[y])
    }

    /// mu(x, z) for every z >= x, zeros elsewhere.
    #[allow(clippy::needless_range_loop)]
    fn mobius_row(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        mu[x] = 1;
        for r in self.rank[x] + 1..=self.height() {
            for &z in &self.by_rank[r] {
                if !self.le(x, z) {
                    continue;
                }
                let mut sum = 0i64;
                for below in 0..self.len() {
                    if self.rank[below] < r && self.le(x, below) && self.le(below, z) && below != z
                    {
                        sum += mu[below];
                    }
                }
                mu[z] = -sum;
            }
        }
        mu
    }

    /// True iff mu(x, y) = (-1)^(rank difference) on every interval.
    #[allow(clippy::needless_range_loop)]
    pub fn is_eulerian(&self) -> bool {
        for x in 0..self.len() {
            let mu = self.mobius_row(x);
            for y in 0..self.len() {
                if self.le(x, y) {
                    let expected = if (self.rank[y] - self.rank[x]).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    };
                    if mu[y] != expected {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Relabels elements with fresh short names (e0, e1, ...).
    pub fn with_canonical_names(&self) -> GradedPoset {
        let names = (0..self.len()).map(|i| format!("e{i}")).collect();
        GradedPoset {
            names,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::generate::generate;

    fn chain_with_extra_atom() -> GradedPoset {
        // 0 < m < y < 1 plus a second atom under y only: not graded-safe?
        // It is graded (atom rank 1, y rank 2) but fails the Eulerian test.
        GradedPoset::new(
            vec!["bot".into(), "m".into(), "a2".into(), "y".into(), "tp".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
            0,
            4,
        )
        .unwrap()
    }

    #[test]
    fn boolean_lattices_are_eulerian() {
        for n in 1..=5 {
            let p = generate(&format!("boolean:{n}"), DEFAULT_MAX_ELEMENTS).unwrap();
            assert!(p.is_eulerian(), "rank {n}");
        }
    }

    #[test]
    fn hexagon_is_eulerian() {
        let p = generate("polygon:6", DEFAULT_MAX_ELEMENTS).unwrap();
        assert!(p.is_eulerian());
    }

    #[test]
    fn doubled_atom_chain_is_not_eulerian() {
        assert!(!chain_with_extra_atom().is_eulerian());
    }

    #[test]
    fn mobius_small_values() {
        let b3 = generate("boolean:3", DEFAULT_MAX_ELEMENTS).unwrap();
        let bot = b3.bottom();
        let top = b3.top();
        assert_eq!(b3.mobius(bot, bot).unwrap(), 1);
        assert_eq!(b3.mobius(bot, top).unwrap(), -1);
        let atom = b3.elements_of_rank(1)[0];
        assert_eq!(b3.mobius(bot, atom).unwrap(), -1);
    }

    #[test]
    fn mobius_rejects_incomparable_pairs() {
        let b2 = generate("boolean:2", DEFAULT_MAX_ELEMENTS).unwrap();
        let atoms = b2.elements_of_rank(1);
        assert!(matches!(
            b2.mobius(atoms[0], atoms[1]),
            Err(PosetError::Incomparable(..))
        ));
    }

    #[test]
    fn validation_rejects_ungraded_covers() {
        // bottom -> x -> top and bottom -> top directly: top would need two ranks.
        let err = GradedPoset::new(
            vec!["b".into(), "x".into(), "t".into()],
            vec![(0, 1), (1, 2), (0, 2)],
            0,
            2,
        );
        assert!(matches!(err, Err(PosetError::Invalid(_))));
    }

    #[test]
    fn validation_rejects_two_minima() {
        let err = GradedPoset::new(
            vec!["b".into(), "b2".into(), "t".into()],
            vec![(0, 2), (1, 2)],
            0,
            2,
        );
        assert!(matches!(err, Err(PosetError::Invalid(_))));
    }

    #[test]
    fn order_tests_follow_covers() {
        let b3 = generate("boolean:3", DEFAULT_MAX_ELEMENTS).unwrap();
        for x in 0..b3.len() {
            assert!(b3.le(b3.bottom(), x));
            assert!(b3.le(x, b3.top()));
            assert!(b3.le(x, x));
        }
        let atoms = b3.elements_of_rank(1);
        assert!(!b3.le(atoms[0], atoms[1]));
    }
}
