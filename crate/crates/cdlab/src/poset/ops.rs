//! Product constructions: Cartesian product, diamond product, prism, and
//! pyramid.

use super::GradedPoset;

fn pair_name(p: &GradedPoset, q: &GradedPoset, x: usize, y: usize) -> String {
    format!("({},{})", p.name(x), q.name(y))
}

/// Cartesian product: pairs ordered componentwise. Ranks add, so the covers
/// are exactly "step one coordinate along a cover".
pub fn cartesian_product(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
    let np = p.len();
    let nq = q.len();
    let idx = |x: usize, y: usize| x * nq + y;
    let mut names = Vec::with_capacity(np * nq);
    for x in 0..np {
        for y in 0..nq {
            names.push(pair_name(p, q, x, y));
        }
    }
    let mut covers = Vec::new();
    for &(a, b) in p.covers() {
        for y in 0..nq {
            covers.push((idx(a, y), idx(b, y)));
        }
    }
    for &(a, b) in q.covers() {
        for x in 0..np {
            covers.push((idx(x, a), idx(x, b)));
        }
    }
    GradedPoset::new(
        names,
        covers,
        idx(p.bottom(), q.bottom()),
        idx(p.top(), q.top()),
    )
    .expect("product of valid posets is valid")
}

/// Diamond product: drop both bottoms, take the Cartesian product of the
/// rest, and add a fresh bottom below the atom pairs. Ranks satisfy
/// rank(x, y) = rank_P(x) + rank_Q(y) - 1.
pub fn diamond_product_poset(p: &GradedPoset, q: &GradedPoset) -> GradedPoset {
    let keep_p: Vec<usize> = (0..p.len()).filter(|&x| x != p.bottom()).collect();
    let keep_q: Vec<usize> = (0..q.len()).filter(|&y| y != q.bottom()).collect();
    let pos_p: Vec<Option<usize>> = {
        let mut v = vec![None; p.len()];
        for (i, &x) in keep_p.iter().enumerate() {
            v[x] = Some(i);
        }
        v
    };
    let pos_q: Vec<Option<usize>> = {
        let mut v = vec![None; q.len()];
        for (i, &y) in keep_q.iter().enumerate() {
            v[y] = Some(i);
        }
        v
    };
    let nq = keep_q.len();
    // Index 0 is the new bottom, pairs follow.
    let idx = |x: usize, y: usize| 1 + pos_p[x].unwrap() * nq + pos_q[y].unwrap();

    let mut names = vec!["0".to_string()];
    for &x in &keep_p {
        for &y in &keep_q {
            names.push(pair_name(p, q, x, y));
        }
    }
    let mut covers = Vec::new();
    for &(a, b) in p.covers() {
        if a == p.bottom() {
            continue;
        }
        for &y in &keep_q {
            covers.push((idx(a, y), idx(b, y)));
        }
    }
    for &(a, b) in q.covers() {
        if a == q.bottom() {
            continue;
        }
        for &x in &keep_p {
            covers.push((idx(x, a), idx(x, b)));
        }
    }
    // The minimal pairs are (atom of P, atom of Q); the new bottom sits
    // under exactly those.
    for &x in p.elements_of_rank(1) {
        for &y in q.elements_of_rank(1) {
            covers.push((0, idx(x, y)));
        }
    }
    GradedPoset::new(names, covers, 0, idx(p.top(), q.top()))
        .expect("diamond product of valid posets is valid")
}

/// Prism at poset level: the diamond product with the rank-2 boolean
/// lattice (the face lattice of a segment).
pub fn prism_poset(p: &GradedPoset) -> GradedPoset {
    let b2 = super::generate::boolean_lattice(2);
    diamond_product_poset(p, &b2)
}

/// Pyramid at poset level: the Cartesian product with the rank-1 two-chain
/// (the free join with a point).
pub fn pyramid_poset(p: &GradedPoset) -> GradedPoset {
    let b1 = super::generate::boolean_lattice(1);
    cartesian_product(p, &b1)
}

/// True when the two posets have an order-preserving bijection matching
/// ranks; used in tests to compare constructions. Elements are matched by a
/// simple backtracking search on rank layers, so keep the inputs small.
#[allow(clippy::needless_range_loop)] // the mapping array is indexed by element id
pub fn isomorphic(p: &GradedPoset, q: &GradedPoset) -> bool {
    if p.len() != q.len() || p.height() != q.height() {
        return false;
    }
    for r in 0..=p.height() {
        if p.elements_of_rank(r).len() != q.elements_of_rank(r).len() {
            return false;
        }
    }
    let mut map = vec![usize::MAX; p.len()];
    fn extend(
        p: &GradedPoset,
        q: &GradedPoset,
        rank: usize,
        within: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if rank > p.height() {
            return true;
        }
        let layer = p.elements_of_rank(rank);
        if within == layer.len() {
            return extend(p, q, rank + 1, 0, map, used);
        }
        let x = layer[within];
        'candidate: for &y in q.elements_of_rank(rank) {
            if used[y] {
                continue;
            }
            // Consistency against everything already mapped.
            for z in 0..p.len() {
                if map[z] != usize::MAX
                    && (p.le(z, x) != q.le(map[z], y) || p.le(x, z) != q.le(y, map[z]))
                {
                    continue 'candidate;
                }
            }
            map[x] = y;
            used[y] = true;
            if extend(p, q, rank, within + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    let mut used = vec![false; q.len()];
    extend(p, q, 0, 0, &mut map, &mut used)
}
