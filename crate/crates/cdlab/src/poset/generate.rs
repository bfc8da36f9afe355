//! Named poset generators: boolean lattices, butterflies, polygon and cube
//! face lattices, simplices, and chains.

use super::{diamond_product_poset, GradedPoset, PosetError};

/// Default cap on generated poset size; the CLI lets an environment
/// variable override it.
pub const DEFAULT_MAX_ELEMENTS: usize = 20_000;

/// Subsets of {1..n} ordered by inclusion; rank is cardinality.
pub fn boolean_lattice(n: usize) -> GradedPoset {
    assert!(n >= 1, "boolean lattice needs rank at least 1");
    let size = 1usize << n;
    let names: Vec<String> = (0..size).map(|mask| subset_name(mask, n)).collect();
    let mut covers = Vec::new();
    for mask in 0..size {
        for bit in 0..n {
            if mask >> bit & 1 == 0 {
                covers.push((mask, mask | 1 << bit));
            }
        }
    }
    GradedPoset::new(names, covers, 0, size - 1).expect("boolean lattice is valid")
}

fn subset_name(mask: usize, n: usize) -> String {
    let elems: Vec<String> = (0..n)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(""))
}

/// Rank n+1 with two elements at each interior rank and all relations
/// between consecutive ranks.
fn butterfly(n: usize) -> GradedPoset {
    let mut names = vec!["0".to_string()];
    for r in 1..=n {
        names.push(format!("x{r}"));
        names.push(format!("y{r}"));
    }
    names.push("1".to_string());
    let top = names.len() - 1;
    let level = |r: usize| -> Vec<usize> {
        if r == 0 {
            vec![0]
        } else if r == n + 1 {
            vec![top]
        } else {
            vec![2 * r - 1, 2 * r]
        }
    };
    let mut covers = Vec::new();
    for r in 0..=n {
        for &a in &level(r) {
            for &b in &level(r + 1) {
                covers.push((a, b));
            }
        }
    }
    GradedPoset::new(names, covers, 0, top).expect("butterfly poset is valid")
}

/// Face lattice of an m-gon: empty face, m vertices, m edges, full polygon.
fn polygon(m: usize) -> GradedPoset {
    let mut names = vec!["0".to_string()];
    for v in 0..m {
        names.push(format!("v{v}"));
    }
    for e in 0..m {
        names.push(format!("e{e}"));
    }
    names.push("1".to_string());
    let top = names.len() - 1;
    let mut covers = Vec::new();
    for v in 0..m {
        covers.push((0, 1 + v));
    }
    for e in 0..m {
        let edge = 1 + m + e;
        covers.push((1 + e, edge));
        covers.push((1 + (e + 1) % m, edge));
        covers.push((edge, top));
    }
    GradedPoset::new(names, covers, 0, top).expect("polygon face lattice is valid")
}

fn chain(n: usize) -> GradedPoset {
    let names: Vec<String> = (0..=n).map(|i| format!("c{i}")).collect();
    let covers: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
    GradedPoset::new(names, covers, 0, n).expect("chain is valid")
}

/// n-fold diamond power of the segment face lattice.
fn cube(n: usize) -> GradedPoset {
    let b2 = boolean_lattice(2);
    let mut out = b2.clone();
    for _ in 1..n {
        out = diamond_product_poset(&out, &b2);
    }
    out.with_canonical_names()
}

/// Builds the poset named by `spec`, one of:
///
/// * `boolean:n` — rank-n boolean lattice (n >= 1)
/// * `butterfly:n` — two elements per interior rank (n >= 0)
/// * `polygon:m` — m-gon face lattice (m >= 3)
/// * `cube:n` — n-cube face lattice (n >= 1)
/// * `simplex:n` — n-simplex face lattice, the rank-(n+1) boolean lattice (n >= 0)
/// * `chain:n` — the (n+1)-element chain (n >= 1)
///
/// Fails when the result would exceed `max_elements`.
pub fn generate(spec: &str, max_elements: usize) -> Result<GradedPoset, PosetError> {
    let (name, param) = spec
        .split_once(':')
        .ok_or_else(|| PosetError::UnknownSpec(spec.to_string()))?;
    let k: usize = param
        .parse()
        .map_err(|_| PosetError::UnknownSpec(spec.to_string()))?;
    let check = |size: usize| -> Result<(), PosetError> {
        if size > max_elements {
            Err(PosetError::TooLarge {
                size,
                cap: max_elements,
            })
        } else {
            Ok(())
        }
    };
    match name {
        "boolean" => {
            if !(1..=62).contains(&k) {
                return Err(PosetError::BadParameter(format!(
                    "boolean rank must be in 1..=62, got {k}"
                )));
            }
            check(1usize << k.min(62))?;
            Ok(boolean_lattice(k))
        }
        "butterfly" => {
            check(2 * k + 2)?;
            if k == 0 {
                Ok(boolean_lattice(1))
            } else {
                Ok(butterfly(k))
            }
        }
        "polygon" => {
            if k < 3 {
                return Err(PosetError::BadParameter(format!(
                    "polygon needs at least 3 vertices, got {k}"
                )));
            }
            check(2 * k + 2)?;
            Ok(polygon(k))
        }
        "cube" => {
            if k < 1 {
                return Err(PosetError::BadParameter(
                    "cube dimension must be at least 1".into(),
                ));
            }
            if k > 20 {
                return Err(PosetError::BadParameter(format!(
                    "cube dimension too large: {k}"
                )));
            }
            check(3usize.pow(k as u32) + 1)?;
            Ok(cube(k))
        }
        "simplex" => {
            if k > 61 {
                return Err(PosetError::BadParameter(format!(
                    "simplex dimension too large: {k}"
                )));
            }
            check(1usize << (k + 1))?;
            Ok(boolean_lattice(k + 1))
        }
        "chain" => {
            if k < 1 {
                return Err(PosetError::BadParameter(
                    "chain rank must be at least 1".into(),
                ));
            }
            check(k + 1)?;
            Ok(chain(k))
        }
        _ => Err(PosetError::UnknownSpec(spec.to_string())),
    }
}
