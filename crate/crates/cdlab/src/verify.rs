//! Exhaustive verification sweeps with bounded degrees. Each suite checks
//! an identity on every instance within its bounds and reports the number
//! of checks, any mismatches, and the wall time. Sweeps fan out across
//! worker threads when the `parallel` feature is on; outputs are sorted, so
//! results do not depend on the thread count.

use crate::coalg::{coproduct_word, derivation_g, pyr, pyr_word};
use crate::diamond::{diamond_cached, diamond_words_cached, DiamondCache};
use crate::latpaths::{enumerate_lambda, sum_weights_ab, sum_weights_cd, weight_lambda};
use crate::ncalg::{expand_cd_to_ab, Alphabet, Letter, NcPolynomial, TensorPolynomial, Word};
use crate::poset::{
    ab_index, cartesian_product, cd_index, diamond_product_poset, generate, prism_poset,
    pyramid_poset, GradedPoset, DEFAULT_MAX_ELEMENTS,
};
use serde::Serialize;
use std::time::{Duration, Instant};

/// Outcome of one verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub checked: u64,
    pub mismatches: Vec<String>,
    #[serde(serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn sweep<T, F>(suite: &str, items: Vec<T>, check: F) -> SweepReport
where
    T: Send + Sync,
    F: Fn(&T) -> Option<String> + Send + Sync,
{
    let start = Instant::now();
    let checked = items.len() as u64;
    #[cfg(feature = "parallel")]
    let mut mismatches: Vec<String> = {
        use rayon::prelude::*;
        items.par_iter().filter_map(check).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut mismatches: Vec<String> = items.iter().filter_map(|t| check(t)).collect();
    mismatches.sort();
    SweepReport {
        suite: suite.to_string(),
        checked,
        mismatches,
        elapsed: start.elapsed(),
    }
}

fn words_up_to(alphabet: Alphabet, max_deg: usize) -> Vec<Word> {
    fn extend(alphabet: Alphabet, w: Word, max: usize, out: &mut Vec<Word>) {
        out.push(w.clone());
        let letters: &[Letter] = match alphabet {
            Alphabet::Ab => &[Letter::A, Letter::B],
            Alphabet::Cd => &[Letter::C, Letter::D],
        };
        for &l in letters {
            if w.degree() + l.degree() <= max {
                extend(alphabet, w.append(l), max, out);
            }
        }
    }
    let mut out = Vec::new();
    extend(alphabet, Word::empty(), max_deg, &mut out);
    out.sort();
    out
}

fn pairs(words: &[Word]) -> Vec<(Word, Word)> {
    let mut out = Vec::with_capacity(words.len() * words.len());
    for u in words {
        for v in words {
            out.push((u.clone(), v.clone()));
        }
    }
    out
}

fn word_poly(w: &Word, alphabet: Alphabet) -> NcPolynomial {
    NcPolynomial::from_word(w.clone(), alphabet).expect("word fits alphabet")
}

/// Path-sum versus recursion for ab-words up to the given degrees.
pub fn verify_thm42(max_u: usize, max_v: usize) -> SweepReport {
    let items = {
        let us = words_up_to(Alphabet::Ab, max_u);
        let vs = words_up_to(Alphabet::Ab, max_v);
        let mut out = Vec::new();
        for u in &us {
            for v in &vs {
                out.push((u.clone(), v.clone()));
            }
        }
        out
    };
    sweep("thm42", items, |(u, v)| {
        let by_paths = sum_weights_ab(u, v).expect("ab labels");
        let by_recursion = diamond_words_cached(u, v, Alphabet::Ab);
        if by_paths == by_recursion {
            None
        } else {
            Some(format!(
                "u={u}, v={v}: paths gave {by_paths}, recursion gave {by_recursion}"
            ))
        }
    })
}

/// Path-sum versus recursion for cd-words up to the given degrees.
pub fn verify_thm52(max_u: usize, max_v: usize) -> SweepReport {
    let items = {
        let us = words_up_to(Alphabet::Cd, max_u);
        let vs = words_up_to(Alphabet::Cd, max_v);
        let mut out = Vec::new();
        for u in &us {
            for v in &vs {
                out.push((u.clone(), v.clone()));
            }
        }
        out
    };
    sweep("thm52", items, |(u, v)| {
        let by_paths = sum_weights_cd(u, v).expect("cd labels");
        let by_recursion = diamond_words_cached(u, v, Alphabet::Cd);
        if by_paths == by_recursion {
            None
        } else {
            Some(format!(
                "u={u}, v={v}: paths gave {by_paths}, recursion gave {by_recursion}"
            ))
        }
    })
}

/// Label-free path sums versus products of powers of c, for p, q <= max.
pub fn verify_slone(max: usize) -> SweepReport {
    let items: Vec<(usize, usize)> = (0..=max)
        .flat_map(|p| (0..=max).map(move |q| (p, q)))
        .collect();
    sweep("slone", items, |&(p, q)| {
        let mut total = NcPolynomial::zero(Alphabet::Cd);
        for path in enumerate_lambda(p, q) {
            total += &weight_lambda(&path).expect("family steps");
        }
        let cp = Word::power(Letter::C, p);
        let cq = Word::power(Letter::C, q);
        let product = diamond_words_cached(&cp, &cq, Alphabet::Cd);
        if total == product {
            None
        } else {
            Some(format!("p={p}, q={q}: paths gave {total}, product is {product}"))
        }
    })
}

/// The poset family used by the poset-level product sweeps.
pub fn poset_family(specs: &[&str]) -> Vec<(String, GradedPoset)> {
    specs
        .iter()
        .map(|s| {
            (
                s.to_string(),
                generate(s, DEFAULT_MAX_ELEMENTS).expect("family spec is valid"),
            )
        })
        .collect()
}

pub const PROP32_FAMILY: [&str; 10] = [
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "polygon:3",
    "polygon:4",
    "polygon:5",
    "polygon:6",
    "cube:3",
    "butterfly:2",
    "butterfly:3",
];

pub const LEE_FAMILY: [&str; 5] = ["boolean:2", "boolean:3", "polygon:3", "polygon:4", "polygon:5"];

/// Poset-level check: the cd-index of a diamond product equals the diamond
/// product of the cd-indices.
pub fn verify_prop32() -> SweepReport {
    let family = poset_family(&PROP32_FAMILY);
    let items: Vec<(usize, usize)> = (0..family.len())
        .flat_map(|i| (0..family.len()).map(move |j| (i, j)))
        .collect();
    sweep("prop32", items, |&(i, j)| {
        let (ref ni, ref p) = family[i];
        let (ref nj, ref q) = family[j];
        let product_poset = diamond_product_poset(p, q);
        let lhs = cd_index(&product_poset).expect("diamond of face lattices is Eulerian");
        let rhs = diamond_cached(&cd_index(p).expect("Eulerian"), &cd_index(q).expect("Eulerian"))
            .expect("cd alphabets");
        if lhs == rhs {
            None
        } else {
            Some(format!("P={ni}, Q={nj}: poset gave {lhs}, polynomials gave {rhs}"))
        }
    })
}

/// The product identity relating Cartesian products, pyramids, and prisms,
/// checked from flag vectors alone, plus the pyramid/operator consistency
/// checks for the same family.
pub fn verify_lee() -> SweepReport {
    let family = poset_family(&LEE_FAMILY);
    enum Item {
        Pair(usize, usize),
        Pyramid(usize),
    }
    let mut items = Vec::new();
    for i in 0..family.len() {
        items.push(Item::Pyramid(i));
        for j in 0..family.len() {
            items.push(Item::Pair(i, j));
        }
    }
    sweep("lee", items, |item| match *item {
        Item::Pyramid(i) => {
            let (ref name, ref p) = family[i];
            let lhs = cd_index(&pyramid_poset(p)).expect("pyramid of Eulerian is Eulerian");
            let rhs = pyr(&cd_index(p).expect("Eulerian")).expect("cd");
            if lhs == rhs {
                None
            } else {
                Some(format!(
                    "pyramid of {name}: poset gave {lhs}, operator gave {rhs}"
                ))
            }
        }
        Item::Pair(i, j) => {
            let (ref ni, ref p) = family[i];
            let (ref nj, ref q) = family[j];
            let cartesian = ab_index(&cartesian_product(p, q));
            let term1 = ab_index(&diamond_product_poset(&pyramid_poset(p), q));
            let term2 = ab_index(&diamond_product_poset(p, &pyramid_poset(q)));
            let term3 = ab_index(&prism_poset(&diamond_product_poset(p, q)));
            let rhs = &(&term1 + &term2) - &term3;
            if cartesian != rhs {
                return Some(format!(
                    "P={ni}, Q={nj}: product index {cartesian} but combination {rhs}"
                ));
            }
            // Same statement after rewriting every side in c and d.
            let to_cd = |p: &NcPolynomial| crate::ncalg::convert_ab_to_cd(p).expect("Eulerian");
            let lhs_cd = to_cd(&cartesian);
            let rhs_cd = &(&to_cd(&term1) + &to_cd(&term2)) - &to_cd(&term3);
            if lhs_cd != rhs_cd {
                return Some(format!("P={ni}, Q={nj}: cd forms differ"));
            }
            None
        }
    })
}

/// Coalgebra laws: the Newtonian identity on both alphabets, agreement of
/// the cd coproduct with the ab coproduct under expansion, the derivation
/// product rule, and the degree step of Pyr.
pub fn verify_coalgebra(max_newtonian: usize, max_compat: usize) -> SweepReport {
    enum Item {
        Newtonian(Alphabet, Word, Word),
        Compat(Word),
        Derivation(Alphabet, Word, Word),
        PyrDegree(Word),
    }
    let mut items = Vec::new();
    for alphabet in [Alphabet::Ab, Alphabet::Cd] {
        for (u, v) in pairs(&words_up_to(alphabet, max_newtonian)) {
            items.push(Item::Newtonian(alphabet, u.clone(), v.clone()));
            items.push(Item::Derivation(alphabet, u, v));
        }
    }
    for w in words_up_to(Alphabet::Cd, max_compat) {
        items.push(Item::Compat(w.clone()));
        items.push(Item::PyrDegree(w));
    }
    sweep("coalgebra", items, |item| match item {
        Item::Newtonian(alphabet, u, v) => {
            let product = u.concat(v);
            let lhs = coproduct_word(&product, *alphabet);
            let rhs = &coproduct_word(u, *alphabet).mul_second_right(v)
                + &coproduct_word(v, *alphabet).mul_first_left(u);
            (lhs != rhs).then(|| format!("coproduct of {u}.{v} is not Newtonian"))
        }
        Item::Derivation(alphabet, u, v) => {
            let pu = word_poly(u, *alphabet);
            let pv = word_poly(v, *alphabet);
            let lhs = derivation_g(&(&pu * &pv));
            let rhs = &(&derivation_g(&pu) * &pv) + &(&pu * &derivation_g(&pv));
            (lhs != rhs).then(|| format!("product rule fails on {u}, {v}"))
        }
        Item::Compat(w) => {
            let via_cd = crate::coalg::coproduct_cd_word(w);
            let mut expanded = TensorPolynomial::zero(Alphabet::Ab);
            for ((l, r), c) in via_cd.terms() {
                let le = crate::ncalg::expand_word_cd_to_ab(l);
                let re = crate::ncalg::expand_word_cd_to_ab(r);
                for (lw, lc) in le.terms() {
                    for (rw, rc) in re.terms() {
                        expanded.add_term(lw.clone(), rw.clone(), &(c * lc * rc));
                    }
                }
            }
            let direct = crate::coalg::coproduct_ab(
                &expand_cd_to_ab(&word_poly(w, Alphabet::Cd)).expect("cd"),
            )
            .expect("ab");
            (expanded != direct).then(|| format!("cd and ab coproducts disagree on {w}"))
        }
        Item::PyrDegree(w) => {
            let image = pyr_word(w);
            (!image.is_homogeneous_of(w.degree() + 1))
                .then(|| format!("pyramid operator does not raise degree on {w}"))
        }
    })
}

/// Algebraic properties of the diamond product: unit, commutativity,
/// associativity, ab/cd consistency, nonnegativity, and the ab <-> cd round
/// trip.
pub fn verify_diamond_props() -> SweepReport {
    enum Item {
        Unit(Word),
        CommCd(Word, Word),
        CommAb(Word, Word),
        Assoc(Word, Word, Word),
        Consistency(Word, Word),
        Nonneg(Word, Word),
        RoundTrip(Word),
    }
    let mut items = Vec::new();
    for w in words_up_to(Alphabet::Cd, 8) {
        items.push(Item::Unit(w.clone()));
        items.push(Item::RoundTrip(w));
    }
    for (u, v) in pairs(&words_up_to(Alphabet::Cd, 6)) {
        items.push(Item::CommCd(u.clone(), v.clone()));
        items.push(Item::Nonneg(u, v));
    }
    for (u, v) in pairs(&words_up_to(Alphabet::Ab, 5)) {
        items.push(Item::CommAb(u, v));
    }
    let small = words_up_to(Alphabet::Cd, 3);
    for u in &small {
        for v in &small {
            for w in &small {
                items.push(Item::Assoc(u.clone(), v.clone(), w.clone()));
            }
        }
    }
    for (u, v) in pairs(&words_up_to(Alphabet::Cd, 5)) {
        items.push(Item::Consistency(u, v));
    }
    // Ordered keys keep u<>v and v<>u independent computations while still
    // sharing subproducts across the sweep.
    thread_local! {
        static ORDERED: std::cell::RefCell<DiamondCache> =
            std::cell::RefCell::new(DiamondCache::unnormalized());
    }
    let ordered_product =
        |u: &Word, v: &Word, alphabet: Alphabet| ORDERED.with(|c| c.borrow_mut().words(u, v, alphabet));
    sweep("diamond-props", items, |item| match item {
        Item::Unit(w) => {
            let one = Word::empty();
            let left = ordered_product(&one, w, Alphabet::Cd);
            let right = ordered_product(w, &one, Alphabet::Cd);
            let expected = word_poly(w, Alphabet::Cd);
            (left != expected || right != expected).then(|| format!("unit fails on {w}"))
        }
        Item::CommCd(u, v) => {
            let lhs = ordered_product(u, v, Alphabet::Cd);
            let rhs = ordered_product(v, u, Alphabet::Cd);
            (lhs != rhs).then(|| format!("cd product not symmetric on {u}, {v}"))
        }
        Item::CommAb(u, v) => {
            let lhs = ordered_product(u, v, Alphabet::Ab);
            let rhs = ordered_product(v, u, Alphabet::Ab);
            (lhs != rhs).then(|| format!("ab product not symmetric on {u}, {v}"))
        }
        Item::Assoc(u, v, w) => {
            let uv = diamond_words_cached(u, v, Alphabet::Cd);
            let vw = diamond_words_cached(v, w, Alphabet::Cd);
            let lhs = diamond_cached(&uv, &word_poly(w, Alphabet::Cd)).expect("cd");
            let rhs = diamond_cached(&word_poly(u, Alphabet::Cd), &vw).expect("cd");
            (lhs != rhs).then(|| format!("associativity fails on {u}, {v}, {w}"))
        }
        Item::Consistency(u, v) => {
            let lhs = expand_cd_to_ab(&diamond_words_cached(u, v, Alphabet::Cd)).expect("cd");
            let ue = expand_cd_to_ab(&word_poly(u, Alphabet::Cd)).expect("cd");
            let ve = expand_cd_to_ab(&word_poly(v, Alphabet::Cd)).expect("cd");
            let rhs = diamond_cached(&ue, &ve).expect("ab");
            (lhs != rhs).then(|| format!("ab and cd products disagree on {u}, {v}"))
        }
        Item::Nonneg(u, v) => {
            use num_traits::Zero;
            let p = diamond_words_cached(u, v, Alphabet::Cd);
            let ok = p.terms().all(|(_, c)| *c > num_bigint::BigInt::zero())
                && p.is_homogeneous_of(u.degree() + v.degree());
            (!ok).then(|| format!("product of {u}, {v} has a bad coefficient"))
        }
        Item::RoundTrip(w) => {
            let p = word_poly(w, Alphabet::Cd);
            let back = crate::ncalg::convert_ab_to_cd(&expand_cd_to_ab(&p).expect("cd"));
            (back != Ok(p)).then(|| format!("round trip fails on {w}"))
        }
    })
}

/// The suites reachable from the command line, with their default bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Thm42,
    Thm52,
    Slone,
    Prop32,
    Lee,
    Coalgebra,
    DiamondProps,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Thm42,
        Suite::Thm52,
        Suite::Slone,
        Suite::Prop32,
        Suite::Lee,
        Suite::Coalgebra,
        Suite::DiamondProps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm42 => "thm42",
            Suite::Thm52 => "thm52",
            Suite::Slone => "slone",
            Suite::Prop32 => "prop32",
            Suite::Lee => "lee",
            Suite::Coalgebra => "coalgebra",
            Suite::DiamondProps => "diamond-props",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Runs the suite. `max_u`/`max_v` bound word degrees where that makes
    /// sense; `max` bounds the (p, q) grid for the c-power suite.
    pub fn run(self, max_u: Option<usize>, max_v: Option<usize>, max: Option<usize>) -> SweepReport {
        match self {
            Suite::Thm42 => verify_thm42(max_u.unwrap_or(5), max_v.unwrap_or(5)),
            Suite::Thm52 => verify_thm52(max_u.unwrap_or(6), max_v.unwrap_or(6)),
            Suite::Slone => verify_slone(max.unwrap_or(8)),
            Suite::Prop32 => verify_prop32(),
            Suite::Lee => verify_lee(),
            Suite::Coalgebra => verify_coalgebra(max_u.unwrap_or(5), max_v.unwrap_or(6)),
            Suite::DiamondProps => verify_diamond_props(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latpaths::{enumerate_gamma, weight_cd, AxisLabeling};

    /// Every enumerated path weight must be a single word of full degree
    /// times a power of two.
    fn gamma_weights_are_single_words(u: &Word, v: &Word) -> bool {
        let labels = match AxisLabeling::for_alphabet(u.clone(), v.clone(), Alphabet::Cd) {
            Ok(l) => l,
            Err(_) => return false,
        };
        enumerate_gamma(&labels).iter().all(|path| {
            let w = weight_cd(path, &labels).expect("enumerated path");
            w.num_terms() == 1 && {
                let (word, coeff) = w.terms().next().expect("one term");
                word.degree() == labels.width() + labels.height()
                    && coeff
                        .clone()
                        .try_into()
                        .map(u64::is_power_of_two)
                        .unwrap_or(false)
            }
        })
    }

    #[test]
    fn small_sweeps_pass() {
        assert!(verify_thm42(3, 3).ok());
        assert!(verify_thm52(4, 4).ok());
        assert!(verify_slone(4).ok());
        assert!(verify_coalgebra(3, 4).ok());
    }

    #[test]
    fn reports_count_instances() {
        // 2^0 + 2^1 + 2^2 = 7 ab-words of degree <= 2; 49 ordered pairs.
        let report = verify_thm42(2, 2);
        assert_eq!(report.checked, 49);
        assert_eq!(report.suite, "thm42");
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()), Some(suite));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn gamma_weight_shape_invariant() {
        for (u, v) in pairs(&words_up_to(Alphabet::Cd, 4)) {
            assert!(gamma_weights_are_single_words(&u, &v), "u={u}, v={v}");
        }
    }

    #[test]
    fn report_serializes_with_elapsed_millis() {
        let report = verify_slone(1);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"suite\":\"slone\""));
        assert!(json.contains("\"elapsed\""));
    }

    #[test]
    fn flag_transform_inverse_on_family() {
        use crate::poset::{flag_f_from_h, flag_f_vector, flag_h_vector};
        for (name, poset) in poset_family(&LEE_FAMILY) {
            let f = flag_f_vector(&poset);
            let h = flag_h_vector(&f);
            assert_eq!(flag_f_from_h(&h), f, "{name}");
        }
    }
}
