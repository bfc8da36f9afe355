//! The three-step path families over {R, U, D} with the UR factor banned,
//! and their ab- and c-power weight functions.

use super::{AxisLabeling, LatticePath, PathError, Step};
use crate::ncalg::{Alphabet, Letter, NcPolynomial, Word};
use num_bigint::BigInt;

/// The all-R horizontal path of length deg(u).
pub fn tau(u: &Word) -> LatticePath {
    LatticePath::new(vec![Step::Right; u.degree()])
}

/// All paths over {R, U, D} from (0,0) to (p,q) with no UR factor, in
/// lexicographic step order (R < U < D).
pub fn enumerate_omega(p: usize, q: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    dfs_omega(0, 0, p, q, None, &mut steps, &mut out);
    out
}

/// The same path set as [`enumerate_omega`]; only the weighting differs.
pub fn enumerate_lambda(p: usize, q: usize) -> Vec<LatticePath> {
    enumerate_omega(p, q)
}

fn dfs_omega(
    x: usize,
    y: usize,
    p: usize,
    q: usize,
    prev: Option<Step>,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
) {
    if x == p && y == q {
        out.push(LatticePath::new(steps.clone()));
        return;
    }
    // R after U is the banned factor.
    if x < p && prev != Some(Step::Up) {
        steps.push(Step::Right);
        dfs_omega(x + 1, y, p, q, Some(Step::Right), steps, out);
        steps.pop();
    }
    if y < q {
        steps.push(Step::Up);
        dfs_omega(x, y + 1, p, q, Some(Step::Up), steps, out);
        steps.pop();
    }
    if x < p && y < q {
        steps.push(Step::Diag);
        dfs_omega(x + 1, y + 1, p, q, Some(Step::Diag), steps, out);
        steps.pop();
    }
}

/// Weight of a path against ab axis labels: R copies the label below, U the
/// label at its right, and D contributes `ab` right of an `a` label and
/// `ba` right of a `b`. The result is a single word of degree x+y.
pub fn weight_ab(path: &LatticePath, labels: &AxisLabeling) -> Result<NcPolynomial, PathError> {
    let (p, q) = (labels.width(), labels.height());
    let mut letters = Vec::with_capacity(path.degree());
    let (mut x, mut y) = (0usize, 0usize);
    for (index, &step) in path.steps().iter().enumerate() {
        if x + step.dx() > p || y + step.dy() > q {
            return Err(PathError::StepOutOfRegion {
                index,
                step,
                width: p,
                height: q,
            });
        }
        match step {
            Step::Right => letters.push(labels.col(x).letter),
            Step::Up => letters.push(labels.row(y).letter),
            Step::Diag => match labels.row(y).letter {
                Letter::A => letters.extend([Letter::A, Letter::B]),
                Letter::B => letters.extend([Letter::B, Letter::A]),
                other => {
                    return Err(PathError::StepNotLegal {
                        index,
                        step,
                        reason: format!("row label '{}' is not an ab letter", other.to_char()),
                    })
                }
            },
            Step::DoubleRight | Step::DoubleUp => {
                return Err(PathError::StepNotLegal {
                    index,
                    step,
                    reason: "doubled steps are not part of this family".into(),
                })
            }
        }
        x += step.dx();
        y += step.dy();
    }
    Ok(NcPolynomial::from_word(Word::from_letters(letters), Alphabet::Ab)?)
}

/// Label-free weight for the c-power family: R and U map to c, D to 2d.
pub fn weight_lambda(path: &LatticePath) -> Result<NcPolynomial, PathError> {
    let mut letters = Vec::with_capacity(path.len());
    let mut coeff = BigInt::from(1);
    for (index, &step) in path.steps().iter().enumerate() {
        match step {
            Step::Right | Step::Up => letters.push(Letter::C),
            Step::Diag => {
                letters.push(Letter::D);
                coeff *= 2;
            }
            _ => {
                return Err(PathError::StepNotLegal {
                    index,
                    step,
                    reason: "doubled steps are not part of this family".into(),
                })
            }
        }
    }
    Ok(NcPolynomial::monomial(
        Word::from_letters(letters),
        coeff,
        Alphabet::Cd,
    )?)
}

/// Sum of ab weights over all paths in the box labeled by (u, v); equals the
/// diamond product of u and v.
pub fn sum_weights_ab(u: &Word, v: &Word) -> Result<NcPolynomial, PathError> {
    let labels = AxisLabeling::for_alphabet(u.clone(), v.clone(), Alphabet::Ab)?;
    let mut total = NcPolynomial::zero(Alphabet::Ab);
    for path in enumerate_omega(labels.width(), labels.height()) {
        total += &weight_ab(&path, &labels)?;
    }
    Ok(total)
}

/// Sum of label-free weights over all paths to (p,q); equals the diamond
/// product of the p-th and q-th powers of c.
pub fn sum_weights_lambda(p: usize, q: usize) -> NcPolynomial {
    let mut total = NcPolynomial::zero(Alphabet::Cd);
    for path in enumerate_lambda(p, q) {
        total += &weight_lambda(&path).expect("family steps are always legal");
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_word;
    use crate::ncalg::tests::{ab, cd};

    fn paths(texts: &[&str]) -> Vec<LatticePath> {
        texts.iter().map(|t| LatticePath::parse(t).unwrap()).collect()
    }

    #[test]
    fn tau_is_all_right_steps() {
        assert_eq!(tau(&parse_word("1", Alphabet::Ab).unwrap()), LatticePath::empty());
        assert_eq!(
            tau(&parse_word("ab", Alphabet::Ab).unwrap()),
            LatticePath::parse("R R").unwrap()
        );
        assert_eq!(
            tau(&parse_word("abab", Alphabet::Ab).unwrap()),
            LatticePath::parse("R R R R").unwrap()
        );
    }

    #[test]
    fn horizontal_box_has_single_path() {
        assert_eq!(enumerate_omega(3, 0), paths(&["R R R"]));
        assert_eq!(enumerate_omega(0, 2), paths(&["U U"]));
        assert_eq!(enumerate_omega(0, 0), vec![LatticePath::empty()]);
    }

    #[test]
    fn unit_box_has_two_paths() {
        assert_eq!(enumerate_omega(1, 1), paths(&["R U", "D"]));
    }

    #[test]
    fn two_by_two_box() {
        let got = enumerate_omega(2, 2);
        let mut expected = paths(&["R R U U", "D R U", "R D U", "R U D", "U D R", "D D"]);
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 6);
    }

    #[test]
    fn no_banned_factor_and_tail_shape() {
        // Every path ends in U, or in D followed only by horizontal steps.
        for path in enumerate_omega(4, 3) {
            let steps = path.steps();
            for w in steps.windows(2) {
                assert!(!(w[0] == Step::Up && w[1] == Step::Right), "{path}");
            }
            if let Some(last_nonhorizontal) =
                steps.iter().rposition(|&s| s != Step::Right)
            {
                let tail = &steps[last_nonhorizontal..];
                assert!(
                    tail[0] == Step::Up && tail.len() == 1
                        || tail[0] == Step::Diag,
                    "{path}"
                );
            }
        }
    }

    #[test]
    fn figure_style_weight_example() {
        let labels = AxisLabeling::for_alphabet(
            parse_word("abab", Alphabet::Ab).unwrap(),
            parse_word("bba", Alphabet::Ab).unwrap(),
            Alphabet::Ab,
        )
        .unwrap();
        let path = LatticePath::parse("U D R R D").unwrap();
        assert_eq!(weight_ab(&path, &labels).unwrap(), ab("bbabaab"));
    }

    #[test]
    fn horizontal_path_weight_is_the_label_word() {
        let u = parse_word("abba", Alphabet::Ab).unwrap();
        let labels = AxisLabeling::new(u.clone(), parse_word("ba", Alphabet::Ab).unwrap());
        assert_eq!(
            weight_ab(&tau(&u), &labels).unwrap(),
            NcPolynomial::from_word(u, Alphabet::Ab).unwrap()
        );
    }

    #[test]
    fn diag_at_origin_follows_row_label() {
        let labels = AxisLabeling::new(
            parse_word("a", Alphabet::Ab).unwrap(),
            parse_word("b", Alphabet::Ab).unwrap(),
        );
        let path = LatticePath::parse("D").unwrap();
        assert_eq!(weight_ab(&path, &labels).unwrap(), ab("ba"));
    }

    #[test]
    fn weight_rejects_out_of_region() {
        let labels = AxisLabeling::new(
            parse_word("a", Alphabet::Ab).unwrap(),
            parse_word("b", Alphabet::Ab).unwrap(),
        );
        let path = LatticePath::parse("R R").unwrap();
        assert!(matches!(
            weight_ab(&path, &labels),
            Err(PathError::StepOutOfRegion { index: 1, .. })
        ));
    }

    #[test]
    fn lambda_weights() {
        assert_eq!(weight_lambda(&LatticePath::parse("R U").unwrap()).unwrap(), cd("cc"));
        assert_eq!(weight_lambda(&LatticePath::parse("D").unwrap()).unwrap(), cd("2*d"));
        assert_eq!(weight_lambda(&LatticePath::parse("D D").unwrap()).unwrap(), cd("4*dd"));
    }

    #[test]
    fn small_weight_sums() {
        let a = parse_word("a", Alphabet::Ab).unwrap();
        let b = parse_word("b", Alphabet::Ab).unwrap();
        assert_eq!(sum_weights_ab(&a, &a).unwrap(), ab("aa + ab"));
        assert_eq!(sum_weights_ab(&a, &b).unwrap(), ab("ab + ba"));
        let u = parse_word("abba", Alphabet::Ab).unwrap();
        let one = Word::empty();
        assert_eq!(sum_weights_ab(&u, &one).unwrap(), ab("abba"));
        assert_eq!(sum_weights_lambda(1, 1), cd("cc + 2*d"));
    }
}
