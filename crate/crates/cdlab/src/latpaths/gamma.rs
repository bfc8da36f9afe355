//! The five-step path family for cd axis labels.
//!
//! Paths go from the origin to the labeled box corner and must avoid the
//! factors UR, U RR, UU R, and UU RR. Relative to the labeling, four more
//! rules apply:
//!
//! 1. No U step across the bottom row of a vertical `d` label.
//! 2. A single R step may cross either half of a horizontal `d` label, but
//!    not two consecutive R steps across the two halves of the same label.
//! 3. A UU step must cover exactly the two rows of one vertical `d`; an RR
//!    step must cover exactly the two columns of one horizontal `d`.
//! 4. While the path runs through the top row of a vertical `d` (reachable
//!    only by a D step across its bottom row), a D step over the first half
//!    of a horizontal `d` immediately followed by an R step is not allowed.
//!
//! The weight of a D step is k*d, where k is 2 exactly when the step sits
//! right of the bottom of the vertical word's progress in one of the three
//! configurations below, and 1 otherwise.

use super::{AxisLabeling, CellPart, LatticePath, PathError, Step};
use crate::ncalg::{Alphabet, Letter, NcPolynomial, Word};
use num_bigint::BigInt;

/// Horizontal path reading a cd-word: c becomes R, d becomes RR.
pub fn pi(u: &Word) -> LatticePath {
    let mut steps = Vec::with_capacity(u.len());
    for &l in u.letters() {
        steps.push(match l {
            Letter::D => Step::DoubleRight,
            _ => Step::Right,
        });
    }
    LatticePath::new(steps)
}

/// All paths admitted by the labeling, in lexicographic step order
/// (R < U < D < RR < UU).
pub fn enumerate_gamma(labels: &AxisLabeling) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    let state = DfsState {
        x: 0,
        y: 0,
        prev: None,
        ban_r: false,
    };
    dfs_gamma(labels, state, &mut steps, &mut out);
    out
}

#[derive(Clone, Copy)]
struct DfsState {
    x: usize,
    y: usize,
    prev: Option<Step>,
    /// Set when the previous step was a D through the top row of a vertical
    /// `d` sitting over the first half of a horizontal `d` (rule 4).
    ban_r: bool,
}

fn dfs_gamma(
    labels: &AxisLabeling,
    state: DfsState,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
) {
    let (p, q) = (labels.width(), labels.height());
    let DfsState { x, y, prev, ban_r } = state;
    if x == p && y == q {
        out.push(LatticePath::new(steps.clone()));
        return;
    }
    let after_up = matches!(prev, Some(Step::Up) | Some(Step::DoubleUp));

    // R
    if x < p && !after_up && !ban_r {
        let two_r_on_one_d =
            prev == Some(Step::Right) && x >= 1 && labels.cols_are_one_d(x - 1);
        if !two_r_on_one_d {
            steps.push(Step::Right);
            dfs_gamma(
                labels,
                DfsState {
                    x: x + 1,
                    y,
                    prev: Some(Step::Right),
                    ban_r: false,
                },
                steps,
                out,
            );
            steps.pop();
        }
    }
    // U
    if y < q && !labels.row(y).is_d_first() {
        steps.push(Step::Up);
        dfs_gamma(
            labels,
            DfsState {
                x,
                y: y + 1,
                prev: Some(Step::Up),
                ban_r: false,
            },
            steps,
            out,
        );
        steps.pop();
    }
    // D
    if x < p && y < q {
        let next_ban_r =
            labels.height_is_inside_d(y) && labels.col(x).part == CellPart::First;
        steps.push(Step::Diag);
        dfs_gamma(
            labels,
            DfsState {
                x: x + 1,
                y: y + 1,
                prev: Some(Step::Diag),
                ban_r: next_ban_r,
            },
            steps,
            out,
        );
        steps.pop();
    }
    // RR
    if x + 2 <= p && !after_up && labels.cols_are_one_d(x) {
        steps.push(Step::DoubleRight);
        dfs_gamma(
            labels,
            DfsState {
                x: x + 2,
                y,
                prev: Some(Step::DoubleRight),
                ban_r: false,
            },
            steps,
            out,
        );
        steps.pop();
    }
    // UU
    if y + 2 <= q && labels.rows_are_one_d(y) {
        steps.push(Step::DoubleUp);
        dfs_gamma(
            labels,
            DfsState {
                x,
                y: y + 2,
                prev: Some(Step::DoubleUp),
                ban_r: false,
            },
            steps,
            out,
        );
        steps.pop();
    }
}

fn diag_coefficient(labels: &AxisLabeling, x: usize, y: usize, next: Option<Step>) -> u32 {
    let col = labels.col(x);
    let row = labels.row(y);
    let col_c = col.part == CellPart::Single;
    let col_d_first = col.part == CellPart::First;
    let row_c = row.part == CellPart::Single;
    let row_d_bottom = row.part == CellPart::First;
    if col_c && (row_c || row_d_bottom) {
        return 2;
    }
    if col_d_first
        && row_c
        && matches!(next, Some(Step::Up) | Some(Step::DoubleUp) | Some(Step::Diag))
    {
        return 2;
    }
    if col_d_first && row_d_bottom && next == Some(Step::Up) {
        return 2;
    }
    1
}

/// Weight of a path against cd axis labels: R and U map to c, RR and UU to
/// d, and D to k*d with the scalar read off the labels around the step.
pub fn weight_cd(path: &LatticePath, labels: &AxisLabeling) -> Result<NcPolynomial, PathError> {
    let (p, q) = (labels.width(), labels.height());
    let mut letters = Vec::with_capacity(path.len());
    let mut coeff = BigInt::from(1);
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
            Step::Right | Step::Up => letters.push(Letter::C),
            Step::DoubleRight => {
                if !labels.cols_are_one_d(x) {
                    return Err(PathError::StepNotLegal {
                        index,
                        step,
                        reason: "RR must cover exactly one horizontal d label".into(),
                    });
                }
                letters.push(Letter::D);
            }
            Step::DoubleUp => {
                if !labels.rows_are_one_d(y) {
                    return Err(PathError::StepNotLegal {
                        index,
                        step,
                        reason: "UU must cover exactly one vertical d label".into(),
                    });
                }
                letters.push(Letter::D);
            }
            Step::Diag => {
                let next = path.steps().get(index + 1).copied();
                coeff *= diag_coefficient(labels, x, y, next);
                letters.push(Letter::D);
            }
        }
        x += step.dx();
        y += step.dy();
    }
    Ok(NcPolynomial::monomial(
        Word::from_letters(letters),
        coeff,
        Alphabet::Cd,
    )?)
}

/// Sum of cd weights over the family for the labeling (u, v); equals the
/// diamond product of u and v.
pub fn sum_weights_cd(u: &Word, v: &Word) -> Result<NcPolynomial, PathError> {
    let labels = AxisLabeling::for_alphabet(u.clone(), v.clone(), Alphabet::Cd)?;
    let mut total = NcPolynomial::zero(Alphabet::Cd);
    for path in enumerate_gamma(&labels) {
        total += &weight_cd(&path, &labels)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamond::diamond_cd;
    use crate::latpaths::{enumerate_lambda, weight_lambda};
    use crate::ncalg::parse_word;
    use crate::ncalg::tests::cd;

    fn word(text: &str) -> Word {
        parse_word(text, Alphabet::Cd).unwrap()
    }

    fn labels(u: &str, v: &str) -> AxisLabeling {
        AxisLabeling::new(word(u), word(v))
    }

    #[test]
    fn pi_maps_letters_to_steps() {
        assert_eq!(pi(&Word::empty()), LatticePath::empty());
        assert_eq!(pi(&word("ddcc")), LatticePath::parse("RR RR R R").unwrap());
        assert_eq!(pi(&word("cdc")), LatticePath::parse("R RR R").unwrap());
    }

    #[test]
    fn one_column_family_is_the_horizontal_path() {
        for u in ["1", "c", "d", "cdc", "ddcc", "dcd"] {
            let lab = labels(u, "1");
            assert_eq!(enumerate_gamma(&lab), vec![pi(&word(u))], "u={u}");
        }
    }

    #[test]
    fn c_times_d_family() {
        let lab = labels("c", "d");
        assert_eq!(
            enumerate_gamma(&lab),
            vec![
                LatticePath::parse("R UU").unwrap(),
                LatticePath::parse("D U").unwrap()
            ]
        );
        assert_eq!(
            weight_cd(&LatticePath::parse("D U").unwrap(), &lab).unwrap(),
            cd("2*dc")
        );
    }

    #[test]
    fn thirteen_paths_for_cd_by_dc() {
        let lab = labels("cd", "dc");
        let got = enumerate_gamma(&lab);
        let mut expected: Vec<LatticePath> = [
            "R RR UU U", "R R D U U", "R R UU D", "R D R U U", "R D D U", "R D U D",
            "R UU D R", "D RR U U", "D R D U", "D R U D", "D D D", "D U D R", "UU D RR",
        ]
        .iter()
        .map(|t| LatticePath::parse(t).unwrap())
        .collect();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 13);
    }

    #[test]
    fn table_weights_for_cd_by_dc() {
        let lab = labels("cd", "dc");
        let cases = [
            ("R RR UU U", "cddc"),
            ("R R D U U", "ccdcc"),
            ("R R UU D", "ccdd"),
            ("R D R U U", "cdccc"),
            ("R D D U", "cddc"),
            ("R D U D", "2*cdcd"),
            ("R UU D R", "cddc"),
            ("D RR U U", "2*ddcc"),
            ("D R D U", "2*dcdc"),
            ("D R U D", "2*dccd"),
            ("D D D", "2*ddd"),
            ("D U D R", "2*dcdc"),
            ("UU D RR", "2*ddd"),
        ];
        for (text, expected) in cases {
            let path = LatticePath::parse(text).unwrap();
            assert_eq!(weight_cd(&path, &lab).unwrap(), cd(expected), "path {text}");
        }
    }

    #[test]
    fn rule_four_blocks_the_double_diag_riser() {
        // Over cd x dc, the path D D R U would otherwise reach the corner.
        let lab = labels("cd", "dc");
        let banned = LatticePath::parse("D D R U").unwrap();
        assert!(!enumerate_gamma(&lab).contains(&banned));
    }

    #[test]
    fn rule_four_permits_diag_over_second_half() {
        // Over dc x d, the second D of "D D R" crosses the top row of the
        // vertical d but sits over the second half of the horizontal d, so
        // the following R is allowed; the recursion value needs this path.
        let lab = labels("dc", "d");
        let kept = LatticePath::parse("D D R").unwrap();
        assert!(enumerate_gamma(&lab).contains(&kept));
        assert_eq!(
            sum_weights_cd(&word("dc"), &word("d")).unwrap(),
            diamond_cd(&cd("dc"), &cd("d")).unwrap()
        );
    }

    #[test]
    fn family_respects_factor_bans_and_endpoint() {
        let lab = labels("dcd", "cdc");
        for path in enumerate_gamma(&lab) {
            assert_eq!(path.endpoint(), (lab.width(), lab.height()), "{path}");
            for w in path.steps().windows(2) {
                let up = matches!(w[0], Step::Up | Step::DoubleUp);
                let right = matches!(w[1], Step::Right | Step::DoubleRight);
                assert!(!(up && right), "{path}");
            }
        }
    }

    #[test]
    fn restriction_to_c_powers_matches_label_free_family() {
        for p in 0..=6 {
            for q in 0..=6 {
                let lab = AxisLabeling::new(
                    Word::power(Letter::C, p),
                    Word::power(Letter::C, q),
                );
                let gamma = enumerate_gamma(&lab);
                let lambda = enumerate_lambda(p, q);
                assert_eq!(gamma, lambda, "p={p}, q={q}");
                for path in &gamma {
                    assert_eq!(
                        weight_cd(path, &lab).unwrap(),
                        weight_lambda(path).unwrap(),
                        "p={p}, q={q}, path {path}"
                    );
                }
            }
        }
    }

    #[test]
    fn sum_matches_recursion_on_small_words() {
        for (u, v) in [("cd", "dc"), ("c", "c"), ("d", "d"), ("dc", "d"), ("cc", "dd")] {
            let lhs = sum_weights_cd(&word(u), &word(v)).unwrap();
            let rhs = diamond_cd(&cd(u), &cd(v)).unwrap();
            assert_eq!(lhs, rhs, "u={u}, v={v}");
        }
    }

    #[test]
    fn weight_rejects_misaligned_double_steps() {
        let lab = labels("cc", "d");
        let path = LatticePath::parse("RR UU").unwrap();
        assert!(matches!(
            weight_cd(&path, &lab),
            Err(PathError::StepNotLegal { index: 0, .. })
        ));
    }
}
