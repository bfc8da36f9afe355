//! Lattice path families and their weight functions.
//!
//! Paths use the steps R = (1,0), U = (0,1), D = (1,1), and the doubled
//! steps RR = (2,0) and UU = (0,2) (written with overbars in figures).
//! The axes of the bounding box are labeled by words: a letter of degree 1
//! spans one unit, a `d` spans two.

mod gamma;
mod omega;
mod render;

pub use gamma::{enumerate_gamma, pi, sum_weights_cd, weight_cd};
pub use omega::{
    enumerate_lambda, enumerate_omega, sum_weights_ab, sum_weights_lambda, tau, weight_ab,
    weight_lambda,
};
pub use render::{render_paths, RenderFormat};

use crate::ncalg::{Alphabet, Letter, NcError, Word};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PathError {
    #[error("step {index} ({step}) leaves the labeled {width}x{height} region")]
    StepOutOfRegion {
        index: usize,
        step: Step,
        width: usize,
        height: usize,
    },
    #[error("step {index} ({step}) is not legal for this labeling: {reason}")]
    StepNotLegal {
        index: usize,
        step: Step,
        reason: String,
    },
    #[error("unknown render format {0:?} (expected \"svg\" or \"tikz\")")]
    UnknownFormat(String),
    #[error("cannot parse path text {text:?} at byte {position}")]
    ParsePath { text: String, position: usize },
    #[error(transparent)]
    Alphabet(#[from] NcError),
}

/// A single lattice path step. The declaration order R < U < D < RR < UU is
/// the canonical order used to sort path listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Right,
    Up,
    Diag,
    DoubleRight,
    DoubleUp,
}

impl Step {
    pub const ALL: [Step; 5] = [
        Step::Right,
        Step::Up,
        Step::Diag,
        Step::DoubleRight,
        Step::DoubleUp,
    ];

    pub fn dx(self) -> usize {
        match self {
            Step::Right | Step::Diag => 1,
            Step::DoubleRight => 2,
            _ => 0,
        }
    }

    pub fn dy(self) -> usize {
        match self {
            Step::Up | Step::Diag => 1,
            Step::DoubleUp => 2,
            _ => 0,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Step::Right | Step::Up => 1,
            Step::Diag | Step::DoubleRight | Step::DoubleUp => 2,
        }
    }

    /// ASCII token used in text and JSON output.
    pub fn token(self) -> &'static str {
        match self {
            Step::Right => "R",
            Step::Up => "U",
            Step::Diag => "D",
            Step::DoubleRight => "RR",
            Step::DoubleUp => "UU",
        }
    }

    /// Overbar form used in rendered figures.
    pub fn pretty(self) -> &'static str {
        match self {
            Step::Right => "R",
            Step::Up => "U",
            Step::Diag => "D",
            Step::DoubleRight => "R\u{0304}",
            Step::DoubleUp => "U\u{0304}",
        }
    }

    pub fn from_token(token: &str) -> Option<Step> {
        match token {
            "R" => Some(Step::Right),
            "U" => Some(Step::Up),
            "D" => Some(Step::Diag),
            "RR" => Some(Step::DoubleRight),
            "UU" => Some(Step::DoubleUp),
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// A path from the origin given by its step sequence; coordinates are
/// derived on demand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> LatticePath {
        LatticePath { steps }
    }

    pub fn empty() -> LatticePath {
        LatticePath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Componentwise sum of the step vectors.
    pub fn endpoint(&self) -> (usize, usize) {
        self.steps
            .iter()
            .fold((0, 0), |(x, y), s| (x + s.dx(), y + s.dy()))
    }

    /// Sum of step degrees; equals x-extent + y-extent.
    pub fn degree(&self) -> usize {
        self.steps.iter().map(|s| s.degree()).sum()
    }

    /// All visited points, starting at the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = (0, 0);
        pts.push(cur);
        for s in &self.steps {
            cur = (cur.0 + s.dx(), cur.1 + s.dy());
            pts.push(cur);
        }
        pts
    }

    /// Parses step tokens, optionally separated by spaces. Without
    /// separators, doubled letters bind greedily: "RRD" reads as RR, D.
    pub fn parse(text: &str) -> Result<LatticePath, PathError> {
        let bytes = text.as_bytes();
        let mut steps = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let (step, width) = match (bytes[i], bytes.get(i + 1)) {
                (b, _) if b.is_ascii_whitespace() => {
                    i += 1;
                    continue;
                }
                (b'R', Some(b'R')) => (Step::DoubleRight, 2),
                (b'U', Some(b'U')) => (Step::DoubleUp, 2),
                (b'R', _) => (Step::Right, 1),
                (b'U', _) => (Step::Up, 1),
                (b'D', _) => (Step::Diag, 1),
                _ => {
                    return Err(PathError::ParsePath {
                        text: text.to_string(),
                        position: i,
                    })
                }
            };
            steps.push(step);
            i += width;
        }
        Ok(LatticePath { steps })
    }
}

impl fmt::Display for LatticePath {
    /// Space-separated tokens; unambiguous to re-parse.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.steps {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}", s.token())?;
        }
        Ok(())
    }
}

impl Serialize for LatticePath {
    /// JSON form: `{"steps":["D","R","RR","D","D","U"]}`.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let tokens: Vec<&str> = self.steps.iter().map(|st| st.token()).collect();
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("steps", &tokens)?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            steps: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        let mut steps = Vec::with_capacity(raw.steps.len());
        for t in &raw.steps {
            steps.push(
                Step::from_token(t)
                    .ok_or_else(|| D::Error::custom(format!("unknown step token {t:?}")))?,
            );
        }
        Ok(LatticePath { steps })
    }
}

/// Which part of its axis label a unit cell carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellPart {
    /// The whole span of a degree-1 letter.
    Single,
    /// Lower/left half of a `d`.
    First,
    /// Upper/right half of a `d`.
    Second,
}

/// One unit column or row together with the letter occurrence labeling it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub letter: Letter,
    /// Index of the letter within the axis word.
    pub occurrence: usize,
    pub part: CellPart,
}

impl Cell {
    fn is_d_first(&self) -> bool {
        self.part == CellPart::First
    }
}

fn cells_of(word: &Word) -> Vec<Cell> {
    let mut cells = Vec::with_capacity(word.degree());
    for (occurrence, &letter) in word.letters().iter().enumerate() {
        if letter.degree() == 2 {
            cells.push(Cell {
                letter,
                occurrence,
                part: CellPart::First,
            });
            cells.push(Cell {
                letter,
                occurrence,
                part: CellPart::Second,
            });
        } else {
            cells.push(Cell {
                letter,
                occurrence,
                part: CellPart::Single,
            });
        }
    }
    cells
}

/// Axis labels for a path box: the horizontal word labels columns and the
/// vertical word labels rows, reading bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisLabeling {
    horizontal: Word,
    vertical: Word,
    cols: Vec<Cell>,
    rows: Vec<Cell>,
}

impl AxisLabeling {
    pub fn new(horizontal: Word, vertical: Word) -> AxisLabeling {
        let cols = cells_of(&horizontal);
        let rows = cells_of(&vertical);
        AxisLabeling {
            horizontal,
            vertical,
            cols,
            rows,
        }
    }

    /// Checks that both words fit `alphabet` before building the labeling.
    pub fn for_alphabet(
        horizontal: Word,
        vertical: Word,
        alphabet: Alphabet,
    ) -> Result<AxisLabeling, PathError> {
        for w in [&horizontal, &vertical] {
            if !w.fits_alphabet(alphabet) {
                return Err(PathError::Alphabet(NcError::AlphabetMismatch {
                    expected: alphabet,
                    found: match alphabet {
                        Alphabet::Ab => Alphabet::Cd,
                        Alphabet::Cd => Alphabet::Ab,
                    },
                }));
            }
        }
        Ok(AxisLabeling::new(horizontal, vertical))
    }

    pub fn horizontal(&self) -> &Word {
        &self.horizontal
    }

    pub fn vertical(&self) -> &Word {
        &self.vertical
    }

    /// Box width: the degree of the horizontal word.
    pub fn width(&self) -> usize {
        self.cols.len()
    }

    /// Box height: the degree of the vertical word.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn col(&self, x: usize) -> &Cell {
        &self.cols[x]
    }

    pub fn row(&self, y: usize) -> &Cell {
        &self.rows[y]
    }

    /// True when columns x and x+1 are the two halves of one `d`.
    pub fn cols_are_one_d(&self, x: usize) -> bool {
        x + 1 < self.cols.len()
            && self.cols[x].part == CellPart::First
            && self.cols[x + 1].part == CellPart::Second
            && self.cols[x].occurrence == self.cols[x + 1].occurrence
    }

    /// True when rows y and y+1 are the two halves of one `d`.
    pub fn rows_are_one_d(&self, y: usize) -> bool {
        y + 1 < self.rows.len()
            && self.rows[y].part == CellPart::First
            && self.rows[y + 1].part == CellPart::Second
            && self.rows[y].occurrence == self.rows[y + 1].occurrence
    }

    /// True when height `h` is the line splitting a vertical `d` label, i.e.
    /// rows h-1 and h are that label's two halves. A path can only arrive
    /// there by a D step across the bottom half.
    pub fn height_is_inside_d(&self, h: usize) -> bool {
        h >= 1 && self.rows_are_one_d(h - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_word;

    #[test]
    fn step_order_is_canonical() {
        let mut all = Step::ALL.to_vec();
        all.sort();
        assert_eq!(
            all,
            vec![
                Step::Right,
                Step::Up,
                Step::Diag,
                Step::DoubleRight,
                Step::DoubleUp
            ]
        );
    }

    #[test]
    fn endpoint_and_degree_agree() {
        let p = LatticePath::parse("D R RR D D U").unwrap();
        let (x, y) = p.endpoint();
        assert_eq!((x, y), (6, 4));
        assert_eq!(p.degree(), x + y);
    }

    #[test]
    fn parse_is_greedy_on_doubles() {
        let p = LatticePath::parse("RRD").unwrap();
        assert_eq!(p.steps(), &[Step::DoubleRight, Step::Diag]);
        let q = LatticePath::parse("R R D").unwrap();
        assert_eq!(q.steps(), &[Step::Right, Step::Right, Step::Diag]);
    }

    #[test]
    fn display_round_trips() {
        let p = LatticePath::new(vec![
            Step::Diag,
            Step::Right,
            Step::DoubleRight,
            Step::Diag,
            Step::Diag,
            Step::Up,
        ]);
        assert_eq!(p.to_string(), "D R RR D D U");
        assert_eq!(LatticePath::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn json_matches_wire_format() {
        let p = LatticePath::parse("D R RR D D U").unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"steps":["D","R","RR","D","D","U"]}"#
        );
        let back: LatticePath = serde_json::from_str(r#"{"steps":["D","R","RR","D","D","U"]}"#).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn labeling_cells_span_d_twice() {
        let u = parse_word("ddcc", Alphabet::Cd).unwrap();
        let v = parse_word("cdc", Alphabet::Cd).unwrap();
        let lab = AxisLabeling::new(u, v);
        assert_eq!(lab.width(), 6);
        assert_eq!(lab.height(), 4);
        assert!(lab.cols_are_one_d(0));
        assert!(!lab.cols_are_one_d(1));
        assert!(lab.cols_are_one_d(2));
        assert!(!lab.cols_are_one_d(4));
        assert!(lab.rows_are_one_d(1));
        assert!(lab.height_is_inside_d(2));
        assert!(!lab.height_is_inside_d(1));
    }
}
