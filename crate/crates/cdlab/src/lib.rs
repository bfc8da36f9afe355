//! Computations around the cd-index of Eulerian posets: noncommutative
//! ab- and cd-polynomials, the diamond product and its recursions, the
//! weighted lattice path families that expand it, and finite graded posets
//! with their flag vectors.
//!
//! Everything is exact integer arithmetic on immutable values; all
//! operations are pure functions and safe to call concurrently.
//!
//! The diamond product can be computed three independent ways, which the
//! test suites continually play against each other:
//!
//! ```
//! use cdlab::{diamond_cd, Alphabet};
//! use cdlab::latpaths::sum_weights_cd;
//! use cdlab::ncalg::{parse_polynomial, parse_word};
//! use cdlab::poset::{cd_index, diamond_product_poset, generate};
//!
//! // By the coproduct recursions:
//! let u = parse_polynomial("cd", Alphabet::Cd)?;
//! let v = parse_polynomial("dc", Alphabet::Cd)?;
//! let product = diamond_cd(&u, &v)?;
//!
//! // As a sum of weighted lattice paths:
//! let by_paths = sum_weights_cd(
//!     &parse_word("cd", Alphabet::Cd)?,
//!     &parse_word("dc", Alphabet::Cd)?,
//! )?;
//! assert_eq!(product, by_paths);
//!
//! // And at the poset level, via flag vectors of a diamond product:
//! let square = generate("polygon:4", 20_000)?;
//! let segment = generate("boolean:2", 20_000)?;
//! let poset_route = cd_index(&diamond_product_poset(&square, &segment))?;
//! let algebra_route = diamond_cd(&cd_index(&square)?, &cd_index(&segment)?)?;
//! assert_eq!(poset_route, algebra_route);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

pub mod coalg;
pub mod diamond;
pub mod latpaths;
pub mod ncalg;
pub mod poset;
pub mod verify;

pub use diamond::{diamond_ab, diamond_cd, DiamondCache};
pub use ncalg::{Alphabet, Letter, NcPolynomial, TensorPolynomial, Word};
