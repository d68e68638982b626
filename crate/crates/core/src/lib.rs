//! Decide, construct and verify J-colourings (colourings in which every
//! closed neighbourhood is rainbow) of paths, cycles, wheels, Jahangir
//! graphs and arbitrary small graphs, plus cordial labelings of Jahangir
//! graphs.
//!
//! ```
//! use rainbowj::{generators, jcolor, Budget};
//!
//! let j = generators::jahangir(4, 6).unwrap();
//! let closed = jcolor::decide_jahangir(4, 6).unwrap();
//! let exact = jcolor::j_number(&j.graph, &Budget::unlimited()).unwrap();
//! assert_eq!(closed.j_number, Some(3));
//! assert!(closed.agrees_with(&exact));
//! ```

// Divisibility conditions read more naturally as `n % 3 == 1` style
// residues than as `is_multiple_of` calls.
#![allow(clippy::manual_is_multiple_of)]

pub mod budget;
pub mod coloring;
pub mod cordial;
pub mod error;
pub mod family;
pub mod format;
pub mod generators;
pub mod graph;
pub mod jcolor;

pub use budget::Budget;
pub use coloring::Coloring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use jcolor::{JDecision, Rule, Variant};
