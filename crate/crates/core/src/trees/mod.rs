//! Combinatorial bases: planar binary trees, planar trees, alternating
//! labeled trees, labeled binary trees and words.
//!
//! Every basis type is totally ordered (degree first, then structure) and
//! has a text notation that round-trips through `Display`/`FromStr`:
//!
//! ```text
//! binary tree   |  (|,|)  ((|,|),|)
//! planar tree   |  (|,|,|)  ((|,|),|)
//! alt tree      1  x1  *(x1,.(x1,x1))
//! labeled tree  1  x1  ((x1,x2),x1)
//! word          1  x1x2x1
//! ```
//!
//! `x` alone denotes the first generator.

mod alt;
mod magma;
mod parse;
mod pbt;
mod planar;
mod word;

pub use alt::{enumerate_alt, AltTree, Label};
pub use magma::{enumerate_magma, MagmaTree};
pub use parse::ParseError;
pub use pbt::{enumerate_pbt, Pbt};
pub use planar::{enumerate_planar, graft_planar, ArityError, PlanarTree};
pub use word::{enumerate_words, Word};
