//! p-unitary Cayley graphs `G_R(p)` over finite commutative rings: the graph
//! on `R` with `a ~ b` whenever `a - b` is a `p`-th power of a unit.

pub mod arith;
pub mod cayley;
pub mod charsearch;
pub mod error;
pub mod graph;
pub mod polyarith;
pub mod ring;
pub mod structure;

pub use error::{Error, Result};
