//! The rotation lattice of nu-trees and its combinatorial models.
//!
//! Fix a lattice path nu of east and north steps. The crate implements, over
//! the region weakly above nu:
//!
//! * nu-paths under the cover relation that swaps a valley with the segment
//!   after it ([`path`]);
//! * nu-trees under right rotation, with their binary-tree and tree-like
//!   tableau views ([`tree`]);
//! * the flushing bijections between paths and trees, and the duality with
//!   the reversed path ([`flush`]);
//! * bracket vectors, where the order becomes componentwise and meets are
//!   componentwise minima ([`bracket`]);
//! * pipe dreams whose facet poset realizes the same lattice inside a
//!   subword complex ([`pipedream`]);
//! * Edelman-Greene insertion matching the left flush ([`eg`]);
//! * the higher analogue where trees are replaced by sets with no large
//!   pairwise-incompatible subset ([`multi`]).
//!
//! [`poset`] holds the finite poset engine the order-theoretic statements
//! are checked with, and [`checks`] bundles those statements into a runnable
//! suite.

pub mod bracket;
pub mod checks;
pub mod eg;
pub mod flush;
pub mod multi;
pub mod path;
pub mod pipedream;
pub mod poset;
pub mod tree;

pub use bracket::Brackets;
pub use path::{LatticePath, Point, Region, Step};
pub use poset::FinitePoset;
pub use tree::NuTree;
