//! Exact computer algebra for dialgebras, dendriform, Leibniz and Zinbiel
//! algebras, indexed by planar binary trees.
//!
//! Every coefficient is an exact rational. Trees, permutations and free
//! algebra elements are immutable values; all operations are pure.

pub mod error;
pub mod finalg;
pub mod freealg;
pub mod homology;
pub mod lincomb;
pub mod linalg;
pub mod operads;
pub mod parse;
pub mod perm;
pub mod rational;
pub mod trees;

pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use perm::Permutation;
pub use rational::Q;
pub use trees::{ProductSymbol, Tree};
