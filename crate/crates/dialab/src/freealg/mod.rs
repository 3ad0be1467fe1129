//! Free dimonoids, dialgebras, dendriform, Zinbiel and Leibniz algebras over
//! exact rationals, and the maps between them.

mod dend;
mod dias;
mod leib;
mod maps;
mod ops;
mod word;
mod zinb;

pub use dend::{
    dend_mul, dend_tree_mul, eval_tree_monomial, eval_tree_on, involution, shuffle_star, tree_star, DendOp, DendTerm,
};
pub use dias::{dias_mul, normalize_monomial, LabelledMonomial, PointedWord, Side};
pub use leib::{fusion, gamma, gamma_check_1, leib_bracket_free};
pub use maps::dend_to_zinb;
pub use ops::{bracket, Algebra, FreeDendriform, FreeDialgebra, FreeLeibniz, FreeZinbiel, Op};
pub use word::{Sym, Word};
pub use zinb::{zinb_mul, ZinbMode};
