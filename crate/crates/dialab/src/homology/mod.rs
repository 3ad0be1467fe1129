//! Chain complexes of dialgebras, dendriform, Leibniz and Zinbiel algebras.

mod coeffs;
mod complex;
mod homotopy;
mod maps;

pub use coeffs::{Coefficients, Combine, Sparse};
pub use complex::{betti_numbers, differential_terms, index_face, indices, ChainComplex, ChainIndex, ChainTerm, Source, Theory};
pub use homotopy::{homotopy_case, homotopy_free_dialgebra, homotopy_free_dialgebra_opposite, HomotopyCase};
pub use maps::{
    ad, ad_homotopy, apply_map, check_compatible, commutes, degeneracy, epsilon, face, h_of, map_matrix, normalize,
    psi_chain, theta, theta_sequences, Chain, MapKind,
};
