//! Non-crossing partition lattices, the complexes `X(c)` and `X(w)`,
//! order complexes and rational homology.

mod ncp;
mod simplicial;
mod xc;

pub use ncp::{build_ncp, NcpLattice};
pub use simplicial::{
    boundary_matrix, homology_rank, reduced_betti, Chain, Poset, ReducedBetti, SimplicialComplex,
    DEFAULT_SIMPLEX_BUDGET,
};
pub use xc::{
    build_xc, build_xw, check_poset_map, f_map, fiber_check, lemma48_violations, maximal_cliques,
    ncp_basis_cycles, FiberReport, PosetMapReport, XComplex,
};
