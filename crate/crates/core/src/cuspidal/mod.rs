//! The geometric pipeline for the cuspidal cubic: J-matrices, the shaped space
//! V_{e,d}, the solution spaces Sol((e,d),x), G-elements and the assembled r-matrix.

mod ansatz;
mod assemble;
mod jmatrix;
mod reflection;
mod sol;
mod ved;

pub use ansatz::{r_ansatz, AnsatzCertificate};
pub use assemble::{assemble_r, CuspidalR};
pub use jmatrix::{build_j, region, JMatrix, Region};
pub use reflection::reflection_gauge;
pub use sol::{ev_map, g_elements, res_map, sol_space, GElements, SolBasis};
pub use ved::{extract_f0_feps, VedShape};
