//! Tensor algebra on gl(n) over the matrix-unit basis.
//!
//! Tensors live in gl(n)⊗gl(n) even when the objects are in sl(n)⊗sl(n);
//! membership in sl is the predicate [`GlTensor2::is_sl`].

mod basis;
mod casimir;
mod cybe;
mod gauge;
mod heisenberg;
mod tensor;

pub use basis::{cartan_dual, cartan_duals, cartan_h, sl_basis, trace_form, BasisIndex};
pub use casimir::{casimir, induced_map, nondegenerate, nondegenerate_numeric};
pub use cybe::{cybe_lhs, cybe_residual, unitarity_defect};
pub use gauge::{apply_gauge, LinearMapGl};
pub use heisenberg::{casimir_identity_exact, HeisenbergBasis};
pub use tensor::{swap_tensor, GlTensor2, GlTensor3};
