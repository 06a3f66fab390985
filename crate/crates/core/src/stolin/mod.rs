//! Rational solutions from Stolin triples (𝔤, e, ω_K): Frobenius forms on the
//! parabolic 𝔭_e, the dec-equations, the assembled r-matrix, and the
//! Lagrangian-order route through dual bases in 𝔤((z⁻¹)).

mod assemble;
mod closed;
mod dec;
mod laurent;
mod order;
mod parabolic;

pub use assemble::{assemble_stolin_r, compare_theorem_c, compare_with_k, StolinR, StolinTriple};
pub use closed::{closed_form_d1, printed_n2_form};
pub use dec::{solve_dec, DecSolution, WElementSet};
pub use laurent::{kac_pairing, LaurentMatrixSeries};
pub use order::{build_order, build_yang_order, series_r, OrderBasis, OrderKind, SeriesR};
pub use parabolic::{frobenius_gram, frobenius_split, omega, FrobeniusForm, ParabolicBasis};
