//! Rational functions on the dual affine torus and their expansions as
//! series supported in translates of strictly convex cones.

mod coeff;
mod cone;
mod laurent;
mod ratfn;
mod series;
mod syntax;

pub use coeff::CoeffQ;
pub use cone::RationalCone;
pub use laurent::LaurentPoly;
pub use ratfn::{Factor, RationalFn};
pub use series::{expand, reexpand_check, verify_expansion, ConeSeries, DumpTerm, ReexpandReport, SeriesDump};
