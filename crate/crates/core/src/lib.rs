//! Exact computational algebra around double affine Hecke algebras.
//!
//! * [`root_data`]: finite root data, the coweight lattice, finite and affine
//!   Weyl groups, lengths, reduced words and the cones `Q(w)` in `L_aff`.
//! * [`weyl_heisenberg`]: the Heisenberg extension of `L (+) L` and the
//!   Heisenberg-Weyl group together with its semidirect-product model.
//! * [`two_local`]: the field `F_p(t1)(t2)` inside `F_p((t1))((t2))`, rank-two
//!   valuations, the tame symbol and `SL_2` double coset invariants.
//! * [`cone_series`]: rational cones, cone-supported truncated series and
//!   expansion of rational functions in a chosen cone.
//! * [`hecke_rat`]: the smash-product algebra of rational functions with the
//!   affine Weyl group, Demazure-Lusztig generators and relation checks.
//! * [`cli`]: argument parsing and dispatch for the `dihecke` binary.

pub mod arith;
pub mod cli;
pub mod cone_series;
pub mod error;
pub mod expr;
pub mod hecke_rat;
mod linalg;
pub mod root_data;
pub mod two_local;
pub mod weyl_heisenberg;

pub use error::{Error, Result};
