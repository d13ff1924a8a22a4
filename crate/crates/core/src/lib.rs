//! Exact computations with determinantal ideals over polynomial rings.
//!
//! Given a matrix `M = (x_ij)` with entries in `R = k[x_1..x_s]`, the crate
//! builds the linear forms `f_i = sum_j x_ij T_j` in `S = R[T_1..T_n]`, the
//! ideals of minors `I_k(M)`, the degree strands of the Koszul complex on
//! the `f_i`, and the defining ideal of the Rees algebra of `I_m(M)`. It then
//! checks, on concrete matrices, the two grade criteria relating these
//! objects (grade of the form ideal versus grades of minor ideals, and linear
//! type of `I_m(M)` for `m x (m+1)` matrices).

pub mod detideal;
pub mod error;
pub mod gradecalc;
pub mod groebner;
pub mod koszul;
pub mod poly;
pub mod sample;
pub mod theorems;

pub use error::{Error, Result};
