//! Matrices over the base ring, their ideals of minors and grade profiles,
//! the linear forms `f_i = sum_j x_ij T_j`, signed maximal minors, and
//! elementary operations.

mod matrix;
mod ops;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use matrix::{combinations, PolyMatrix};
pub use ops::{apply_elementary_op, transform_linear_forms, ElementaryOp, FormSubstitution, LinearFormTransform};

use crate::error::{Error, Result};
use crate::gradecalc::{grade, GradeValue};
use crate::groebner::Ideal;
use crate::poly::{Polynomial, RingExt};

/// The ideal `I_k(A)` generated by all `k x k` minors of `a`.
/// `k` must lie in `1..=min(rows, cols)`.
pub fn minors_ideal(a: &PolyMatrix, k: usize) -> Result<Ideal> {
    let bound = a.rows().min(a.cols());
    if k == 0 || k > bound {
        return Err(Error::IndexOutOfRange(format!(
            "minor size {k} for a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    Ideal::new(a.ring(), a.minors(k))
}

/// Grades of `I_k(M)` for `k = 1..m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeProfile(pub Vec<(usize, GradeValue)>);

impl GradeProfile {
    pub fn get(&self, k: usize) -> Option<GradeValue> {
        self.0.iter().find(|(j, _)| *j == k).map(|(_, g)| *g)
    }
}

pub fn grade_profile(m: &PolyMatrix) -> Result<GradeProfile> {
    m.ensure_standard()?;
    let entries = (1..=m.rows())
        .into_par_iter()
        .map(|k| minors_ideal(m, k).map(|i| (k, grade(&i))))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradeProfile(entries))
}

/// `f_i = sum_j x_ij T_j` in the ring of `m`, which must carry exactly
/// `n = cols` form variables.
pub fn build_linear_forms(m: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let ring = m.ring();
    if ring.form_count() != m.cols() {
        return Err(Error::Shape(format!(
            "ring has {} form variables but the matrix has {} columns",
            ring.form_count(),
            m.cols()
        )));
    }
    if !m.entries_in_base_ring() {
        return Err(Error::EntryNotInBaseRing);
    }
    Ok((0..m.rows())
        .map(|i| {
            (0..m.cols()).fold(ring.zero(), |acc, j| {
                let x = m.get(i, j);
                if x.is_zero() {
                    acc
                } else {
                    &acc + &(x * &ring.form(j))
                }
            })
        })
        .collect())
}

/// `g_j = (-1)^(j+1) det(M without column j)` (1-based `j`) for an
/// `m x (m+1)` matrix; these satisfy `M * g = 0`.
pub fn signed_maximal_minors(m: &PolyMatrix) -> Result<Vec<Polynomial>> {
    if m.cols() != m.rows() + 1 {
        return Err(Error::Shape(format!(
            "signed maximal minors need an m x (m+1) matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let rows: Vec<usize> = (0..m.rows()).collect();
    (0..m.cols())
        .map(|j| {
            let cols: Vec<usize> = (0..m.cols()).filter(|&c| c != j).collect();
            let d = m.submatrix(&rows, &cols).determinant()?;
            Ok(if j % 2 == 0 { d } else { -&d })
        })
        .collect()
}
