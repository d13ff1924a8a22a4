//! Elementary row and column operations and the induced automorphisms of
//! `S = R[T_1..T_n]` that carry the linear forms of `M` to those of the
//! transformed matrix.

use std::sync::Arc;

use crate::detideal::{build_linear_forms, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring, RingExt};

/// One elementary operation; indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryOp {
    /// row `row` *= `factor` (a nonzero constant)
    ScaleRow { row: usize, factor: Polynomial },
    /// row `target` += `factor` * row `source`
    AddRow { target: usize, source: usize, factor: Polynomial },
    SwapRows { a: usize, b: usize },
    /// column `col` *= `factor` (a nonzero constant)
    ScaleCol { col: usize, factor: Polynomial },
    /// column `target` += `factor` * column `source`
    AddCol { target: usize, source: usize, factor: Polynomial },
    SwapCols { a: usize, b: usize },
}

impl ElementaryOp {
    pub fn kind(&self) -> &'static str {
        match self {
            ElementaryOp::ScaleRow { .. } => "scale-row",
            ElementaryOp::AddRow { .. } => "add-row",
            ElementaryOp::SwapRows { .. } => "swap-rows",
            ElementaryOp::ScaleCol { .. } => "scale-col",
            ElementaryOp::AddCol { .. } => "add-col",
            ElementaryOp::SwapCols { .. } => "swap-cols",
        }
    }

    pub fn is_row_op(&self) -> bool {
        matches!(
            self,
            ElementaryOp::ScaleRow { .. } | ElementaryOp::AddRow { .. } | ElementaryOp::SwapRows { .. }
        )
    }

    fn validate(&self, m: &PolyMatrix) -> Result<()> {
        let check = |i: usize, bound: usize, what: &str| {
            if i < bound {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange(format!("{what} {i} (size {bound})")))
            }
        };
        let base_only = |c: &Polynomial| {
            let probe = PolyMatrix::new(m.ring(), 1, 1, vec![c.clone()])?;
            if probe.entries_in_base_ring() {
                Ok(())
            } else {
                Err(Error::EntryNotInBaseRing)
            }
        };
        let unit = |c: &Polynomial| match c.as_constant() {
            Some(v) if !m.ring().field().is_zero(&v) => Ok(()),
            _ => Err(Error::NonUnitScalar),
        };
        let distinct = |a: usize, b: usize| {
            if a != b {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange(format!("indices must differ, got {a} twice")))
            }
        };
        match self {
            ElementaryOp::ScaleRow { row, factor } => {
                check(*row, m.rows(), "row")?;
                unit(factor)
            }
            ElementaryOp::AddRow { target, source, factor } => {
                check(*target, m.rows(), "row")?;
                check(*source, m.rows(), "row")?;
                distinct(*target, *source)?;
                base_only(factor)
            }
            ElementaryOp::SwapRows { a, b } => {
                check(*a, m.rows(), "row")?;
                check(*b, m.rows(), "row")?;
                distinct(*a, *b)
            }
            ElementaryOp::ScaleCol { col, factor } => {
                check(*col, m.cols(), "column")?;
                unit(factor)
            }
            ElementaryOp::AddCol { target, source, factor } => {
                check(*target, m.cols(), "column")?;
                check(*source, m.cols(), "column")?;
                distinct(*target, *source)?;
                base_only(factor)
            }
            ElementaryOp::SwapCols { a, b } => {
                check(*a, m.cols(), "column")?;
                check(*b, m.cols(), "column")?;
                distinct(*a, *b)
            }
        }
    }
}

/// Applies `op` to `m`.
pub fn apply_elementary_op(m: &PolyMatrix, op: &ElementaryOp) -> Result<PolyMatrix> {
    op.validate(m)?;
    let mut n = m.clone();
    match op {
        ElementaryOp::ScaleRow { row, factor } => {
            for j in 0..m.cols() {
                n.set(*row, j, m.get(*row, j) * factor);
            }
        }
        ElementaryOp::AddRow { target, source, factor } => {
            for j in 0..m.cols() {
                n.set(*target, j, m.get(*target, j) + &(factor * m.get(*source, j)));
            }
        }
        ElementaryOp::SwapRows { a, b } => {
            for j in 0..m.cols() {
                n.set(*a, j, m.get(*b, j).clone());
                n.set(*b, j, m.get(*a, j).clone());
            }
        }
        ElementaryOp::ScaleCol { col, factor } => {
            for i in 0..m.rows() {
                n.set(i, *col, m.get(i, *col) * factor);
            }
        }
        ElementaryOp::AddCol { target, source, factor } => {
            for i in 0..m.rows() {
                n.set(i, *target, m.get(i, *target) + &(factor * m.get(i, *source)));
            }
        }
        ElementaryOp::SwapCols { a, b } => {
            for i in 0..m.rows() {
                n.set(i, *a, m.get(i, *b).clone());
                n.set(i, *b, m.get(i, *a).clone());
            }
        }
    }
    Ok(n)
}

/// An `R`-algebra endomorphism of `S` fixing the base variables and sending
/// `T_j` to `images[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSubstitution {
    ring: Arc<Ring>,
    images: Vec<Polynomial>,
}

impl FormSubstitution {
    pub fn identity(ring: &Arc<Ring>) -> FormSubstitution {
        let images = (0..ring.form_count()).map(|j| ring.form(j)).collect();
        FormSubstitution {
            ring: ring.clone(),
            images,
        }
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, p)| *p == self.ring.form(j))
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let forms = self.ring.form_vars();
        let all: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|v| match forms.iter().position(|&f| f == v) {
                Some(j) => self.images[j].clone(),
                None => self.ring.var(v),
            })
            .collect();
        p.substitute(&all)
    }
}

/// Result of transporting the forms `f_i` of `M` along an elementary op.
#[derive(Debug, Clone)]
pub struct LinearFormTransform {
    /// The transformed matrix `N`.
    pub matrix: PolyMatrix,
    /// The forms `g_i` of `N`.
    pub forms: Vec<Polynomial>,
    /// The automorphism `phi` with `phi((f)S) = (g)S`.
    pub substitution: FormSubstitution,
}

/// Applies `op` and returns `N`, its forms and the automorphism of `S`
/// relating the form ideals. Row operations induce the identity; column
/// operations induce a change of the `T` variables under which each `f_i`
/// maps exactly to `g_i`.
pub fn transform_linear_forms(m: &PolyMatrix, op: &ElementaryOp) -> Result<LinearFormTransform> {
    let matrix = apply_elementary_op(m, op)?;
    let forms = build_linear_forms(&matrix)?;
    let ring = m.ring();
    let mut substitution = FormSubstitution::identity(ring);
    match op {
        ElementaryOp::ScaleCol { col, factor } => {
            substitution.images[*col] = &ring.form(*col) * factor;
        }
        // y_ij = x_ij + c x_il, so g_i is f_i with T_l replaced by T_l + c T_j
        // (the source variable moves, not the target).
        ElementaryOp::AddCol { target, source, factor } => {
            substitution.images[*source] = &ring.form(*source) + &(factor * &ring.form(*target));
        }
        ElementaryOp::SwapCols { a, b } => {
            substitution.images.swap(*a, *b);
        }
        _ => {}
    }
    Ok(LinearFormTransform {
        matrix,
        forms,
        substitution,
    })
}
