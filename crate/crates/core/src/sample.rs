//! Seeded random matrices and elementary operations for property sweeps.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detideal::{ElementaryOp, PolyMatrix};
use crate::error::Result;
use crate::poly::{make_ring, MonomialOrder, Polynomial, Ring, RingExt};

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape and entry distribution of a random matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixShape {
    pub rows: usize,
    pub cols: usize,
    pub base_vars: usize,
    /// Entries are homogeneous of degree 1 or 2 up to this bound.
    pub max_degree: u32,
    /// Probability (in percent) that an entry is zero.
    pub zero_percent: u32,
}

/// Ring `GF(32003)[x1..xs, T1..Tn]` with grevlex.
pub fn sample_ring(base_vars: usize, forms: usize) -> Result<Arc<Ring>> {
    let names: Vec<String> = (1..=base_vars).map(|i| format!("x{i}")).collect();
    make_ring(32003, &names, forms, MonomialOrder::Grevlex)
}

/// A homogeneous polynomial in the base variables with one to three terms.
pub fn random_base_form(rng: &mut SampleRng, ring: &Arc<Ring>, degree: u32) -> Polynomial {
    let base = ring.base_vars();
    let terms = rng.gen_range(1..=3);
    let mut p = ring.zero();
    for _ in 0..terms {
        let mut mono = ring.constant(ring.scalar(nonzero_coefficient(rng)));
        for _ in 0..degree {
            let v = *base.choose(rng).expect("at least one base variable");
            mono = &mono * &ring.var(v);
        }
        p = &p + &mono;
    }
    p
}

fn nonzero_coefficient(rng: &mut SampleRng) -> i64 {
    let c = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        c
    } else {
        -c
    }
}

/// A random matrix over the base variables of `ring`; each entry is zero
/// with probability `zero_percent`, otherwise a random form of degree in
/// `1..=max_degree`.
pub fn random_matrix(rng: &mut SampleRng, ring: &Arc<Ring>, shape: &MatrixShape) -> PolyMatrix {
    let entries = (0..shape.rows * shape.cols)
        .map(|_| {
            if rng.gen_range(0..100) < shape.zero_percent {
                ring.zero()
            } else {
                let d = rng.gen_range(1..=shape.max_degree.max(1));
                random_base_form(rng, ring, d)
            }
        })
        .collect();
    PolyMatrix::new(ring, shape.rows, shape.cols, entries).expect("entries built in ring")
}

/// A random shape with `1 <= m <= n`, `m <= max_rows`, `n <= max_cols`.
pub fn random_shape(rng: &mut SampleRng, max_rows: usize, max_cols: usize, max_base: usize) -> MatrixShape {
    let rows = rng.gen_range(1..=max_rows);
    let cols = rng.gen_range(rows..=max_cols.max(rows));
    MatrixShape {
        rows,
        cols,
        base_vars: rng.gen_range(1..=max_base),
        max_degree: rng.gen_range(1..=2),
        zero_percent: *[0u32, 20, 40].choose(rng).unwrap(),
    }
}

/// A valid elementary operation of the given kind (0..6 in the order
/// scale-row, add-row, swap-rows, scale-col, add-col, swap-cols), or
/// `None` when the matrix is too small for it.
pub fn random_op_of_kind(rng: &mut SampleRng, m: &PolyMatrix, kind: usize) -> Option<ElementaryOp> {
    let ring = m.ring();
    let unit = ring.constant(ring.scalar(nonzero_coefficient(rng)));
    let pair = |rng: &mut SampleRng, n: usize| {
        if n < 2 {
            return None;
        }
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        Some((a, b))
    };
    let factor = |rng: &mut SampleRng| {
        if rng.gen_bool(0.5) {
            ring.constant(ring.scalar(nonzero_coefficient(rng)))
        } else {
            random_base_form(rng, ring, 1)
        }
    };
    match kind {
        0 => Some(ElementaryOp::ScaleRow { row: rng.gen_range(0..m.rows()), factor: unit }),
        1 => pair(rng, m.rows()).map(|(target, source)| ElementaryOp::AddRow {
            target,
            source,
            factor: factor(rng),
        }),
        2 => pair(rng, m.rows()).map(|(a, b)| ElementaryOp::SwapRows { a, b }),
        3 => Some(ElementaryOp::ScaleCol { col: rng.gen_range(0..m.cols()), factor: unit }),
        4 => pair(rng, m.cols()).map(|(target, source)| ElementaryOp::AddCol {
            target,
            source,
            factor: factor(rng),
        }),
        5 => pair(rng, m.cols()).map(|(a, b)| ElementaryOp::SwapCols { a, b }),
        _ => None,
    }
}
