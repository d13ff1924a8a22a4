//! The graded Koszul complex on the forms `f_1..f_m`, its degree strands
//! as explicit matrices over the base ring, and free resolutions of the
//! powers of `I_m(M)` extracted from them.
//!
//! `K_r` has the free `S`-basis `e_{i_1} ^ ... ^ e_{i_r}` in degree `r`, with
//! boundary `e_I -> sum_p (-1)^(p-1) f_{i_p} e_{I - i_p}`. The degree-`l`
//! part `[K_r]_l` is a free `R`-module on `T^alpha e_I` with `|alpha| = l - r`.

mod basis;
mod complex;

use std::collections::HashMap;

pub use basis::{binomial, monomial_count, t_monomials, WedgeMonomialBasis};
pub use complex::{
    buchsbaum_eisenbud_acyclic, matrix_rank, AcyclicityCertificate, ComplexReport, GradedComplex,
    MatrixReport, PositionCheck,
};

use crate::detideal::{minors_ideal, signed_maximal_minors, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::RingExt;

/// Ranks of `[K_r]_l` for `r = 0..m`: `C(m, r) * C(l - r + n - 1, n - 1)`
/// when `l >= r`, else 0.
pub fn strand_ranks(m: usize, n: usize, degree: usize) -> Vec<usize> {
    (0..=m)
        .map(|r| {
            if degree < r {
                0
            } else {
                binomial(m, r) * monomial_count(n, degree - r)
            }
        })
        .collect()
}

/// Matrix of `[d_r]_l : [K_r]_l -> [K_{r-1}]_l` in the wedge-monomial
/// bases; rows index `[K_{r-1}]_l`, columns index `[K_r]_l`. The column of
/// `T^alpha e_I` carries `(-1)^p x_{i_p j}` in the row of
/// `T_j T^alpha e_{I - i_p}` (0-based `p`).
pub fn strand_matrix(m: &PolyMatrix, r: usize, degree: usize) -> Result<PolyMatrix> {
    m.ensure_standard()?;
    let (rows, cols) = (m.rows(), m.cols());
    if r == 0 || r > rows {
        return Err(Error::IndexOutOfRange(format!(
            "Koszul position {r} outside 1..={rows}"
        )));
    }
    let target = WedgeMonomialBasis::new(rows, cols, r - 1, degree);
    let source = WedgeMonomialBasis::new(rows, cols, r, degree);
    let ring = m.ring();
    let mut out = PolyMatrix::zeros(ring, target.len(), source.len());
    for (c, (set, alpha)) in source.elements().iter().enumerate() {
        for (p, &i) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&q| q != i).collect();
            for j in 0..cols {
                let x = m.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let mut beta = alpha.clone();
                beta[j] += 1;
                let row = target
                    .position(&rest, &beta)
                    .expect("target basis contains every image");
                let entry = if p % 2 == 0 { x.clone() } else { -x };
                let sum = out.get(row, c) + &entry;
                out.set(row, c, sum);
            }
        }
    }
    Ok(out)
}

/// The degree-`l` strand `0 -> [K_m]_l -> ... -> [K_0]_l -> 0`.
pub fn koszul_strand(m: &PolyMatrix, degree: usize) -> Result<GradedComplex> {
    m.ensure_standard()?;
    let (rows, cols) = (m.rows(), m.cols());
    let maps = (1..=rows)
        .map(|r| strand_matrix(m, r, degree))
        .collect::<Result<Vec<_>>>()?;
    let labels = (0..=rows)
        .map(|r| WedgeMonomialBasis::new(rows, cols, r, degree).labels())
        .collect();
    Ok(GradedComplex::new(m.ring(), strand_ranks(rows, cols, degree), maps, None)?.with_labels(labels))
}

/// `I_1([d_m]_m) = I_1(M)`.
pub fn check_lemma_24(m: &PolyMatrix) -> Result<bool> {
    let top = strand_matrix(m, m.rows(), m.rows())?;
    minors_ideal(&top, 1)?.equals(&minors_ideal(m, 1)?)
}

/// `I_m([d_1]_1) = I_m(M)`; note `[d_1]_1` is the transpose of `M`.
pub fn check_lemma_25(m: &PolyMatrix) -> Result<bool> {
    let bottom = strand_matrix(m, 1, 1)?;
    minors_ideal(&bottom, m.rows())?.equals(&minors_ideal(m, m.rows())?)
}

/// The degree-`r` strand of the Koszul complex for an `m x (m+1)` matrix,
/// truncated at the last nonzero module, augmented by
/// `eps(T^alpha) = g_1^alpha_1 ... g_n^alpha_n` with `g` the signed maximal
/// minors. When `I_m(M)` is of linear type with the expected grades this
/// is a free resolution of `I^r`.
pub fn power_resolution(m: &PolyMatrix, power: usize) -> Result<GradedComplex> {
    m.ensure_standard()?;
    if m.cols() != m.rows() + 1 {
        return Err(Error::Shape(format!(
            "power resolution needs an m x (m+1) matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if power == 0 {
        return Err(Error::IndexOutOfRange("power must be at least 1".into()));
    }
    let (rows, cols) = (m.rows(), m.cols());
    let top = rows.min(power);
    let g = signed_maximal_minors(m)?;
    let ring = m.ring();

    let maps = (1..=top)
        .map(|r| strand_matrix(m, r, power))
        .collect::<Result<Vec<_>>>()?;
    let ranks: Vec<usize> = strand_ranks(rows, cols, power)[..=top].to_vec();
    let labels = (0..=top)
        .map(|r| WedgeMonomialBasis::new(rows, cols, r, power).labels())
        .collect();

    let mut powers: HashMap<(usize, u32), _> = HashMap::new();
    let mut eps = Vec::with_capacity(ranks[0]);
    for alpha in t_monomials(cols, power) {
        let mut prod = ring.one();
        for (j, &e) in alpha.iter().enumerate() {
            if e > 0 {
                let gj = powers
                    .entry((j, e))
                    .or_insert_with(|| g[j].pow(e).expect("exponent within bounds"));
                prod = &prod * gj;
            }
        }
        eps.push(prod);
    }
    let eps = PolyMatrix::new(ring, 1, ranks[0], eps)?;
    Ok(GradedComplex::new(ring, ranks, maps, Some(eps))?.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradecalc::GradeValue;
    use crate::groebner::Ideal;
    use crate::poly::{make_ring, MonomialOrder, Ring};
    use std::sync::Arc;

    fn mat(r: &Arc<Ring>, rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::from_strings(r, &rows).unwrap()
    }

    fn generic23() -> PolyMatrix {
        let r = make_ring(32003, &["a", "b", "c", "d", "e", "f"], 3, MonomialOrder::Grevlex).unwrap();
        mat(&r, &[&["a", "b", "c"], &["d", "e", "f"]])
    }

    /// Brute-force count of basis elements: index subsets times exponent
    /// vectors of the right degree, enumerated without the closed formula.
    fn brute_rank(m: usize, n: usize, r: usize, l: usize) -> usize {
        if l < r {
            return 0;
        }
        let subsets = (0u32..(1 << m)).filter(|s| s.count_ones() as usize == r).count();
        let d = l - r;
        let mut count = 0;
        let mut alpha = vec![0usize; n];
        loop {
            if alpha.iter().sum::<usize>() == d {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return subsets * count;
                }
                alpha[k] += 1;
                if alpha[k] <= d {
                    break;
                }
                alpha[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn strand_rank_examples() {
        assert_eq!(strand_ranks(2, 3, 2), vec![6, 6, 1]);
        let (m, n) = (3, 5);
        let at_m = strand_ranks(m, n, m);
        assert_eq!((at_m[m], at_m[m - 1]), (1, m * n));
        let at_1 = strand_ranks(m, n, 1);
        assert_eq!((at_1[1], at_1[0]), (m, n));
        for l in 0..5 {
            for r in 0..=2 {
                assert_eq!(strand_ranks(2, 3, l)[r], brute_rank(2, 3, r, l));
            }
        }
    }

    #[test]
    fn low_degree_strands_vanish() {
        let m = generic23();
        let a = strand_matrix(&m, 2, 0).unwrap();
        assert_eq!((a.rows(), a.cols()), (0, 0));
        // [K_2]_1 = 0 but [K_1]_1 = R^2
        let a = strand_matrix(&m, 2, 1).unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 0));
        assert!(strand_matrix(&m, 3, 1).is_err());
        assert!(strand_matrix(&m, 0, 1).is_err());
    }

    #[test]
    fn first_strand_is_transpose() {
        let m = generic23();
        assert_eq!(strand_matrix(&m, 1, 1).unwrap(), m.transpose());
    }

    #[test]
    fn top_strand_column() {
        let m = generic23();
        let a = strand_matrix(&m, 2, 2).unwrap();
        assert_eq!((a.rows(), a.cols()), (6, 1));
        // rows e{1}*T1..T3 then e{2}*T1..T3; d(e1 ^ e2) = f1 e2 - f2 e1
        let col: Vec<String> = (0..6).map(|i| a.get(i, 0).to_string()).collect();
        assert_eq!(col, vec!["-d", "-e", "-f", "a", "b", "c"]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let r = make_ring(32003, &["x", "y", "z"], 4, MonomialOrder::Grevlex).unwrap();
        let m = mat(&r, &[&["x", "y", "z", "0"], &["y^2", "0", "x", "z"], &["1", "x+z", "y", "x*y"]]);
        for l in 0..=4 {
            for k in 1..3 {
                let a = strand_matrix(&m, k, l).unwrap();
                let b = strand_matrix(&m, k + 1, l).unwrap();
                assert!(a.mul(&b).unwrap().is_zero(), "r={k} l={l}");
            }
        }
    }

    #[test]
    fn lemma_checks_on_examples() {
        let m = generic23();
        assert!(check_lemma_24(&m).unwrap());
        assert!(check_lemma_25(&m).unwrap());
        let r = make_ring(32003, &["x", "y"], 3, MonomialOrder::Grevlex).unwrap();
        let m = mat(&r, &[&["x", "y", "0"], &["0", "x", "y"]]);
        assert!(check_lemma_24(&m).unwrap());
        assert!(check_lemma_25(&m).unwrap());
        let r = make_ring(32003, &["x"], 1, MonomialOrder::Grevlex).unwrap();
        let m = mat(&r, &[&["x"]]);
        assert!(check_lemma_24(&m).unwrap());
        assert!(check_lemma_25(&m).unwrap());
    }

    #[test]
    fn first_strand_of_generic_is_acyclic() {
        let m = generic23();
        let c = koszul_strand(&m, 1).unwrap();
        let cert = buchsbaum_eisenbud_acyclic(&c);
        assert!(cert.pass);
        let p1 = cert.positions.iter().find(|p| p.position == 1).unwrap();
        assert_eq!(p1.expected_rank, 2);
        assert_eq!(p1.grade, GradeValue::Finite(2));
    }

    #[test]
    fn power_resolution_of_a_row() {
        let r = make_ring(32003, &["x", "y"], 2, MonomialOrder::Grevlex).unwrap();
        let m = mat(&r, &[&["x", "y"]]);
        let c = power_resolution(&m, 1).unwrap();
        assert_eq!(c.ranks(), &[2, 1]);
        assert_eq!(*c.map(1), mat(&r, &[&["x"], &["y"]]));
        assert_eq!(*c.augmentation().unwrap(), mat(&r, &[&["y", "-x"]]));
        assert!(buchsbaum_eisenbud_acyclic(&c).pass);
    }

    #[test]
    fn power_resolution_generic_first_power() {
        let m = generic23();
        let c = power_resolution(&m, 1).unwrap();
        assert_eq!(c.ranks(), &[3, 2]);
        assert_eq!(*c.map(1), m.transpose());
        assert!(buchsbaum_eisenbud_acyclic(&c).pass);
        let eps = Ideal::new(m.ring(), c.augmentation().unwrap().entries().to_vec()).unwrap();
        assert!(eps.equals(&minors_ideal(&m, 2).unwrap()).unwrap());
        assert!(power_resolution(&m, 0).is_err());
        let r = make_ring(32003, &["x", "y"], 2, MonomialOrder::Grevlex).unwrap();
        let sq = mat(&r, &[&["x", "y"], &["y", "x"]]);
        assert!(power_resolution(&sq, 1).is_err());
    }
}
