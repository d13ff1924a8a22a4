use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detideal::{minors_ideal, PolyMatrix};
use crate::error::{Error, Result};
use crate::gradecalc::{grade, GradeValue};
use crate::poly::Ring;

/// A finite complex of free modules `F_s -> ... -> F_1 -> F_0` over the
/// base ring, given by matrices `A_k : F_k -> F_{k-1}`, optionally augmented
/// by a row matrix `eps : F_0 -> R`.
#[derive(Debug, Clone)]
pub struct GradedComplex {
    ring: Arc<Ring>,
    ranks: Vec<usize>,
    maps: Vec<PolyMatrix>,
    augmentation: Option<PolyMatrix>,
    labels: Vec<Vec<String>>,
}

impl GradedComplex {
    /// `ranks[k]` is the rank of `F_k`; `maps[k - 1]` is `A_k`, a
    /// `ranks[k-1] x ranks[k]` matrix. Rejects inputs whose consecutive
    /// maps do not compose to zero.
    pub fn new(
        ring: &Arc<Ring>,
        ranks: Vec<usize>,
        maps: Vec<PolyMatrix>,
        augmentation: Option<PolyMatrix>,
    ) -> Result<GradedComplex> {
        if ranks.len() != maps.len() + 1 {
            return Err(Error::Shape(format!(
                "{} ranks for {} maps",
                ranks.len(),
                maps.len()
            )));
        }
        for (k, a) in maps.iter().enumerate() {
            if a.rows() != ranks[k] || a.cols() != ranks[k + 1] {
                return Err(Error::Shape(format!(
                    "map {} is {}x{}, expected {}x{}",
                    k + 1,
                    a.rows(),
                    a.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        for k in 1..maps.len() {
            if !maps[k - 1].mul(&maps[k])?.is_zero() {
                return Err(Error::NotAComplex(k, k + 1));
            }
        }
        if let Some(eps) = &augmentation {
            if eps.rows() != 1 || eps.cols() != ranks[0] {
                return Err(Error::Shape("augmentation must be a 1 x rank(F_0) row".into()));
            }
            if let Some(a1) = maps.first() {
                if !eps.mul(a1)?.is_zero() {
                    return Err(Error::NotAComplex(0, 1));
                }
            }
        }
        let labels = ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| (1..=r).map(|i| format!("F{k}[{i}]")).collect())
            .collect();
        Ok(GradedComplex {
            ring: ring.clone(),
            ranks,
            maps,
            augmentation,
            labels,
        })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<Vec<String>>) -> GradedComplex {
        debug_assert!(labels.iter().zip(&self.ranks).all(|(l, r)| l.len() == *r));
        self.labels = labels;
        self
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Index of the top module `F_s`.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// The map `A_k : F_k -> F_{k-1}` for `k >= 1`.
    pub fn map(&self, k: usize) -> &PolyMatrix {
        &self.maps[k - 1]
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    pub fn augmentation(&self) -> Option<&PolyMatrix> {
        self.augmentation.as_ref()
    }

    pub fn labels(&self, k: usize) -> &[String] {
        &self.labels[k]
    }

    pub fn to_report(&self, degree: Option<usize>) -> ComplexReport {
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, a)| MatrixReport {
                position: k + 1,
                rows: a.rows(),
                cols: a.cols(),
                row_basis: self.labels[k].clone(),
                col_basis: self.labels[k + 1].clone(),
                entries: (0..a.rows())
                    .map(|i| (0..a.cols()).map(|j| a.get(i, j).to_string()).collect())
                    .collect(),
            })
            .collect();
        ComplexReport {
            degree,
            ranks: self.ranks.clone(),
            maps,
            augmentation: self
                .augmentation
                .as_ref()
                .map(|e| e.entries().iter().map(|p| p.to_string()).collect()),
        }
    }
}

/// Serialized form of one map of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixReport {
    pub position: usize,
    pub rows: usize,
    pub cols: usize,
    pub row_basis: Vec<String>,
    pub col_basis: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

/// Serialized form of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<usize>,
    pub ranks: Vec<usize>,
    pub maps: Vec<MatrixReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub augmentation: Option<Vec<String>>,
}

/// Outcome of the rank and grade test at one position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionCheck {
    pub position: usize,
    pub expected_rank: i64,
    pub computed_rank: usize,
    pub grade: GradeValue,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicityCertificate {
    /// Positions from the top of the complex down to 1.
    pub positions: Vec<PositionCheck>,
    pub pass: bool,
}

impl AcyclicityCertificate {
    pub fn failing_positions(&self) -> Vec<usize> {
        self.positions
            .iter()
            .filter(|p| !p.pass)
            .map(|p| p.position)
            .collect()
    }
}

/// Rank of a matrix over the fraction field of the base ring.
pub fn matrix_rank(a: &PolyMatrix) -> usize {
    a.rank()
}

/// Buchsbaum–Eisenbud test: with expected ranks `r_k = rank F_k - r_{k+1}`
/// taken from the top, the complex is acyclic iff every `A_k` has rank
/// `r_k` and `grade I_{r_k}(A_k) >= k` (where `I_0` is the unit ideal).
/// Position 0 is not tested.
pub fn buchsbaum_eisenbud_acyclic(complex: &GradedComplex) -> AcyclicityCertificate {
    let s = complex.length();
    let mut expected = vec![0i64; s + 2];
    for k in (1..=s).rev() {
        expected[k] = complex.ranks()[k] as i64 - expected[k + 1];
    }
    let mut positions: Vec<PositionCheck> = (1..=s)
        .into_par_iter()
        .map(|k| {
            let a = complex.map(k);
            let r = expected[k];
            let computed = matrix_rank(a);
            let g = if r <= 0 {
                GradeValue::Infinite
            } else if (computed as i64) < r {
                // every r-minor vanishes
                GradeValue::Finite(0)
            } else {
                grade(&minors_ideal(a, r as usize).expect("r is at most the rank"))
            };
            let pass = r >= 0 && computed as i64 == r && g.at_least(k as i64);
            PositionCheck {
                position: k,
                expected_rank: r,
                computed_rank: computed,
                grade: g,
                pass,
            }
        })
        .collect();
    positions.sort_by_key(|p| std::cmp::Reverse(p.position));
    let pass = positions.iter().all(|p| p.pass);
    AcyclicityCertificate { positions, pass }
}
