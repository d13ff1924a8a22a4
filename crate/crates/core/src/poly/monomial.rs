use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Exponents are stored inline for rings of up to 16 variables.
type Exps = SmallVec<[u32; 16]>;

/// An exponent vector with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Monomial> {
        let mut degree = 0u32;
        for e in &exps {
            degree = degree.checked_add(*e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps: Exps::from_vec(exps),
            degree,
        })
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: smallvec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Monomial {
        let mut exps: Exps = smallvec![0; nvars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Degree restricted to the variables at `indices`.
    pub fn partial_degree(&self, indices: impl IntoIterator<Item = usize>) -> u32 {
        indices.into_iter().map(|i| self.exps[i]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::LengthMismatch(self.exps.len(), other.exps.len()));
        }
        let mut exps = Exps::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial product")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| b - a)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// Keeps only the exponents at `keep`, in that order.
    pub(crate) fn select(&self, keep: &[usize]) -> Monomial {
        let exps: Exps = keep.iter().map(|&i| self.exps[i]).collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }
}
