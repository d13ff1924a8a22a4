//! Krull dimension of quotient rings and grade of ideals.
//!
//! The base ring is a polynomial ring over a field, which is Cohen–Macaulay,
//! so the grade of a proper ideal equals its height `nvars - dim(ring/I)`.
//! The dimension is read off the initial ideal of a grevlex Gröbner basis as
//! the size of a largest set of variables containing the support of no
//! leading monomial.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::MonomialOrder;

/// Grade of an ideal: a finite value, or infinity for the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GradeValue {
    Finite(usize),
    Infinite,
}

impl GradeValue {
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            GradeValue::Infinite => true,
            GradeValue::Finite(g) => (g as i64) >= bound,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            GradeValue::Finite(g) => Some(g),
            GradeValue::Infinite => None,
        }
    }
}

impl PartialOrd for GradeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GradeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GradeValue::Finite(a), GradeValue::Finite(b)) => a.cmp(b),
            (GradeValue::Finite(_), GradeValue::Infinite) => Ordering::Less,
            (GradeValue::Infinite, GradeValue::Finite(_)) => Ordering::Greater,
            (GradeValue::Infinite, GradeValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for GradeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradeValue::Finite(g) => write!(f, "{g}"),
            GradeValue::Infinite => f.write_str("INFINITY"),
        }
    }
}

impl Serialize for GradeValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GradeValue::Finite(g) => s.serialize_u64(*g as u64),
            GradeValue::Infinite => s.serialize_str("INFINITY"),
        }
    }
}

impl<'de> Deserialize<'de> for GradeValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct GradeVisitor;
        impl Visitor<'_> for GradeVisitor {
            type Value = GradeValue;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or \"INFINITY\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<GradeValue, E> {
                Ok(GradeValue::Finite(v as usize))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<GradeValue, E> {
                usize::try_from(v)
                    .map(GradeValue::Finite)
                    .map_err(|_| E::custom("negative grade"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<GradeValue, E> {
                if v == "INFINITY" {
                    Ok(GradeValue::Infinite)
                } else {
                    Err(E::custom(format!("unexpected grade `{v}`")))
                }
            }
        }
        d.deserialize_any(GradeVisitor)
    }
}

/// Size of a smallest set of variables meeting every set in `supports`
/// (bitmasks). Branch and bound, seeded with a greedy cover.
pub fn min_hitting_set(supports: &[u64]) -> usize {
    let mut sets: Vec<u64> = supports.to_vec();
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    // drop supersets: hitting a subset hits the superset too
    let mut minimal: Vec<u64> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&t| t & !s == 0) {
            minimal.push(s);
        }
    }
    if minimal.is_empty() {
        return 0;
    }
    let mut best = greedy_cover(&minimal).count_ones() as usize;
    branch(&minimal, 0, 0, &mut best);
    best
}

fn greedy_cover(sets: &[u64]) -> u64 {
    let mut chosen = 0u64;
    loop {
        let open: Vec<u64> = sets.iter().copied().filter(|s| s & chosen == 0).collect();
        if open.is_empty() {
            return chosen;
        }
        let mut counts = [0usize; 64];
        for s in &open {
            let mut bits = *s;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                counts[b] += 1;
                bits &= bits - 1;
            }
        }
        let pick = (0..64).max_by_key(|&b| (counts[b], std::cmp::Reverse(b))).unwrap();
        chosen |= 1 << pick;
    }
}

fn branch(sets: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // smallest unhit set gives the narrowest branching
    let open = sets
        .iter()
        .filter(|s| **s & chosen == 0)
        .min_by_key(|s| s.count_ones());
    let Some(&set) = open else {
        *best = size;
        return;
    };
    if size + 1 >= *best {
        return;
    }
    let mut bits = set;
    while bits != 0 {
        let b = bits.trailing_zeros();
        bits &= bits - 1;
        branch(sets, chosen | (1 << b), size + 1, best);
    }
}

fn leading_supports(ideal: &Ideal, order: &MonomialOrder) -> Result<Vec<u64>> {
    assert!(ideal.ring().nvars() <= 64, "at most 64 variables");
    let gb = ideal.groebner_basis_in(order)?;
    Ok(gb
        .iter()
        .map(|g| {
            g.leading_monomial()
                .unwrap()
                .support()
                .fold(0u64, |acc, i| acc | (1 << i))
        })
        .collect())
}

/// `dim(ring / I)` using a Gröbner basis under `order`.
pub fn krull_dimension_in(ideal: &Ideal, order: &MonomialOrder) -> Result<usize> {
    let supports = leading_supports(ideal, order)?;
    if supports.contains(&0) {
        return Err(Error::UnitIdeal);
    }
    Ok(ideal.ring().nvars() - min_hitting_set(&supports))
}

/// `dim(ring / I)` from the grevlex initial ideal. Errors on the unit ideal.
pub fn krull_dimension(ideal: &Ideal) -> Result<usize> {
    krull_dimension_in(ideal, &MonomialOrder::Grevlex)
}

/// Grade (= height) of `I`: infinity for the unit ideal, 0 for the zero
/// ideal, otherwise `nvars - dim(ring / I)`.
pub fn grade(ideal: &Ideal) -> GradeValue {
    if ideal.is_zero() {
        return GradeValue::Finite(0);
    }
    match krull_dimension(ideal) {
        Ok(d) => GradeValue::Finite(ideal.ring().nvars() - d),
        Err(_) => GradeValue::Infinite,
    }
}

pub fn grade_at_least(ideal: &Ideal, bound: i64) -> bool {
    grade(ideal).at_least(bound)
}
