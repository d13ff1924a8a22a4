//! Monomial orders. Variables are ranked by their position in the ring:
//! the first variable is the largest.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Block order: grevlex on the `front` variables first, then grevlex on
    /// the remaining ones. Any monomial involving a front variable exceeds
    /// every monomial free of them.
    Elimination { front: Vec<usize> },
}

/// Grevlex restricted to the variables yielded by `vars` (in ring order).
fn grevlex_on(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
    let da: u32 = vars.iter().map(|&i| a.exp(i)).sum();
    let db: u32 = vars.iter().map(|&i| b.exp(i)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for &i in vars.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn elimination(mut front: Vec<usize>) -> MonomialOrder {
        front.sort_unstable();
        front.dedup();
        MonomialOrder::Elimination { front }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Elimination { front } => format!("elim{front:?}"),
        }
    }

    /// Total comparison; callers guarantee equal lengths.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Grevlex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for (x, y) in a.exps().iter().zip(b.exps()).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination { front } => {
                match grevlex_on(a, b, front) {
                    Ordering::Equal => {}
                    other => return other,
                }
                let fa: u32 = front.iter().map(|&i| a.exp(i)).sum();
                let fb: u32 = front.iter().map(|&i| b.exp(i)).sum();
                match (a.degree() - fa).cmp(&(b.degree() - fb)) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for i in (0..a.nvars()).rev() {
                    if front.contains(&i) {
                        continue;
                    }
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Checked comparison that rejects monomials of different lengths.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    /// True if this order eliminates exactly the variables in `vars`.
    pub fn eliminates(&self, vars: &[usize]) -> bool {
        let mut wanted = vars.to_vec();
        wanted.sort_unstable();
        wanted.dedup();
        match self {
            MonomialOrder::Elimination { front } => *front == wanted,
            // lex eliminates any prefix of the variable list
            MonomialOrder::Lex => wanted.iter().enumerate().all(|(k, &v)| k == v),
            MonomialOrder::Grevlex => wanted.is_empty(),
        }
    }
}
