//! Ideals with cached reduced Gröbner bases; membership, equality and
//! elimination.

mod buchberger;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use buchberger::{buchberger, exact_division, normal_form, s_polynomial};

use crate::error::{Error, Result};
use crate::poly::{same_ring, MonomialOrder, Polynomial, Ring, RingExt};

/// An ideal given by generators. Reduced Gröbner bases are computed lazily
/// and cached per monomial order.
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("gens", &self.gens).finish()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, vec![ring.one()]).unwrap()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis under the ring's active order.
    pub fn groebner_basis(&self) -> Arc<Vec<Polynomial>> {
        self.groebner_basis_in(self.ring.order())
            .expect("active order of a valid ring")
    }

    /// Reduced Gröbner basis under `order`; its elements live in the ring
    /// with the same variables and `order` as the active order.
    pub fn groebner_basis_in(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let ring = if order == self.ring.order() {
            self.ring.clone()
        } else {
            self.ring.with_order(order.clone())?
        };
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(&ring))
            .collect::<Result<Vec<_>>>()?;
        let gb = buchberger(&ring, &gens)?;
        for g in &gens {
            assert!(
                normal_form(g, &gb)?.is_zero(),
                "Gröbner basis does not reduce generator {g}"
            );
        }
        let gb = Arc::new(gb);
        self.cache
            .lock()
            .unwrap()
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis();
        gb.len() == 1 && gb[0].is_constant()
    }

    /// Membership test: `f` reduces to zero modulo the Gröbner basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form(f, &self.groebner_basis())?.is_zero())
    }

    /// True if every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by comparing canonical reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(*self.groebner_basis() == *other.groebner_basis())
    }

    /// The elimination ideal `I ∩ k[remaining variables]`, returned in the
    /// contracted ring. The active order must eliminate exactly `drop`.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        if let Some(&bad) = drop.iter().find(|&&v| v >= self.ring.nvars()) {
            return Err(Error::IndexOutOfRange(format!("variable {bad}")));
        }
        if !self.ring.order().eliminates(drop) {
            return Err(Error::NotEliminationOrder);
        }
        let target = self.ring.contract(drop)?;
        let keep: Vec<usize> = (0..self.ring.nvars()).filter(|i| !drop.contains(i)).collect();
        let gens = self
            .groebner_basis()
            .iter()
            .filter(|g| drop.iter().all(|&v| !g.involves(v)))
            .map(|g| g.contract_into(&keep, &target))
            .collect();
        Ideal::new(&target, gens)
    }
}

/// `f ∈ I`.
pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// `I = J`.
pub fn ideal_equals(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

/// `I ∩ k[other variables]`.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    ideal.eliminate(drop)
}
