//! Buchberger's algorithm with the sugar selection strategy and the
//! Gebauer–Möller pair criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, Polynomial, Ring, RingExt, Scalar};

/// Merges two term lists sorted ascending (leading term last), adding
/// coefficients of equal monomials and dropping zeros.
fn merge_ascending(
    ring: &Ring,
    a: Vec<(Monomial, Scalar)>,
    b: impl Iterator<Item = (Monomial, Scalar)>,
) -> Vec<(Monomial, Scalar)> {
    let field = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.size_hint().0);
    let mut a = a.into_iter().peekable();
    let mut b = b.peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some((ma, _)), Some((mb, _))) => order.cmp(ma, mb),
        };
        match ord {
            Ordering::Less => out.push(a.next().unwrap()),
            Ordering::Greater => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let (m, ca) = a.next().unwrap();
                let (_, cb) = b.next().unwrap();
                let c = field.add(&ca, &cb);
                if !field.is_zero(&c) {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

/// Fully reduces `f` by `basis` (nonzero polynomials of the same ring).
pub(crate) fn reduce_full(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    // ascending, so the current leading term is popped from the end
    let mut p: Vec<(Monomial, Scalar)> = f.terms().iter().rev().cloned().collect();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.last() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = lm.quotient_of(m).unwrap();
                let coeff = field.neg(&field.div(c, lc).expect("nonzero leading coefficient"));
                p.pop();
                let tail = g.terms()[1..]
                    .iter()
                    .rev()
                    .map(|(n, a)| (n.mul(&q), field.mul(a, &coeff)));
                p = merge_ascending(&ring, p, tail);
            }
            None => rem.push(p.pop().unwrap()),
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

/// Remainder of multivariate division of `f` by `basis`: no term of the
/// result is divisible by a leading monomial of the basis, and `f` minus the
/// result lies in the ideal the basis generates.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    if basis.iter().any(|g| !same_ring(g.ring(), f.ring())) {
        return Err(Error::RingMismatch);
    }
    let refs: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    Ok(reduce_full(f, &refs))
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (lf, cf) = f.leading_term().expect("nonzero");
    let (lg, cg) = g.leading_term().expect("nonzero");
    let lcm = lf.lcm(lg);
    let a = f.mul_term(
        &lf.quotient_of(&lcm).unwrap(),
        &field.inv(cf).expect("nonzero"),
    );
    a.sub_mul_term(
        &field.inv(cg).expect("nonzero"),
        &lg.quotient_of(&lcm).unwrap(),
        g,
    )
}

/// Quotient `f / d` when `d` divides `f` exactly.
pub fn exact_division(f: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    let ring = f.ring().clone();
    let field = ring.field();
    let (ld, cd) = d.leading_term()?;
    let mut p = f.clone();
    let mut quotient = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        let q = ld.quotient_of(m)?;
        let coeff = field.div(c, cd).ok()?;
        p = p.sub_mul_term(&coeff, &q, d);
        quotient.push((q, coeff));
    }
    Some(Polynomial::from_sorted_terms(&ring, quotient))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
    /// Sugar degree of each element: the degree it would have if the
    /// input had been homogenized.
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn active_refs(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Inserts a new monic element and updates the pair set.
    fn update(&mut self, h: Polynomial, sugar: u32) {
        let hi = self.polys.len();
        let h_lm = h.leading_monomial().unwrap().clone();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(false);

        // candidate pairs (g, h), in index order
        let mut cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lm = self.lm(g);
                (g, lm.lcm(&h_lm), lm.is_coprime(&h_lm))
            })
            .collect();

        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while !cands.is_empty() {
            let (g, lcm, coprime) = cands.remove(0);
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|(_, other, _)| other.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm, coprime));
            }
        }

        let order = self.ring.order().clone();
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            if !h_lm.divides(&p.lcm) {
                return true;
            }
            let li = lm(p.i).lcm(&h_lm);
            let lj = lm(p.j).lcm(&h_lm);
            order.cmp(&li, &p.lcm) == Ordering::Equal || order.cmp(&lj, &p.lcm) == Ordering::Equal
        });
        for (g, lcm, coprime) in kept {
            if !coprime {
                let d = lcm.degree();
                let sugar = (self.sugar[g] + d - self.lm(g).degree()).max(sugar + d - h_lm.degree());
                self.pairs.push(Pair { i: g, j: hi, lcm, sugar });
            }
        }

        for g in 0..hi {
            if self.active[g] && h_lm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[hi] = true;
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(idx))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the ring's
/// active order: monic, inter-reduced, sorted by ascending leading monomial.
/// Zero generators are ignored; the zero ideal yields an empty basis and the
/// unit ideal yields `[1]`.
pub fn buchberger(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    let order = ring.order().clone();
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    if input.iter().any(|g| g.is_constant()) {
        return Ok(vec![ring.one()]);
    }
    input.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    input.dedup();

    let mut engine = Engine {
        ring: ring.clone(),
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in input {
        let reduced = reduce_full(&g, &engine.active_refs());
        if reduced.is_zero() {
            continue;
        }
        let reduced = reduced.monic();
        if reduced.is_constant() {
            return Ok(vec![ring.one()]);
        }
        let sugar = g.degree().unwrap_or(0);
        engine.update(reduced, sugar);
    }

    while let Some(pair) = engine.select_pair() {
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j]);
        let h = reduce_full(&s, &engine.active_refs());
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.is_constant() {
            return Ok(vec![ring.one()]);
        }
        engine.update(h, pair.sugar);
    }

    let mut basis: Vec<Polynomial> = engine.active_refs().into_iter().cloned().collect();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut reduced = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<&Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p)
            .collect();
        reduced.push(reduce_full(g, &others).monic());
    }
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{make_ring, MonomialOrder};

    #[test]
    fn normal_form_examples() {
        let r = make_ring(32003, &["x", "y"], 0, MonomialOrder::Grevlex).unwrap();
        let f = r.parse("x^3 + y").unwrap();
        assert!(normal_form(&f, std::slice::from_ref(&f)).unwrap().is_zero());
        assert_eq!(
            normal_form(&r.parse("y").unwrap(), &[r.parse("x").unwrap()]).unwrap(),
            r.parse("y").unwrap()
        );
        // lex with x > y so that x^2 leads x^2 - y
        let l = make_ring(32003, &["x", "y"], 0, MonomialOrder::Lex).unwrap();
        assert_eq!(
            normal_form(&l.parse("x^2*y").unwrap(), &[l.parse("x^2 - y").unwrap()]).unwrap(),
            l.parse("y^2").unwrap()
        );
    }

    #[test]
    fn two_linear_forms() {
        for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            let r = make_ring(32003, &["x", "y"], 0, order).unwrap();
            let gb = buchberger(&r, &[r.parse("x+y").unwrap(), r.parse("x-y").unwrap()]).unwrap();
            assert_eq!(gb, vec![r.parse("y").unwrap(), r.parse("x").unwrap()]);
        }
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = make_ring(7, &["x"], 0, MonomialOrder::Grevlex).unwrap();
        assert!(buchberger(&r, &[r.zero()]).unwrap().is_empty());
        assert!(buchberger(&r, &[]).unwrap().is_empty());
        assert_eq!(
            buchberger(&r, &[r.parse("x").unwrap(), r.parse("x+1").unwrap()]).unwrap(),
            vec![r.one()]
        );
    }

    #[test]
    fn lex_elimination_example() {
        // x^2 = y and x^3 = x give x*y - x and y^2 - y by hand
        let r = make_ring(32003, &["x", "y"], 0, MonomialOrder::Lex).unwrap();
        let gb = buchberger(&r, &[r.parse("x^2 - y").unwrap(), r.parse("x^3 - x").unwrap()]).unwrap();
        let expected = vec![
            r.parse("y^2 - y").unwrap(),
            r.parse("x*y - x").unwrap(),
            r.parse("x^2 - y").unwrap(),
        ];
        assert_eq!(gb, expected);
        assert!(normal_form(&r.parse("y^3 - y").unwrap(), &gb).unwrap().is_zero());
    }

    #[test]
    fn exact_division_detects_divisibility() {
        let r = make_ring(0, &["x", "y"], 0, MonomialOrder::Grevlex).unwrap();
        let f = r.parse("x^2 - y^2").unwrap();
        let d = r.parse("x - y").unwrap();
        assert_eq!(exact_division(&f, &d).unwrap(), r.parse("x + y").unwrap());
        assert!(exact_division(&f, &r.parse("x").unwrap()).is_none());
    }
}
