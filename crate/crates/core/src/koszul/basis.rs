use std::collections::HashMap;

use crate::detideal::combinations;
use crate::poly::{Monomial, MonomialOrder};

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(d + n - 1, n - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of degree `d` in `n` variables, descending in grevlex.
pub fn t_monomials(n: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d as u32, &mut Vec::new(), &mut out);
    let order = MonomialOrder::Grevlex;
    out.sort_by(|a, b| {
        order.cmp(
            &Monomial::new(b.clone()).unwrap(),
            &Monomial::new(a.clone()).unwrap(),
        )
    });
    out
}

/// The free basis `T^alpha e_{i_1} ^ ... ^ e_{i_r}` of `[K_r]_l`:
/// index sets in lexicographic order, then `T`-monomials of degree `l - r`
/// descending in grevlex. Empty when `l < r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeMonomialBasis {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub degree: usize,
    elements: Vec<(Vec<usize>, Vec<u32>)>,
    index: HashMap<(Vec<usize>, Vec<u32>), usize>,
}

impl WedgeMonomialBasis {
    pub fn new(m: usize, n: usize, r: usize, degree: usize) -> WedgeMonomialBasis {
        let mut elements = Vec::new();
        if degree >= r && r <= m {
            let monos = t_monomials(n, degree - r);
            for set in combinations(m, r) {
                for alpha in &monos {
                    elements.push((set.clone(), alpha.clone()));
                }
            }
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k))
            .collect();
        WedgeMonomialBasis {
            m,
            n,
            r,
            degree,
            elements,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[(Vec<usize>, Vec<u32>)] {
        &self.elements
    }

    pub fn position(&self, set: &[usize], alpha: &[u32]) -> Option<usize> {
        self.index.get(&(set.to_vec(), alpha.to_vec())).copied()
    }

    /// Human-readable label such as `e{1,2}*T1^2` (1-based indices).
    pub fn label(&self, k: usize) -> String {
        let (set, alpha) = &self.elements[k];
        let mut parts = Vec::new();
        if !set.is_empty() {
            let idx: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
            parts.push(format!("e{{{}}}", idx.join(",")));
        }
        for (j, &e) in alpha.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("T{}", j + 1)),
                _ => parts.push(format!("T{}^{e}", j + 1)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|k| self.label(k)).collect()
    }
}
