use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, Scalar};

/// Which block a ring variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarBlock {
    /// Generators of the base ring R.
    Base,
    /// The degree-one form variables T_1..T_n of S = R[T].
    Form,
    /// The auxiliary variable t of R[t], used for Rees algebras.
    Elim,
}

/// A polynomial ring `k[base | T_1..T_n | t?]` with an active monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: Field,
    names: Vec<String>,
    blocks: Vec<VarBlock>,
    order: MonomialOrder,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Builds `k[base_vars, T1..Tn]` where `n = form_count`; the form
/// variables are named `T1`, `T2`, ...
pub fn make_ring<S: AsRef<str>>(
    characteristic: u64,
    base_vars: &[S],
    form_count: usize,
    order: MonomialOrder,
) -> Result<Arc<Ring>> {
    let field = Field::from_characteristic(characteristic)?;
    let mut names: Vec<String> = base_vars.iter().map(|s| s.as_ref().to_string()).collect();
    let mut blocks = vec![VarBlock::Base; names.len()];
    for j in 1..=form_count {
        names.push(format!("T{j}"));
        blocks.push(VarBlock::Form);
    }
    Ring::from_parts(field, names, blocks, order).map(Arc::new)
}

impl Ring {
    pub fn from_parts(
        field: Field,
        names: Vec<String>,
        blocks: Vec<VarBlock>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        assert_eq!(names.len(), blocks.len());
        let mut seen = HashSet::new();
        for name in &names {
            if !valid_name(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        if blocks.iter().filter(|b| **b == VarBlock::Elim).count() > 1 {
            return Err(Error::Shape("at most one elimination variable".into()));
        }
        if let MonomialOrder::Elimination { front } = &order {
            if front.iter().any(|&i| i >= names.len()) {
                return Err(Error::IndexOutOfRange(format!(
                    "elimination block {front:?} in a ring with {} variables",
                    names.len()
                )));
            }
        }
        Ok(Ring {
            field,
            names,
            blocks,
            order,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn blocks(&self) -> &[VarBlock] {
        &self.blocks
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn indices_of(&self, block: VarBlock) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.blocks[i] == block)
            .collect()
    }

    pub fn base_vars(&self) -> Vec<usize> {
        self.indices_of(VarBlock::Base)
    }

    /// Indices of T_1..T_n, in order.
    pub fn form_vars(&self) -> Vec<usize> {
        self.indices_of(VarBlock::Form)
    }

    pub fn form_count(&self) -> usize {
        self.blocks.iter().filter(|b| **b == VarBlock::Form).count()
    }

    pub fn elim_var(&self) -> Option<usize> {
        self.blocks.iter().position(|b| *b == VarBlock::Elim)
    }

    /// Degree of a monomial in the form variables.
    pub fn form_degree(&self, m: &Monomial) -> u32 {
        m.partial_degree(self.form_vars())
    }

    /// Same variables, different active order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::from_parts(self.field, self.names.clone(), self.blocks.clone(), order).map(Arc::new)
    }

    /// Appends the Rees variable `t` (renamed if the name is taken) and
    /// switches to the block order that eliminates it.
    pub fn with_elimination_var(&self) -> Result<Arc<Ring>> {
        if self.elim_var().is_some() {
            return Err(Error::Shape("ring already has an elimination variable".into()));
        }
        let mut name = String::from("t");
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        let mut names = self.names.clone();
        let mut blocks = self.blocks.clone();
        names.push(name);
        blocks.push(VarBlock::Elim);
        let t = names.len() - 1;
        Ring::from_parts(self.field, names, blocks, MonomialOrder::elimination(vec![t]))
            .map(Arc::new)
    }

    /// The ring with the variables `drop` removed, ordered by grevlex.
    pub fn contract(&self, drop: &[usize]) -> Result<Arc<Ring>> {
        let keep: Vec<usize> = (0..self.nvars()).filter(|i| !drop.contains(i)).collect();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let blocks = keep.iter().map(|&i| self.blocks[i]).collect();
        Ring::from_parts(self.field, names, blocks, MonomialOrder::Grevlex).map(Arc::new)
    }

    /// Identical variables and field; the orders may differ.
    pub fn same_variables(&self, other: &Ring) -> bool {
        self.field == other.field && self.names == other.names && self.blocks == other.blocks
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        self.field.from_i64(v)
    }
}

/// Convenience constructors that need the shared handle.
pub trait RingExt {
    fn zero(&self) -> Polynomial;
    fn one(&self) -> Polynomial;
    fn constant(&self, c: Scalar) -> Polynomial;
    fn var(&self, index: usize) -> Polynomial;
    /// The form variable T_j, with `j` counted from 0.
    fn form(&self, j: usize) -> Polynomial;
    fn parse(&self, text: &str) -> Result<Polynomial>;
}

impl RingExt for Arc<Ring> {
    fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    fn one(&self) -> Polynomial {
        Polynomial::constant(self, self.field.one())
    }

    fn constant(&self, c: Scalar) -> Polynomial {
        Polynomial::constant(self, c)
    }

    fn var(&self, index: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), index), self.field.one())
    }

    fn form(&self, j: usize) -> Polynomial {
        let idx = self.form_vars()[j];
        self.var(idx)
    }

    fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::poly::parse_poly(self, text)
    }
}
