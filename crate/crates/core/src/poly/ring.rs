//! Polynomial ring descriptors.

use std::cmp::Ordering;

use thiserror::Error;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("block split {split} out of range for {nvars} variables")]
    BlockSplitOutOfRange { split: usize, nvars: usize },
}

/// Resource limits for Gröbner basis computations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced per basis computation.
    pub max_pairs: Option<u64>,
}

/// Variables, coefficient field, and monomial order. Immutable once built.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
    aux: usize,
    budget: Budget,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<F: Field> PolyRing<F> {
    pub fn new<S: AsRef<str>>(field: F, vars: &[S], order: MonomialOrder) -> Result<Self, RingError> {
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !valid_name(v) {
                return Err(RingError::InvalidVariableName(v.to_string()));
            }
            if names.iter().any(|n| n == v) {
                return Err(RingError::DuplicateVariable(v.to_string()));
            }
            names.push(v.to_string());
        }
        if let MonomialOrder::Block { split } = order {
            if split == 0 || split >= names.len() {
                return Err(RingError::BlockSplitOutOfRange { split, nvars: names.len() });
            }
        }
        Ok(Self { field, vars: names, order, aux: 0, budget: Budget::default() })
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Number of leading auxiliary variables added by
    /// [`PolyRing::elimination_ring`].
    pub fn aux_vars(&self) -> usize {
        self.aux
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Degree used for pair selection: the total degree in the
    /// non-auxiliary variables.
    pub fn selection_degree(&self, m: &Monomial) -> u32 {
        m.degree() - m.exponents()[..self.aux].iter().map(|&e| e as u32).sum::<u32>()
    }

    /// This ring with one auxiliary variable prepended and an order that
    /// eliminates it.
    pub fn elimination_ring(&self) -> Self {
        let mut name = "_t".to_string();
        while self.vars.contains(&name) {
            name.insert(0, '_');
        }
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name);
        vars.extend(self.vars.iter().cloned());
        let order = match self.order {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::Block { split: 1 },
        };
        Self { field: self.field.clone(), vars, order, aux: 1, budget: self.budget }
    }

    /// Same variables and field with another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self, RingError> {
        let r = Self::new(self.field.clone(), &self.vars, order)?;
        Ok(r.with_budget(self.budget))
    }
}
