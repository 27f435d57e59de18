//! Exact multivariate polynomials over arbitrary-precision integers.
//!
//! Every polynomial lives over a [`VarTable`], an ordered list of named
//! variables each carrying a positive integer weight. The weighted degree of
//! a monomial is `sum(exponent[i] * weight[i])`.
//!
//! Terms are kept in canonical form: no zero coefficients are ever stored.
//! The canonical *order* used for printing is descending weighted degree,
//! then descending lexicographic order on the exponent vector.

mod partition;
mod text;

pub use partition::{partitions, Partition};

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("invalid variable table: {0}")]
    InvalidTable(String),
    #[error("operands live over different variable tables")]
    TableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("monomial has {found} exponents but the table has {expected} variables")]
    Arity { expected: usize, found: usize },
    #[error("cannot embed: {0}")]
    Embed(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Ordered, weighted variable names. The order is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarTable {
    pub fn new<I, S>(vars: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (name, weight) in vars {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(PolyError::InvalidTable(format!(
                    "bad variable name `{name}`"
                )));
            }
            if weight == 0 {
                return Err(PolyError::InvalidTable(format!(
                    "variable `{name}` has weight 0"
                )));
            }
            if names.contains(&name) {
                return Err(PolyError::InvalidTable(format!(
                    "duplicate variable `{name}`"
                )));
            }
            names.push(name);
            weights.push(weight);
        }
        Ok(Arc::new(VarTable { names, weights }))
    }

    /// Variables `{prefix}1 .. {prefix}n`, with `{prefix}i` of weight `i`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Arc<Self>, PolyError> {
        Self::new((1..=n).map(|i| (format!("{prefix}{i}"), i as u32)))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn weight(&self, idx: usize) -> u32 {
        self.weights[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Dense exponent vector, parallel to a [`VarTable`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, table: &VarTable) -> u64 {
        self.0
            .iter()
            .zip(&table.weights)
            .map(|(&e, &w)| u64::from(e) * u64::from(w))
            .sum()
    }

    /// Degree with every variable counted with weight one.
    pub fn pseudo_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Canonical order: higher weighted degree first, then descending lex.
pub fn canonical_cmp(table: &VarTable, a: &Monomial, b: &Monomial) -> Ordering {
    b.weighted_degree(table)
        .cmp(&a.weighted_degree(table))
        .then_with(|| b.cmp(a))
}

/// A polynomial with integer coefficients over a weighted [`VarTable`].
#[derive(Debug, Clone)]
pub struct GradedPoly {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

impl GradedPoly {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        GradedPoly {
            table: Arc::clone(table),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, BigInt::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::one(table.len()), c.into());
        p
    }

    pub fn var(table: &Arc<VarTable>, name: &str) -> Result<Self, PolyError> {
        let idx = table
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(table, idx))
    }

    pub fn var_at(table: &Arc<VarTable>, idx: usize) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::var(table.len(), idx), BigInt::one());
        p
    }

    pub fn from_terms<I, C>(table: &Arc<VarTable>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            if m.len() != table.len() {
                return Err(PolyError::Arity {
                    expected: table.len(),
                    found: m.len(),
                });
            }
            p.add_term(m, c.into());
        }
        Ok(p)
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(&self.table, a.0, b.0));
        v
    }

    /// Terms in unspecified (but deterministic) order.
    pub fn raw_terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &GradedPoly) -> Result<(), PolyError> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(PolyError::TableMismatch)
        }
    }

    pub fn add(&self, other: &GradedPoly) -> Result<GradedPoly, PolyError> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedPoly) -> Result<GradedPoly, PolyError> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> GradedPoly {
        GradedPoly {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> GradedPoly {
        if k.is_zero() {
            return Self::zero(&self.table);
        }
        GradedPoly {
            table: Arc::clone(&self.table),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &GradedPoly) -> Result<GradedPoly, PolyError> {
        self.check_table(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = Self::zero(&self.table);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> GradedPoly {
        let mut base = self.clone();
        let mut acc = Self::one(&self.table);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Weighted degrees of all terms, deduplicated and ascending.
    pub fn degrees(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(&self.table))
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Some(d)` when every term has weighted degree `d`. The zero
    /// polynomial is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn is_homogeneous_of(&self, d: u64) -> bool {
        self.terms
            .keys()
            .all(|m| m.weighted_degree(&self.table) == d)
    }

    pub fn homogeneous_component(&self, d: u64) -> GradedPoly {
        GradedPoly {
            table: Arc::clone(&self.table),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(&self.table) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest exponent of variable `idx` across all terms.
    pub fn max_exponent(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// Ring-homomorphism image of `self` under `subst`.
    pub fn substitute(&self, subst: &Substitution) -> Result<GradedPoly, PolyError> {
        if !same_table(&self.table, &subst.source) {
            return Err(PolyError::TableMismatch);
        }
        // Powers of each image, built lazily up to the largest exponent used.
        let mut powers: Vec<Vec<GradedPoly>> = Vec::with_capacity(self.table.len());
        for idx in 0..self.table.len() {
            let top = self.max_exponent(idx);
            if top == 0 {
                powers.push(Vec::new());
                continue;
            }
            let image = subst.images[idx]
                .as_ref()
                .ok_or_else(|| PolyError::MissingImage(self.table.name(idx).to_string()))?;
            let mut pw = vec![GradedPoly::one(&subst.target), image.clone()];
            for _ in 2..=top {
                let next = pw.last().unwrap().mul_unchecked(image);
                pw.push(next);
            }
            powers.push(pw);
        }

        let mut out = GradedPoly::zero(&subst.target);
        for (m, c) in &self.terms {
            let mut prod = GradedPoly::constant(&subst.target, c.clone());
            for (idx, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul_unchecked(&powers[idx][e as usize]);
                }
            }
            for (pm, pc) in prod.terms {
                out.add_term(pm, pc);
            }
        }
        Ok(out)
    }

    /// Re-express over a table that contains every variable of `self` under
    /// the same name and weight.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<GradedPoly, PolyError> {
        let mut map = Vec::with_capacity(self.table.len());
        for (i, name) in self.table.names.iter().enumerate() {
            let j = target
                .index_of(name)
                .ok_or_else(|| PolyError::Embed(format!("`{name}` missing from target")))?;
            if target.weight(j) != self.table.weight(i) {
                return Err(PolyError::Embed(format!("`{name}` changes weight")));
            }
            map.push(j);
        }
        let mut out = GradedPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] = x;
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Same terms, read over a table with identical weights but other names.
    pub fn relabel(&self, target: &Arc<VarTable>) -> Result<GradedPoly, PolyError> {
        if target.weights != self.table.weights {
            return Err(PolyError::TableMismatch);
        }
        Ok(GradedPoly {
            table: Arc::clone(target),
            terms: self.terms.clone(),
        })
    }

    pub fn max_abs_coefficient(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl GradedPoly {
    pub fn to_text(&self) -> String {
        text::render(self)
    }

    /// Parse the canonical text form, e.g. `x1^3 - 3*x1*x2 + 3*x3`.
    pub fn parse(table: &Arc<VarTable>, s: &str) -> Result<GradedPoly, PolyError> {
        text::parse(table, s)
    }
}

/// Variable images for [`GradedPoly::substitute`]; all images live over one
/// target table.
#[derive(Debug, Clone)]
pub struct Substitution {
    source: Arc<VarTable>,
    target: Arc<VarTable>,
    images: Vec<Option<GradedPoly>>,
}

impl Substitution {
    pub fn new(source: &Arc<VarTable>, target: &Arc<VarTable>) -> Self {
        Substitution {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images: vec![None; source.len()],
        }
    }

    pub fn set(&mut self, name: &str, image: GradedPoly) -> Result<&mut Self, PolyError> {
        let idx = self
            .source
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        self.set_at(idx, image)
    }

    pub fn set_at(&mut self, idx: usize, image: GradedPoly) -> Result<&mut Self, PolyError> {
        if !same_table(&image.table, &self.target) {
            return Err(PolyError::TableMismatch);
        }
        self.images[idx] = Some(image);
        Ok(self)
    }

    pub fn with(mut self, name: &str, image: GradedPoly) -> Result<Self, PolyError> {
        self.set(name, image)?;
        Ok(self)
    }

    pub fn source(&self) -> &Arc<VarTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VarTable> {
        &self.target
    }
}
