//! Brute-force oracles built independently of the Newton recursion.
//!
//! * Classical Newton identity: `f_n(e_1, ..., e_n) = y1^n + ... + ym^n`,
//!   where `e_i` are elementary symmetric functions expanded term by term.
//! * Fiber models: the tangent bundle of a surface bundle splits as the
//!   vertical bundle plus the pulled-back base bundle, so
//!   `p_i(TE) = e^2 b_{i-1} + b_i` and `c_i(TX) = e c_{i-1} + c_i`. Feeding
//!   those into `f_n` must leave `e^{2n}` (resp. `e^{n+1}`) plus a pure base
//!   class of top degree, which vanishes on the base.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::newton::newton_poly;
use crate::poly::{GradedPoly, Monomial, Substitution, VarTable};

/// Ground ring `Z[y1, ..., ym]`, every `yi` of weight one.
#[derive(Debug, Clone)]
pub struct SymmetricWorkspace {
    m: usize,
    table: Arc<VarTable>,
}

impl SymmetricWorkspace {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("workspace needs m >= 1".into()));
        }
        let table = VarTable::new((1..=m).map(|i| (format!("y{i}"), 1)))?;
        Ok(SymmetricWorkspace { m, table })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }
}

/// `e_i(y1, ..., ym)`: the sum of all squarefree degree-`i` monomials.
/// `e_0 = 1`; `e_i = 0` for `i > m`.
pub fn elementary_symmetric(i: usize, w: &SymmetricWorkspace) -> GradedPoly {
    let terms = (0..w.m).combinations(i).map(|subset| {
        let mut e = vec![0u32; w.m];
        for k in subset {
            e[k] = 1;
        }
        (Monomial::new(e), 1)
    });
    GradedPoly::from_terms(&w.table, terms).expect("exponent vectors sized to the table")
}

/// `y1^n + ... + ym^n`.
pub fn power_sum(n: usize, w: &SymmetricWorkspace) -> GradedPoly {
    let terms = (0..w.m).map(|k| {
        let mut e = vec![0u32; w.m];
        e[k] = n as u32;
        (Monomial::new(e), 1)
    });
    GradedPoly::from_terms(&w.table, terms).expect("exponent vectors sized to the table")
}

/// Checks `f_n(e_1, ..., e_n) = p_n` in `m >= n` variables.
pub fn verify_newton_identity(n: usize, m: usize) -> Result<bool> {
    if m < n {
        return Err(Error::TooFewVariables { n, need: n, got: m });
    }
    let f = newton_poly(n)?;
    let w = SymmetricWorkspace::new(m)?;
    let mut s = Substitution::new(f.poly().table(), w.table());
    for i in 1..=n {
        s.set_at(i - 1, elementary_symmetric(i, &w))?;
    }
    Ok(f.poly().substitute(&s)? == power_sum(n, &w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberKind {
    Pontryagin,
    Chern,
}

/// Cohomology model of a surface bundle's total space: the fiber class `e`
/// (weight 1) and base classes `b1..bn` (Pontryagin) or `c1..c_{n+1}`
/// (Chern), the `i`-th of weight `i`.
#[derive(Debug, Clone)]
pub struct FiberModel {
    kind: FiberKind,
    n: usize,
    table: Arc<VarTable>,
}

impl FiberModel {
    pub fn new(kind: FiberKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree(0));
        }
        let (prefix, count) = match kind {
            FiberKind::Pontryagin => ("b", n),
            FiberKind::Chern => ("c", n + 1),
        };
        let table = VarTable::new(
            std::iter::once(("e".to_string(), 1))
                .chain((1..=count).map(|i| (format!("{prefix}{i}"), i as u32))),
        )?;
        Ok(FiberModel { kind, n, table })
    }

    pub fn kind(&self) -> FiberKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    /// Degree of the Newton polynomial fed with total-space classes.
    pub fn newton_degree(&self) -> usize {
        match self.kind {
            FiberKind::Pontryagin => self.n,
            FiberKind::Chern => self.n + 1,
        }
    }

    /// Exponent of `e` in the surviving term: `e^{2n}` or `e^{n+1}`.
    pub fn top_power(&self) -> u32 {
        match self.kind {
            FiberKind::Pontryagin => 2 * self.n as u32,
            FiberKind::Chern => self.n as u32 + 1,
        }
    }

    fn fiber_factor(&self) -> GradedPoly {
        let e = GradedPoly::var_at(&self.table, 0);
        match self.kind {
            FiberKind::Pontryagin => e.pow(2),
            FiberKind::Chern => e,
        }
    }
}

/// Outcome of feeding total-space classes into `f_n`.
#[derive(Debug, Clone)]
pub struct FiberSubstitution {
    /// `f(e^k b_{i-1} + b_i)` expanded.
    pub result: GradedPoly,
    /// `result - e^{top}`.
    pub residual: GradedPoly,
    /// `f(b_1, ..., b_n)` over the model's table.
    pub base_newton: GradedPoly,
}

pub fn fiber_substitution(model: &FiberModel) -> Result<FiberSubstitution> {
    let deg = model.newton_degree();
    let f = newton_poly(deg)?;
    let table = &model.table;
    let factor = model.fiber_factor();

    let mut split = Substitution::new(f.poly().table(), table);
    let mut pullback = Substitution::new(f.poly().table(), table);
    for i in 1..=deg {
        let base_i = GradedPoly::var_at(table, i);
        let base_prev = if i == 1 {
            GradedPoly::one(table)
        } else {
            GradedPoly::var_at(table, i - 1)
        };
        split.set_at(i - 1, factor.mul(&base_prev)?.add(&base_i)?)?;
        pullback.set_at(i - 1, base_i)?;
    }
    let result = f.poly().substitute(&split)?;
    let top = GradedPoly::var_at(table, 0).pow(model.top_power());
    let residual = result.sub(&top)?;
    let base_newton = f.poly().substitute(&pullback)?;
    Ok(FiberSubstitution {
        result,
        residual,
        base_newton,
    })
}

/// True iff `f(total-space classes) = e^{top} + f(base classes)` and the
/// residual is a pure base class of weighted degree `n` (Pontryagin) or
/// `n + 1` (Chern), hence zero on the base manifold.
pub fn verify_fiber_substitution(model: &FiberModel) -> Result<bool> {
    let out = fiber_substitution(model)?;
    let deg = model.newton_degree() as u64;
    let pure_base = out
        .residual
        .raw_terms()
        .all(|(m, _)| m.exponents()[0] == 0 && m.weighted_degree(model.table()) == deg);
    Ok(pure_base && out.residual == out.base_newton)
}

/// Expands a polynomial in the `e_i` to the `y`'s; the workhorse behind the
/// symmetric round-trip property tests.
pub fn expand_in_elementary(p: &GradedPoly, w: &SymmetricWorkspace) -> Result<GradedPoly> {
    let mut s = Substitution::new(p.table(), w.table());
    for i in 1..=p.table().len() {
        s.set_at(i - 1, elementary_symmetric(i, w))?;
    }
    Ok(p.substitute(&s)?)
}

/// True iff `p` is invariant under every transposition of adjacent `y`'s.
pub fn is_symmetric(p: &GradedPoly) -> bool {
    let m = p.table().len();
    (0..m.saturating_sub(1)).all(|k| {
        let swapped: Vec<(Monomial, BigInt)> = p
            .raw_terms()
            .map(|(mono, c)| {
                let mut e = mono.exponents().to_vec();
                e.swap(k, k + 1);
                (Monomial::new(e), c.clone())
            })
            .collect();
        GradedPoly::from_terms(p.table(), swapped).as_ref() == Ok(p)
    })
}
