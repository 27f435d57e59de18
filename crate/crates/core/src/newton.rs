//! Newton polynomials `f_n` and checks of their defining identities.
//!
//! `f_n` is built by the recursion
//!
//! ```text
//! f_n = sum_{k=1}^{n-1} (-1)^(k-1) x_k f_{n-k} + (-1)^(n-1) n x_n
//! ```
//!
//! over `Z[x1, ..., xn]` with `xi` of weight `i`. Results are cached for the
//! lifetime of the process; computing `f_n` fills in every `f_k`, `k < n`.

use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::integer_rank;
use crate::poly::{partitions, GradedPoly, Monomial, Partition, Substitution, VarTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPoly {
    n: usize,
    poly: GradedPoly,
}

impl NewtonPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &GradedPoly {
        &self.poly
    }

    /// `a_J` for every partition `J` of `n`, zeros included, in canonical
    /// partition order.
    pub fn coefficients(&self) -> Vec<(Partition, BigInt)> {
        partitions(self.n)
            .into_iter()
            .map(|j| {
                let c = self.poly.coefficient(&j.to_monomial());
                (j, c)
            })
            .collect()
    }
}

/// Compute-once cache of `f_1, f_2, ...`.
#[derive(Debug, Default)]
pub struct NewtonCache {
    polys: RwLock<Vec<Arc<NewtonPoly>>>,
}

impl NewtonCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize) -> Result<Arc<NewtonPoly>> {
        if n == 0 {
            return Err(Error::ZeroDegree(0));
        }
        if let Some(p) = self.polys.read().unwrap().get(n - 1) {
            return Ok(Arc::clone(p));
        }
        let mut polys = self.polys.write().unwrap();
        while polys.len() < n {
            let next = step(&polys)?;
            polys.push(Arc::new(next));
        }
        Ok(Arc::clone(&polys[n - 1]))
    }
}

fn step(prev: &[Arc<NewtonPoly>]) -> Result<NewtonPoly> {
    let n = prev.len() + 1;
    let table = newton_table(n)?;
    let mut acc = GradedPoly::var_at(&table, n - 1).scale(&BigInt::from(sign(n - 1) * n as i64));
    for k in 1..n {
        let lower = prev[n - k - 1].poly.embed(&table)?;
        let term = GradedPoly::var_at(&table, k - 1)
            .mul(&lower)?
            .scale(&BigInt::from(sign(k - 1)));
        acc = acc.add(&term)?;
    }
    Ok(NewtonPoly { n, poly: acc })
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

static CACHE: LazyLock<NewtonCache> = LazyLock::new(NewtonCache::new);

/// Variables `x1..xn` with `xi` of weight `i`.
pub fn newton_table(n: usize) -> Result<Arc<VarTable>> {
    Ok(VarTable::indexed("x", n)?)
}

pub fn newton_poly(n: usize) -> Result<Arc<NewtonPoly>> {
    CACHE.get(n)
}

pub fn newton_coefficients(n: usize) -> Result<Vec<(Partition, BigInt)>> {
    Ok(newton_poly(n)?.coefficients())
}

/// `xi -> t*x_{i-1} + xi` with `x0 = 1`; `t` is `None` for the plain shift
/// `xi -> x_{i-1} + xi`.
fn shift_substitution(
    source: &Arc<VarTable>,
    target: &Arc<VarTable>,
    t: Option<&GradedPoly>,
) -> Result<Substitution> {
    let mut s = Substitution::new(source, target);
    for i in 1..=source.len() {
        let prev = if i == 1 {
            GradedPoly::one(target)
        } else {
            GradedPoly::var(target, &format!("x{}", i - 1))?
        };
        let prev = match t {
            Some(t) => t.mul(&prev)?,
            None => prev,
        };
        let image = prev.add(&GradedPoly::var(target, &format!("x{i}"))?)?;
        s.set_at(i - 1, image)?;
    }
    Ok(s)
}

/// `f_n(1 + x1, x1 + x2, ..., x_{n-1} + xn) == 1 + f_n`.
pub fn check_shift_property(n: usize) -> Result<bool> {
    let f = newton_poly(n)?;
    let table = f.poly.table();
    let s = shift_substitution(table, table, None)?;
    let lhs = f.poly.substitute(&s)?;
    let rhs = GradedPoly::one(table).add(&f.poly)?;
    Ok(lhs == rhs)
}

/// `f_n(t + x1, t*x1 + x2, ..., t*x_{n-1} + xn) == t^n + f_n` with `t` of
/// weight one.
pub fn check_homogenized_identity(n: usize) -> Result<bool> {
    let f = newton_poly(n)?;
    let source = f.poly.table();
    let target = VarTable::new(
        std::iter::once(("t".to_string(), 1)).chain(
            source
                .names()
                .iter()
                .cloned()
                .zip(source.weights().iter().copied()),
        ),
    )?;
    let t = GradedPoly::var(&target, "t")?;
    let s = shift_substitution(source, &target, Some(&t))?;
    let lhs = f.poly.substitute(&s)?;
    let rhs = t.pow(n as u32).add(&f.poly.embed(&target)?)?;
    Ok(lhs == rhs)
}

/// Rank of `h -> h(1 + x1, ..., x_{n-1} + xn) - h` on the span of the
/// weighted-degree-`n` monomials, together with that span's dimension.
pub fn shift_map_rank(n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::ZeroDegree(0));
    }
    let table = newton_table(n)?;
    let s = shift_substitution(&table, &table, None)?;
    let basis = partitions(n);
    let mut images = Vec::with_capacity(basis.len());
    for j in &basis {
        let m = GradedPoly::from_terms(&table, [(j.to_monomial(), 1)])?;
        images.push(m.substitute(&s)?.sub(&m)?);
    }
    let mut columns: Vec<Monomial> = images
        .iter()
        .flat_map(|p| p.raw_terms().map(|(m, _)| m.clone()))
        .collect();
    columns.sort();
    columns.dedup();
    let rows: Vec<Vec<BigInt>> = images
        .iter()
        .map(|p| columns.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    Ok((integer_rank(&rows), basis.len()))
}

/// True iff the shift map is injective on homogeneous degree-`n`
/// polynomials, i.e. `f_n` is pinned down by the shift identity.
pub fn uniqueness_kernel_check(n: usize) -> Result<bool> {
    let (rank, dim) = shift_map_rank(n)?;
    Ok(rank == dim)
}
