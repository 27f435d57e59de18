//! Enumerative invariants of the Atiyah-Kodaira branched-cover construction.
//!
//! Start from a closed surface `S` of genus `g_S` and `k >= 2`. Let
//! `Ŝ -> S` be the `k^{2 g_S}`-sheeted normal cover and `Δ ⊂ Ŝ × S` the union
//! of `k` disjoint graphs of degree-`k^{2 g_S}` maps `Ŝ -> S`. The cyclic
//! `k`-fold cover `M` of `Ŝ × S` branched along `Δ` fibers over `Ŝ` with
//! fiber a `k`-fold cover of `S` branched at `k` points, and over `S` with
//! fiber a `k`-fold cover of `Ŝ` branched at `k^{2 g_S + 1}` points.
//!
//! Two inputs are classical rather than derived here:
//!
//! * a graph of `F: Ŝ -> S` has self-intersection `deg F · χ(S)`;
//! * a `k`-fold cyclic cover branched along a smooth curve `Δ` has signature
//!   `σ = -((k² - 1) / (3k)) [Δ]²`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::charnum::{min_genus_bound, signature_to_e1};
use crate::error::{Error, Result};

/// Source of the signature formula, surfaced in text reports.
pub const SIGNATURE_FORMULA_NOTE: &str = "signature uses the cyclic branched-cover formula \
     sigma = -((k^2-1)/(3k)) * [Delta]^2 and [Delta_i]^2 = deg * chi(S)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AKParams {
    genus_s: u32,
    sheets: u32,
}

impl AKParams {
    pub fn new(genus_s: u32, sheets: u32) -> Result<Self> {
        if genus_s < 2 {
            return Err(Error::InvalidParams(format!(
                "genus of S must be at least 2, got {genus_s}"
            )));
        }
        if sheets < 2 {
            return Err(Error::InvalidParams(format!(
                "number of sheets must be at least 2, got {sheets}"
            )));
        }
        Ok(AKParams { genus_s, sheets })
    }

    pub fn genus_s(&self) -> u32 {
        self.genus_s
    }

    pub fn sheets(&self) -> u32 {
        self.sheets
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AKReport {
    pub cover_degree: BigInt,
    pub genus_hat: BigInt,
    pub branch_points_on_s: BigInt,
    pub branch_points_on_hat: BigInt,
    pub fiber_genus_over_hat: BigInt,
    pub fiber_genus_over_s: BigInt,
    pub delta_self_intersection: BigInt,
    pub signature: BigInt,
    pub e1_number: BigInt,
    pub genus_bound: Option<usize>,
}

impl AKReport {
    /// Field names and values, in serialization order. A missing genus bound
    /// is reported as `0`.
    pub fn fields(&self) -> Vec<(&'static str, BigInt)> {
        vec![
            ("cover_degree", self.cover_degree.clone()),
            ("genus_hat", self.genus_hat.clone()),
            ("branch_points_on_S", self.branch_points_on_s.clone()),
            ("branch_points_on_hat", self.branch_points_on_hat.clone()),
            ("fiber_genus_over_hat", self.fiber_genus_over_hat.clone()),
            ("fiber_genus_over_S", self.fiber_genus_over_s.clone()),
            (
                "delta_self_intersection",
                self.delta_self_intersection.clone(),
            ),
            ("signature", self.signature.clone()),
            ("e1_number", self.e1_number.clone()),
            ("genus_bound", BigInt::from(self.genus_bound.unwrap_or(0))),
        ]
    }
}

/// Genus of a `sheets`-fold cover of a genus-`base_genus` surface, totally
/// ramified over `branch_points` points:
/// `χ = sheets (2 - 2 base_genus) - (sheets - 1) branch_points`,
/// `genus = 1 - χ / 2`.
pub fn riemann_hurwitz_genus(
    sheets: &BigInt,
    base_genus: &BigInt,
    branch_points: &BigInt,
) -> Result<BigInt> {
    if *sheets < BigInt::one() || base_genus.is_negative() || branch_points.is_negative() {
        return Err(Error::InvalidParams(
            "need sheets >= 1, base genus >= 0, branch points >= 0".into(),
        ));
    }
    let chi: BigInt =
        sheets * (BigInt::from(2) - base_genus * 2) - (sheets - BigInt::one()) * branch_points;
    if chi.is_odd() {
        return Err(Error::OddEulerCharacteristic(chi.to_string()));
    }
    let genus: BigInt = BigInt::one() - chi / 2;
    if genus.is_negative() {
        return Err(Error::NegativeGenus(genus.to_string()));
    }
    Ok(genus)
}

pub fn ak_report(p: AKParams) -> Result<AKReport> {
    let k = BigInt::from(p.sheets);
    let g_s = BigInt::from(p.genus_s);
    let two_g = 2 * p.genus_s;

    let cover_degree: BigInt = Pow::pow(&k, two_g);
    // unbranched: χ(Ŝ) = deg · χ(S)
    let genus_hat = riemann_hurwitz_genus(&cover_degree, &g_s, &BigInt::zero())?;
    let branch_points_on_s = k.clone();
    let branch_points_on_hat = &cover_degree * &k;
    let fiber_genus_over_hat = riemann_hurwitz_genus(&k, &g_s, &branch_points_on_s)?;
    let fiber_genus_over_s = riemann_hurwitz_genus(&k, &genus_hat, &branch_points_on_hat)?;

    let chi_s: BigInt = BigInt::from(2) - &g_s * 2;
    let graph_self_intersection: BigInt = &cover_degree * &chi_s;
    let delta_self_intersection: BigInt = &k * &graph_self_intersection;

    let k_sq_minus_one: BigInt = &k * &k - 1;
    let numerator: BigInt = -(k_sq_minus_one * &delta_self_intersection);
    let denominator = 3 * &k;
    let (signature, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() {
        return Err(Error::InvalidParams(format!(
            "signature {numerator}/{denominator} is not an integer"
        )));
    }
    let e1_number = signature_to_e1(&signature);
    let genus_bound = min_genus_bound(1, &e1_number);

    Ok(AKReport {
        cover_degree,
        genus_hat,
        branch_points_on_s,
        branch_points_on_hat,
        fiber_genus_over_hat,
        fiber_genus_over_s,
        delta_self_intersection,
        signature,
        e1_number,
        genus_bound,
    })
}

/// Cross-checks one instance: the signature came out integral, `e_1^# = 3σ`
/// and, when `e_1^# != 0`, both fiber genera clear the genus obstruction.
pub fn ak_consistency_check(p: AKParams) -> Result<bool> {
    let r = ak_report(p)?;
    let k = BigInt::from(p.sheets);
    let k_sq_minus_one: BigInt = &k * &k - 1;
    let exact = -(k_sq_minus_one * &r.delta_self_intersection) == &r.signature * 3 * &k;
    let relation = r.e1_number == &r.signature * 3;
    let obstruction = match r.genus_bound {
        None => r.e1_number.is_zero(),
        Some(bound) => {
            let least = r
                .fiber_genus_over_hat
                .clone()
                .min(r.fiber_genus_over_s.clone());
            BigInt::from(bound) <= least
        }
    };
    Ok(exact && relation && obstruction)
}
