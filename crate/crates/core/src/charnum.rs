//! Characteristic-number calculators.
//!
//! For a surface bundle `E^{4n} -> M^{4n-2}` the odd MMM number
//! `e_{2n-1}^#` equals `sum_J a_J p_J^#(E)` with `a_J` the coefficients of
//! `f_n`. For a holomorphic fibering `X^{n+1} -> Y^n`, `e_n^#` equals
//! `sum_J a_J c_J^#(X)` with `a_J` from `f_{n+1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::newton::newton_coefficients;
use crate::poly::{partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Pontryagin,
    Chern,
}

impl Flavor {
    /// Variable prefix used when rendering: `p` or `c`.
    pub fn prefix(self) -> &'static str {
        match self {
            Flavor::Pontryagin => "p",
            Flavor::Chern => "c",
        }
    }

    /// Partition size of the expansion for MMM index parameter `n`.
    pub fn degree(self, n: usize) -> usize {
        match self {
            Flavor::Pontryagin => n,
            Flavor::Chern => n + 1,
        }
    }

    /// Index of the MMM class `e_k` computed for parameter `n`.
    pub fn mmm_index(self, n: usize) -> usize {
        match self {
            Flavor::Pontryagin => 2 * n - 1,
            Flavor::Chern => n,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Pontryagin => "pontryagin",
            Flavor::Chern => "chern",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pontryagin" => Ok(Flavor::Pontryagin),
            "chern" => Ok(Flavor::Chern),
            _ => Err(Error::InvalidParams(format!("unknown flavor `{s}`"))),
        }
    }
}

/// The linear functional `sum_J a_J (number)_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharNumberExpansion {
    n: usize,
    flavor: Flavor,
    degree: usize,
    terms: Vec<(Partition, BigInt)>,
}

impl CharNumberExpansion {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Every partition of `degree` with its coefficient, canonical order.
    pub fn terms(&self) -> &[(Partition, BigInt)] {
        &self.terms
    }

    pub fn coefficient(&self, j: &Partition) -> Option<&BigInt> {
        self.terms.iter().find(|(k, _)| k == j).map(|(_, c)| c)
    }

    /// Monomial name of `J` in this flavor's classes, e.g. `p1^2*p2`.
    pub fn monomial_name(&self, j: &Partition) -> String {
        monomial_name(self.flavor, j)
    }
}

pub fn monomial_name(flavor: Flavor, j: &Partition) -> String {
    let parts: Vec<String> = j
        .multiplicities()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let v = format!("{}{}", flavor.prefix(), i + 1);
            if e == 1 {
                v
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn expansion(flavor: Flavor, n: usize) -> Result<CharNumberExpansion> {
    if n == 0 {
        return Err(Error::ZeroDegree(0));
    }
    let degree = flavor.degree(n);
    Ok(CharNumberExpansion {
        n,
        flavor,
        degree,
        terms: newton_coefficients(degree)?,
    })
}

/// `e_{2n-1}^#` as a combination of Pontryagin numbers of the total space.
pub fn expand_odd_mmm(n: usize) -> Result<CharNumberExpansion> {
    expansion(Flavor::Pontryagin, n)
}

/// `e_n^#` of a holomorphic fibering as a combination of Chern numbers.
pub fn expand_complex_mmm(n: usize) -> Result<CharNumberExpansion> {
    expansion(Flavor::Chern, n)
}

pub fn expand(flavor: Flavor, n: usize) -> Result<CharNumberExpansion> {
    expansion(flavor, n)
}

/// Characteristic numbers `p_J^#` or `c_J^#`, one per partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharNumberVector {
    flavor: Flavor,
    degree: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl CharNumberVector {
    /// Fails unless `values` covers exactly the partitions of `degree`.
    pub fn new(flavor: Flavor, degree: usize, values: BTreeMap<Partition, BigInt>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree(0));
        }
        let all = partitions(degree);
        for j in values.keys() {
            if j.size() != degree {
                return Err(Error::UnexpectedPartition(j.to_string()));
            }
        }
        if let Some(j) = all.iter().find(|j| !values.contains_key(j)) {
            return Err(Error::MissingPartition(j.to_string()));
        }
        Ok(CharNumberVector {
            flavor,
            degree,
            values,
        })
    }

    pub fn zeros(flavor: Flavor, degree: usize) -> Result<Self> {
        let values = partitions(degree)
            .into_iter()
            .map(|j| (j, BigInt::zero()))
            .collect();
        Self::new(flavor, degree, values)
    }

    /// Parses `{"[2,0]": 7, "[0,1]": "3"}`. Values are JSON integers or
    /// decimal strings; anything else is rejected.
    pub fn from_json(flavor: Flavor, degree: usize, json: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(json).map_err(|e| Error::BadInput(e.to_string()))?;
        let Value::Object(map) = value else {
            return Err(Error::BadInput("expected a JSON object".into()));
        };
        let mut values = BTreeMap::new();
        for (key, v) in map {
            let j: Partition = key
                .parse()
                .map_err(|_| Error::UnexpectedPartition(key.clone()))?;
            values.insert(j, json_integer(&key, &v)?);
        }
        Self::new(flavor, degree, values)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, j: &Partition) -> Option<&BigInt> {
        self.values.get(j)
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigInt> {
        &self.values
    }

    /// Pointwise sum; both vectors must share flavor and degree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.flavor, self.degree) != (other.flavor, other.degree) {
            return Err(Error::Mismatch {
                expected: format!("{} degree {}", self.flavor, self.degree),
                found: format!("{} degree {}", other.flavor, other.degree),
            });
        }
        let values = self
            .values
            .iter()
            .map(|(j, v)| (j.clone(), v + &other.values[j]))
            .collect();
        Ok(CharNumberVector { values, ..*self })
    }
}

/// Integer from a JSON number or decimal string, exactly.
pub fn json_integer(key: &str, v: &Value) -> Result<BigInt> {
    let digits = match v {
        Value::Number(num) => num.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::BadInput(format!("{key}: value must be an integer"))),
    };
    let body = digits.strip_prefix('-').unwrap_or(&digits);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::BadInput(format!(
            "{key}: `{digits}` is not an integer"
        )));
    }
    digits
        .parse()
        .map_err(|_| Error::BadInput(format!("{key}: `{digits}` is not an integer")))
}

/// `sum_J a_J v(J)`, exactly.
pub fn evaluate(exp: &CharNumberExpansion, v: &CharNumberVector) -> Result<BigInt> {
    if exp.flavor != v.flavor || exp.degree != v.degree {
        return Err(Error::Mismatch {
            expected: format!("{} degree {}", exp.flavor, exp.degree),
            found: format!("{} degree {}", v.flavor, v.degree),
        });
    }
    exp.terms.iter().try_fold(BigInt::zero(), |acc, (j, a)| {
        let x = v
            .values
            .get(j)
            .ok_or_else(|| Error::MissingPartition(j.to_string()))?;
        Ok(acc + a * x)
    })
}

/// Least fiber genus any fibering can have once `e_{2n-1}^# = value` is
/// known: `2n + 1` when `value != 0` (the class vanishes for `g <= 2n`),
/// otherwise no bound.
pub fn min_genus_bound(n: usize, value: &BigInt) -> Option<usize> {
    if value.is_zero() {
        None
    } else {
        Some(2 * n + 1)
    }
}

/// `e_1^# = 3 * signature` for a surface bundle over a surface.
pub fn signature_to_e1(sigma: &BigInt) -> BigInt {
    sigma * 3
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vector(flavor: Flavor, degree: usize, pairs: &[(&str, i64)]) -> CharNumberVector {
        let values = pairs
            .iter()
            .map(|(k, v)| (k.parse().unwrap(), BigInt::from(*v)))
            .collect();
        CharNumberVector::new(flavor, degree, values).unwrap()
    }

    fn rendered(exp: &CharNumberExpansion) -> Vec<(String, i64)> {
        exp.terms()
            .iter()
            .map(|(j, c)| (exp.monomial_name(j), i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn odd_expansions() {
        assert_eq!(rendered(&expand_odd_mmm(1).unwrap()), [("p1".into(), 1)]);
        assert_eq!(
            rendered(&expand_odd_mmm(2).unwrap()),
            [("p1^2".into(), 1), ("p2".into(), -2)]
        );
        assert_eq!(expand_odd_mmm(6).unwrap().terms().len(), 11);
        assert!(expand_odd_mmm(0).is_err());
    }

    #[test]
    fn complex_expansions() {
        let e1 = expand_complex_mmm(1).unwrap();
        assert_eq!(e1.degree(), 2);
        assert_eq!(rendered(&e1), [("c1^2".into(), 1), ("c2".into(), -2)]);
        assert_eq!(
            rendered(&expand_complex_mmm(2).unwrap()),
            [("c1^3".into(), 1), ("c1*c2".into(), -3), ("c3".into(), 3)]
        );
        let e5 = expand_complex_mmm(5).unwrap();
        assert_eq!(e5.terms(), newton_coefficients(6).unwrap().as_slice());
    }

    #[test]
    fn evaluate_examples() {
        let e1 = expand_odd_mmm(1).unwrap();
        assert_eq!(
            evaluate(&e1, &vector(Flavor::Pontryagin, 1, &[("[1]", 96)])).unwrap(),
            BigInt::from(96)
        );
        let e3 = expand_odd_mmm(2).unwrap();
        let zero = vector(Flavor::Pontryagin, 2, &[("[2,0]", 0), ("[0,1]", 0)]);
        assert_eq!(evaluate(&e3, &zero).unwrap(), BigInt::zero());
        let v = vector(Flavor::Pontryagin, 2, &[("[2,0]", 7), ("[0,1]", 3)]);
        assert_eq!(evaluate(&e3, &v).unwrap(), BigInt::from(1));
    }

    #[test]
    fn evaluate_rejects_mismatches() {
        let e3 = expand_odd_mmm(2).unwrap();
        let chern = vector(Flavor::Chern, 2, &[("[2,0]", 1), ("[0,1]", 1)]);
        assert!(matches!(evaluate(&e3, &chern), Err(Error::Mismatch { .. })));
        let deg1 = vector(Flavor::Pontryagin, 1, &[("[1]", 1)]);
        assert!(matches!(evaluate(&e3, &deg1), Err(Error::Mismatch { .. })));
    }

    #[test]
    fn vector_must_be_total() {
        let partial: BTreeMap<Partition, BigInt> =
            [("[2,0]".parse().unwrap(), BigInt::from(1))].into();
        assert_eq!(
            CharNumberVector::new(Flavor::Pontryagin, 2, partial),
            Err(Error::MissingPartition("[0,1]".into()))
        );
        let extra: BTreeMap<Partition, BigInt> = [
            ("[2,0]".parse().unwrap(), BigInt::from(1)),
            ("[0,1]".parse().unwrap(), BigInt::from(1)),
            ("[1]".parse().unwrap(), BigInt::from(1)),
        ]
        .into();
        assert_eq!(
            CharNumberVector::new(Flavor::Pontryagin, 2, extra),
            Err(Error::UnexpectedPartition("[1]".into()))
        );
    }

    #[test]
    fn json_input() {
        let v = CharNumberVector::from_json(Flavor::Pontryagin, 2, r#"{"[2,0]": 7, "[0,1]": "3"}"#)
            .unwrap();
        assert_eq!(v.get(&"[0,1]".parse().unwrap()), Some(&BigInt::from(3)));

        let huge = CharNumberVector::from_json(
            Flavor::Pontryagin,
            1,
            r#"{"[1]": 123456789012345678901234567890}"#,
        )
        .unwrap();
        assert_eq!(
            huge.get(&"[1]".parse().unwrap()).unwrap().to_string(),
            "123456789012345678901234567890"
        );

        for bad in [
            r#"{"[1]": 1.5}"#,
            r#"{"[1]": 1e3}"#,
            r#"{"[1]": "x"}"#,
            r#"{"[1]": true}"#,
            r#"[1]"#,
            r#"{"[2]": 1}"#,
            r#"{}"#,
        ] {
            assert!(
                CharNumberVector::from_json(Flavor::Pontryagin, 1, bad).is_err(),
                "{bad}"
            );
        }
    }

    #[test]
    fn genus_bound() {
        assert_eq!(min_genus_bound(1, &BigInt::from(96)), Some(3));
        assert_eq!(min_genus_bound(1, &BigInt::zero()), None);
        assert_eq!(min_genus_bound(3, &BigInt::from(-5)), Some(7));
    }

    #[test]
    fn signature_relation() {
        assert_eq!(signature_to_e1(&BigInt::from(32)), BigInt::from(96));
        assert_eq!(signature_to_e1(&BigInt::zero()), BigInt::zero());
        assert_eq!(signature_to_e1(&BigInt::from(-1)), BigInt::from(-3));
    }

    #[test]
    fn flavor_round_trip() {
        for f in [Flavor::Pontryagin, Flavor::Chern] {
            assert_eq!(f.to_string().parse::<Flavor>().unwrap(), f);
        }
        assert!("euler".parse::<Flavor>().is_err());
        assert_eq!(Flavor::Pontryagin.mmm_index(6), 11);
    }
}
