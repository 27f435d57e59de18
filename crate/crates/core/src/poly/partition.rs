use std::fmt;
use std::str::FromStr;

use super::{Monomial, PolyError};

/// Exponent sequence `J = (j1, ..., jn)` with `sum(i * j_i) = n`.
///
/// Indexes the monomial `x1^j1 * ... * xn^jn` of weighted degree `n`. The
/// interchange encoding is the j-vector itself: `[2,0]` is `x1^2`, `[0,1]`
/// is `x2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Fails unless `j` has length `n` and weighted size `n`.
    pub fn new(j: Vec<u32>) -> Result<Self, PolyError> {
        let n = j.len() as u64;
        let size: u64 = j
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u64 + 1) * u64::from(e))
            .sum();
        if size != n {
            return Err(PolyError::Parse {
                pos: 0,
                msg: format!("j-vector of length {n} has weighted size {size}"),
            });
        }
        Ok(Partition(j))
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.0
    }

    /// The `n` this partitions.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::new(self.0.clone())
    }

    /// Parts in descending order, e.g. `[1,1,0]` gives `[2, 1]`.
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i as u32 + 1, e as usize));
        }
        parts
    }

    pub fn num_parts(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| PolyError::Parse {
            pos: 0,
            msg: format!("partition key `{s}`: {msg}"),
        };
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[j1,...,jn]`"))?;
        let j = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| {
                    if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
                        Err(bad("entries must be nonnegative integers"))
                    } else {
                        x.parse::<u32>().map_err(|_| bad("entry out of range"))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Partition::new(j).map_err(|_| bad("weighted size differs from length"))
    }
}

/// All partitions of `n`, in descending lexicographic order of the j-vector
/// (so `x1^n` first and `xn` last). `partitions(0)` is the single empty
/// partition.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill(1, n, &mut cur, &mut out);
    out
}

fn fill(part: usize, remaining: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let n = cur.len();
    if part > n {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    for j in (0..=remaining / part).rev() {
        let rest = remaining - j * part;
        // The parts above `part` must be able to absorb what is left.
        if rest != 0 && rest <= part {
            continue;
        }
        cur[part - 1] = j as u32;
        fill(part + 1, rest, cur, out);
    }
    cur[part - 1] = 0;
}
