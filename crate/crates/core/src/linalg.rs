//! Exact rank of integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of a dense integer matrix, by fraction-free (Bareiss) elimination.
/// All intermediate values stay integral and exact.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (&pivot * &*x - &factor * p) / &prev_pivot;
            }
        }
        // entries left of `col` in lower rows are already zero
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(integer_rank(&[]), 0);
        assert_eq!(integer_rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(&m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(integer_rank(&m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(integer_rank(&m(&[&[2, 4, 6], &[1, 3, 5], &[3, 7, 11]])), 2);
    }

    #[test]
    fn wide_and_tall() {
        assert_eq!(integer_rank(&m(&[&[1, 0, 0, 1], &[0, 1, 0, 1]])), 2);
        assert_eq!(integer_rank(&m(&[&[1], &[2], &[3]])), 1);
    }

    /// Compare against rank over the rationals computed with plain f64
    /// elimination on small well-conditioned random matrices.
    #[test]
    fn random_against_float_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let r = rng.gen_range(1..6);
            let c = rng.gen_range(1..6);
            let ints: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            let mut f: Vec<Vec<f64>> = ints
                .iter()
                .map(|row| row.iter().map(|&x| x as f64).collect())
                .collect();
            let mut rank = 0;
            for col in 0..c {
                let Some(p) = (rank..r)
                    .max_by(|&a, &b| f[a][col].abs().partial_cmp(&f[b][col].abs()).unwrap())
                else {
                    break;
                };
                if f[p][col].abs() < 1e-9 {
                    continue;
                }
                f.swap(rank, p);
                for row in rank + 1..r {
                    let k = f[row][col] / f[rank][col];
                    for cc in col..c {
                        f[row][cc] -= k * f[rank][cc];
                    }
                }
                rank += 1;
            }
            let rows: Vec<Vec<BigInt>> = ints
                .iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            assert_eq!(integer_rank(&rows), rank, "{ints:?}");
        }
    }
}
