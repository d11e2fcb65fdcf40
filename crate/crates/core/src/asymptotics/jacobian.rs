//! Algebraic independence of squarefree monomials through the rank of
//! their Jacobian matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Evaluation points are drawn from `[EVAL_MIN, EVAL_MAX]`.
pub const EVAL_MIN: u64 = 2;
pub const EVAL_MAX: u64 = 1_000_000;
/// Fresh evaluation points tried before a rank deficiency is reported.
pub const RETRIES: usize = 3;

/// Whether the `s x n` matrix with entries `∂g_i/∂x_j` has rank `s` over `Q(x)`.
///
/// The matrix is evaluated at random integer points and its rank computed
/// exactly. Full rank at any point certifies full generic rank; a deficient
/// point is retried with fresh randomness before answering `false`.
pub fn jacobian_rank_full(gens: &[Monomial], seed: u64) -> Result<bool> {
    let n = check_squarefree(gens)?;
    if gens.is_empty() {
        return Ok(true);
    }
    if gens.len() > n {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let point: Vec<u64> = (0..n).map(|_| rng.gen_range(EVAL_MIN..=EVAL_MAX)).collect();
        if jacobian_rank_at(gens, &point) == gens.len() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_squarefree(gens: &[Monomial]) -> Result<usize> {
    let n = gens.first().map_or(0, Monomial::n);
    for g in gens {
        if g.n() != n {
            return Err(Error::LengthMismatch { left: n, right: g.n() });
        }
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
    }
    Ok(n)
}

/// Rank of the Jacobian of squarefree `gens` evaluated at `point`.
pub fn jacobian_rank_at(gens: &[Monomial], point: &[u64]) -> usize {
    let rows: Vec<Vec<BigRational>> = gens
        .iter()
        .map(|g| {
            let e = g.exps();
            (0..point.len())
                .map(|j| {
                    if e[j] == 0 {
                        return BigRational::zero();
                    }
                    let value = (0..point.len())
                        .filter(|&k| k != j && e[k] > 0)
                        .fold(BigInt::one(), |acc, k| acc * point[k]);
                    BigRational::from_integer(value)
                })
                .collect()
        })
        .collect();
    rank(rows)
}

/// Rank by fraction-exact Gaussian elimination.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot_row[c];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &factor * p;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(n: usize, s: &[usize]) -> Monomial {
        Monomial::from_support(n, s)
    }

    #[test]
    fn small_cases() {
        assert!(jacobian_rank_full(&[sf(2, &[0, 1])], 1).unwrap());
        assert!(!jacobian_rank_full(&[sf(2, &[0, 1]), sf(2, &[0, 1])], 1).unwrap());
        assert!(jacobian_rank_full(&[], 1).unwrap());
        // x1x2, x2x3, x1x3 are independent; x1x2, x3x4, x1x3, x2x4 are not
        assert!(jacobian_rank_full(&[sf(3, &[0, 1]), sf(3, &[1, 2]), sf(3, &[0, 2])], 7).unwrap());
        let dependent = [sf(4, &[0, 1]), sf(4, &[2, 3]), sf(4, &[0, 2]), sf(4, &[1, 3])];
        assert!(!jacobian_rank_full(&dependent, 7).unwrap());
    }

    #[test]
    fn rejects_non_squarefree() {
        let g = Monomial::new(vec![2, 1]);
        assert_eq!(jacobian_rank_full(&[g], 0), Err(Error::NotSquarefree("x1^2*x2".into())));
    }

    #[test]
    fn exact_rank() {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
    }
}
