//! Slow reference computations that share no code with the fast paths
//! they check. Used by the verification suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of a dense integer matrix by cofactor expansion along the
/// first row.
pub fn cofactor_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][col] * cofactor_determinant(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The tridiagonal matrix with `entries` on the diagonal and `-1` beside it.
pub fn chain_matrix(entries: &[i64]) -> Vec<Vec<BigInt>> {
    let n = entries.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::from(entries[i])
                    } else if i.abs_diff(j) == 1 {
                        BigInt::from(-1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn chain_determinant(entries: &[i64]) -> BigInt {
    cofactor_determinant(&chain_matrix(entries))
}

/// `n_1 - 1/(n_2 - 1/(... - 1/n_l))` evaluated from the innermost term.
pub fn nested_fraction(entries: &[i64]) -> Option<BigRational> {
    let (last, rest) = entries.split_last()?;
    let mut x = BigRational::from_integer(BigInt::from(*last));
    for n in rest.iter().rev() {
        x = BigRational::from_integer(BigInt::from(*n)) - x.recip();
    }
    Some(x)
}

/// All chains of length `0..=max_len` with entries in `lo..=hi`.
pub fn all_chains(max_len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for c in &frontier {
            for n in lo..=hi {
                let mut d: Vec<i64> = c.clone();
                d.push(n);
                next.push(d);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(chain_determinant(&[]), BigInt::from(1));
        assert_eq!(chain_determinant(&[2, 3, 2]), BigInt::from(8));
        assert_eq!(chain_determinant(&[3, 2, 2]), BigInt::from(7));
        assert_eq!(nested_fraction(&[2, 3, 4, 2]).unwrap(), BigRational::new(31.into(), 19.into()));
        assert!(nested_fraction(&[]).is_none());
        assert_eq!(all_chains(2, 2, 3).len(), 1 + 2 + 4);
    }

    #[test]
    fn cofactor_on_dense_matrix() {
        let m: Vec<Vec<BigInt>> =
            [[2, 0, 1], [1, 3, 2], [1, 1, 1]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(cofactor_determinant(&m), BigInt::from(0));
    }
}
