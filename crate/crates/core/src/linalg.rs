//! Exact linear solves over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("singular system")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Solves `A X = B` for square `A` with fraction-free (Bareiss) elimination,
/// taking the first non-zero pivot in each column.
pub fn solve_exact(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>, LinalgError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(LinalgError::Shape(format!("A is {n} rows, B is {} rows", b.len())));
    }
    let r = b.first().map_or(0, Vec::len);
    if b.iter().any(|row| row.len() != r) {
        return Err(LinalgError::Shape("ragged right-hand side".into()));
    }
    // clear denominators row by row
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| {
            let l = ra.iter().chain(rb).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            ra.iter().chain(rb).map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let width = n + r;
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(LinalgError::Singular)?;
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..width {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![vec![BigRational::zero(); r]; n];
    for i in (0..n).rev() {
        for c in 0..r {
            let mut acc = BigRational::from_integer(m[i][n + c].clone());
            for j in i + 1..n {
                acc -= BigRational::from_integer(m[i][j].clone()) * &x[j][c];
            }
            x[i][c] = acc / BigRational::from_integer(m[i][i].clone());
        }
    }
    Ok(x)
}
