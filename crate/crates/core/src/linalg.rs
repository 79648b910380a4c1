//! Fraction-free Gauss-Jordan (Bareiss) elimination over the integers.
//!
//! After elimination every pivot equals the last pivot `d` and each pivot
//! row reads `d * e_pivot + (entries in free columns)`, so a kernel basis is
//! read off directly: for free column `f`, set `x_f = d` and
//! `x_{pivot(i)} = -M[i][f]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank and primitive kernel basis of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullSpace {
    pub rank: usize,
    pub basis: Vec<Vec<BigInt>>,
}

/// log2 of the Hadamard bound on every minor of `m`.
fn hadamard_log2(m: &[Vec<i64>]) -> f64 {
    m.iter()
        .map(|row| {
            let s: f64 = row.iter().map(|&a| (a as f64) * (a as f64)).sum();
            0.5 * s.max(1.0).log2()
        })
        .sum()
}

/// Exact null space of `m` (rows of equal length).
///
/// Uses `i128` arithmetic when all minors and their pairwise products fit,
/// arbitrary precision otherwise.
pub fn null_space(m: &[Vec<i64>]) -> NullSpace {
    let cols = m.first().map_or(0, Vec::len);
    let max_entry = m.iter().flatten().map(|a| a.unsigned_abs()).max().unwrap_or(0);
    if hadamard_log2(m) <= 62.0 && max_entry < 1 << 62 {
        let mat = m.iter().map(|r| r.iter().map(|&a| i128::from(a)).collect()).collect();
        eliminate::<i128>(mat, cols)
    } else {
        let mat = m.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect();
        eliminate::<BigInt>(mat, cols)
    }
}

/// Same as [`null_space`] but always in arbitrary precision.
pub fn null_space_bigint(m: &[Vec<i64>]) -> NullSpace {
    let cols = m.first().map_or(0, Vec::len);
    let mat = m.iter().map(|r| r.iter().map(|&a| BigInt::from(a)).collect()).collect();
    eliminate::<BigInt>(mat, cols)
}

fn eliminate<T>(mut m: Vec<Vec<T>>, cols: usize) -> NullSpace
where
    T: Clone + Integer + Signed + Into<BigInt>,
{
    let rows = m.len();
    let mut prev = T::one();
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..cols {
        let r = pivots.len();
        if r == rows {
            break;
        }
        // remaining row with maximal |entry| in this column, smallest index on ties
        let mut pick: Option<usize> = None;
        for i in r..rows {
            if m[i][col].is_zero() {
                continue;
            }
            if pick.is_none_or(|p| m[i][col].abs() > m[p][col].abs()) {
                pick = Some(i);
            }
        }
        let Some(p) = pick else { continue };
        m.swap(r, p);
        let piv = m[r][col].clone();
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[col].clone();
            for j in 0..cols {
                let v = piv.clone() * row[j].clone() - factor.clone() * pivot_row[j].clone();
                debug_assert!((v.clone() % prev.clone()).is_zero());
                row[j] = v / prev.clone();
            }
        }
        prev = piv;
        pivots.push(col);
    }

    let rank = pivots.len();
    let d: BigInt = prev.into();
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let basis = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![BigInt::zero(); cols];
            x[f] = d.clone();
            for (i, &c) in pivots.iter().enumerate() {
                let e: BigInt = m[i][f].clone().into();
                x[c] = -e;
            }
            normalize(&mut x);
            x
        })
        .collect();
    NullSpace { rank, basis }
}

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
pub fn normalize(x: &mut [BigInt]) {
    let g = x.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    if g.is_zero() {
        return;
    }
    let flip = x.iter().find(|e| !e.is_zero()).is_some_and(Signed::is_negative);
    for e in x.iter_mut() {
        *e /= &g;
        if flip {
            *e = -&*e;
        }
    }
}

/// True iff the entries have gcd 1 and the first nonzero entry is positive.
pub fn is_normalized(x: &[BigInt]) -> bool {
    let g = x.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    g.is_one() && x.iter().find(|e| !e.is_zero()).is_some_and(Signed::is_positive)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn path_on_three_vertices() {
        let m = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]];
        let ns = null_space(&m);
        assert_eq!(ns.rank, 2);
        assert_eq!(ns.basis, vec![big(&[1, 0, -1])]);
    }

    #[test]
    fn zero_and_identity() {
        let z = vec![vec![0; 3]; 3];
        assert_eq!(null_space(&z).basis.len(), 3);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(null_space(&id), NullSpace { rank: 2, basis: vec![] });
    }

    #[test]
    fn rectangular_matrix() {
        // x + 2y + 3z = 0
        let ns = null_space(&[vec![1, 2, 3]]);
        assert_eq!(ns.rank, 1);
        assert_eq!(ns.basis, vec![big(&[2, -1, 0]), big(&[3, 0, -1])]);
    }

    #[test]
    fn backends_agree() {
        let m = vec![
            vec![2, -3, 5, 7],
            vec![4, -6, 10, 14],
            vec![1, 1, 1, 1],
            vec![0, 5, -3, -5],
        ];
        assert_eq!(null_space(&m), null_space_bigint(&m));
    }

    #[test]
    fn normalization() {
        let mut x = big(&[0, -4, 6, 2]);
        normalize(&mut x);
        assert_eq!(x, big(&[0, 2, -3, -1]));
        assert!(is_normalized(&x));
        assert!(!is_normalized(&big(&[0, 0])));
    }
}
