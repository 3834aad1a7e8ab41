//! Fraction-free integer linear algebra helpers.

use num::{BigInt, Zero};

/// Exact determinant of a square integer matrix by Bareiss elimination.
/// The 0x0 determinant is 1.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot search below row k
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
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
    fn det_small() {
        assert_eq!(bareiss_det(m(&[])), BigInt::from(1));
        assert_eq!(bareiss_det(m(&[&[7]])), BigInt::from(7));
        assert_eq!(bareiss_det(m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        // singular
        assert_eq!(bareiss_det(m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        // needs a row swap
        assert_eq!(bareiss_det(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    }

    #[test]
    fn det_4x4() {
        // Laplacian cofactor of K_4 counts its 16 spanning trees
        let k4 = m(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]);
        assert_eq!(bareiss_det(k4), BigInt::from(16));
    }
}
