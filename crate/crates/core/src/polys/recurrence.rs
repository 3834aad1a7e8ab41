//! Detection of linear recurrences with polynomial coefficients.
//!
//! A sequence f_0, f_1, ... of polynomials satisfies a depth-p recurrence
//! f_{i+p} = sum_j a_j(X) f_{i+j} with a_j in the polynomial ring. The solver
//! runs Gaussian elimination over the rational-function field, demands
//! polynomial coefficients, and re-verifies the candidate on every provided
//! index before reporting it.

use super::MultiPoly;
use crate::error::{Error, Result};

/// Rational function as a (numerator, denominator) pair, reduced
/// opportunistically by exact division.
#[derive(Debug, Clone)]
struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    fn from_poly(p: MultiPoly) -> RatFun {
        RatFun {
            num: p,
            den: MultiPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(mut self) -> RatFun {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return self;
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return RatFun {
                num: q,
                den: MultiPoly::one(),
            };
        }
        self
    }

    fn sub(&self, other: &RatFun) -> RatFun {
        RatFun {
            num: self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .reduce()
    }

    fn mul(&self, other: &RatFun) -> RatFun {
        RatFun {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .reduce()
    }

    fn div(&self, other: &RatFun) -> Option<RatFun> {
        if other.is_zero() {
            return None;
        }
        Some(
            RatFun {
                num: self.num.mul(&other.den),
                den: self.den.mul(&other.num),
            }
            .reduce(),
        )
    }

    fn as_polynomial(&self) -> Option<MultiPoly> {
        self.num.div_exact(&self.den)
    }
}

/// Finds the smallest depth p <= max_depth such that a recurrence with
/// polynomial coefficients holds on all of `seq`. Requires
/// `seq.len() >= 2 * max_depth + 1`.
pub fn find_linear_recurrence(
    seq: &[MultiPoly],
    max_depth: usize,
) -> Result<Option<(usize, Vec<MultiPoly>)>> {
    if max_depth == 0 {
        return Err(Error::Domain(
            "recurrence depth bound must be positive".into(),
        ));
    }
    if seq.len() < 2 * max_depth + 1 {
        return Err(Error::Domain(format!(
            "sequence too short: need at least {} entries for depth bound {}",
            2 * max_depth + 1,
            max_depth
        )));
    }
    for p in 1..=max_depth {
        if let Some(coeffs) = solve_depth(seq, p) {
            if verify(seq, p, &coeffs) {
                return Ok(Some((p, coeffs)));
            }
        }
    }
    Ok(None)
}

/// Checks f_{i+p} = sum_j coeffs[j] * f_{i+j} on every valid index.
pub fn verify(seq: &[MultiPoly], p: usize, coeffs: &[MultiPoly]) -> bool {
    if coeffs.len() != p {
        return false;
    }
    for i in 0..seq.len().saturating_sub(p) {
        let mut rhs = MultiPoly::zero();
        for (j, a) in coeffs.iter().enumerate() {
            rhs = rhs.add(&a.mul(&seq[i + j]));
        }
        if rhs != seq[i + p] {
            return false;
        }
    }
    true
}

#[allow(clippy::needless_range_loop)]
fn solve_depth(seq: &[MultiPoly], p: usize) -> Option<Vec<MultiPoly>> {
    let rows = seq.len() - p;
    // augmented matrix: rows x (p + 1)
    let mut m: Vec<Vec<RatFun>> = (0..rows)
        .map(|i| {
            let mut row: Vec<RatFun> = (0..p)
                .map(|j| RatFun::from_poly(seq[i + j].clone()))
                .collect();
            row.push(RatFun::from_poly(seq[i + p].clone()));
            row
        })
        .collect();
    // Gaussian elimination
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; p];
    let mut next_row = 0usize;
    for col in 0..p {
        let Some(pr) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, pr);
        let inv_pivot = m[next_row][col].clone();
        for c in col..=p {
            m[next_row][c] = m[next_row][c].div(&inv_pivot)?;
        }
        for r in 0..rows {
            if r != next_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=p {
                    let delta = factor.mul(&m[next_row][c]);
                    m[r][c] = m[r][c].sub(&delta);
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
    }
    // consistency: zero rows must have zero rhs
    for r in next_row..rows {
        if !m[r][p].is_zero() {
            return None;
        }
    }
    // read solution, free variables set to zero
    let mut out = Vec::with_capacity(p);
    for col in 0..p {
        match pivot_of_col[col] {
            Some(r) => out.push(m[r][p].as_polynomial()?),
            None => out.push(MultiPoly::zero()),
        }
    }
    Some(out)
}
