//! Exact univariate interpolation through integer points (Newton form).

use super::MultiPoly;
use crate::error::{Error, Result};
use num::{BigInt, BigRational, Zero};

/// Unique interpolating polynomial through the given (point, value) pairs,
/// in the variable `var`. Points must be pairwise distinct.
pub fn interpolate_univariate(points: &[(BigInt, BigRational)], var: &str) -> Result<MultiPoly> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].0 == points[j].0 {
                return Err(Error::Domain(format!(
                    "duplicate interpolation point {}",
                    points[i].0
                )));
            }
        }
    }
    if points.is_empty() {
        return Ok(MultiPoly::zero());
    }
    // Newton divided differences
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(x.clone()))
        .collect();
    let mut diffs: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = points.len();
    let mut coeffs = vec![diffs[0].clone()];
    for level in 1..n {
        for i in 0..n - level {
            let num = &diffs[i + 1] - &diffs[i];
            let den = &xs[i + level] - &xs[i];
            diffs[i] = num / den;
        }
        diffs.truncate(n - level);
        coeffs.push(diffs[0].clone());
    }
    // expand sum_k coeffs[k] * prod_{i<k} (X - x_i)
    let x = MultiPoly::var(var);
    let mut acc = MultiPoly::zero();
    let mut basis = MultiPoly::one();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&basis.scale(c));
        }
        if k + 1 < n {
            basis = basis.mul(&x.sub(&MultiPoly::constant(xs[k].clone())));
        }
    }
    Ok(acc)
}
