//! Determinant polynomials: the adjacency characteristic polynomial and two
//! inequivalent Laplacian variants, det(XI - L) and det(XD - A). Computed by
//! evaluating the determinant at n+1 integer points with fraction-free
//! elimination and interpolating exactly; integrality of the result is a
//! built-in sanity check.

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards;
use crate::linalg::bareiss_det;
use crate::polys::{interpolate_univariate, MultiPoly};
use num::{BigInt, BigRational};

fn det_poly(
    g: &Graph,
    entry: impl Fn(&Graph, usize, usize, &BigInt) -> BigInt,
) -> Result<MultiPoly> {
    let n = g.n();
    guards::check(guards::DET_MAX_N, n as u64)?;
    let mut points = Vec::with_capacity(n + 1);
    for x in 0..=n as i64 {
        let xv = BigInt::from(x);
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| entry(g, i, j, &xv)).collect())
            .collect();
        points.push((xv, BigRational::from_integer(bareiss_det(m))));
    }
    let p = interpolate_univariate(&points, "X")?;
    if !p.is_integral() {
        return Err(Error::Domain(
            "determinant polynomial interpolated to non-integer coefficients".into(),
        ));
    }
    Ok(p)
}

/// P_A(G; X) = det(X I - A).
pub fn char_poly_adjacency(g: &Graph) -> Result<MultiPoly> {
    det_poly(g, |g, i, j, x| {
        if i == j {
            x.clone()
        } else if g.has_edge(i, j) {
            BigInt::from(-1)
        } else {
            BigInt::from(0)
        }
    })
}

/// det(X I - L) with L = D - A.
pub fn laplacian_char(g: &Graph) -> Result<MultiPoly> {
    det_poly(g, |g, i, j, x| {
        if i == j {
            x - BigInt::from(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            BigInt::from(1)
        } else {
            BigInt::from(0)
        }
    })
}

/// det(X D - A), the degree-weighted variant.
pub fn laplacian_det_form(g: &Graph) -> Result<MultiPoly> {
    det_poly(g, |g, i, j, x| {
        if i == j {
            x * BigInt::from(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            BigInt::from(-1)
        } else {
            BigInt::from(0)
        }
    })
}
