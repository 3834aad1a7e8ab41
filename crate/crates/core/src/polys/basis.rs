//! Univariate polynomial bases: power, falling factorial, rising factorial,
//! binomial. Two operations are provided:
//!
//! * [`convert`] is value-preserving: the input's coefficient list is read in
//!   the `from` basis and the same polynomial is re-expressed as a coefficient
//!   list in the `to` basis.
//! * [`reinterpret`] keeps the coefficient list and swaps the basis, returning
//!   the (different) polynomial expanded in the power basis.

use super::{rat, MultiPoly};
use crate::error::{Error, Result};
use num::{BigRational, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Power,
    Falling,
    Rising,
    Binomial,
}

impl Basis {
    pub fn parse(s: &str) -> Result<Basis> {
        match s {
            "power" => Ok(Basis::Power),
            "falling" | "falling-factorial" => Ok(Basis::Falling),
            "rising" | "rising-factorial" => Ok(Basis::Rising),
            "binomial" => Ok(Basis::Binomial),
            other => Err(Error::Parse(format!("unknown basis `{other}`"))),
        }
    }

    /// The degree-i basis element as a polynomial in `var`.
    /// Falling: X(X-1)...(X-i+1); rising: X(X+1)...(X+i-1);
    /// binomial: falling / i!.
    pub fn element(&self, i: usize, var: &str) -> MultiPoly {
        let x = MultiPoly::var(var);
        match self {
            Basis::Power => x.pow(i as u32),
            Basis::Falling => {
                let mut acc = MultiPoly::one();
                for k in 0..i {
                    acc = acc.mul(&x.sub(&MultiPoly::from_int(k as i64)));
                }
                acc
            }
            Basis::Rising => {
                let mut acc = MultiPoly::one();
                for k in 0..i {
                    acc = acc.mul(&x.add(&MultiPoly::from_int(k as i64)));
                }
                acc
            }
            Basis::Binomial => {
                let mut acc = MultiPoly::one();
                let mut fact = rat(1);
                for k in 0..i {
                    acc = acc.mul(&x.sub(&MultiPoly::from_int(k as i64)));
                    fact *= rat(k as i64 + 1);
                }
                acc.scale(&fact.recip())
            }
        }
    }
}

/// Expands `sum_i coeffs[i] * basis_i(var)` into the power basis.
pub fn expand_in_basis(coeffs: &[BigRational], basis: Basis, var: &str) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&basis.element(i, var).scale(c));
        }
    }
    acc
}

/// Coefficient list of `p` in the given basis (each element has degree
/// exactly its index, so peeling from the top degree is exact).
pub fn coeffs_in_basis(p: &MultiPoly, basis: Basis) -> Result<Vec<BigRational>> {
    let (var, dense) = p.univariate_coeffs()?;
    if p.is_zero() {
        return Ok(vec![BigRational::zero()]);
    }
    let d = dense.len() - 1;
    let mut out = vec![BigRational::zero(); d + 1];
    let mut rem = p.clone();
    for i in (0..=d).rev() {
        let elem = basis.element(i, &var);
        let lead_elem = elem.coefficient_of(&[(var.as_str(), i as i32)]);
        let lead_rem = rem.coefficient_of(&[(var.as_str(), i as i32)]);
        if lead_rem.is_zero() {
            continue;
        }
        let c = lead_rem / lead_elem;
        rem = rem.sub(&elem.scale(&c));
        out[i] = c;
    }
    debug_assert!(rem.is_zero());
    Ok(out)
}

/// Value-preserving basis change of the formal coefficient list.
pub fn convert(p: &MultiPoly, from: Basis, to: Basis) -> Result<MultiPoly> {
    let (var, coeffs) = p.univariate_coeffs()?;
    let value = expand_in_basis(&coeffs, from, &var);
    let out = coeffs_in_basis(&value, to)?;
    Ok(MultiPoly::from_univariate_coeffs(&var, &out))
}

/// Same coefficients, different basis: returns the expanded new polynomial.
pub fn reinterpret(p: &MultiPoly, to: Basis) -> Result<MultiPoly> {
    let (var, coeffs) = p.univariate_coeffs()?;
    Ok(expand_in_basis(&coeffs, to, &var))
}
