//! Sparse multivariate Laurent polynomials over arbitrary-precision rationals.
//!
//! A [`MultiPoly`] keeps a sorted list of indeterminate names and a map from
//! exponent vectors (integers, negative allowed) to nonzero rational
//! coefficients. Normal form: no zero coefficients, no unused indeterminates,
//! names sorted. Equality is structural on the normal form.

pub mod basis;
pub mod interp;
pub mod recurrence;

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub use basis::Basis;
pub use interp::interpolate_univariate;
pub use recurrence::find_linear_recurrence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl MultiPoly {
    /// Builds and normalizes a polynomial from raw data. Exponent vectors must
    /// have the same length as `vars`.
    pub fn new(vars: Vec<String>, raw: Vec<(Vec<i32>, BigRational)>) -> MultiPoly {
        let mut terms: BTreeMap<Vec<i32>, BigRational> = BTreeMap::new();
        for (exp, c) in raw {
            assert_eq!(exp.len(), vars.len(), "exponent vector length mismatch");
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(exp).or_insert_with(BigRational::zero);
            *entry += c;
            // drop cancellations lazily below
        }
        terms.retain(|_, c| !c.is_zero());
        let mut p = MultiPoly { vars, terms };
        p.normalize();
        p
    }

    pub fn zero() -> MultiPoly {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_int(c: i64) -> MultiPoly {
        MultiPoly::constant(rat(c))
    }

    pub fn one() -> MultiPoly {
        MultiPoly::from_int(1)
    }

    pub fn var(name: &str) -> MultiPoly {
        MultiPoly::monomial(&[(name, 1)], rat(1))
    }

    /// A single scaled monomial, e.g. `monomial(&[("X", 2), ("Y", -1)], c)`.
    pub fn monomial(pows: &[(&str, i32)], coeff: BigRational) -> MultiPoly {
        let mut m: BTreeMap<String, i32> = BTreeMap::new();
        for (v, e) in pows {
            *m.entry((*v).to_string()).or_insert(0) += e;
        }
        let vars: Vec<String> = m.keys().cloned().collect();
        let exp: Vec<i32> = m.values().copied().collect();
        MultiPoly::new(vars, vec![(exp, coeff)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigRational)> {
        self.terms.iter()
    }

    fn normalize(&mut self) {
        // sort variables, permuting exponent columns accordingly
        if !self.vars.windows(2).all(|w| w[0] <= w[1]) {
            let mut order: Vec<usize> = (0..self.vars.len()).collect();
            order.sort_by(|&a, &b| self.vars[a].cmp(&self.vars[b]));
            let vars: Vec<String> = order.iter().map(|&i| self.vars[i].clone()).collect();
            let terms = std::mem::take(&mut self.terms);
            let mut new_terms = BTreeMap::new();
            for (exp, c) in terms {
                let new_exp: Vec<i32> = order.iter().map(|&i| exp[i]).collect();
                let e = new_terms.entry(new_exp).or_insert_with(BigRational::zero);
                *e += c;
            }
            new_terms.retain(|_: &Vec<i32>, c: &mut BigRational| !c.is_zero());
            self.vars = vars;
            self.terms = new_terms;
        }
        assert!(
            self.vars.windows(2).all(|w| w[0] < w[1]),
            "duplicate indeterminate names"
        );
        // prune indeterminates that never occur with nonzero exponent
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().any(|&u| !u) {
            let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
            let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
            let terms = std::mem::take(&mut self.terms);
            self.terms = terms
                .into_iter()
                .map(|(exp, c)| (keep.iter().map(|&i| exp[i]).collect(), c))
                .collect();
            self.vars = vars;
        }
    }

    /// Re-expresses both polynomials over the union of their variable sets.
    fn aligned(&self, other: &MultiPoly) -> (Vec<String>, MultiPoly, MultiPoly) {
        let mut vars: Vec<String> = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        let a = self.with_vars(&vars);
        let b = other.with_vars(&vars);
        (vars, a, b)
    }

    /// Same polynomial over a superset of its variables (no normalization).
    fn with_vars(&self, vars: &[String]) -> MultiPoly {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("missing var"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(exp, c)| {
                let mut e = vec![0i32; vars.len()];
                for (i, &x) in exp.iter().enumerate() {
                    e[idx[i]] = x;
                }
                (e, c.clone())
            })
            .collect();
        MultiPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (vars, a, mut b) = self.aligned(other);
        let mut terms = a.terms;
        for (exp, c) in std::mem::take(&mut b.terms) {
            let e = terms.entry(exp).or_insert_with(BigRational::zero);
            *e += c;
        }
        terms.retain(|_, c| !c.is_zero());
        let mut p = MultiPoly { vars, terms };
        p.normalize();
        p
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        let (vars, a, b) = self.aligned(other);
        let mut terms: BTreeMap<Vec<i32>, BigRational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let e = terms.entry(exp).or_insert_with(BigRational::zero);
                *e += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        let mut p = MultiPoly { vars, terms };
        p.normalize();
        p
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `replacement` for `var`. If `var` occurs with negative
    /// exponents the replacement must be a single nonzero monomial.
    pub fn substitute(&self, var: &str, replacement: &MultiPoly) -> Result<MultiPoly> {
        let Some(vi) = self.vars.iter().position(|v| v == var) else {
            return Ok(self.clone());
        };
        let has_negative = self.terms.keys().any(|e| e[vi] < 0);
        if has_negative {
            if replacement.num_terms() != 1 {
                return Err(Error::Domain(format!(
                    "cannot substitute a {}-term polynomial for `{var}` occurring with negative exponents",
                    replacement.num_terms()
                )));
            }
            let (rexp, rc) = replacement.terms.iter().next().unwrap();
            let mut acc = MultiPoly::zero();
            for (exp, c) in &self.terms {
                let e = exp[vi];
                let coeff = c * rational_pow(rc, e)?;
                let mut pows: Vec<(String, i32)> = Vec::new();
                for (i, &x) in exp.iter().enumerate() {
                    if i != vi && x != 0 {
                        pows.push((self.vars[i].clone(), x));
                    }
                }
                for (j, &rx) in rexp.iter().enumerate() {
                    if rx != 0 {
                        pows.push((replacement.vars[j].clone(), rx * e));
                    }
                }
                let refs: Vec<(&str, i32)> = pows.iter().map(|(v, x)| (v.as_str(), *x)).collect();
                acc = acc.add(&MultiPoly::monomial(&refs, coeff));
            }
            return Ok(acc);
        }
        // group terms by the exponent of `var`, evaluate with Horner over powers
        let mut by_exp: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (exp, c) in &self.terms {
            let mut rest_vars = Vec::new();
            let mut rest_exp = Vec::new();
            for (i, &x) in exp.iter().enumerate() {
                if i != vi {
                    rest_vars.push(self.vars[i].clone());
                    rest_exp.push(x);
                }
            }
            let part = MultiPoly::new(rest_vars, vec![(rest_exp, c.clone())]);
            let slot = by_exp.entry(exp[vi]).or_insert_with(MultiPoly::zero);
            *slot = slot.add(&part);
        }
        let mut acc = MultiPoly::zero();
        let mut power = MultiPoly::one();
        let mut cur = 0i32;
        for (e, part) in by_exp {
            while cur < e {
                power = power.mul(replacement);
                cur += 1;
            }
            acc = acc.add(&part.mul(&power));
        }
        Ok(acc)
    }

    /// Exact evaluation; every variable must be assigned, and variables with
    /// negative exponents must get a nonzero value.
    pub fn eval_rational(&self, point: &BTreeMap<String, BigRational>) -> Result<BigRational> {
        for v in &self.vars {
            if !point.contains_key(v) {
                return Err(Error::Domain(format!("no value assigned to `{v}`")));
            }
        }
        let values: Vec<&BigRational> = self.vars.iter().map(|v| &point[v]).collect();
        let mut acc = BigRational::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                if e != 0 {
                    t *= rational_pow(values[i], e)?;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Max exponent of `var` (0 when absent).
    pub fn degree_in(&self, var: &str) -> i32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    pub fn min_degree_in(&self, var: &str) -> i32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).min().unwrap_or(0),
        }
    }

    pub fn total_degree(&self) -> i32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i32>())
            .max()
            .unwrap_or(0)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    /// Coefficient of the monomial given by `pows` (vars not listed must have
    /// exponent zero).
    pub fn coefficient_of(&self, pows: &[(&str, i32)]) -> BigRational {
        let mut want = vec![0i32; self.vars.len()];
        for (v, e) in pows {
            match self.vars.iter().position(|w| w == v) {
                Some(i) => want[i] = *e,
                None => {
                    if *e != 0 {
                        return BigRational::zero();
                    }
                }
            }
        }
        self.terms
            .get(&want)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// True when univariate (or constant) with non-negative exponents.
    pub fn is_plain_univariate(&self) -> bool {
        self.vars.len() <= 1 && !self.has_negative_exponents()
    }

    /// Dense coefficient list `c_0..c_d` of a plain univariate polynomial,
    /// together with its variable name (`X` for constants).
    pub fn univariate_coeffs(&self) -> Result<(String, Vec<BigRational>)> {
        if !self.is_plain_univariate() {
            return Err(Error::Domain(
                "operation requires a univariate polynomial with non-negative exponents".into(),
            ));
        }
        let name = self
            .vars
            .first()
            .cloned()
            .unwrap_or_else(|| "X".to_string());
        if self.is_zero() {
            return Ok((name, vec![BigRational::zero()]));
        }
        let d = self.degree_in(&name).max(0) as usize;
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (exp, c) in &self.terms {
            let e = if exp.is_empty() { 0 } else { exp[0] as usize };
            coeffs[e] = c.clone();
        }
        Ok((name, coeffs))
    }

    pub fn from_univariate_coeffs(var: &str, coeffs: &[BigRational]) -> MultiPoly {
        let raw = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![i as i32], c.clone()))
            .collect();
        MultiPoly::new(vec![var.to_string()], raw)
    }

    /// Leading coefficient in graded-lex order; 1 exactly for monic
    /// univariate polynomials.
    pub fn is_monic(&self) -> bool {
        match self.leading_term() {
            Some((_, c)) => c.is_one(),
            None => false,
        }
    }

    fn leading_term(&self) -> Option<(&Vec<i32>, &BigRational)> {
        self.terms.iter().max_by(|a, b| graded_lex(a.0, b.0))
    }

    /// Unimodality of the dense coefficient sequence of a plain univariate
    /// polynomial: nondecreasing up to some index, nonincreasing after it.
    pub fn is_unimodal_coefficients(&self) -> Result<bool> {
        let (_, coeffs) = self.univariate_coeffs()?;
        let n = coeffs.len();
        for k in 0..n {
            let up = coeffs[..k].windows(2).all(|w| w[0] <= w[1])
                && (k == 0 || coeffs[k - 1] <= coeffs[k.min(n - 1)]);
            let down = coeffs[k..].windows(2).all(|w| w[0] >= w[1]);
            if up && down {
                return Ok(true);
            }
        }
        Ok(n == 0)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    /// Requires non-negative exponents on both sides.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() || self.has_negative_exponents() || divisor.has_negative_exponents() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        let (vars, mut rem, d) = self.aligned(divisor);
        let (dlead_exp, dlead_c) = d
            .terms
            .iter()
            .max_by(|a, b| graded_lex(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut quot: BTreeMap<Vec<i32>, BigRational> = BTreeMap::new();
        while !rem.terms.is_empty() {
            let (rlead_exp, rlead_c) = rem
                .terms
                .iter()
                .max_by(|a, b| graded_lex(a.0, b.0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            let qexp: Vec<i32> = rlead_exp
                .iter()
                .zip(&dlead_exp)
                .map(|(a, b)| a - b)
                .collect();
            if qexp.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = &rlead_c / &dlead_c;
            // rem -= qc * X^qexp * d
            for (de, dc) in &d.terms {
                let exp: Vec<i32> = de.iter().zip(&qexp).map(|(a, b)| a + b).collect();
                let slot = rem.terms.entry(exp).or_insert_with(BigRational::zero);
                *slot -= &qc * dc;
            }
            rem.terms.retain(|_, c| !c.is_zero());
            let e = quot.entry(qexp).or_insert_with(BigRational::zero);
            *e += qc;
        }
        quot.retain(|_, c| !c.is_zero());
        let mut p = MultiPoly { vars, terms: quot };
        p.normalize();
        Some(p)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Terms in graded-lex descending order (printing order).
    pub fn sorted_terms(&self) -> Vec<(Vec<i32>, BigRational)> {
        let mut out: Vec<(Vec<i32>, BigRational)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        out.sort_by(|a, b| graded_lex(&b.0, &a.0));
        out
    }

    /// Canonical text form: graded-lex descending, explicit signs, `^` powers,
    /// `*` between coefficient and monomial.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, c)) in self.sorted_terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = monomial_text(&self.vars, exp);
            if mono.is_empty() {
                out.push_str(&rational_text(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", rational_text(&mag), mono));
            }
        }
        out
    }

    /// JSON form with decimal-string big integers:
    /// `{"vars":[...], "terms":[{"exp":[...], "num":"...", "den":"..."}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .iter()
            .map(|(exp, c)| {
                serde_json::json!({
                    "exp": exp,
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::json!({ "vars": self.vars, "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MultiPoly> {
        let vars: Vec<String> = v["vars"]
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON: missing vars".into()))?
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Parse("polynomial JSON: vars must be strings".into()))
            })
            .collect::<Result<_>>()?;
        let mut raw = Vec::new();
        for t in v["terms"]
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON: missing terms".into()))?
        {
            let exp: Vec<i32> = t["exp"]
                .as_array()
                .ok_or_else(|| Error::Parse("polynomial JSON: missing exp".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .map(|v| v as i32)
                        .ok_or_else(|| Error::Parse("polynomial JSON: bad exponent".into()))
                })
                .collect::<Result<_>>()?;
            let num: BigInt = t["num"]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse("polynomial JSON: bad numerator".into()))?;
            let den: BigInt = t["den"]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse("polynomial JSON: bad denominator".into()))?;
            if den.is_zero() {
                return Err(Error::Parse("polynomial JSON: zero denominator".into()));
            }
            raw.push((exp, BigRational::new(num, den)));
        }
        Ok(MultiPoly::new(vars, raw))
    }
}

fn monomial_text(vars: &[String], exp: &[i32]) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(exp) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

fn rational_text(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Graded lexicographic comparison of exponent vectors of equal length.
pub(crate) fn graded_lex(a: &[i32], b: &[i32]) -> std::cmp::Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

pub fn rational_pow(base: &BigRational, exp: i32) -> Result<BigRational> {
    if exp == 0 {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        if exp > 0 {
            return Ok(BigRational::zero());
        }
        return Err(Error::Domain("zero raised to a negative exponent".into()));
    }
    let mut acc = BigRational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc = acc.recip();
    }
    Ok(acc)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var("X")
    }
    fn y() -> MultiPoly {
        MultiPoly::var("Y")
    }

    #[test]
    fn ring_basics() {
        // (X+1)(X-1) = X^2 - 1
        let p = x().add(&MultiPoly::one());
        let q = x().sub(&MultiPoly::one());
        let prod = p.mul(&q);
        let expect = x().pow(2).sub(&MultiPoly::one());
        assert_eq!(prod, expect);
        // p + 0 = p
        assert_eq!(p.add(&MultiPoly::zero()), p);
        // (2X + X^2) * Y = 2XY + X^2 Y
        let a = x().scale(&rat(2)).add(&x().pow(2));
        let prod = a.mul(&y());
        assert_eq!(prod.canonical_text(), "X^2*Y + 2*X*Y");
    }

    #[test]
    fn substitution() {
        // substitute(X^2 + XY, Y, -1) = X^2 - X
        let p = x().pow(2).add(&x().mul(&y()));
        let s = p.substitute("Y", &MultiPoly::from_int(-1)).unwrap();
        assert_eq!(s.canonical_text(), "X^2 - X");
        // substitute(p, X, X) = p
        assert_eq!(p.substitute("X", &x()).unwrap(), p);
        // substitute(X^-1 * Y, X, 2X) = (1/2) X^-1 Y
        let p = MultiPoly::monomial(&[("X", -1), ("Y", 1)], rat(1));
        let twox = x().scale(&rat(2));
        let s = p.substitute("X", &twox).unwrap();
        assert_eq!(s, MultiPoly::monomial(&[("X", -1), ("Y", 1)], ratio(1, 2)));
        // substituting a two-term polynomial for a negative exponent fails
        let bad = x().add(&MultiPoly::one());
        assert!(p.substitute("X", &bad).is_err());
    }

    #[test]
    fn evaluation() {
        let p = x().pow(2).sub(&x()); // X^2 - X
        let mut pt = BTreeMap::new();
        pt.insert("X".to_string(), rat(3));
        assert_eq!(p.eval_rational(&pt).unwrap(), rat(6));

        let q = MultiPoly::monomial(&[("X", -2)], rat(1));
        let mut pt = BTreeMap::new();
        pt.insert("X".to_string(), ratio(1, 2));
        assert_eq!(q.eval_rational(&pt).unwrap(), rat(4));

        let mut pt0 = BTreeMap::new();
        pt0.insert("X".to_string(), rat(0));
        assert!(q.eval_rational(&pt0).is_err());
    }

    #[test]
    fn text_fixtures() {
        let p = x().pow(2).sub(&x());
        assert_eq!(p.canonical_text(), "X^2 - X");
        assert_eq!(MultiPoly::zero().canonical_text(), "0");
        assert_eq!(MultiPoly::from_int(-7).canonical_text(), "-7");
        let dom = x().pow(2).add(&x().scale(&rat(2)));
        assert_eq!(dom.canonical_text(), "X^2 + 2*X");
    }

    #[test]
    fn monic_and_unimodal() {
        let p = x().pow(2).sub(&MultiPoly::one());
        assert!(p.is_monic());
        // coefficient sequence (-1, 0, 1) is unimodal
        assert!(p.is_unimodal_coefficients().unwrap());
        // (1, 0, 1) is not
        let q = x().pow(2).add(&MultiPoly::one());
        assert!(!q.is_unimodal_coefficients().unwrap());
        let dom = x().pow(2).add(&x().scale(&rat(2)));
        assert_eq!(dom.coefficient_of(&[("X", 2)]), rat(1));
    }

    #[test]
    fn exact_division() {
        let p = x().pow(2).sub(&MultiPoly::one());
        let d = x().sub(&MultiPoly::one());
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, x().add(&MultiPoly::one()));
        assert!(p.div_exact(&y()).is_none());
    }

    #[test]
    fn json_roundtrip() {
        let p = x().pow(2).mul(&y()).sub(&x().scale(&ratio(3, 2)));
        let j = p.to_json();
        let q = MultiPoly::from_json(&j).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn laurent_prune_and_align() {
        // a var whose exponents are all zero is pruned
        let p = MultiPoly::new(
            vec!["X".into(), "Y".into()],
            vec![(vec![2, 0], rat(1)), (vec![1, 0], rat(-1))],
        );
        assert_eq!(p.vars(), &["X".to_string()]);
        assert_eq!(p, x().pow(2).sub(&x()));
    }
}
