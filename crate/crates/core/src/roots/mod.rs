//! Exact univariate root-location tests (Sturm sequences, Schur-Cohn disk
//! test, root multiplicities, Cauchy bound) and the stability constructions
//! with coefficient recovery.

pub mod complex;
pub mod stability;

use crate::error::{Error, Result};
use crate::polys::MultiPoly;
use num::{BigRational, One, Signed, Zero};

pub use complex::CRat;
pub use stability::{
    dense_roots_transform, make_hurwitz, make_stable, recover_from_stable, sample_halfplane,
    sample_halfplane_factors, sokalize, unpair_triple, HalfPlane, SampleReport, SokalRewrite,
    StableRewrite,
};

/// One root-location test outcome. Exact verdicts carry no tolerance;
/// sampling verdicts say "not falsified at N samples" and never "proved".
#[derive(Debug, Clone, serde::Serialize)]
pub struct StabilityTest {
    pub name: String,
    pub method: String, // "exact" | "sampling"
    pub verdict: String,
    pub detail: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct StabilityReport {
    pub poly: String,
    pub graph: String,
    pub tests: Vec<StabilityTest>,
}

/// Runs the root-location battery on P(g): exact real-rootedness and
/// Cauchy-disk membership for univariate values, and half-plane zero
/// sampling (upper and right) for any value.
pub fn stability_report(
    def: &crate::zoo::GraphPolyDef,
    g: &crate::graphs::Graph,
    samples: usize,
    seed: u64,
) -> Result<StabilityReport> {
    let value = def.compute(g)?;
    let mut tests = Vec::new();
    if value.is_plain_univariate() && !value.is_zero() {
        let rr = is_real_rooted(&value)?;
        tests.push(StabilityTest {
            name: "real-rooted".into(),
            method: "exact".into(),
            verdict: if rr { "real-rooted" } else { "not real-rooted" }.into(),
            detail: "Sturm sign variations on the squarefree part".into(),
        });
        let bound = cauchy_bound(&value)?;
        let inside = schur_cohn_in_disk(&value, &bound)?;
        tests.push(StabilityTest {
            name: format!("in-disk({bound})"),
            method: "exact".into(),
            verdict: if inside {
                "all roots inside"
            } else {
                "root on or outside"
            }
            .into(),
            detail: "Schur-Cohn reduction after scaling by the Cauchy bound".into(),
        });
    }
    for region in [stability::HalfPlane::Upper, stability::HalfPlane::Right] {
        let report = stability::sample_halfplane(&value, region, samples, seed)?;
        tests.push(StabilityTest {
            name: format!("{}-half-plane", region.name()),
            method: "sampling".into(),
            verdict: report.verdict(),
            detail: format!(
                "{} grid + {} random points",
                report.grid_points, report.random_points
            ),
        });
    }
    Ok(StabilityReport {
        poly: def.name.clone(),
        graph: crate::graphs::encode_graph6(g)?,
        tests,
    })
}

/// Dense univariate polynomial over the rationals, ascending coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly(pub Vec<BigRational>);

impl UniPoly {
    pub fn from_multi(p: &MultiPoly) -> Result<UniPoly> {
        let (_, coeffs) = p.univariate_coeffs()?;
        Ok(UniPoly::new(coeffs))
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> UniPoly {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        UniPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.degree() == 0 {
            return UniPoly::new(vec![BigRational::zero()]);
        }
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    fn rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree();
        if dd == 0 {
            // division by a nonzero constant leaves no remainder
            return UniPoly::new(vec![BigRational::zero()]);
        }
        let mut r = self.0.clone();
        let lead = &d.0[dd];
        while r.len() > dd && r.len() > 1 {
            let rl = r.len();
            if r[rl - 1].is_zero() {
                r.pop();
                continue;
            }
            let factor = &r[rl - 1] / lead;
            for i in 0..=dd {
                let idx = rl - 1 - dd + i;
                let delta = &factor * &d.0[i];
                r[idx] -= delta;
            }
            r.pop();
        }
        UniPoly::new(r)
    }

    /// Polynomial gcd, monic-normalized.
    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.0.last().unwrap().clone();
        UniPoly::new(a.0.iter().map(|c| c / &lead).collect())
    }

    fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() || self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_exact(&g)
    }

    fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let mut r = self.0.clone();
        let dd = d.degree();
        let lead = &d.0[dd];
        let mut q = vec![BigRational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd.max(1) || (dd == 0 && r.iter().any(|c| !c.is_zero())) {
            let rl = r.len();
            if r[rl - 1].is_zero() && rl > 1 {
                r.pop();
                continue;
            }
            if rl - 1 < dd {
                break;
            }
            let factor = &r[rl - 1] / lead;
            q[rl - 1 - dd] = factor.clone();
            for i in 0..=dd {
                let idx = rl - 1 - dd + i;
                let delta = &factor * &d.0[i];
                r[idx] -= delta;
            }
            r.pop();
            if r.is_empty() {
                break;
            }
        }
        UniPoly::new(q)
    }
}

/// Interval bound for root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

fn sign_at(p: &UniPoly, b: &Bound) -> i8 {
    match b {
        Bound::Finite(x) => {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::PosInf => {
            let lead = p.0.last().unwrap();
            if lead.is_zero() {
                0
            } else if lead.is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::NegInf => {
            let lead = p.0.last().unwrap();
            if lead.is_zero() {
                return 0;
            }
            let s = if lead.is_positive() { 1 } else { -1 };
            if p.degree().is_multiple_of(2) {
                s
            } else {
                -s
            }
        }
    }
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() && chain.last().unwrap().degree() > 0 {
        let k = chain.len();
        let r = chain[k - 2].rem(&chain[k - 1]);
        let neg = UniPoly::new(r.0.iter().map(|c| -c.clone()).collect());
        if neg.is_zero() {
            break;
        }
        chain.push(neg);
    }
    chain
}

fn variations(chain: &[UniPoly], b: &Bound) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| sign_at(p, b))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval (a, b].
/// The bounds must not themselves be roots when finite (standard Sturm
/// precondition); infinite bounds are always safe.
pub fn sturm_count(p: &MultiPoly, a: Bound, b: Bound) -> Result<usize> {
    let u = UniPoly::from_multi(p)?;
    if u.is_zero() {
        return Err(Error::Domain(
            "root counting needs a nonzero polynomial".into(),
        ));
    }
    if u.degree() == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&u);
    let va = variations(&chain, &a);
    let vb = variations(&chain, &b);
    Ok(va.saturating_sub(vb))
}

/// True when all complex roots of `p` are real: the distinct real-root count
/// of the squarefree part equals its degree.
pub fn is_real_rooted(p: &MultiPoly) -> Result<bool> {
    let u = UniPoly::from_multi(p)?;
    if u.is_zero() {
        return Err(Error::Domain(
            "real-rootedness needs a nonzero polynomial".into(),
        ));
    }
    if u.degree() == 0 {
        return Ok(true);
    }
    let sf = u.squarefree_part();
    let chain = sturm_chain(&sf);
    let count =
        variations(&chain, &Bound::NegInf).saturating_sub(variations(&chain, &Bound::PosInf));
    Ok(count == sf.degree())
}

/// Largest k with (X - a)^k dividing p, by repeated synthetic division.
pub fn root_multiplicity_at(p: &MultiPoly, a: &BigRational) -> Result<usize> {
    let mut u = UniPoly::from_multi(p)?;
    if u.is_zero() {
        return Err(Error::Domain(
            "multiplicity needs a nonzero polynomial".into(),
        ));
    }
    let mut mult = 0;
    while u.eval(a).is_zero() && u.degree() >= 1 {
        // synthetic division by (X - a)
        let mut out = vec![BigRational::zero(); u.degree()];
        let mut carry = BigRational::zero();
        for i in (0..=u.degree()).rev() {
            let c = &u.0[i] + &carry;
            if i == 0 {
                break;
            }
            out[i - 1] = c.clone();
            carry = c * a;
        }
        u = UniPoly::new(out);
        mult += 1;
    }
    Ok(mult)
}

/// Cauchy root bound 1 + max |a_i / a_d|: every root lies strictly inside
/// the disk of this radius.
pub fn cauchy_bound(p: &MultiPoly) -> Result<BigRational> {
    let u = UniPoly::from_multi(p)?;
    if u.is_zero() {
        return Err(Error::Domain(
            "root bound needs a nonzero polynomial".into(),
        ));
    }
    let lead = u.0.last().unwrap().clone();
    let mut max = BigRational::zero();
    for c in &u.0[..u.degree()] {
        let q = (c / &lead).abs();
        if q > max {
            max = q;
        }
    }
    Ok(max + BigRational::one())
}

/// Exact test for all roots inside the open disk |z| < R: scale X := R X and
/// run the Schur-Cohn reduction. Roots on the boundary yield false.
pub fn schur_cohn_in_disk(p: &MultiPoly, radius: &BigRational) -> Result<bool> {
    if !radius.is_positive() {
        return Err(Error::Domain("disk radius must be positive".into()));
    }
    let u = UniPoly::from_multi(p)?;
    if u.is_zero() {
        return Err(Error::Domain("disk test needs a nonzero polynomial".into()));
    }
    if u.degree() == 0 {
        return Ok(true);
    }
    // q(X) = p(R X)
    let mut q: Vec<BigRational> = Vec::with_capacity(u.0.len());
    let mut power = BigRational::one();
    for c in &u.0 {
        q.push(c * &power);
        power *= radius;
    }
    let mut f = UniPoly::new(q);
    loop {
        if f.degree() == 0 {
            return Ok(true);
        }
        let a0 = f.0[0].clone();
        let an = f.0.last().unwrap().clone();
        let delta = &an * &an - &a0 * &a0;
        if !delta.is_positive() {
            return Ok(false);
        }
        // f1(X) = (a_n f(X) - a_0 f*(X)) / X with f*(X) = X^d f(1/X)
        let d = f.degree();
        let mut next = vec![BigRational::zero(); d];
        for (i, slot) in next.iter_mut().enumerate() {
            *slot = &an * &f.0[i + 1] - &a0 * &f.0[d - 1 - i];
        }
        f = UniPoly::new(next);
        if f.is_zero() {
            // self-inversive remainder, roots on the boundary
            return Ok(false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polys::{rat, ratio};

    fn x() -> MultiPoly {
        MultiPoly::var("X")
    }

    #[test]
    fn sturm_counts() {
        let p = x().pow(2).sub(&MultiPoly::one());
        assert_eq!(sturm_count(&p, Bound::NegInf, Bound::PosInf).unwrap(), 2);
        assert!(is_real_rooted(&p).unwrap());
        let q = x().pow(2).add(&MultiPoly::one());
        assert_eq!(sturm_count(&q, Bound::NegInf, Bound::PosInf).unwrap(), 0);
        assert!(!is_real_rooted(&q).unwrap());
        // X^4 - 4 X^2: roots 0, 0, 2, -2, all real
        let r = x().pow(4).sub(&x().pow(2).scale(&rat(4)));
        assert!(is_real_rooted(&r).unwrap());
        assert_eq!(sturm_count(&r, Bound::NegInf, Bound::PosInf).unwrap(), 3);
        // roots in (0, 2]
        assert_eq!(
            sturm_count(&r, Bound::Finite(ratio(1, 100)), Bound::Finite(rat(3))).unwrap(),
            1
        );
    }

    #[test]
    fn multiplicities() {
        let p = x().pow(3);
        assert_eq!(root_multiplicity_at(&p, &rat(0)).unwrap(), 3);
        let q = x().pow(2).sub(&x().scale(&rat(2)));
        assert_eq!(root_multiplicity_at(&q, &rat(0)).unwrap(), 1);
        assert_eq!(root_multiplicity_at(&q, &rat(2)).unwrap(), 1);
        let r = x().pow(2).sub(&MultiPoly::one());
        assert_eq!(root_multiplicity_at(&r, &rat(0)).unwrap(), 0);
    }

    #[test]
    fn disk_tests() {
        let quarter = x().pow(2).sub(&MultiPoly::constant(ratio(1, 4)));
        assert!(schur_cohn_in_disk(&quarter, &rat(1)).unwrap());
        let four = x().pow(2).sub(&MultiPoly::from_int(4));
        assert!(!schur_cohn_in_disk(&four, &rat(1)).unwrap());
        // boundary roots are outside the open disk
        let unit = x().pow(2).sub(&MultiPoly::one());
        assert!(!schur_cohn_in_disk(&unit, &rat(1)).unwrap());
        assert!(schur_cohn_in_disk(&unit, &ratio(3, 2)).unwrap());
        // zero roots are inside
        let p = x().pow(3).scale(&rat(5));
        assert!(schur_cohn_in_disk(&p, &ratio(1, 10)).unwrap());
    }

    #[test]
    fn report_battery() {
        let def = crate::zoo::resolve_poly("char-adjacency").unwrap();
        let g = crate::graphs::cycle(4).unwrap();
        let report = stability_report(&def, &g, 30, 9).unwrap();
        assert_eq!(report.graph, "Cl"); // C_4 in cyclic label order
        assert!(report
            .tests
            .iter()
            .any(|t| t.name == "real-rooted" && t.verdict == "real-rooted"));
        // the spectrum {2, 0, 0, -2} has real points in both half-planes,
        // so the deterministic grids falsify both regions
        let upper = report
            .tests
            .iter()
            .find(|t| t.name == "upper-half-plane")
            .unwrap();
        assert_eq!(upper.method, "sampling");
        let json = serde_json::to_value(&report).unwrap();
        assert!(json["tests"].as_array().unwrap().len() >= 3);
    }

    #[test]
    fn cauchy() {
        let p = x().pow(2).sub(&MultiPoly::from_int(4));
        assert_eq!(cauchy_bound(&p).unwrap(), rat(5));
        assert!(schur_cohn_in_disk(&p, &rat(5)).unwrap());
    }
}
