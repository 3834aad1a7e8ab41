//! Stability constructions: rewriting an arbitrary graph polynomial value
//! into a stable (or Hurwitz-stable) product of affine factors from which the
//! original coefficients are recoverable, the edge-indexed multiaffine
//! variant, the dense-roots prefactor transform, and half-plane sampling.
//!
//! The stable form for a value with coefficients d_1..d_M (rank-indexed over
//! exponent vectors) is the product over i = 1..M of (d_i Y^i + X_1 + ... +
//! X_m). Each factor is affine in the X's with real coefficients once Y is
//! real, so the product never vanishes when all X coordinates lie in the open
//! upper half-plane. The coefficient of X_1^{M-1} is sum_i d_i Y^i; at Y = a0
//! with a0 > 1 + 2 max|d_i| that value is an integer whose balanced base-a0
//! digits are exactly the d_i.

use super::complex::CRat;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards;
use crate::polys::{rat, MultiPoly};
use crate::zoo::{Arity, GraphPolyDef};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// The data needed to undo a stable/Hurwitz rewriting.
#[derive(Debug, Clone)]
pub struct StableRewrite {
    /// d_1..d_M in rank order.
    pub coeffs: Vec<BigInt>,
    /// Source indeterminates; ranking treats the first as least significant.
    pub source_vars: Vec<String>,
    /// Per-variable degree bound (the mixed-radix base).
    pub radix: usize,
    /// Number of source indeterminates.
    pub m: usize,
    /// Total coefficient slots M = radix^m.
    pub big_m: usize,
    /// Stand-in indeterminates for the X part of every factor.
    pub x_vars: Vec<String>,
    /// False: single Y with powers Y^i. True: separate Y_1..Y_M (Hurwitz form).
    pub y_separate: bool,
    /// Recovery base.
    pub a0: BigInt,
    /// The affine factors whose product is the rewritten polynomial.
    pub factors: Vec<MultiPoly>,
}

impl StableRewrite {
    /// Exponent vector of rank `r` (mixed radix, source_vars[0] least
    /// significant).
    pub fn unrank(&self, r: usize) -> Vec<i32> {
        let mut digits = Vec::with_capacity(self.m);
        let mut rest = r;
        for _ in 0..self.m {
            digits.push((rest % self.radix) as i32);
            rest /= self.radix;
        }
        digits
    }
}

fn fresh_x_vars(m: usize) -> Vec<String> {
    if m == 1 {
        vec!["X".to_string()]
    } else {
        (1..=m).map(|i| format!("X_{i}")).collect()
    }
}

fn coeffs_by_rank(poly: &MultiPoly, source_vars: &[String], radix: usize) -> Result<Vec<BigInt>> {
    let m = source_vars.len();
    let big_m = radix.pow(m as u32);
    let mut out = Vec::with_capacity(big_m);
    for rank in 0..big_m {
        let mut digits = Vec::with_capacity(m);
        let mut rest = rank;
        for _ in 0..m {
            digits.push((rest % radix) as i32);
            rest /= radix;
        }
        let pows: Vec<(&str, i32)> = source_vars
            .iter()
            .map(|v| v.as_str())
            .zip(digits.iter().copied())
            .collect();
        let c = poly.coefficient_of(&pows);
        if !c.denom().is_one() {
            return Err(Error::Domain(
                "stable rewriting needs integer coefficients".into(),
            ));
        }
        out.push(c.to_integer());
    }
    Ok(out)
}

fn sum_of_vars(vars: &[String]) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for v in vars {
        acc = acc.add(&MultiPoly::var(v));
    }
    acc
}

fn recovery_base(coeffs: &[BigInt]) -> BigInt {
    let max = coeffs
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    BigInt::from(2) + BigInt::from(2) * max
}

fn build_rewrite(
    poly: &MultiPoly,
    source_vars: &[String],
    radix: usize,
    y_separate: bool,
) -> Result<(StableRewrite, MultiPoly)> {
    let m = source_vars.len();
    if m == 0 {
        return Err(Error::Domain(
            "stable rewriting needs at least one indeterminate".into(),
        ));
    }
    let big_m = radix
        .checked_pow(m as u32)
        .ok_or_else(|| Error::Domain("coefficient slot count overflow".into()))?;
    guards::check(guards::STABLE_MAX_FACTORS, big_m as u64)?;
    let coeffs = coeffs_by_rank(poly, source_vars, radix)?;
    let x_vars = fresh_x_vars(m);
    let xsum = sum_of_vars(&x_vars);
    let mut factors = Vec::with_capacity(big_m);
    let mut product = MultiPoly::one();
    for (i, d) in coeffs.iter().enumerate() {
        let y_part = if y_separate {
            MultiPoly::var(&format!("Y_{}", i + 1))
        } else {
            MultiPoly::monomial(&[("Y", (i + 1) as i32)], rat(1))
        };
        let factor = y_part
            .scale(&BigRational::from_integer(d.clone()))
            .add(&xsum);
        product = product.mul(&factor);
        factors.push(factor);
    }
    let rw = StableRewrite {
        a0: recovery_base(&coeffs),
        coeffs,
        source_vars: source_vars.to_vec(),
        radix,
        m,
        big_m,
        x_vars,
        y_separate,
        factors,
    };
    Ok((rw, product))
}

fn fixed_vars(def: &GraphPolyDef) -> Result<Vec<String>> {
    match &def.arity {
        Arity::Fixed(vars) => Ok(vars.clone()),
        Arity::EdgeIndexed => Err(Error::Domain(format!(
            "`{}` is edge-indexed; use the edge-indexed rewriting",
            def.name
        ))),
    }
}

fn degree_bound(poly: &MultiPoly, vars: &[String]) -> usize {
    let max = vars
        .iter()
        .map(|v| poly.degree_in(v).max(0) as usize)
        .max()
        .unwrap_or(0);
    max + 1
}

/// Stable rewriting of P(g). `d_override` fixes the per-variable degree
/// bound; the default is one more than the largest degree in P(g).
pub fn make_stable(
    def: &GraphPolyDef,
    g: &Graph,
    d_override: Option<usize>,
) -> Result<(StableRewrite, MultiPoly)> {
    let vars = fixed_vars(def)?;
    let poly = def.compute(g)?;
    let radix = match d_override {
        Some(d) if d >= degree_bound(&poly, &vars) => d,
        Some(d) => {
            return Err(Error::Domain(format!(
                "degree bound {d} is below the actual bound {}",
                degree_bound(&poly, &vars)
            )))
        }
        None => degree_bound(&poly, &vars),
    };
    build_rewrite(&poly, &vars, radix, false)
}

/// Hurwitz-stable rewriting: requires non-negative coefficients, produces a
/// homogeneous product with separate indeterminates Y_1..Y_M.
pub fn make_hurwitz(
    def: &GraphPolyDef,
    g: &Graph,
    d_override: Option<usize>,
) -> Result<(StableRewrite, MultiPoly)> {
    let vars = fixed_vars(def)?;
    let poly = def.compute(g)?;
    for (_, c) in poly.terms() {
        if c.is_negative() {
            return Err(Error::Domain(format!(
                "`{}` has a negative coefficient on this graph; the Hurwitz \
                 rewriting applies to the substitution-free non-negative form",
                def.name
            )));
        }
    }
    let radix = match d_override {
        Some(d) if d >= degree_bound(&poly, &vars) => d,
        Some(d) => {
            return Err(Error::Domain(format!(
                "degree bound {d} is below the actual bound {}",
                degree_bound(&poly, &vars)
            )))
        }
        None => degree_bound(&poly, &vars),
    };
    build_rewrite(&poly, &vars, radix, true)
}

/// Extracts the coefficient of (pivot X)^{M-1} with all other X vars absent:
/// a polynomial in Y (or the Y_i).
pub fn recovery_coefficient(q: &MultiPoly, rw: &StableRewrite) -> MultiPoly {
    let pivot = &rw.x_vars[0];
    let target = (rw.big_m - 1) as i32;
    let mut acc = MultiPoly::zero();
    let vars: Vec<String> = q.vars().to_vec();
    for (exp, c) in q.terms() {
        let mut ok = true;
        let mut rest_pows: Vec<(String, i32)> = Vec::new();
        for (i, v) in vars.iter().enumerate() {
            if v == pivot {
                if exp[i] != target {
                    ok = false;
                    break;
                }
            } else if rw.x_vars.contains(v) {
                if exp[i] != 0 {
                    ok = false;
                    break;
                }
            } else if exp[i] != 0 {
                rest_pows.push((v.clone(), exp[i]));
            }
        }
        if ok {
            let pows: Vec<(&str, i32)> = rest_pows.iter().map(|(v, e)| (v.as_str(), *e)).collect();
            acc = acc.add(&MultiPoly::monomial(&pows, c.clone()));
        }
    }
    acc
}

/// Recovers the rank-indexed coefficient list d_1..d_M from the rewritten
/// polynomial alone: take the coefficient of X_1^{M-1} (a polynomial in Y),
/// evaluate at Y = a0, and read the balanced base-a0 digits.
pub fn recover_from_stable(q: &MultiPoly, rw: &StableRewrite) -> Result<Vec<BigInt>> {
    if rw.y_separate {
        return Err(Error::Domain(
            "base-a0 recovery applies to the single-Y stable form".into(),
        ));
    }
    let hook = recovery_coefficient(q, rw);
    let mut point = BTreeMap::new();
    point.insert("Y".to_string(), BigRational::from_integer(rw.a0.clone()));
    let value = hook.eval_rational(&point)?;
    if !value.denom().is_one() {
        return Err(Error::Domain("recovery value is not an integer".into()));
    }
    let mut n = value.to_integer();
    let a0 = rw.a0.clone();
    let mut digits = Vec::with_capacity(rw.big_m);
    for i in 0..=rw.big_m {
        let mut r = n.mod_floor(&a0);
        let twice = BigInt::from(2) * &r;
        if twice == a0 {
            return Err(Error::Domain(
                "digit on the balanced-range boundary; wrong base or corrupted input".into(),
            ));
        }
        if twice > a0 {
            r -= &a0;
        }
        if i == 0 {
            if !r.is_zero() {
                return Err(Error::Domain(
                    "nonzero zeroth digit; wrong base or corrupted input".into(),
                ));
            }
        } else {
            digits.push(r.clone());
        }
        n = (n - r) / &a0;
    }
    if !n.is_zero() {
        return Err(Error::Domain(
            "leftover value after digit extraction; wrong base or corrupted input".into(),
        ));
    }
    Ok(digits)
}

/// Structural homogeneity: every term has the same total degree.
pub fn is_homogeneous(p: &MultiPoly, degree: i32) -> bool {
    p.terms().all(|(exp, _)| exp.iter().sum::<i32>() == degree)
}

/// Both stable and Hurwitz rewritings of an edge-indexed multiaffine value
/// (2^m coefficient slots, binary ranking over the edge order).
pub struct SokalRewrite {
    pub stable: (StableRewrite, MultiPoly),
    pub hurwitz: (StableRewrite, MultiPoly),
}

pub fn sokalize(def: &GraphPolyDef, g: &Graph) -> Result<SokalRewrite> {
    if def.arity != Arity::EdgeIndexed {
        return Err(Error::Domain(format!("`{}` is not edge-indexed", def.name)));
    }
    guards::check(guards::SOKAL_MAX_EDGES, g.num_edges() as u64)?;
    let poly = def.compute(g)?;
    let edge_vars: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("X_{{{u},{v}}}"))
        .collect();
    let mut edge_vars = edge_vars;
    edge_vars.sort();
    for v in poly.vars() {
        if !edge_vars.contains(v) {
            return Err(Error::Domain(format!(
                "indeterminate `{v}` is not an edge of the graph"
            )));
        }
    }
    for v in &edge_vars {
        if poly.degree_in(v) > 1 || poly.min_degree_in(v) < 0 {
            return Err(Error::Domain("value is not multiaffine".into()));
        }
    }
    for (_, c) in poly.terms() {
        if c.is_negative() {
            return Err(Error::Domain(
                "edge-indexed rewriting needs non-negative coefficients".into(),
            ));
        }
    }
    if edge_vars.is_empty() {
        return Err(Error::Domain(
            "edge-indexed rewriting needs at least one edge".into(),
        ));
    }
    Ok(SokalRewrite {
        stable: build_rewrite(&poly, &edge_vars, 2, false)?,
        hurwitz: build_rewrite(&poly, &edge_vars, 2, true)?,
    })
}

// ---------------------------------------------------------------------------
// dense-roots prefactor transform
// ---------------------------------------------------------------------------

fn cantor_unpair(z: u64) -> (u64, u64) {
    let mut w = 0u64;
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    let y = z - w * (w + 1) / 2;
    (w - y, y)
}

/// Fixed surjection from the naturals onto (a, b, q) in Z x N x N+;
/// 0 maps to (0, 0, 1).
pub fn unpair_triple(n: usize) -> (i64, u64, u64) {
    let (p, q0) = cantor_unpair(n as u64);
    let (s, b) = cantor_unpair(p);
    let a = if s % 2 == 1 {
        s.div_ceil(2) as i64
    } else {
        -((s / 2) as i64)
    };
    (a, b, q0 + 1)
}

/// Multiplies P(g) by the similarity polynomial
/// D = q^2 X^2 - 2aq X + (a^2 + b^2) with (a, b, q) decoded from n(g).
/// D depends only on n(g) and its roots (a +- bi)/q sweep a dense subset
/// of the complex plane as n ranges over the naturals.
/// Returns (D * P(g), D).
pub fn dense_roots_transform(def: &GraphPolyDef, g: &Graph) -> Result<(MultiPoly, MultiPoly)> {
    let vars = fixed_vars(def)?;
    if vars.len() != 1 {
        return Err(Error::Domain(format!("`{}` is not univariate", def.name)));
    }
    let var = vars[0].as_str();
    let poly = def.compute(g)?;
    let (a, b, q) = unpair_triple(g.n());
    let d = MultiPoly::monomial(&[(var, 2)], rat((q * q) as i64))
        .add(&MultiPoly::monomial(&[(var, 1)], rat(-2 * a * q as i64)))
        .add(&MultiPoly::constant(rat(a * a + (b * b) as i64)));
    Ok((d.mul(&poly), d))
}

// ---------------------------------------------------------------------------
// half-plane sampling
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfPlane {
    Upper,
    Right,
}

impl HalfPlane {
    pub fn name(&self) -> &'static str {
        match self {
            HalfPlane::Upper => "upper",
            HalfPlane::Right => "right",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SampleReport {
    pub region: HalfPlane,
    pub grid_points: usize,
    pub random_points: usize,
    /// Some(point text) when a zero was hit.
    pub falsified: Option<String>,
}

impl SampleReport {
    pub fn verdict(&self) -> String {
        match &self.falsified {
            Some(pt) => format!("falsified at {pt}"),
            None => format!(
                "not falsified at {} samples",
                self.grid_points + self.random_points
            ),
        }
    }
}

/// Exact evaluation at a complex rational point (non-negative exponents).
pub fn eval_complex(p: &MultiPoly, point: &BTreeMap<String, CRat>) -> Result<CRat> {
    if p.has_negative_exponents() {
        return Err(Error::Domain(
            "complex sampling needs non-negative exponents".into(),
        ));
    }
    let vars: Vec<&CRat> = p
        .vars()
        .iter()
        .map(|v| {
            point
                .get(v)
                .ok_or_else(|| Error::Domain(format!("no value assigned to `{v}`")))
        })
        .collect::<Result<_>>()?;
    let mut acc = CRat::zero();
    for (exp, c) in p.terms() {
        let mut t = CRat::one();
        for (i, &e) in exp.iter().enumerate() {
            if e > 0 {
                t = t.mul(&vars[i].pow(e as u32));
            }
        }
        acc = acc.add(&t.scale(c));
    }
    Ok(acc)
}

fn grid_values(region: HalfPlane) -> Vec<CRat> {
    match region {
        HalfPlane::Upper => vec![
            CRat::from_parts(0, 1, 1, 1),
            CRat::from_parts(0, 1, 2, 1),
            CRat::from_parts(0, 1, 1, 2),
            CRat::from_parts(1, 1, 1, 1),
            CRat::from_parts(-1, 1, 1, 1),
        ],
        HalfPlane::Right => vec![
            CRat::from_parts(1, 1, 0, 1),
            CRat::from_parts(2, 1, 0, 1),
            CRat::from_parts(1, 2, 0, 1),
            CRat::from_parts(1, 1, 1, 1),
            CRat::from_parts(1, 1, -1, 1),
        ],
    }
}

fn random_point(rng: &mut ChaCha8Rng, region: HalfPlane) -> CRat {
    let den = rng.gen_range(1..=3i64);
    let strict = rng.gen_range(1..=9i64);
    let free = rng.gen_range(-9..=9i64);
    match region {
        HalfPlane::Upper => CRat::from_parts(free, den, strict, den),
        HalfPlane::Right => CRat::from_parts(strict, den, free, den),
    }
}

fn point_text(point: &BTreeMap<String, CRat>) -> String {
    point
        .iter()
        .map(|(v, c)| format!("{v}={c}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Searches for a zero of `p` with all coordinates in the open region:
/// a deterministic grid pass (all coordinates equal, a few magnitudes)
/// followed by seeded random points. Finding a zero falsifies stability;
/// not finding one proves nothing and is reported as such.
pub fn sample_halfplane(
    p: &MultiPoly,
    region: HalfPlane,
    samples: usize,
    seed: u64,
) -> Result<SampleReport> {
    sample_halfplane_factors(std::slice::from_ref(p), region, samples, seed)
}

/// Same search against a product given by its factors (the product vanishes
/// exactly where some factor does, so factors are evaluated directly).
pub fn sample_halfplane_factors(
    factors: &[MultiPoly],
    region: HalfPlane,
    samples: usize,
    seed: u64,
) -> Result<SampleReport> {
    let mut vars: Vec<String> = Vec::new();
    for f in factors {
        for v in f.vars() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    let mut grid_points = 0;
    for value in grid_values(region) {
        let point: BTreeMap<String, CRat> =
            vars.iter().map(|v| (v.clone(), value.clone())).collect();
        grid_points += 1;
        for f in factors {
            if eval_complex(f, &point)?.is_zero() {
                return Ok(SampleReport {
                    region,
                    grid_points,
                    random_points: 0,
                    falsified: Some(point_text(&point)),
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let point: BTreeMap<String, CRat> = vars
            .iter()
            .map(|v| (v.clone(), random_point(&mut rng, region)))
            .collect();
        for f in factors {
            if eval_complex(f, &point)?.is_zero() {
                return Ok(SampleReport {
                    region,
                    grid_points,
                    random_points: i + 1,
                    falsified: Some(point_text(&point)),
                });
            }
        }
    }
    Ok(SampleReport {
        region,
        grid_points,
        random_points: samples,
        falsified: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, edgeless, path};
    use crate::zoo::resolve_poly;
    use num::ToPrimitive;

    #[test]
    fn stable_rewrite_of_domination_on_k2() {
        // coefficients (0, 2, 1), M = 3
        let dom = resolve_poly("domination").unwrap();
        let (rw, q) = make_stable(&dom, &complete(2), None).unwrap();
        assert_eq!(rw.big_m, 3);
        assert_eq!(rw.radix, 3);
        assert_eq!(
            rw.coeffs,
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)]
        );
        assert_eq!(rw.a0, BigInt::from(6));
        // factors X, 2Y^2 + X, Y^3 + X
        assert_eq!(rw.factors[0], MultiPoly::var("X"));
        assert_eq!(
            rw.factors[1],
            MultiPoly::monomial(&[("Y", 2)], rat(2)).add(&MultiPoly::var("X"))
        );
        assert_eq!(
            rw.factors[2],
            MultiPoly::monomial(&[("Y", 3)], rat(1)).add(&MultiPoly::var("X"))
        );
        // recovery hook: coefficient of X^2 is 2Y^2 + Y^3
        let hook = recovery_coefficient(&q, &rw);
        assert_eq!(hook.canonical_text(), "Y^3 + 2*Y^2");
        // digits of 2*36 + 216 = 288 in balanced base 6 are (0, 2, 1)
        let digits = recover_from_stable(&q, &rw).unwrap();
        assert_eq!(digits, rw.coeffs);
    }

    #[test]
    fn degenerate_rewrites() {
        // the zero polynomial becomes X^M
        let zero_def = GraphPolyDef::new("zero", Arity::fixed(&["X"]), |_| Ok(MultiPoly::zero()));
        let (rw, q) = make_stable(&zero_def, &complete(2), None).unwrap();
        assert_eq!(rw.big_m, 1);
        assert_eq!(q, MultiPoly::var("X"));
        assert_eq!(recover_from_stable(&q, &rw).unwrap(), vec![BigInt::from(0)]);

        // a constant c becomes cY + X
        let const_def = GraphPolyDef::new("seven", Arity::fixed(&["X"]), |_| {
            Ok(MultiPoly::from_int(7))
        });
        let (rw, q) = make_stable(&const_def, &complete(2), None).unwrap();
        assert_eq!(
            q,
            MultiPoly::monomial(&[("Y", 1)], rat(7)).add(&MultiPoly::var("X"))
        );
        assert_eq!(recover_from_stable(&q, &rw).unwrap(), vec![BigInt::from(7)]);
    }

    #[test]
    fn hurwitz_with_degree_override() {
        // matching polynomial of P_3 is 1 + 2X; with bound 3 the slots are
        // (1, 2, 0) and the product gains a bare X factor
        let mg = resolve_poly("matching-gen").unwrap();
        let (rw, q) = make_hurwitz(&mg, &path(3), Some(3)).unwrap();
        assert_eq!(rw.big_m, 3);
        assert_eq!(
            rw.coeffs,
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(0)]
        );
        let y1x = MultiPoly::var("Y_1").add(&MultiPoly::var("X"));
        let y2x = MultiPoly::var("Y_2")
            .scale(&rat(2))
            .add(&MultiPoly::var("X"));
        assert_eq!(rw.factors, vec![y1x, y2x, MultiPoly::var("X")]);
        assert!(is_homogeneous(&q, 3));
        // recovery hook reads sum d_i Y_i directly
        let hook = recovery_coefficient(&q, &rw);
        let expect = MultiPoly::var("Y_1").add(&MultiPoly::var("Y_2").scale(&rat(2)));
        assert_eq!(hook, expect);

        // constant 1: Q_h = Y_1 + X
        let one_def = GraphPolyDef::new("one", Arity::fixed(&["X"]), |_| Ok(MultiPoly::one()));
        let (_, q) = make_hurwitz(&one_def, &complete(2), None).unwrap();
        assert_eq!(q, MultiPoly::var("Y_1").add(&MultiPoly::var("X")));

        // independence polynomial of P_3: hook is Y_1 + 3Y_2 + Y_3
        let ind = resolve_poly("independence").unwrap();
        let (rw, q) = make_hurwitz(&ind, &path(3), None).unwrap();
        let hook = recovery_coefficient(&q, &rw);
        let expect = MultiPoly::var("Y_1")
            .add(&MultiPoly::var("Y_2").scale(&rat(3)))
            .add(&MultiPoly::var("Y_3"));
        assert_eq!(hook, expect);
        assert_eq!(rw.big_m, 3);

        // negative coefficients are rejected
        let chrom = resolve_poly("chromatic").unwrap();
        assert!(make_hurwitz(&chrom, &complete(2), None).is_err());
    }

    #[test]
    fn sokal_roundtrip_on_triangle() {
        let st = resolve_poly("spanning-tree").unwrap();
        let rw = sokalize(&st, &crate::graphs::cycle(3).unwrap()).unwrap();
        let (srw, sq) = &rw.stable;
        assert_eq!(srw.big_m, 8);
        // three spanning trees: exactly 3 slots carry a nonzero digit
        let nonzero = srw.coeffs.iter().filter(|c| !c.is_zero()).count();
        assert_eq!(nonzero, 3);
        let digits = recover_from_stable(sq, srw).unwrap();
        assert_eq!(&digits, &srw.coeffs);
        let (hrw, hq) = &rw.hurwitz;
        assert!(is_homogeneous(hq, hrw.big_m as i32));
        let nonzero_h = hrw
            .factors
            .iter()
            .filter(|f| f.vars().iter().any(|v| v.starts_with("Y_")))
            .count();
        assert_eq!(nonzero_h, 3);
    }

    #[test]
    fn unpairing() {
        assert_eq!(unpair_triple(0), (0, 0, 1));
        // surjectivity on a box: every (a, b, q) with |a|, b <= 3, q <= 3
        // appears among the first few thousand codes
        let mut missing: std::collections::HashSet<(i64, u64, u64)> = Default::default();
        for a in -3..=3i64 {
            for b in 0..=3u64 {
                for q in 1..=3u64 {
                    missing.insert((a, b, q));
                }
            }
        }
        let mut n0 = 0;
        for n in 0..100_000usize {
            missing.remove(&unpair_triple(n));
            if missing.is_empty() {
                n0 = n;
                break;
            }
        }
        assert!(missing.is_empty(), "box not covered");
        assert!(n0 > 0);
    }

    #[test]
    fn dense_transform_divides_back() {
        let chrom = resolve_poly("chromatic").unwrap();
        for g in [complete(2), path(4), complete(3)] {
            let (q, d) = dense_roots_transform(&chrom, &g).unwrap();
            let p = chrom.compute(&g).unwrap();
            assert_eq!(q.div_exact(&d).unwrap(), p);
            // leading coefficient q^2 > 0, integral
            assert!(d.is_integral());
        }
        // n = 0 decodes to (0,0,1): D = X^2
        let (_, d) = dense_roots_transform(&chrom, &edgeless(0)).unwrap();
        assert_eq!(d, MultiPoly::var("X").pow(2));
    }

    #[test]
    fn sampling_finds_and_misses() {
        // X^2 + 1 vanishes at i, caught by the grid pass
        let p = MultiPoly::var("X").pow(2).add(&MultiPoly::one());
        let report = sample_halfplane(&p, HalfPlane::Upper, 50, 1).unwrap();
        assert!(report.falsified.is_some());
        // the constant 1 never vanishes
        let report = sample_halfplane(&MultiPoly::one(), HalfPlane::Upper, 10, 1).unwrap();
        assert!(report.falsified.is_none());
        // a stable factor never vanishes on the region
        let dom = resolve_poly("domination").unwrap();
        let (rw, _) = make_stable(&dom, &complete(2), None).unwrap();
        let at_a0: Vec<MultiPoly> = rw
            .factors
            .iter()
            .map(|f| {
                f.substitute(
                    "Y",
                    &MultiPoly::constant(BigRational::from_integer(rw.a0.clone())),
                )
                .unwrap()
            })
            .collect();
        let report = sample_halfplane_factors(&at_a0, HalfPlane::Upper, 200, 42).unwrap();
        assert!(report.falsified.is_none());
        let _ = rat(1).to_i64();
    }
}
