//! Parser and evaluator for second-order formulas over finite graphs and for
//! the polynomial terms built from them (sums and products over definable
//! tuples, big sums over definable relations), plus the case-distinction
//! combinator and order-invariance checking.

pub mod ast;
pub mod eval;
pub mod fixtures;
pub mod parser;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards;
use crate::zoo::{GraphPolyDef, PropertyPredicate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use ast::{Formula, Term, VTerm};
pub use eval::{eval_formula, eval_term, Structure, Value};
pub use fixtures::{equivalence_pairs, fixture_by_name, fixtures, Fixture};
pub use parser::{parse_formula, parse_term};

/// Outcome of evaluating a term under random relabelings of the graph.
#[derive(Debug, Clone)]
pub struct OrderInvariance {
    pub invariant: bool,
    /// A relabeling under which the value changed.
    pub counterexample: Option<Vec<usize>>,
}

/// Evaluates `t` on `g` and on `trials` seeded random relabelings of `g`
/// (plus the identity); order-dependent terms are exposed by a value change.
pub fn check_order_invariance(t: &Term, g: &Graph, trials: usize) -> Result<OrderInvariance> {
    guards::check(guards::ORDER_INVARIANCE_MAX_N, g.n() as u64)?;
    let base = eval_term(&Structure::plain(g.clone()), t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    for _ in 0..trials.max(1) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        for i in (1..perm.len()).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        let relabeled = g.apply_permutation(&perm);
        let value = eval_term(&Structure::plain(relabeled), t)?;
        if value != base {
            return Ok(OrderInvariance {
                invariant: false,
                counterexample: Some(perm),
            });
        }
    }
    Ok(OrderInvariance {
        invariant: true,
        counterexample: None,
    })
}

/// The case-distinction combinator: a polynomial equal to `q` on graphs with
/// property `k` and to `p` elsewhere. Both polynomials must share their
/// indeterminate scheme.
pub fn piecewise_combine(
    p: &GraphPolyDef,
    q: &GraphPolyDef,
    k: &PropertyPredicate,
) -> Result<GraphPolyDef> {
    if p.arity != q.arity {
        return Err(Error::Domain(format!(
            "`{}` and `{}` have different indeterminate schemes",
            p.name, q.name
        )));
    }
    let name = format!("case({} if {}, else {})", q.name, k.name, p.name);
    let p = p.clone();
    let q = q.clone();
    let k = k.clone();
    let arity = p.arity.clone();
    Ok(GraphPolyDef::new(name, arity, move |g| {
        if k.decide(g) {
            q.compute(g)
        } else {
            p.compute(g)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle_copies, path};
    use crate::polys::MultiPoly;
    use crate::zoo::{property_by_name, resolve_poly};

    #[test]
    fn fixture_values_on_small_graphs() {
        // clique polynomial of K_3: all 8 subsets are cliques
        let t = parse_term(fixtures::CLIQUE_POLY).unwrap();
        let v = eval_term(&Structure::plain(complete(3)), &t).unwrap();
        assert_eq!(v.canonical_text(), "X^3 + 3*X^2 + 3*X + 1");

        // independence polynomial of P_3
        let t = parse_term(fixtures::INDEPENDENCE).unwrap();
        let v = eval_term(&Structure::plain(path(3)), &t).unwrap();
        assert_eq!(v.canonical_text(), "X^2 + 3*X + 1");

        // X^{k} on two disjoint triangles
        let t = parse_term(fixtures::XK).unwrap();
        let v = eval_term(&Structure::plain(cycle_copies(3, 2).unwrap()), &t).unwrap();
        assert_eq!(v, MultiPoly::var("X").pow(2));
    }

    #[test]
    fn char_split_matches_determinant() {
        let t = parse_term(fixtures::CHAR_SPLIT).unwrap();
        for g in crate::graphs::catalog_up_to(3).unwrap() {
            let v = eval_term(&Structure::plain(g.clone()), &t).unwrap();
            let expect = crate::zoo::char_poly_adjacency(&g).unwrap();
            assert_eq!(v, expect, "{:?}", g);
        }
    }

    #[test]
    fn order_invariance_checks() {
        let xk = parse_term(fixtures::XK).unwrap();
        for g in crate::graphs::catalog_up_to(4).unwrap() {
            let r = check_order_invariance(&xk, &g, 6).unwrap();
            assert!(r.invariant, "{:?}", g);
        }
        let dep = parse_term(fixtures::ORDER_DEPENDENT).unwrap();
        let r = check_order_invariance(&dep, &path(3), 12).unwrap();
        assert!(!r.invariant);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn piecewise_cases() {
        let md = resolve_poly("matching-defect").unwrap();
        let pa = resolve_poly("char-adjacency").unwrap();
        let forest = property_by_name("forest").unwrap();
        let combined = piecewise_combine(&md, &pa, &forest).unwrap();
        for g in crate::graphs::catalog_up_to(4).unwrap() {
            let expect = if g.is_forest() {
                pa.compute(&g).unwrap()
            } else {
                md.compute(&g).unwrap()
            };
            assert_eq!(combined.compute(&g).unwrap(), expect);
        }
        // combine(P, P, anything) = P; combine(P, Q, none) = P
        let chrom = resolve_poly("chromatic").unwrap();
        let same = piecewise_combine(&chrom, &chrom, &forest).unwrap();
        let never = piecewise_combine(
            &chrom,
            &resolve_poly("independence").unwrap(),
            &property_by_name("none").unwrap(),
        )
        .unwrap();
        for g in crate::graphs::catalog_up_to(3).unwrap() {
            assert_eq!(same.compute(&g).unwrap(), chrom.compute(&g).unwrap());
            assert_eq!(never.compute(&g).unwrap(), chrom.compute(&g).unwrap());
        }
        // mismatched indeterminate schemes are rejected
        let tutte = resolve_poly("tutte").unwrap();
        assert!(piecewise_combine(&chrom, &tutte, &forest).is_err());

        // the combinator preserves distinctive power when the two sides
        // already agree on the property class (defect = characteristic on
        // forests), so the combined polynomial is equivalent to the base
        let combined = piecewise_combine(&md, &pa, &forest).unwrap();
        let cat = crate::graphs::catalog_up_to(5).unwrap();
        let v =
            crate::equiv::compare(&combined, &md, &cat, "n<=5", crate::equiv::Scope::Dp).unwrap();
        assert_eq!(v.relation, crate::equiv::Relation::Equivalent);
    }
}
