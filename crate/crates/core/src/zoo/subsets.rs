//! Polynomials computed by exhaustive subset or relation sums: the Potts
//! partition function, matching polynomials, vertex-subset generating
//! functions, and the edge-indexed spanning-tree polynomial.

use super::PropertyPredicate;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards;
use crate::polys::{rat, MultiPoly};
use num::BigRational;

/// Union-find over at most 64 elements.
struct Dsu {
    parent: Vec<u8>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n as u8).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut c = x;
        while self.parent[c] as usize != c {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u8;
            c = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb as u8;
        true
    }
}

/// Potts partition function: sum over edge subsets B of X^{k[B]} Y^{|B|}
/// with k[B] the component count of the spanning subgraph (V, B).
pub fn potts(g: &Graph) -> Result<MultiPoly> {
    let m = g.num_edges();
    guards::check(guards::POTTS_MAX_EDGES, m as u64)?;
    let n = g.n();
    let edges = g.edges();
    let mut counts = vec![0i64; (n + 1) * (m + 1)];
    for mask in 0u64..(1 << m) {
        let mut dsu = Dsu::new(n);
        let mut k = n;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if dsu.union(edges[i].0, edges[i].1) {
                k -= 1;
            }
        }
        counts[k * (m + 1) + mask.count_ones() as usize] += 1;
    }
    let mut raw = Vec::new();
    for k in 0..=n {
        for b in 0..=m {
            let c = counts[k * (m + 1) + b];
            if c != 0 {
                raw.push((vec![k as i32, b as i32], rat(c)));
            }
        }
    }
    Ok(MultiPoly::new(vec!["X".into(), "Y".into()], raw))
}

/// Chromatic polynomial as the Potts substitution instance Z(G; X, -1).
pub fn chromatic(g: &Graph) -> Result<MultiPoly> {
    potts(g)?.substitute("Y", &MultiPoly::from_int(-1))
}

pub fn chromatic_complement(g: &Graph) -> Result<MultiPoly> {
    chromatic(&g.complement())
}

/// Number of k-matchings for every k, by recursion over disjoint edge sets.
pub fn matching_counts(g: &Graph) -> Result<Vec<u64>> {
    let m = g.num_edges();
    guards::check(guards::MATCHING_MAX_EDGES, m as u64)?;
    let edges = g.edges();
    let mut counts = vec![0u64; g.n() / 2 + 1];
    fn rec(edges: &[(usize, usize)], start: usize, used: u64, k: usize, counts: &mut [u64]) {
        counts[k] += 1;
        for (i, &(u, v)) in edges.iter().enumerate().skip(start) {
            let bits = (1u64 << u) | (1 << v);
            if used & bits == 0 {
                rec(edges, i + 1, used | bits, k + 1, counts);
            }
        }
    }
    rec(&edges, 0, 0, 0, &mut counts);
    Ok(counts)
}

/// Matching generating polynomial: sum_k m_k X^k.
pub fn matching_gen(g: &Graph) -> Result<MultiPoly> {
    let counts = matching_counts(g)?;
    let raw = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (vec![k as i32], rat(c as i64)))
        .collect();
    Ok(MultiPoly::new(vec!["X".into()], raw))
}

/// Matching defect polynomial: sum_k (-1)^k m_k X^{n-2k}.
pub fn matching_defect(g: &Graph) -> Result<MultiPoly> {
    let counts = matching_counts(g)?;
    let n = g.n() as i32;
    let raw = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (vec![n - 2 * k as i32], rat(sign * c as i64))
        })
        .collect();
    Ok(MultiPoly::new(vec!["X".into()], raw))
}

/// Bivariate matching polynomial: sum_k m_k X^k Y^{n-2k}.
pub fn matching_bivar(g: &Graph) -> Result<MultiPoly> {
    let counts = matching_counts(g)?;
    let n = g.n() as i32;
    let raw = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (vec![k as i32, n - 2 * k as i32], rat(c as i64)))
        .collect();
    Ok(MultiPoly::new(vec!["X".into(), "Y".into()], raw))
}

fn vertex_subset_poly(g: &Graph, accept: impl Fn(u64) -> bool) -> Result<MultiPoly> {
    let n = g.n();
    guards::check(guards::SUBSET_MAX_N, n as u64)?;
    let mut counts = vec![0i64; n + 1];
    for mask in 0u64..(1 << n) {
        if accept(mask) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    let raw = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (vec![k as i32], rat(c)))
        .collect();
    Ok(MultiPoly::new(vec!["X".into()], raw))
}

/// Independence polynomial: vertex subsets inducing no edge.
pub fn independence(g: &Graph) -> Result<MultiPoly> {
    let g2 = g.clone();
    vertex_subset_poly(g, move |mask| {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if g2.neighbors_mask(v) & mask != 0 {
                return false;
            }
        }
        true
    })
}

/// Clique polynomial: vertex subsets inducing a complete graph.
pub fn clique_poly(g: &Graph) -> Result<MultiPoly> {
    let g2 = g.clone();
    vertex_subset_poly(g, move |mask| {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if g2.neighbors_mask(v) & mask != mask & !(1 << v) {
                return false;
            }
        }
        true
    })
}

/// Dominating-set polynomial: subsets whose closed neighborhood covers V.
pub fn domination(g: &Graph) -> Result<MultiPoly> {
    let g2 = g.clone();
    let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    vertex_subset_poly(g, move |mask| {
        let mut covered = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= g2.neighbors_mask(v) | (1 << v);
        }
        covered == full
    })
}

/// Generating function of induced subgraphs with property `prop`:
/// sum over A with G[A] in C of X^{|A|}.
pub fn gen_ind(prop: &PropertyPredicate, g: &Graph) -> Result<MultiPoly> {
    let n = g.n();
    guards::check(guards::SUBSET_MAX_N, n as u64)?;
    let mut counts = vec![0i64; n + 1];
    for mask in 0u64..(1 << n) {
        if prop.decide(&g.induced_subgraph(mask)) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    let raw = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (vec![k as i32], rat(c)))
        .collect();
    Ok(MultiPoly::new(vec!["X".into()], raw))
}

/// Generating function of spanning subgraphs. The property must be closed
/// under isolated vertices.
pub fn gen_span(prop: &PropertyPredicate, g: &Graph) -> Result<MultiPoly> {
    if !prop.closed_under_isolated_vertices {
        return Err(Error::Domain(format!(
            "property `{}` is not closed under isolated vertices",
            prop.name
        )));
    }
    let m = g.num_edges();
    guards::check(guards::SPAN_SUBSET_MAX_M, m as u64)?;
    let mut counts = vec![0i64; m + 1];
    for mask in 0u64..(1 << m) {
        if prop.decide(&g.spanning_subgraph(mask)) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    let raw = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (vec![k as i32], rat(c)))
        .collect();
    Ok(MultiPoly::new(vec!["X".into()], raw))
}

/// Generating function of an r-ary relation property:
/// sum over A subset of V^r with Phi(G, A) of X^{|A|}.
pub fn gen_rel(
    phi: &dyn Fn(&Graph, &[Vec<usize>]) -> bool,
    r: u32,
    g: &Graph,
) -> Result<MultiPoly> {
    let n = g.n() as u64;
    let space = n
        .checked_pow(r)
        .ok_or_else(|| Error::Domain("relation space overflow".into()))?;
    guards::check(guards::GEN_REL_BITS, space)?;
    let tuples: Vec<Vec<usize>> = (0..space).map(|rank| unrank_tuple(rank, n, r)).collect();
    let mut counts = vec![0i64; space as usize + 1];
    for mask in 0u64..(1 << space) {
        let selected: Vec<Vec<usize>> = (0..space)
            .filter(|&t| (mask >> t) & 1 == 1)
            .map(|t| tuples[t as usize].clone())
            .collect();
        if phi(g, &selected) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    let raw = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| (vec![k as i32], rat(c)))
        .collect();
    Ok(MultiPoly::new(vec!["X".into()], raw))
}

fn unrank_tuple(rank: u64, n: u64, r: u32) -> Vec<usize> {
    let mut t = Vec::with_capacity(r as usize);
    let mut rest = rank;
    for _ in 0..r {
        t.push((rest % n) as usize);
        rest /= n;
    }
    t
}

/// A named integer-valued graph parameter for weighted generating functions.
#[derive(Clone)]
pub struct GraphParameter {
    pub var: String,
    pub eval: std::sync::Arc<dyn Fn(&Graph) -> i64 + Send + Sync>,
}

impl GraphParameter {
    pub fn new(
        var: impl Into<String>,
        eval: impl Fn(&Graph) -> i64 + Send + Sync + 'static,
    ) -> GraphParameter {
        GraphParameter {
            var: var.into(),
            eval: std::sync::Arc::new(eval),
        }
    }
}

/// Weighted induced generating function:
/// sum over A with G[A] in C of prod_i X_i^{f_i(G[A])}.
pub fn gen_ind_weighted(
    prop: &PropertyPredicate,
    params: &[GraphParameter],
    g: &Graph,
) -> Result<MultiPoly> {
    let n = g.n();
    guards::check(guards::SUBSET_MAX_N, n as u64)?;
    let vars: Vec<String> = params.iter().map(|p| p.var.clone()).collect();
    let mut acc = MultiPoly::zero();
    for mask in 0u64..(1 << n) {
        let sub = g.induced_subgraph(mask);
        if prop.decide(&sub) {
            let exps: Vec<i32> = params.iter().map(|p| (p.eval)(&sub) as i32).collect();
            acc = acc.add(&MultiPoly::new(
                vars.clone(),
                vec![(exps, BigRational::from_integer(1.into()))],
            ));
        }
    }
    Ok(acc)
}

/// Edge-indexed spanning-tree polynomial: sum over spanning trees T of
/// prod_{e in T} X_e, with indeterminate `X_{u,v}` for the edge u < v.
pub fn spanning_tree_poly(g: &Graph) -> Result<MultiPoly> {
    if !g.is_connected() {
        return Err(Error::Domain(
            "spanning-tree polynomial requires a connected graph".into(),
        ));
    }
    let m = g.num_edges();
    guards::check(guards::SPANNING_TREE_MAX_M, m as u64)?;
    let n = g.n();
    let edges = g.edges();
    let vars: Vec<String> = edges
        .iter()
        .map(|&(u, v)| format!("X_{{{u},{v}}}"))
        .collect();
    if n <= 1 {
        return Ok(MultiPoly::one());
    }
    let mut acc = MultiPoly::zero();
    for mask in 0u64..(1 << m) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let mut dsu = Dsu::new(n);
        let mut acyclic = true;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !dsu.union(edges[i].0, edges[i].1) {
                acyclic = false;
                break;
            }
        }
        if !acyclic {
            continue;
        }
        let exps: Vec<i32> = (0..m).map(|i| ((mask >> i) & 1) as i32).collect();
        acc = acc.add(&MultiPoly::new(
            vars.clone(),
            vec![(exps, BigRational::from_integer(1.into()))],
        ));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, cycle_copies, cycle_star_copies, edgeless, path};
    use crate::polys::ratio;
    use crate::zoo::property_by_name;
    use num::{One, ToPrimitive};
    use std::collections::BTreeMap;

    fn text(p: &MultiPoly) -> String {
        p.canonical_text()
    }

    #[test]
    fn potts_and_chromatic() {
        assert_eq!(text(&potts(&complete(2)).unwrap()), "X^2 + X*Y");
        assert_eq!(text(&chromatic(&complete(3)).unwrap()), "X^3 - 3*X^2 + 2*X");
        assert_eq!(text(&chromatic(&edgeless(4)).unwrap()), "X^4");
        assert_eq!(potts(&edgeless(0)).unwrap(), MultiPoly::one());
    }

    #[test]
    fn chromatic_counts_colorings() {
        // brute-force proper colorings at every integer 0..=n
        for g in crate::graphs::catalog_up_to(4).unwrap() {
            let chi = chromatic(&g).unwrap();
            for lambda in 0..=g.n() {
                let mut count = 0u64;
                let n = g.n();
                let total = (lambda as u64).pow(n as u32);
                for code in 0..total {
                    let mut c = vec![0usize; n];
                    let mut rest = code;
                    for slot in c.iter_mut() {
                        *slot = (rest % lambda as u64) as usize;
                        rest /= lambda as u64;
                    }
                    if g.edges().iter().all(|&(u, v)| c[u] != c[v]) {
                        count += 1;
                    }
                }
                let mut pt = BTreeMap::new();
                pt.insert("X".to_string(), rat(lambda as i64));
                assert_eq!(
                    chi.eval_rational(&pt).unwrap(),
                    rat(count as i64),
                    "graph {:?} lambda {}",
                    g,
                    lambda
                );
            }
        }
    }

    #[test]
    fn matchings() {
        assert_eq!(text(&matching_gen(&path(3)).unwrap()), "2*X + 1");
        assert_eq!(text(&matching_defect(&complete(2)).unwrap()), "X^2 - 1");
        // matching-bivar at Y=X gives sum m_i X^{n-i}
        let m = matching_bivar(&complete(2)).unwrap();
        let mprime = m.substitute("Y", &MultiPoly::var("X")).unwrap();
        assert_eq!(text(&mprime), "X^2 + X");
    }

    #[test]
    fn vertex_subset_polys() {
        assert_eq!(text(&domination(&complete(2)).unwrap()), "X^2 + 2*X");
        assert_eq!(text(&domination(&edgeless(2)).unwrap()), "X^2");
        assert_eq!(text(&independence(&path(3)).unwrap()), "X^2 + 3*X + 1");
        assert_eq!(
            text(&clique_poly(&complete(3)).unwrap()),
            "X^3 + 3*X^2 + 3*X + 1"
        );
    }

    #[test]
    fn gen_ind_examples() {
        let k1 = property_by_name("k1").unwrap();
        for g in [complete(4), path(5), cycle(4).unwrap()] {
            let p = gen_ind(&k1, &g).unwrap();
            assert_eq!(p, MultiPoly::var("X").scale(&rat(g.n() as i64)));
        }
        let k2e2 = property_by_name("k2-e2").unwrap();
        let p = gen_ind(&k2e2, &complete(4)).unwrap();
        assert_eq!(text(&p), "6*X^2");

        // induced-cycle counts on the cycle-copy families
        for (i, k) in [(4usize, 2usize), (6, 2), (5, 3)] {
            let ci = crate::zoo::cycle_property(i);
            let g = cycle_copies(i, k).unwrap();
            let p = gen_ind(&ci, &g).unwrap();
            assert_eq!(p, MultiPoly::monomial(&[("X", i as i32)], rat(k as i64)));
            let gh = cycle_star_copies(i, k).unwrap();
            let p = gen_ind(&ci, &gh).unwrap();
            assert_eq!(p, MultiPoly::monomial(&[("X", i as i32)], rat(1)));
        }
    }

    #[test]
    fn gen_span_guard_and_matching() {
        let conn = property_by_name("connected").unwrap();
        assert!(gen_span(&conn, &complete(3)).is_err());
        // the matching property recovers the matching generating polynomial
        let matchprop = property_by_name("matching").unwrap();
        for g in crate::graphs::catalog_up_to(5).unwrap() {
            assert_eq!(gen_span(&matchprop, &g).unwrap(), matching_gen(&g).unwrap());
        }
    }

    #[test]
    fn gen_rel_dominating_matches() {
        let def = crate::zoo::gen_rel_dominating_def();
        assert_eq!(text(&def.compute(&complete(2)).unwrap()), "X^2 + 2*X");
        for g in crate::graphs::catalog_up_to(4).unwrap() {
            assert_eq!(def.compute(&g).unwrap(), domination(&g).unwrap());
        }
    }

    #[test]
    fn gen_ind_weighted_order_size() {
        let all = property_by_name("all").unwrap();
        let params = [
            GraphParameter::new("X1", |g: &Graph| g.n() as i64),
            GraphParameter::new("X2", |g: &Graph| g.num_edges() as i64),
        ];
        let p = gen_ind_weighted(&all, &params, &complete(2)).unwrap();
        // subsets: {} -> 1, {0} and {1} -> X1, {0,1} -> X1^2 X2
        let expect = MultiPoly::one()
            .add(&MultiPoly::var("X1").scale(&rat(2)))
            .add(&MultiPoly::monomial(&[("X1", 2), ("X2", 1)], rat(1)));
        assert_eq!(p, expect);
    }

    #[test]
    fn spanning_tree_polynomial() {
        let p = spanning_tree_poly(&cycle(3).unwrap()).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(
            text(&p),
            "X_{0,1}*X_{0,2} + X_{0,1}*X_{1,2} + X_{0,2}*X_{1,2}"
        );
        let p = spanning_tree_poly(&complete(2)).unwrap();
        assert_eq!(text(&p), "X_{0,1}");
        assert!(spanning_tree_poly(&edgeless(2)).is_err());

        // evaluating all X_e := 1 counts spanning trees
        for g in crate::graphs::catalog_up_to(5).unwrap() {
            if !g.is_connected() {
                continue;
            }
            let p = spanning_tree_poly(&g).unwrap();
            let mut pt = BTreeMap::new();
            for v in p.vars() {
                pt.insert(v.clone(), BigRational::one());
            }
            let count = p.eval_rational(&pt).unwrap();
            assert_eq!(
                count.to_integer().to_i64().unwrap(),
                g.spanning_tree_count().to_i64().unwrap()
            );
        }
    }

    #[test]
    fn chromatic_of_complement() {
        assert_eq!(
            text(&chromatic_complement(&complete(2)).unwrap()),
            "X^2"
        );
        // the 5-cycle is self-complementary
        let c5 = cycle(5).unwrap();
        assert_eq!(
            chromatic_complement(&c5).unwrap(),
            chromatic(&c5).unwrap()
        );
        // complement of the edgeless graph is the clique
        for n in 0..=5 {
            assert_eq!(
                chromatic_complement(&edgeless(n)).unwrap(),
                chromatic(&complete(n)).unwrap()
            );
        }
    }

    #[test]
    fn potts_to_chromatic_substitution_consistency() {
        let z = potts(&complete(2)).unwrap();
        let mut pt = BTreeMap::new();
        pt.insert("X".to_string(), rat(2));
        pt.insert("Y".to_string(), rat(-1));
        assert_eq!(z.eval_rational(&pt).unwrap(), rat(2));
        let _ = ratio(1, 2);
    }
}
