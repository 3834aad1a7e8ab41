//! Coloring-partition polynomials.
//!
//! `harary_poly(C, g)` is sum_l b_l(g) X_(l) in the falling-factorial basis,
//! where b_l counts partitions of V into exactly l nonempty classes each
//! inducing a graph with property C. Evaluated at a natural number k it
//! counts the colorings with at most k colors whose nonempty color classes
//! all lie in C. The b_l are computed by a subset dynamic program (cost 3^n),
//! which reaches n = 12 comfortably.
//!
//! `mcp_poly(g)` is sum_l c_l(g) C(X, l) where c_l counts edge colorings
//! with exactly l colors such that every vertex pair is joined by a path of
//! equally colored edges. Colorings are enumerated as edge partitions
//! (the condition ignores color names), then weighted by l!.

use super::PropertyPredicate;
use crate::error::Result;
use crate::graphs::Graph;
use crate::guards;
use crate::polys::basis::Basis;
use crate::polys::MultiPoly;
use num::{BigInt, BigRational};

/// Partition counts b_0..b_n of V(g) into nonempty classes inducing members
/// of `prop`. b_0 = 1 exactly for the empty graph.
pub fn harary_partition_counts(prop: &PropertyPredicate, g: &Graph) -> Result<Vec<BigInt>> {
    let n = g.n();
    guards::check(guards::HARARY_MAX_N, n as u64)?;
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut valid = vec![false; (full + 1) as usize];
    for mask in 1..=full {
        valid[mask as usize] = prop.decide(&g.induced_subgraph(mask));
    }
    // f[mask][l]: partitions of `mask` into l valid classes; the class of the
    // lowest vertex is chosen explicitly to avoid double counting
    let mut f: Vec<Vec<u64>> = vec![vec![0; n + 1]; (full + 1) as usize];
    f[0][0] = 1;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask & !low;
        // enumerate subsets s of `rest`; class = s | low
        let mut s = rest;
        loop {
            let class = s | low;
            if valid[class as usize] {
                let complement = mask & !class;
                for l in 1..=n {
                    let add = f[complement as usize][l - 1];
                    if add != 0 {
                        f[mask as usize][l] += add;
                    }
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
    }
    Ok(f[full as usize].iter().map(|&c| BigInt::from(c)).collect())
}

/// The coloring-partition polynomial of `prop`, expanded in the power basis.
pub fn harary_poly(prop: &PropertyPredicate, g: &Graph) -> Result<MultiPoly> {
    let counts = harary_partition_counts(prop, g)?;
    let mut acc = MultiPoly::zero();
    for (l, b) in counts.iter().enumerate() {
        if b != &BigInt::from(0) {
            let elem = Basis::Falling.element(l, "X");
            acc = acc.add(&elem.scale(&BigRational::from_integer(b.clone())));
        }
    }
    Ok(acc)
}

/// c_0..c_m with c_l = l! times the number of edge partitions into l classes
/// such that every vertex pair is joined by a single-class path.
pub fn mcp_partition_counts(g: &Graph) -> Result<Vec<BigInt>> {
    let m = g.num_edges();
    guards::check(guards::MCP_MAX_EDGES, m as u64)?;
    let n = g.n();
    let edges = g.edges();
    let mut partition_counts = vec![0u64; m + 1];
    // restricted-growth enumeration of edge partitions
    let mut assign = vec![0usize; m];
    fn rec(
        i: usize,
        max_used: usize,
        assign: &mut Vec<usize>,
        edges: &[(usize, usize)],
        n: usize,
        counts: &mut [u64],
    ) {
        let m = edges.len();
        if i == m {
            let classes = max_used;
            if mcp_condition(assign, classes, edges, n) {
                counts[classes] += 1;
            }
            return;
        }
        for c in 0..=max_used.min(i) {
            assign[i] = c;
            let next_max = max_used.max(c + 1);
            rec(i + 1, next_max, assign, edges, n, counts);
        }
    }
    if m == 0 {
        if mcp_condition(&[], 0, &edges, n) {
            partition_counts[0] = 1;
        }
    } else {
        rec(0, 0, &mut assign, &edges, n, &mut partition_counts);
    }
    let mut out = Vec::with_capacity(m + 1);
    let mut fact = BigInt::from(1);
    for (l, &c) in partition_counts.iter().enumerate() {
        if l > 0 {
            fact *= BigInt::from(l as u64);
        }
        out.push(BigInt::from(c) * &fact);
    }
    Ok(out)
}

/// The coloring condition: every vertex pair is joined by a path and every
/// path it is joined by is monochromatic. Monochromaticity of all paths is
/// equivalent to a local condition (the edges at each vertex share one
/// color), which forces whole components to be monochromatic.
fn mcp_condition(assign: &[usize], _classes: usize, edges: &[(usize, usize)], n: usize) -> bool {
    let mut vertex_class = vec![usize::MAX; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        for w in [u, v] {
            if vertex_class[w] == usize::MAX {
                vertex_class[w] = assign[i];
            } else if vertex_class[w] != assign[i] {
                return false;
            }
        }
    }
    // every pair needs at least one path: the graph must be connected
    if n >= 2 {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        let root0 = find(&mut parent, 0);
        for v in 1..n {
            if find(&mut parent, v) != root0 {
                return false;
            }
        }
    }
    true
}

/// The monochromatic-path coloring polynomial sum_l c_l C(X, l).
pub fn mcp_poly(g: &Graph) -> Result<MultiPoly> {
    let counts = mcp_partition_counts(g)?;
    let mut acc = MultiPoly::zero();
    for (l, c) in counts.iter().enumerate() {
        if c != &BigInt::from(0) {
            let elem = Basis::Binomial.element(l, "X");
            acc = acc.add(&elem.scale(&BigRational::from_integer(c.clone())));
        }
    }
    Ok(acc)
}
