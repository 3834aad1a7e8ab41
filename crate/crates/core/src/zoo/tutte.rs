//! Tutte polynomial by deletion-contraction with memoization on canonical
//! multigraph forms, and the universal five-variable form.
//!
//! Contraction creates parallel edges and loops, so the recursion runs on
//! multigraphs internally; the public surface only accepts simple graphs.

use crate::error::Result;
use crate::graphs::Graph;
use crate::guards;
use crate::polys::MultiPoly;
use std::collections::HashMap;

/// Loopless multigraph: upper-triangular edge multiplicities in column order
/// (0,1), (0,2),(1,2), (0,3),(1,3),(2,3), ...
#[derive(Clone, PartialEq, Eq, Hash)]
struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

fn tri_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

impl Multigraph {
    fn from_graph(g: &Graph) -> Multigraph {
        let n = g.n();
        let mut mult = vec![0u32; n * n.saturating_sub(1) / 2];
        for (u, v) in g.edges() {
            mult[tri_index(u, v)] = 1;
        }
        Multigraph { n, mult }
    }

    fn get(&self, u: usize, v: usize) -> u32 {
        if u == v {
            return 0;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.mult[tri_index(a, b)]
    }

    fn edge_count(&self) -> u32 {
        self.mult.iter().sum()
    }

    fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 1..self.n {
            for u in 0..v {
                if self.mult[tri_index(u, v)] > 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connectivity of the underlying simple graph, optionally skipping one
    /// copy of the edge (u, v); used for bridge detection.
    fn connects_without(&self, u: usize, v: usize) -> bool {
        // removing one copy of a multiplicity >= 2 edge never disconnects
        if self.get(u, v) >= 2 {
            return true;
        }
        let mut reach = 1u64 << u;
        loop {
            let mut grown = reach;
            let mut rest = reach;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                for b in 0..self.n {
                    if b != a && self.get(a, b) > 0 && !(a == u && b == v) && !(a == v && b == u) {
                        grown |= 1 << b;
                    }
                }
            }
            if grown == reach {
                break;
            }
            reach = grown;
        }
        (reach >> v) & 1 == 1
    }

    fn delete_one(&self, u: usize, v: usize) -> Multigraph {
        let mut out = self.clone();
        out.mult[tri_index(u.min(v), u.max(v))] -= 1;
        out
    }

    /// Contracts (u, v): v is merged into u and removed. Parallel copies of
    /// (u, v) beyond the contracted one become loops; their count is
    /// returned so the caller can factor them out.
    fn contract(&self, u: usize, v: usize) -> (Multigraph, u32) {
        let loops = self.get(u, v) - 1;
        let n = self.n - 1;
        let relabel = |w: usize| if w < v { w } else { w - 1 };
        let mut mult = vec![0u32; n * n.saturating_sub(1) / 2];
        for b in 1..self.n {
            for a in 0..b {
                if (a, b) == (u.min(v), u.max(v)) {
                    continue;
                }
                let c = self.mult[tri_index(a, b)];
                if c == 0 {
                    continue;
                }
                let na = relabel(if a == v { u } else { a });
                let nb = relabel(if b == v { u } else { b });
                if na != nb {
                    mult[tri_index(na.min(nb), na.max(nb))] += c;
                }
            }
        }
        (Multigraph { n, mult }, loops)
    }

    /// Minimal multiplicity string over all vertex relabelings, found by the
    /// same prefix-pruned search as the simple-graph canonical code.
    fn canonical_key(&self) -> Vec<u32> {
        let n = self.n;
        if n <= 1 {
            return self.mult.clone();
        }
        let mut best: Option<Vec<u32>> = None;
        let mut chosen: Vec<usize> = Vec::with_capacity(n);
        fn rec(
            mg: &Multigraph,
            chosen: &mut Vec<usize>,
            used: u64,
            prefix: &mut Vec<u32>,
            best: &mut Option<Vec<u32>>,
        ) {
            let n = mg.n;
            let depth = chosen.len();
            if depth == n {
                if best
                    .as_ref()
                    .is_none_or(|b| prefix.as_slice() < b.as_slice())
                {
                    *best = Some(prefix.clone());
                }
                return;
            }
            for w in 0..n {
                if (used >> w) & 1 == 1 {
                    continue;
                }
                let base = prefix.len();
                for &c in chosen.iter() {
                    prefix.push(mg.get(c, w));
                }
                let viable = match best.as_ref() {
                    None => true,
                    Some(b) => prefix.as_slice() <= &b[..prefix.len()],
                };
                if viable {
                    chosen.push(w);
                    rec(mg, chosen, used | (1 << w), prefix, best);
                    chosen.pop();
                }
                prefix.truncate(base);
            }
        }
        let mut prefix = Vec::with_capacity(self.mult.len());
        rec(self, &mut chosen, 0, &mut prefix, &mut best);
        best.unwrap()
    }
}

fn tutte_mg(mg: &Multigraph, memo: &mut HashMap<(usize, Vec<u32>), MultiPoly>) -> MultiPoly {
    if mg.edge_count() == 0 {
        return MultiPoly::one();
    }
    let key = (mg.n, mg.canonical_key());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let pairs = mg.edge_pairs();
    let non_bridge = pairs.iter().find(|&&(u, v)| mg.connects_without(u, v));
    let result = match non_bridge {
        Some(&(u, v)) => {
            let del = tutte_mg(&mg.delete_one(u, v), memo);
            let (contracted, loops) = mg.contract(u, v);
            let mut con = tutte_mg(&contracted, memo);
            if loops > 0 {
                con = con.mul(&MultiPoly::var("Y").pow(loops));
            }
            del.add(&con)
        }
        // every edge is a bridge (a forest with multiplicities 1)
        None => MultiPoly::var("X").pow(mg.edge_count()),
    };
    memo.insert(key, result.clone());
    result
}

/// Tutte polynomial T(G; X, Y).
pub fn tutte(g: &Graph) -> Result<MultiPoly> {
    guards::check(guards::TUTTE_MAX_EDGES, g.num_edges() as u64)?;
    let mut memo = HashMap::new();
    Ok(tutte_mg(&Multigraph::from_graph(g), &mut memo))
}

/// Universal Tutte polynomial
/// U(G; X, Y, U, V, W) = U^k V^nu W^rho T(G; UX/W, Y/U),
/// a Laurent polynomial in five indeterminates.
pub fn universal_tutte(g: &Graph) -> Result<MultiPoly> {
    let t = tutte(g)?;
    let uxw = MultiPoly::monomial(
        &[("U", 1), ("X", 1), ("W", -1)],
        num::BigRational::from_integer(1.into()),
    );
    let yu = MultiPoly::monomial(
        &[("Y", 1), ("U", -1)],
        num::BigRational::from_integer(1.into()),
    );
    let sub = t.substitute("X", &uxw)?.substitute("Y", &yu)?;
    let triple = g.similarity();
    let prefactor = MultiPoly::monomial(
        &[
            ("U", triple.k as i32),
            ("V", triple.nullity() as i32),
            ("W", triple.rank() as i32),
        ],
        num::BigRational::from_integer(1.into()),
    );
    Ok(prefactor.mul(&sub))
}
