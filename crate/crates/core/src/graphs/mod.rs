//! Finite simple undirected graphs with a fixed vertex order 0..n-1,
//! standard families, structural predicates, and catalog enumeration.

pub mod catalog;
pub mod graph6;

use crate::error::{Error, Result};
use crate::linalg::bareiss_det;
use num::{BigInt, One, Zero};
use std::fmt;

pub use catalog::{
    canonical_code, catalog_up_to, enumerate_catalog, enumerate_hereditary, is_isomorphic,
};
pub use graph6::{encode_graph6, parse_edge_list, parse_graph6};

/// Simple undirected graph on vertices 0..n-1, adjacency kept as bitmask rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// The (n, m, k) triple: vertex count, edge count, component count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct SimilarityTriple {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

impl SimilarityTriple {
    /// Nullity m - n + k.
    pub fn nullity(&self) -> i64 {
        self.m as i64 - self.n as i64 + self.k as i64
    }
    /// Rank n - k.
    pub fn rank(&self) -> i64 {
        self.n as i64 - self.k as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct StructuralFacts {
    pub triple: SimilarityTriple,
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
    pub forest: bool,
    pub triangle_free: bool,
    pub bipartite: bool,
    pub clique: bool,
    #[serde(serialize_with = "ser_bigint")]
    pub spanning_tree_count: BigInt,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        assert!(n <= 64, "graphs are limited to 64 vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > 64 {
            return Err(Error::Domain("graphs are limited to 64 vertices".into()));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn num_edges(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as sorted (u, v) pairs with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut rest = if u + 1 >= 64 {
                0
            } else {
                self.adj[u] & !((1u64 << (u + 1)) - 1)
            };
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Number of connected components.
    pub fn num_components(&self) -> usize {
        let mut seen = 0u64;
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut k = 0;
        while seen != full {
            let start = (!seen & full).trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                let mut rest = comp;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    grown |= self.adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            k += 1;
        }
        k
    }

    /// Component membership mask of the component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut comp = 1u64 << v;
        loop {
            let mut grown = comp;
            let mut rest = comp;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= self.adj[w];
            }
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    pub fn similarity(&self) -> SimilarityTriple {
        SimilarityTriple {
            n: self.n,
            m: self.num_edges(),
            k: self.num_components(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.num_components() == 1
    }

    pub fn is_forest(&self) -> bool {
        let t = self.similarity();
        t.m == t.n - t.k
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) && self.adj[u] & self.adj[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for s in 0..self.n {
            if color[s] != -1 {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let mut rest = self.adj[u];
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if color[v] == -1 {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_clique(&self) -> bool {
        self.num_edges() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Exact spanning-tree count: the determinant of any (n-1)x(n-1)
    /// Laplacian cofactor; 1 when n <= 1, 0 when disconnected.
    #[allow(clippy::needless_range_loop)]
    pub fn spanning_tree_count(&self) -> BigInt {
        if self.n <= 1 {
            return BigInt::one();
        }
        if !self.is_connected() {
            return BigInt::zero();
        }
        let s = self.n - 1;
        let mut m = vec![vec![BigInt::zero(); s]; s];
        for u in 0..s {
            m[u][u] = BigInt::from(self.degree(u) as i64);
            for v in 0..s {
                if u != v && self.has_edge(u, v) {
                    m[u][v] = BigInt::from(-1);
                }
            }
        }
        bareiss_det(m)
    }

    pub fn analyze(&self) -> StructuralFacts {
        StructuralFacts {
            triple: self.similarity(),
            degree_sequence: self.degree_sequence(),
            connected: self.is_connected(),
            forest: self.is_forest(),
            triangle_free: self.is_triangle_free(),
            bipartite: self.is_bipartite(),
            clique: self.is_clique(),
            spanning_tree_count: self.spanning_tree_count(),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Relabels vertices: vertex v of `self` becomes `perm[v]`.
    pub fn apply_permutation(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Induced subgraph on the vertices of `mask`, relabeled densely in
    /// increasing order.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&v| (mask >> v) & 1 == 1).collect();
        let mut g = Graph::empty(verts.len());
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if self.has_edge(verts[i], verts[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Spanning subgraph with the same vertices and the edges selected by
    /// `edge_mask` over `self.edges()` order.
    pub fn spanning_subgraph(&self, edge_mask: u64) -> Graph {
        let mut g = Graph::empty(self.n);
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if (edge_mask >> i) & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ---------------------------------------------------------------------------
// standard families
// ---------------------------------------------------------------------------

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    Ok(g)
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// C_i^*: a cycle on i-1 vertices plus one pendant vertex attached to a
/// single cycle vertex. Similar to C_i. Needs i >= 4.
pub fn cycle_star(i: usize) -> Result<Graph> {
    if i < 4 {
        return Err(Error::Domain(format!("cycle-star needs i >= 4, got {i}")));
    }
    let mut g = cycle(i - 1)?;
    let mut h = Graph::empty(i);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    h.add_edge(0, i - 1);
    g = h;
    Ok(g)
}

/// G_i^k: k disjoint copies of the cycle C_i.
pub fn cycle_copies(i: usize, k: usize) -> Result<Graph> {
    let c = cycle(i)?;
    let mut g = Graph::empty(0);
    for _ in 0..k {
        g = g.disjoint_union(&c);
    }
    Ok(g)
}

/// G^_i^k: k-1 copies of C_i^* plus one copy of C_i. Similar to G_i^k.
pub fn cycle_star_copies(i: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Ok(Graph::empty(0));
    }
    let star = if k > 1 { Some(cycle_star(i)?) } else { None };
    let mut g = Graph::empty(0);
    for _ in 0..k - 1 {
        g = g.disjoint_union(star.as_ref().unwrap());
    }
    Ok(g.disjoint_union(&cycle(i)?))
}

/// Family constructor by name: K, E, C, P, C_star, G, G_hat.
pub fn build_family(name: &str, params: &[usize]) -> Result<Graph> {
    let need = |count: usize| -> Result<()> {
        if params.len() == count {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "family `{name}` takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "K" => {
            need(1)?;
            Ok(complete(params[0]))
        }
        "E" => {
            need(1)?;
            Ok(edgeless(params[0]))
        }
        "C" => {
            need(1)?;
            cycle(params[0])
        }
        "P" => {
            need(1)?;
            Ok(path(params[0]))
        }
        "C_star" => {
            need(1)?;
            cycle_star(params[0])
        }
        "G" => {
            need(2)?;
            cycle_copies(params[0], params[1])
        }
        "G_hat" => {
            need(2)?;
            cycle_star_copies(params[0], params[1])
        }
        other => Err(Error::Domain(format!("unknown family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        // C_4^* is a triangle plus a pendant vertex
        let g = cycle_star(4).unwrap();
        let t = g.similarity();
        assert_eq!((t.n, t.m, t.k), (4, 4, 1));
        assert!(!g.is_triangle_free());

        let g = cycle_copies(3, 2).unwrap();
        let t = g.similarity();
        assert_eq!((t.n, t.m, t.k), (6, 6, 2));

        // G_4^2 and G^_4^2 are similar
        let a = cycle_copies(4, 2).unwrap().similarity();
        let b = cycle_star_copies(4, 2).unwrap().similarity();
        assert_eq!(a, b);
        assert_eq!((a.n, a.m, a.k), (8, 8, 2));
    }

    #[test]
    fn similar_star_families() {
        for i in 4..=6 {
            for k in 1..=3 {
                let a = cycle_copies(i, k).unwrap().similarity();
                let b = cycle_star_copies(i, k).unwrap().similarity();
                assert_eq!(a, b, "i={i} k={k}");
            }
        }
        assert!(cycle_star(3).is_err());
    }

    #[test]
    fn analyze_fixtures() {
        let k3 = complete(3);
        let f = k3.analyze();
        assert_eq!((f.triple.n, f.triple.m, f.triple.k), (3, 3, 1));
        assert_eq!(f.spanning_tree_count, BigInt::from(3));
        assert!(f.clique);

        let c4 = cycle(4).unwrap();
        let f = c4.analyze();
        assert!(f.triangle_free);
        assert!(f.bipartite);
        assert_eq!(f.spanning_tree_count, BigInt::from(4));

        let e5 = edgeless(5);
        let f = e5.analyze();
        assert_eq!((f.triple.n, f.triple.m, f.triple.k), (5, 0, 5));
        assert!(f.forest);
        assert_eq!(f.spanning_tree_count, BigInt::from(0));

        assert_eq!(Graph::empty(0).spanning_tree_count(), BigInt::from(1));
        assert_eq!(Graph::empty(1).spanning_tree_count(), BigInt::from(1));
    }

    #[test]
    fn cayley_tree_counts() {
        // spanning trees of K_n number n^(n-2)
        for n in 2..=6usize {
            let expect = num::pow::pow(BigInt::from(n), n - 2);
            assert_eq!(complete(n).spanning_tree_count(), expect);
        }
    }

    #[test]
    fn complement_and_union() {
        assert_eq!(complete(3).complement(), edgeless(3));
        let g = cycle(5).unwrap();
        assert_eq!(g.complement().complement(), g);
        let t = cycle(3).unwrap().disjoint_union(&edgeless(2)).similarity();
        assert_eq!((t.n, t.m, t.k), (5, 3, 3));
        // m(complement) = n(n-1)/2 - m
        for n in 0..6 {
            let g = path(n);
            assert_eq!(
                g.complement().num_edges(),
                n * n.saturating_sub(1) / 2 - g.num_edges()
            );
        }
    }
}
