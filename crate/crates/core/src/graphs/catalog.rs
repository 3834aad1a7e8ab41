//! Canonical forms, isomorphism testing, and exhaustive isomorphism-reduced
//! enumeration of small graphs.

use super::Graph;
use crate::error::Result;
use crate::guards;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Canonical code: the lexicographically minimal upper-triangular adjacency
/// bit-string over all n! vertex relabelings. Bits are read in column order
/// (0,1), (0,2),(1,2), (0,3),(1,3),(2,3), ... with the first bit most
/// significant, so codes compare as integers. Limited to n <= 11 (55 bits).
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes support n <= 11");
    if n <= 1 {
        return 0;
    }
    let total = n * (n - 1) / 2;
    let mut best: Option<u64> = None;
    let mut chosen = Vec::with_capacity(n);
    search(g, n, total, &mut chosen, 0, 0, 0, &mut best);
    best.unwrap()
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    n: usize,
    total: usize,
    chosen: &mut Vec<usize>,
    used: u64,
    acc: u64,
    bitlen: usize,
    best: &mut Option<u64>,
) {
    let depth = chosen.len();
    if depth == n {
        if best.is_none_or(|b| acc < b) {
            *best = Some(acc);
        }
        return;
    }
    for w in 0..n {
        if (used >> w) & 1 == 1 {
            continue;
        }
        let mut bits = 0u64;
        for (j, &cj) in chosen.iter().enumerate() {
            let _ = j;
            bits = (bits << 1) | u64::from(g.has_edge(cj, w));
        }
        let acc2 = (acc << depth) | bits;
        let bitlen2 = bitlen + depth;
        if let Some(b) = *best {
            let prefix = b >> (total - bitlen2);
            if acc2 > prefix {
                continue;
            }
        }
        chosen.push(w);
        search(g, n, total, chosen, used | (1 << w), acc2, bitlen2, best);
        chosen.pop();
    }
}

/// Rebuilds the graph encoded by a canonical code on n vertices.
fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut t = 0usize;
    for v in 1..n {
        for u in 0..v {
            if (code >> (total - 1 - t)) & 1 == 1 {
                g.add_edge(u, v);
            }
            t += 1;
        }
    }
    g
}

/// Brute-force isomorphism with degree-sequence pruning.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    guards::check(guards::ISO_MAX_N, g.n().max(h.n()) as u64)?;
    if g.n() != h.n() || g.num_edges() != h.num_edges() {
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    // map vertices of g in descending-degree order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_mapping(g, h, &order, 0, &mut image, &mut used))
}

fn extend_mapping(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .all(|&p| g.has_edge(v, p) == h.has_edge(w, image[p]));
        if !ok {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_mapping(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

fn level_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static CELL: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CELL.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One representative per isomorphism class with exactly n vertices,
/// sorted by canonical code. Built by augmenting the (n-1)-level: every
/// class arises by deleting a vertex, so attaching a new vertex to every
/// neighbor subset of every smaller representative covers all classes.
fn level(n: usize) -> Arc<Vec<Graph>> {
    if let Some(hit) = level_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let graphs = if n == 0 {
        vec![Graph::empty(0)]
    } else {
        let prev = level(n - 1);
        let mut codes = std::collections::BTreeSet::new();
        for g in prev.iter() {
            for subset in 0u64..(1 << (n - 1)) {
                let mut cand = Graph::empty(n);
                for (u, v) in g.edges() {
                    cand.add_edge(u, v);
                }
                for u in 0..n - 1 {
                    if (subset >> u) & 1 == 1 {
                        cand.add_edge(u, n - 1);
                    }
                }
                codes.insert(canonical_code(&cand));
            }
        }
        codes.into_iter().map(|c| graph_from_code(n, c)).collect()
    };
    let arc = Arc::new(graphs);
    level_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// Isomorphism classes with exactly `n` vertices satisfying the filter,
/// in deterministic order (by canonical code).
pub fn enumerate_catalog(n: usize, filter: Option<&dyn Fn(&Graph) -> bool>) -> Result<Vec<Graph>> {
    guards::check(guards::CATALOG_MAX_N, n as u64)?;
    let all = level(n);
    Ok(all
        .iter()
        .filter(|g| filter.is_none_or(|f| f(g)))
        .cloned()
        .collect())
}

/// Isomorphism classes with at most `n_max` vertices, ordered by vertex
/// count and then canonical code.
pub fn catalog_up_to(n_max: usize) -> Result<Vec<Graph>> {
    guards::check(guards::CATALOG_MAX_N, n_max as u64)?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.extend(level(n).iter().cloned());
    }
    Ok(out)
}

/// Classes with exactly `n` vertices all satisfying `pred`, where `pred`
/// must be closed under vertex deletion (forests, triangle-free, ...).
/// Much faster than filtering the full level because the augmentation
/// never leaves the predicate class.
pub fn enumerate_hereditary(n: usize, pred: &dyn Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    guards::check(guards::CATALOG_MAX_N, n as u64)?;
    let mut current = vec![Graph::empty(0)];
    if !pred(&current[0]) {
        return Ok(Vec::new());
    }
    for size in 1..=n {
        let mut codes = std::collections::BTreeSet::new();
        for g in &current {
            for subset in 0u64..(1 << (size - 1)) {
                let mut cand = Graph::empty(size);
                for (u, v) in g.edges() {
                    cand.add_edge(u, v);
                }
                for u in 0..size - 1 {
                    if (subset >> u) & 1 == 1 {
                        cand.add_edge(u, size - 1);
                    }
                }
                if pred(&cand) {
                    codes.insert(canonical_code(&cand));
                }
            }
        }
        current = codes
            .into_iter()
            .map(|c| graph_from_code(size, c))
            .collect();
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, cycle_copies, path};

    #[test]
    fn counts_small() {
        // classes on exactly n vertices: 1, 1, 2, 4, 11, 34
        let expect = [1usize, 1, 2, 4, 11, 34];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(enumerate_catalog(n, None).unwrap().len(), e, "n={n}");
        }
        assert_eq!(catalog_up_to(4).unwrap().len(), 19);
    }

    #[test]
    fn brute_force_count_oracle() {
        // all 2^6 labeled graphs on 4 vertices, grouped by isomorphism
        let mut reps: Vec<Graph> = Vec::new();
        for mask in 0u64..64 {
            let mut g = Graph::empty(4);
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            if !reps.iter().any(|r| is_isomorphic(r, &g).unwrap()) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), 11);
    }

    #[test]
    fn connected_n3() {
        let got = enumerate_catalog(3, Some(&|g: &Graph| g.is_connected())).unwrap();
        assert_eq!(got.len(), 2); // the path and the triangle
    }

    #[test]
    fn catalog_has_no_isomorphic_pair() {
        for n in 0..=5 {
            let level = enumerate_catalog(n, None).unwrap();
            for i in 0..level.len() {
                for j in i + 1..level.len() {
                    assert!(!is_isomorphic(&level[i], &level[j]).unwrap());
                }
            }
        }
    }

    #[test]
    fn isomorphism_basics() {
        assert!(!is_isomorphic(&cycle(4).unwrap(), &path(4)).unwrap());
        assert!(is_isomorphic(&complete(3), &cycle(3).unwrap()).unwrap());
        let two_triangles = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap());
        assert!(is_isomorphic(&cycle_copies(3, 2).unwrap(), &two_triangles).unwrap());
        // same degree sequence, not isomorphic: C_6 vs two triangles
        assert!(!is_isomorphic(&cycle(6).unwrap(), &two_triangles).unwrap());
        assert!(is_isomorphic(&Graph::empty(0), &Graph::empty(0)).unwrap());
    }

    #[test]
    fn canonical_invariance() {
        let g = path(5);
        let perm = [3, 1, 4, 0, 2];
        assert_eq!(
            canonical_code(&g),
            canonical_code(&g.apply_permutation(&perm))
        );
        assert_eq!(canonical_code(&Graph::empty(0)), 0);
        assert_eq!(canonical_code(&Graph::empty(1)), 0);
    }

    #[test]
    fn hereditary_forests() {
        // forest classes on exactly n vertices: 1, 1, 2, 3, 6, 10, 20, 37, 76
        let forest = |g: &Graph| g.is_forest();
        let expect = [1usize, 1, 2, 3, 6, 10, 20, 37, 76];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(enumerate_hereditary(n, &forest).unwrap().len(), e, "n={n}");
        }
    }

    #[test]
    fn guards_fire() {
        assert!(enumerate_catalog(9, None).is_err());
        let big = Graph::empty(11);
        assert!(is_isomorphic(&big, &big).is_err());
    }
}
