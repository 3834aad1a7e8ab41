//! Named guard constants for every brute-force enumeration in the crate.
//!
//! Each guard is a `(name, default)` pair. The environment variable
//! `GPL_GUARD_OVERRIDE` can raise or lower individual guards, e.g.
//! `GPL_GUARD_OVERRIDE=potts_max_edges=26,catalog_max_n=7`.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::OnceLock;

pub type Guard = (&'static str, u64);

/// Exhaustive isomorphism-reduced enumeration, vertices per level.
pub const CATALOG_MAX_N: Guard = ("catalog_max_n", 8);
/// Brute-force isomorphism testing.
pub const ISO_MAX_N: Guard = ("iso_max_n", 10);
/// Edge-subset sum for the Potts partition function (2^m subsets).
pub const POTTS_MAX_EDGES: Guard = ("potts_max_edges", 24);
/// Deletion-contraction recursion.
pub const TUTTE_MAX_EDGES: Guard = ("tutte_max_edges", 20);
/// Matching-vector enumeration.
pub const MATCHING_MAX_EDGES: Guard = ("matching_max_edges", 24);
/// Vertex-subset sums (independence, clique, domination, induced generators).
pub const SUBSET_MAX_N: Guard = ("vertex_subset_max_n", 20);
/// Edge-subset sums for spanning-subgraph generators.
pub const SPAN_SUBSET_MAX_M: Guard = ("edge_subset_max_m", 20);
/// Relation generating functions: n^r enumeration bits.
pub const GEN_REL_BITS: Guard = ("relation_generating_bits", 24);
/// Determinant polynomials (interpolated characteristic polynomials).
pub const DET_MAX_N: Guard = ("determinant_max_n", 30);
/// Spanning-tree polynomial enumeration.
pub const SPANNING_TREE_MAX_M: Guard = ("spanning_tree_max_m", 20);
/// Partition-counting bound for coloring polynomials (subset DP over 2^n).
pub const HARARY_MAX_N: Guard = ("harary_max_n", 12);
/// Edge-partition enumeration for the monochromatic-path coloring polynomial.
pub const MCP_MAX_EDGES: Guard = ("mcp_max_edges", 10);
/// Relation-quantifier enumeration: candidate count capped at 2^bits.
pub const RELATION_QUANTIFIER_BITS: Guard = ("relation_quantifier_bits", 24);
/// Tuple enumeration for small sums and products.
pub const TUPLE_ENUMERATION_MAX: Guard = ("tuple_enumeration_max", 65536);
/// Order-invariance checking.
pub const ORDER_INVARIANCE_MAX_N: Guard = ("order_invariance_max_n", 7);
/// Factor count for the stable/Hurwitz product constructions.
pub const STABLE_MAX_FACTORS: Guard = ("stable_max_factors", 64);
/// Edge count for the edge-indexed stability construction (2^m factors).
pub const SOKAL_MAX_EDGES: Guard = ("sokal_max_edges", 5);

fn overrides() -> &'static HashMap<String, u64> {
    static CELL: OnceLock<HashMap<String, u64>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut map = HashMap::new();
        if let Ok(raw) = std::env::var("GPL_GUARD_OVERRIDE") {
            for part in raw.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                if let Some((key, value)) = part.split_once('=') {
                    if let Ok(v) = value.trim().parse::<u64>() {
                        map.insert(key.trim().to_string(), v);
                    }
                }
            }
        }
        map
    })
}

/// Effective value of a guard after any environment override.
pub fn value(guard: Guard) -> u64 {
    overrides().get(guard.0).copied().unwrap_or(guard.1)
}

/// Errors with [`Error::Guard`] when `needed` exceeds the guard.
pub fn check(guard: Guard, needed: u64) -> Result<()> {
    let limit = value(guard);
    if needed <= limit {
        Ok(())
    } else {
        Err(Error::Guard {
            name: guard.0,
            limit,
            needed,
        })
    }
}
