//! The graph polynomial zoo: named polynomials plus the three defining
//! frameworks (generating functions of induced/spanning subgraphs and of
//! relations, coloring-partition polynomials, determinant polynomials),
//! each packaged as a [`GraphPolyDef`].

pub mod determinant;
pub mod harary;
pub mod subsets;
pub mod tutte;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::polys::MultiPoly;
use std::sync::Arc;

pub use determinant::{char_poly_adjacency, laplacian_char, laplacian_det_form};
pub use harary::{harary_partition_counts, harary_poly, mcp_partition_counts, mcp_poly};
pub use subsets::{
    chromatic, chromatic_complement, clique_poly, domination, gen_ind, gen_ind_weighted, gen_rel,
    gen_span, independence, matching_bivar, matching_counts, matching_defect, matching_gen, potts,
    spanning_tree_poly,
};
pub use tutte::{tutte, universal_tutte};

/// Indeterminate scheme of a graph polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arity {
    /// Fixed indeterminate names shared by all graphs.
    Fixed(Vec<String>),
    /// One indeterminate per edge (names depend on the graph).
    EdgeIndexed,
}

impl Arity {
    pub fn fixed(names: &[&str]) -> Arity {
        Arity::Fixed(names.iter().map(|s| s.to_string()).collect())
    }
}

pub type ComputeFn = Arc<dyn Fn(&Graph) -> Result<MultiPoly> + Send + Sync>;

/// A named graph polynomial: a pure computable map Graph -> MultiPoly.
/// Guards are enforced inside the compute closures.
#[derive(Clone)]
pub struct GraphPolyDef {
    pub name: String,
    pub arity: Arity,
    compute: ComputeFn,
}

impl GraphPolyDef {
    pub fn new(
        name: impl Into<String>,
        arity: Arity,
        compute: impl Fn(&Graph) -> Result<MultiPoly> + Send + Sync + 'static,
    ) -> GraphPolyDef {
        GraphPolyDef {
            name: name.into(),
            arity,
            compute: Arc::new(compute),
        }
    }

    pub fn compute(&self, g: &Graph) -> Result<MultiPoly> {
        (self.compute)(g)
    }
}

impl std::fmt::Debug for GraphPolyDef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GraphPolyDef({})", self.name)
    }
}

/// An isomorphism-invariant boolean graph property.
#[derive(Clone)]
pub struct PropertyPredicate {
    pub name: String,
    pub closed_under_isolated_vertices: bool,
    decide: Arc<dyn Fn(&Graph) -> bool + Send + Sync>,
}

impl PropertyPredicate {
    pub fn new(
        name: impl Into<String>,
        closed_under_isolated_vertices: bool,
        decide: impl Fn(&Graph) -> bool + Send + Sync + 'static,
    ) -> PropertyPredicate {
        PropertyPredicate {
            name: name.into(),
            closed_under_isolated_vertices,
            decide: Arc::new(decide),
        }
    }

    pub fn decide(&self, g: &Graph) -> bool {
        (self.decide)(g)
    }

    pub fn complement(&self) -> PropertyPredicate {
        let inner = self.decide.clone();
        PropertyPredicate {
            name: format!("not-{}", self.name),
            closed_under_isolated_vertices: self.closed_under_isolated_vertices,
            decide: Arc::new(move |g| !inner(g)),
        }
    }
}

impl std::fmt::Debug for PropertyPredicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PropertyPredicate({})", self.name)
    }
}

// ---------------------------------------------------------------------------
// property registry
// ---------------------------------------------------------------------------

/// Looks up a property by its registered name. Parametrized names:
/// `cycle-<i>`, `cycle-union-<i>`; `not-<name>` complements recursively.
pub fn property_by_name(name: &str) -> Result<PropertyPredicate> {
    if let Some(rest) = name.strip_prefix("not-") {
        return Ok(property_by_name(rest)?.complement());
    }
    if let Some(i) = name.strip_prefix("cycle-union-") {
        let i: usize = i
            .parse()
            .map_err(|_| Error::Parse(format!("bad property `{name}`")))?;
        return Ok(cycle_union_property(i));
    }
    if let Some(i) = name.strip_prefix("cycle-") {
        let i: usize = i
            .parse()
            .map_err(|_| Error::Parse(format!("bad property `{name}`")))?;
        return Ok(cycle_property(i));
    }
    match name {
        "all" => Ok(PropertyPredicate::new("all", true, |_| true)),
        "none" => Ok(PropertyPredicate::new("none", true, |_| false)),
        "edgeless" => Ok(PropertyPredicate::new("edgeless", true, |g| {
            g.num_edges() == 0
        })),
        "connected" => Ok(PropertyPredicate::new("connected", false, |g| {
            g.n() >= 1 && g.is_connected()
        })),
        "disconnected" => Ok(PropertyPredicate::new("disconnected", false, |g| {
            !(g.n() >= 1 && g.is_connected())
        })),
        "clique" | "complete" => Ok(PropertyPredicate::new(name, false, |g| g.is_clique())),
        "forest" => Ok(PropertyPredicate::new("forest", true, |g| g.is_forest())),
        "triangle-free" => Ok(PropertyPredicate::new("triangle-free", true, |g| {
            g.is_triangle_free()
        })),
        "k1" => Ok(PropertyPredicate::new("k1", false, |g| {
            g.n() == 1 && g.num_edges() == 0
        })),
        "k2-e2" => Ok(PropertyPredicate::new("k2-e2", false, |g| g.n() == 2)),
        "k1-k2-e2" => Ok(PropertyPredicate::new("k1-k2-e2", false, |g| {
            g.n() == 1 || g.n() == 2
        })),
        // disjoint unions of isolated vertices and isolated edges
        "matching" => Ok(PropertyPredicate::new("matching", true, |g| {
            (0..g.n()).all(|v| g.degree(v) <= 1)
        })),
        // one connected component carrying all edges, plus isolated vertices
        "mcp-internal" => Ok(PropertyPredicate::new("mcp-internal", true, |g| {
            g.n() >= 1 && nontrivial_components(g) <= 1
        })),
        other => Err(Error::Parse(format!("unknown property `{other}`"))),
    }
}

fn nontrivial_components(g: &Graph) -> usize {
    let mut seen = 0u64;
    let mut count = 0;
    for v in 0..g.n() {
        if (seen >> v) & 1 == 1 || g.degree(v) == 0 {
            continue;
        }
        let comp = g.component_of(v);
        seen |= comp;
        count += 1;
    }
    count
}

/// The singleton property {C_i}: graphs isomorphic to the i-cycle.
pub fn cycle_property(i: usize) -> PropertyPredicate {
    PropertyPredicate::new(format!("cycle-{i}"), false, move |g| {
        g.n() == i && i >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
    })
}

/// {C_i disjoint-union E_j : j >= 0}: an i-cycle plus isolated vertices.
pub fn cycle_union_property(i: usize) -> PropertyPredicate {
    PropertyPredicate::new(format!("cycle-union-{i}"), true, move |g| {
        if i < 3 {
            return false;
        }
        let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
        active.len() == i
            && g.num_edges() == i
            && active.iter().all(|&v| g.degree(v) == 2)
            && nontrivial_components(g) == 1
    })
}

// ---------------------------------------------------------------------------
// polynomial registry
// ---------------------------------------------------------------------------

pub fn poly_names() -> Vec<&'static str> {
    vec![
        "chromatic",
        "chromatic-complement",
        "potts",
        "tutte",
        "universal-tutte",
        "matching-gen",
        "matching-defect",
        "matching-bivar",
        "independence",
        "clique",
        "domination",
        "char-adjacency",
        "laplacian-char",
        "laplacian-det",
        "spanning-tree",
        "mcp",
        "gen-ind:<property>",
        "gen-span:<property>",
        "gen-rel:dominating",
        "harary:<property>",
    ]
}

/// Resolves a polynomial name (with optional `:<property>` parameter) to its
/// definition.
pub fn resolve_poly(name: &str) -> Result<GraphPolyDef> {
    if let Some(prop) = name.strip_prefix("gen-ind:") {
        return Ok(gen_ind_def(property_by_name(prop)?));
    }
    if let Some(prop) = name.strip_prefix("gen-span:") {
        return Ok(gen_span_def(property_by_name(prop)?));
    }
    if let Some(prop) = name.strip_prefix("harary:") {
        return Ok(harary_def(property_by_name(prop)?));
    }
    if name == "gen-rel:dominating" {
        return Ok(gen_rel_dominating_def());
    }
    match name {
        "chromatic" => Ok(GraphPolyDef::new(
            "chromatic",
            Arity::fixed(&["X"]),
            chromatic,
        )),
        "chromatic-complement" => Ok(GraphPolyDef::new(
            "chromatic-complement",
            Arity::fixed(&["X"]),
            chromatic_complement,
        )),
        "potts" => Ok(GraphPolyDef::new("potts", Arity::fixed(&["X", "Y"]), potts)),
        "tutte" => Ok(GraphPolyDef::new("tutte", Arity::fixed(&["X", "Y"]), tutte)),
        "universal-tutte" => Ok(GraphPolyDef::new(
            "universal-tutte",
            Arity::fixed(&["U", "V", "W", "X", "Y"]),
            universal_tutte,
        )),
        "matching-gen" => Ok(GraphPolyDef::new(
            "matching-gen",
            Arity::fixed(&["X"]),
            matching_gen,
        )),
        "matching-defect" => Ok(GraphPolyDef::new(
            "matching-defect",
            Arity::fixed(&["X"]),
            matching_defect,
        )),
        "matching-bivar" => Ok(GraphPolyDef::new(
            "matching-bivar",
            Arity::fixed(&["X", "Y"]),
            matching_bivar,
        )),
        "independence" => Ok(GraphPolyDef::new(
            "independence",
            Arity::fixed(&["X"]),
            independence,
        )),
        "clique" => Ok(GraphPolyDef::new(
            "clique",
            Arity::fixed(&["X"]),
            clique_poly,
        )),
        "domination" => Ok(GraphPolyDef::new(
            "domination",
            Arity::fixed(&["X"]),
            domination,
        )),
        "char-adjacency" => Ok(GraphPolyDef::new(
            "char-adjacency",
            Arity::fixed(&["X"]),
            char_poly_adjacency,
        )),
        "laplacian-char" => Ok(GraphPolyDef::new(
            "laplacian-char",
            Arity::fixed(&["X"]),
            laplacian_char,
        )),
        "laplacian-det" => Ok(GraphPolyDef::new(
            "laplacian-det",
            Arity::fixed(&["X"]),
            laplacian_det_form,
        )),
        "spanning-tree" => Ok(GraphPolyDef::new(
            "spanning-tree",
            Arity::EdgeIndexed,
            spanning_tree_poly,
        )),
        "mcp" => Ok(GraphPolyDef::new("mcp", Arity::fixed(&["X"]), mcp_poly)),
        other => Err(Error::Parse(format!("unknown polynomial `{other}`"))),
    }
}

pub fn gen_ind_def(prop: PropertyPredicate) -> GraphPolyDef {
    let name = format!("gen-ind:{}", prop.name);
    GraphPolyDef::new(name, Arity::fixed(&["X"]), move |g| gen_ind(&prop, g))
}

pub fn gen_span_def(prop: PropertyPredicate) -> GraphPolyDef {
    let name = format!("gen-span:{}", prop.name);
    GraphPolyDef::new(name, Arity::fixed(&["X"]), move |g| gen_span(&prop, g))
}

pub fn harary_def(prop: PropertyPredicate) -> GraphPolyDef {
    let name = format!("harary:{}", prop.name);
    GraphPolyDef::new(name, Arity::fixed(&["X"]), move |g| harary_poly(&prop, g))
}

/// The dominating-set polynomial written as a relation generating function
/// (arity-1 relations A with "A dominates G").
pub fn gen_rel_dominating_def() -> GraphPolyDef {
    GraphPolyDef::new("gen-rel:dominating", Arity::fixed(&["X"]), move |g| {
        gen_rel(
            &|g: &Graph, tuples: &[Vec<usize>]| {
                let mut covered = 0u64;
                for t in tuples {
                    let v = t[0];
                    covered |= g.neighbors_mask(v) | (1 << v);
                }
                let full = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
                covered == full
            },
            1,
            g,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{catalog_up_to, is_isomorphic};
    use rand::{Rng, SeedableRng};

    #[test]
    fn registry_resolves() {
        for name in [
            "chromatic",
            "potts",
            "tutte",
            "universal-tutte",
            "matching-gen",
            "matching-defect",
            "matching-bivar",
            "independence",
            "clique",
            "domination",
            "char-adjacency",
            "laplacian-char",
            "laplacian-det",
            "spanning-tree",
            "mcp",
            "chromatic-complement",
            "gen-ind:forest",
            "gen-span:matching",
            "gen-rel:dominating",
            "harary:connected",
            "gen-ind:not-cycle-4",
        ] {
            assert!(resolve_poly(name).is_ok(), "{name}");
        }
        assert!(resolve_poly("nonsense").is_err());
        assert!(property_by_name("cycle-x").is_err());
    }

    #[test]
    fn isomorphism_invariance_spot_checks() {
        // fixed-arity polynomials take equal values on isomorphic pairs
        let defs: Vec<GraphPolyDef> = [
            "chromatic",
            "potts",
            "tutte",
            "matching-defect",
            "independence",
            "domination",
            "char-adjacency",
            "laplacian-det",
            "harary:connected",
            "gen-ind:forest",
        ]
        .iter()
        .map(|n| resolve_poly(n).unwrap())
        .collect();
        let catalog = catalog_up_to(5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in catalog.iter().filter(|g| g.n() >= 2).take(25) {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for i in (1..perm.len()).rev() {
                let j = rng.gen_range(0..=i);
                perm.swap(i, j);
            }
            let h = g.apply_permutation(&perm);
            assert!(is_isomorphic(g, &h).unwrap());
            for def in &defs {
                assert_eq!(
                    def.compute(g).unwrap(),
                    def.compute(&h).unwrap(),
                    "{} not invariant on {:?}",
                    def.name,
                    g
                );
            }
        }
    }
}
