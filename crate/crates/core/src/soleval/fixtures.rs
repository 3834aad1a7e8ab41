//! Shipped term programs with their independent reference implementations.
//! The `.sol` sources live in the repository `fixtures/` directory and are
//! embedded here so the library and the CLI agree on them.

use super::ast::Term;
use super::parser::parse_term;
use crate::error::Result;
use crate::graphs::Graph;
use crate::polys::MultiPoly;
use crate::zoo;
use std::sync::Arc;

pub type Reference = Arc<dyn Fn(&Graph) -> Result<MultiPoly> + Send + Sync>;

#[derive(Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub source: &'static str,
    /// Largest vertex count the fixture's quantifier structure supports
    /// under the default relation-quantifier guard.
    pub max_n: usize,
    pub reference: Reference,
}

impl Fixture {
    pub fn parse(&self) -> Result<Term> {
        parse_term(self.source)
    }
}

pub const ORDER: &str = include_str!("../../../../fixtures/order.sol");
pub const COMPONENT_COUNT: &str = include_str!("../../../../fixtures/component_count.sol");
pub const XK: &str = include_str!("../../../../fixtures/xk.sol");
pub const CLIQUE_COUNT: &str = include_str!("../../../../fixtures/clique_count.sol");
pub const CLIQUE_COUNT_ALT: &str = include_str!("../../../../fixtures/clique_count_alt.sol");
pub const MAXIMAL_CLIQUE_COUNT: &str =
    include_str!("../../../../fixtures/maximal_clique_count.sol");
pub const MAXIMUM_CLIQUE_COUNT: &str =
    include_str!("../../../../fixtures/maximum_clique_count.sol");
pub const CLIQUE_POLY: &str = include_str!("../../../../fixtures/clique_poly.sol");
pub const INDEPENDENCE: &str = include_str!("../../../../fixtures/independence.sol");
pub const INDEPENDENCE_ALT: &str = include_str!("../../../../fixtures/independence_alt.sol");
pub const POTTS: &str = include_str!("../../../../fixtures/potts.sol");
pub const CHAR_SPLIT: &str = include_str!("../../../../fixtures/char_split.sol");
pub const ORDER_DEPENDENT: &str = include_str!("../../../../fixtures/order_dependent.sol");

fn is_clique_mask(g: &Graph, mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbors_mask(v) & mask != mask & !(1 << v) {
            return false;
        }
    }
    true
}

fn count_cliques(g: &Graph) -> u64 {
    (0u64..(1 << g.n()))
        .filter(|&m| is_clique_mask(g, m))
        .count() as u64
}

fn count_maximal_cliques(g: &Graph) -> u64 {
    (0u64..(1 << g.n()))
        .filter(|&m| {
            is_clique_mask(g, m)
                && (0..g.n()).all(|w| (m >> w) & 1 == 1 || !is_clique_mask(g, m | (1 << w)))
        })
        .count() as u64
}

fn count_maximum_cliques(g: &Graph) -> u64 {
    let sizes: Vec<u32> = (0u64..(1 << g.n()))
        .filter(|&m| is_clique_mask(g, m))
        .map(|m| m.count_ones())
        .collect();
    let best = sizes.iter().copied().max().unwrap_or(0);
    sizes.iter().filter(|&&s| s == best).count() as u64
}

fn constant(v: u64) -> MultiPoly {
    MultiPoly::from_int(v as i64)
}

/// The ten shipped fixtures paired with independent references.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "order",
            source: ORDER,
            max_n: 5,
            reference: Arc::new(|g| Ok(constant(g.n() as u64))),
        },
        Fixture {
            name: "component-count",
            source: COMPONENT_COUNT,
            max_n: 5,
            reference: Arc::new(|g| Ok(constant(g.num_components() as u64))),
        },
        Fixture {
            name: "xk",
            source: XK,
            max_n: 5,
            reference: Arc::new(|g| {
                Ok(MultiPoly::monomial(
                    &[("X", g.num_components() as i32)],
                    num::BigRational::from_integer(1.into()),
                ))
            }),
        },
        Fixture {
            name: "clique-count",
            source: CLIQUE_COUNT,
            max_n: 5,
            reference: Arc::new(|g| Ok(constant(count_cliques(g)))),
        },
        Fixture {
            name: "maximal-clique-count",
            source: MAXIMAL_CLIQUE_COUNT,
            max_n: 5,
            reference: Arc::new(|g| Ok(constant(count_maximal_cliques(g)))),
        },
        Fixture {
            name: "maximum-clique-count",
            source: MAXIMUM_CLIQUE_COUNT,
            // the size-comparison gadget quantifies over binary relations
            max_n: 4,
            reference: Arc::new(|g| Ok(constant(count_maximum_cliques(g)))),
        },
        Fixture {
            name: "clique-poly",
            source: CLIQUE_POLY,
            max_n: 5,
            reference: Arc::new(zoo::clique_poly),
        },
        Fixture {
            name: "independence",
            source: INDEPENDENCE,
            max_n: 5,
            reference: Arc::new(zoo::independence),
        },
        Fixture {
            name: "potts",
            source: POTTS,
            max_n: 5,
            reference: Arc::new(zoo::potts),
        },
        Fixture {
            name: "char-split",
            source: CHAR_SPLIT,
            // permutations are unrestricted binary relations
            max_n: 4,
            reference: Arc::new(zoo::char_poly_adjacency),
        },
    ]
}

pub fn fixture_by_name(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

/// Syntactically different, logically equivalent guard pairs; the evaluated
/// polynomials must be structurally identical.
pub struct EquivalencePair {
    pub name: &'static str,
    pub left: &'static str,
    pub right: &'static str,
    pub max_n: usize,
}

pub fn equivalence_pairs() -> Vec<EquivalencePair> {
    vec![
        EquivalencePair {
            name: "independence-guards",
            left: INDEPENDENCE,
            right: INDEPENDENCE_ALT,
            max_n: 5,
        },
        EquivalencePair {
            name: "clique-count-guards",
            left: CLIQUE_COUNT,
            right: CLIQUE_COUNT_ALT,
            max_n: 5,
        },
    ]
}
