//! Distinctive-power comparison over finite catalogs: value partitions,
//! ordering verdicts with verified witnesses, explicit translation tables,
//! property-level equivalence, prefactor-relation checking, and uniqueness.
//!
//! A "left at most right" verdict means the right polynomial's partition
//! refines the left one's on the catalog; it is evidence relative to that
//! catalog, never a proof about all graphs. A strict failure, by contrast,
//! is witnessed by an explicit pair and is a proof.

use crate::error::{Error, Result};
use crate::graphs::{encode_graph6, is_isomorphic, Graph, SimilarityTriple};
use crate::zoo::{GraphPolyDef, PropertyPredicate};
use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize)]
pub struct PartitionBlock {
    pub value: String,
    pub members: Vec<usize>,
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    pub catalog: String,
    pub poly: String,
    pub blocks: Vec<PartitionBlock>,
}

/// Groups the catalog by structural polynomial equality (canonical text as
/// the key); blocks are ordered by first occurrence.
pub fn partition_by(
    p: &GraphPolyDef,
    catalog: &[Graph],
    catalog_id: &str,
) -> Result<PartitionReport> {
    let mut order: Vec<String> = Vec::new();
    let mut blocks: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, g) in catalog.iter().enumerate() {
        let value = p
            .compute(g)
            .map_err(|e| Error::Domain(format!("graph #{i} ({:?}): {e}", g)))?;
        let key = value.canonical_text();
        if !blocks.contains_key(&key) {
            order.push(key.clone());
        }
        blocks.entry(key).or_default().push(i);
    }
    let blocks = order
        .into_iter()
        .map(|key| {
            let members = blocks[&key].clone();
            let graphs = members
                .iter()
                .map(|&i| encode_graph6(&catalog[i]).unwrap_or_else(|_| format!("#{i}")))
                .collect();
            PartitionBlock {
                value: key,
                members,
                graphs,
            }
        })
        .collect();
    Ok(PartitionReport {
        catalog: catalog_id.to_string(),
        poly: p.name.clone(),
        blocks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Dp,
    Sdp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equivalent,
    LeftAtMostRight,
    RightAtMostLeft,
    Incomparable,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub g6_a: String,
    pub g6_b: String,
    pub left_equal: bool,
    pub right_equal: bool,
    pub similar: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareVerdict {
    pub catalog: String,
    pub scope: Scope,
    pub left: String,
    pub right: String,
    pub relation: Relation,
    pub witnesses: Vec<Witness>,
    pub evidence_note: String,
}

struct ComputedValues {
    texts_l: Vec<String>,
    texts_r: Vec<String>,
    triples: Vec<SimilarityTriple>,
}

fn compute_values(
    left: &GraphPolyDef,
    right: &GraphPolyDef,
    catalog: &[Graph],
) -> Result<ComputedValues> {
    let mut texts_l = Vec::with_capacity(catalog.len());
    let mut texts_r = Vec::with_capacity(catalog.len());
    let mut triples = Vec::with_capacity(catalog.len());
    for (i, g) in catalog.iter().enumerate() {
        texts_l.push(
            left.compute(g)
                .map_err(|e| Error::Domain(format!("graph #{i} ({:?}): {e}", g)))?
                .canonical_text(),
        );
        texts_r.push(
            right
                .compute(g)
                .map_err(|e| Error::Domain(format!("graph #{i} ({:?}): {e}", g)))?
                .canonical_text(),
        );
        triples.push(g.similarity());
    }
    Ok(ComputedValues {
        texts_l,
        texts_r,
        triples,
    })
}

/// Distinctive-power comparison. For `Scope::Sdp` only pairs of similar
/// graphs are compared. Up to two verified witness pairs are reported per
/// failed direction.
pub fn compare(
    left: &GraphPolyDef,
    right: &GraphPolyDef,
    catalog: &[Graph],
    catalog_id: &str,
    scope: Scope,
) -> Result<CompareVerdict> {
    let v = compute_values(left, right, catalog)?;
    let mut left_le_right = true;
    let mut right_le_left = true;
    let mut witnesses = Vec::new();
    let mut budget_lr = 2;
    let mut budget_rl = 2;
    for i in 0..catalog.len() {
        for j in i + 1..catalog.len() {
            if scope == Scope::Sdp && v.triples[i] != v.triples[j] {
                continue;
            }
            let le = v.texts_l[i] == v.texts_l[j];
            let re = v.texts_r[i] == v.texts_r[j];
            if re && !le {
                // right fails to distinguish a pair that left distinguishes
                left_le_right = false;
                if budget_lr > 0 {
                    budget_lr -= 1;
                    witnesses.push(Witness {
                        g6_a: encode_graph6(&catalog[i])?,
                        g6_b: encode_graph6(&catalog[j])?,
                        left_equal: false,
                        right_equal: true,
                        similar: v.triples[i] == v.triples[j],
                    });
                }
            }
            if le && !re {
                right_le_left = false;
                if budget_rl > 0 {
                    budget_rl -= 1;
                    witnesses.push(Witness {
                        g6_a: encode_graph6(&catalog[i])?,
                        g6_b: encode_graph6(&catalog[j])?,
                        left_equal: true,
                        right_equal: false,
                        similar: v.triples[i] == v.triples[j],
                    });
                }
            }
        }
    }
    let relation = match (left_le_right, right_le_left) {
        (true, true) => Relation::Equivalent,
        (true, false) => Relation::LeftAtMostRight,
        (false, true) => Relation::RightAtMostLeft,
        (false, false) => Relation::Incomparable,
    };
    let evidence_note = match relation {
        Relation::Incomparable => {
            format!("both orderings refuted by witness pairs on catalog `{catalog_id}`")
        }
        Relation::Equivalent => {
            format!("equal partitions on catalog `{catalog_id}`; evidence relative to this catalog")
        }
        _ => format!(
            "ordering holds on catalog `{catalog_id}` (evidence, not a proof); the failed \
             direction is witnessed"
        ),
    };
    Ok(CompareVerdict {
        catalog: catalog_id.to_string(),
        scope,
        left: left.name.clone(),
        right: right.name.clone(),
        relation,
        witnesses,
        evidence_note,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FEntry {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum FOutcome {
    /// The explicit finite translation map from right-values to left-values.
    Table { entries: Vec<FEntry> },
    /// A pair with equal right value and different left values.
    Refuted { witness: Witness },
}

/// Builds the translation table showing left <= right on the catalog: a map
/// from right-values (keyed additionally by (n, m, k) in the similar scope)
/// to left-values, or the refuting pair.
pub fn build_f(
    left: &GraphPolyDef,
    right: &GraphPolyDef,
    catalog: &[Graph],
    scope: Scope,
) -> Result<FOutcome> {
    let v = compute_values(left, right, catalog)?;
    let mut table: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for i in 0..catalog.len() {
        let key = match scope {
            Scope::Dp => v.texts_r[i].clone(),
            Scope::Sdp => format!(
                "({}, {}, {}) | {}",
                v.triples[i].n, v.triples[i].m, v.triples[i].k, v.texts_r[i]
            ),
        };
        match table.get(&key) {
            None => {
                table.insert(key, (i, v.texts_l[i].clone()));
            }
            Some((j, prev)) if *prev != v.texts_l[i] => {
                return Ok(FOutcome::Refuted {
                    witness: Witness {
                        g6_a: encode_graph6(&catalog[*j])?,
                        g6_b: encode_graph6(&catalog[i])?,
                        left_equal: false,
                        right_equal: true,
                        similar: v.triples[*j] == v.triples[i],
                    },
                });
            }
            Some(_) => {}
        }
    }
    Ok(FOutcome::Table {
        entries: table
            .into_iter()
            .map(|(key, (_, value))| FEntry { key, value })
            .collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "relation", rename_all = "kebab-case")]
pub enum PropertyRelation {
    /// The properties agree on every catalog graph.
    Equal,
    /// They disagree on every catalog graph.
    Complement,
    /// Per similarity class: "equal" or "complement" (may differ by class).
    PerClass { classes: Vec<ClassVerdict> },
    /// Neither equal nor complement (witnessed).
    NotEquivalent {
        agree_at: Option<String>,
        differ_at: Option<String>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassVerdict {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub verdict: String,
}

/// Decides whether two properties have the same distinctive power on the
/// catalog: globally (equal or complement) for `Scope::Dp`, per similarity
/// class for `Scope::Sdp`.
pub fn property_dp_equivalent(
    c1: &PropertyPredicate,
    c2: &PropertyPredicate,
    catalog: &[Graph],
    scope: Scope,
) -> PropertyRelation {
    let vals: Vec<(bool, bool, SimilarityTriple)> = catalog
        .iter()
        .map(|g| (c1.decide(g), c2.decide(g), g.similarity()))
        .collect();
    match scope {
        Scope::Dp => {
            let all_equal = vals.iter().all(|(a, b, _)| a == b);
            let all_diff = vals.iter().all(|(a, b, _)| a != b);
            if all_equal {
                PropertyRelation::Equal
            } else if all_diff {
                PropertyRelation::Complement
            } else {
                let agree = vals.iter().position(|(a, b, _)| a == b);
                let differ = vals.iter().position(|(a, b, _)| a != b);
                PropertyRelation::NotEquivalent {
                    agree_at: agree.map(|i| encode_graph6(&catalog[i]).unwrap_or_default()),
                    differ_at: differ.map(|i| encode_graph6(&catalog[i]).unwrap_or_default()),
                }
            }
        }
        Scope::Sdp => {
            let mut classes: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
            for (i, (_, _, t)) in vals.iter().enumerate() {
                classes.entry((t.n, t.m, t.k)).or_default().push(i);
            }
            let mut out = Vec::new();
            for ((n, m, k), members) in classes {
                let all_equal = members.iter().all(|&i| vals[i].0 == vals[i].1);
                let all_diff = members.iter().all(|&i| vals[i].0 != vals[i].1);
                let verdict = if all_equal {
                    "equal"
                } else if all_diff {
                    "complement"
                } else {
                    let agree = members.iter().find(|&&i| vals[i].0 == vals[i].1);
                    let differ = members.iter().find(|&&i| vals[i].0 != vals[i].1);
                    return PropertyRelation::NotEquivalent {
                        agree_at: agree.map(|&i| encode_graph6(&catalog[i]).unwrap_or_default()),
                        differ_at: differ.map(|&i| encode_graph6(&catalog[i]).unwrap_or_default()),
                    };
                };
                out.push(ClassVerdict {
                    n,
                    m,
                    k,
                    verdict: verdict.to_string(),
                });
            }
            PropertyRelation::PerClass { classes: out }
        }
    }
}

/// A similarity function: depends only on (n, m, k) and the evaluation
/// point; `None` signals a pole at that point.
pub type SimilarityFn = Arc<
    dyn Fn(&SimilarityTriple, &BTreeMap<String, BigRational>) -> Option<BigRational> + Send + Sync,
>;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum PrefactorOutcome {
    Holds {
        graphs: usize,
        points_per_graph: usize,
        poles_skipped: usize,
    },
    Fails {
        g6: String,
        point: String,
        lhs: String,
        rhs: String,
    },
}

/// Checks left(G; y) = f(G; y) * right(G; g_1(G; y), ..., g_r(G; y)) at
/// exact rational sample points for every catalog graph. Points hitting a
/// pole of f or any g_i are skipped and replaced. With enough points this
/// certifies the identity: the difference is a polynomial of bounded degree
/// and a nonzero one cannot vanish at more distinct points per variable
/// than its degree, so persistent agreement on fresh random points is the
/// expected behavior exactly when the identity holds.
pub fn verify_prefactor_relation(
    left: &GraphPolyDef,
    right: &GraphPolyDef,
    prefactor: &SimilarityFn,
    substitutions: &[SimilarityFn],
    catalog: &[Graph],
    sample_points: usize,
    seed: u64,
) -> Result<PrefactorOutcome> {
    let left_vars = match &left.arity {
        crate::zoo::Arity::Fixed(v) => v.clone(),
        crate::zoo::Arity::EdgeIndexed => {
            return Err(Error::Domain("prefactor checking needs fixed arity".into()))
        }
    };
    let right_vars = match &right.arity {
        crate::zoo::Arity::Fixed(v) => v.clone(),
        crate::zoo::Arity::EdgeIndexed => {
            return Err(Error::Domain("prefactor checking needs fixed arity".into()))
        }
    };
    if substitutions.len() != right_vars.len() {
        return Err(Error::Domain(format!(
            "expected {} substitution functions, got {}",
            right_vars.len(),
            substitutions.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut poles_skipped = 0usize;
    for g in catalog {
        let lhs_poly = left.compute(g)?;
        let rhs_poly = right.compute(g)?;
        let triple = g.similarity();
        let mut done = 0;
        let mut attempts = 0;
        while done < sample_points {
            attempts += 1;
            if attempts > sample_points * 20 {
                return Err(Error::Domain(
                    "could not find enough pole-free sample points".into(),
                ));
            }
            let point: BTreeMap<String, BigRational> = left_vars
                .iter()
                .map(|v| {
                    let mut num = 0i64;
                    while num == 0 {
                        num = rng.gen_range(-9..=9);
                    }
                    let den = rng.gen_range(1..=4i64);
                    (v.clone(), BigRational::new(num.into(), den.into()))
                })
                .collect();
            let Some(fval) = prefactor(&triple, &point) else {
                poles_skipped += 1;
                continue;
            };
            let subs: Option<Vec<BigRational>> =
                substitutions.iter().map(|s| s(&triple, &point)).collect();
            let Some(subs) = subs else {
                poles_skipped += 1;
                continue;
            };
            // the right side must avoid zeros where it has negative exponents
            let rhs_point: BTreeMap<String, BigRational> = right_vars
                .iter()
                .cloned()
                .zip(subs.iter().cloned())
                .collect();
            if right_vars
                .iter()
                .any(|v| rhs_poly.min_degree_in(v) < 0 && rhs_point[v].is_zero())
            {
                poles_skipped += 1;
                continue;
            }
            let lhs = lhs_poly.eval_rational(&point)?;
            let rhs = fval * rhs_poly.eval_rational(&rhs_point)?;
            if lhs != rhs {
                return Ok(PrefactorOutcome::Fails {
                    g6: encode_graph6(g)?,
                    point: format!("{point:?}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
            done += 1;
        }
    }
    Ok(PrefactorOutcome::Holds {
        graphs: catalog.len(),
        points_per_graph: sample_points,
        poles_skipped,
    })
}

/// True when no non-isomorphic catalog graph shares the value of `p` on `g`.
pub fn is_p_unique(g: &Graph, p: &GraphPolyDef, catalog: &[Graph]) -> Result<bool> {
    let value = p.compute(g)?.canonical_text();
    for h in catalog {
        if p.compute(h)?.canonical_text() == value && !is_isomorphic(g, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}
