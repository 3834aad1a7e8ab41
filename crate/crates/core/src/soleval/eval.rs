//! Tarskian evaluation of formulas and polynomial terms over a finite graph
//! with its numeric vertex order.
//!
//! Relation quantifiers and big sums enumerate relation candidates as bit
//! masks over tuple ranks. When the body contains a syntactic bound of the
//! form `all v1..vk. (R(v1,..,vk) -> psi)` with psi independent of R, the
//! enumeration is restricted to submasks of {tuples satisfying psi}: any
//! relation outside that set falsifies the bound, so the restriction is
//! exact, and it keeps the candidate count honest for sparse bounds.

use super::ast::{Formula, Term, VTerm};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards;
use crate::polys::MultiPoly;
use std::collections::BTreeMap;

/// A graph together with interpreted parameters for free symbols.
#[derive(Debug, Clone)]
pub struct Structure {
    pub graph: Graph,
    pub env: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Vertex(usize),
    Relation {
        arity: usize,
        tuples: Vec<Vec<usize>>,
    },
}

impl Structure {
    pub fn plain(graph: Graph) -> Structure {
        Structure {
            graph,
            env: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Copy)]
struct Rel {
    arity: usize,
    mask: u128,
}

struct Ctx<'a> {
    g: &'a Graph,
    n: usize,
    vars: Vec<(&'a str, usize)>,
    rels: Vec<(&'a str, Rel)>,
}

fn tuple_space(n: usize, arity: usize) -> Result<u32> {
    let mut space: u128 = 1;
    for _ in 0..arity {
        space = space
            .checked_mul(n as u128)
            .ok_or_else(|| Error::Domain("relation tuple space overflow".into()))?;
    }
    if space > 127 {
        return Err(Error::Domain(format!(
            "relation tuple space {space} exceeds the 128-bit mask"
        )));
    }
    Ok(space as u32)
}

fn rank(tuple: &[usize], n: usize) -> u32 {
    let mut r = 0u32;
    for &t in tuple.iter().rev() {
        r = r * n as u32 + t as u32;
    }
    r
}

impl<'a> Ctx<'a> {
    fn from_structure(s: &'a Structure) -> Result<Ctx<'a>> {
        let n = s.graph.n();
        let mut vars = Vec::new();
        let mut rels = Vec::new();
        for (name, value) in &s.env {
            match value {
                Value::Vertex(v) => {
                    if *v >= n {
                        return Err(Error::Domain(format!(
                            "parameter `{name}` = {v} is out of range"
                        )));
                    }
                    vars.push((name.as_str(), *v));
                }
                Value::Relation { arity, tuples } => {
                    let space = tuple_space(n, *arity)?;
                    let mut mask = 0u128;
                    for t in tuples {
                        if t.len() != *arity {
                            return Err(Error::Domain(format!(
                                "parameter `{name}`: tuple arity mismatch"
                            )));
                        }
                        if t.iter().any(|&x| x >= n) {
                            return Err(Error::Domain(format!(
                                "parameter `{name}`: vertex out of range"
                            )));
                        }
                        let r = rank(t, n);
                        debug_assert!(r < space);
                        mask |= 1u128 << r;
                    }
                    rels.push((
                        name.as_str(),
                        Rel {
                            arity: *arity,
                            mask,
                        },
                    ));
                }
            }
        }
        Ok(Ctx {
            g: &s.graph,
            n,
            vars,
            rels,
        })
    }

    fn resolve(&self, t: &VTerm) -> Result<usize> {
        match t {
            VTerm::Const(c) => {
                if *c < self.n {
                    Ok(*c)
                } else {
                    Err(Error::Domain(format!(
                        "vertex constant {c} out of range for n = {}",
                        self.n
                    )))
                }
            }
            VTerm::Var(v) => self
                .vars
                .iter()
                .rev()
                .find(|(name, _)| *name == v)
                .map(|(_, val)| *val)
                .ok_or_else(|| Error::Domain(format!("unbound variable `{v}`"))),
        }
    }

    fn rel(&self, name: &str) -> Result<Rel> {
        self.rels
            .iter()
            .rev()
            .find(|(r, _)| *r == name)
            .map(|(_, rel)| *rel)
            .ok_or_else(|| Error::Domain(format!("unbound relation `{name}`")))
    }
}

fn eval_f<'a>(ctx: &mut Ctx<'a>, f: &'a Formula) -> Result<bool> {
    match f {
        Formula::True => Ok(true),
        Formula::False => Ok(false),
        Formula::Edge(a, b) => {
            let (u, v) = (ctx.resolve(a)?, ctx.resolve(b)?);
            Ok(ctx.g.has_edge(u, v))
        }
        Formula::Eq(a, b) => Ok(ctx.resolve(a)? == ctx.resolve(b)?),
        Formula::Lt(a, b) => Ok(ctx.resolve(a)? < ctx.resolve(b)?),
        Formula::Rel(name, args) => {
            let rel = ctx.rel(name)?;
            if rel.arity != args.len() {
                return Err(Error::Domain(format!(
                    "relation `{name}` has arity {}, used with {} arguments",
                    rel.arity,
                    args.len()
                )));
            }
            let tuple: Vec<usize> = args.iter().map(|a| ctx.resolve(a)).collect::<Result<_>>()?;
            Ok((rel.mask >> rank(&tuple, ctx.n)) & 1 == 1)
        }
        Formula::Not(x) => Ok(!eval_f(ctx, x)?),
        Formula::And(a, b) => Ok(eval_f(ctx, a)? && eval_f(ctx, b)?),
        Formula::Or(a, b) => Ok(eval_f(ctx, a)? || eval_f(ctx, b)?),
        Formula::Implies(a, b) => Ok(!eval_f(ctx, a)? || eval_f(ctx, b)?),
        Formula::ForallV(v, body) => {
            for x in 0..ctx.n {
                ctx.vars.push((v, x));
                let ok = eval_f(ctx, body)?;
                ctx.vars.pop();
                if !ok {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Formula::ExistsV(v, body) => {
            for x in 0..ctx.n {
                ctx.vars.push((v, x));
                let ok = eval_f(ctx, body)?;
                ctx.vars.pop();
                if ok {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Formula::ForallR(name, arity, body) => {
            let scope = match &**body {
                Formula::Implies(ante, _) => Some(&**ante),
                _ => None,
            };
            let candidates = candidate_mask(ctx, name, *arity, scope)?;
            for_masks(candidates, |mask| {
                ctx.rels.push((
                    name,
                    Rel {
                        arity: *arity,
                        mask,
                    },
                ));
                let ok = eval_f(ctx, body)?;
                ctx.rels.pop();
                Ok(if ok { None } else { Some(false) })
            })
            .map(|early| early.unwrap_or(true))
        }
        Formula::ExistsR(name, arity, body) => {
            let candidates = candidate_mask(ctx, name, *arity, Some(body))?;
            for_masks(candidates, |mask| {
                ctx.rels.push((
                    name,
                    Rel {
                        arity: *arity,
                        mask,
                    },
                ));
                let ok = eval_f(ctx, body)?;
                ctx.rels.pop();
                Ok(if ok { Some(true) } else { None })
            })
            .map(|early| early.unwrap_or(false))
        }
    }
}

/// Enumerates all submasks of `mask` (including the empty one), stopping
/// early when the visitor returns Some.
fn for_masks<T>(mask: u128, mut visit: impl FnMut(u128) -> Result<Option<T>>) -> Result<Option<T>> {
    let mut s = mask;
    loop {
        if let Some(out) = visit(s)? {
            return Ok(Some(out));
        }
        if s == 0 {
            return Ok(None);
        }
        s = (s - 1) & mask;
    }
}

/// The enumeration mask for a relation quantifier: all tuples by default,
/// intersected with every syntactic bound found in `scope`.
fn candidate_mask<'a>(
    ctx: &mut Ctx<'a>,
    name: &str,
    arity: usize,
    scope: Option<&'a Formula>,
) -> Result<u128> {
    let space = tuple_space(ctx.n, arity)?;
    let mut mask: u128 = if space == 0 {
        0
    } else {
        (!0u128) >> (128 - space)
    };
    if let Some(scope) = scope {
        for conj in scope.conjuncts() {
            if let Some(psi_mask) = bound_mask(ctx, name, arity, conj, space)? {
                mask &= psi_mask;
            }
        }
    }
    guards::check(guards::RELATION_QUANTIFIER_BITS, mask.count_ones() as u64)?;
    Ok(mask)
}

/// Recognizes `all v1. ... all vk. (R(v1,..,vk) -> psi)` with psi free of R
/// and returns the mask of tuples satisfying psi.
fn bound_mask<'a>(
    ctx: &mut Ctx<'a>,
    name: &str,
    arity: usize,
    conj: &'a Formula,
    space: u32,
) -> Result<Option<u128>> {
    let mut vars = Vec::new();
    let mut cur = conj;
    for _ in 0..arity {
        match cur {
            Formula::ForallV(v, body) => {
                vars.push(v.as_str());
                cur = body;
            }
            _ => return Ok(None),
        }
    }
    let Formula::Implies(ante, psi) = cur else {
        return Ok(None);
    };
    let Formula::Rel(r, args) = &**ante else {
        return Ok(None);
    };
    if r != name || args.len() != arity || psi.mentions_rel(name) {
        return Ok(None);
    }
    let exact_prefix = args
        .iter()
        .zip(&vars)
        .all(|(a, v)| matches!(a, VTerm::Var(av) if av == v));
    if !exact_prefix || vars.len() != vars.iter().collect::<std::collections::BTreeSet<_>>().len() {
        return Ok(None);
    }
    let n = ctx.n;
    let mut mask = 0u128;
    for r in 0..space {
        // decode tuple rank
        let mut tuple = Vec::with_capacity(arity);
        let mut rest = r as usize;
        for _ in 0..arity {
            tuple.push(rest % n);
            rest /= n;
        }
        for (v, &x) in vars.iter().zip(&tuple) {
            ctx.vars.push((v, x));
        }
        let ok = eval_f(ctx, psi)?;
        for _ in 0..arity {
            ctx.vars.pop();
        }
        if ok {
            mask |= 1u128 << r;
        }
    }
    Ok(Some(mask))
}

fn eval_t<'a>(ctx: &mut Ctx<'a>, t: &'a Term) -> Result<MultiPoly> {
    match t {
        Term::Const(c) => Ok(MultiPoly::constant(c.clone())),
        Term::Ind(v) => Ok(MultiPoly::var(v)),
        Term::Add(a, b) => Ok(eval_t(ctx, a)?.add(&eval_t(ctx, b)?)),
        Term::Sub(a, b) => Ok(eval_t(ctx, a)?.sub(&eval_t(ctx, b)?)),
        Term::Mul(a, b) => Ok(eval_t(ctx, a)?.mul(&eval_t(ctx, b)?)),
        Term::Subst {
            var,
            replacement,
            body,
        } => {
            let body = eval_t(ctx, body)?;
            let repl = eval_t(ctx, replacement)?;
            body.substitute(var, &repl)
        }
        Term::SmallSum { vars, guard, body } => {
            comprehend(ctx, vars, guard, body, MultiPoly::zero(), MultiPoly::add)
        }
        Term::SmallProd { vars, guard, body } => {
            comprehend(ctx, vars, guard, body, MultiPoly::one(), MultiPoly::mul)
        }
        Term::BigSum {
            rel,
            arity,
            guard,
            body,
        } => {
            let candidates = candidate_mask(ctx, rel, *arity, Some(guard))?;
            let mut acc = MultiPoly::zero();
            for_masks::<()>(candidates, |mask| {
                ctx.rels.push((
                    rel,
                    Rel {
                        arity: *arity,
                        mask,
                    },
                ));
                let keep = eval_f(ctx, guard)?;
                if keep {
                    let v = eval_t(ctx, body)?;
                    acc = acc.add(&v);
                }
                ctx.rels.pop();
                Ok(None)
            })?;
            Ok(acc)
        }
    }
}

fn comprehend<'a>(
    ctx: &mut Ctx<'a>,
    vars: &'a [String],
    guard: &'a Formula,
    body: &'a Term,
    unit: MultiPoly,
    combine: fn(&MultiPoly, &MultiPoly) -> MultiPoly,
) -> Result<MultiPoly> {
    let k = vars.len();
    let count = (ctx.n as u64)
        .checked_pow(k as u32)
        .ok_or_else(|| Error::Domain("tuple enumeration overflow".into()))?;
    guards::check(guards::TUPLE_ENUMERATION_MAX, count)?;
    let mut acc = unit;
    let mut tuple = vec![0usize; k];
    for idx in 0..count {
        let mut rest = idx;
        for slot in tuple.iter_mut() {
            *slot = (rest % ctx.n as u64) as usize;
            rest /= ctx.n as u64;
        }
        for (v, &x) in vars.iter().zip(&tuple) {
            ctx.vars.push((v, x));
        }
        let keep = eval_f(ctx, guard)?;
        if keep {
            let v = eval_t(ctx, body)?;
            acc = combine(&acc, &v);
        }
        for _ in 0..k {
            ctx.vars.pop();
        }
    }
    Ok(acc)
}

/// Evaluates a formula over the structure (all free symbols must be bound
/// in the environment).
pub fn eval_formula(s: &Structure, f: &Formula) -> Result<bool> {
    let mut ctx = Ctx::from_structure(s)?;
    eval_f(&mut ctx, f)
}

/// Evaluates a polynomial-valued term over the structure.
pub fn eval_term(s: &Structure, t: &Term) -> Result<MultiPoly> {
    let mut ctx = Ctx::from_structure(s)?;
    eval_t(&mut ctx, t)
}
