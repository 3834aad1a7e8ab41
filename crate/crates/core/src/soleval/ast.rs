//! Syntax trees for second-order formulas over graphs and for the
//! polynomial-valued terms built from them.

use num::{BigRational, One, Signed, Zero};
use std::fmt;

/// A first-order vertex term: a variable or a fixed vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VTerm {
    Var(String),
    Const(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    True,
    False,
    /// Adjacency atom E(s, t).
    Edge(VTerm, VTerm),
    Eq(VTerm, VTerm),
    /// Order atom s < t over the fixed numeric vertex order.
    Lt(VTerm, VTerm),
    /// Relation atom R(t1, ..., tk) for a bound or parameter relation.
    Rel(String, Vec<VTerm>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForallV(String, Box<Formula>),
    ExistsV(String, Box<Formula>),
    ForallR(String, usize, Box<Formula>),
    ExistsR(String, usize, Box<Formula>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Term {
    Const(BigRational),
    /// A polynomial indeterminate.
    Ind(String),
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    /// Substitute `replacement` for the indeterminate `var` in `body`.
    Subst {
        var: String,
        replacement: Box<Term>,
        body: Box<Term>,
    },
    /// Sum over tuples of vertices satisfying the guard.
    SmallSum {
        vars: Vec<String>,
        guard: Formula,
        body: Box<Term>,
    },
    SmallProd {
        vars: Vec<String>,
        guard: Formula,
        body: Box<Term>,
    },
    /// Sum over relations of the given arity satisfying the guard.
    BigSum {
        rel: String,
        arity: usize,
        guard: Formula,
        body: Box<Term>,
    },
}

impl fmt::Display for VTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VTerm::Var(v) => write!(f, "{v}"),
            VTerm::Const(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Edge(a, b) => write!(f, "E({a}, {b})"),
            Formula::Eq(a, b) => write!(f, "({a} = {b})"),
            Formula::Lt(a, b) => write!(f, "({a} < {b})"),
            Formula::Rel(r, args) => {
                write!(f, "{r}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            Formula::Not(x) => write!(f, "!{x}"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::ForallV(v, x) => write!(f, "(all {v}. {x})"),
            Formula::ExistsV(v, x) => write!(f, "(exists {v}. {x})"),
            Formula::ForallR(r, k, x) => write!(f, "(all {r}:{k}. {x})"),
            Formula::ExistsR(r, k, x) => write!(f, "(exists {r}:{k}. {x})"),
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_negative() {
        let a = -c.clone();
        if a.denom().is_one() {
            write!(f, "(-{})", a.numer())
        } else {
            write!(f, "(-{}/{})", a.numer(), a.denom())
        }
    } else if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => write_rational(f, c),
            Term::Ind(v) => write!(f, "{v}"),
            Term::Add(a, b) => write!(f, "({a} + {b})"),
            Term::Sub(a, b) => write!(f, "({a} - {b})"),
            Term::Mul(a, b) => write!(f, "({a} * {b})"),
            Term::Subst {
                var,
                replacement,
                body,
            } => write!(f, "subst{{{var} := {replacement}}} {}", Wrapped(body)),
            Term::SmallSum { vars, guard, body } => {
                write!(f, "sum{{{} | {guard}}} {}", vars.join(", "), Wrapped(body))
            }
            Term::SmallProd { vars, guard, body } => {
                write!(f, "prod{{{} | {guard}}} {}", vars.join(", "), Wrapped(body))
            }
            Term::BigSum {
                rel,
                arity,
                guard,
                body,
            } => write!(f, "bigsum{{{rel}:{arity} | {guard}}} {}", Wrapped(body)),
        }
    }
}

/// Comprehension bodies bind a single unary term; wrap anything that would
/// not re-parse as one.
struct Wrapped<'a>(&'a Term);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Term::Const(c) if !c.is_negative() => write_rational(f, c),
            Term::Ind(v) => write!(f, "{v}"),
            t @ (Term::SmallSum { .. }
            | Term::SmallProd { .. }
            | Term::BigSum { .. }
            | Term::Subst { .. }) => write!(f, "{t}"),
            t => write!(f, "({t})"),
        }
    }
}

impl Term {
    /// All free indeterminate names, in first-use order.
    pub fn indeterminates(&self) -> Vec<String> {
        let mut out = Vec::new();
        fn walk(t: &Term, out: &mut Vec<String>) {
            match t {
                Term::Const(_) => {}
                Term::Ind(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Term::Subst {
                    replacement, body, ..
                } => {
                    walk(body, out);
                    walk(replacement, out);
                }
                Term::SmallSum { body, .. }
                | Term::SmallProd { body, .. }
                | Term::BigSum { body, .. } => walk(body, out),
            }
        }
        walk(self, &mut out);
        out
    }

    pub fn constant_zero() -> Term {
        Term::Const(BigRational::zero())
    }
}

impl Formula {
    /// Flattens a top-level conjunction into its conjunct list.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn walk<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::And(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                other => out.push(other),
            }
        }
        walk(self, &mut out);
        out
    }

    /// Whether the relation name occurs anywhere in the formula.
    pub fn mentions_rel(&self, name: &str) -> bool {
        match self {
            Formula::True | Formula::False => false,
            Formula::Edge(..) | Formula::Eq(..) | Formula::Lt(..) => false,
            Formula::Rel(r, _) => r == name,
            Formula::Not(x) => x.mentions_rel(name),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.mentions_rel(name) || b.mentions_rel(name)
            }
            Formula::ForallV(_, x) | Formula::ExistsV(_, x) => x.mentions_rel(name),
            Formula::ForallR(r, _, x) | Formula::ExistsR(r, _, x) => {
                // a rebinding of the same name shadows it
                r != name && x.mentions_rel(name)
            }
        }
    }
}
