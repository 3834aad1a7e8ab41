//! Lexer and recursive-descent parser for the term and formula language.
//!
//! Grammar (EBNF):
//! ```text
//! term    = sum ;
//! sum     = product , { ("+" | "-") , product } ;
//! product = unary , { "*" , unary } ;
//! unary   = "-" , unary | power ;
//! power   = atom , [ "^" , nat ] ;
//! atom    = rational | ident | "(" , term , ")" | comp | subst ;
//! comp    = ("sum" | "prod") , "{" , ident , {"," , ident} , "|" , formula , "}" , unary
//!         | "bigsum" , "{" , ident , ":" , nat , "|" , formula , "}" , unary ;
//! subst   = "subst" , "{" , ident , ":=" , term , "}" , unary ;
//! rational = nat , [ "/" , nat ] ;
//!
//! formula = impl ;
//! impl    = disj , [ "->" , impl ] ;
//! disj    = conj , { "|" , conj } ;
//! conj    = neg , { "&" , neg } ;
//! neg     = "!" , neg | quant | atomf ;
//! quant   = ("all" | "exists") , ident , [ ":" , nat ] , "." , formula ;
//! atomf   = "true" | "false" | "(" , formula , ")"
//!         | vterm , ("=" | "<") , vterm
//!         | ident , "(" , vterm , { "," , vterm } , ")" ;
//! vterm   = ident | nat ;
//! ```
//! `#` starts a comment running to the end of the line. Quantifier bodies
//! extend as far right as possible. A comprehension body is a single unary
//! term. `E` is the built-in binary adjacency relation.

use super::ast::{Formula, Term, VTerm};
use crate::error::{Error, Result};
use num::{BigInt, BigRational};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Nat(u64),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Pipe,
    Comma,
    Dot,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Amp,
    Arrow,
    Bang,
    Lt,
    Eq,
    Colon,
    ColonEq,
    Kw(&'static str),
}

const KEYWORDS: [&str; 8] = [
    "all", "exists", "sum", "prod", "bigsum", "subst", "true", "false",
];

struct Lexer {
    toks: Vec<(Tok, usize, usize)>, // token, line, column (1-based)
    end: (usize, usize),            // position just past the input
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, co) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            '#' => {
                while let Some(&c2) = chars.peek() {
                    bump(&mut chars);
                    if c2 == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                bump(&mut chars);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_alphanumeric() || c2 == '_' {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                let tok = match KEYWORDS.iter().find(|k| **k == s) {
                    Some(k) => Tok::Kw(k),
                    None => Tok::Ident(s),
                };
                toks.push((tok, l, co));
            }
            c if c.is_ascii_digit() => {
                let mut v: u64 = 0;
                while let Some(&c2) = chars.peek() {
                    if let Some(d) = c2.to_digit(10) {
                        bump(&mut chars);
                        v = v
                            .checked_mul(10)
                            .and_then(|x| x.checked_add(d as u64))
                            .ok_or_else(|| Error::Parse(format!("number too large at {l}:{co}")))?;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Nat(v), l, co));
            }
            _ => {
                let c = bump(&mut chars);
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '|' => Tok::Pipe,
                    ',' => Tok::Comma,
                    '.' => Tok::Dot,
                    '+' => Tok::Plus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '/' => Tok::Slash,
                    '&' => Tok::Amp,
                    '!' => Tok::Bang,
                    '<' => Tok::Lt,
                    '=' => Tok::Eq,
                    '-' => {
                        if chars.peek() == Some(&'>') {
                            bump(&mut chars);
                            Tok::Arrow
                        } else {
                            Tok::Minus
                        }
                    }
                    ':' => {
                        if chars.peek() == Some(&'=') {
                            bump(&mut chars);
                            Tok::ColonEq
                        } else {
                            Tok::Colon
                        }
                    }
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character `{other}` at {l}:{co}"
                        )))
                    }
                };
                toks.push((tok, l, co));
            }
        }
    }
    Ok(Lexer {
        toks,
        end: (line, col),
        pos: 0,
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn loc(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(&(_, l, c)) => (l, c),
            None => self.end,
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let (l, c) = self.loc();
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::Parse(format!(
                "syntax error at {l}:{c}: expected {what}, found {t:?}"
            ))),
            None => Err(Error::Parse(format!(
                "syntax error at {l}:{c}: expected {what}, found end of input"
            ))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        let (l, c) = self.loc();
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            other => Err(Error::Parse(format!(
                "syntax error at {l}:{c}: expected {what}, found {other:?}"
            ))),
        }
    }

    fn nat(&mut self, what: &str) -> Result<u64> {
        let (l, c) = self.loc();
        match self.next() {
            Some(Tok::Nat(v)) => Ok(v),
            other => Err(Error::Parse(format!(
                "syntax error at {l}:{c}: expected {what}, found {other:?}"
            ))),
        }
    }
}

/// Parses a polynomial-valued term and validates bindings and arities.
pub fn parse_term(text: &str) -> Result<Term> {
    let mut lx = lex(text)?;
    let t = p_term(&mut lx)?;
    if let Some(_tok) = lx.peek() {
        let (l, c) = lx.loc();
        return Err(Error::Parse(format!(
            "syntax error at {l}:{c}: trailing input"
        )));
    }
    validate_term(&t)?;
    Ok(t)
}

/// Parses a formula and validates relation arity consistency.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut lx = lex(text)?;
    let f = p_formula(&mut lx)?;
    if lx.peek().is_some() {
        let (l, c) = lx.loc();
        return Err(Error::Parse(format!(
            "syntax error at {l}:{c}: trailing input"
        )));
    }
    let mut arities = BTreeMap::new();
    validate_formula(&f, &mut Vec::new(), &mut Vec::new(), &mut arities)?;
    Ok(f)
}

fn p_term(lx: &mut Lexer) -> Result<Term> {
    let mut acc = p_product(lx)?;
    loop {
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.next();
                let rhs = p_product(lx)?;
                acc = Term::Add(Box::new(acc), Box::new(rhs));
            }
            Some(Tok::Minus) => {
                lx.next();
                let rhs = p_product(lx)?;
                acc = Term::Sub(Box::new(acc), Box::new(rhs));
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn p_product(lx: &mut Lexer) -> Result<Term> {
    let mut acc = p_unary(lx)?;
    while lx.peek() == Some(&Tok::Star) {
        lx.next();
        let rhs = p_unary(lx)?;
        acc = Term::Mul(Box::new(acc), Box::new(rhs));
    }
    Ok(acc)
}

fn p_unary(lx: &mut Lexer) -> Result<Term> {
    if lx.peek() == Some(&Tok::Minus) {
        lx.next();
        let inner = p_unary(lx)?;
        return Ok(match inner {
            Term::Const(c) => Term::Const(-c),
            other => Term::Sub(Box::new(Term::constant_zero()), Box::new(other)),
        });
    }
    p_power(lx)
}

fn p_power(lx: &mut Lexer) -> Result<Term> {
    let base = p_atom(lx)?;
    if lx.peek() == Some(&Tok::Caret) {
        lx.next();
        let e = lx.nat("exponent")?;
        // desugar to repeated multiplication
        let mut acc = Term::Const(BigRational::from_integer(1.into()));
        for _ in 0..e {
            acc = match acc {
                Term::Const(ref c) if c == &BigRational::from_integer(1.into()) => base.clone(),
                other => Term::Mul(Box::new(other), Box::new(base.clone())),
            };
        }
        return Ok(acc);
    }
    Ok(base)
}

fn p_atom(lx: &mut Lexer) -> Result<Term> {
    let (l, c) = lx.loc();
    match lx.peek() {
        Some(Tok::Nat(_)) => {
            let num = lx.nat("number")?;
            if lx.peek() == Some(&Tok::Slash) {
                lx.next();
                let den = lx.nat("denominator")?;
                if den == 0 {
                    return Err(Error::Parse(format!("zero denominator at {l}:{c}")));
                }
                return Ok(Term::Const(BigRational::new(
                    BigInt::from(num),
                    BigInt::from(den),
                )));
            }
            Ok(Term::Const(BigRational::from_integer(BigInt::from(num))))
        }
        Some(Tok::Ident(_)) => {
            let name = lx.ident("indeterminate")?;
            Ok(Term::Ind(name))
        }
        Some(Tok::LParen) => {
            lx.next();
            let t = p_term(lx)?;
            lx.expect(Tok::RParen, "`)`")?;
            Ok(t)
        }
        Some(Tok::Kw(k @ ("sum" | "prod"))) => {
            let small_sum = *k == "sum";
            lx.next();
            lx.expect(Tok::LBrace, "`{`")?;
            let mut vars = vec![lx.ident("variable")?];
            while lx.peek() == Some(&Tok::Comma) {
                lx.next();
                vars.push(lx.ident("variable")?);
            }
            lx.expect(Tok::Pipe, "`|`")?;
            let guard = p_formula(lx)?;
            lx.expect(Tok::RBrace, "`}`")?;
            let body = Box::new(p_unary(lx)?);
            Ok(if small_sum {
                Term::SmallSum { vars, guard, body }
            } else {
                Term::SmallProd { vars, guard, body }
            })
        }
        Some(Tok::Kw("bigsum")) => {
            lx.next();
            lx.expect(Tok::LBrace, "`{`")?;
            let rel = lx.ident("relation variable")?;
            lx.expect(Tok::Colon, "`:`")?;
            let arity = lx.nat("arity")? as usize;
            if arity == 0 {
                return Err(Error::Parse(format!("zero arity at {l}:{c}")));
            }
            lx.expect(Tok::Pipe, "`|`")?;
            let guard = p_formula(lx)?;
            lx.expect(Tok::RBrace, "`}`")?;
            let body = Box::new(p_unary(lx)?);
            Ok(Term::BigSum {
                rel,
                arity,
                guard,
                body,
            })
        }
        Some(Tok::Kw("subst")) => {
            lx.next();
            lx.expect(Tok::LBrace, "`{`")?;
            let var = lx.ident("indeterminate")?;
            lx.expect(Tok::ColonEq, "`:=`")?;
            let replacement = Box::new(p_term(lx)?);
            lx.expect(Tok::RBrace, "`}`")?;
            let body = Box::new(p_unary(lx)?);
            Ok(Term::Subst {
                var,
                replacement,
                body,
            })
        }
        other => Err(Error::Parse(format!(
            "syntax error at {l}:{c}: expected a term, found {other:?}"
        ))),
    }
}

fn p_formula(lx: &mut Lexer) -> Result<Formula> {
    let lhs = p_disj(lx)?;
    if lx.peek() == Some(&Tok::Arrow) {
        lx.next();
        let rhs = p_formula(lx)?;
        return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
    }
    Ok(lhs)
}

fn p_disj(lx: &mut Lexer) -> Result<Formula> {
    let mut acc = p_conj(lx)?;
    while lx.peek() == Some(&Tok::Pipe) {
        // a pipe that closes a comprehension never reaches here: the guard
        // formula is parsed after that pipe was consumed
        lx.next();
        let rhs = p_conj(lx)?;
        acc = Formula::Or(Box::new(acc), Box::new(rhs));
    }
    Ok(acc)
}

fn p_conj(lx: &mut Lexer) -> Result<Formula> {
    let mut acc = p_neg(lx)?;
    while lx.peek() == Some(&Tok::Amp) {
        lx.next();
        let rhs = p_neg(lx)?;
        acc = Formula::And(Box::new(acc), Box::new(rhs));
    }
    Ok(acc)
}

fn p_neg(lx: &mut Lexer) -> Result<Formula> {
    match lx.peek() {
        Some(Tok::Bang) => {
            lx.next();
            let inner = p_neg(lx)?;
            Ok(Formula::Not(Box::new(inner)))
        }
        Some(Tok::Kw(k @ ("all" | "exists"))) => {
            let forall = *k == "all";
            lx.next();
            let name = lx.ident("variable")?;
            if lx.peek() == Some(&Tok::Colon) {
                lx.next();
                let arity = lx.nat("arity")? as usize;
                lx.expect(Tok::Dot, "`.`")?;
                let body = Box::new(p_formula(lx)?);
                Ok(if forall {
                    Formula::ForallR(name, arity, body)
                } else {
                    Formula::ExistsR(name, arity, body)
                })
            } else {
                lx.expect(Tok::Dot, "`.`")?;
                let body = Box::new(p_formula(lx)?);
                Ok(if forall {
                    Formula::ForallV(name, body)
                } else {
                    Formula::ExistsV(name, body)
                })
            }
        }
        _ => p_atomf(lx),
    }
}

fn p_vterm(lx: &mut Lexer) -> Result<VTerm> {
    let (l, c) = lx.loc();
    match lx.next() {
        Some(Tok::Ident(v)) => Ok(VTerm::Var(v)),
        Some(Tok::Nat(k)) => Ok(VTerm::Const(k as usize)),
        other => Err(Error::Parse(format!(
            "syntax error at {l}:{c}: expected a vertex term, found {other:?}"
        ))),
    }
}

fn p_atomf(lx: &mut Lexer) -> Result<Formula> {
    let (l, c) = lx.loc();
    match lx.peek() {
        Some(Tok::Kw("true")) => {
            lx.next();
            Ok(Formula::True)
        }
        Some(Tok::Kw("false")) => {
            lx.next();
            Ok(Formula::False)
        }
        Some(Tok::LParen) => {
            lx.next();
            let f = p_formula(lx)?;
            lx.expect(Tok::RParen, "`)`")?;
            Ok(f)
        }
        Some(Tok::Ident(_)) => {
            let name = lx.ident("identifier")?;
            if lx.peek() == Some(&Tok::LParen) {
                lx.next();
                let mut args = vec![p_vterm(lx)?];
                while lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                    args.push(p_vterm(lx)?);
                }
                lx.expect(Tok::RParen, "`)`")?;
                if name == "E" {
                    if args.len() != 2 {
                        return Err(Error::Parse(format!(
                            "adjacency atom takes 2 arguments, got {} at {l}:{c}",
                            args.len()
                        )));
                    }
                    let b = args.pop().unwrap();
                    let a = args.pop().unwrap();
                    return Ok(Formula::Edge(a, b));
                }
                return Ok(Formula::Rel(name, args));
            }
            // bare identifier: must start a comparison
            let lhs = VTerm::Var(name);
            p_comparison(lx, lhs, l, c)
        }
        Some(Tok::Nat(_)) => {
            let k = lx.nat("vertex")? as usize;
            p_comparison(lx, VTerm::Const(k), l, c)
        }
        other => Err(Error::Parse(format!(
            "syntax error at {l}:{c}: expected a formula, found {other:?}"
        ))),
    }
}

fn p_comparison(lx: &mut Lexer, lhs: VTerm, l: usize, c: usize) -> Result<Formula> {
    match lx.next() {
        Some(Tok::Eq) => {
            let rhs = p_vterm(lx)?;
            Ok(Formula::Eq(lhs, rhs))
        }
        Some(Tok::Lt) => {
            let rhs = p_vterm(lx)?;
            Ok(Formula::Lt(lhs, rhs))
        }
        other => Err(Error::Parse(format!(
            "syntax error at {l}:{c}: expected `=` or `<` after vertex term, found {other:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// static validation: binding and arity consistency
// ---------------------------------------------------------------------------

fn validate_term(t: &Term) -> Result<()> {
    let mut arities = BTreeMap::new();
    fn walk(
        t: &Term,
        vars: &mut Vec<String>,
        rels: &mut Vec<(String, usize)>,
        arities: &mut BTreeMap<String, usize>,
    ) -> Result<()> {
        match t {
            Term::Const(_) | Term::Ind(_) => Ok(()),
            Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) => {
                walk(a, vars, rels, arities)?;
                walk(b, vars, rels, arities)
            }
            Term::Subst {
                replacement, body, ..
            } => {
                walk(replacement, vars, rels, arities)?;
                walk(body, vars, rels, arities)
            }
            Term::SmallSum {
                vars: vs,
                guard,
                body,
            }
            | Term::SmallProd {
                vars: vs,
                guard,
                body,
            } => {
                for v in vs {
                    vars.push(v.clone());
                }
                validate_formula(guard, vars, rels, arities)?;
                walk(body, vars, rels, arities)?;
                for _ in vs {
                    vars.pop();
                }
                Ok(())
            }
            Term::BigSum {
                rel,
                arity,
                guard,
                body,
            } => {
                rels.push((rel.clone(), *arity));
                validate_formula(guard, vars, rels, arities)?;
                walk(body, vars, rels, arities)?;
                rels.pop();
                Ok(())
            }
        }
    }
    walk(t, &mut Vec::new(), &mut Vec::new(), &mut arities)
}

/// Free individual variables and relations are allowed (they become
/// structure parameters) but arities must be consistent.
fn validate_formula(
    f: &Formula,
    vars: &mut Vec<String>,
    rels: &mut Vec<(String, usize)>,
    free_arities: &mut BTreeMap<String, usize>,
) -> Result<()> {
    match f {
        Formula::True | Formula::False | Formula::Eq(..) | Formula::Lt(..) | Formula::Edge(..) => {
            Ok(())
        }
        Formula::Rel(name, args) => {
            let bound = rels.iter().rev().find(|(r, _)| r == name);
            match bound {
                Some((_, k)) => {
                    if *k != args.len() {
                        return Err(Error::Parse(format!(
                            "relation `{name}` has arity {k}, used with {} arguments",
                            args.len()
                        )));
                    }
                }
                None => {
                    let k = free_arities.entry(name.clone()).or_insert(args.len());
                    if *k != args.len() {
                        return Err(Error::Parse(format!(
                            "relation `{name}` used with inconsistent arities {k} and {}",
                            args.len()
                        )));
                    }
                }
            }
            Ok(())
        }
        Formula::Not(x) => validate_formula(x, vars, rels, free_arities),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            validate_formula(a, vars, rels, free_arities)?;
            validate_formula(b, vars, rels, free_arities)
        }
        Formula::ForallV(v, x) | Formula::ExistsV(v, x) => {
            vars.push(v.clone());
            validate_formula(x, vars, rels, free_arities)?;
            vars.pop();
            Ok(())
        }
        Formula::ForallR(r, k, x) | Formula::ExistsR(r, k, x) => {
            rels.push((r.clone(), *k));
            validate_formula(x, vars, rels, free_arities)?;
            rels.pop();
            Ok(())
        }
    }
}
