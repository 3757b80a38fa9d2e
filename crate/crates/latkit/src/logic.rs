//! A small textual DSL for terms and sentences over the pointed-lattice and
//! residuated-lattice signatures, with exhaustive satisfaction checking and
//! the translation of positive universal axioms into residuated equations.
//!
//! Grammar (ASCII): variables `[a-z][a-z0-9]*` (the bare letter `v` is the
//! join operator), constant `1`, operators `^` meet, `v` join, `*` product,
//! `\` left division, `/` right division; relations `<=` and `=`;
//! disjunction `|`; quasi-equations are `p1 & ... & pk => c`. Precedence:
//! product > divisions > meet > join > relations; binary operators associate
//! to the left.

use crate::bitset::Elem;
use crate::order::PointedLattice;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("signature error at byte {pos}: operation `{op}` is not a lattice operation")]
    Signature { pos: usize, op: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("unbound variable v{0}")]
    UnboundVariable(usize),
    #[error("operation `{0}` is not supported by this algebra")]
    UnsupportedOperation(&'static str),
    #[error("sentence has {0} variables; exhaustive evaluation is capped at {MAX_VARS}")]
    TooManyVariables(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("not a positive universal sentence over the lattice signature: {0}")]
    NotPositiveUniversal(String),
}

/// Exhaustive evaluation cap: assignments grow as `|A|^vars`.
pub const MAX_VARS: usize = 6;

/// Which operations a sentence may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    Lattice,
    Rl,
}

/// A term over variables (canonically numbered by first occurrence in the
/// owning sentence), the unit constant, and the binary operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Unit,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    LDiv(Box<Term>, Box<Term>),
    RDiv(Box<Term>, Box<Term>),
}

impl Term {
    pub fn uses_rl_ops(&self) -> bool {
        match self {
            Term::Var(_) | Term::Unit => false,
            Term::Meet(l, r) | Term::Join(l, r) => l.uses_rl_ops() || r.uses_rl_ops(),
            Term::Mul(..) | Term::LDiv(..) | Term::RDiv(..) => true,
        }
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Unit => None,
            Term::Meet(l, r)
            | Term::Join(l, r)
            | Term::Mul(l, r)
            | Term::LDiv(l, r)
            | Term::RDiv(l, r) => l.max_var().into_iter().chain(r.max_var()).max(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Var(_) | Term::Unit => 4,
            Term::Mul(..) => 3,
            Term::LDiv(..) | Term::RDiv(..) => 2,
            Term::Meet(..) => 1,
            Term::Join(..) => 0,
        }
    }

    /// Minimal-parenthesis rendering with the given variable names.
    pub fn display(&self, names: &[String]) -> String {
        fn go(t: &Term, names: &[String], out: &mut String) {
            let (l, op, r) = match t {
                Term::Var(i) => {
                    out.push_str(names.get(*i).map(String::as_str).unwrap_or("?"));
                    return;
                }
                Term::Unit => {
                    out.push('1');
                    return;
                }
                Term::Meet(l, r) => (l, "^", r),
                Term::Join(l, r) => (l, "v", r),
                Term::Mul(l, r) => (l, "*", r),
                Term::LDiv(l, r) => (l, "\\", r),
                Term::RDiv(l, r) => (l, "/", r),
            };
            let p = t.precedence();
            wrap(l, names, out, l.precedence() < p);
            out.push(' ');
            out.push_str(op);
            out.push(' ');
            wrap(r, names, out, r.precedence() <= p);
        }
        fn wrap(t: &Term, names: &[String], out: &mut String, parens: bool) {
            if parens && !matches!(t, Term::Var(_) | Term::Unit) {
                out.push('(');
                go(t, names, out);
                out.push(')');
            } else {
                go(t, names, out);
            }
        }
        let mut s = String::new();
        go(self, names, &mut s);
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub lhs: Term,
    pub rel: Rel,
    pub rhs: Term,
}

impl Atom {
    fn display(&self, names: &[String]) -> String {
        let rel = match self.rel {
            Rel::Le => "<=",
            Rel::Eq => "=",
        };
        format!(
            "{} {} {}",
            self.lhs.display(names),
            rel,
            self.rhs.display(names)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SentenceKind {
    /// A disjunction of atoms, implicitly universally quantified.
    PositiveUniversal(Vec<Atom>),
    /// Premises (conjoined) entailing a conclusion.
    QuasiEquation { premises: Vec<Atom>, conclusion: Atom },
    /// A single equation.
    Equation(Atom),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sentence {
    pub kind: SentenceKind,
    /// Variable names in first-occurrence order; `Term::Var(i)` refers here.
    pub vars: Vec<String>,
}

impl std::fmt::Display for Sentence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            SentenceKind::PositiveUniversal(atoms) => {
                let parts: Vec<String> = atoms.iter().map(|a| a.display(&self.vars)).collect();
                write!(f, "{}", parts.join(" | "))
            }
            SentenceKind::QuasiEquation {
                premises,
                conclusion,
            } => {
                let parts: Vec<String> = premises.iter().map(|a| a.display(&self.vars)).collect();
                write!(
                    f,
                    "{} => {}",
                    parts.join(" & "),
                    conclusion.display(&self.vars)
                )
            }
            SentenceKind::Equation(a) => write!(f, "{}", a.display(&self.vars)),
        }
    }
}

impl Sentence {
    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn atoms(&self) -> Vec<&Atom> {
        match &self.kind {
            SentenceKind::PositiveUniversal(atoms) => atoms.iter().collect(),
            SentenceKind::QuasiEquation {
                premises,
                conclusion,
            } => premises
                .iter()
                .chain(std::iter::once(conclusion))
                .collect(),
            SentenceKind::Equation(a) => vec![a],
        }
    }

    pub fn uses_rl_ops(&self) -> bool {
        self.atoms()
            .iter()
            .any(|a| a.lhs.uses_rl_ops() || a.rhs.uses_rl_ops())
    }
}

// ------------------------------------------------------------------
// Tokenizer and parser
// ------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    One,
    Meet,
    Join,
    Mul,
    LDiv,
    RDiv,
    Le,
    Eq,
    Implies,
    Bar,
    Amp,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '1' => {
                toks.push((i, Tok::One));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Meet));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Mul));
                i += 1;
            }
            '\\' => {
                toks.push((i, Tok::LDiv));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::RDiv));
                i += 1;
            }
            '|' => {
                toks.push((i, Tok::Bar));
                i += 1;
            }
            '&' => {
                toks.push((i, Tok::Amp));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    toks.push((i, Tok::Le));
                    i += 2;
                } else {
                    return Err(ParseError::Syntax {
                        pos: i,
                        msg: "expected `<=`".into(),
                    });
                }
            }
            '=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((i, Tok::Implies));
                    i += 2;
                } else {
                    toks.push((i, Tok::Eq));
                    i += 1;
                }
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit())
                {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "v" {
                    toks.push((start, Tok::Join));
                } else {
                    toks.push((start, Tok::Ident(word.to_string())));
                }
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    signature: Signature,
    vars: Vec<String>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::Syntax {
                pos: self.here(),
                msg: format!("expected {what}"),
            })
        }
    }

    fn var_id(&mut self, name: &str) -> usize {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            i
        } else {
            self.vars.push(name.to_string());
            self.vars.len() - 1
        }
    }

    fn rl_op(&self, op: &'static str, pos: usize) -> Result<(), ParseError> {
        if self.signature == Signature::Lattice {
            Err(ParseError::Signature {
                pos,
                op: op.to_string(),
            })
        } else {
            Ok(())
        }
    }

    fn atom_term(&mut self) -> Result<Term, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::One) => Ok(Term::Unit),
            Some(Tok::Ident(name)) => Ok(Term::Var(self.var_id(&name))),
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(ParseError::Syntax {
                pos,
                msg: "expected a variable, `1`, or `(`".into(),
            }),
        }
    }

    fn mul_term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom_term()?;
        while self.peek() == Some(&Tok::Mul) {
            let pos = self.here();
            self.rl_op("*", pos)?;
            self.pos += 1;
            let r = self.atom_term()?;
            t = Term::Mul(Box::new(t), Box::new(r));
        }
        Ok(t)
    }

    fn div_term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.mul_term()?;
        loop {
            match self.peek() {
                Some(Tok::LDiv) => {
                    let pos = self.here();
                    self.rl_op("\\", pos)?;
                    self.pos += 1;
                    let r = self.mul_term()?;
                    t = Term::LDiv(Box::new(t), Box::new(r));
                }
                Some(Tok::RDiv) => {
                    let pos = self.here();
                    self.rl_op("/", pos)?;
                    self.pos += 1;
                    let r = self.mul_term()?;
                    t = Term::RDiv(Box::new(t), Box::new(r));
                }
                _ => return Ok(t),
            }
        }
    }

    fn meet_term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.div_term()?;
        while self.peek() == Some(&Tok::Meet) {
            self.pos += 1;
            let r = self.div_term()?;
            t = Term::Meet(Box::new(t), Box::new(r));
        }
        Ok(t)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = self.meet_term()?;
        while self.peek() == Some(&Tok::Join) {
            self.pos += 1;
            let r = self.meet_term()?;
            t = Term::Join(Box::new(t), Box::new(r));
        }
        Ok(t)
    }

    fn rel_atom(&mut self) -> Result<Atom, ParseError> {
        let lhs = self.term()?;
        let rel = match self.bump() {
            Some(Tok::Le) => Rel::Le,
            Some(Tok::Eq) => Rel::Eq,
            _ => {
                return Err(ParseError::Syntax {
                    pos: self.here(),
                    msg: "expected `<=` or `=`".into(),
                })
            }
        };
        let rhs = self.term()?;
        Ok(Atom { lhs, rel, rhs })
    }
}

/// Parses a sentence, canonically numbering variables by first occurrence.
pub fn parse_sentence(text: &str, signature: Signature) -> Result<Sentence, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
        signature,
        vars: Vec::new(),
    };
    let first = p.rel_atom()?;
    let kind = match p.peek() {
        Some(Tok::Bar) => {
            let mut atoms = vec![first];
            while p.peek() == Some(&Tok::Bar) {
                p.pos += 1;
                atoms.push(p.rel_atom()?);
            }
            SentenceKind::PositiveUniversal(atoms)
        }
        Some(Tok::Amp) | Some(Tok::Implies) => {
            let mut premises = vec![first];
            while p.peek() == Some(&Tok::Amp) {
                p.pos += 1;
                premises.push(p.rel_atom()?);
            }
            p.expect(Tok::Implies, "`=>`")?;
            let conclusion = p.rel_atom()?;
            SentenceKind::QuasiEquation {
                premises,
                conclusion,
            }
        }
        None => match first.rel {
            Rel::Eq => SentenceKind::Equation(first),
            Rel::Le => SentenceKind::PositiveUniversal(vec![first]),
        },
        Some(_) => {
            return Err(ParseError::Syntax {
                pos: p.here(),
                msg: "expected `|`, `&`, `=>`, or end of input".into(),
            })
        }
    };
    if p.pos != toks.len() {
        return Err(ParseError::Syntax {
            pos: p.here(),
            msg: "trailing input".into(),
        });
    }
    Ok(Sentence { kind, vars: p.vars })
}

// ------------------------------------------------------------------
// Evaluation
// ------------------------------------------------------------------

/// Table-driven evaluation surface shared by pointed lattices and finite
/// residuated lattices.
pub trait TermAlgebra {
    fn size(&self) -> usize;
    fn unit_elem(&self) -> Elem;
    fn leq_elems(&self, a: Elem, b: Elem) -> bool;
    fn meet_elems(&self, a: Elem, b: Elem) -> Elem;
    fn join_elems(&self, a: Elem, b: Elem) -> Elem;
    fn mul_elems(&self, _a: Elem, _b: Elem) -> Option<Elem> {
        None
    }
    fn ldiv_elems(&self, _a: Elem, _b: Elem) -> Option<Elem> {
        None
    }
    fn rdiv_elems(&self, _a: Elem, _b: Elem) -> Option<Elem> {
        None
    }
}

impl TermAlgebra for PointedLattice {
    fn size(&self) -> usize {
        PointedLattice::size(self)
    }
    fn unit_elem(&self) -> Elem {
        self.unit()
    }
    fn leq_elems(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b)
    }
    fn meet_elems(&self, a: Elem, b: Elem) -> Elem {
        self.meet(a, b)
    }
    fn join_elems(&self, a: Elem, b: Elem) -> Elem {
        self.join(a, b)
    }
}

/// Evaluates a term under an assignment of elements to variable ids.
pub fn eval_term<A: TermAlgebra + ?Sized>(
    alg: &A,
    t: &Term,
    env: &[Elem],
) -> Result<Elem, EvalError> {
    match t {
        Term::Var(i) => env.get(*i).copied().ok_or(EvalError::UnboundVariable(*i)),
        Term::Unit => Ok(alg.unit_elem()),
        Term::Meet(l, r) => Ok(alg.meet_elems(eval_term(alg, l, env)?, eval_term(alg, r, env)?)),
        Term::Join(l, r) => Ok(alg.join_elems(eval_term(alg, l, env)?, eval_term(alg, r, env)?)),
        Term::Mul(l, r) => {
            let (a, b) = (eval_term(alg, l, env)?, eval_term(alg, r, env)?);
            alg.mul_elems(a, b)
                .ok_or(EvalError::UnsupportedOperation("*"))
        }
        Term::LDiv(l, r) => {
            let (a, b) = (eval_term(alg, l, env)?, eval_term(alg, r, env)?);
            alg.ldiv_elems(a, b)
                .ok_or(EvalError::UnsupportedOperation("\\"))
        }
        Term::RDiv(l, r) => {
            let (a, b) = (eval_term(alg, l, env)?, eval_term(alg, r, env)?);
            alg.rdiv_elems(a, b)
                .ok_or(EvalError::UnsupportedOperation("/"))
        }
    }
}

fn atom_holds<A: TermAlgebra + ?Sized>(
    alg: &A,
    atom: &Atom,
    env: &[Elem],
) -> Result<bool, EvalError> {
    let l = eval_term(alg, &atom.lhs, env)?;
    let r = eval_term(alg, &atom.rhs, env)?;
    Ok(match atom.rel {
        Rel::Le => alg.leq_elems(l, r),
        Rel::Eq => l == r,
    })
}

/// Outcome of exhaustive satisfaction checking: either the sentence holds,
/// or a falsifying assignment (indexed like the sentence's variable table).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Holds,
    Fails(Vec<Elem>),
}

impl Evaluation {
    pub fn as_bool(&self) -> bool {
        matches!(self, Evaluation::Holds)
    }
}

/// Checks a sentence over all `|A|^vars` assignments. Quasi-equations fail
/// on an assignment satisfying every premise but not the conclusion;
/// disjunctions fail where every disjunct does.
pub fn holds<A: TermAlgebra + ?Sized>(alg: &A, s: &Sentence) -> Result<Evaluation, EvalError> {
    let vars = s
        .atoms()
        .iter()
        .flat_map(|a| [a.lhs.max_var(), a.rhs.max_var()])
        .flatten()
        .max()
        .map_or(0, |m| m + 1);
    if vars > MAX_VARS {
        return Err(EvalError::TooManyVariables(vars));
    }
    let n = alg.size();
    let mut env = vec![0usize; vars];
    loop {
        let falsified = match &s.kind {
            SentenceKind::PositiveUniversal(atoms) => {
                let mut any = false;
                for a in atoms {
                    if atom_holds(alg, a, &env)? {
                        any = true;
                        break;
                    }
                }
                !any
            }
            SentenceKind::QuasiEquation {
                premises,
                conclusion,
            } => {
                let mut premises_hold = true;
                for p in premises {
                    if !atom_holds(alg, p, &env)? {
                        premises_hold = false;
                        break;
                    }
                }
                premises_hold && !atom_holds(alg, conclusion, &env)?
            }
            SentenceKind::Equation(a) => !atom_holds(alg, a, &env)?,
        };
        if falsified {
            return Ok(Evaluation::Fails(env));
        }
        let mut k = 0;
        loop {
            if k == vars {
                return Ok(Evaluation::Holds);
            }
            env[k] += 1;
            if env[k] < n {
                break;
            }
            env[k] = 0;
            k += 1;
        }
    }
}

// ------------------------------------------------------------------
// The residuated translation of positive universal sentences
// ------------------------------------------------------------------

/// Translates a positive universal lattice sentence `t1 <= u1 | ... | tk <= uk`
/// into the residuated equation `(1 ^ t1\u1) v ... v (1 ^ tk\uk) = 1`.
/// Equation atoms are first split into the two inequality disjuncts, and a
/// division with a literal unit numerator simplifies: `1\u` becomes `u`.
pub fn pre_transform(s: &Sentence) -> Result<Sentence, TransformError> {
    if s.uses_rl_ops() {
        return Err(TransformError::NotPositiveUniversal(
            "sentence uses residuated operations".into(),
        ));
    }
    let atoms: Vec<Atom> = match &s.kind {
        SentenceKind::PositiveUniversal(atoms) => atoms.clone(),
        SentenceKind::Equation(a) => vec![a.clone()],
        SentenceKind::QuasiEquation { .. } => {
            return Err(TransformError::NotPositiveUniversal(
                "quasi-equations have no residuated translation here".into(),
            ))
        }
    };
    let mut inequalities: Vec<(Term, Term)> = Vec::new();
    for a in atoms {
        match a.rel {
            Rel::Le => inequalities.push((a.lhs, a.rhs)),
            Rel::Eq => {
                inequalities.push((a.lhs.clone(), a.rhs.clone()));
                inequalities.push((a.rhs, a.lhs));
            }
        }
    }
    let disjunct = |(t, u): (Term, Term)| -> Term {
        let residual = if t == Term::Unit {
            u
        } else {
            Term::LDiv(Box::new(t), Box::new(u))
        };
        Term::Meet(Box::new(Term::Unit), Box::new(residual))
    };
    let mut it = inequalities.into_iter().map(disjunct);
    let first = it
        .next()
        .ok_or_else(|| TransformError::NotPositiveUniversal("no disjuncts".into()))?;
    let lhs = it.fold(first, |acc, d| Term::Join(Box::new(acc), Box::new(d)));
    Ok(Sentence {
        kind: SentenceKind::Equation(Atom {
            lhs,
            rel: Rel::Eq,
            rhs: Term::Unit,
        }),
        vars: s.vars.clone(),
    })
}

// ------------------------------------------------------------------
// Axiomatized classes of pointed lattices
// ------------------------------------------------------------------

/// A positive universal class given by its axioms.
#[derive(Debug, Clone)]
pub struct KClass {
    pub name: String,
    pub axioms: Vec<Sentence>,
}

impl KClass {
    pub fn new(name: &str, axiom_texts: &[&str]) -> Result<Self, ParseError> {
        let axioms = axiom_texts
            .iter()
            .map(|t| parse_sentence(t, Signature::Lattice))
            .collect::<Result<Vec<_>, _>>()?;
        for a in &axioms {
            if matches!(a.kind, SentenceKind::QuasiEquation { .. }) {
                return Err(ParseError::Syntax {
                    pos: 0,
                    msg: "class axioms must be positive universal".into(),
                });
            }
        }
        Ok(KClass {
            name: name.to_string(),
            axioms,
        })
    }

    /// The built-in running examples: `integral`, `dually_integral`,
    /// `conic`, `linear`, and the axiom-free class `all`.
    pub fn builtin(name: &str) -> Option<KClass> {
        let axioms: &[&str] = match name {
            "integral" => &["x <= 1"],
            "dually_integral" => &["1 <= x"],
            "conic" => &["x <= 1 | 1 <= x"],
            "linear" => &["x <= y | y <= x"],
            "all" => &[],
            _ => return None,
        };
        Some(KClass::new(name, axioms).expect("built-in axioms parse"))
    }

    pub fn contains<A: TermAlgebra + ?Sized>(&self, alg: &A) -> Result<bool, EvalError> {
        for ax in &self.axioms {
            if !holds(alg, ax)?.as_bool() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures::*;

    fn lat(text: &str) -> Sentence {
        parse_sentence(text, Signature::Lattice).unwrap()
    }

    fn rl(text: &str) -> Sentence {
        parse_sentence(text, Signature::Rl).unwrap()
    }

    #[test]
    fn parse_shapes() {
        let s = lat("x <= y | y <= x");
        assert!(matches!(&s.kind, SentenceKind::PositiveUniversal(a) if a.len() == 2));
        assert_eq!(s.vars, vec!["x", "y"]);

        let s = lat("x <= 1 | 1 <= x");
        assert!(matches!(&s.kind, SentenceKind::PositiveUniversal(a) if a.len() == 2));

        let s = lat("x ^ y = y");
        assert!(matches!(&s.kind, SentenceKind::Equation(_)));

        let s = lat("1 ^ x = 1 ^ y & 1 v x = 1 v y => x = y");
        assert!(
            matches!(&s.kind, SentenceKind::QuasiEquation { premises, .. } if premises.len() == 2)
        );
    }

    #[test]
    fn signature_enforcement() {
        assert!(matches!(
            parse_sentence("x * y <= x", Signature::Lattice),
            Err(ParseError::Signature { .. })
        ));
        assert!(parse_sentence("x * y <= x", Signature::Rl).is_ok());
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_sentence("x <= ", Signature::Lattice) {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_sentence("x < y", Signature::Lattice).is_err());
    }

    #[test]
    fn precedence_and_associativity() {
        // product > division > meet > join
        let s = rl("x * y \\ z ^ w v u = 1");
        let printed = s.to_string();
        assert_eq!(printed, "x * y \\ z ^ w v u = 1");
        let reparsed = parse_sentence(&printed, Signature::Rl).unwrap();
        assert_eq!(reparsed, s);
        // explicit grouping round-trips to the same canonical string
        let t = rl("((x * y) \\ z ^ w) v u = 1");
        assert_eq!(t, s);
    }

    #[test]
    fn print_parse_roundtrip_examples() {
        for text in [
            "x <= y | y <= x",
            "x <= 1 | 1 <= x",
            "x ^ y = y",
            "x ^ (y v z) = x ^ y v x ^ z",
            "1 <= x v y => 1 ^ z <= (x ^ z) v (y ^ z)",
        ] {
            let s = lat(text);
            let printed = s.to_string();
            assert_eq!(lat(&printed), s, "round-trip failed for {text}");
        }
    }

    #[test]
    fn eval_examples() {
        let n5 = n5_left_pointed();
        let t = Term::Meet(Box::new(Term::Var(0)), Box::new(Term::Var(1)));
        // x = the unit atom, y = the long side's upper element
        assert_eq!(eval_term(&n5, &t, &[1, 3]).unwrap(), 0);
        assert_eq!(eval_term(&n5, &Term::Unit, &[]).unwrap(), 1);
        assert!(matches!(
            eval_term(&n5, &Term::Var(2), &[0, 0]),
            Err(EvalError::UnboundVariable(2))
        ));
        assert!(matches!(
            eval_term(
                &n5,
                &Term::Mul(Box::new(Term::Unit), Box::new(Term::Unit)),
                &[]
            ),
            Err(EvalError::UnsupportedOperation("*"))
        ));
    }

    #[test]
    fn holds_examples() {
        let linear = lat("x <= y | y <= x");
        assert!(holds(&chain(3, 2), &linear).unwrap().as_bool());

        // the pointed pentagon falsifies the cancellation quasi-equation at
        // the two long-side elements (first witness in enumeration order)
        let quasi = lat("1 ^ x = 1 ^ y & 1 v x = 1 v y => x = y");
        match holds(&n5_left_pointed(), &quasi).unwrap() {
            Evaluation::Fails(env) => assert_eq!(env, vec![3, 2]),
            Evaluation::Holds => panic!("expected failure"),
        }

        // pentagon-unital: up-distributive but the meet-distribution
        // quasi-equation fails at (atom, lower long side, upper long side)
        let alpha = lat("1 <= x1 v x2 => 1 ^ z <= (x1 ^ z) v (x2 ^ z)");
        match holds(&n5_unital(), &alpha).unwrap() {
            Evaluation::Fails(env) => assert_eq!(env, vec![2, 1, 3]),
            Evaluation::Holds => panic!("expected failure"),
        }
    }

    #[test]
    fn too_many_variables() {
        let s = lat("a v b v c v d v e v f v g <= 1");
        assert!(matches!(
            holds(&chain(2, 1), &s),
            Err(EvalError::TooManyVariables(7))
        ));
    }

    #[test]
    fn pre_transform_examples() {
        let linear = lat("x <= y | y <= x");
        let pre = pre_transform(&linear).unwrap();
        assert_eq!(pre.to_string(), "1 ^ x \\ y v 1 ^ y \\ x = 1");

        let conic = lat("x <= 1 | 1 <= x");
        let pre = pre_transform(&conic).unwrap();
        assert_eq!(pre.to_string(), "1 ^ x \\ 1 v 1 ^ x = 1");

        let refl = lat("x <= x");
        let pre = pre_transform(&refl).unwrap();
        assert_eq!(pre.to_string(), "1 ^ x \\ x = 1");

        // equations split into both inequalities
        let eq = lat("x ^ y = y");
        let pre = pre_transform(&eq).unwrap();
        assert_eq!(pre.to_string(), "1 ^ (x ^ y) \\ y v 1 ^ y \\ (x ^ y) = 1");

        let quasi = lat("x <= y => y <= x");
        assert!(pre_transform(&quasi).is_err());
    }

    #[test]
    fn builtin_classes() {
        let integral = KClass::builtin("integral").unwrap();
        assert!(integral.contains(&chain(3, 2)).unwrap());
        assert!(!integral.contains(&chain(3, 1)).unwrap());
        let conic = KClass::builtin("conic").unwrap();
        assert!(conic.contains(&chain(3, 1)).unwrap());
        assert!(!conic.contains(&n5_left_pointed()).unwrap());
        assert!(KClass::builtin("all")
            .unwrap()
            .contains(&m3_unital())
            .unwrap());
        assert!(KClass::builtin("nope").is_none());
    }
}
