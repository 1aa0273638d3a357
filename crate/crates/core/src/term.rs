//! Terms, equations, and quasi-equations over `{⊕, ⊙, ∨, ∧, 0, 1}`.
//!
//! The concrete syntax uses `+` for ⊕, `.` for ⊙, `|` for ∨ and `&` for ∧.
//! Binding from loosest to tightest: `|`, `&`, `+`, `.`; all operators are
//! left-associative and parentheses override. Variables are `x0`, `x1`, …;
//! `x`, `y`, `z` are accepted as aliases for `x0`, `x1`, `x2`.

use crate::algebra::{Element, FiniteAlgebra};
use std::fmt;
use thiserror::Error;

/// The four binary connectives of the signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Oplus,
    Odot,
    Join,
    Meet,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Oplus, Op::Odot, Op::Join, Op::Meet];

    pub fn symbol(self) -> char {
        match self {
            Op::Oplus => '+',
            Op::Odot => '.',
            Op::Join => '|',
            Op::Meet => '&',
        }
    }
}

/// A term over variables `x0 … x_{k−1}`, the constants, and the connectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Var(usize),
    App(Op, Box<Term>, Box<Term>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TermError {
    #[error("unbound variable x{0}")]
    UnboundVariable(usize),
    #[error("term parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn oplus(l: Term, r: Term) -> Term {
        Term::App(Op::Oplus, Box::new(l), Box::new(r))
    }

    pub fn odot(l: Term, r: Term) -> Term {
        Term::App(Op::Odot, Box::new(l), Box::new(r))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::App(Op::Join, Box::new(l), Box::new(r))
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::App(Op::Meet, Box::new(l), Box::new(r))
    }

    pub fn app(op: Op, l: Term, r: Term) -> Term {
        Term::App(op, Box::new(l), Box::new(r))
    }

    /// Number of variables: one plus the largest index occurring, 0 if ground.
    pub fn var_count(&self) -> usize {
        match self {
            Term::Zero | Term::One => 0,
            Term::Var(i) => i + 1,
            Term::App(_, l, r) => l.var_count().max(r.var_count()),
        }
    }

    /// Number of operation nodes.
    pub fn op_count(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Var(_) => 0,
            Term::App(_, l, r) => 1 + l.op_count() + r.op_count(),
        }
    }

    pub fn parse(input: &str) -> Result<Term, TermError> {
        let mut p = Parser::new(input);
        let t = p.parse_expr()?;
        p.expect_end()?;
        Ok(t)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Var(i) => write!(f, "x{i}"),
            Term::App(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
        }
    }
}

impl FiniteAlgebra {
    /// Evaluate a term under an assignment: `env[i]` is the value of `x_i`.
    pub fn eval_term(&self, t: &Term, env: &[Element]) -> Result<Element, TermError> {
        match t {
            Term::Zero => Ok(self.zero()),
            Term::One => Ok(self.one()),
            Term::Var(i) => env.get(*i).copied().ok_or(TermError::UnboundVariable(*i)),
            Term::App(op, l, r) => {
                let lv = self.eval_term(l, env)?;
                let rv = self.eval_term(r, env)?;
                Ok(match op {
                    Op::Oplus => self.oplus(lv, rv),
                    Op::Odot => self.odot(lv, rv),
                    Op::Join => self.join(lv, rv),
                    Op::Meet => self.meet(lv, rv),
                })
            }
        }
    }
}

/// An equation between two terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    pub fn var_count(&self) -> usize {
        self.lhs.var_count().max(self.rhs.var_count())
    }

    /// Parse `lhs = rhs`.
    pub fn parse(input: &str) -> Result<Equation, TermError> {
        let mut p = Parser::new(input);
        let eq = p.parse_equation()?;
        p.expect_end()?;
        Ok(eq)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Premises and a conclusion; a plain equation is the case `premises = []`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiEquation {
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
}

impl QuasiEquation {
    pub fn equation(conclusion: Equation) -> Self {
        QuasiEquation {
            premises: Vec::new(),
            conclusion,
        }
    }

    pub fn var_count(&self) -> usize {
        self.premises
            .iter()
            .map(Equation::var_count)
            .chain([self.conclusion.var_count()])
            .max()
            .unwrap_or(0)
    }

    /// Parse `premise, premise, … => lhs = rhs`, or a bare equation.
    pub fn parse(input: &str) -> Result<QuasiEquation, TermError> {
        let (premises_src, conclusion_src) = match input.find("=>") {
            Some(pos) => (Some(&input[..pos]), &input[pos + 2..]),
            None => (None, input),
        };
        let mut premises = Vec::new();
        if let Some(src) = premises_src {
            for part in src.split(',') {
                premises.push(Equation::parse(part)?);
            }
        }
        let conclusion = Equation::parse(conclusion_src)?;
        Ok(QuasiEquation {
            premises,
            conclusion,
        })
    }
}

impl fmt::Display for QuasiEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.premises.is_empty() {
            for (i, p) in self.premises.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, " => ")?;
        }
        write!(f, "{}", self.conclusion)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<(), TermError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
        }
    }

    fn parse_equation(&mut self) -> Result<Equation, TermError> {
        let lhs = self.parse_expr()?;
        if !self.eat(b'=') {
            return self.error("expected '='");
        }
        let rhs = self.parse_expr()?;
        Ok(Equation { lhs, rhs })
    }

    fn parse_expr(&mut self) -> Result<Term, TermError> {
        self.parse_binary(0)
    }

    // Precedence levels, loosest first: | then & then + then .
    fn parse_binary(&mut self, level: usize) -> Result<Term, TermError> {
        const LEVELS: [(u8, Op); 4] = [
            (b'|', Op::Join),
            (b'&', Op::Meet),
            (b'+', Op::Oplus),
            (b'.', Op::Odot),
        ];
        if level == LEVELS.len() {
            return self.parse_atom();
        }
        let (sym, op) = LEVELS[level];
        let mut acc = self.parse_binary(level + 1)?;
        while self.eat(sym) {
            let rhs = self.parse_binary(level + 1)?;
            acc = Term::app(op, acc, rhs);
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<Term, TermError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let t = self.parse_expr()?;
                if !self.eat(b')') {
                    return self.error("expected ')'");
                }
                Ok(t)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Ok(Term::Var(0));
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match digits.parse::<usize>() {
                    Ok(i) => Ok(Term::Var(i)),
                    Err(_) => self.error("variable index out of range"),
                }
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Term::Var(1))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Term::Var(2))
            }
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{boolean2, luk_chain};

    #[test]
    fn parses_with_precedence() {
        // '.' binds tighter than '+', which binds tighter than '&', than '|'.
        let t = Term::parse("x | y & x0 + x1 . x2").unwrap();
        assert_eq!(
            t,
            Term::join(
                Term::var(0),
                Term::meet(
                    Term::var(1),
                    Term::oplus(Term::var(0), Term::odot(Term::var(1), Term::var(2)))
                )
            )
        );
    }

    #[test]
    fn aliases_and_indices_agree() {
        assert_eq!(Term::parse("x").unwrap(), Term::parse("x0").unwrap());
        assert_eq!(Term::parse("y").unwrap(), Term::parse("x1").unwrap());
        assert_eq!(Term::parse("z").unwrap(), Term::parse("x2").unwrap());
    }

    #[test]
    fn display_round_trips() {
        let t = Term::parse("(x + y) . ((x . y) + z)").unwrap();
        assert_eq!(Term::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Term::parse("x +").is_err());
        assert!(Term::parse("(x + y").is_err());
        assert!(Term::parse("x ^ y").is_err());
        assert!(Equation::parse("x + y").is_err());
    }

    #[test]
    fn quasi_equation_syntax() {
        let q = QuasiEquation::parse("x + z = y + z, x . z = y . z => x = y").unwrap();
        assert_eq!(q.premises.len(), 2);
        assert_eq!(q.var_count(), 3);
        let e = QuasiEquation::parse("x | x = x").unwrap();
        assert!(e.premises.is_empty());
    }

    #[test]
    fn one_absorbs_oplus_in_boolean_chain() {
        let a = boolean2();
        let t = Term::parse("x0 + x1").unwrap();
        assert_eq!(a.eval_term(&t, &[1, 0]).unwrap(), a.one());
    }

    #[test]
    fn truncation_on_the_three_element_chain() {
        // In {0, 1/2, 1}: ½ ⊙ ½ = 0 and ½ ⊕ ½ = 1.
        let a = luk_chain(2);
        let h = a.element_index("1/2").unwrap();
        let sq = Term::parse("x0 . x0").unwrap();
        let dbl = Term::parse("x0 + x0").unwrap();
        assert_eq!(a.eval_term(&sq, &[h]).unwrap(), a.zero());
        assert_eq!(a.eval_term(&dbl, &[h]).unwrap(), a.one());
    }

    #[test]
    fn unbound_variable_is_reported() {
        let a = boolean2();
        let t = Term::parse("x0 + x5").unwrap();
        assert_eq!(
            a.eval_term(&t, &[0, 1]).unwrap_err(),
            TermError::UnboundVariable(5)
        );
    }
}
