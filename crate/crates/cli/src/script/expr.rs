//! Polynomial expressions and `f = g; …` pair lists.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := element-name | 'x' nat | 'x' | '(' expr ')'
//! ```

use semicong::polynomial::{PolyRing, Polynomial};
use semicong::SemiringOps;

use super::cursor::Cursor;
use super::lexer::tokenize;
use crate::error::{CliError, Location, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(String, Location),
    /// 1-based variable index.
    Var(usize, Location),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
}

/// `x<k>`, or plain `x` for `x1`.
pub fn variable_index(w: &str) -> Option<usize> {
    let digits = w.strip_prefix('x')?;
    if digits.is_empty() {
        return Some(1);
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn expr(c: &mut Cursor) -> Result<Expr> {
    let mut terms = vec![term(c)?];
    while c.eat_sym('+') {
        terms.push(term(c)?);
    }
    Ok(if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        Expr::Sum(terms)
    })
}

fn term(c: &mut Cursor) -> Result<Expr> {
    let mut factors = vec![factor(c)?];
    while c.eat_sym('*') {
        factors.push(factor(c)?);
    }
    Ok(if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        Expr::Product(factors)
    })
}

fn factor(c: &mut Cursor) -> Result<Expr> {
    let base = atom(c)?;
    if c.eat_sym('^') {
        let (e, at) = c.number("an exponent")?;
        let e = u32::try_from(e).map_err(|_| CliError::syntax(at, "exponent too large"))?;
        return Ok(Expr::Power(Box::new(base), e));
    }
    Ok(base)
}

fn atom(c: &mut Cursor) -> Result<Expr> {
    if c.eat_sym('(') {
        let e = expr(c)?;
        c.expect_sym(')')?;
        return Ok(e);
    }
    let (w, at) = c.word("a constant, a variable or `(`")?;
    Ok(match variable_index(&w) {
        Some(i) => Expr::Var(i, at),
        None => Expr::Const(w, at),
    })
}

/// Parses `f = g; f = g; …` from the contents of a quoted string whose
/// opening quote sits at `quote`.
pub fn parse_pairs(text: &str, quote: Location) -> Result<Vec<(Expr, Expr)>> {
    let origin = Location {
        line: quote.line,
        col: quote.col + 1,
    };
    let end = Location {
        line: quote.line,
        col: origin.col + text.chars().count(),
    };
    let mut c = Cursor::new(tokenize(text, origin)?, end);
    let mut out = Vec::new();
    while !c.is_done() {
        let f = expr(&mut c)?;
        c.expect_sym('=')?;
        let g = expr(&mut c)?;
        out.push((f, g));
        if !c.eat_sym(';') && !c.is_done() {
            return Err(c.unexpected("`;` or the end of the system"));
        }
    }
    if out.is_empty() {
        return Err(CliError::syntax(
            quote,
            "a system needs at least one pair `f = g`",
        ));
    }
    Ok(out)
}

/// Builds the polynomial of `e` in `num_vars` variables, resolving constants
/// with `constant`.
pub fn build<S: SemiringOps>(
    e: &Expr,
    ring: &S,
    num_vars: usize,
    constant: &dyn Fn(&str, Location) -> Result<S::Elem>,
) -> Result<Polynomial<S::Elem>> {
    let polys = PolyRing::new(ring, num_vars);
    Ok(match e {
        Expr::Const(w, at) => Polynomial::constant(ring, num_vars, constant(w, *at)?),
        Expr::Var(i, at) => {
            if *i == 0 || *i > num_vars {
                return Err(CliError::Arity {
                    at: *at,
                    msg: format!("variable x{i} outside x1..x{num_vars}"),
                });
            }
            Polynomial::variable(ring, num_vars, i - 1).expect("index checked above")
        }
        Expr::Sum(terms) => {
            let mut acc = polys.zero();
            for t in terms {
                acc = polys.add(&acc, &build(t, ring, num_vars, constant)?);
            }
            acc
        }
        Expr::Product(factors) => {
            let mut acc = polys.one();
            for f in factors {
                acc = polys.mul(&acc, &build(f, ring, num_vars, constant)?);
            }
            acc
        }
        Expr::Power(base, k) => polys.pow(&build(base, ring, num_vars, constant)?, *k),
    })
}
