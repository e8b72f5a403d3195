use std::collections::HashMap;
use std::fmt;

use super::builders::*;
use super::{Grading, JacobiForm};
use crate::error::{Error, Result};
use crate::jacobi::bracket;

/// Theta-block expression tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockExpr {
    Eta,
    Theta(i64),
    Theta32(i64),
    E4,
    E6,
    Delta,
    /// phi(k, m) for (k, m) in {(-2,1), (0,1), (12,1), (10,1)}
    Phi(i64, i64),
    E41,
    Mul(Box<BlockExpr>, Box<BlockExpr>),
    Div(Box<BlockExpr>, Box<BlockExpr>),
    Pow(Box<BlockExpr>, u32),
    Bracket(Box<BlockExpr>, Box<BlockExpr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn perr(col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { col, msg: msg.into() }
}

impl Lexer {
    fn new(src: &str) -> Result<Self> {
        let chars: Vec<char> = src.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let txt: String = chars[start..i].iter().collect();
                let v = txt.parse().map_err(|_| perr(col, "integer too large"))?;
                toks.push((Tok::Int(v), col));
            } else if "()*/^,-".contains(c) {
                toks.push((Tok::Sym(c), col));
                i += 1;
            } else {
                return Err(perr(col, format!("unexpected character `{c}`")));
            }
        }
        toks.push((Tok::End, chars.len() + 1));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.next() {
            (Tok::Sym(s), _) if s == c => Ok(()),
            (t, col) => Err(perr(col, format!("expected `{c}`, found {}", describe(&t)))),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = if *self.peek() == Tok::Sym('-') {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            (Tok::Int(v), col) => {
                let v = i64::try_from(v).map_err(|_| perr(col, "integer too large"))?;
                Ok(if neg { -v } else { v })
            }
            (t, col) => Err(perr(col, format!("expected integer, found {}", describe(&t)))),
        }
    }

    fn posint(&mut self) -> Result<i64> {
        let col = self.col();
        let v = self.int()?;
        if v <= 0 {
            return Err(perr(col, "expected positive integer"));
        }
        Ok(v)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(v) => format!("`{v}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

fn parse_expr(lx: &mut Lexer) -> Result<BlockExpr> {
    let mut lhs = parse_term(lx)?;
    loop {
        match lx.peek() {
            Tok::Sym('*') => {
                lx.next();
                lhs = BlockExpr::Mul(Box::new(lhs), Box::new(parse_term(lx)?));
            }
            Tok::Sym('/') => {
                lx.next();
                lhs = BlockExpr::Div(Box::new(lhs), Box::new(parse_term(lx)?));
            }
            _ => return Ok(lhs),
        }
    }
}

fn parse_term(lx: &mut Lexer) -> Result<BlockExpr> {
    let atom = parse_atom(lx)?;
    if *lx.peek() == Tok::Sym('^') {
        lx.next();
        match lx.next() {
            (Tok::Int(v), col) => {
                let e = u32::try_from(v).map_err(|_| perr(col, "exponent too large"))?;
                return Ok(BlockExpr::Pow(Box::new(atom), e));
            }
            (t, col) => {
                return Err(perr(
                    col,
                    format!("expected nonnegative exponent, found {}", describe(&t)),
                ))
            }
        }
    }
    Ok(atom)
}

fn parse_atom(lx: &mut Lexer) -> Result<BlockExpr> {
    let (tok, col) = lx.next();
    match tok {
        Tok::Sym('(') => {
            let e = parse_expr(lx)?;
            lx.expect(')')?;
            Ok(e)
        }
        Tok::Ident(name) => match name.as_str() {
            "eta" => Ok(BlockExpr::Eta),
            "E4" => Ok(BlockExpr::E4),
            "E6" => Ok(BlockExpr::E6),
            "Delta" => Ok(BlockExpr::Delta),
            "theta" | "theta32" => {
                lx.expect('(')?;
                let a = lx.posint()?;
                lx.expect(')')?;
                Ok(if name == "theta" {
                    BlockExpr::Theta(a)
                } else {
                    BlockExpr::Theta32(a)
                })
            }
            "phi" => {
                lx.expect('(')?;
                let k = lx.int()?;
                lx.expect(',')?;
                let m = lx.posint()?;
                lx.expect(')')?;
                match (k, m) {
                    (-2, 1) | (0, 1) | (12, 1) | (10, 1) => Ok(BlockExpr::Phi(k, m)),
                    _ => Err(Error::UnknownAtom(format!("phi({k},{m})"))),
                }
            }
            "e" => {
                lx.expect('(')?;
                let k = lx.int()?;
                lx.expect(',')?;
                let m = lx.posint()?;
                lx.expect(')')?;
                if (k, m) == (4, 1) {
                    Ok(BlockExpr::E41)
                } else {
                    Err(Error::UnknownAtom(format!("e({k},{m})")))
                }
            }
            "bracket" => {
                lx.expect('(')?;
                let a = parse_expr(lx)?;
                lx.expect(',')?;
                let b = parse_expr(lx)?;
                lx.expect(')')?;
                Ok(BlockExpr::Bracket(Box::new(a), Box::new(b)))
            }
            _ => Err(perr(col, format!("unknown atom `{name}`"))),
        },
        t => Err(perr(col, format!("expected atom, found {}", describe(&t)))),
    }
}

impl BlockExpr {
    pub fn parse(src: &str) -> Result<BlockExpr> {
        let mut lx = Lexer::new(src)?;
        let e = parse_expr(&mut lx)?;
        match lx.next() {
            (Tok::End, _) => Ok(e),
            (t, col) => Err(perr(col, format!("trailing input at {}", describe(&t)))),
        }
    }

    /// Grading computed symbolically, without building any series.
    pub fn grading(&self) -> Result<Grading> {
        let g = |w, i, e, h| Grading {
            weight2: w,
            index2: i,
            eta_exp: e,
            h_exp: h,
        };
        Ok(match self {
            BlockExpr::Eta => g(1, 0, 1, 0),
            BlockExpr::Theta(a) => g(1, a * a, 3, (a % 2) as u8),
            BlockExpr::Theta32(a) => g(1, 3 * a * a, 1, (a % 2) as u8),
            BlockExpr::E4 => g(8, 0, 0, 0),
            BlockExpr::E6 => g(12, 0, 0, 0),
            BlockExpr::Delta => g(24, 0, 0, 0),
            BlockExpr::Phi(k, _) => g(2 * k, 2, 0, 0),
            BlockExpr::E41 => g(8, 2, 0, 0),
            BlockExpr::Mul(a, b) | BlockExpr::Bracket(a, b) => {
                let (x, y) = (a.grading()?, b.grading()?);
                let extra = if matches!(self, BlockExpr::Bracket(..)) { 2 } else { 0 };
                g(
                    x.weight2 + y.weight2 + extra,
                    x.index2 + y.index2,
                    (x.eta_exp + y.eta_exp) % 24,
                    (x.h_exp + y.h_exp) % 2,
                )
            }
            BlockExpr::Div(a, b) => {
                let (x, y) = (a.grading()?, b.grading()?);
                if x.index2 < y.index2 {
                    return Err(Error::IndexUnderflow(format!("{self} has negative index")));
                }
                g(
                    x.weight2 - y.weight2,
                    x.index2 - y.index2,
                    (x.eta_exp + 24 - y.eta_exp) % 24,
                    (x.h_exp + 2 - y.h_exp) % 2,
                )
            }
            BlockExpr::Pow(a, e) => {
                let x = a.grading()?;
                let e = i64::from(*e);
                g(
                    x.weight2 * e,
                    x.index2 * e,
                    ((i64::from(x.eta_exp) * e) % 24) as u8,
                    ((i64::from(x.h_exp) * e) % 2) as u8,
                )
            }
        })
    }

    fn eval_at(&self, p: i64, cache: &mut HashMap<BlockExpr, JacobiForm>) -> Result<JacobiForm> {
        if let Some(f) = cache.get(self) {
            return Ok(f.clone());
        }
        let f = match self {
            BlockExpr::Eta => build_eta(p),
            BlockExpr::Theta(1) => build_theta(p).with_label("theta(1)"),
            BlockExpr::Theta(a) => build_theta_scaled(*a, p),
            BlockExpr::Theta32(1) => build_theta32(p).with_label("theta32(1)"),
            BlockExpr::Theta32(a) => build_theta32_scaled(*a, p),
            BlockExpr::E4 => build_e4(p),
            BlockExpr::E6 => build_e6(p),
            BlockExpr::Delta => build_delta(p),
            BlockExpr::Phi(-2, _) => build_phim21(p),
            BlockExpr::Phi(0, _) => build_phi01(p),
            BlockExpr::Phi(12, _) => build_phi121(p),
            BlockExpr::Phi(10, _) => build_phi101(p),
            BlockExpr::Phi(k, m) => return Err(Error::UnknownAtom(format!("phi({k},{m})"))),
            BlockExpr::E41 => build_e41(p),
            BlockExpr::Mul(a, b) => a.eval_at(p, cache)?.mul(&b.eval_at(p, cache)?),
            BlockExpr::Div(a, b) => a.eval_at(p, cache)?.div(&b.eval_at(p, cache)?)?,
            BlockExpr::Pow(a, e) => a.eval_at(p, cache)?.pow(*e),
            BlockExpr::Bracket(a, b) => bracket(&a.eval_at(p, cache)?, &b.eval_at(p, cache)?),
        };
        let f = f.with_label(self.to_string());
        cache.insert(self.clone(), f.clone());
        Ok(f)
    }

    /// Evaluates to a form known to exactly `prec24`, raising the working
    /// precision until quotients no longer eat into the target.
    pub fn evaluate(&self, prec24: i64) -> Result<JacobiForm> {
        if prec24 <= 0 {
            return Err(Error::InvalidArgument(format!("precision {prec24} must be positive")));
        }
        self.grading()?;
        let mut work = prec24;
        loop {
            let f = self.eval_at(work, &mut HashMap::new())?;
            if f.prec24() >= prec24 {
                return Ok(f.truncate(prec24));
            }
            work += prec24 - f.prec24();
        }
    }
}

impl fmt::Display for BlockExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &BlockExpr| match e {
            BlockExpr::Mul(..) | BlockExpr::Div(..) => format!("({e})"),
            _ => e.to_string(),
        };
        match self {
            BlockExpr::Eta => write!(f, "eta"),
            BlockExpr::Theta(a) => write!(f, "theta({a})"),
            BlockExpr::Theta32(a) => write!(f, "theta32({a})"),
            BlockExpr::E4 => write!(f, "E4"),
            BlockExpr::E6 => write!(f, "E6"),
            BlockExpr::Delta => write!(f, "Delta"),
            BlockExpr::Phi(k, m) => write!(f, "phi({k},{m})"),
            BlockExpr::E41 => write!(f, "e(4,1)"),
            BlockExpr::Mul(a, b) => write!(f, "{a}*{}", wrap(b)),
            BlockExpr::Div(a, b) => write!(f, "{a}/{}", wrap(b)),
            BlockExpr::Pow(a, e) => match **a {
                BlockExpr::Mul(..) | BlockExpr::Div(..) | BlockExpr::Pow(..) => {
                    write!(f, "({a})^{e}")
                }
                _ => write!(f, "{a}^{e}"),
            },
            BlockExpr::Bracket(a, b) => write!(f, "bracket({a},{b})"),
        }
    }
}

/// Parses and evaluates a theta-block expression.
pub fn parse_block(src: &str, prec24: i64) -> Result<JacobiForm> {
    BlockExpr::parse(src)?.evaluate(prec24)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grading(src: &str) -> Grading {
        BlockExpr::parse(src).unwrap().grading().unwrap()
    }

    #[test]
    fn metadata_examples() {
        assert_eq!(
            grading("eta^3*theta(1)^2*theta(2)"),
            Grading {
                weight2: 6,
                index2: 6,
                eta_exp: 12,
                h_exp: 0
            }
        );
        assert_eq!(
            grading("eta*theta(1)"),
            Grading {
                weight2: 2,
                index2: 1,
                eta_exp: 4,
                h_exp: 1
            }
        );
        assert_eq!(
            grading("bracket(theta(1),theta(2))"),
            Grading {
                weight2: 4,
                index2: 5,
                eta_exp: 6,
                h_exp: 1
            }
        );
        assert_eq!(
            grading("eta^6*theta(3)/theta(1)"),
            Grading {
                weight2: 6,
                index2: 8,
                eta_exp: 6,
                h_exp: 0
            }
        );
    }

    #[test]
    fn evaluated_metadata_matches_symbolic() {
        for src in [
            "eta^3*theta(1)^2*theta(2)",
            "eta^2*bracket(theta(1),theta32(1))",
            "phi(12,1)/Delta",
        ] {
            let f = parse_block(src, 72).unwrap();
            assert_eq!(f.grading(), grading(src), "{src}");
            assert_eq!(f.prec24(), 72);
        }
    }

    #[test]
    fn quotients() {
        let f = parse_block("eta^24/eta^24", 96).unwrap();
        assert_eq!(f.series, crate::qseries::QSeries::one().truncate(96));
        let p = parse_block("phi(12,1)/Delta", 96).unwrap();
        assert_eq!(p.series, build_phi01(96).series);
    }

    #[test]
    fn errors() {
        assert!(matches!(BlockExpr::parse("eta*"), Err(Error::Parse { col: 5, .. })));
        assert!(matches!(BlockExpr::parse("zeta"), Err(Error::Parse { col: 1, .. })));
        assert!(matches!(BlockExpr::parse("theta(0)"), Err(Error::Parse { .. })));
        assert!(matches!(BlockExpr::parse("phi(4,1)"), Err(Error::UnknownAtom(_))));
        assert!(matches!(parse_block("eta/theta(1)", 48), Err(Error::IndexUnderflow(_))));
        assert!(matches!(BlockExpr::parse("eta^-1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "eta^3*theta(1)^2*theta(2)",
            "theta(1)*theta(3)*bracket(theta(1),theta(2))",
            "eta^6*theta(3)/theta(1)",
            "(eta*theta(1))^3",
        ] {
            let e = BlockExpr::parse(src).unwrap();
            assert_eq!(BlockExpr::parse(&e.to_string()).unwrap(), e);
        }
    }
}
