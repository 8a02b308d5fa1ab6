//! Surface syntax for polynomials: integers, variable names, `+ - * ^`,
//! parentheses, and division by nonzero constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::poly::{Poly, PolyCtx};

pub fn parse_poly(ctx: &PolyCtx, vars: &[String], s: &str) -> Result<Poly, AlgebraError> {
    parse_poly_at(ctx, vars, s, 1, 1)
}

/// Parses `s`, reporting errors relative to the given line and starting column.
pub fn parse_poly_at(
    ctx: &PolyCtx,
    vars: &[String],
    s: &str,
    line: usize,
    column: usize,
) -> Result<Poly, AlgebraError> {
    let mut p = Parser {
        ctx,
        vars,
        chars: s.chars().collect(),
        i: 0,
        line,
        column,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.i < p.chars.len() {
        return Err(p.err(format!("unexpected `{}`", p.chars[p.i])));
    }
    Ok(v)
}

struct Parser<'a> {
    ctx: &'a PolyCtx,
    vars: &'a [String],
    chars: Vec<char>,
    i: usize,
    line: usize,
    column: usize,
}

impl Parser<'_> {
    fn err(&self, message: String) -> AlgebraError {
        AlgebraError::Parse {
            line: self.line,
            column: self.column + self.i,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.i < self.chars.len() && self.chars[self.i].is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = self.ctx.add(&acc, &t);
                }
                '-' => {
                    self.i += 1;
                    let t = self.term()?;
                    acc = self.ctx.sub(&acc, &t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.i += 1;
                    let f = self.unary()?;
                    acc = self.ctx.mul(&acc, &f);
                }
                '/' => {
                    self.i += 1;
                    let at = self.i;
                    let f = self.unary()?;
                    let Some(c) = f.constant_value().filter(|c| !c.is_zero()) else {
                        self.i = at;
                        return Err(self.err("division only by nonzero constants".into()));
                    };
                    acc = self.ctx.scale(&acc, &self.ctx.field.inv(&c));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, AlgebraError> {
        match self.peek() {
            Some('-') => {
                self.i += 1;
                let v = self.unary()?;
                Ok(self.ctx.neg(&v))
            }
            Some('+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.i += 1;
            self.skip_ws();
            let start = self.i;
            while self.i < self.chars.len() && self.chars[self.i].is_ascii_digit() {
                self.i += 1;
            }
            if start == self.i {
                return Err(self.err("expected a non-negative integer exponent".into()));
            }
            let e: u32 = self.chars[start..self.i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| self.err("exponent too large".into()))?;
            let mut r = self.ctx.one();
            for _ in 0..e {
                r = self.ctx.mul(&r, &base);
            }
            return Ok(r);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, AlgebraError> {
        match self.peek() {
            None => Err(self.err("unexpected end of input".into())),
            Some('(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`".into()));
                }
                self.i += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.chars.len() && self.chars[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let n: BigInt = self.chars[start..self.i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .expect("digits");
                let q = BigRational::from_integer(n);
                Ok(self.ctx.constant(self.ctx.field.from_rational(&q)?))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.i;
                while self.i < self.chars.len()
                    && (self.chars[self.i].is_alphanumeric() || self.chars[self.i] == '_')
                {
                    self.i += 1;
                }
                let name: String = self.chars[start..self.i].iter().collect();
                match self.vars.iter().position(|v| *v == name) {
                    Some(k) => Ok(self.ctx.var(k)),
                    None => {
                        self.i = start;
                        Err(self.err(format!("unknown variable `{name}`")))
                    }
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::TermOrder;

    fn setup() -> (PolyCtx, Vec<String>) {
        (
            PolyCtx::new(Field::Rational, TermOrder::Grevlex, 2, None),
            vec!["x".into(), "y".into()],
        )
    }

    #[test]
    fn parses_nested_expressions() {
        let (c, v) = setup();
        let p = parse_poly(&c, &v, "(x+y)^2 - 2*x*y").unwrap();
        let q = parse_poly(&c, &v, "x^2 + y^2").unwrap();
        assert_eq!(p, q);
        let r = parse_poly(&c, &v, "-(-x)").unwrap();
        assert_eq!(r, c.var(0));
    }

    #[test]
    fn reports_position_of_errors() {
        let (c, v) = setup();
        match parse_poly(&c, &v, "x + z") {
            Err(AlgebraError::Parse { line, column, .. }) => {
                assert_eq!((line, column), (1, 5));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_poly(&c, &v, "x^").is_err());
        assert!(parse_poly(&c, &v, "(x").is_err());
        assert!(parse_poly(&c, &v, "x/y").is_err());
    }
}
