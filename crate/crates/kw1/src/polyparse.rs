//! Commutative polynomials written as `x*y^2 - 3*x + 1/2`, for the
//! Frobenius-subring checker.

use kw1_core::field::parse_rational;
use kw1_core::gf::{FiniteField, Gf};
use kw1_core::lie::reduce_rational;
use kw1_core::pbw::SymmetricPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial {text:?} at byte {at}: {message}")]
pub struct PolyParseError {
    pub text: String,
    pub at: usize,
    pub message: String,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    vars: &'a [String],
    field: &'a FiniteField,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError {
            text: self.text.to_string(),
            at: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next().filter(|&c| f(c)) {
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<Gf, PolyParseError> {
        let digits = self.take_while(|c| c.is_ascii_digit() || c == '/').to_string();
        let q = match parse_rational(&digits) {
            Some(q) => q,
            None => return self.err(format!("bad number {digits:?}")),
        };
        match reduce_rational(self.field, &q) {
            Ok(c) => Ok(c),
            Err(e) => self.err(e.to_string()),
        }
    }

    fn factor(&mut self) -> Result<SymmetricPolynomial<Gf>, PolyParseError> {
        let n = self.vars.len();
        let k = self.field;
        let base = match self.peek() {
            Some(c) if c.is_ascii_digit() => SymmetricPolynomial::constant(k, n, self.number()?),
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_').to_string();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => SymmetricPolynomial::generator(k, n, i),
                    None => return self.err(format!("unknown variable {name:?}")),
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                inner
            }
            _ => return self.err("expected a number, variable or '('"),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.take_while(|c| c.is_ascii_digit()).to_string();
            match e.parse::<u32>() {
                Ok(e) => Ok(base.pow(k, e)),
                Err(_) => self.err("expected an exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn product(&mut self) -> Result<SymmetricPolynomial<Gf>, PolyParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(self.field, &self.factor()?);
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<SymmetricPolynomial<Gf>, PolyParseError> {
        let k = self.field;
        let mut acc = SymmetricPolynomial::zero(k, self.vars.len());
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let term = self.product()?;
            acc = if sign < 0 { acc.sub(k, &term) } else { acc.add(k, &term) };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }
}

/// Parse a polynomial in the named variables over `field`.
pub fn parse_polynomial(text: &str, vars: &[String], field: &FiniteField) -> Result<SymmetricPolynomial<Gf>, PolyParseError> {
    let mut p = Parser { text, pos: 0, vars, field };
    let out = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_renders() {
        let k = FiniteField::prime(5).unwrap();
        let vars: Vec<String> = vec!["x".into(), "y".into()];
        let f = parse_polynomial("x*y^2 - 3*x + 1/2", &vars, &k).unwrap();
        assert_eq!(f.render(&k, &vars), "x*y^2 + 2*x + 3");
        let g = parse_polynomial("(x + y)^2", &vars, &k).unwrap();
        assert_eq!(g.render(&k, &vars), "x^2 + 2*x*y + y^2");
        assert!(parse_polynomial("z", &vars, &k).is_err());
        assert!(parse_polynomial("x +", &vars, &k).is_err());
        assert!(parse_polynomial("1/5", &vars, &k).is_err());
        assert_eq!(parse_polynomial("-x", &vars, &k).unwrap().render(&k, &vars), "4*x");
    }
}
