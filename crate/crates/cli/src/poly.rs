//! Integer-coefficient polynomials in `y`, e.g. `1 + y`, `2*y^2 - (1 - y)^3`.
//!
//! ```text
//! expr  := ['+' | '-'] term (('+' | '-') term)*
//! term  := power ('*' power)*
//! power := atom ['^' uint]
//! atom  := uint | 'y' | '(' expr ')'
//! ```

use symprod_core::coeffs::{int, YPolynomial};

const MAX_EXPONENT: u32 = 4096;

pub fn parse_poly(text: &str) -> Result<YPolynomial, String> {
    let mut p = Parser {
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if p.chars.is_empty() {
        return Err("empty polynomial".into());
    }
    let value = p.expr()?;
    match p.peek() {
        None => Ok(value),
        Some(c) => Err(format!("unexpected '{c}' at position {}", p.pos)),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<YPolynomial, String> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { &YPolynomial::zero() - &first } else { first };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<YPolynomial, String> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<YPolynomial, String> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let start = self.pos;
        let digits = self.digits();
        let e: u32 = digits
            .parse()
            .map_err(|_| format!("expected an exponent at position {start}"))?;
        if e > MAX_EXPONENT {
            return Err(format!("exponent {e} exceeds {MAX_EXPONENT}"));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<YPolynomial, String> {
        match self.peek() {
            Some('y') => {
                self.pos += 1;
                Ok(YPolynomial::y())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(format!("expected ')' at position {}", self.pos));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: i64 = digits.parse().map_err(|_| format!("integer `{digits}` is too large"))?;
                Ok(YPolynomial::constant(int(n)))
            }
            Some(c) => Err(format!("unexpected '{c}' at position {}", self.pos)),
            None => Err("unexpected end of input".into()),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}
