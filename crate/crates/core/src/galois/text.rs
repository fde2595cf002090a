//! Text syntax for polynomials, e.g. `x^21+a*x^20+a^2*x^15+1`.
//!
//! Terms are joined by `+`. A coefficient is an integer in the element
//! encoding, `a` (the primitive element) or `a^k`; a monomial is `x` or
//! `x^k`. Whitespace is ignored and repeated degrees are summed.

use std::fmt;

use super::field::{Elem, Field};
use super::poly::{Poly, PolyError};

/// Formats an element: integers for prime fields, powers of `a` otherwise.
pub fn format_elem(field: &Field, x: Elem) -> String {
    if field.is_prime_field() || x.value() <= 1 {
        return x.value().to_string();
    }
    match field.log(x) {
        Some(1) => "a".to_string(),
        Some(k) => format!("a^{k}"),
        None => "0".to_string(),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let mut first = true;
        for (k, &c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let coeff = format_elem(field, c);
            match (k, c == Elem::ONE) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coeff}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{coeff}*x^{k}")?,
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// 1-based column of the current character.
    fn column(&self) -> usize {
        match self.chars.get(self.pos) {
            Some(&(byte, _)) => self.text[..byte].chars().count() + 1,
            None => self.text.chars().count() + 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse { column: self.column(), message: message.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<u64, PolyError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.error("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(value)
    }
}

impl Poly {
    /// Parses the polynomial text syntax over `field`.
    pub fn parse(field: &Field, text: &str) -> Result<Poly, PolyError> {
        let mut cur = Cursor { chars: text.char_indices().collect(), pos: 0, text };
        let mut coeffs: Vec<Elem> = Vec::new();
        loop {
            let (coeff, degree) = parse_term(field, &mut cur)?;
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, Elem::ZERO);
            }
            coeffs[degree] = field.add(coeffs[degree], coeff);
            match cur.peek() {
                None => break,
                Some('+') => cur.pos += 1,
                Some(c) => return Err(cur.error(format!("unexpected '{c}'"))),
            }
        }
        Ok(Poly::new(field, coeffs))
    }
}

fn parse_term(field: &Field, cur: &mut Cursor) -> Result<(Elem, usize), PolyError> {
    let coeff = match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let column = cur.column();
            let v = cur.integer()?;
            if v >= field.order() as u64 {
                return Err(PolyError::Parse {
                    column,
                    message: format!("{v} is not an element of {field}"),
                });
            }
            Some(Elem(v as u16))
        }
        Some('a') => {
            cur.pos += 1;
            if cur.eat('^') {
                Some(field.exp(cur.integer()?))
            } else {
                Some(field.primitive())
            }
        }
        Some('x') => None,
        Some(c) => return Err(cur.error(format!("unexpected '{c}'"))),
        None => return Err(cur.error("expected a term")),
    };
    let starred = coeff.is_some() && cur.eat('*');
    let degree = if cur.peek() == Some('x') {
        cur.pos += 1;
        if cur.eat('^') {
            let column = cur.column();
            let k = cur.integer()?;
            usize::try_from(k)
                .ok()
                .filter(|&k| k <= 1 << 20)
                .ok_or(PolyError::Parse { column, message: "exponent too large".into() })?
        } else {
            1
        }
    } else if starred {
        return Err(cur.error("expected 'x' after '*'"));
    } else {
        0
    };
    Ok((coeff.unwrap_or(Elem::ONE), degree))
}
